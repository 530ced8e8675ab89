#include "orbitlab/analysis/genericity.hpp"

#include "orbitlab/arith/matrix.hpp"
#include "orbitlab/error.hpp"

namespace orbitlab::analysis {

namespace {

constexpr std::size_t kMonomialCap = 10000;

std::vector<poly::Monomial> checked_monomials(std::size_t nvars, unsigned e) {
    if (e < 1) throw InputError("genericity degree must be at least 1");
    Integer count;
    mpz_bin_uiui(count.get_mpz_t(), nvars - 1 + e, e);
    if (count > kMonomialCap) {
        throw ResourceCapExceeded("binomial(N+e, e) = " + arith::to_string(count) + " exceeds " +
                                  std::to_string(kMonomialCap));
    }
    return poly::monomials_of_degree(nvars, e);
}

template <class Entry>
std::optional<std::pair<std::uint64_t, std::size_t>> modular_rank(std::size_t rows, std::size_t cols, Entry entry) {
    std::size_t best = 0;
    for (auto p : arith::certificate_primes()) {
        std::vector<std::vector<std::uint64_t>> m(rows, std::vector<std::uint64_t>(cols));
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) m[i][j] = entry(i, j, p);
        const std::size_t r = arith::rank_mod_p(std::move(m), p);
        if (r == cols) return std::make_pair(p, r);
        best = std::max(best, r);
    }
    return std::make_pair(std::uint64_t{0}, best);
}

}  // namespace

GenericityResult genericity_test(const std::vector<ProjPoint>& points, unsigned e) {
    if (points.empty()) throw InputError("genericity_test needs at least one point");
    const std::size_t nv = points.front().dimension() + 1;
    for (const auto& p : points) {
        if (p.dimension() + 1 != nv) throw InputError("points of different dimensions");
    }
    const auto monos = checked_monomials(nv, e);
    GenericityResult out;
    out.monomials = monos.size();

    auto entry = [&](std::size_t i, std::size_t j, std::uint64_t p) {
        std::uint64_t v = 1;
        for (std::size_t k = 0; k < nv; ++k) {
            if (monos[j][k] == 0) continue;
            v = arith::mul_mod(v, arith::pow_mod(arith::reduce_mod(points[i][k], p), monos[j][k], p), p);
        }
        return v;
    };
    const auto mod = modular_rank(points.size(), monos.size(), entry);
    if (mod->first != 0) {
        out.rank = mod->second;
        out.certificate_prime = mod->first;
        return out;
    }
    arith::IntMatrix m(points.size(), std::vector<Integer>(monos.size()));
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = 0; j < monos.size(); ++j) {
            Integer v = 1;
            for (std::size_t k = 0; k < nv; ++k) {
                if (monos[j][k] > 0) v *= arith::pow(points[i][k], monos[j][k]);
            }
            m[i][j] = v;
        }
    }
    const auto kernel = arith::nullspace(std::move(m), monos.size());
    for (const auto& v : kernel) {
        std::vector<poly::Term> terms;
        for (std::size_t j = 0; j < monos.size(); ++j) {
            if (v[j] != 0) terms.push_back({monos[j], v[j]});
        }
        out.kernel.push_back(HomogPoly::from_terms(nv, std::move(terms)).canonical());
    }
    out.rank = monos.size() - kernel.size();
    return out;
}

GenericityResult genericity_test_exponents(const Integer& base, const std::vector<std::vector<Integer>>& exponents,
                                           unsigned e) {
    if (exponents.empty()) throw InputError("genericity_test needs at least one point");
    const std::size_t nv = exponents.front().size();
    const auto monos = checked_monomials(nv, e);
    GenericityResult out;
    out.monomials = monos.size();
    auto entry = [&](std::size_t i, std::size_t j, std::uint64_t p) {
        Integer x = 0;
        for (std::size_t k = 0; k < nv; ++k) x += exponents[i][k] * monos[j][k];
        return arith::pow_mod(arith::reduce_mod(base, p), x, p);
    };
    const auto mod = modular_rank(exponents.size(), monos.size(), entry);
    out.rank = mod->second;
    if (mod->first != 0) {
        out.certificate_prime = mod->first;
    } else {
        out.kernel_exact = false;
    }
    return out;
}

}  // namespace orbitlab::analysis

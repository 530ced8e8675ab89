#include "orbitlab/maps/morphism.hpp"

#include <map>

#include "orbitlab/arith/matrix.hpp"
#include "orbitlab/error.hpp"
#include "orbitlab/poly/univariate.hpp"

namespace orbitlab::maps {

using arith::IntMatrix;
using poly::Monomial;
using poly::Term;

std::string to_string(MorphismVerdict v) {
    switch (v) {
        case MorphismVerdict::Verified: return "verified";
        case MorphismVerdict::Refuted: return "refuted";
        case MorphismVerdict::Inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

namespace {

std::vector<Integer> binary_coefficients(const HomogPoly& f, unsigned d) {
    // index i holds the coefficient of X^(d-i) Y^i
    std::vector<Integer> c(d + 1, 0);
    for (const auto& t : f.terms()) c[t.exps[1]] = t.coef;
    return c;
}

}  // namespace

Integer binary_resultant(const HomogPoly& f, const HomogPoly& g) {
    if (f.nvars() != 2 || g.nvars() != 2) throw InputError("binary_resultant needs binary forms");
    if (f.is_zero() || g.is_zero()) return 0;
    const unsigned m = f.degree(), n = g.degree();
    if (m + n == 0) return 1;
    const auto a = binary_coefficients(f, m);
    const auto b = binary_coefficients(g, n);
    IntMatrix s(m + n, std::vector<Integer>(m + n, 0));
    for (unsigned r = 0; r < n; ++r)
        for (unsigned i = 0; i <= m; ++i) s[r][r + i] = a[i];
    for (unsigned r = 0; r < m; ++r)
        for (unsigned i = 0; i <= n; ++i) s[n + r][r + i] = b[i];
    return arith::determinant(std::move(s));
}

namespace {

constexpr std::size_t kMacaulayColumnCap = 1500;

struct Outcome {
    MorphismVerdict verdict;
    std::optional<ProjPoint> witness;
    std::string note;
};

// Original point B * t.
ProjPoint lift(const IntMatrix& basis, const std::vector<Integer>& t) {
    std::vector<Integer> x(basis.size(), 0);
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < t.size(); ++j) x[i] += basis[i][j] * t[j];
    return reduce_point(std::move(x));
}

bool splits_over(const HomogPoly& f, const std::vector<HomogPoly>& linear, std::vector<HomogPoly>& factors) {
    auto split = poly::extract_monomial_factor(f);
    factors.clear();
    for (std::size_t i = 0; i < split.exps.size(); ++i) {
        if (split.exps[i] > 0) factors.push_back(HomogPoly::variable(f.nvars(), i));
    }
    HomogPoly rest = split.cofactor;
    for (const auto& l : linear) {
        if (rest.degree() == 0) break;
        if (l.terms().size() == 1) continue;
        bool used = false;
        HomogPoly q;
        while (rest.degree() > 0 && poly::try_divide(rest, l, q)) {
            rest = std::move(q);
            used = true;
        }
        if (used) factors.push_back(l);
    }
    return rest.degree() == 0;
}

// Full rank of the Macaulay matrix in degree D = nv*(d-1)+1 means the ideal
// contains every form of degree D, so there is no common zero.
std::optional<bool> macaulay_full_rank(const std::vector<HomogPoly>& forms, std::string& note) {
    const std::size_t nv = forms.front().nvars();
    const unsigned d = forms.front().degree();
    const unsigned big = static_cast<unsigned>(nv) * (d - 1) + 1;
    const auto cols = poly::monomials_of_degree(nv, big);
    if (cols.size() > kMacaulayColumnCap) {
        note = "Macaulay matrix too large (" + std::to_string(cols.size()) + " columns)";
        return std::nullopt;
    }
    std::map<Monomial, std::size_t> index;
    for (std::size_t i = 0; i < cols.size(); ++i) index[cols[i]] = i;
    const auto shifts = poly::monomials_of_degree(nv, big - d);
    for (auto p : arith::certificate_primes()) {
        std::vector<std::vector<std::uint64_t>> rows;
        for (const auto& f : forms) {
            std::vector<std::pair<Monomial, std::uint64_t>> reduced;
            for (const auto& t : f.terms()) reduced.push_back({t.exps, arith::reduce_mod(t.coef, p)});
            for (const auto& s : shifts) {
                std::vector<std::uint64_t> row(cols.size(), 0);
                for (const auto& [e, c] : reduced) {
                    Monomial m = e;
                    for (std::size_t i = 0; i < nv; ++i) m[i] += s[i];
                    row[index.at(m)] = c;
                }
                rows.push_back(std::move(row));
            }
        }
        if (arith::rank_mod_p(std::move(rows), p) == cols.size()) {
            note = "Macaulay matrix in degree " + std::to_string(big) + " has full rank " +
                   std::to_string(cols.size()) + " mod " + std::to_string(p);
            return true;
        }
    }
    note = "Macaulay matrix rank-deficient modulo every certificate prime";
    return false;
}

Outcome binary_system(const std::vector<HomogPoly>& forms, const IntMatrix& basis) {
    const unsigned d = forms.front().degree();
    bool y_all = true;
    for (const auto& f : forms) y_all &= binary_coefficients(f, d)[0] == 0;
    if (y_all) return {MorphismVerdict::Refuted, lift(basis, {1, 0}), "common zero found on a line"};
    poly::UPoly g;
    for (const auto& f : forms) {
        poly::UPoly u(d + 1, Rational(0));
        for (const auto& t : f.terms()) u[t.exps[0]] = Rational(t.coef);
        poly::trim(u);
        g = g.empty() ? u : poly::ugcd(g, u);
    }
    if (poly::udegree(g) <= 0) return {MorphismVerdict::Verified, std::nullopt, ""};
    for (const auto& r : poly::urational_roots(g)) {
        return {MorphismVerdict::Refuted, lift(basis, {r.get_num(), r.get_den()}), "common rational zero"};
    }
    return {MorphismVerdict::Refuted, std::nullopt,
            "restrictions share a factor of degree " + std::to_string(poly::udegree(g)) + " without rational roots"};
}

Outcome check_system(std::vector<HomogPoly> forms, const std::vector<HomogPoly>& pool, const IntMatrix& basis,
                     int depth) {
    const std::size_t nv = basis.front().size();
    std::erase_if(forms, [](const HomogPoly& f) { return f.is_zero(); });
    if (forms.empty()) {
        std::vector<Integer> t(nv, 0);
        t[0] = 1;
        return {MorphismVerdict::Refuted, lift(basis, t), "all coordinates vanish on a linear subspace"};
    }
    if (forms.front().degree() == 0) return {MorphismVerdict::Verified, std::nullopt, ""};
    if (nv == 1) return {MorphismVerdict::Verified, std::nullopt, ""};

    // A coordinate that is a product of known hyperplanes confines the common zeros to them.
    std::optional<std::vector<HomogPoly>> best;
    for (const auto& f : forms) {
        std::vector<HomogPoly> factors;
        if (splits_over(f, pool, factors) && (!best || factors.size() < best->size())) best = factors;
    }
    if (best) {
        Outcome agg{MorphismVerdict::Verified, std::nullopt, ""};
        for (const auto& l : *best) {
            const auto kernel = arith::nullspace({l.linear_coefficients()}, nv);
            // X = K t on the hyperplane l = 0
            std::vector<HomogPoly> subst;
            for (std::size_t i = 0; i < nv; ++i) {
                std::vector<Integer> row;
                for (const auto& v : kernel) row.push_back(v[i]);
                subst.push_back(HomogPoly::linear(row));
            }
            std::vector<HomogPoly> restricted;
            for (const auto& f : forms) restricted.push_back(poly::compose(f, subst));
            FactorPool sub(nv - 2);
            for (const auto& m : pool) {
                auto r = poly::compose(m, subst);
                if (!r.is_zero()) sub.add(r);
            }
            IntMatrix next(basis.size(), std::vector<Integer>(nv - 1, 0));
            for (std::size_t i = 0; i < basis.size(); ++i)
                for (std::size_t j = 0; j < nv - 1; ++j)
                    for (std::size_t k = 0; k < nv; ++k) next[i][j] += basis[i][k] * kernel[j][k];
            Outcome o = check_system(std::move(restricted), sub.linear(), next, depth + 1);
            if (o.verdict == MorphismVerdict::Refuted) return o;
            if (o.verdict == MorphismVerdict::Inconclusive) agg = o;
        }
        if (agg.verdict == MorphismVerdict::Verified && depth == 0) {
            agg.note = "common zeros confined to hyperplanes of a split coordinate; each restriction is zero-free";
        }
        return agg;
    }
    if (nv == 2) return binary_system(forms, basis);
    std::string note;
    const auto full = macaulay_full_rank(forms, note);
    if (full && *full) return {MorphismVerdict::Verified, std::nullopt, note};
    return {MorphismVerdict::Inconclusive, std::nullopt, note};
}

bool vanishes_at(const SelfMap& f, const std::vector<Integer>& x) {
    for (const auto& c : f.coords()) {
        if (!c.is_zero() && c.evaluate(x) != 0) return false;
    }
    return true;
}

std::optional<ProjPoint> witness_search(const SelfMap& f, const std::vector<ProjPoint>& candidates) {
    for (const auto& p : candidates) {
        if (p.dimension() != f.dimension()) throw InputError("candidate point has the wrong dimension");
        if (vanishes_at(f, p.coords())) return p;
    }
    const auto& hyper = f.pool().linear();
    const std::size_t n = f.dimension();
    if (hyper.size() < n) return std::nullopt;
    std::vector<std::size_t> pick(n);
    for (std::size_t i = 0; i < n; ++i) pick[i] = i;
    for (;;) {
        IntMatrix m;
        for (auto i : pick) m.push_back(hyper[i].linear_coefficients());
        const auto kernel = arith::nullspace(m, n + 1);
        if (kernel.size() == 1 && vanishes_at(f, kernel[0])) return reduce_point(kernel[0]);
        std::size_t i = n;
        while (i-- > 0) {
            if (pick[i] != i + hyper.size() - n) break;
            if (i == 0) return std::nullopt;
        }
        if (pick[i] == i + hyper.size() - n) return std::nullopt;
        ++pick[i];
        for (std::size_t j = i + 1; j < n; ++j) pick[j] = pick[j - 1] + 1;
    }
}

}  // namespace

MorphismResult morphism_check(const SelfMap& f, const std::vector<ProjPoint>& candidates) {
    MorphismResult out;
    if (auto w = witness_search(f, candidates)) {
        out.verdict = MorphismVerdict::Refuted;
        out.witness = *w;
        out.certificate = "all coordinates vanish at " + w->to_string();
        return out;
    }
    const std::size_t nv = f.dimension() + 1;
    IntMatrix identity(nv, std::vector<Integer>(nv, 0));
    for (std::size_t i = 0; i < nv; ++i) identity[i][i] = 1;
    Outcome o = check_system(f.coords(), f.pool().linear(), identity, 0);
    if (nv == 2 && o.verdict != MorphismVerdict::Inconclusive) {
        const auto r = binary_resultant(f.coords()[0], f.coords()[1]);
        o.note = (o.note.empty() ? "" : o.note + "; ") + "resultant " + arith::to_string(r);
    }
    out.verdict = o.verdict;
    out.witness = o.witness;
    out.certificate = o.note;
    if (out.witness && out.certificate.empty()) out.certificate = "all coordinates vanish at " + out.witness->to_string();
    return out;
}

}  // namespace orbitlab::maps

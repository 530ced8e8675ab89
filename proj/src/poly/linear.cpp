#include "orbitlab/poly/linear.hpp"

#include <functional>

#include "orbitlab/arith/matrix.hpp"
#include "orbitlab/error.hpp"
#include "orbitlab/poly/univariate.hpp"

namespace orbitlab::poly {

void require_distinct_linear(const std::vector<LinearForm>& forms) {
    std::vector<HomogPoly> canon;
    for (const auto& f : forms) {
        if (!f.is_linear()) throw InputError("expected a linear form, got " + f.to_string());
        canon.push_back(f.canonical());
    }
    for (std::size_t i = 0; i < canon.size(); ++i) {
        for (std::size_t j = i + 1; j < canon.size(); ++j) {
            if (canon[i] == canon[j]) {
                throw InputError("proportional linear forms: " + forms[i].to_string() + " and " +
                                 forms[j].to_string());
            }
        }
    }
}

LinearFactorization trial_linear_factors(const HomogPoly& f, const std::vector<LinearForm>& pool) {
    require_distinct_linear(pool);
    LinearFactorization out;
    out.residual = f;
    for (const auto& l : pool) {
        const HomogPoly lp = l.primitive_part();
        unsigned m = 0;
        HomogPoly q;
        while (!out.residual.is_zero() && out.residual.degree() > 0 && try_divide(out.residual, lp, q)) {
            out.residual = std::move(q);
            ++m;
        }
        out.multiplicities.push_back(m);
    }
    return out;
}

ReducedBinaryForm binary_form_reduced_degree(const HomogPoly& f) {
    if (f.nvars() != 2) throw InputError("binary form expected (N = 1)");
    if (f.is_zero()) throw InputError("reduced degree of the zero form");
    const unsigned d = f.degree();
    // Dehomogenize at Y = 1.
    UPoly u(d + 1, Rational(0));
    for (const auto& t : f.terms()) u[t.exps[0]] = Rational(t.coef);
    trim(u);
    const bool y_divides = udegree(u) < static_cast<int>(d);
    std::vector<Integer> s = uprimitive(usquarefree(u));
    const unsigned k = static_cast<unsigned>(s.size() - 1);
    std::vector<Term> terms;
    for (unsigned j = 0; j <= k; ++j) {
        if (s[j] != 0) terms.push_back({Monomial{j, k - j}, s[j]});
    }
    HomogPoly sq = HomogPoly::from_terms(2, std::move(terms));
    if (y_divides) sq = sq * HomogPoly::variable(2, 1);
    return {sq.canonical(), sq.degree()};
}

namespace {

// Advances to the next k-subset of {0..m-1} in lex order; false after the last.
bool next_combination(std::vector<std::size_t>& pick, std::size_t m) {
    const std::size_t k = pick.size();
    for (std::size_t i = k; i-- > 0;) {
        if (pick[i] != i + m - k) {
            ++pick[i];
            for (std::size_t j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
            return true;
        }
    }
    return false;
}

arith::IntMatrix coefficient_matrix(const std::vector<LinearForm>& forms, const std::vector<std::size_t>& pick) {
    arith::IntMatrix m;
    for (auto i : pick) m.push_back(forms[i].linear_coefficients());
    return m;
}

}  // namespace

std::size_t linear_rank(const std::vector<LinearForm>& forms) {
    if (forms.empty()) return 0;
    arith::IntMatrix m;
    for (const auto& f : forms) m.push_back(f.linear_coefficients());
    return arith::rank(m);
}

bool general_position_check(const std::vector<LinearForm>& forms, std::size_t dimension) {
    require_distinct_linear(forms);
    for (const auto& f : forms) {
        if (f.dimension() != dimension) throw InputError("linear form in the wrong dimension");
    }
    const std::size_t m = forms.size();
    const std::size_t k = std::min(m, dimension + 1);
    if (k == 0) return true;
    std::vector<std::size_t> pick(k);
    for (std::size_t i = 0; i < k; ++i) pick[i] = i;
    for (;;) {
        const auto mat = coefficient_matrix(forms, pick);
        const bool ok = (k == dimension + 1) ? arith::determinant(mat) != 0 : arith::rank(mat) == k;
        if (!ok) return false;
        if (!next_combination(pick, m)) return true;
    }
}

std::vector<std::size_t> max_general_position_subset(const std::vector<LinearForm>& forms,
                                                     std::size_t dimension) {
    constexpr std::size_t kCap = 25;
    if (forms.size() > kCap) {
        throw InputError("max_general_position_subset refuses more than 25 forms (got " +
                         std::to_string(forms.size()) + ")");
    }
    require_distinct_linear(forms);
    const std::size_t n = forms.size();
    const std::size_t full = dimension + 1;
    std::vector<std::vector<Integer>> rows;
    for (const auto& f : forms) rows.push_back(f.linear_coefficients());

    // Adding `cand` to a set in general position keeps it so iff either the
    // result has at most N+1 elements and is independent, or every N-subset
    // of the current set together with `cand` is independent.
    auto compatible = [&](const std::vector<std::size_t>& chosen, std::size_t cand) {
        if (chosen.size() + 1 <= full) {
            arith::IntMatrix mat;
            for (auto i : chosen) mat.push_back(rows[i]);
            mat.push_back(rows[cand]);
            return arith::rank(mat) == chosen.size() + 1;
        }
        const std::size_t k = full - 1;
        std::vector<std::size_t> pick(k);
        for (std::size_t i = 0; i < k; ++i) pick[i] = i;
        const std::size_t m = chosen.size();
        for (;;) {
            arith::IntMatrix mat;
            for (auto i : pick) mat.push_back(rows[chosen[i]]);
            mat.push_back(rows[cand]);
            if (arith::determinant(mat) == 0) return false;
            if (!next_combination(pick, m)) return true;
        }
    };

    std::vector<std::size_t> best, current;
    std::function<void(std::size_t)> dfs = [&](std::size_t next) {
        if (current.size() > best.size()) best = current;
        if (next == n || current.size() + (n - next) <= best.size()) return;
        if (compatible(current, next)) {
            current.push_back(next);
            dfs(next + 1);
            current.pop_back();
        }
        if (current.size() + (n - next - 1) > best.size()) dfs(next + 1);
    };
    dfs(0);
    return best;
}

bool verify_factorization(const HomogPoly& f, const std::vector<std::pair<HomogPoly, unsigned>>& claimed,
                          const Rational& scalar) {
    if (scalar == 0) return f.is_zero();
    std::size_t nv = f.nvars();
    HomogPoly prod = HomogPoly::constant(nv, 1);
    for (const auto& [g, m] : claimed) {
        if (g.nvars() != nv) return false;
        prod = prod * g.pow(m);
    }
    return prod.scaled(scalar.get_num()) == f.scaled(scalar.get_den());
}

}  // namespace orbitlab::poly

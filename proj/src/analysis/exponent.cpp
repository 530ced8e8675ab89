#include "orbitlab/analysis/exponent.hpp"

#include "orbitlab/error.hpp"

namespace orbitlab::analysis {

SelfMap ratl_infty_map(std::size_t n) {
    if (n < 2) throw InputError("the exponent example needs N >= 2");
    std::vector<std::string> c{"X0^3", "X1^3"};
    for (std::size_t i = 2; i <= n; ++i) c.push_back("X" + std::to_string(i - 1) + "*X" + std::to_string(i) + "^2");
    return SelfMap::from_strings(c, n);
}

IntMatrix exponent_matrix(std::size_t n) {
    if (n < 2) throw InputError("the exponent example needs N >= 2");
    // With a_N = 0 the raw exponents are 3a_0, 3a_1, a_{i-1} + 2a_i (i >= 2), and the
    // last coordinate contributes a_{N-1}, the minimum, which reduction subtracts.
    IntMatrix a(n, std::vector<Integer>(n, 0));
    a[0][0] = 3;
    a[1][1] = 3;
    for (std::size_t i = 2; i < n; ++i) {
        a[i][i - 1] += 1;
        a[i][i] += 2;
    }
    for (std::size_t i = 0; i < n; ++i) a[i][n - 1] -= 1;
    return a;
}

std::vector<Integer> characteristic_polynomial(const IntMatrix& a) {
    const std::size_t n = a.size();
    std::vector<Integer> c(n + 1, 0);
    c[n] = 1;
    IntMatrix m(n, std::vector<Integer>(n, 0));
    for (std::size_t k = 1; k <= n; ++k) {
        // M_k = A M_{k-1} + c_{n-k+1} I
        IntMatrix next(n, std::vector<Integer>(n, 0));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                Integer s = 0;
                for (std::size_t l = 0; l < n; ++l) s += a[i][l] * m[l][j];
                next[i][j] = s;
            }
            next[i][i] += c[n - k + 1];
        }
        m = std::move(next);
        Integer tr = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t l = 0; l < n; ++l) tr += a[i][l] * m[l][i];
        c[n - k] = -tr / static_cast<long>(k);
    }
    return c;
}

namespace {

std::vector<Integer> expected_charpoly(std::size_t n) {
    std::vector<Integer> p{-3, 1};
    for (std::size_t k = 1; k < n; ++k) {
        std::vector<Integer> q(p.size() + 1, 0);
        for (std::size_t i = 0; i < p.size(); ++i) {
            q[i] -= 2 * p[i];
            q[i + 1] += p[i];
        }
        p = std::move(q);
    }
    return p;
}

bool is_power_of_two(const Integer& x, const Integer& e) {
    if (x <= 0 || mpz_popcount(x.get_mpz_t()) != 1) return false;
    return Integer(static_cast<unsigned long>(mpz_scan1(x.get_mpz_t(), 0))) == e;
}

}  // namespace

ExponentOrbit exponent_orbit_check(std::size_t n, unsigned m_max) {
    if (n < 2) throw InputError("the exponent example needs N >= 2");
    ExponentOrbit out;
    out.dimension = n;
    out.a = exponent_matrix(n);
    out.charpoly = characteristic_polynomial(out.a);
    out.charpoly_ok = out.charpoly == expected_charpoly(n);
    if (!out.charpoly_ok) throw VerificationError("characteristic polynomial is not (x-3)(x-2)^(N-1)");
    IntMatrix shifted = out.a;
    for (std::size_t i = 0; i < n; ++i) shifted[i][i] -= 2;
    out.single_block = arith::nullspace(shifted, n).size() == 1;
    if (!out.single_block) throw VerificationError("eigenvalue 2 has more than one Jordan block");

    std::vector<Integer> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<unsigned long>(n - i);
    out.vectors.push_back(v);
    for (unsigned m = 1; m <= m_max; ++m) {
        std::vector<Integer> w(n, 0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) w[i] += out.a[i][j] * v[j];
        v = std::move(w);
        out.vectors.push_back(v);
    }

    out.strictly_decreasing = true;
    for (unsigned m = 0; m <= m_max && out.strictly_decreasing; ++m) {
        for (std::size_t i = 0; i + 1 < n; ++i) {
            if (out.vectors[m][i] <= out.vectors[m][i + 1]) {
                out.strictly_decreasing = false;
                out.first_failure = m;
                throw VerificationError("exponents not strictly decreasing at m = " + std::to_string(m));
            }
        }
    }

    const SelfMap f = ratl_infty_map(n);
    std::vector<Integer> start(n + 1);
    for (std::size_t i = 0; i <= n; ++i) start[i] = arith::pow(Integer(2), n - i);
    maps::ProjPoint p = maps::reduce_point(start);
    for (unsigned m = 0; m <= m_max; ++m) {
        if (m > 0) p = maps::evaluate_map(f, p);
        bool ok = p[n] == 1;
        for (std::size_t i = 0; i < n && ok; ++i) ok = is_power_of_two(p[i], out.vectors[m][i]);
        if (!ok) {
            out.first_failure = m;
            throw VerificationError("matrix route and direct iteration disagree at m = " + std::to_string(m));
        }
        out.direct_checked = m;
    }
    out.direct_ok = true;
    return out;
}

}  // namespace orbitlab::analysis

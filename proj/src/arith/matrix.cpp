#include "orbitlab/arith/matrix.hpp"

#include <utility>

#include "orbitlab/error.hpp"

namespace orbitlab::arith {

namespace {

std::size_t bit_length(const Integer& x) { return mpz_sizeinbase(x.get_mpz_t(), 2); }

// Fraction-free forward elimination in place.  Returns the pivot columns in row order.
std::vector<std::size_t> bareiss_echelon(IntMatrix& m, std::size_t columns, int* sign = nullptr) {
    std::vector<std::size_t> pivots;
    const std::size_t rows = m.size();
    Integer prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < columns && r < rows; ++c) {
        std::size_t best = rows;
        for (std::size_t i = r; i < rows; ++i) {
            if (m[i][c] == 0) continue;
            if (best == rows || bit_length(m[i][c]) < bit_length(m[best][c])) best = i;
        }
        if (best == rows) continue;
        if (best != r) {
            std::swap(m[best], m[r]);
            if (sign) *sign = -*sign;
        }
        const Integer& pivot = m[r][c];
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < columns; ++j) {
                Integer t = pivot * m[i][j] - m[i][c] * m[r][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][c] = 0;
        }
        prev = pivot;
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

Integer determinant(IntMatrix m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    for (const auto& row : m) {
        if (row.size() != n) throw InputError("determinant needs a square matrix");
    }
    int sign = 1;
    auto pivots = bareiss_echelon(m, n, &sign);
    if (pivots.size() < n) return 0;
    return sign * m[n - 1][n - 1];
}

std::size_t rank(IntMatrix m) {
    if (m.empty()) return 0;
    const std::size_t columns = m.front().size();
    return bareiss_echelon(m, columns).size();
}

std::vector<std::vector<Integer>> nullspace(IntMatrix m, std::size_t columns) {
    for (const auto& row : m) {
        if (row.size() != columns) throw InputError("ragged matrix");
    }
    auto pivots = bareiss_echelon(m, columns);
    std::vector<bool> is_pivot(columns, false);
    for (auto c : pivots) is_pivot[c] = true;

    std::vector<std::vector<Integer>> basis;
    for (std::size_t free = 0; free < columns; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> x(columns, Rational(0));
        x[free] = 1;
        for (std::size_t k = pivots.size(); k-- > 0;) {
            const std::size_t c = pivots[k];
            Rational acc = 0;
            for (std::size_t j = c + 1; j < columns; ++j) {
                if (m[k][j] != 0 && x[j] != 0) acc += Rational(m[k][j]) * x[j];
            }
            x[c] = -acc / Rational(m[k][c]);
        }
        Integer den_lcm = 1;
        for (const auto& q : x) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den_mpz_t());
        std::vector<Integer> v(columns);
        Integer g = 0;
        for (std::size_t j = 0; j < columns; ++j) {
            Rational scaled = x[j] * Rational(den_lcm);
            v[j] = scaled.get_num();
            g = gcd(g, v[j]);
        }
        std::size_t last = columns;
        for (std::size_t j = columns; j-- > 0;) {
            if (v[j] != 0) {
                last = j;
                break;
            }
        }
        if (g != 0) {
            if (last < columns && v[last] < 0) g = -g;
            for (auto& e : v) mpz_divexact(e.get_mpz_t(), e.get_mpz_t(), g.get_mpz_t());
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exponent, std::uint64_t p) {
    std::uint64_t result = 1 % p;
    base %= p;
    while (exponent) {
        if (exponent & 1) result = mul_mod(result, base, p);
        base = mul_mod(base, base, p);
        exponent >>= 1;
    }
    return result;
}

std::uint64_t pow_mod(std::uint64_t base, const Integer& exponent, std::uint64_t p) {
    Integer b, mod, r;
    mpz_set_ui(b.get_mpz_t(), base);
    mpz_set_ui(mod.get_mpz_t(), p);
    mpz_powm(r.get_mpz_t(), b.get_mpz_t(), exponent.get_mpz_t(), mod.get_mpz_t());
    return mpz_get_ui(r.get_mpz_t());
}

std::uint64_t reduce_mod(const Integer& x, std::uint64_t p) {
    static_assert(sizeof(unsigned long) == 8, "64-bit unsigned long expected");
    return mpz_fdiv_ui(x.get_mpz_t(), p);
}

std::size_t rank_mod_p(std::vector<std::vector<std::uint64_t>> m, std::uint64_t p) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), columns = m.front().size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < columns && r < rows; ++c) {
        std::size_t piv = rows;
        for (std::size_t i = r; i < rows; ++i) {
            if (m[i][c] != 0) {
                piv = i;
                break;
            }
        }
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        const std::uint64_t inv = pow_mod(m[r][c], p - 2, p);
        for (std::size_t j = c; j < columns; ++j) m[r][j] = mul_mod(m[r][j], inv, p);
        for (std::size_t i = r + 1; i < rows; ++i) {
            const std::uint64_t f = m[i][c];
            if (f == 0) continue;
            for (std::size_t j = c; j < columns; ++j) {
                m[i][j] = (m[i][j] + p - mul_mod(f, m[r][j], p)) % p;
            }
        }
        ++r;
    }
    return r;
}

const std::vector<std::uint64_t>& certificate_primes() {
    static const std::vector<std::uint64_t> primes = [] {
        std::vector<std::uint64_t> out;
        Integer candidate = Integer(1) << 62;
        while (out.size() < 3) {
            candidate -= 1;
            if (is_prime(candidate)) out.push_back(mpz_get_ui(candidate.get_mpz_t()));
        }
        return out;
    }();
    return primes;
}

}  // namespace orbitlab::arith

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "orbitlab/arith/integer.hpp"
#include "orbitlab/arith/logsum.hpp"
#include "orbitlab/arith/matrix.hpp"
#include "orbitlab/arith/places.hpp"
#include "orbitlab/error.hpp"

using namespace orbitlab;
using namespace orbitlab::arith;

namespace {

// Oracle: 3^k by repeated multiplication.
Integer slow_pow(long base, int k) {
    Integer r = 1;
    for (int i = 0; i < k; ++i) r *= base;
    return r;
}

Integer random_integer(std::mt19937_64& rng, int max_bits) {
    std::uniform_int_distribution<int> bits(1, max_bits);
    int b = bits(rng);
    Integer x = 0;
    for (int i = 0; i < b; i += 32) {
        x <<= 32;
        x += static_cast<unsigned long>(rng() & 0xffffffffUL);
    }
    x >>= (((b + 31) / 32) * 32 - b);
    if (x == 0) x = 1;
    if (rng() & 1) x = -x;
    return x;
}

}  // namespace

TEST_CASE("padic valuation") {
    CHECK(padic_valuation(48, 2) == 4);
    CHECK(padic_valuation(slow_pow(3, 12), 3) == 12);
    CHECK(slow_pow(3, 12) == 531441);
    Integer v = slow_pow(2000, 4) + 1;
    CHECK(padic_valuation(v, 2) == 0);
    CHECK_THROWS_AS(padic_valuation(0, 2), UndefinedValuation);
    CHECK_THROWS_AS(padic_valuation(12, 4), InputError);
}

TEST_CASE("prime-to-S part") {
    CHECK(prime_to_S_part(720, PlaceSet{2, 3}) == 5);
    CHECK(prime_to_S_part(-17, PlaceSet{}) == 17);
    CHECK(prime_to_S_part(Integer(2101) * 1000000, PlaceSet{2, 5}) == 2101);
    CHECK_THROWS_AS(prime_to_S_part(0, PlaceSet{}), InputError);
    CHECK_THROWS_AS(PlaceSet({4}), InputError);
    CHECK(PlaceSet{3, 2}.to_string() == "{inf,2,3}");
    CHECK(PlaceSet{}.contains(Place::archimedean()));
}

TEST_CASE("factor_integer") {
    CHECK(factor_integer(2000) == Factorization{{2, 4}, {5, 3}});
    CHECK(factor_integer(1).empty());
    CHECK(factor_integer(531440) == Factorization{{2, 4}, {5, 1}, {7, 1}, {13, 1}, {73, 1}});
    CHECK(slow_pow(3, 12) - 1 == 531440);
    // Needs rho: product of two primes above the trial bound.
    Integer p("1000000007"), q("998244353"), r("2305843009213693951");
    auto f = factor_integer(p * q * r * r);
    CHECK(f == Factorization{{q, 1}, {p, 1}, {r, 2}});
    CHECK_THROWS_AS(factor_integer(0), InputError);
}

TEST_CASE("factor_integer gives up loudly") {
    // Two 40-bit primes with a tiny rho budget.
    Integer n = Integer("1099511627791") * Integer("1099511628401");
    CHECK_THROWS_AS(factor_integer(n, 50), FactorizationTooHard);
}

TEST_CASE("primality") {
    CHECK(is_prime(2));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(Integer("3215031751")));  // strong pseudoprime to bases 2,3,5,7
    CHECK(is_prime(Integer("2305843009213693951")));
    CHECK(is_prime(Integer("170141183460469231731687303715884105727")));
    CHECK_FALSE(is_prime(Integer("170141183460469231731687303715884105729")));
}

TEST_CASE("logs") {
    CHECK(logsum_to_float(LogSum{}) == 0.0);
    CHECK(logsum_to_float(LogSum::single(2, 1)) == doctest::Approx(std::log(2.0)).epsilon(1e-15));
    LogSum ls = LogSum::single(2, 3);
    ls += LogSum::single(3, 2);
    const long double oracle = 3 * std::log(2.0L) + 2 * std::log(3.0L);
    CHECK(std::fabs(logsum_to_float(ls) - static_cast<double>(oracle)) <= 1e-12 * oracle);
    CHECK(std::fabs(logsum_to_float(ls) - 4.276666119016055) <= 1e-12);
    CHECK(ls.to_string() == "log(2^3*3^2)");

    CHECK(log_abs(1) == 0.0);
    Integer two100 = pow(Integer(2), 100);
    CHECK(std::fabs(log_abs(two100) - 100 * std::log(2.0)) <= 1e-12 * 69.3);
    Integer big = pow(Integer(3), 6561);
    const double expect = 6561 * static_cast<double>(std::log(3.0L));
    CHECK(std::fabs(log_abs(big) - expect) <= 1e-12 * expect);
    // 6561*log 3 = 7207.99523..., not 7208.76.
    CHECK(std::fabs(log_abs(big) - 7207.995226) < 1e-5);
    CHECK_THROWS_AS(log_abs(0), InputError);

    // A few million digits.
    Integer huge = pow(Integer(7), 4000000);
    const double he = 4000000 * static_cast<double>(std::log(7.0L));
    CHECK(std::fabs(log_abs(huge) - he) <= 1e-12 * he);
}

TEST_CASE("decimal digits") {
    CHECK(decimal_digits(0) == 1);
    CHECK(decimal_digits(9) == 1);
    CHECK(decimal_digits(10) == 2);
    CHECK(decimal_digits(-999) == 3);
    CHECK(decimal_digits(pow(Integer(10), 100)) == 101);
    CHECK(decimal_digits(pow(Integer(10), 100) - 1) == 100);
}

TEST_CASE("parsing") {
    CHECK(parse_integer("-12") == -12);
    CHECK(parse_integer("+7") == 7);
    CHECK_THROWS_AS(parse_integer("1e5"), InputError);
    CHECK_THROWS_AS(parse_integer(""), InputError);
    CHECK(parse_rational("5/4") == Rational(5, 4));
    CHECK(parse_rational("6/4") == Rational(3, 2));
    CHECK_THROWS_AS(parse_rational("1/0"), InputError);
}

TEST_CASE("LogSum partial and equality") {
    Integer n = pow(Integer(2), 5) * Integer("1000000007") * Integer("1000000009");
    LogSum partial = LogSum::of_integer_partial(n);
    LogSum full = LogSum::of_integer(n);
    CHECK(partial == full);
    CHECK(full.fully_factored());
    CHECK_FALSE(partial.fully_factored());
    CHECK(partial.value() == n);
    CHECK(std::fabs(partial.to_double() - full.to_double()) < 1e-12 * full.to_double());
    CHECK_FALSE(LogSum::single(2, 1) == LogSum::single(3, 1));
    CHECK(LogSum::single(2, 2).scaled(3) == LogSum::single(2, 6));
}

TEST_CASE("matrices") {
    IntMatrix m{{2, 0, 1}, {1, 3, 2}, {1, 1, 1}};
    CHECK(determinant(m) == 2 * (3 - 2) - 0 + 1 * (1 - 3));
    CHECK(determinant({{0, 1}, {1, 0}}) == -1);
    CHECK(determinant({{1, 2}, {2, 4}}) == 0);
    CHECK(rank({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}}) == 2);
    auto ns = nullspace({{1, 2, 3}, {2, 4, 6}}, 3);
    REQUIRE(ns.size() == 2);
    for (const auto& v : ns) CHECK(v[0] + 2 * v[1] + 3 * v[2] == 0);
    // Vandermonde 4x4 on 3,4,5,6.
    IntMatrix vm;
    for (long a : {3, 4, 5, 6}) vm.push_back({1, a, a * a, a * a * a});
    CHECK(determinant(vm) == Integer(1 * 2 * 3 * 1 * 2 * 1));
    const auto& ps = certificate_primes();
    REQUIRE(ps.size() == 3);
    for (auto p : ps) CHECK(is_prime(Integer(std::to_string(p))));
    CHECK(rank_mod_p({{1, 2}, {2, 4}}, ps[0]) == 1);
    CHECK(pow_mod(3, 4, 1000) == 81);
    CHECK(pow_mod(3, Integer(4), 1000) == 81);
}

TEST_CASE("determinant agrees with cofactor expansion on random 4x4") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> d(-20, 20);
    auto cofactor = [](const IntMatrix& a, auto&& self) -> Integer {
        if (a.size() == 1) return a[0][0];
        Integer s = 0;
        for (std::size_t j = 0; j < a.size(); ++j) {
            IntMatrix minor;
            for (std::size_t i = 1; i < a.size(); ++i) {
                std::vector<Integer> row;
                for (std::size_t k = 0; k < a.size(); ++k)
                    if (k != j) row.push_back(a[i][k]);
                minor.push_back(row);
            }
            Integer t = a[0][j] * self(minor, self);
            s += (j % 2 ? -t : t);
        }
        return s;
    };
    for (int t = 0; t < 200; ++t) {
        IntMatrix a(4, std::vector<Integer>(4));
        for (auto& row : a)
            for (auto& e : row) e = d(rng) / (t % 3 == 0 ? 7 : 1);
        CHECK(determinant(a) == cofactor(a, cofactor));
    }
}

TEST_CASE("properties") {
    std::mt19937_64 rng(12345);
    const PlaceSet s{2, 3, 5, 7};
    for (int t = 0; t < 300; ++t) {
        Integer x = random_integer(rng, 90);
        Integer y = random_integer(rng, 90);
        // |x| = prime-to-S part times S-part.
        Integer rebuilt = prime_to_S_part(x, s);
        for (const auto& p : s.primes()) rebuilt *= pow(p, padic_valuation(x, p));
        CHECK(rebuilt == abs(x));
        // Factorization round trip.
        Integer prod = 1;
        for (const auto& [p, e] : factor_integer(x)) {
            CHECK(is_prime(p));
            prod *= pow(p, e);
        }
        CHECK(prod == abs(x));
        for (long p : {2L, 3L, 11L}) {
            CHECK(padic_valuation(x * y, p) == padic_valuation(x, p) + padic_valuation(y, p));
        }
        // Two log routes agree.
        if (abs(x) > 1) {
            const double a = logsum_to_float(LogSum::of_integer(x));
            const double b = log_abs(x);
            CHECK(std::fabs(a - b) <= 1e-10 * std::max(1.0, b));
        }
    }
}

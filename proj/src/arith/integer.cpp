#include "orbitlab/arith/integer.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>

#include "orbitlab/error.hpp"

namespace orbitlab::arith {

namespace {

constexpr std::uint32_t kTrialBound = 1'000'000;

// Miller-Rabin with the first 13 prime bases is exact below this bound.
const Integer& deterministic_mr_bound() {
    static const Integer bound("3317044064679887385961981");
    return bound;
}

bool miller_rabin(const Integer& n, unsigned long base) {
    Integer d = n - 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
    Integer a = base;
    Integer x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    const Integer n_minus_1 = n - 1;
    if (x == 1 || x == n_minus_1) return true;
    for (unsigned long r = 1; r < s; ++r) {
        x = (x * x) % n;
        if (x == n_minus_1) return true;
    }
    return false;
}

// One Pollard-Brent split attempt.  Returns a nontrivial factor or 0.
Integer brent_split(const Integer& n, unsigned long c, unsigned long& budget) {
    Integer y = 2, x, q = 1, g = 1, ys;
    const Integer cc = c;
    unsigned long r = 1;
    constexpr unsigned long m = 128;
    auto f = [&](const Integer& v) {
        Integer t = v * v + cc;
        mpz_mod(t.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
        return t;
    };
    do {
        x = y;
        if (budget < r) throw FactorizationTooHard(n.get_str());
        budget -= r;
        for (unsigned long i = 0; i < r; ++i) y = f(y);
        unsigned long k = 0;
        while (k < r && g == 1) {
            ys = y;
            const unsigned long steps = std::min(m, r - k);
            for (unsigned long i = 0; i < steps; ++i) {
                y = f(y);
                Integer diff = x - y;
                q = (q * abs(diff)) % n;
            }
            if (budget < steps) throw FactorizationTooHard(n.get_str());
            budget -= steps;
            mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
            k += m;
        }
        r *= 2;
    } while (g == 1);
    if (g == n) {
        // Backtrack one step at a time.
        do {
            ys = f(ys);
            Integer diff = x - ys;
            mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
            if (budget == 0) throw FactorizationTooHard(n.get_str());
            --budget;
        } while (g == 1);
    }
    if (g == n) return 0;
    return g;
}

void factor_rho(const Integer& n, Factorization& out, unsigned long budget) {
    if (n == 1) return;
    if (is_prime(n)) {
        out[n] += 1;
        return;
    }
    // Rho cannot split prime powers.
    if (mpz_perfect_power_p(n.get_mpz_t())) {
        for (unsigned long k = mpz_sizeinbase(n.get_mpz_t(), 2); k >= 2; --k) {
            Integer root;
            if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k) != 0) {
                Factorization inner;
                factor_rho(root, inner, budget);
                for (const auto& [p, e] : inner) out[p] += e * k;
                return;
            }
        }
    }
    for (unsigned long c = 1;; ++c) {
        Integer d = brent_split(n, c, budget);
        if (d != 0) {
            Integer other = n / d;
            factor_rho(d, out, budget);
            factor_rho(other, out, budget);
            return;
        }
    }
}

}  // namespace

bool is_prime(const Integer& n) {
    if (n < 2) return false;
    for (unsigned long p : {2UL, 3UL, 5UL, 7UL, 11UL, 13UL, 17UL, 19UL, 23UL, 29UL, 31UL, 37UL, 41UL}) {
        if (n == p) return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
    }
    if (n < deterministic_mr_bound()) {
        for (unsigned long base : {2UL, 3UL, 5UL, 7UL, 11UL, 13UL, 17UL, 19UL, 23UL, 29UL, 31UL, 37UL, 41UL}) {
            if (!miller_rabin(n, base)) return false;
        }
        return true;
    }
    return mpz_probab_prime_p(n.get_mpz_t(), 25) != 0;
}

unsigned long remove_factor(Integer& x, const Integer& p) {
    if (x == 0) return 0;
    return mpz_remove(x.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t());
}

unsigned long padic_valuation(const Integer& x, const Integer& p) {
    if (x == 0) throw UndefinedValuation();
    if (!is_prime(p)) throw InputError("p-adic valuation requires a prime, got " + p.get_str());
    Integer t = x;
    return remove_factor(t, p);
}

const std::vector<std::uint32_t>& small_primes() {
    static const std::vector<std::uint32_t> primes = [] {
        std::vector<bool> composite(kTrialBound + 1, false);
        std::vector<std::uint32_t> out;
        for (std::uint32_t i = 2; i <= kTrialBound; ++i) {
            if (composite[i]) continue;
            out.push_back(i);
            for (std::uint64_t j = std::uint64_t(i) * i; j <= kTrialBound; j += i) composite[j] = true;
        }
        return out;
    }();
    return primes;
}

Factorization factor_integer(const Integer& x, unsigned long rho_budget) {
    Factorization out;
    Integer n = abs(x);
    if (n == 0) throw InputError("cannot factor zero");
    for (std::uint32_t p : small_primes()) {
        if (n == 1) break;
        if (Integer(p) * p > n) break;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            unsigned long e = 0;
            while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
                mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
                ++e;
            }
            out[Integer(p)] = e;
        }
    }
    if (n == 1) return out;
    const Integer bound = Integer(kTrialBound) * kTrialBound;
    if (n < bound) {
        out[n] += 1;
        return out;
    }
    factor_rho(n, out, rho_budget);
    return out;
}

long double log_abs_ld(const Integer& x) {
    if (x == 0) throw InputError("log of zero");
    const std::size_t bits = mpz_sizeinbase(x.get_mpz_t(), 2);
    if (bits <= 64) {
        Integer a = abs(x);
        return std::log(static_cast<long double>(mpz_get_ui(a.get_mpz_t())));
    }
    Integer lead;
    mpz_abs(lead.get_mpz_t(), x.get_mpz_t());
    mpz_tdiv_q_2exp(lead.get_mpz_t(), lead.get_mpz_t(), bits - 64);
    const long double top = static_cast<long double>(mpz_get_ui(lead.get_mpz_t()));
    return std::log(top) + static_cast<long double>(bits - 64) * std::numbers::ln2_v<long double>;
}

double log_abs(const Integer& x) { return static_cast<double>(log_abs_ld(x)); }

std::size_t decimal_digits(const Integer& x) {
    if (x == 0) return 1;
    std::size_t d = mpz_sizeinbase(x.get_mpz_t(), 10);
    // mpz_sizeinbase may overshoot by one.
    Integer ten_pow;
    mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, d - 1);
    if (mpz_cmpabs(x.get_mpz_t(), ten_pow.get_mpz_t()) < 0) --d;
    return d;
}

Integer gcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Integer abs(const Integer& a) {
    Integer r;
    mpz_abs(r.get_mpz_t(), a.get_mpz_t());
    return r;
}

Integer pow(const Integer& base, unsigned long exponent) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
    return r;
}

Integer parse_integer(const std::string& text) {
    std::size_t i = 0;
    if (!text.empty() && (text[0] == '-' || text[0] == '+')) i = 1;
    if (i == text.size()) throw InputError("not an integer: '" + text + "'");
    for (std::size_t j = i; j < text.size(); ++j) {
        if (text[j] < '0' || text[j] > '9') throw InputError("not an integer: '" + text + "'");
    }
    return Integer(text[0] == '+' ? text.substr(1) : text);
}

Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(parse_integer(text));
    Integer num = parse_integer(text.substr(0, slash));
    Integer den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw InputError("zero denominator in '" + text + "'");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string to_string(const Integer& x) { return x.get_str(); }

std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace orbitlab::arith

#include "orbitlab/arith/logsum.hpp"

#include "orbitlab/error.hpp"

namespace orbitlab::arith {

LogSum LogSum::of_integer(const Integer& n) {
    LogSum out;
    for (const auto& [p, e] : factor_integer(n)) out.terms_[p] = e;
    return out;
}

LogSum LogSum::of_integer_partial(const Integer& n, std::uint32_t trial_bound) {
    if (n == 0) throw InputError("log of zero");
    LogSum out;
    Integer r = abs(n);
    for (std::uint32_t p : small_primes()) {
        if (p >= trial_bound || r == 1) break;
        if (!mpz_divisible_ui_p(r.get_mpz_t(), p)) continue;
        unsigned long e = 0;
        while (mpz_divisible_ui_p(r.get_mpz_t(), p)) {
            mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), p);
            ++e;
        }
        out.terms_[Integer(p)] = e;
    }
    if (r != 1) out.terms_[r] += 1;
    return out;
}

LogSum LogSum::of_integer_auto(const Integer& n, std::size_t factor_bits) {
    if (n == 0) throw InputError("log of zero");
    if (mpz_sizeinbase(n.get_mpz_t(), 2) <= factor_bits) {
        try {
            return of_integer(n);
        } catch (const FactorizationTooHard&) {
        }
    }
    return of_integer_partial(n);
}

LogSum LogSum::single(const Integer& base, unsigned long exponent) {
    if (base < 2) throw InputError("LogSum base must be at least 2");
    LogSum out;
    if (exponent > 0) out.terms_[base] = exponent;
    return out;
}

bool LogSum::fully_factored() const {
    for (const auto& [b, e] : terms_) {
        if (!is_prime(b)) return false;
    }
    return true;
}

Integer LogSum::value() const {
    Integer v = 1;
    for (const auto& [b, e] : terms_) v *= pow(b, e);
    return v;
}

LogSum& LogSum::operator+=(const LogSum& other) {
    for (const auto& [b, e] : other.terms_) terms_[b] += e;
    return *this;
}

LogSum LogSum::scaled(unsigned long k) const {
    LogSum out;
    if (k == 0) return out;
    for (const auto& [b, e] : terms_) out.terms_[b] = e * k;
    return out;
}

double LogSum::to_double() const {
    long double sum = 0;
    for (const auto& [b, e] : terms_) sum += static_cast<long double>(e) * log_abs_ld(b);
    return static_cast<double>(sum);
}

std::string LogSum::to_string() const {
    if (terms_.empty()) return "0";
    std::string out = "log(";
    bool first = true;
    for (const auto& [b, e] : terms_) {
        if (!first) out += "*";
        first = false;
        // Huge unfactored cofactors are summarized by size.
        if (mpz_sizeinbase(b.get_mpz_t(), 10) > 60) {
            out += "C" + std::to_string(decimal_digits(b));
        } else {
            out += b.get_str();
        }
        if (e != 1) out += "^" + std::to_string(e);
    }
    return out + ")";
}

bool operator==(const LogSum& a, const LogSum& b) {
    if (a.terms_ == b.terms_) return true;
    if (a.fully_factored() && b.fully_factored()) return false;
    return a.value() == b.value();
}

double logsum_to_float(const LogSum& ls) { return ls.to_double(); }

}  // namespace orbitlab::arith

#pragma once

#include <map>
#include <string>

#include "orbitlab/arith/integer.hpp"

namespace orbitlab::arith {

/// Exact value sum_b e_b * log(b) with integer bases b >= 2 and exponents e_b >= 1.
///
/// When fully factored every base is prime and the representation is the
/// p-adic decomposition.  Values too large to factor keep an unfactored
/// cofactor as a composite base, which stays exact.
class LogSum {
public:
    LogSum() = default;

    /// log|n| as prime-power terms.  Throws FactorizationTooHard if rho gives up.
    static LogSum of_integer(const Integer& n);

    /// log|n| with small primes (< trial_bound) split off and the rest kept whole.
    static LogSum of_integer_partial(const Integer& n, std::uint32_t trial_bound = 1000);

    /// Full factorization when |n| has at most `factor_bits` bits and rho succeeds,
    /// partial otherwise.
    static LogSum of_integer_auto(const Integer& n, std::size_t factor_bits = 128);

    static LogSum single(const Integer& base, unsigned long exponent);

    const std::map<Integer, unsigned long>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool fully_factored() const;

    /// The integer prod b^e.
    Integer value() const;

    LogSum& operator+=(const LogSum& other);
    LogSum scaled(unsigned long k) const;

    /// Float value, extended-precision accumulation.
    double to_double() const;

    /// "0" or e.g. "log(2^3*3^2)".
    std::string to_string() const;

    friend bool operator==(const LogSum& a, const LogSum& b);

private:
    std::map<Integer, unsigned long> terms_;
};

/// sum e_p log p as a real number.
double logsum_to_float(const LogSum& ls);

}  // namespace orbitlab::arith

#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "orbitlab/arith/integer.hpp"

namespace orbitlab::arith {

/// A place of Q: the real absolute value or a p-adic one.
class Place {
public:
    static Place archimedean() { return Place{}; }
    /// Throws InputError unless p is prime.
    static Place finite(const Integer& p);

    bool is_archimedean() const noexcept { return !prime_.has_value(); }
    /// Only valid for finite places.
    const Integer& prime() const;

    std::string to_string() const;
    friend bool operator==(const Place& a, const Place& b) = default;

private:
    Place() = default;
    std::optional<Integer> prime_;
};

/// Finite set S of places of Q.  The archimedean place is always a member.
class PlaceSet {
public:
    PlaceSet() = default;
    /// Throws InputError if any entry is not prime.  Duplicates collapse.
    explicit PlaceSet(const std::vector<Integer>& primes);
    PlaceSet(std::initializer_list<long> primes);

    const std::set<Integer>& primes() const noexcept { return primes_; }
    bool contains(const Place& v) const;
    bool contains_prime(const Integer& p) const { return primes_.count(p) != 0; }
    std::string to_string() const;

    friend bool operator==(const PlaceSet& a, const PlaceSet& b) = default;

private:
    std::set<Integer> primes_;
};

/// |x| with every prime of S divided out (|x|'_S).  Throws InputError for x = 0.
Integer prime_to_S_part(const Integer& x, const PlaceSet& s);

}  // namespace orbitlab::arith

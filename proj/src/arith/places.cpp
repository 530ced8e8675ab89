#include "orbitlab/arith/places.hpp"

#include "orbitlab/error.hpp"

namespace orbitlab::arith {

Place Place::finite(const Integer& p) {
    if (!is_prime(p)) throw InputError("place requires a prime, got " + p.get_str());
    Place v;
    v.prime_ = p;
    return v;
}

const Integer& Place::prime() const {
    if (!prime_) throw InputError("archimedean place has no prime");
    return *prime_;
}

std::string Place::to_string() const { return prime_ ? "v_" + prime_->get_str() : "v_inf"; }

PlaceSet::PlaceSet(const std::vector<Integer>& primes) {
    for (const auto& p : primes) {
        if (!is_prime(p)) throw InputError("S may only contain primes, got " + p.get_str());
        primes_.insert(p);
    }
}

PlaceSet::PlaceSet(std::initializer_list<long> primes) {
    for (long p : primes) {
        Integer q = p;
        if (!is_prime(q)) throw InputError("S may only contain primes, got " + q.get_str());
        primes_.insert(q);
    }
}

bool PlaceSet::contains(const Place& v) const {
    return v.is_archimedean() || contains_prime(v.prime());
}

std::string PlaceSet::to_string() const {
    std::string out = "{inf";
    for (const auto& p : primes_) out += "," + p.get_str();
    return out + "}";
}

Integer prime_to_S_part(const Integer& x, const PlaceSet& s) {
    if (x == 0) throw InputError("prime-to-S part of zero is undefined");
    Integer r = abs(x);
    for (const auto& p : s.primes()) {
        if (r == 1) break;
        remove_factor(r, p);
    }
    return r;
}

}  // namespace orbitlab::arith

#include "orbitlab/heights/heights.hpp"

#include <cmath>

#include "orbitlab/error.hpp"

namespace orbitlab::heights {

double weil_height(const ProjPoint& p) {
    const Integer& m = p.max_abs();
    if (m == 0) return 0.0;
    return arith::log_abs(m);
}

namespace {

Integer value_at(const HomogPoly& f, const ProjPoint& p) {
    if (f.dimension() != p.dimension()) throw InputError("divisor and point dimensions differ");
    Integer v = f.evaluate(p.coords());
    if (v == 0) throw SupportHit(p.to_string());
    return v;
}

}  // namespace

LocalHeightValue local_height(const HomogPoly& f, unsigned mult, const ProjPoint& p, const Place& v) {
    const Integer value = value_at(f, p);
    LocalHeightValue out;
    out.place = v;
    if (v.is_archimedean()) {
        // deg F * log max|a_i| - log|F(a)|
        const long double h = arith::log_abs_ld(p.max_abs());
        const long double lf = arith::log_abs_ld(value);
        out.float_value = static_cast<double>(mult * (f.degree() * h - lf));
        return out;
    }
    // gcd(a) = 1, so min v(a_i) = 0.
    const unsigned long e = arith::padic_valuation(value, v.prime());
    out.exact = e == 0 ? LogSum{} : LogSum::single(v.prime(), e * mult);
    out.float_value = arith::logsum_to_float(*out.exact);
    return out;
}

LogSum height_sum_outside_S(const Divisor& d, const ProjPoint& p, const PlaceSet& s) {
    LogSum total;
    for (const auto& [f, m] : d.components()) {
        const Integer rest = arith::prime_to_S_part(value_at(f, p), s);
        if (rest != 1) total += LogSum::of_integer_auto(rest).scaled(m);
    }
    return total;
}

bool is_S_integral(const Divisor& d, const ProjPoint& p, const PlaceSet& s, const Thresholds& thresholds) {
    if (thresholds.empty()) return height_sum_outside_S(d, p, s).is_zero();
    std::map<Integer, unsigned long> used;
    for (const auto& [f, m] : d.components()) {
        Integer rest = arith::prime_to_S_part(value_at(f, p), s);
        for (const auto& [q, k] : thresholds) {
            if (s.contains_prime(q)) continue;
            used[q] += m * arith::remove_factor(rest, q);
            if (used[q] > k) return false;
        }
        if (rest != 1) return false;
    }
    return true;
}

double digit_ratio(const LogSum& outside, unsigned divisor_degree, double height, const ProjPoint& p) {
    if (height <= 0.0) throw ZeroHeight(p.to_string());
    return arith::logsum_to_float(outside) / (divisor_degree * height);
}

double digit_ratio(const Divisor& d, const ProjPoint& p, const PlaceSet& s) {
    const LogSum outside = height_sum_outside_S(d, p, s);
    return digit_ratio(outside, d.degree(), weil_height(p), p);
}

}  // namespace orbitlab::heights

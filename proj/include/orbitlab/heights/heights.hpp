#pragma once

#include <map>
#include <optional>

#include "orbitlab/arith/logsum.hpp"
#include "orbitlab/arith/places.hpp"
#include "orbitlab/maps/divisor.hpp"
#include "orbitlab/maps/point.hpp"

namespace orbitlab::heights {

using arith::Integer;
using arith::LogSum;
using arith::Place;
using arith::PlaceSet;
using maps::Divisor;
using maps::HomogPoly;
using maps::ProjPoint;

struct LocalHeightValue {
    Place place = Place::archimedean();
    /// Set at finite places only.
    std::optional<LogSum> exact;
    double float_value = 0.0;
};

/// Per-prime integrality allowances: v_p(F(P)) <= k_p is still integral at p.
using Thresholds = std::map<Integer, unsigned long>;

/// log max |a_i| for the reduced representative.
double weil_height(const ProjPoint& p);

/// Local height of mult*(F = 0) at P with the representative formula
/// v(F(a)) - deg F * min v(a_i).  Throws SupportHit when F(P) = 0.
LocalHeightValue local_height(const HomogPoly& f, unsigned mult, const ProjPoint& p, const Place& v);

/// Sum over finite p outside S of lambda_p(D, P), exactly.
LogSum height_sum_outside_S(const Divisor& d, const ProjPoint& p, const PlaceSet& s);

/// Every lambda_p(D, P) for p outside S is zero (or within its threshold).
bool is_S_integral(const Divisor& d, const ProjPoint& p, const PlaceSet& s, const Thresholds& thresholds = {});

/// height_sum_outside_S / (deg D * h(P)).  Throws ZeroHeight when h(P) = 0.
double digit_ratio(const Divisor& d, const ProjPoint& p, const PlaceSet& s);

/// As digit_ratio, with a precomputed sum and height.
double digit_ratio(const LogSum& outside, unsigned divisor_degree, double height, const ProjPoint& p);

}  // namespace orbitlab::heights

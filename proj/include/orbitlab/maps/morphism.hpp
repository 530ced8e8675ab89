#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orbitlab/maps/selfmap.hpp"

namespace orbitlab::maps {

enum class MorphismVerdict { Verified, Refuted, Inconclusive };

std::string to_string(MorphismVerdict v);

struct MorphismResult {
    MorphismVerdict verdict = MorphismVerdict::Inconclusive;
    /// Rational point where every coordinate vanishes (refuted only).
    std::optional<ProjPoint> witness;
    /// Human-readable account of how the verdict was reached.
    std::string certificate;
};

/// Decides whether the coordinates have a common zero over the algebraic closure.
///
/// Verified only with an exact certificate: a coordinate splitting into pool
/// hyperplanes reduces the question to each hyperplane; binary systems use gcds;
/// otherwise the Macaulay matrix in degree (N+1)(d-1)+1 must have full rank
/// modulo one of the certificate primes.  Refuted needs a witness or a
/// nonconstant common factor of binary restrictions.
MorphismResult morphism_check(const SelfMap& f, const std::vector<ProjPoint>& candidates = {});

/// Homogeneous Sylvester resultant of two binary forms.
Integer binary_resultant(const HomogPoly& f, const HomogPoly& g);

}  // namespace orbitlab::maps

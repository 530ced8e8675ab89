#pragma once

#include <optional>
#include <vector>

#include "orbitlab/maps/point.hpp"
#include "orbitlab/poly/polynomial.hpp"

namespace orbitlab::analysis {

using arith::Integer;
using maps::ProjPoint;
using poly::HomogPoly;

struct GenericityResult {
    std::size_t monomials = 0;
    std::size_t rank = 0;
    /// Basis of degree-e forms vanishing on every point (when computed exactly).
    std::vector<HomogPoly> kernel;
    /// False when only a modular rank was available and it was deficient.
    bool kernel_exact = true;
    /// Set when full rank was certified modulo this prime.
    std::optional<std::uint64_t> certificate_prime;

    bool empty_kernel() const { return rank == monomials; }
};

/// Degree-e forms through all points.  Full rank modulo a certificate prime settles
/// emptiness; otherwise the kernel is computed by fraction-free elimination.
/// Throws ResourceCapExceeded when binomial(N+e, e) > 10^4.
GenericityResult genericity_test(const std::vector<ProjPoint>& points, unsigned e);

/// Points [b^x_0 : ... : b^x_N] given by exponent vectors; rank modulo certificate primes only.
GenericityResult genericity_test_exponents(const Integer& base, const std::vector<std::vector<Integer>>& exponents,
                                           unsigned e);

}  // namespace orbitlab::analysis

#pragma once

#include <optional>
#include <vector>

#include "orbitlab/arith/matrix.hpp"
#include "orbitlab/maps/selfmap.hpp"

namespace orbitlab::analysis {

using arith::Integer;
using arith::IntMatrix;
using maps::SelfMap;

/// Exponent recurrence of [X0^3 : X1^3 : X1 X2^2 : ... : X_{N-1} X_N^2] at [2^N : ... : 2 : 1].
struct ExponentOrbit {
    std::size_t dimension = 0;
    IntMatrix a;
    /// vectors[m] = A^m (N, ..., 1); entry i is the 2-adic exponent of coordinate i.
    std::vector<std::vector<Integer>> vectors;
    /// Characteristic polynomial, constant term first.
    std::vector<Integer> charpoly;

    bool charpoly_ok = false;
    /// A - 2I has a one-dimensional kernel (a single Jordan block for eigenvalue 2).
    bool single_block = false;
    /// Direct iteration agrees for m <= direct_checked.
    unsigned direct_checked = 0;
    bool direct_ok = false;
    bool strictly_decreasing = false;
    std::optional<unsigned> first_failure;
};

SelfMap ratl_infty_map(std::size_t n);
IntMatrix exponent_matrix(std::size_t n);

/// Builds and checks everything; throws VerificationError naming the first offending m.
ExponentOrbit exponent_orbit_check(std::size_t n, unsigned m_max);

/// Characteristic polynomial det(xI - A) by Faddeev-LeVerrier, constant term first.
std::vector<Integer> characteristic_polynomial(const IntMatrix& a);

}  // namespace orbitlab::analysis

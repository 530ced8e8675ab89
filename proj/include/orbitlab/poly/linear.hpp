#pragma once

#include <utility>
#include <vector>

#include "orbitlab/poly/polynomial.hpp"

namespace orbitlab::poly {

/// A homogeneous polynomial of degree exactly 1.
using LinearForm = HomogPoly;

/// Throws InputError unless every entry is a nonzero linear form and no two are proportional.
void require_distinct_linear(const std::vector<LinearForm>& forms);

struct LinearFactorization {
    /// Multiplicity of each pool member, in pool order (zeros included).
    std::vector<unsigned> multiplicities;
    /// F / prod L^m with the pool forms taken primitive; divisible by no pool member.
    HomogPoly residual;
};

/// Repeated exact division by each pool member in turn.
LinearFactorization trial_linear_factors(const HomogPoly& f, const std::vector<LinearForm>& pool);

struct ReducedBinaryForm {
    HomogPoly squarefree;
    unsigned distinct_root_count;
};

/// Squarefree part of a binary form over Q (roots over the algebraic closure).
ReducedBinaryForm binary_form_reduced_degree(const HomogPoly& f);

/// Every subset of size min(m, N+1) is linearly independent.  Throws on proportional inputs.
bool general_position_check(const std::vector<LinearForm>& forms, std::size_t dimension);

/// Largest subset in general position; indices into `forms`, ascending.
/// Among maximum subsets the lexicographically first is returned.  Refuses more than 25 forms.
std::vector<std::size_t> max_general_position_subset(const std::vector<LinearForm>& forms,
                                                     std::size_t dimension);

/// scalar * prod G_i^m_i == F.
bool verify_factorization(const HomogPoly& f, const std::vector<std::pair<HomogPoly, unsigned>>& claimed,
                          const Rational& scalar);

/// Rank of the coefficient matrix of the given linear forms.
std::size_t linear_rank(const std::vector<LinearForm>& forms);

}  // namespace orbitlab::poly

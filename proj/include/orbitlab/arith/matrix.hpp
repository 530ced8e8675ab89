#pragma once

#include <cstdint>
#include <vector>

#include "orbitlab/arith/integer.hpp"

namespace orbitlab::arith {

/// Dense integer matrix, row-major.
using IntMatrix = std::vector<std::vector<Integer>>;

/// Determinant of a square matrix by Bareiss fraction-free elimination.
Integer determinant(IntMatrix m);

/// Rank by fraction-free elimination; pivots are the entries of smallest bit length.
std::size_t rank(IntMatrix m);

/// Integer basis of {x : m x = 0}.  Each vector is primitive with its last nonzero entry positive.
std::vector<std::vector<Integer>> nullspace(IntMatrix m, std::size_t columns);

/// Rank of a matrix over Z/p (p < 2^62 prime), entries already reduced.
std::size_t rank_mod_p(std::vector<std::vector<std::uint64_t>> m, std::uint64_t p);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exponent, std::uint64_t p);
std::uint64_t pow_mod(std::uint64_t base, const Integer& exponent, std::uint64_t p);
std::uint64_t reduce_mod(const Integer& x, std::uint64_t p);

/// Fixed primes just below 2^62 used for modular certificates.
const std::vector<std::uint64_t>& certificate_primes();

}  // namespace orbitlab::arith

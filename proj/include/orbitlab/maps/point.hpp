#pragma once

#include <string>
#include <vector>

#include "orbitlab/arith/integer.hpp"

namespace orbitlab::maps {

using arith::Integer;
using arith::Rational;

/// Point of P^N(Q) with coprime integer coordinates, first nonzero one positive.
class ProjPoint {
public:
    ProjPoint() = default;

    const std::vector<Integer>& coords() const noexcept { return coords_; }
    std::size_t dimension() const noexcept { return coords_.size() - 1; }
    const Integer& operator[](std::size_t i) const { return coords_[i]; }

    /// Index of the coordinate of largest absolute value (first on ties).
    std::size_t max_coord_index() const;
    const Integer& max_abs() const { return coords_[max_coord_index()]; }

    /// "[a:b:c]"
    std::string to_string() const;

    friend bool operator==(const ProjPoint& a, const ProjPoint& b) = default;

private:
    friend ProjPoint reduce_point(std::vector<Integer> raw);
    std::vector<Integer> coords_;
};

/// Divides out the gcd and fixes the sign.  Throws InputError on the zero vector.
ProjPoint reduce_point(std::vector<Integer> raw);

/// Parses "[a:b:c]" or "a:b:c".
ProjPoint parse_point(const std::string& text);

}  // namespace orbitlab::maps

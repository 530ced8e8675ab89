#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orbitlab/maps/selfmap.hpp"

namespace orbitlab::maps {

/// Effective divisor sum m_i (G_i = 0).
class Divisor {
public:
    Divisor() = default;
    /// Throws InputError on zero multiplicity, constant or proportional components.
    explicit Divisor(std::vector<std::pair<HomogPoly, unsigned>> components);
    static Divisor from_strings(const std::vector<std::pair<std::string, unsigned>>& components,
                                std::size_t dimension);

    const std::vector<std::pair<HomogPoly, unsigned>>& components() const noexcept { return components_; }
    std::size_t dimension() const { return components_.front().first.dimension(); }
    unsigned degree() const;
    /// prod G_i^m_i
    HomogPoly product() const;
    std::string to_string() const;

private:
    std::vector<std::pair<HomogPoly, unsigned>> components_;
};

struct FactoredPullback {
    unsigned n = 0;
    unsigned total_degree = 0;
    Rational scalar = 1;
    poly::Monomial monomial_exponents;
    /// Non-coordinate linear factors, canonical, in pool order.
    std::vector<std::pair<LinearForm, unsigned>> linear_factors;
    /// Nonlinear pool factors and leftovers (canonical).
    std::vector<std::pair<HomogPoly, unsigned>> residual_factors;
    /// Indices into distinct_linear() of a largest general-position subset.
    std::vector<std::size_t> lin_nc_subset;
    unsigned lin_nc_degree = 0;
    std::optional<unsigned> nc_degree_exact;

    /// Coordinate hyperplanes with positive exponent, then linear_factors.
    std::vector<std::pair<LinearForm, unsigned>> all_linear() const;
    std::vector<LinearForm> distinct_linear() const;
    /// All distinct components (linear then residual).
    std::vector<HomogPoly> components() const;
    /// scalar * X^mono * prod L^m * prod R^m
    HomogPoly reassemble() const;
    std::string to_string() const;
};

/// prod_i G_i(iterate)^m_i, unfactored.
HomogPoly composed_pullback(const Divisor& d, const SelfMap& iterate);

/// Pullback of D by an iterate, factored against the iterate's pool and D's own components.
FactoredPullback pullback_divisor(const Divisor& d, const SelfMap& iterate, unsigned n = 0);

}  // namespace orbitlab::maps

#pragma once

#include <string>
#include <vector>

#include "orbitlab/maps/point.hpp"
#include "orbitlab/poly/linear.hpp"

namespace orbitlab::maps {

using poly::HomogPoly;
using poly::LinearForm;

enum class MorphismStatus { Verified, Refuted, Declared, Unknown };

std::string to_string(MorphismStatus s);

/// Candidate factors for cancellation and pullback factoring.  Members are
/// canonical and pairwise non-proportional; insertion order is kept.
class FactorPool {
public:
    FactorPool() = default;
    /// Starts with the coordinate hyperplanes X0..XN.
    explicit FactorPool(std::size_t dimension);

    /// Adds a canonical copy unless a proportional member exists.  Returns true if added.
    bool add(const HomogPoly& f);
    void merge(const FactorPool& other);

    const std::vector<LinearForm>& linear() const noexcept { return linear_; }
    const std::vector<HomogPoly>& nonlinear() const noexcept { return nonlinear_; }
    std::size_t dimension() const noexcept { return dimension_; }

private:
    std::size_t dimension_ = 0;
    std::vector<LinearForm> linear_;
    std::vector<HomogPoly> nonlinear_;
};

/// What was divided out of a coordinate tuple.
struct Cancellation {
    Integer content = 1;
    poly::Monomial monomial;
    std::vector<std::pair<HomogPoly, unsigned>> factors;

    bool trivial() const;
    /// e.g. "Z^5" or "2*X*(X+Y)"; "1" when trivial.
    std::string to_string() const;
};

/// Divides the largest common content, monomial, and pool factors out of all coordinates.
Cancellation cancel_common_factors(std::vector<HomogPoly>& coords, const FactorPool& pool);

/// A self-map of P^N given by N+1 forms of common degree.
class SelfMap {
public:
    SelfMap() = default;
    /// Validates shapes, cancels pool-detectable common factors, and seeds the pool
    /// with the coordinate hyperplanes plus `extra`.
    SelfMap(std::vector<HomogPoly> coords, FactorPool extra = {},
            MorphismStatus status = MorphismStatus::Unknown);

    /// Parses coordinates; linear factors written as explicit products go into the
    /// pool, nonlinear ones into its nonlinear part.
    static SelfMap from_strings(const std::vector<std::string>& coords, std::size_t dimension,
                                const FactorPool& extra = {}, MorphismStatus status = MorphismStatus::Unknown);

    std::size_t dimension() const noexcept { return coords_.size() - 1; }
    unsigned degree() const noexcept { return degree_; }
    const std::vector<HomogPoly>& coords() const noexcept { return coords_; }
    const FactorPool& pool() const noexcept { return pool_; }
    MorphismStatus status() const noexcept { return status_; }
    void set_status(MorphismStatus s) { status_ = s; }
    const Cancellation& construction_cancellation() const noexcept { return cancelled_; }

    std::string to_string() const;

private:
    std::vector<HomogPoly> coords_;
    unsigned degree_ = 0;
    FactorPool pool_;
    MorphismStatus status_ = MorphismStatus::Unknown;
    Cancellation cancelled_;
};

/// Coordinatewise evaluation, reduced.  Throws IndeterminatePoint when every coordinate vanishes.
ProjPoint evaluate_map(const SelfMap& f, const ProjPoint& p);

/// f o g with common factors cancelled.  The result keeps f's status only when both are morphisms.
SelfMap compose_maps(const SelfMap& f, const SelfMap& g);

struct IterateResult {
    SelfMap iterate;
    /// e_1..e_n after cancellation.
    std::vector<unsigned> degrees;
    /// What was cancelled at each step.
    std::vector<Cancellation> cancellations;
};

/// n-fold composition with cancellation after every step.
IterateResult iterate_map(const SelfMap& f, unsigned n);

/// f o g == g o f up to a nonzero rational scalar.
bool commute_check(const SelfMap& f, const SelfMap& g);

/// u == c v for some rational c != 0, coordinatewise.
bool proportional_tuples(const std::vector<HomogPoly>& u, const std::vector<HomogPoly>& v);

}  // namespace orbitlab::maps

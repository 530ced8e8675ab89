#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orbitlab/heights/heights.hpp"
#include "orbitlab/maps/divisor.hpp"

namespace orbitlab::cli {

using arith::Integer;
using arith::PlaceSet;
using arith::Rational;
using maps::Divisor;
using maps::HomogPoly;
using maps::ProjPoint;
using maps::SelfMap;

struct Declared {
    /// "verified" or "declared" skips morphism_check; "refuted" blocks c_n
    std::optional<maps::MorphismStatus> morphism;
    /// D-ratio r; switches cn to the D-ratio condition
    std::optional<Rational> r;
    /// hyperplane the orbit must avoid in D-ratio mode
    std::optional<HomogPoly> avoid;
    std::vector<std::string> pool_extra;
    heights::Thresholds thresholds;
    std::optional<Divisor> substitute;
    /// c used by thin-set reports
    std::optional<Rational> c;
    /// claimed factorization of the pullback by the pullback_n-th iterate
    std::vector<std::pair<HomogPoly, unsigned>> pullback_factors;
    Rational pullback_scalar = 1;
    unsigned pullback_n = 1;
    /// second map for commute
    std::vector<std::string> psi;
    unsigned psi_n = 1;
    std::vector<std::pair<unsigned, ProjPoint>> preimages;
};

struct AnalysisConfig {
    std::size_t n = 0;
    std::vector<std::string> coords;
    SelfMap map;
    Divisor divisor;
    ProjPoint point;
    PlaceSet s;
    unsigned m_max = 12;
    unsigned n_max = 4;
    std::vector<Rational> epsilons;
    unsigned genericity_degree = 2;
    Declared declared;
    std::optional<SelfMap> psi;
};

/// Throws InputError (or a subclass) naming the offending field.
AnalysisConfig parse_config(const std::string& text);
AnalysisConfig load_config(const std::string& path);

}  // namespace orbitlab::cli

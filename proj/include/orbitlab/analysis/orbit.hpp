#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orbitlab/heights/heights.hpp"
#include "orbitlab/maps/selfmap.hpp"

namespace orbitlab::analysis {

using arith::Integer;
using arith::LogSum;
using arith::PlaceSet;
using arith::Rational;
using maps::Divisor;
using maps::HomogPoly;
using maps::ProjPoint;
using maps::SelfMap;

struct OrbitRecord {
    unsigned m = 0;
    ProjPoint point;
    double height = 0.0;
    std::size_t digits_max_coord = 0;
    LogSum lambda_outside_S;
    /// Empty when h = 0 (excluded from ratio statistics).
    std::optional<double> ratio;
    bool s_integral = false;
    std::size_t max_coord_index = 0;
    std::optional<unsigned> preperiodic_hit;
};

enum class OrbitStop { Completed, Indeterminate, SupportHit, Preperiodic, ResourceCap, HyperplaneHit };

std::string to_string(OrbitStop s);

struct OrbitOptions {
    heights::Thresholds thresholds;
    /// D-ratio mode: the orbit must stay off this hyperplane.
    std::optional<HomogPoly> avoid;
    /// Coordinates above this many bits stop the orbit with ResourceCap.
    std::size_t max_coordinate_bits = std::size_t{1} << 31;
    /// Steps computed past the first exact repeat (to exhibit the period).
    unsigned extend_after_repeat = 0;
};

struct OrbitResult {
    std::vector<OrbitRecord> records;
    OrbitStop stop = OrbitStop::Completed;
    std::string message;
};

/// Records for m = 0..m_max, stopping early with an explicit status.
OrbitResult run_orbit(const SelfMap& f, const ProjPoint& p, const Divisor& d, const PlaceSet& s, unsigned m_max,
                      const OrbitOptions& options = {});

struct ThinSetReport {
    double threshold = 0.0;
    /// Iterate indices m with ratio <= c - eps.
    std::vector<unsigned> indices;
    /// Records that carry a ratio.
    std::size_t considered = 0;
    double fraction = 0.0;
    /// Minimum ratio over records 0..k, one entry per considered record.
    std::vector<double> running_min;
};

/// Throws InputError unless eps > 0.
ThinSetReport thin_set_report(const std::vector<OrbitRecord>& records, const Rational& c, const Rational& eps);

/// Commuting sufficient condition for two-map mode: psi commutes with phi and
/// psi^n(Q_m) = phi^m(P) for each supplied pair (m, Q_m).
struct TwoMapCheck {
    bool commute = false;
    std::vector<std::pair<unsigned, bool>> preimages;
    bool ok() const;
};
TwoMapCheck two_map_check(const SelfMap& phi, const SelfMap& psi, const ProjPoint& p, unsigned n,
                          const std::vector<std::pair<unsigned, ProjPoint>>& preimages);

}  // namespace orbitlab::analysis

#include "orbitlab/analysis/orbit.hpp"

#include <algorithm>

#include "orbitlab/error.hpp"

namespace orbitlab::analysis {

std::string to_string(OrbitStop s) {
    switch (s) {
        case OrbitStop::Completed: return "completed";
        case OrbitStop::Indeterminate: return "indeterminate";
        case OrbitStop::SupportHit: return "support_hit";
        case OrbitStop::Preperiodic: return "preperiodic";
        case OrbitStop::ResourceCap: return "resource_cap";
        case OrbitStop::HyperplaneHit: return "hyperplane_hit";
    }
    return "completed";
}

namespace {

std::size_t max_bits(const ProjPoint& p) { return mpz_sizeinbase(p.max_abs().get_mpz_t(), 2); }

OrbitRecord make_record(unsigned m, const ProjPoint& p, const Divisor& d, const PlaceSet& s,
                        const OrbitOptions& options) {
    OrbitRecord r;
    r.m = m;
    r.point = p;
    r.height = heights::weil_height(p);
    r.digits_max_coord = arith::decimal_digits(p.max_abs());
    r.lambda_outside_S = heights::height_sum_outside_S(d, p, s);
    if (r.height > 0.0) r.ratio = heights::digit_ratio(r.lambda_outside_S, d.degree(), r.height, p);
    r.s_integral = options.thresholds.empty() ? r.lambda_outside_S.is_zero()
                                              : heights::is_S_integral(d, p, s, options.thresholds);
    r.max_coord_index = p.max_coord_index();
    return r;
}

}  // namespace

OrbitResult run_orbit(const SelfMap& f, const ProjPoint& p, const Divisor& d, const PlaceSet& s, unsigned m_max,
                      const OrbitOptions& options) {
    if (m_max < 1) throw InputError("m_max must be at least 1");
    if (p.dimension() != f.dimension() || d.dimension() != f.dimension()) {
        throw InputError("map, point and divisor dimensions differ");
    }
    OrbitResult out;
    ProjPoint current = p;
    std::optional<unsigned> repeat_at;
    for (unsigned m = 0; m <= m_max; ++m) {
        if (options.avoid && options.avoid->evaluate(current.coords()) == 0) {
            out.stop = OrbitStop::HyperplaneHit;
            out.message = "orbit meets " + options.avoid->to_string() + " = 0 at m = " + std::to_string(m);
            return out;
        }
        try {
            out.records.push_back(make_record(m, current, d, s, options));
        } catch (const SupportHit& e) {
            out.stop = OrbitStop::SupportHit;
            out.message = std::string(e.what()) + " (m = " + std::to_string(m) + ")";
            return out;
        }
        OrbitRecord& rec = out.records.back();
        for (std::size_t k = 0; k + 1 < out.records.size(); ++k) {
            if (out.records[k].point == current) {
                rec.preperiodic_hit = out.records[k].m;
                break;
            }
        }
        if (rec.preperiodic_hit && !repeat_at) repeat_at = m;
        if (repeat_at && m >= *repeat_at + options.extend_after_repeat) {
            out.stop = OrbitStop::Preperiodic;
            out.message = "phi^" + std::to_string(*repeat_at) + "(P) repeats an earlier point";
            return out;
        }
        if (m == m_max) break;
        if (max_bits(current) * f.degree() > options.max_coordinate_bits) {
            out.stop = OrbitStop::ResourceCap;
            out.message = "next iterate would exceed " + std::to_string(options.max_coordinate_bits) + " bits";
            return out;
        }
        try {
            current = maps::evaluate_map(f, current);
        } catch (const IndeterminatePoint& e) {
            out.stop = OrbitStop::Indeterminate;
            out.message = std::string(e.what()) + " (m = " + std::to_string(m) + ")";
            return out;
        }
    }
    return out;
}

ThinSetReport thin_set_report(const std::vector<OrbitRecord>& records, const Rational& c, const Rational& eps) {
    if (eps <= 0) throw InputError("epsilon must be positive");
    ThinSetReport out;
    out.threshold = Rational(c - eps).get_d();
    double low = 0.0;
    for (const auto& r : records) {
        if (!r.ratio) continue;
        low = out.considered == 0 ? *r.ratio : std::min(low, *r.ratio);
        ++out.considered;
        out.running_min.push_back(low);
        if (*r.ratio <= out.threshold) out.indices.push_back(r.m);
    }
    if (out.considered > 0) out.fraction = static_cast<double>(out.indices.size()) / out.considered;
    return out;
}

bool TwoMapCheck::ok() const {
    return commute && std::all_of(preimages.begin(), preimages.end(), [](const auto& x) { return x.second; });
}

TwoMapCheck two_map_check(const SelfMap& phi, const SelfMap& psi, const ProjPoint& p, unsigned n,
                          const std::vector<std::pair<unsigned, ProjPoint>>& preimages) {
    TwoMapCheck out;
    out.commute = maps::commute_check(phi, psi);
    for (const auto& [m, q] : preimages) {
        ProjPoint target = p;
        for (unsigned k = 0; k < m; ++k) target = maps::evaluate_map(phi, target);
        ProjPoint image = q;
        for (unsigned k = 0; k < n; ++k) image = maps::evaluate_map(psi, image);
        out.preimages.push_back({m, image == target});
    }
    return out;
}

}  // namespace orbitlab::analysis

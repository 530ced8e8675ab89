#include "orbitlab/analysis/constants.hpp"

#include "orbitlab/error.hpp"
#include "orbitlab/maps/morphism.hpp"

namespace orbitlab::analysis {

std::string to_string(NcSource s) {
    switch (s) {
        case NcSource::Exact: return "exact";
        case NcSource::LinearLowerBound: return "linear_lower_bound";
        case NcSource::Substitute: return "substitute";
    }
    return "exact";
}

Rational cn_value(unsigned deg_nc, std::size_t dimension, unsigned deg_d, const arith::Integer& e_n) {
    if (deg_d == 0 || e_n == 0) throw InputError("c_n needs positive degrees");
    Rational c(arith::Integer(static_cast<long>(deg_nc) - static_cast<long>(dimension + 1)), e_n * deg_d);
    c.canonicalize();
    return c;
}

namespace {

// Every substitute component appears in the pullback with at least its multiplicity.
bool contained(const Divisor& sub, const maps::FactoredPullback& fp) {
    std::vector<std::pair<maps::HomogPoly, unsigned>> have = fp.all_linear();
    have.insert(have.end(), fp.residual_factors.begin(), fp.residual_factors.end());
    for (const auto& [g, m] : sub.components()) {
        bool found = false;
        for (const auto& [h, k] : have) {
            if (poly::proportional(g, h)) {
                found = k >= m;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

}  // namespace

CnTable compute_cn(const Divisor& d, const SelfMap& f, unsigned n_max, const CnOptions& options) {
    if (n_max < 1) throw InputError("n_max must be at least 1");
    using maps::MorphismStatus;
    CnTable table;
    switch (f.status()) {
        case MorphismStatus::Verified: break;
        case MorphismStatus::Declared: table.declared = true; break;
        case MorphismStatus::Refuted: throw InputError("c_n needs a morphism; this map is not one");
        case MorphismStatus::Unknown: {
            const auto check = maps::morphism_check(f);
            if (check.verdict != maps::MorphismVerdict::Verified) {
                throw InputError("c_n needs a morphism; morphism_check is " + maps::to_string(check.verdict) +
                                 " (declare the map a morphism to proceed)");
            }
            break;
        }
    }
    if (options.substitute && options.substitute->dimension() != f.dimension()) {
        throw InputError("substitute divisor has the wrong dimension");
    }
    const std::size_t dim = f.dimension();
    SelfMap iterate = f;
    for (unsigned n = 1; n <= n_max; ++n) {
        if (n > 1) iterate = maps::compose_maps(f, iterate);
        const auto fp = maps::pullback_divisor(d, iterate, n);
        CnRow row;
        row.n = n;
        row.e_n = iterate.degree();
        row.total_degree = fp.total_degree;
        row.lin_nc_degree = fp.lin_nc_degree;
        row.nc_degree_exact = fp.nc_degree_exact;
        row.deg_used = fp.nc_degree_exact.value_or(fp.lin_nc_degree);
        row.source = fp.nc_degree_exact ? NcSource::Exact : NcSource::LinearLowerBound;
        if (options.substitute && options.substitute->degree() > row.deg_used && contained(*options.substitute, fp)) {
            row.deg_used = options.substitute->degree();
            row.source = NcSource::Substitute;
        }
        row.c_n = cn_value(row.deg_used, dim, d.degree(), row.e_n);
        row.c_lin = cn_value(row.lin_nc_degree, dim, d.degree(), row.e_n);
        if (row.source == NcSource::LinearLowerBound) table.lower_bound = true;
        if (table.rows.empty() || row.c_n > table.c_sup) {
            table.c_sup = row.c_n;
            table.n_sup = n;
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

DRatioResult compute_cn_dratio(unsigned deg_d, std::size_t dimension, unsigned d, const Rational& r, unsigned n,
                               const arith::Integer& e_n, unsigned deg_nc) {
    if (r < 1) throw InputError("the D-ratio r must be at least 1");
    if (deg_d == 0 || d == 0) throw InputError("degrees must be positive");
    DRatioResult out;
    out.lhs = Rational(e_n) - Rational(static_cast<long>(deg_nc) - static_cast<long>(dimension + 1), deg_d);
    out.lhs.canonicalize();
    Rational ratio = Rational(d) / r;
    Rational pw = 1;
    for (unsigned i = 0; i < n; ++i) pw *= ratio;
    out.rhs = pw;
    out.condition_holds = out.lhs < out.rhs;
    out.c_n = 1 - out.lhs / out.rhs;
    return out;
}

Rational lang_vojta_bound(unsigned deg_d2, const Rational& alpha, unsigned deg_d, unsigned d, unsigned n) {
    if (alpha >= deg_d2) throw InputError("alpha must be smaller than deg D_2");
    if (deg_d == 0 || d == 0) throw InputError("degrees must be positive");
    Rational out = (Rational(deg_d2) - alpha) / Rational(arith::pow(arith::Integer(d), n) * deg_d);
    out.canonicalize();
    return out;
}

}  // namespace orbitlab::analysis

#pragma once

#include <optional>
#include <vector>

#include "orbitlab/maps/divisor.hpp"
#include "orbitlab/maps/selfmap.hpp"

namespace orbitlab::analysis {

using arith::Rational;
using maps::Divisor;
using maps::SelfMap;

enum class NcSource { Exact, LinearLowerBound, Substitute };

std::string to_string(NcSource s);

struct CnRow {
    unsigned n = 0;
    unsigned e_n = 0;
    unsigned total_degree = 0;
    unsigned lin_nc_degree = 0;
    std::optional<unsigned> nc_degree_exact;
    /// Degree fed into c_n and where it came from.
    unsigned deg_used = 0;
    NcSource source = NcSource::Exact;
    Rational c_n;
    /// Linear variant (deg D_lin - (N+1)) / (deg D * e_n).
    Rational c_lin;
};

struct CnTable {
    std::vector<CnRow> rows;
    /// Max of c_n over the computed rows only.
    Rational c_sup;
    unsigned n_sup = 0;
    bool declared = false;
    /// True when any row's c_n is only a lower bound.
    bool lower_bound = false;
};

struct CnOptions {
    /// A subdivisor known to satisfy Vojta's inequality, used in place of D_nc when
    /// it is contained in the pullback and is larger.
    std::optional<Divisor> substitute;
};

/// (deg_nc - (N+1)) / (deg D * e_n)
Rational cn_value(unsigned deg_nc, std::size_t dimension, unsigned deg_d, const arith::Integer& e_n);

/// Rows n = 1..n_max.  Needs a verified or declared morphism; an unknown status is
/// settled with morphism_check first.  Throws InputError otherwise.
CnTable compute_cn(const Divisor& d, const SelfMap& f, unsigned n_max = 4, const CnOptions& options = {});

struct DRatioResult {
    bool condition_holds = false;
    /// e_n - (deg_nc - (N+1)) / deg D
    Rational lhs;
    /// (d / r)^n
    Rational rhs;
    Rational c_n;
};

/// Throws InputError when r < 1.
DRatioResult compute_cn_dratio(unsigned deg_d, std::size_t dimension, unsigned d, const Rational& r, unsigned n,
                               const arith::Integer& e_n, unsigned deg_nc);

/// (deg D_2 - alpha) / (deg D * d^n).  Throws InputError when alpha >= deg D_2.
Rational lang_vojta_bound(unsigned deg_d2, const Rational& alpha, unsigned deg_d, unsigned d, unsigned n);

}  // namespace orbitlab::analysis

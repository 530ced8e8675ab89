#include "orbitlab/cli/commands.hpp"

#include <sstream>

#include "orbitlab/analysis/constants.hpp"
#include "orbitlab/analysis/genericity.hpp"
#include "orbitlab/analysis/orbit.hpp"
#include "orbitlab/cli/report.hpp"
#include "orbitlab/error.hpp"

namespace orbitlab::cli {

namespace {

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return out + "\"";
}

Json header(const std::string& command, const AnalysisConfig& c) {
    Json j;
    j["command"] = command;
    j["n"] = c.n;
    j["map"] = c.map.to_string();
    j["map_degree"] = c.map.degree();
    j["morphism_status"] = maps::to_string(c.map.status());
    j["divisor"] = c.divisor.to_string();
    j["divisor_degree"] = c.divisor.degree();
    Json pt = Json::array();
    for (const auto& x : c.point.coords()) pt.push_back(x.get_str());
    j["point"] = pt;
    Json s = Json::array();
    for (const auto& p : c.s.primes()) s.push_back(p.get_str());
    j["s_primes"] = s;
    return j;
}

analysis::OrbitResult orbit_of(const AnalysisConfig& c, unsigned m_max) {
    analysis::OrbitOptions opt;
    opt.thresholds = c.declared.thresholds;
    opt.avoid = c.declared.avoid;
    return analysis::run_orbit(c.map, c.point, c.divisor, c.s, m_max, opt);
}

}  // namespace

CommandResult command_orbit(const AnalysisConfig& c, const Flags& f) {
    const unsigned m_max = f.m_max.value_or(c.m_max);
    const auto o = orbit_of(c, m_max);
    if (f.format == Format::Csv) return {orbit_csv(o.records), 0};
    Json j = header("orbit", c);
    j["m_max"] = m_max;
    j["stop"] = analysis::to_string(o.stop);
    j["message"] = o.message;
    Json recs = Json::array();
    for (const auto& r : o.records) recs.push_back(record_json(r));
    j["records"] = recs;
    const auto& eps = f.epsilons.empty() ? c.epsilons : f.epsilons;
    Json thin = Json::array();
    if (c.declared.c) {
        for (const auto& e : eps) {
            const auto rep = analysis::thin_set_report(o.records, *c.declared.c, e);
            Json t;
            t["c"] = rational_json(*c.declared.c);
            t["epsilon"] = rational_json(e);
            t["threshold"] = round12(rep.threshold);
            t["indices"] = rep.indices;
            t["considered"] = rep.considered;
            t["fraction"] = round12(rep.fraction);
            Json rm = Json::array();
            for (double x : rep.running_min) rm.push_back(round12(x));
            t["running_min"] = rm;
            thin.push_back(t);
        }
    }
    j["thin_set"] = thin;
    j["note"] = "thin-set listings are finite evidence over the computed records only";
    return {dump(j), 0};
}

CommandResult command_cn(const AnalysisConfig& c, const Flags& f) {
    const unsigned n_max = f.n_max.value_or(c.n_max);
    Json j = header("cn", c);
    j["n_max"] = n_max;
    std::ostringstream csv;
    if (c.declared.r) {
        // D-ratio mode: the map need not be a morphism.
        j["mode"] = "d_ratio";
        j["r"] = rational_json(*c.declared.r);
        csv << "n,e_n,deg_nc,lhs,rhs,condition_holds,c_n,c_n_float\n";
        Json rows = Json::array();
        SelfMap it = c.map;
        for (unsigned n = 1; n <= n_max; ++n) {
            if (n > 1) it = maps::compose_maps(c.map, it);
            const auto fp = maps::pullback_divisor(c.divisor, it, n);
            const unsigned deg_nc = fp.nc_degree_exact.value_or(fp.lin_nc_degree);
            const auto r = analysis::compute_cn_dratio(c.divisor.degree(), c.n, c.map.degree(), *c.declared.r, n,
                                                       it.degree(), deg_nc);
            Json row;
            row["n"] = n;
            row["e_n"] = it.degree();
            row["deg_nc"] = deg_nc;
            row["lower_bound"] = !fp.nc_degree_exact.has_value();
            row["lhs"] = rational_json(r.lhs);
            row["rhs"] = rational_json(r.rhs);
            row["condition_holds"] = r.condition_holds;
            row["c_n"] = rational_json(r.c_n);
            row["c_n_float"] = round12(r.c_n.get_d());
            rows.push_back(row);
            csv << n << ',' << it.degree() << ',' << deg_nc << ',' << r.lhs.get_str() << ',' << r.rhs.get_str() << ','
                << (r.condition_holds ? "true" : "false") << ',' << r.c_n.get_str() << ',' << fmt12(r.c_n.get_d())
                << '\n';
        }
        j["rows"] = rows;
    } else {
        analysis::CnOptions opt;
        opt.substitute = c.declared.substitute;
        const auto t = analysis::compute_cn(c.divisor, c.map, n_max, opt);
        j["mode"] = "morphism";
        j["declared"] = t.declared;
        csv << "n,e_n,lin_nc_degree,nc_degree_exact,deg_used,source,c_n,c_n_float\n";
        Json rows = Json::array();
        for (const auto& r : t.rows) {
            Json row;
            row["n"] = r.n;
            row["e_n"] = r.e_n;
            row["total_degree"] = r.total_degree;
            row["lin_nc_degree"] = r.lin_nc_degree;
            row["nc_degree_exact"] = r.nc_degree_exact ? Json(*r.nc_degree_exact) : Json(nullptr);
            row["deg_used"] = r.deg_used;
            row["source"] = analysis::to_string(r.source);
            row["c_n"] = rational_json(r.c_n);
            row["c_n_float"] = round12(r.c_n.get_d());
            row["c_lin"] = rational_json(r.c_lin);
            rows.push_back(row);
            csv << r.n << ',' << r.e_n << ',' << r.lin_nc_degree << ','
                << (r.nc_degree_exact ? std::to_string(*r.nc_degree_exact) : "") << ',' << r.deg_used << ','
                << analysis::to_string(r.source) << ',' << r.c_n.get_str() << ',' << fmt12(r.c_n.get_d()) << '\n';
        }
        j["rows"] = rows;
        j["c_sup"] = rational_json(t.c_sup);
        j["c_sup_float"] = round12(t.c_sup.get_d());
        j["n_sup"] = t.n_sup;
        j["lower_bound"] = t.lower_bound;
        j["note"] = "c_sup is the maximum over the computed n only";
    }
    if (f.format == Format::Csv) return {csv.str(), 0};
    return {dump(j), 0};
}

CommandResult command_pullback(const AnalysisConfig& c, const Flags& f) {
    const unsigned n = f.n_max.value_or(c.declared.pullback_n);
    if (n < 1) throw InputError("pullback needs n >= 1");
    const auto it = maps::iterate_map(c.map, n).iterate;
    const auto fp = maps::pullback_divisor(c.divisor, it, n);
    std::optional<bool> match;
    if (!c.declared.pullback_factors.empty() && n == c.declared.pullback_n) {
        match = poly::verify_factorization(fp.reassemble(), c.declared.pullback_factors, c.declared.pullback_scalar);
    }
    const int code = match && !*match ? 1 : 0;
    if (f.format == Format::Csv) {
        std::ostringstream csv;
        csv << "component,multiplicity,linear\n";
        for (const auto& [g, m] : fp.all_linear()) csv << csv_field(g.to_string()) << ',' << m << ",true\n";
        for (const auto& [g, m] : fp.residual_factors) csv << csv_field(g.to_string()) << ',' << m << ",false\n";
        return {csv.str(), code};
    }
    Json j = header("pullback", c);
    j["iterate"] = n;
    j["iterate_degree"] = it.degree();
    j["total_degree"] = fp.total_degree;
    j["factored"] = fp.to_string();
    j["scalar"] = rational_json(fp.scalar);
    Json comps = Json::array();
    for (const auto& [g, m] : fp.all_linear()) comps.push_back(Json{{"poly", g.to_string()}, {"mult", m}, {"linear", true}});
    for (const auto& [g, m] : fp.residual_factors)
        comps.push_back(Json{{"poly", g.to_string()}, {"mult", m}, {"linear", false}});
    j["components"] = comps;
    j["lin_nc_degree"] = fp.lin_nc_degree;
    j["nc_degree_exact"] = fp.nc_degree_exact ? Json(*fp.nc_degree_exact) : Json(nullptr);
    j["declared_match"] = match ? Json(*match) : Json(nullptr);
    return {dump(j), code};
}

CommandResult command_genericity(const AnalysisConfig& c, const Flags& f) {
    const unsigned m_max = f.m_max.value_or(c.m_max);
    const auto o = orbit_of(c, m_max);
    std::vector<ProjPoint> pts;
    for (const auto& r : o.records) pts.push_back(r.point);
    const auto g = analysis::genericity_test(pts, c.genericity_degree);
    if (f.format == Format::Csv) {
        std::ostringstream csv;
        csv << "points,degree,monomials,rank,empty_kernel,kernel_exact\n"
            << pts.size() << ',' << c.genericity_degree << ',' << g.monomials << ',' << g.rank << ','
            << (g.empty_kernel() ? "true" : "false") << ',' << (g.kernel_exact ? "true" : "false") << '\n';
        return {csv.str(), 0};
    }
    Json j = header("genericity", c);
    j["orbit_stop"] = analysis::to_string(o.stop);
    j["points"] = pts.size();
    j["degree"] = c.genericity_degree;
    j["monomials"] = g.monomials;
    j["rank"] = g.rank;
    j["empty_kernel"] = g.empty_kernel();
    Json k = Json::array();
    for (const auto& h : g.kernel) k.push_back(h.to_string());
    j["kernel"] = k;
    j["kernel_exact"] = g.kernel_exact;
    j["certificate_prime"] = g.certificate_prime ? Json(std::to_string(*g.certificate_prime)) : Json(nullptr);
    return {dump(j), 0};
}

CommandResult command_commute(const AnalysisConfig& c, const Flags& f) {
    if (!c.psi) throw InputError("commute needs declared.psi");
    const auto t = analysis::two_map_check(c.map, *c.psi, c.point, c.declared.psi_n, c.declared.preimages);
    const int code = t.ok() ? 0 : 1;
    if (f.format == Format::Csv) {
        std::ostringstream csv;
        csv << "m,preimage_ok\n";
        for (const auto& [m, ok] : t.preimages) csv << m << ',' << (ok ? "true" : "false") << '\n';
        return {"commute," + std::string(t.commute ? "true" : "false") + "\n" + csv.str(), code};
    }
    Json j = header("commute", c);
    j["psi"] = c.psi->to_string();
    j["psi_n"] = c.declared.psi_n;
    j["commute"] = t.commute;
    Json pre = Json::array();
    for (const auto& [m, ok] : t.preimages) pre.push_back(Json{{"m", m}, {"ok", ok}});
    j["preimages"] = pre;
    j["ok"] = t.ok();
    return {dump(j), code};
}

CommandResult command_verify_example(const std::string& name, Format format) {
    const auto r = verify_example(name);
    const int code = r.passed() ? 0 : 1;
    if (format == Format::Json) {
        Json j;
        j["example"] = name;
        j["pass"] = r.passed();
        Json checks = Json::array();
        for (const auto& ch : r.checks) checks.push_back(Json{{"label", ch.label}, {"pass", ch.pass}, {"detail", ch.detail}});
        j["checks"] = checks;
        return {dump(j), code};
    }
    std::ostringstream out;
    out << "example,check,result,detail\n";
    for (const auto& ch : r.checks)
        out << name << ',' << csv_field(ch.label) << ',' << (ch.pass ? "pass" : "FAIL") << ',' << csv_field(ch.detail) << '\n';
    return {out.str(), code};
}

}  // namespace orbitlab::cli

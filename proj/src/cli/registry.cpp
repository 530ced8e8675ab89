#include "orbitlab/cli/registry.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "orbitlab/analysis/constants.hpp"
#include "orbitlab/analysis/exponent.hpp"
#include "orbitlab/analysis/genericity.hpp"
#include "orbitlab/analysis/orbit.hpp"
#include "orbitlab/arith/matrix.hpp"
#include "orbitlab/error.hpp"
#include "orbitlab/maps/morphism.hpp"
#include "orbitlab/poly/parser.hpp"

namespace orbitlab::cli {

using arith::Integer;
using arith::PlaceSet;
using arith::Rational;
using maps::Divisor;
using maps::HomogPoly;
using maps::LinearForm;
using maps::SelfMap;

namespace {

HomogPoly P(const std::string& s, std::size_t n) { return poly::parse_polynomial(s, n); }

std::string lin(const std::vector<long>& c) {
    std::string s;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        if (!s.empty()) s += " + ";
        s += std::to_string(c[i]) + "*X" + std::to_string(i);
    }
    return "(" + s + ")";
}

std::string product(const std::vector<LinearForm>& forms) {
    std::string s;
    for (const auto& f : forms) s += (s.empty() ? "(" : "*(") + f.to_string() + ")";
    return s;
}

Rational q(long a, long b = 1) {
    Rational r(a, b);
    r.canonicalize();
    return r;
}

std::string str(const Rational& r) { return r.get_str(); }

class Checker {
public:
    explicit Checker(ExampleReport& r) : r_(r) {}
    bool operator()(const std::string& label, bool ok, const std::string& detail = "") {
        r_.checks.push_back({label, ok, detail});
        return ok;
    }

private:
    ExampleReport& r_;
};

Integer coeff(const HomogPoly& f, const poly::Monomial& m) {
    for (const auto& t : f.terms())
        if (t.exps == m) return t.coef;
    return 0;
}

bool det_nonzero(const std::vector<LinearForm>& forms) {
    arith::IntMatrix m;
    for (const auto& f : forms) m.push_back(f.linear_coefficients());
    return arith::determinant(std::move(m)) != 0;
}

// --- examples ---------------------------------------------------------------

void run_schmidt(Checker& check) {
    const SelfMap f = schmidt_map();
    const Divisor z = Divisor::from_strings({{"Z", 1}}, 2);
    check("morphism", maps::morphism_check(f).verdict == maps::MorphismVerdict::Verified);
    const SelfMap f2 = maps::iterate_map(f, 2).iterate;
    const HomogPoly pulled = maps::composed_pullback(z, f2);
    const HomogPoly expected = P("X^3*(X+Y+Z)*Y^3*Z^9", 2);
    check("(phi^2)^*Z = X^3 (X+Y+Z) Y^3 Z^9", poly::proportional(pulled, expected), pulled.to_string());
    const auto fp = maps::pullback_divisor(z, f2, 2);
    check("factored pullback", fp.reassemble() == pulled && fp.distinct_linear().size() == 4, fp.to_string());
    check("lin_nc_degree = 4", fp.lin_nc_degree == 4, std::to_string(fp.lin_nc_degree));
    const auto t = analysis::compute_cn(z, f, 2);
    check("c_2 = 1/16", t.rows.at(1).c_n == q(1, 16), str(t.rows.at(1).c_n));
    const auto img = maps::evaluate_map(f, maps::reduce_point({100, 2000, 1}));
    const Integer fl = img[0] / img[1];
    check("floor(a/b) at phi([100:2000:1]) = 7615", fl == 7615, img.to_string());
}

void run_schmidt_high(Checker& check) {
    const SelfMap f = schmidt_high_map();
    const Divisor d = Divisor::from_strings({{"X2", 1}}, 2);
    check("morphism", maps::morphism_check(f).verdict == maps::MorphismVerdict::Verified);
    std::vector<LinearForm> ls;
    for (long a = 1; a <= 3; ++a) ls.push_back(P(lin({1, a, a * a}), 2));
    check("L_a in general position", poly::general_position_check(ls, 2));
    const SelfMap f3 = maps::iterate_map(f, 3).iterate;
    const auto fp = maps::pullback_divisor(d, f3, 3);
    const auto comps = fp.components();
    std::vector<LinearForm> want = ls;
    for (std::size_t i = 0; i < 3; ++i) want.push_back(HomogPoly::variable(3, i));
    bool same = comps.size() == want.size();
    for (const auto& w : want)
        same = same && std::any_of(comps.begin(), comps.end(), [&](const auto& c) { return poly::proportional(c, w); });
    check("(phi^3)^*X2 supported on L_1 L_2 L_3 X0 X1 X2", same, fp.to_string());
    check("lin_nc_degree = 6", fp.lin_nc_degree == 6, std::to_string(fp.lin_nc_degree));
    const auto t = analysis::compute_cn(d, f, 3);
    check("c_3 = 1/9", t.rows.at(2).c_n == q(1, 9), str(t.rows.at(2).c_n));
}

void run_vojtasemi(Checker& check) {
    const SelfMap f = vojtasemi_map();
    const Divisor z = Divisor::from_strings({{"Z", 1}}, 2);
    const HomogPoly l = P("X+5*Y+7*Z", 2), qf = P("X^2+X*Y+2*Y^2+Z^2", 2);
    const std::vector<Integer> e1{0, 0, 1}, e2{0, 1, 0};
    check("L, Q nonzero at [0:0:1] and [0:1:0]",
          l.evaluate(e1) != 0 && l.evaluate(e2) != 0 && qf.evaluate(e1) != 0 && qf.evaluate(e2) != 0);
    const HomogPoly lq = l * qf;
    check("Q has a Y^2 term, LQ a Y^3 term", coeff(qf, {0, 2, 0}) != 0 && coeff(lq, {0, 3, 0}) != 0);
    const SelfMap f2 = maps::iterate_map(f, 2).iterate;
    const HomogPoly pulled = maps::composed_pullback(z, f2);
    check("(phi^2)^*Z = L Q Y^2 Z^4", poly::proportional(pulled, P("(X+5*Y+7*Z)*(X^2+X*Y+2*Y^2+Z^2)*Y^2*Z^4", 2)),
          pulled.to_string());
    const auto fp = maps::pullback_divisor(z, f2, 2);
    check("D_1 has 4 distinct components", fp.components().size() == 4, fp.to_string());
    check("Lang-Vojta bound (4, 3, 1, 3, 2) = 1/9", analysis::lang_vojta_bound(4, q(3), 1, 3, 2) == q(1, 9));
    const auto o = analysis::run_orbit(f, maps::reduce_point({1, 1000000, 1}), z, PlaceSet{}, 8);
    bool y_max = o.records.size() == 9;
    for (const auto& r : o.records) y_max = y_max && r.max_coord_index == 1;
    check("orbit of [1:10^6:1] keeps Y largest for m <= 8", y_max, analysis::to_string(o.stop));
}

void run_archs(Checker& check) {
    const SelfMap f = archs_map();
    const Divisor d = Divisor::from_strings({{"Y+Z", 1}, {"Y-Z", 1}}, 2);
    const HomogPoly pulled = maps::composed_pullback(d, f);
    check("phi^*D = 4 X^2 Y Z^2 (Y+Z)", pulled == P("4*X^2*Y*Z^2*(Y+Z)", 2), pulled.to_string());
    long triples = 0;
    bool ok = true;
    for (long a = -30; a <= 30 && ok; ++a) {
        for (long b = -30; b <= 30 && ok; ++b) {
            for (long c = -30; c <= 30; ++c) {
                if (a == 0 || b == 0 || c == 0 || b + c == 0) continue;
                if (std::gcd(std::gcd(a, b), c) != 1) continue;
                ++triples;
                const Integer lhs = std::max({std::labs(a), std::labs(b), std::labs(c)});
                const Integer rhs = Integer(std::labs(a)) * std::labs(b) * std::labs(c) * std::labs(b + c);
                if (lhs > rhs) {
                    ok = false;
                    break;
                }
            }
        }
    }
    check("max(|a|,|b|,|c|) <= |abc(b+c)| on all coprime triples up to 30", ok,
          std::to_string(triples) + " triples");
    analysis::CnOptions opt;
    opt.substitute = Divisor::from_strings({{"X", 1}, {"Y", 1}, {"Z", 1}, {"Y+Z", 1}}, 2);
    const auto t = analysis::compute_cn(d, f, 1, opt);
    check("c = 1/6 with D_1 = XYZ(Y+Z)", t.rows.at(0).c_n == q(1, 6) && t.rows.at(0).source == analysis::NcSource::Substitute,
          str(t.rows.at(0).c_n));
}

void run_bad(Checker& check) {
    const SelfMap f = bad_map();
    const Divisor z = Divisor::from_strings({{"Z", 1}}, 2);
    const auto o = analysis::run_orbit(f, maps::reduce_point({3, 2, 1}), z, PlaceSet{}, 12);
    check("orbit computed to m = 12", o.records.size() == 13, analysis::to_string(o.stop));
    bool odd = true, unit = true;
    for (const auto& r : o.records) {
        odd = odd && mpz_odd_p(r.point[2].get_mpz_t());
        unit = unit && arith::prime_to_S_part(r.point[1], PlaceSet{2}) == 1;
    }
    check("c_m odd for m <= 12", odd);
    check("b_m is an S-unit for S = {inf, 2}", unit);
    if (o.records.size() == 13) {
        constexpr double kTol = 0.02;
        const double target = std::log(2.0) / std::log(3.0);
        const double r12 = *o.records[12].ratio, r4 = *o.records[4].ratio;
        check("|ratio(12) - log 2/log 3| <= 0.02", std::fabs(r12 - target) <= kTol, std::to_string(r12));
        check("ratio(12) closer than ratio(4)", std::fabs(r12 - target) < std::fabs(r4 - target), std::to_string(r4));
    }
    const auto t = analysis::compute_cn(z, f, 2);
    check("c_n = -1/3^n < 0", t.rows.at(0).c_n == q(-1, 3) && t.rows.at(1).c_n == q(-1, 9));
}

void run_ratl_infty(Checker& check) {
    constexpr std::size_t kN = 4;
    constexpr unsigned kM = 15;
    analysis::ExponentOrbit ex;
    try {
        ex = analysis::exponent_orbit_check(kN, kM);
    } catch (const VerificationError& e) {
        check("exponent recurrence", false, e.what());
        return;
    }
    check("characteristic polynomial (x-3)(x-2)^3", ex.charpoly_ok && ex.charpoly == std::vector<Integer>{24, -44, 30, -9, 1});
    check("single Jordan block for eigenvalue 2", ex.single_block);
    check("A^m (4,3,2,1) matches direct iteration for m <= 15", ex.direct_ok && ex.direct_checked == kM);
    check("strict decrease a_0 > a_1 > a_2 > a_3", ex.strictly_decreasing);
    // Reduced points are [2^a0 : ... : 2^a3 : 1], so D = (X4) pulls back to 1 everywhere.
    const SelfMap f = analysis::ratl_infty_map(kN);
    const Divisor d = Divisor::from_strings({{"X4", 1}}, kN);
    const auto o = analysis::run_orbit(f, maps::reduce_point({16, 8, 4, 2, 1}), d, PlaceSet{2}, 8);
    bool integral = o.records.size() == 9;
    for (const auto& r : o.records) integral = integral && r.s_integral;
    for (const auto& v : ex.vectors) integral = integral && v.back() > 0;
    check("orbit S-integral for S = {inf, 2}", integral);
    const auto more = analysis::exponent_orbit_check(kN, 19);
    std::vector<std::vector<Integer>> exps;
    for (auto v : more.vectors) {
        v.push_back(0);
        exps.push_back(std::move(v));
    }
    const auto g = analysis::genericity_test_exponents(2, exps, 2);
    check("first 20 points lie on no conic-degree hypersurface", exps.size() == 20 && g.empty_kernel(),
          "rank " + std::to_string(g.rank) + " of " + std::to_string(g.monomials));
}

void run_ratl_wo_dratio(Checker& check) {
    const auto ls = ratl_wo_dratio_lines();
    check("L_i in general position", poly::general_position_check(ls, 2));
    bool alpha = true;
    for (const auto& l : ls) alpha = alpha && l.linear_coefficients()[0] != 0;
    check("alpha_i != 0", alpha);
    const SelfMap f = ratl_wo_dratio_map();
    const auto m1 = maps::morphism_check(f);
    check("phi undefined at [1:0:0]", m1.verdict == maps::MorphismVerdict::Refuted && m1.witness &&
                                          *m1.witness == maps::reduce_point({1, 0, 0}));
    const auto it = maps::iterate_map(f, 2);
    SelfMap psi = it.iterate;
    check("phi^2 cancels Z^5 and has degree 20", psi.degree() == 20 && it.cancellations[1].to_string() == "Z^5",
          it.cancellations[1].to_string());
    const auto m2 = maps::morphism_check(psi);
    check("phi^2 is a morphism", m2.verdict == maps::MorphismVerdict::Verified, m2.certificate);
    if (m2.verdict != maps::MorphismVerdict::Verified) return;
    psi.set_status(maps::MorphismStatus::Verified);
    const auto t = analysis::compute_cn(Divisor::from_strings({{"X", 1}}, 2), psi, 1);
    check("deg_nc >= 4 and c_1 = 1/20", t.rows.at(0).deg_used >= 4 && t.rows.at(0).c_n == q(1, 20),
          str(t.rows.at(0).c_n));
}

std::string names_of(const std::vector<std::size_t>& idx, const std::vector<std::string>& names) {
    std::string s;
    for (auto i : idx) s += (s.empty() ? "" : ", ") + names[i];
    return s;
}

// First 5-subset with vanishing determinant, or empty.
std::vector<std::size_t> dependent_five(const std::vector<LinearForm>& forms) {
    const std::size_t n = forms.size();
    std::vector<std::size_t> pick{0, 1, 2, 3, 4};
    if (n < 5) return {};
    for (;;) {
        std::vector<LinearForm> sub;
        for (auto i : pick) sub.push_back(forms[i]);
        if (!det_nonzero(sub)) return pick;
        std::size_t i = 5;
        while (i-- > 0 && pick[i] == i + n - 5) {
        }
        if (i > 4) return {};
        ++pick[i];
        for (std::size_t j = i + 1; j < 5; ++j) pick[j] = pick[j - 1] + 1;
    }
}

// Conditions (1)-(4), the second-iterate pullback of X3 and its general position,
// for L_{i,j} with a = 4i + offset + j.
void dratio_conditions(Checker& check, long offset, const std::string& tag) {
    constexpr unsigned d = 5;
    std::vector<std::vector<LinearForm>> l(4);
    for (unsigned i = 0; i < 4; ++i) l[i] = dratio_lines(i, d, offset);
    std::vector<LinearForm> m;
    for (unsigned k = 0; k < 4; ++k) m.push_back(dratio_m(k));
    std::vector<LinearForm> x;
    for (std::size_t i = 0; i < 5; ++i) x.push_back(HomogPoly::variable(5, i));

    bool c1 = true;
    for (const auto& row : l)
        for (const auto& f : row) c1 = c1 && f.linear_coefficients()[4] != 0;
    std::vector<LinearForm> fifteen;
    std::vector<std::string> names;
    for (unsigned i = 0; i < 3; ++i) {
        fifteen.insert(fifteen.end(), l[i].begin(), l[i].end());
        for (unsigned j = 1; j < d; ++j) names.push_back("L" + std::to_string(i) + std::to_string(j));
    }
    fifteen.insert(fifteen.end(), m.begin(), m.begin() + 3);
    for (unsigned k = 0; k < 3; ++k) names.push_back("M" + std::to_string(k));
    const auto dep = dependent_five(fifteen);
    c1 = c1 && dep.empty();
    check(tag + "condition (1)", c1, dep.empty() ? "" : "dependent: " + names_of(dep, names));

    bool c2 = true, c3 = true, c4 = true;
    for (unsigned i = 0; i < 3; ++i) {
        for (unsigned j0 = 0; j0 < d - 1; ++j0)
            for (unsigned j1 = 0; j1 < d - 1; ++j1)
                for (unsigned j2 = 0; j2 < d - 1; ++j2)
                    for (unsigned j3 = 0; j3 < d - 1; ++j3)
                        c2 = c2 && det_nonzero({x[i], l[0][j0], l[1][j1], l[2][j2], l[3][j3]});
        for (unsigned k = 0; k < 4; ++k) {
            std::vector<unsigned> rest;
            for (unsigned t = 0; t < 4; ++t)
                if (t != k) rest.push_back(t);
            for (unsigned a = 0; a < d - 1; ++a)
                for (unsigned b = 0; b < d - 1; ++b)
                    for (unsigned c = 0; c < d - 1; ++c)
                        c3 = c3 && det_nonzero({x[i], m[k], l[rest[0]][a], l[rest[1]][b], l[rest[2]][c]});
            for (unsigned k2 = k + 1; k2 < 4; ++k2) {
                std::vector<unsigned> two;
                for (unsigned t = 0; t < 4; ++t)
                    if (t != k && t != k2) two.push_back(t);
                for (unsigned a = 0; a < d - 1; ++a)
                    for (unsigned b = 0; b < d - 1; ++b)
                        c4 = c4 && det_nonzero({x[i], m[k], m[k2], l[two[0]][a], l[two[1]][b]});
            }
        }
    }
    check(tag + "condition (2)", c2);
    check(tag + "condition (3)", c3);
    check(tag + "condition (4)", c4);

    const SelfMap f = dratio_map(d, offset);
    const SelfMap f2 = maps::iterate_map(f, 2).iterate;
    const Divisor h = Divisor::from_strings({{"X3", 1}}, 4);
    const HomogPoly pulled = maps::composed_pullback(h, f2);
    std::vector<std::pair<HomogPoly, unsigned>> claimed{{m[0], d - 2}, {m[1], 1}, {m[2], 1}};
    for (const auto& f0 : l[0]) claimed.push_back({f0, d - 2});
    for (unsigned i = 1; i < 3; ++i)
        for (const auto& fi : l[i]) claimed.push_back({fi, 1});
    bool exact = false;
    for (const Rational& s : {Rational(1), Rational(-1)}) exact = exact || poly::verify_factorization(pulled, claimed, s);
    check(tag + "(phi^2)^*X3 = M0^3 M1 M2 prod L0j^3 prod L1j prod L2j", exact);
    std::vector<LinearForm> forms;
    for (const auto& [g, k] : claimed) forms.push_back(g);
    const bool gp = forms.size() == 15 && poly::general_position_check(forms, 4);
    check(tag + "the 15 forms are in general position", gp, gp ? "" : "largest general-position subset has " +
        std::to_string(poly::max_general_position_subset(forms, 4).size()) + " forms");
    const auto fp = maps::pullback_divisor(h, f2, 2);
    check(tag + "lin_nc_degree = 15", fp.lin_nc_degree == 15, std::to_string(fp.lin_nc_degree));
}

void run_dratio(Checker& check) {
    dratio_conditions(check, 2, "");
    const auto r5 = analysis::compute_cn_dratio(1, 4, 5, q(5, 4), 2, 25, 15);
    check("d = 5: condition holds, c_2 = 1/16", r5.condition_holds && r5.c_n == q(1, 16), str(r5.c_n));
    const auto r4 = analysis::compute_cn_dratio(1, 4, 4, q(4, 3), 2, 16, 12);
    check("d = 4: 9 < 9 fails", !r4.condition_holds && r4.lhs == 9 && r4.rhs == 9);
    dratio_conditions(check, 3, "a = 4i+3+j: ");
}

void run_silverman(Checker& check) {
    const SelfMap f = silverman_map();
    const Divisor y = Divisor::from_strings({{"Y", 1}}, 1);
    const auto fp = maps::pullback_divisor(y, maps::iterate_map(f, 2).iterate, 2);
    const auto red = poly::binary_form_reduced_degree(maps::composed_pullback(y, maps::iterate_map(f, 2).iterate));
    check("reduced degree of (phi^2)^*Y is 3", red.distinct_root_count == 3 && fp.nc_degree_exact == 3u);
    const auto t = analysis::compute_cn(y, f, 2);
    check("c_2 = 1/4", t.rows.at(1).c_n == q(1, 4), str(t.rows.at(1).c_n));
}

const std::map<std::string, std::function<void(Checker&)>>& table() {
    static const std::map<std::string, std::function<void(Checker&)>> t{
        {"schmidt", run_schmidt},   {"schmidt-high", run_schmidt_high},
        {"vojtasemi", run_vojtasemi}, {"archS", run_archs},
        {"bad", run_bad},           {"ratl-infty", run_ratl_infty},
        {"ratl-wo-dratio", run_ratl_wo_dratio}, {"dratio", run_dratio},
        {"silverman", run_silverman}};
    return t;
}

}  // namespace

bool ExampleReport::passed() const { return !checks.empty() && first_failure() == nullptr; }

const CheckResult* ExampleReport::first_failure() const {
    for (const auto& c : checks)
        if (!c.pass) return &c;
    return nullptr;
}

const std::vector<std::string>& example_names() {
    static const std::vector<std::string> names{"schmidt", "schmidt-high", "vojtasemi", "archS", "bad",
                                                "ratl-infty", "ratl-wo-dratio", "dratio", "silverman"};
    return names;
}

bool is_example(const std::string& name) { return table().count(name) > 0; }

ExampleReport verify_example(const std::string& name) {
    const auto it = table().find(name);
    if (it == table().end()) throw InputError("unknown example '" + name + "'");
    ExampleReport r;
    r.name = name;
    Checker check(r);
    const auto start = std::chrono::steady_clock::now();
    try {
        it->second(check);
    } catch (const std::exception& e) {
        check("no exception", false, e.what());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

SelfMap schmidt_map() { return SelfMap::from_strings({"Y^4 + Z^4", "X^3*(X+Y+Z)", "Y*Z^3"}, 2); }

SelfMap schmidt_high_map() {
    std::vector<LinearForm> ls;
    for (long a = 1; a <= 3; ++a) ls.push_back(P(lin({1, a, a * a}), 2));
    return SelfMap::from_strings({product(ls), "X0^3", "X1*X2^2"}, 2);
}

SelfMap vojtasemi_map() {
    return SelfMap::from_strings({"X^3", "(X+5*Y+7*Z)*(X^2+X*Y+2*Y^2+Z^2)", "Y*Z^2"}, 2);
}

SelfMap archs_map() {
    return SelfMap::from_strings({"X^3 + 2*Y^3 + 3*Z^3", "X^2*Y + Y*Z^2 + Z^3", "X^2*Y - Y*Z^2 - Z^3"}, 2);
}

SelfMap bad_map() { return SelfMap::from_strings({"X^3", "Y^3", "Z^2*(Y-Z)"}, 2); }

std::vector<LinearForm> ratl_wo_dratio_lines() {
    std::vector<LinearForm> out;
    for (long i = 1; i <= 4; ++i) out.push_back(P(lin({1, i, i * i}), 2));
    return out;
}

SelfMap ratl_wo_dratio_map() { return SelfMap::from_strings({"Y^5", product(ratl_wo_dratio_lines()) + "*Z", "Z^5"}, 2); }

std::vector<LinearForm> dratio_lines(unsigned i, unsigned d, long offset) {
    std::vector<LinearForm> out;
    for (unsigned j = 1; j < d; ++j) {
        const long a = 4 * static_cast<long>(i) + offset + j;
        out.push_back(P(lin({1, a, a * a, a * a * a, a * a * a * a}), 4));
    }
    return out;
}

LinearForm dratio_m(unsigned k) {
    std::vector<long> c{1, 1, 1, 1, 0};
    c.at(k) = 0;
    return P(lin(c), 4);
}

SelfMap dratio_map(unsigned d, long offset) {
    if (d < 3) throw InputError("the D-ratio example needs d >= 3");
    std::vector<std::string> c;
    for (unsigned i = 0; i < 4; ++i) c.push_back("(" + dratio_m(i).to_string() + ")*" + product(dratio_lines(i, d, offset)));
    c.insert(c.begin() + 3, "X0^" + std::to_string(d - 2) + "*X1*X2");
    return SelfMap::from_strings(c, 4);
}

SelfMap silverman_map() { return SelfMap::from_strings({"Y^2", "X^2 - Y^2"}, 1); }

}  // namespace orbitlab::cli

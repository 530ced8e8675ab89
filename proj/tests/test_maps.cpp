#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "orbitlab/error.hpp"
#include "orbitlab/maps/divisor.hpp"
#include "orbitlab/maps/morphism.hpp"
#include "orbitlab/poly/parser.hpp"

using namespace orbitlab;
using namespace orbitlab::maps;
using arith::Integer;

namespace doctest {
template <>
struct StringMaker<HomogPoly> {
    static String convert(const HomogPoly& p) { return p.to_string().c_str(); }
};
template <>
struct StringMaker<ProjPoint> {
    static String convert(const ProjPoint& p) { return p.to_string().c_str(); }
};
}  // namespace doctest

namespace {

HomogPoly P(const std::string& s, std::size_t n = 2) { return poly::parse_polynomial(s, n); }

ProjPoint pt(std::vector<Integer> v) { return reduce_point(std::move(v)); }

SelfMap schmidt() { return SelfMap::from_strings({"Y^4 + Z^4", "X^3*(X+Y+Z)", "Y*Z^3"}, 2); }
SelfMap archs() {
    return SelfMap::from_strings({"X^3 + 2*Y^3 + 3*Z^3", "X^2*Y + Y*Z^2 + Z^3", "X^2*Y - Y*Z^2 - Z^3"}, 2);
}
SelfMap vojtasemi() {
    return SelfMap::from_strings({"X^3", "(X+5*Y+7*Z)*(X^2+X*Y+2*Y^2+Z^2)", "Y*Z^2"}, 2);
}
SelfMap bad() { return SelfMap::from_strings({"X^3", "Y^3", "Z^2*(Y-Z)"}, 2); }
SelfMap silverman() { return SelfMap::from_strings({"Y^2", "X^2 - Y^2"}, 1); }

SelfMap ratl_infty(std::size_t n) {
    std::vector<std::string> c{"X0^3", "X1^3"};
    for (std::size_t i = 2; i <= n; ++i) {
        c.push_back("X" + std::to_string(i - 1) + "*X" + std::to_string(i) + "^2");
    }
    return SelfMap::from_strings(c, n);
}

std::string ratl_line(int i) {
    return "(X+" + std::to_string(i) + "*Y+" + std::to_string(i * i) + "*Z)";
}
SelfMap ratl_wo_dratio() {
    std::string prod;
    for (int i = 1; i <= 4; ++i) prod += ratl_line(i) + "*";
    return SelfMap::from_strings({"Y^5", prod + "Z", "Z^5"}, 2);
}

std::string dratio_line(int i, int j) {
    const long a = 4 * i + 2 + j;
    return "(X0+" + std::to_string(a) + "*X1+" + std::to_string(a * a) + "*X2+" + std::to_string(a * a * a) +
           "*X3+" + std::to_string(a * a * a * a) + "*X4)";
}
SelfMap dratio() {
    const char* m[] = {"(X1+X2+X3)", "(X0+X2+X3)", "(X0+X1+X3)", "(X0+X1+X2)"};
    std::vector<std::string> c;
    for (int i = 0; i < 4; ++i) {
        std::string s = m[i];
        for (int j = 1; j <= 4; ++j) s += "*" + dratio_line(i, j);
        c.push_back(s);
    }
    c.insert(c.begin() + 3, "X0^3*X1*X2");
    return SelfMap::from_strings(c, 4);
}

std::vector<std::pair<LinearForm, unsigned>> sorted_linear(const FactoredPullback& fp) {
    auto v = fp.all_linear();
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first.to_string() < b.first.to_string(); });
    return v;
}

}  // namespace

TEST_CASE("reduce_point") {
    CHECK(pt({2, 4, 6}).coords() == std::vector<Integer>{1, 2, 3});
    CHECK(pt({-3, 6, -9}).coords() == std::vector<Integer>{1, -2, 3});
    CHECK(pt({4096, 512, 128, 16, 2}).coords() == std::vector<Integer>{2048, 256, 64, 8, 1});
    CHECK(pt({0, -4, 6}).coords() == std::vector<Integer>{0, 2, -3});
    CHECK_THROWS_AS(pt({0, 0, 0}), InputError);
    CHECK(parse_point("[4:3:12]").coords() == std::vector<Integer>{4, 3, 12});
    CHECK(parse_point("-2:4").coords() == std::vector<Integer>{1, -2});
    CHECK_THROWS_AS(parse_point("[1:x]"), InputError);
    CHECK(pt({3, -7, 7}).max_coord_index() == 1);
}

TEST_CASE("reduce_point is idempotent") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> c(-1000, 1000);
    for (int i = 0; i < 500; ++i) {
        std::vector<Integer> v{c(rng) * 6, c(rng) * 6, c(rng) * 6 + 1};
        const ProjPoint p = pt(v);
        CHECK(pt(p.coords()) == p);
    }
}

TEST_CASE("self-map construction") {
    const auto f = schmidt();
    CHECK(f.degree() == 4);
    CHECK(f.dimension() == 2);
    CHECK(f.pool().linear().size() == 4);
    CHECK_THROWS_AS(SelfMap::from_strings({"X^2", "Y"}, 1), InputError);
    CHECK_THROWS_AS(SelfMap::from_strings({"0", "0"}, 1), InputError);
    CHECK_THROWS_AS(SelfMap::from_strings({"X", "Y"}, 2), InputError);
    // Common monomial and pool factors are cancelled on construction.
    const auto g = SelfMap::from_strings({"X*Z*(X+Y)", "Y*Z*(X+Y)", "Z^2*(X+Y)"}, 2);
    CHECK(g.degree() == 1);
    CHECK(g.coords()[0] == P("X"));
    CHECK(g.construction_cancellation().to_string() == "Z*(X + Y)");
}

TEST_CASE("evaluate_map") {
    const auto q = evaluate_map(schmidt(), pt({100, 2000, 1}));
    CHECK(q.coords() == std::vector<Integer>{Integer("16000000000001"), 2101000000, 2000});
    CHECK(Integer(q[0] / q[1]) == 7615);
    const auto id = SelfMap::from_strings({"X", "Y", "Z"}, 2);
    CHECK(evaluate_map(id, pt({5, -7, 3})) == pt({5, -7, 3}));
    CHECK_THROWS_AS(evaluate_map(ratl_infty(4), pt({0, 0, 0, 0, 1})), IndeterminatePoint);
    CHECK(evaluate_map(ratl_infty(4), pt({16, 8, 4, 2, 1})) == pt({4096, 512, 128, 16, 2}));
}

TEST_CASE("iterate_map") {
    const auto s = iterate_map(schmidt(), 2);
    CHECK(s.degrees == std::vector<unsigned>{4, 16});
    CHECK(s.iterate.degree() == 16);

    const auto r = iterate_map(ratl_wo_dratio(), 2);
    CHECK(r.degrees == std::vector<unsigned>{5, 20});
    CHECK(r.cancellations[1].to_string() == "Z^5");

    const auto d = iterate_map(dratio(), 2);
    CHECK(d.degrees == std::vector<unsigned>{5, 25});
    CHECK(d.cancellations[1].trivial());

    CHECK_THROWS_AS(iterate_map(schmidt(), 0), InputError);
}

TEST_CASE("iterate respects the term cap") {
    const auto saved = poly::term_cap();
    poly::set_term_cap(50);
    CHECK_THROWS_AS(iterate_map(archs(), 3), ResourceCapExceeded);
    poly::set_term_cap(saved);
}

TEST_CASE("pullback_divisor") {
    const Divisor z = Divisor::from_strings({{"Z", 1}}, 2);
    {
        const auto fp = pullback_divisor(z, iterate_map(schmidt(), 2).iterate, 2);
        const auto lin = sorted_linear(fp);
        REQUIRE(lin.size() == 4);
        CHECK(lin[0].first == P("X"));
        CHECK(lin[0].second == 3);
        CHECK(lin[1].first == P("X+Y+Z"));
        CHECK(lin[1].second == 1);
        CHECK(lin[2].first == P("Y"));
        CHECK(lin[2].second == 3);
        CHECK(lin[3].first == P("Z"));
        CHECK(lin[3].second == 9);
        CHECK(fp.residual_factors.empty());
        CHECK(fp.lin_nc_degree == 4);
        CHECK(fp.total_degree == 16);
        CHECK(fp.nc_degree_exact == 4u);
        CHECK(fp.reassemble() == composed_pullback(z, iterate_map(schmidt(), 2).iterate));
    }
    for (unsigned n = 1; n <= 4; ++n) {
        const auto fp = pullback_divisor(z, iterate_map(bad(), n).iterate, n);
        CHECK(fp.lin_nc_degree <= 2);
        CHECK(fp.total_degree == arith::pow(Integer(3), n));
    }
    CHECK(pullback_divisor(z, iterate_map(bad(), 4).iterate, 4).lin_nc_degree == 2);
    {
        const auto fp = pullback_divisor(z, iterate_map(vojtasemi(), 2).iterate, 2);
        const auto comps = fp.components();
        REQUIRE(comps.size() == 4);
        CHECK(fp.to_string() == "Y^2*Z^4*(X + 5*Y + 7*Z)*(X^2 + X*Y + 2*Y^2 + Z^2)");
        CHECK(fp.lin_nc_degree == 3);
        CHECK_FALSE(fp.nc_degree_exact.has_value());
    }
    {
        const Divisor d = Divisor::from_strings({{"Y+Z", 1}, {"Y-Z", 1}}, 2);
        const auto fp = pullback_divisor(d, archs(), 1);
        CHECK(fp.scalar == 4);
        CHECK(fp.reassemble() == P("4*X^2*Y*Z^2*(Y+Z)"));
    }
    {
        // N = 1: reduced degree counts irrational roots too.
        const Divisor y = Divisor::from_strings({{"Y", 1}}, 1);
        const auto fp = pullback_divisor(y, iterate_map(silverman(), 2).iterate, 2);
        CHECK(fp.total_degree == 4);
        CHECK(fp.nc_degree_exact == 3u);
        CHECK(fp.lin_nc_degree == 1);
    }
    CHECK_THROWS_AS(Divisor::from_strings({{"X", 1}, {"2*X", 1}}, 2), InputError);
    CHECK_THROWS_AS(Divisor::from_strings({{"X", 0}}, 2), InputError);
    CHECK(Divisor::from_strings({{"X*Y", 2}, {"Z^2-X*Y", 1}}, 2).degree() == 6);
}

TEST_CASE("morphism_check") {
    CHECK(morphism_check(silverman()).verdict == MorphismVerdict::Verified);
    CHECK(morphism_check(archs()).verdict == MorphismVerdict::Verified);
    CHECK(morphism_check(schmidt()).verdict == MorphismVerdict::Verified);
    CHECK(morphism_check(vojtasemi()).verdict == MorphismVerdict::Verified);
    CHECK(morphism_check(bad()).verdict == MorphismVerdict::Verified);

    const auto r = morphism_check(ratl_infty(4));
    CHECK(r.verdict == MorphismVerdict::Refuted);
    REQUIRE(r.witness.has_value());
    CHECK(*r.witness == pt({0, 0, 0, 0, 1}));

    const auto w = morphism_check(ratl_wo_dratio());
    CHECK(w.verdict == MorphismVerdict::Refuted);
    CHECK(*w.witness == pt({1, 0, 0}));
    CHECK(morphism_check(iterate_map(ratl_wo_dratio(), 2).iterate).verdict == MorphismVerdict::Verified);

    const auto b = morphism_check(SelfMap::from_strings({"X^2 + X*Y", "X*Y + Y^2"}, 1));
    CHECK(b.verdict == MorphismVerdict::Refuted);
    REQUIRE(b.witness.has_value());
    CHECK(*b.witness == pt({1, -1}));
    // Only an irrational common root.
    const auto c = morphism_check(SelfMap::from_strings({"X^3 + X*Y^2", "Y^3 + X^2*Y + X^3 + X*Y^2"}, 1));
    CHECK(c.verdict == MorphismVerdict::Refuted);
    CHECK_FALSE(c.witness.has_value());
    // A declared candidate is tried first.
    const auto d = morphism_check(SelfMap::from_strings({"X^2 - Y^2", "X*Z - Y*Z", "Z^2 - X*Y"}, 2), {pt({1, 1, 1})});
    CHECK(d.verdict == MorphismVerdict::Refuted);
    CHECK(binary_resultant(P("Y^2", 1), P("X^2 - Y^2", 1)) == 1);
    CHECK(binary_resultant(P("X^2", 1), P("X*Y", 1)) == 0);
}

TEST_CASE("commute_check") {
    const auto f = schmidt();
    CHECK(commute_check(f, iterate_map(f, 2).iterate));
    const auto sq = SelfMap::from_strings({"X^2", "Y^2", "Z^2"}, 2);
    CHECK(commute_check(sq, SelfMap::from_strings({"X^3", "Y^3", "Z^3"}, 2)));
    CHECK_FALSE(commute_check(f, sq));
    CHECK(proportional_tuples({P("2*X"), P("4*Y")}, {P("X"), P("2*Y")}));
    CHECK_FALSE(proportional_tuples({P("2*X"), P("4*Y")}, {P("X"), P("Y")}));
}

TEST_CASE("evaluation commutes with symbolic iteration") {
    struct Case {
        SelfMap f;
        ProjPoint p;
    };
    std::vector<Case> cases{{schmidt(), pt({1, 2, 3})},        {archs(), pt({2, -1, 3})},
                            {vojtasemi(), pt({1, 1000, 1})},    {bad(), pt({3, 2, 1})},
                            {silverman(), pt({3, 2})},           {ratl_infty(4), pt({16, 8, 4, 2, 1})},
                            {ratl_wo_dratio(), pt({2, 3, 1})}};
    for (const auto& c : cases) {
        // The fifth iterate of a quartic has ~10^6 terms; higher degrees stop earlier.
        const unsigned top = c.f.degree() <= 3 ? 5 : (c.f.degree() == 4 ? 4 : 3);
        ProjPoint q = c.p;
        for (unsigned m = 1; m <= top; ++m) {
            q = evaluate_map(c.f, q);
            CHECK(evaluate_map(iterate_map(c.f, m).iterate, c.p) == q);
        }
    }
}

TEST_CASE("morphism iterates have degree d^n and pullbacks reassemble") {
    const Divisor z = Divisor::from_strings({{"Z", 1}}, 2);
    const Divisor yz = Divisor::from_strings({{"Y+Z", 1}, {"Y-Z", 2}}, 2);
    for (const auto& f : {schmidt(), archs(), vojtasemi(), bad()}) {
        REQUIRE(morphism_check(f).verdict == MorphismVerdict::Verified);
        for (unsigned n = 1; n <= 2; ++n) {
            const auto it = iterate_map(f, n);
            CHECK(it.iterate.degree() == arith::pow(Integer(f.degree()), n));
            for (const auto& d : {z, yz}) {
                const auto fp = pullback_divisor(d, it.iterate, n);
                CHECK(fp.total_degree == it.iterate.degree() * d.degree());
                CHECK(fp.reassemble() == composed_pullback(d, it.iterate));
                CHECK(fp.lin_nc_degree <= fp.distinct_linear().size());
            }
        }
    }
}

TEST_CASE("random maps: evaluation and reassembly") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> c(-4, 4);
    auto rand_linear = [&] {
        std::vector<Integer> v{c(rng), c(rng), c(rng)};
        if (v[0] == 0 && v[1] == 0 && v[2] == 0) v[0] = 1;
        return HomogPoly::linear(v);
    };
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<HomogPoly> coords;
        for (int i = 0; i < 3; ++i) coords.push_back(rand_linear() * rand_linear());
        SelfMap f;
        try {
            f = SelfMap(coords);
        } catch (const InputError&) {
            continue;
        }
        const Divisor d({{rand_linear(), 1}, {P("X*Y + Z^2"), 1}});
        const auto it = iterate_map(f, 2);
        const auto fp = pullback_divisor(d, it.iterate, 2);
        CHECK(fp.reassemble() == composed_pullback(d, it.iterate));
        ProjPoint p = pt({Integer(c(rng)) + 5, Integer(c(rng)) - 5, 1});
        try {
            const auto once = evaluate_map(f, evaluate_map(f, p));
            CHECK(evaluate_map(it.iterate, p) == once);
        } catch (const IndeterminatePoint&) {
        }
    }
}

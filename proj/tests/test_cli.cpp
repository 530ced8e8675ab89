#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "orbitlab/cli/commands.hpp"
#include "orbitlab/cli/report.hpp"
#include "orbitlab/error.hpp"

using namespace orbitlab;
using namespace orbitlab::cli;
namespace fs = std::filesystem;

namespace {

const std::string kConfigs = ORBITLAB_CONFIGS;
const std::string kBin = ORBITLAB_BIN;

std::string cfg(const std::string& name) { return kConfigs + "/" + name + ".json"; }

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path scratch() {
    static const fs::path dir = [] {
        auto d = fs::temp_directory_path() / ("orbitlab_cli_" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

int run(const std::string& args, std::string* out = nullptr) {
    const fs::path o = scratch() / "stdout.txt";
    const std::string cmd = "'" + kBin + "' " + args + " > '" + o.string() + "' 2> '" + (scratch() / "stderr.txt").string() + "'";
    const int status = std::system(cmd.c_str());
    if (out) *out = slurp(o);
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string write_temp(const std::string& name, const std::string& text) {
    const fs::path p = scratch() / name;
    std::ofstream(p) << text;
    return p.string();
}

template <class E>
std::string message_of(const std::string& text) {
    try {
        parse_config(text);
    } catch (const E& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_CASE("load_config on the example configs") {
    const auto c = load_config(cfg("schmidt"));
    CHECK(c.n == 2);
    CHECK(c.map.degree() == 4);
    CHECK(c.divisor.degree() == 1);
    CHECK(c.n_max == 2);
    for (const auto& name : example_names()) CHECK_NOTHROW(load_config(cfg(name)));
    CHECK(load_config(cfg("dratio")).declared.r == Rational(5, 4));
    CHECK(load_config(cfg("ratl-infty")).s.contains_prime(2));
}

TEST_CASE("config errors name the field") {
    const std::string head = R"({"n":2,"map":{"coords":[)";
    const std::string nonhom = message_of<InputError>(
        head + R"("X+Y^2","Y","Z"]},"divisor":{"components":[{"poly":"Z"}]},"point":["1","2","3"]})");
    CHECK(nonhom.find("map.coords[0]") != std::string::npos);
    CHECK(nonhom.find("not homogeneous at position 2") != std::string::npos);

    const std::string on = message_of<InputError>(
        head + R"("X^2","Y^2","Z^2"]},"divisor":{"components":[{"poly":"Z"}]},"point":["1","1","0"]})");
    CHECK(on.find("point") == 0);
    CHECK(on.find("divisor support") != std::string::npos);

    CHECK(message_of<InputError>(head + R"("X^2","Y^2"]},"divisor":{"components":[{"poly":"Z"}]},"point":["1","1","1"]})")
              .find("map.coords") != std::string::npos);
    CHECK(message_of<InputError>(head + R"("X^2","Y^2","Z^2"]},"divisor":{"components":[{"poly":"Z"}]},"point":["1","1"]})")
              .find("point") == 0);
    CHECK(message_of<InputError>(head + R"("X^2","Y^2","Z^2"]},"divisor":{"components":[{"poly":"Z"}]},"point":["1","1","1"],"s_primes":["4"]})")
              .find("s_primes[0]") == 0);
    CHECK(message_of<InputError>(head + R"("X^2","Y^2","Z^2"]},"divisor":{"components":[{"poly":"Z"}]},"point":["1","1","1"],"bogus":1})")
              .find("bogus") == 0);
    CHECK(message_of<InputError>(head + R"("X^2","Y^2","Z^2"]},"divisor":{"components":[{"poly":"W"}]},"point":["1","1","1"]})")
              .find("divisor.components[0].poly") == 0);
    CHECK(message_of<InputError>(head + R"("X^2","Y^2","Z^2"]},"divisor":{"components":[{"poly":"Z"}]},"point":["1","1","1"],"declared":{"r":"1/2"}})")
              .find("declared.r") == 0);
    CHECK(message_of<InputError>("{not json").find("not valid JSON") != std::string::npos);
    CHECK_THROWS_AS(load_config(kConfigs + "/missing.json"), InputError);
}

TEST_CASE("command_cn and command_pullback") {
    Flags f;
    const auto cn = Json::parse(command_cn(load_config(cfg("schmidt")), f).text);
    REQUIRE(cn["rows"].size() == 2);
    CHECK(cn["rows"][1]["n"] == 2);
    CHECK(cn["rows"][1]["lin_nc_degree"] == 4);
    CHECK(cn["rows"][1]["c_n"] == "1/16");
    CHECK(cn["c_sup"] == "1/16");

    const auto pb = command_pullback(load_config(cfg("archS")), f);
    CHECK(pb.exit_code == 0);
    const auto pj = Json::parse(pb.text);
    CHECK(pj["factored"] == "4*X^2*Y*Z^2*(Y + Z)");
    CHECK(pj["declared_match"] == true);

    const auto a = Json::parse(command_cn(load_config(cfg("archS")), f).text);
    CHECK(a["rows"][0]["c_n"] == "1/6");
    CHECK(a["rows"][0]["source"] == "substitute");

    // A wrong declared factorization is a verification failure.
    std::string text = slurp(cfg("archS"));
    text.replace(text.find(R"("scalar": "4")"), 13, R"("scalar": "2")");
    CHECK(command_pullback(parse_config(text), f).exit_code == 1);

    const auto d = Json::parse(command_cn(load_config(cfg("dratio")), f).text);
    CHECK(d["mode"] == "d_ratio");
    CHECK(d["rows"][1]["e_n"] == 25);
}

TEST_CASE("command_orbit on the bad example") {
    Flags f;
    f.m_max = 10;
    const auto j = Json::parse(command_orbit(load_config(cfg("bad")), f).text);
    const auto& recs = j["records"];
    REQUIRE(recs.size() == 11);
    double prev = 0.0;
    for (std::size_t m = 2; m < recs.size(); ++m) {
        const double r = recs[m]["ratio"].get<double>();
        CHECK(r > prev);
        CHECK(r < std::log(2.0) / std::log(3.0));
        prev = r;
    }
    CHECK(prev > 0.6);
    REQUIRE(j["thin_set"].size() == 1);
    CHECK(j["thin_set"][0]["indices"].back() == 7);

    f.format = Format::Csv;
    const std::string csv = command_orbit(load_config(cfg("bad")), f).text;
    CHECK(csv.rfind("m,digits_max_coord,height,lambda_outside_S_exact,lambda_outside_S_float,ratio,s_integral,max_coord_index\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 12);
    CHECK(csv.find("\n2,5,9.88751059801,\"log(7)\",1.94591014906,0.196804861018,false,0\n") != std::string::npos);
}

TEST_CASE("report JSON round-trips") {
    Flags f;
    f.m_max = 6;
    const auto cfgs = {"bad", "schmidt", "ratl-infty", "vojtasemi"};
    for (const auto* name : cfgs) {
        const auto c = load_config(cfg(name));
        analysis::OrbitOptions opt;
        const auto o = analysis::run_orbit(c.map, c.point, c.divisor, c.s, 6, opt);
        const auto j = Json::parse(command_orbit(c, f).text);
        REQUIRE(j["records"].size() == o.records.size());
        for (std::size_t i = 0; i < o.records.size(); ++i) {
            const auto back = record_from_json(j["records"][i]);
            const auto& r = o.records[i];
            CHECK(back.m == r.m);
            CHECK(back.point == r.point);
            CHECK(back.lambda_outside_S == r.lambda_outside_S);
            CHECK(back.height == round12(r.height));
            CHECK(back.ratio.has_value() == r.ratio.has_value());
            if (r.ratio) CHECK(*back.ratio == round12(*r.ratio));
            CHECK(back.s_integral == r.s_integral);
            CHECK(back.digits_max_coord == r.digits_max_coord);
            CHECK(back.max_coord_index == r.max_coord_index);
            CHECK(record_json(back).dump() == j["records"][i].dump());
        }
    }
}

TEST_CASE("verify_example registry") {
    for (const auto& name : example_names()) {
        if (name == "dratio" || name == "ratl-infty") continue;
        const auto r = verify_example(name);
        INFO(name);
        CHECK(r.passed());
    }
    CHECK_THROWS_AS(verify_example("nosuch"), InputError);

    // The published d = 5 forms are not in general position; the shifted choice is.
    const auto d = verify_example("dratio");
    CHECK_FALSE(d.passed());
    REQUIRE(d.first_failure() != nullptr);
    CHECK(d.first_failure()->label == "condition (1)");
    CHECK(d.first_failure()->detail == "dependent: L01, L02, L03, L04, M2");
    for (const auto& c : d.checks) {
        if (c.label.rfind("a = 4i+3+j", 0) == 0) CHECK(c.pass);
    }
}

TEST_CASE("binary: exit codes and determinism") {
    std::string a, b;
    CHECK(run("orbit --config '" + cfg("bad") + "' --m-max 9 --format csv", &a) == 0);
    CHECK(run("orbit --config '" + cfg("bad") + "' --m-max 9 --format csv", &b) == 0);
    CHECK(a == b);
    CHECK(run("cn --config '" + cfg("schmidt") + "'", &a) == 0);
    CHECK(run("cn --config '" + cfg("schmidt") + "'", &b) == 0);
    CHECK(a == b);
    CHECK(a.find("\"c_n\": \"1/16\"") != std::string::npos);

    const auto out = (scratch() / "r.json").string();
    CHECK(run("orbit --config '" + cfg("vojtasemi") + "' --m-max 4 --out '" + out + "'") == 0);
    const std::string first = slurp(out);
    CHECK(run("orbit --config '" + cfg("vojtasemi") + "' --m-max 4 --out '" + out + "'") == 0);
    CHECK(slurp(out) == first);

    CHECK(run("verify-example schmidt") == 0);
    CHECK(run("verify-example nosuch") == 2);
    CHECK(run("verify-example dratio") == 1);
    CHECK(run("orbit --config /nonexistent.json") == 2);
    CHECK(run("frobnicate") == 2);
    const auto bad_cfg = write_temp("nh.json", R"({"n":2,"map":{"coords":["X+Y^2","Y","Z"]},"divisor":{"components":[{"poly":"Z"}]},"point":["1","2","3"]})");
    CHECK(run("orbit --config '" + bad_cfg + "'") == 2);
    // cn on a non-morphism without a declaration
    CHECK(run("cn --config '" + cfg("ratl-wo-dratio") + "' --n-max 1") == 2);
    // resource cap: genericity degree too large for P^4
    const auto big = write_temp("big.json", R"({"n":4,"map":{"coords":["X0^2","X1^2","X2^2","X3^2","X4^2"]},"divisor":{"components":[{"poly":"X4"}]},"point":["2","3","5","7","1"],"m_max":2,"genericity_degree":20})");
    CHECK(run("genericity --config '" + big + "'") == 3);
    CHECK(run("pullback --config '" + cfg("archS") + "' --format csv", &a) == 0);
    CHECK(a == "component,multiplicity,linear\nX,2,true\nY,1,true\nZ,2,true\nY + Z,1,true\n");
}

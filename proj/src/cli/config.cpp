#include "orbitlab/cli/config.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "orbitlab/error.hpp"
#include "orbitlab/poly/parser.hpp"

namespace orbitlab::cli {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& msg) { throw InputError(path + ": " + msg); }

const json& need(const json& j, const std::string& key, const std::string& path) {
    if (!j.is_object() || !j.contains(key)) fail(path.empty() ? key : path + "." + key, "missing field");
    return j.at(key);
}

std::string text_of(const json& j, const std::string& path) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_number_integer()) return j.dump();
    fail(path, "expected a string or integer");
}

unsigned uint_of(const json& j, const std::string& path) {
    if (j.is_number_unsigned()) return j.get<unsigned>();
    if (j.is_string()) {
        try {
            const Integer v = arith::parse_integer(j.get<std::string>());
            if (v >= 0 && v.fits_uint_p()) return static_cast<unsigned>(v.get_ui());
        } catch (const Error&) {
        }
    }
    fail(path, "expected a non-negative integer");
}

Rational rational_of(const json& j, const std::string& path) {
    try {
        return arith::parse_rational(text_of(j, path));
    } catch (const InputError& e) {
        fail(path, e.what());
    }
}

// Re-raises parser errors with the JSON path in front, keeping the exit class.
template <class F>
auto at_path(const std::string& path, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const InputError& e) {
        fail(path, e.what());
    }
}

const json& array_at(const json& j, const std::string& key, const std::string& path) {
    const json& a = need(j, key, path);
    if (!a.is_array()) fail(path + "." + key, "expected an array");
    return a;
}

std::vector<std::pair<HomogPoly, unsigned>> components_of(const json& arr, std::size_t n, const std::string& path) {
    if (!arr.is_array() || arr.empty()) fail(path, "expected a non-empty array");
    std::vector<std::pair<HomogPoly, unsigned>> out;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const std::string p = path + "[" + std::to_string(i) + "]";
        const std::string text = text_of(need(arr[i], "poly", p), p + ".poly");
        HomogPoly f = at_path(p + ".poly", [&] { return poly::parse_polynomial(text, n); });
        unsigned mult = arr[i].contains("mult") ? uint_of(arr[i]["mult"], p + ".mult") : 1;
        out.push_back({std::move(f), mult});
    }
    return out;
}

ProjPoint point_of(const json& arr, std::size_t n, const std::string& path) {
    if (!arr.is_array()) fail(path, "expected an array of integers");
    if (arr.size() != n + 1) fail(path, "expected " + std::to_string(n + 1) + " coordinates");
    std::vector<Integer> x;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const std::string p = path + "[" + std::to_string(i) + "]";
        x.push_back(at_path(p, [&] { return arith::parse_integer(text_of(arr[i], p)); }));
    }
    return at_path(path, [&] { return maps::reduce_point(std::move(x)); });
}

maps::MorphismStatus status_of(const json& j, const std::string& path) {
    if (j.is_boolean()) return j.get<bool>() ? maps::MorphismStatus::Declared : maps::MorphismStatus::Unknown;
    const std::string s = text_of(j, path);
    if (s == "verified") return maps::MorphismStatus::Verified;
    if (s == "declared") return maps::MorphismStatus::Declared;
    if (s == "refuted") return maps::MorphismStatus::Refuted;
    if (s == "unknown") return maps::MorphismStatus::Unknown;
    fail(path, "unknown morphism status '" + s + "'");
}

std::vector<std::string> strings_of(const json& arr, const std::string& path) {
    if (!arr.is_array()) fail(path, "expected an array of strings");
    std::vector<std::string> out;
    for (std::size_t i = 0; i < arr.size(); ++i) out.push_back(text_of(arr[i], path + "[" + std::to_string(i) + "]"));
    return out;
}

Declared declared_of(const json& j, std::size_t n) {
    Declared d;
    if (!j.is_object()) fail("declared", "expected an object");
    for (const auto& [key, v] : j.items()) {
        const std::string p = "declared." + key;
        if (key == "morphism") {
            d.morphism = status_of(v, p);
        } else if (key == "r") {
            d.r = rational_of(v, p);
            if (*d.r < 1) fail(p, "the D-ratio must be at least 1");
        } else if (key == "avoid") {
            const std::string t = text_of(v, p);
            d.avoid = at_path(p, [&] { return poly::parse_polynomial(t, n); });
        } else if (key == "pool_extra") {
            d.pool_extra = strings_of(v, p);
        } else if (key == "thresholds") {
            if (!v.is_object()) fail(p, "expected an object of prime -> bound");
            for (const auto& [prime, bound] : v.items()) {
                const Integer q = at_path(p + "." + prime, [&] { return arith::parse_integer(prime); });
                if (!arith::is_prime(q)) fail(p + "." + prime, "not a prime");
                d.thresholds[q] = uint_of(bound, p + "." + prime);
            }
        } else if (key == "substitute") {
            auto comps = components_of(need(v, "components", p), n, p + ".components");
            d.substitute = at_path(p, [&] { return Divisor(std::move(comps)); });
        } else if (key == "c") {
            d.c = rational_of(v, p);
        } else if (key == "pullback") {
            d.pullback_factors = components_of(need(v, "factors", p), n, p + ".factors");
            if (v.contains("scalar")) d.pullback_scalar = rational_of(v["scalar"], p + ".scalar");
            if (v.contains("n")) d.pullback_n = uint_of(v["n"], p + ".n");
            if (d.pullback_n < 1) fail(p + ".n", "must be at least 1");
        } else if (key == "psi") {
            d.psi = strings_of(need(v, "coords", p), p + ".coords");
            if (v.contains("n")) d.psi_n = uint_of(v["n"], p + ".n");
        } else if (key == "preimages") {
            if (!v.is_array()) fail(p, "expected an array");
            for (std::size_t i = 0; i < v.size(); ++i) {
                const std::string q = p + "[" + std::to_string(i) + "]";
                d.preimages.push_back({uint_of(need(v[i], "m", q), q + ".m"), point_of(need(v[i], "point", q), n, q + ".point")});
            }
        } else {
            fail(p, "unknown field");
        }
    }
    return d;
}

}  // namespace

AnalysisConfig parse_config(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw InputError("config: expected a JSON object");
    static const char* known[] = {"n", "map", "divisor", "point", "s_primes", "m_max", "n_max",
                                  "epsilons", "genericity_degree", "declared", "name", "comment"};
    for (const auto& [key, v] : j.items()) {
        if (std::find(std::begin(known), std::end(known), key) == std::end(known)) fail(key, "unknown field");
    }
    AnalysisConfig c;
    c.n = uint_of(need(j, "n", ""), "n");
    if (c.n < 1) fail("n", "dimension must be at least 1");
    if (j.contains("declared")) c.declared = declared_of(j["declared"], c.n);

    const json& coords = array_at(need(j, "map", ""), "coords", "map");
    c.coords = strings_of(coords, "map.coords");
    if (c.coords.size() != c.n + 1) fail("map.coords", "expected " + std::to_string(c.n + 1) + " coordinates");
    for (std::size_t i = 0; i < c.coords.size(); ++i) {
        at_path("map.coords[" + std::to_string(i) + "]", [&] { return poly::parse_polynomial(c.coords[i], c.n); });
    }
    maps::FactorPool extra(c.n);
    for (std::size_t i = 0; i < c.declared.pool_extra.size(); ++i) {
        const std::string p = "declared.pool_extra[" + std::to_string(i) + "]";
        extra.add(at_path(p, [&] { return poly::parse_polynomial(c.declared.pool_extra[i], c.n); }));
    }
    const auto status = c.declared.morphism.value_or(maps::MorphismStatus::Unknown);
    c.map = at_path("map", [&] { return SelfMap::from_strings(c.coords, c.n, extra, status); });

    auto comps = components_of(array_at(need(j, "divisor", ""), "components", "divisor"), c.n, "divisor.components");
    c.divisor = at_path("divisor", [&] { return Divisor(std::move(comps)); });

    c.point = point_of(need(j, "point", ""), c.n, "point");
    for (const auto& [g, m] : c.divisor.components()) {
        if (g.evaluate(c.point.coords()) == 0) fail("point", "point lies on the divisor support: " + c.point.to_string());
    }

    if (j.contains("s_primes")) {
        const json& s = j["s_primes"];
        if (!s.is_array()) fail("s_primes", "expected an array");
        std::vector<Integer> primes;
        for (std::size_t i = 0; i < s.size(); ++i) {
            const std::string p = "s_primes[" + std::to_string(i) + "]";
            const Integer q = at_path(p, [&] { return arith::parse_integer(text_of(s[i], p)); });
            if (!arith::is_prime(q)) fail(p, "not a prime");
            primes.push_back(q);
        }
        c.s = PlaceSet(primes);
    }
    if (j.contains("m_max")) c.m_max = uint_of(j["m_max"], "m_max");
    if (j.contains("n_max")) c.n_max = uint_of(j["n_max"], "n_max");
    if (c.m_max < 1) fail("m_max", "must be at least 1");
    if (c.n_max < 1) fail("n_max", "must be at least 1");
    if (j.contains("epsilons")) {
        const json& e = j["epsilons"];
        if (!e.is_array()) fail("epsilons", "expected an array");
        for (std::size_t i = 0; i < e.size(); ++i) {
            const std::string p = "epsilons[" + std::to_string(i) + "]";
            c.epsilons.push_back(rational_of(e[i], p));
            if (c.epsilons.back() <= 0) fail(p, "epsilon must be positive");
        }
    }
    if (j.contains("genericity_degree")) c.genericity_degree = uint_of(j["genericity_degree"], "genericity_degree");
    if (c.genericity_degree < 1) fail("genericity_degree", "must be at least 1");

    if (!c.declared.psi.empty()) {
        if (c.declared.psi.size() != c.n + 1) fail("declared.psi.coords", "wrong number of coordinates");
        c.psi = at_path("declared.psi", [&] { return SelfMap::from_strings(c.declared.psi, c.n); });
    }
    return c;
}

AnalysisConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read config file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

}  // namespace orbitlab::cli

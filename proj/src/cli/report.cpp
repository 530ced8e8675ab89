#include "orbitlab/cli/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "orbitlab/error.hpp"

namespace orbitlab::cli {

std::string fmt12(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

double round12(double x) {
    if (!std::isfinite(x)) return x;
    return std::strtod(fmt12(x).c_str(), nullptr);
}

Json logsum_json(const arith::LogSum& ls) {
    Json terms = Json::array();
    for (const auto& [b, e] : ls.terms()) terms.push_back(Json::array({b.get_str(), std::to_string(e)}));
    return Json{{"exact", ls.to_string()}, {"terms", terms}, {"float", round12(arith::logsum_to_float(ls))}};
}

arith::LogSum logsum_from_json(const Json& j) {
    arith::LogSum out;
    for (const auto& t : j.at("terms")) {
        out += arith::LogSum::single(arith::parse_integer(t.at(0).get<std::string>()),
                                     std::stoul(t.at(1).get<std::string>()));
    }
    return out;
}

Json record_json(const analysis::OrbitRecord& r) {
    Json point = Json::array();
    for (const auto& x : r.point.coords()) point.push_back(x.get_str());
    Json j;
    j["m"] = r.m;
    j["point"] = point;
    j["height"] = round12(r.height);
    j["digits_max_coord"] = r.digits_max_coord;
    j["lambda_outside_S"] = logsum_json(r.lambda_outside_S);
    j["ratio"] = r.ratio ? Json(round12(*r.ratio)) : Json(nullptr);
    j["s_integral"] = r.s_integral;
    j["max_coord_index"] = r.max_coord_index;
    j["preperiodic_hit"] = r.preperiodic_hit ? Json(*r.preperiodic_hit) : Json(nullptr);
    return j;
}

analysis::OrbitRecord record_from_json(const Json& j) {
    analysis::OrbitRecord r;
    r.m = j.at("m").get<unsigned>();
    std::vector<arith::Integer> x;
    for (const auto& c : j.at("point")) x.push_back(arith::parse_integer(c.get<std::string>()));
    r.point = maps::reduce_point(std::move(x));
    r.height = j.at("height").get<double>();
    r.digits_max_coord = j.at("digits_max_coord").get<std::size_t>();
    r.lambda_outside_S = logsum_from_json(j.at("lambda_outside_S"));
    if (!j.at("ratio").is_null()) r.ratio = j.at("ratio").get<double>();
    r.s_integral = j.at("s_integral").get<bool>();
    r.max_coord_index = j.at("max_coord_index").get<std::size_t>();
    if (!j.at("preperiodic_hit").is_null()) r.preperiodic_hit = j.at("preperiodic_hit").get<unsigned>();
    return r;
}

std::string orbit_csv(const std::vector<analysis::OrbitRecord>& records) {
    std::ostringstream out;
    out << "m,digits_max_coord,height,lambda_outside_S_exact,lambda_outside_S_float,ratio,s_integral,max_coord_index\n";
    for (const auto& r : records) {
        out << r.m << ',' << r.digits_max_coord << ',' << fmt12(r.height) << ",\"" << r.lambda_outside_S.to_string()
            << "\"," << fmt12(arith::logsum_to_float(r.lambda_outside_S)) << ',' << (r.ratio ? fmt12(*r.ratio) : "")
            << ',' << (r.s_integral ? "true" : "false") << ',' << r.max_coord_index << '\n';
    }
    return out.str();
}

Json rational_json(const arith::Rational& r) { return r.get_str(); }

}  // namespace orbitlab::cli

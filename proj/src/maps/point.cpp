#include "orbitlab/maps/point.hpp"

#include <algorithm>

#include "orbitlab/error.hpp"

namespace orbitlab::maps {

ProjPoint reduce_point(std::vector<Integer> raw) {
    if (raw.empty()) throw InputError("a projective point needs at least one coordinate");
    // Smallest first: the gcd usually collapses to 1 before touching the huge entries.
    std::vector<std::size_t> order(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return mpz_sizeinbase(raw[a].get_mpz_t(), 2) < mpz_sizeinbase(raw[b].get_mpz_t(), 2);
    });
    Integer g = 0;
    for (auto i : order) {
        if (raw[i] == 0) continue;
        g = arith::gcd(g, raw[i]);
        if (g == 1) break;
    }
    if (g == 0) throw InputError("the zero vector is not a projective point");
    std::size_t first = 0;
    while (raw[first] == 0) ++first;
    if (raw[first] < 0) g = -g;
    if (g != 1) {
        for (auto& c : raw) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    }
    ProjPoint p;
    p.coords_ = std::move(raw);
    return p;
}

std::size_t ProjPoint::max_coord_index() const {
    std::size_t best = 0;
    for (std::size_t i = 1; i < coords_.size(); ++i) {
        if (mpz_cmpabs(coords_[i].get_mpz_t(), coords_[best].get_mpz_t()) > 0) best = i;
    }
    return best;
}

std::string ProjPoint::to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i) out += ":";
        out += coords_[i].get_str();
    }
    return out + "]";
}

ProjPoint parse_point(const std::string& text) {
    std::string body = text;
    if (!body.empty() && body.front() == '[') {
        if (body.back() != ']') throw InputError("unbalanced brackets in point '" + text + "'");
        body = body.substr(1, body.size() - 2);
    }
    std::vector<Integer> coords;
    std::size_t start = 0;
    for (;;) {
        const auto colon = body.find(':', start);
        std::string piece = body.substr(start, colon == std::string::npos ? std::string::npos : colon - start);
        piece.erase(std::remove_if(piece.begin(), piece.end(), ::isspace), piece.end());
        coords.push_back(arith::parse_integer(piece));
        if (colon == std::string::npos) break;
        start = colon + 1;
    }
    if (coords.size() < 2) throw InputError("a projective point needs at least two coordinates");
    return reduce_point(std::move(coords));
}

}  // namespace orbitlab::maps

#include "orbitlab/maps/selfmap.hpp"

#include <algorithm>
#include <optional>

#include "orbitlab/error.hpp"
#include "orbitlab/poly/parser.hpp"

namespace orbitlab::maps {

using poly::Monomial;
using poly::Term;

std::string to_string(MorphismStatus s) {
    switch (s) {
        case MorphismStatus::Verified: return "verified";
        case MorphismStatus::Refuted: return "refuted";
        case MorphismStatus::Declared: return "declared";
        case MorphismStatus::Unknown: return "unknown";
    }
    return "unknown";
}

FactorPool::FactorPool(std::size_t dimension) : dimension_(dimension) {
    for (std::size_t i = 0; i <= dimension; ++i) linear_.push_back(HomogPoly::variable(dimension + 1, i));
}

bool FactorPool::add(const HomogPoly& f) {
    if (f.is_zero() || f.degree() == 0) return false;
    if (linear_.empty() && nonlinear_.empty()) {
        dimension_ = f.dimension();
    } else if (f.dimension() != dimension_) {
        throw InputError("factor " + f.to_string() + " has the wrong number of variables");
    }
    const HomogPoly c = f.canonical();
    auto& bucket = c.is_linear() ? linear_ : nonlinear_;
    if (std::find(bucket.begin(), bucket.end(), c) != bucket.end()) return false;
    bucket.push_back(c);
    return true;
}

void FactorPool::merge(const FactorPool& other) {
    for (const auto& f : other.linear_) add(f);
    for (const auto& f : other.nonlinear_) add(f);
}

bool Cancellation::trivial() const {
    return content == 1 && factors.empty() &&
           std::all_of(monomial.begin(), monomial.end(), [](auto e) { return e == 0; });
}

std::string Cancellation::to_string() const {
    std::vector<std::string> parts;
    if (content != 1) parts.push_back(arith::to_string(content));
    if (std::any_of(monomial.begin(), monomial.end(), [](auto e) { return e != 0; })) {
        parts.push_back(poly::monomial_poly(monomial).to_string());
    }
    for (const auto& [f, m] : factors) {
        std::string s = "(" + f.to_string() + ")";
        if (m > 1) s += "^" + std::to_string(m);
        parts.push_back(s);
    }
    if (parts.empty()) return "1";
    std::string out = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) out += "*" + parts[i];
    return out;
}

namespace {

HomogPoly divide_monomial(const HomogPoly& f, const Monomial& m) {
    std::vector<Term> terms;
    terms.reserve(f.terms().size());
    for (const auto& t : f.terms()) {
        Term u = t;
        for (std::size_t i = 0; i < m.size(); ++i) u.exps[i] -= m[i];
        terms.push_back(std::move(u));
    }
    return HomogPoly::from_terms(f.nvars(), std::move(terms));
}

// Divides g out of every nonzero coordinate if it divides all of them.
bool divide_all(std::vector<HomogPoly>& coords, const HomogPoly& g) {
    std::vector<HomogPoly> next = coords;
    for (auto& c : next) {
        if (c.is_zero()) continue;
        if (c.degree() < g.degree()) return false;
        HomogPoly q;
        if (!poly::try_divide(c, g, q)) return false;
        c = std::move(q);
    }
    coords = std::move(next);
    return true;
}

}  // namespace

Cancellation cancel_common_factors(std::vector<HomogPoly>& coords, const FactorPool& pool) {
    Cancellation out;
    if (coords.empty()) return out;
    const std::size_t nv = coords.front().nvars();
    out.monomial.assign(nv, 0);

    Integer g = 0;
    for (const auto& c : coords) g = arith::gcd(g, c.content());
    if (g == 0) return out;
    if (g != 1) {
        for (auto& c : coords) if (!c.is_zero()) c = c.divided_by(g);
        out.content = g;
    }

    bool first = true;
    for (const auto& c : coords) {
        if (c.is_zero()) continue;
        for (std::size_t i = 0; i < nv; ++i) {
            const auto low = std::min_element(c.terms().begin(), c.terms().end(), [i](const Term& a, const Term& b) {
                                 return a.exps[i] < b.exps[i];
                             })->exps[i];
            out.monomial[i] = first ? low : std::min(out.monomial[i], low);
        }
        first = false;
    }
    if (std::any_of(out.monomial.begin(), out.monomial.end(), [](auto e) { return e != 0; })) {
        for (auto& c : coords) if (!c.is_zero()) c = divide_monomial(c, out.monomial);
    }

    auto sweep = [&](const HomogPoly& f) {
        unsigned k = 0;
        while (divide_all(coords, f)) ++k;
        if (k > 0) out.factors.push_back({f, k});
    };
    for (const auto& l : pool.linear()) {
        // Coordinate hyperplanes were handled by the monomial step.
        if (l.terms().size() == 1) continue;
        sweep(l);
    }
    for (const auto& f : pool.nonlinear()) sweep(f);
    return out;
}

SelfMap::SelfMap(std::vector<HomogPoly> coords, FactorPool extra, MorphismStatus status)
    : coords_(std::move(coords)), status_(status) {
    if (coords_.size() < 2) throw InputError("a self-map needs at least two coordinates");
    const std::size_t nv = coords_.size();
    bool any = false;
    std::optional<unsigned> deg;
    for (const auto& c : coords_) {
        if (c.nvars() != nv) {
            throw InputError("coordinate " + c.to_string() + " is not in " + std::to_string(nv) + " variables");
        }
        if (c.is_zero()) continue;
        any = true;
        if (deg && *deg != c.degree()) throw InputError("map coordinates have different degrees");
        deg = c.degree();
    }
    if (!any) throw InputError("all map coordinates are zero");
    if (!extra.linear().empty() || !extra.nonlinear().empty()) {
        if (extra.dimension() != nv - 1) throw InputError("factor pool dimension does not match the map");
    }
    pool_ = FactorPool(nv - 1);
    pool_.merge(extra);
    cancelled_ = cancel_common_factors(coords_, pool_);
    for (const auto& c : coords_) {
        if (!c.is_zero()) {
            degree_ = c.degree();
            break;
        }
    }
}

SelfMap SelfMap::from_strings(const std::vector<std::string>& coords, std::size_t dimension,
                              const FactorPool& extra, MorphismStatus status) {
    if (coords.size() != dimension + 1) {
        throw InputError("expected " + std::to_string(dimension + 1) + " coordinates, got " +
                         std::to_string(coords.size()));
    }
    FactorPool pool(dimension);
    pool.merge(extra);
    std::vector<HomogPoly> polys;
    for (const auto& text : coords) {
        auto parsed = poly::parse_with_factors(text, dimension);
        for (const auto& f : parsed.factors) pool.add(f.poly);
        polys.push_back(std::move(parsed.expanded));
    }
    return SelfMap(std::move(polys), std::move(pool), status);
}

std::string SelfMap::to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i) out += " : ";
        out += coords_[i].to_string();
    }
    return out + "]";
}

ProjPoint evaluate_map(const SelfMap& f, const ProjPoint& p) {
    if (p.dimension() != f.dimension()) throw InputError("point and map dimensions differ");
    std::vector<Integer> values;
    values.reserve(f.coords().size());
    bool nonzero = false;
    for (const auto& c : f.coords()) {
        values.push_back(c.is_zero() ? Integer(0) : c.evaluate(p.coords()));
        nonzero |= values.back() != 0;
    }
    if (!nonzero) throw IndeterminatePoint(p.to_string());
    return reduce_point(std::move(values));
}

namespace {

MorphismStatus composed_status(MorphismStatus a, MorphismStatus b) {
    using S = MorphismStatus;
    if (a == S::Verified && b == S::Verified) return S::Verified;
    auto ok = [](S s) { return s == S::Verified || s == S::Declared; };
    if (ok(a) && ok(b)) return S::Declared;
    return S::Unknown;
}

std::vector<HomogPoly> raw_compose(const SelfMap& f, const SelfMap& g) {
    if (f.dimension() != g.dimension()) throw InputError("maps act on different dimensions");
    std::vector<HomogPoly> out;
    const std::size_t nv = g.dimension() + 1;
    for (const auto& c : f.coords()) {
        out.push_back(c.is_zero() ? HomogPoly(nv) : poly::compose(c, g.coords()));
    }
    return out;
}

}  // namespace

SelfMap compose_maps(const SelfMap& f, const SelfMap& g) {
    FactorPool pool = f.pool();
    pool.merge(g.pool());
    return SelfMap(raw_compose(f, g), std::move(pool), composed_status(f.status(), g.status()));
}

IterateResult iterate_map(const SelfMap& f, unsigned n) {
    if (n == 0) throw InputError("iterate count must be positive");
    IterateResult out{f, {f.degree()}, {f.construction_cancellation()}};
    for (unsigned k = 2; k <= n; ++k) {
        out.iterate = compose_maps(f, out.iterate);
        out.degrees.push_back(out.iterate.degree());
        out.cancellations.push_back(out.iterate.construction_cancellation());
    }
    return out;
}

bool proportional_tuples(const std::vector<HomogPoly>& u, const std::vector<HomogPoly>& v) {
    if (u.size() != v.size()) return false;
    std::size_t lead = u.size();
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i].is_zero() != v[i].is_zero()) return false;
        if (lead == u.size() && !u[i].is_zero()) lead = i;
    }
    if (lead == u.size()) return true;
    if (u[lead].terms().size() != v[lead].terms().size()) return false;
    // u = (p/q) v  <=>  q u = p v
    const Integer& p = u[lead].leading_term().coef;
    const Integer& q = v[lead].leading_term().coef;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i].is_zero()) continue;
        if (u[i].terms().size() != v[i].terms().size()) return false;
        if (u[i].scaled(q) != v[i].scaled(p)) return false;
    }
    return true;
}

bool commute_check(const SelfMap& f, const SelfMap& g) {
    const auto fg = raw_compose(f, g);
    const auto gf = raw_compose(g, f);
    if (proportional_tuples(fg, gf)) return true;
    FactorPool pool = f.pool();
    pool.merge(g.pool());
    auto a = fg, b = gf;
    cancel_common_factors(a, pool);
    cancel_common_factors(b, pool);
    if (proportional_tuples(a, b)) return true;
    // Equal as rational maps: a_i b_j = a_j b_i for all i < j.
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = i + 1; j < a.size(); ++j) {
            if (a[i] * b[j] != a[j] * b[i]) return false;
        }
    }
    return true;
}

}  // namespace orbitlab::maps

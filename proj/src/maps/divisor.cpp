#include "orbitlab/maps/divisor.hpp"

#include <algorithm>

#include "orbitlab/error.hpp"
#include "orbitlab/poly/parser.hpp"

namespace orbitlab::maps {

Divisor::Divisor(std::vector<std::pair<HomogPoly, unsigned>> components) : components_(std::move(components)) {
    if (components_.empty()) throw InputError("a divisor needs at least one component");
    const std::size_t nv = components_.front().first.nvars();
    for (std::size_t i = 0; i < components_.size(); ++i) {
        const auto& [g, m] = components_[i];
        if (m == 0) throw InputError("divisor multiplicities must be positive");
        if (g.nvars() != nv) throw InputError("divisor components live in different spaces");
        if (g.is_zero() || g.degree() == 0) throw InputError("divisor component must be a nonconstant form");
        for (std::size_t j = 0; j < i; ++j) {
            if (poly::proportional(components_[j].first, g)) {
                throw InputError("proportional divisor components: " + g.to_string());
            }
        }
    }
}

Divisor Divisor::from_strings(const std::vector<std::pair<std::string, unsigned>>& components,
                              std::size_t dimension) {
    std::vector<std::pair<HomogPoly, unsigned>> parsed;
    for (const auto& [text, m] : components) parsed.push_back({poly::parse_polynomial(text, dimension), m});
    return Divisor(std::move(parsed));
}

unsigned Divisor::degree() const {
    unsigned d = 0;
    for (const auto& [g, m] : components_) d += m * g.degree();
    return d;
}

HomogPoly Divisor::product() const {
    HomogPoly p = HomogPoly::constant(components_.front().first.nvars(), 1);
    for (const auto& [g, m] : components_) p = p * g.pow(m);
    return p;
}

std::string Divisor::to_string() const {
    std::string out;
    for (const auto& [g, m] : components_) {
        if (!out.empty()) out += " + ";
        if (m > 1) out += std::to_string(m) + "*";
        out += "(" + g.to_string() + ")";
    }
    return out;
}

std::vector<std::pair<LinearForm, unsigned>> FactoredPullback::all_linear() const {
    std::vector<std::pair<LinearForm, unsigned>> out;
    for (std::size_t i = 0; i < monomial_exponents.size(); ++i) {
        if (monomial_exponents[i] > 0) {
            out.push_back({HomogPoly::variable(monomial_exponents.size(), i), monomial_exponents[i]});
        }
    }
    out.insert(out.end(), linear_factors.begin(), linear_factors.end());
    return out;
}

std::vector<LinearForm> FactoredPullback::distinct_linear() const {
    std::vector<LinearForm> out;
    for (const auto& [l, m] : all_linear()) out.push_back(l);
    return out;
}

std::vector<HomogPoly> FactoredPullback::components() const {
    auto out = distinct_linear();
    for (const auto& [r, m] : residual_factors) out.push_back(r);
    return out;
}

HomogPoly FactoredPullback::reassemble() const {
    HomogPoly p = poly::monomial_poly(monomial_exponents);
    for (const auto& [l, m] : linear_factors) p = p * l.pow(m);
    for (const auto& [r, m] : residual_factors) p = p * r.pow(m);
    if (scalar.get_den() != 1) throw VerificationError("pullback scalar is not integral");
    return p.scaled(scalar.get_num());
}

std::string FactoredPullback::to_string() const {
    std::vector<std::string> parts;
    if (scalar != 1) parts.push_back(arith::to_string(scalar));
    for (const auto& [l, m] : all_linear()) {
        std::string s = l.terms().size() == 1 ? l.to_string() : "(" + l.to_string() + ")";
        if (m > 1) s += "^" + std::to_string(m);
        parts.push_back(s);
    }
    for (const auto& [r, m] : residual_factors) {
        std::string s = "(" + r.to_string() + ")";
        if (m > 1) s += "^" + std::to_string(m);
        parts.push_back(s);
    }
    if (parts.empty()) return "1";
    std::string out = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) out += "*" + parts[i];
    return out;
}

HomogPoly composed_pullback(const Divisor& d, const SelfMap& iterate) {
    if (d.dimension() != iterate.dimension()) throw InputError("divisor and map dimensions differ");
    HomogPoly p = HomogPoly::constant(iterate.dimension() + 1, 1);
    for (const auto& [g, m] : d.components()) p = p * poly::compose(g, iterate.coords()).pow(m);
    return p;
}

namespace {

unsigned divide_out(HomogPoly& rest, const HomogPoly& g) {
    unsigned k = 0;
    HomogPoly q;
    while (rest.degree() >= g.degree() && poly::try_divide(rest, g, q)) {
        rest = std::move(q);
        ++k;
    }
    return k;
}

}  // namespace

FactoredPullback pullback_divisor(const Divisor& d, const SelfMap& iterate, unsigned n) {
    if (d.dimension() != iterate.dimension()) throw InputError("divisor and map dimensions differ");
    const std::size_t nv = iterate.dimension() + 1;
    FactorPool pool = iterate.pool();
    for (const auto& [g, m] : d.components()) pool.add(g);

    FactoredPullback out;
    out.n = n;
    out.total_degree = iterate.degree() * d.degree();
    out.monomial_exponents.assign(nv, 0);
    std::vector<unsigned> lin(pool.linear().size(), 0), nonlin(pool.nonlinear().size(), 0);
    Integer scalar = 1;

    for (const auto& [g, m] : d.components()) {
        const HomogPoly pulled = poly::compose(g, iterate.coords());
        if (pulled.is_zero()) throw InputError("the image of the map lies inside (" + g.to_string() + " = 0)");
        auto split = poly::extract_monomial_factor(pulled);
        for (std::size_t i = 0; i < nv; ++i) out.monomial_exponents[i] += m * split.exps[i];
        HomogPoly rest = std::move(split.cofactor);
        for (std::size_t i = 0; i < pool.linear().size() && rest.degree() > 0; ++i) {
            const auto& l = pool.linear()[i];
            if (l.terms().size() == 1) continue;
            lin[i] += m * divide_out(rest, l);
        }
        for (std::size_t i = 0; i < pool.nonlinear().size() && rest.degree() > 0; ++i) {
            nonlin[i] += m * divide_out(rest, pool.nonlinear()[i]);
        }
        if (rest.degree() == 0) {
            scalar *= arith::pow(rest.leading_term().coef, m);
            continue;
        }
        const HomogPoly canon = rest.canonical();
        scalar *= arith::pow(rest.leading_term().coef / canon.leading_term().coef, m);
        auto hit = std::find_if(out.residual_factors.begin(), out.residual_factors.end(),
                                [&](const auto& r) { return r.first == canon; });
        if (hit != out.residual_factors.end()) hit->second += m;
        else out.residual_factors.push_back({canon, m});
    }
    for (std::size_t i = 0; i < lin.size(); ++i) {
        if (lin[i] > 0) out.linear_factors.push_back({pool.linear()[i], lin[i]});
    }
    std::vector<std::pair<HomogPoly, unsigned>> declared;
    for (std::size_t i = 0; i < nonlin.size(); ++i) {
        if (nonlin[i] > 0) declared.push_back({pool.nonlinear()[i], nonlin[i]});
    }
    out.residual_factors.insert(out.residual_factors.begin(), declared.begin(), declared.end());
    out.scalar = Rational(scalar);

    const auto forms = out.distinct_linear();
    out.lin_nc_subset = poly::max_general_position_subset(forms, nv - 1);
    out.lin_nc_degree = static_cast<unsigned>(out.lin_nc_subset.size());
    if (nv == 2) {
        out.nc_degree_exact = poly::binary_form_reduced_degree(out.reassemble()).distinct_root_count;
    } else if (out.residual_factors.empty()) {
        out.nc_degree_exact = out.lin_nc_degree;
    }
    return out;
}

}  // namespace orbitlab::maps

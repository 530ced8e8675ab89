#include "orbitlab/poly/univariate.hpp"

#include <algorithm>
#include <set>

#include "orbitlab/error.hpp"

namespace orbitlab::poly {

using arith::Integer;
using arith::Rational;

void trim(UPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

int udegree(const UPoly& f) { return static_cast<int>(f.size()) - 1; }

UPoly uderivative(const UPoly& f) {
    UPoly d;
    for (std::size_t i = 1; i < f.size(); ++i) d.push_back(f[i] * Rational(static_cast<long>(i)));
    trim(d);
    return d;
}

UPoly usub(const UPoly& a, const UPoly& b) {
    UPoly r(std::max(a.size(), b.size()), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

UPoly umul(const UPoly& a, const UPoly& b) {
    if (a.empty() || b.empty()) return {};
    UPoly r(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

void udivmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
    if (b.empty()) throw InputError("univariate division by zero");
    r = a;
    trim(r);
    q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, Rational(0));
    while (r.size() >= b.size() && !r.empty()) {
        const std::size_t shift = r.size() - b.size();
        const Rational c = r.back() / b.back();
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] -= c * b[i];
        r.pop_back();
        trim(r);
    }
    trim(q);
}

namespace {

UPoly monic(UPoly f) {
    if (f.empty()) return f;
    const Rational lc = f.back();
    for (auto& c : f) c /= lc;
    return f;
}

}  // namespace

UPoly ugcd(UPoly a, UPoly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        UPoly q, r;
        udivmod(a, b, q, r);
        a = std::move(b);
        // Keep coefficients small.
        b = monic(std::move(r));
    }
    return monic(a);
}

UPoly usquarefree(const UPoly& f) {
    UPoly g = ugcd(f, uderivative(f));
    UPoly q, r;
    udivmod(f, g, q, r);
    return monic(q);
}

Rational ueval(const UPoly& f, const Rational& x) {
    Rational acc = 0;
    for (std::size_t i = f.size(); i-- > 0;) acc = acc * x + f[i];
    return acc;
}

std::vector<Integer> uprimitive(const UPoly& f) {
    Integer den = 1;
    for (const auto& c : f) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Integer> out;
    Integer g = 0;
    for (const auto& c : f) {
        Rational s = c * Rational(den);
        out.push_back(s.get_num());
        g = arith::gcd(g, out.back());
    }
    if (g == 0) return out;
    if (out.back() < 0) g = -g;
    for (auto& c : out) c /= g;
    return out;
}

namespace {

std::vector<Integer> divisors(const Integer& n) {
    std::vector<Integer> ds{1};
    for (const auto& [p, e] : arith::factor_integer(n)) {
        const std::size_t base = ds.size();
        Integer pk = 1;
        for (unsigned long k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) ds.push_back(ds[i] * pk);
        }
        if (ds.size() > 200000) throw ResourceCapExceeded("too many rational-root candidates");
    }
    return ds;
}

}  // namespace

std::vector<Rational> urational_roots(const UPoly& f) {
    UPoly g = f;
    trim(g);
    if (g.empty()) throw InputError("rational roots of the zero polynomial");
    std::set<Rational> roots;
    std::size_t low = 0;
    while (low < g.size() && g[low] == 0) ++low;
    if (low > 0) {
        roots.insert(Rational(0));
        g.erase(g.begin(), g.begin() + static_cast<long>(low));
    }
    if (g.size() > 1) {
        g = usquarefree(g);
        const auto z = uprimitive(g);
        const auto ps = divisors(z.front());
        const auto qs = divisors(z.back());
        if (ps.size() * qs.size() > 4'000'000) throw ResourceCapExceeded("too many rational-root candidates");
        for (const auto& p : ps) {
            for (const auto& q : qs) {
                if (arith::gcd(p, q) != 1) continue;
                for (int sign : {1, -1}) {
                    Rational x(p * sign, q);
                    x.canonicalize();
                    if (ueval(g, x) == 0) roots.insert(x);
                }
            }
        }
    }
    return {roots.begin(), roots.end()};
}

}  // namespace orbitlab::poly

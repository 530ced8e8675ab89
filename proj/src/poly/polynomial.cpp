#include "orbitlab/poly/polynomial.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <optional>
#include <random>
#include <unordered_map>

#include "orbitlab/arith/matrix.hpp"
#include "orbitlab/error.hpp"

namespace orbitlab::poly {

namespace {

std::atomic<std::size_t> g_term_cap{5'000'000};

void check_cap(std::size_t n) {
    if (n > g_term_cap.load()) {
        throw ResourceCapExceeded("polynomial exceeds term cap (" + std::to_string(n) + " > " +
                                  std::to_string(g_term_cap.load()) + " terms)");
    }
}

unsigned mono_degree(const Monomial& m) {
    unsigned d = 0;
    for (auto e : m) d += e;
    return d;
}

// Graded lex, larger first.
bool grlex_greater(const Monomial& a, const Monomial& b) {
    const unsigned da = mono_degree(a), db = mono_degree(b);
    if (da != db) return da > db;
    return a > b;
}

// Packs monomials of degree <= max_degree into one word: the exponents of
// X0..X_{N-1} as digits in radix max_degree+1 (X_N is implied by the degree).
// Packing is additive, so products of monomials become sums of keys, and
// descending keys are descending lex order among monomials of equal degree.
class Packer {
public:
    Packer(std::size_t nvars, unsigned max_degree) : nvars_(nvars), radix_(max_degree + 1ULL) {
        std::uint64_t limit = 1;
        for (std::size_t i = 0; i + 1 < nvars_; ++i) {
            if (limit > (std::uint64_t(1) << 62) / radix_) {
                throw ResourceCapExceeded("monomial space too large to index (" + std::to_string(nvars) +
                                          " variables, degree " + std::to_string(max_degree) + ")");
            }
            limit *= radix_;
        }
        span_ = limit;
    }

    std::uint64_t encode(const Monomial& m) const {
        std::uint64_t k = 0;
        for (std::size_t i = 0; i + 1 < nvars_; ++i) k = k * radix_ + m[i];
        return k;
    }

    Monomial decode(std::uint64_t k, unsigned degree) const {
        Monomial m(nvars_, 0);
        unsigned used = 0;
        for (std::size_t i = nvars_ - 1; i-- > 0;) {
            m[i] = static_cast<std::uint32_t>(k % radix_);
            used += m[i];
            k /= radix_;
        }
        m[nvars_ - 1] = degree - used;
        return m;
    }

    std::uint64_t span() const { return span_; }

private:
    std::size_t nvars_;
    std::uint64_t radix_;
    std::uint64_t span_ = 1;
};

}  // namespace

std::size_t term_cap() { return g_term_cap.load(); }
void set_term_cap(std::size_t cap) { g_term_cap.store(cap); }

struct PolyAccess {
    static HomogPoly make(std::size_t nvars, std::vector<Term> sorted_terms) {
        HomogPoly p(nvars);
        p.terms_ = std::move(sorted_terms);
        return p;
    }
    static std::vector<Term>& terms(HomogPoly& p) { return p.terms_; }
};

HomogPoly HomogPoly::constant(std::size_t nvars, const Integer& c) {
    HomogPoly p(nvars);
    if (c != 0) p.terms_.push_back({Monomial(nvars, 0), c});
    return p;
}

HomogPoly HomogPoly::variable(std::size_t nvars, std::size_t index) {
    if (index >= nvars) throw InputError("variable index out of range");
    Monomial m(nvars, 0);
    m[index] = 1;
    HomogPoly p(nvars);
    p.terms_.push_back({std::move(m), 1});
    return p;
}

HomogPoly HomogPoly::from_terms(std::size_t nvars, std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return grlex_greater(a.exps, b.exps); });
    std::vector<Term> merged;
    for (auto& t : terms) {
        if (t.exps.size() != nvars) throw InputError("monomial length does not match variable count");
        if (!merged.empty() && merged.back().exps == t.exps) {
            merged.back().coef += t.coef;
        } else {
            if (!merged.empty() && merged.back().coef == 0) merged.pop_back();
            merged.push_back(std::move(t));
        }
    }
    if (!merged.empty() && merged.back().coef == 0) merged.pop_back();
    if (!merged.empty()) {
        const unsigned d = mono_degree(merged.front().exps);
        for (const auto& t : merged) {
            if (mono_degree(t.exps) != d) {
                throw NonHomogeneous("terms of degree " + std::to_string(d) + " and " +
                                     std::to_string(mono_degree(t.exps)));
            }
        }
    }
    check_cap(merged.size());
    return PolyAccess::make(nvars, std::move(merged));
}

HomogPoly HomogPoly::linear(const std::vector<Integer>& coeffs) {
    std::vector<Term> terms;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] == 0) continue;
        Monomial m(coeffs.size(), 0);
        m[i] = 1;
        terms.push_back({std::move(m), coeffs[i]});
    }
    return PolyAccess::make(coeffs.size(), std::move(terms));
}

unsigned HomogPoly::degree() const {
    if (terms_.empty()) throw InputError("the zero polynomial has no degree");
    return mono_degree(terms_.front().exps);
}

const Term& HomogPoly::leading_term() const {
    if (terms_.empty()) throw InputError("the zero polynomial has no leading term");
    return terms_.front();
}

std::vector<Integer> HomogPoly::linear_coefficients() const {
    if (!is_linear()) throw InputError("not a linear form: " + to_string());
    std::vector<Integer> c(nvars_, 0);
    for (const auto& t : terms_) {
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (t.exps[i] == 1) c[i] = t.coef;
        }
    }
    return c;
}

Integer HomogPoly::content() const {
    Integer g = 0;
    for (const auto& t : terms_) {
        g = arith::gcd(g, t.coef);
        if (g == 1) break;
    }
    return g;
}

HomogPoly HomogPoly::primitive_part() const {
    if (is_zero()) return *this;
    return divided_by(content());
}

HomogPoly HomogPoly::canonical() const {
    if (is_zero()) return *this;
    Integer c = content();
    if (terms_.front().coef < 0) c = -c;
    return divided_by(c);
}

Integer HomogPoly::evaluate(const std::vector<Integer>& point) const {
    if (point.size() != nvars_) throw InputError("point has wrong number of coordinates");
    std::vector<std::vector<Integer>> powers(nvars_);
    for (std::size_t i = 0; i < nvars_; ++i) {
        const auto top = max_exponent(i);
        powers[i].reserve(top + 1);
        powers[i].push_back(1);
        for (std::uint32_t e = 1; e <= top; ++e) powers[i].push_back(powers[i].back() * point[i]);
    }
    Integer sum = 0, prod;
    for (const auto& t : terms_) {
        prod = t.coef;
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (t.exps[i]) prod *= powers[i][t.exps[i]];
        }
        sum += prod;
    }
    return sum;
}

std::uint64_t HomogPoly::evaluate_mod(const std::vector<std::uint64_t>& point, std::uint64_t p) const {
    using arith::mul_mod;
    std::uint64_t sum = 0;
    for (const auto& t : terms_) {
        std::uint64_t v = arith::reduce_mod(t.coef, p);
        for (std::size_t i = 0; i < nvars_ && v; ++i) {
            if (t.exps[i]) v = mul_mod(v, arith::pow_mod(point[i], t.exps[i], p), p);
        }
        sum = (sum + v) % p;
    }
    return sum;
}

HomogPoly HomogPoly::operator-() const {
    HomogPoly r = *this;
    for (auto& t : r.terms_) t.coef = -t.coef;
    return r;
}

HomogPoly HomogPoly::scaled(const Integer& c) const {
    if (c == 0) return HomogPoly(nvars_);
    HomogPoly r = *this;
    for (auto& t : r.terms_) t.coef *= c;
    return r;
}

HomogPoly HomogPoly::divided_by(const Integer& c) const {
    if (c == 0) throw InputError("division by zero");
    HomogPoly r = *this;
    for (auto& t : r.terms_) {
        if (!mpz_divisible_p(t.coef.get_mpz_t(), c.get_mpz_t())) throw NotDivisible();
        mpz_divexact(t.coef.get_mpz_t(), t.coef.get_mpz_t(), c.get_mpz_t());
    }
    return r;
}

HomogPoly HomogPoly::pow(unsigned k) const {
    HomogPoly result = constant(nvars_, 1);
    HomogPoly base = *this;
    while (k) {
        if (k & 1) result = result * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return result;
}

std::uint32_t HomogPoly::max_exponent(std::size_t var) const {
    std::uint32_t m = 0;
    for (const auto& t : terms_) m = std::max(m, t.exps[var]);
    return m;
}

HomogPoly operator+(const HomogPoly& a, const HomogPoly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.nvars_ != b.nvars_) throw InputError("variable count mismatch");
    if (a.degree() != b.degree()) {
        throw NonHomogeneous("sum of degrees " + std::to_string(a.degree()) + " and " +
                             std::to_string(b.degree()));
    }
    std::vector<Term> out;
    out.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
        if (j == b.terms_.size() || (i < a.terms_.size() && a.terms_[i].exps > b.terms_[j].exps)) {
            out.push_back(a.terms_[i++]);
        } else if (i == a.terms_.size() || b.terms_[j].exps > a.terms_[i].exps) {
            out.push_back(b.terms_[j++]);
        } else {
            Integer c = a.terms_[i].coef + b.terms_[j].coef;
            if (c != 0) out.push_back({a.terms_[i].exps, std::move(c)});
            ++i;
            ++j;
        }
    }
    return PolyAccess::make(a.nvars_, std::move(out));
}

HomogPoly operator-(const HomogPoly& a, const HomogPoly& b) { return a + (-b); }

HomogPoly operator*(const HomogPoly& a, const HomogPoly& b) {
    if (a.nvars_ != b.nvars_ && !a.is_zero() && !b.is_zero()) throw InputError("variable count mismatch");
    const std::size_t nvars = std::max(a.nvars_, b.nvars_);
    if (a.is_zero() || b.is_zero()) return HomogPoly(nvars);
    const unsigned deg = a.degree() + b.degree();
    if (nvars == 1) {
        Integer c = a.terms_[0].coef * b.terms_[0].coef;
        return PolyAccess::make(1, {{Monomial{deg}, c}});
    }
    const Packer pk(nvars, deg);
    std::vector<std::uint64_t> kb(b.terms_.size());
    for (std::size_t j = 0; j < b.terms_.size(); ++j) kb[j] = pk.encode(b.terms_[j].exps);

    std::vector<std::pair<std::uint64_t, Integer>> collected;
    const std::uint64_t pairs = std::uint64_t(a.terms_.size()) * b.terms_.size();
    if (pk.span() <= (1ULL << 22) && pk.span() <= 16 * pairs) {
        // Dense accumulator over the whole monomial box.
        std::vector<Integer> acc(pk.span());
        std::vector<char> used(pk.span(), 0);
        for (const auto& ta : a.terms_) {
            const auto ka = pk.encode(ta.exps);
            for (std::size_t j = 0; j < kb.size(); ++j) {
                const auto k = ka + kb[j];
                mpz_addmul(acc[k].get_mpz_t(), ta.coef.get_mpz_t(), b.terms_[j].coef.get_mpz_t());
                used[k] = 1;
            }
        }
        for (std::uint64_t k = pk.span(); k-- > 0;) {
            if (used[k] && acc[k] != 0) collected.emplace_back(k, std::move(acc[k]));
        }
    } else {
        std::unordered_map<std::uint64_t, Integer> acc;
        acc.reserve(std::min<std::uint64_t>(pairs, 1 << 20));
        for (const auto& ta : a.terms_) {
            const auto ka = pk.encode(ta.exps);
            for (std::size_t j = 0; j < kb.size(); ++j) {
                Integer& slot = acc[ka + kb[j]];
                mpz_addmul(slot.get_mpz_t(), ta.coef.get_mpz_t(), b.terms_[j].coef.get_mpz_t());
            }
            check_cap(acc.size());
        }
        collected.reserve(acc.size());
        for (auto& [k, c] : acc) {
            if (c != 0) collected.emplace_back(k, std::move(c));
        }
        std::sort(collected.begin(), collected.end(),
                  [](const auto& x, const auto& y) { return x.first > y.first; });
    }
    check_cap(collected.size());
    std::vector<Term> out;
    out.reserve(collected.size());
    for (auto& [k, c] : collected) out.push_back({pk.decode(k, deg), std::move(c)});
    return PolyAccess::make(nvars, std::move(out));
}

bool operator==(const HomogPoly& a, const HomogPoly& b) {
    if (a.is_zero() && b.is_zero()) return true;
    if (a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
        if (a.terms_[i].exps != b.terms_[i].exps || a.terms_[i].coef != b.terms_[i].coef) return false;
    }
    return true;
}

bool proportional(const HomogPoly& a, const HomogPoly& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    return a.canonical() == b.canonical();
}

std::string variable_name(std::size_t nvars, std::size_t i) {
    static const char* aliases[] = {"X", "Y", "Z", "W"};
    if (nvars <= 4) return aliases[i];
    return "X" + std::to_string(i);
}

std::string HomogPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : terms_) {
        Integer c = t.coef;
        if (first) {
            if (c < 0) {
                out += "-";
                c = -c;
            }
        } else {
            out += c < 0 ? " - " : " + ";
            if (c < 0) c = -c;
        }
        first = false;
        std::string mono;
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (t.exps[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += variable_name(nvars_, i);
            if (t.exps[i] > 1) mono += "^" + std::to_string(t.exps[i]);
        }
        if (mono.empty()) {
            out += c.get_str();
        } else if (c == 1) {
            out += mono;
        } else {
            out += c.get_str() + "*" + mono;
        }
    }
    return out;
}

namespace {

// Horner in X_var over the terms of f that only involve X_var..X_N.
HomogPoly horner(const std::vector<Term>& terms, std::size_t var, const std::vector<HomogPoly>& g) {
    const std::size_t target_nvars = g.front().nvars();
    const std::size_t n = g.size();
    if (terms.empty()) return HomogPoly(target_nvars);
    if (var + 1 == n) {
        // Single term c * X_N^k.
        return g[var].pow(terms.front().exps[var]).scaled(terms.front().coef);
    }
    // Terms are sorted lex, so exponents of X_var come in descending blocks.
    std::vector<std::pair<std::uint32_t, std::vector<Term>>> blocks;
    for (const auto& t : terms) {
        if (blocks.empty() || blocks.back().first != t.exps[var]) blocks.push_back({t.exps[var], {}});
        Term stripped = t;
        stripped.exps[var] = 0;
        blocks.back().second.push_back(std::move(stripped));
    }
    HomogPoly acc(target_nvars);
    std::uint32_t current = blocks.front().first;
    bool started = false;
    for (auto& [k, block] : blocks) {
        if (started) {
            for (std::uint32_t s = k; s < current; ++s) acc = acc * g[var];
        }
        acc = acc + horner(block, var + 1, g);
        started = true;
        current = k;
    }
    for (std::uint32_t s = 0; s < current; ++s) acc = acc * g[var];
    return acc;
}

}  // namespace

HomogPoly compose(const HomogPoly& f, const std::vector<HomogPoly>& g) {
    if (g.empty()) throw InputError("compose needs at least one coordinate");
    if (f.nvars() != g.size()) {
        throw InputError("dimension mismatch: polynomial in " + std::to_string(f.nvars()) +
                         " variables composed with " + std::to_string(g.size()) + " coordinates");
    }
    const std::size_t nv = g.front().nvars();
    std::optional<unsigned> d;
    for (const auto& gi : g) {
        if (gi.nvars() != nv) throw InputError("dimension mismatch among coordinates");
        if (gi.is_zero()) continue;
        if (d && *d != gi.degree()) throw InputError("coordinates have different degrees");
        d = gi.degree();
    }
    if (f.is_zero()) return HomogPoly(nv);
    HomogPoly r = horner(f.terms(), 0, g);
    check_cap(r.terms().size());
    return r;
}

namespace {

// Cheap refutation for a linear divisor: f must vanish wherever g does.
bool linear_screen_rejects(const HomogPoly& f, const HomogPoly& g) {
    static thread_local std::mt19937_64 rng(0x5eed);
    const auto coeffs = g.linear_coefficients();
    const std::uint64_t p = arith::certificate_primes()[0];
    std::size_t pivot = coeffs.size();
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (arith::reduce_mod(coeffs[i], p) != 0) {
            pivot = i;
            break;
        }
    }
    if (pivot == coeffs.size()) return false;
    for (int round = 0; round < 2; ++round) {
        std::vector<std::uint64_t> pt(coeffs.size());
        std::uint64_t s = 0;
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            if (i == pivot) continue;
            pt[i] = rng() % p;
            s = (s + arith::mul_mod(arith::reduce_mod(coeffs[i], p), pt[i], p)) % p;
        }
        const std::uint64_t inv = arith::pow_mod(arith::reduce_mod(coeffs[pivot], p), p - 2, p);
        pt[pivot] = arith::mul_mod((p - s) % p, inv, p);
        if (f.evaluate_mod(pt, p) != 0) return true;
    }
    return false;
}

bool divides_monomial(const Monomial& small, const Monomial& big) {
    for (std::size_t i = 0; i < small.size(); ++i) {
        if (small[i] > big[i]) return false;
    }
    return true;
}

}  // namespace

bool try_divide(const HomogPoly& f, const HomogPoly& g, HomogPoly& q) {
    if (g.is_zero()) throw InputError("division by the zero polynomial");
    const std::size_t nv = g.nvars();
    if (f.is_zero()) {
        q = HomogPoly(nv);
        return true;
    }
    if (f.nvars() != nv) throw InputError("variable count mismatch");
    const unsigned df = f.degree(), dg = g.degree();
    if (dg > df) return false;
    if (!divides_monomial(g.terms().back().exps, f.terms().back().exps)) return false;
    if (!divides_monomial(g.terms().front().exps, f.terms().front().exps)) return false;
    for (std::size_t i = 0; i < nv; ++i) {
        if (g.max_exponent(i) > f.max_exponent(i)) return false;
    }
    if (g.is_linear() && linear_screen_rejects(f, g)) return false;

    if (nv == 1) {
        const Integer& a = f.terms()[0].coef;
        const Integer& b = g.terms()[0].coef;
        if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t())) return false;
        q = HomogPoly::from_terms(1, {{Monomial{df - dg}, a / b}});
        return true;
    }

    const Packer pk(nv, df);
    std::map<std::uint64_t, Integer, std::greater<>> rem;
    for (const auto& t : f.terms()) rem.emplace(pk.encode(t.exps), t.coef);
    std::vector<std::pair<std::uint64_t, Integer>> gk;
    for (const auto& t : g.terms()) gk.emplace_back(pk.encode(t.exps), t.coef);
    const Monomial& lead = g.terms().front().exps;
    const Integer& lc = g.terms().front().coef;

    std::vector<Term> out;
    Integer c, tmp;
    while (!rem.empty()) {
        auto top = rem.begin();
        Monomial m = pk.decode(top->first, df);
        if (!divides_monomial(lead, m)) return false;
        if (!mpz_divisible_p(top->second.get_mpz_t(), lc.get_mpz_t())) return false;
        mpz_divexact(c.get_mpz_t(), top->second.get_mpz_t(), lc.get_mpz_t());
        for (std::size_t i = 0; i < nv; ++i) m[i] -= lead[i];
        const std::uint64_t kq = top->first - gk.front().first;
        rem.erase(top);
        for (std::size_t j = 1; j < gk.size(); ++j) {
            auto [it, inserted] = rem.try_emplace(kq + gk[j].first);
            mpz_submul(it->second.get_mpz_t(), c.get_mpz_t(), gk[j].second.get_mpz_t());
            if (it->second == 0) rem.erase(it);
        }
        out.push_back({std::move(m), c});
        check_cap(out.size());
    }
    q = PolyAccess::make(nv, std::move(out));
    return true;
}

Quotient exact_divide(const HomogPoly& f, const HomogPoly& g) {
    if (g.is_zero()) throw InputError("division by the zero polynomial");
    // Divide by the primitive part; the quotient is then integral (Gauss).
    const Integer cont = g.content();
    const HomogPoly gp = g.divided_by(cont);
    HomogPoly q;
    if (!try_divide(f, gp, q)) throw NotDivisible();
    return {q, Rational(1) / Rational(cont)};
}

MonomialSplit extract_monomial_factor(const HomogPoly& f) {
    if (f.is_zero()) throw InputError("monomial factor of the zero polynomial");
    const std::size_t nv = f.nvars();
    Monomial low = f.terms().front().exps;
    for (const auto& t : f.terms()) {
        for (std::size_t i = 0; i < nv; ++i) low[i] = std::min(low[i], t.exps[i]);
    }
    std::vector<Term> rest = f.terms();
    for (auto& t : rest) {
        for (std::size_t i = 0; i < nv; ++i) t.exps[i] -= low[i];
    }
    // Subtracting a fixed monomial preserves the order.
    return {low, PolyAccess::make(nv, std::move(rest))};
}

HomogPoly monomial_poly(const Monomial& exps) {
    return PolyAccess::make(exps.size(), {{exps, 1}});
}

std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned d) {
    if (nvars == 0) throw InputError("monomials need at least one variable");
    std::vector<Monomial> out;
    Monomial m(nvars, 0);
    m[0] = d;
    for (;;) {
        out.push_back(m);
        // rightmost nonzero entry among the first nvars-1, move one unit right
        std::size_t i = nvars - 1;
        while (i > 0 && m[i - 1] == 0) --i;
        if (i == 0) break;
        --i;
        const std::uint32_t tail = m[nvars - 1];
        m[nvars - 1] = 0;
        --m[i];
        m[i + 1] = tail + 1;
    }
    return out;
}

}  // namespace orbitlab::poly

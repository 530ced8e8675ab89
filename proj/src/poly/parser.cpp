#include "orbitlab/poly/parser.hpp"

#include <cctype>
#include <map>
#include <optional>

#include "orbitlab/error.hpp"

namespace orbitlab::poly {

namespace {

// Not necessarily homogeneous while parsing.
using Sparse = std::map<Monomial, Integer>;

Sparse sp_add(Sparse a, const Sparse& b, bool negate) {
    for (const auto& [m, c] : b) {
        Integer& slot = a[m];
        if (negate) slot -= c; else slot += c;
        if (slot == 0) a.erase(m);
    }
    return a;
}

Sparse sp_mul(const Sparse& a, const Sparse& b, std::size_t nvars) {
    Sparse out;
    for (const auto& [ma, ca] : a) {
        for (const auto& [mb, cb] : b) {
            Monomial m(nvars);
            for (std::size_t i = 0; i < nvars; ++i) m[i] = ma[i] + mb[i];
            Integer& slot = out[m];
            slot += ca * cb;
            if (slot == 0) out.erase(m);
        }
    }
    return out;
}

Sparse sp_pow(const Sparse& a, unsigned k, std::size_t nvars) {
    Sparse r{{Monomial(nvars, 0), 1}};
    for (unsigned i = 0; i < k; ++i) r = sp_mul(r, a, nvars);
    return r;
}

HomogPoly to_homog(const Sparse& s, std::size_t nvars) {
    std::vector<Term> terms;
    for (const auto& [m, c] : s) terms.push_back({m, c});
    return HomogPoly::from_terms(nvars, std::move(terms));
}

struct Operand {
    Sparse value;
    unsigned exponent = 1;
    Sparse base;
};

class Parser {
public:
    Parser(const std::string& text, std::size_t dimension) : s_(text), nvars_(dimension + 1) {}

    ParsedProduct run() {
        skip();
        std::vector<Operand> factors;
        bool single = true;
        Sparse v = expr(&factors, &single);
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        ParsedProduct out;
        out.expanded = to_homog(v, nvars_);
        if (single && factors.size() > 1) {
            for (const auto& f : factors) out.factors.push_back({to_homog(f.base, nvars_), f.exponent});
        }
        return out;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw SyntaxError(msg, pos_); }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    static std::optional<unsigned> degree_of(const Sparse& s) {
        if (s.empty()) return std::nullopt;
        unsigned d = 0;
        for (auto e : s.begin()->first) d += e;
        return d;
    }

    Sparse expr(std::vector<Operand>* factors, bool* single) {
        skip();
        Sparse acc = term(factors);
        std::optional<unsigned> deg = degree_of(acc);
        for (;;) {
            bool negate = false;
            if (eat('+')) {
            } else if (eat('-')) {
                negate = true;
            } else {
                return acc;
            }
            if (single) *single = false;
            skip();
            const std::size_t at = pos_;
            Sparse t = term(nullptr);
            const auto dt = degree_of(t);
            if (deg && dt && *deg != *dt) {
                throw NonHomogeneous("terms of degree " + std::to_string(*deg) + " and " + std::to_string(*dt), at);
            }
            if (!deg) deg = dt;
            acc = sp_add(acc, t, negate);
        }
    }

    Sparse term(std::vector<Operand>* factors) {
        Operand first = power();
        Sparse acc = first.value;
        if (factors) factors->push_back(std::move(first));
        while (eat('*')) {
            Operand next = power();
            acc = sp_mul(acc, next.value, nvars_);
            if (factors) factors->push_back(std::move(next));
        }
        check_juxtaposition();
        return acc;
    }

    void check_juxtaposition() {
        skip();
        if (pos_ < s_.size()) {
            const char c = s_[pos_];
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '(') {
                fail("implicit multiplication is not allowed; use '*'");
            }
        }
    }

    // Unary minus binds looser than '^': -X^2 is -(X^2).
    Operand power() {
        bool negative = false;
        while (eat('-')) negative = !negative;
        Operand op;
        op.base = primary();
        op.value = op.base;
        if (eat('^')) {
            skip();
            const std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("expected exponent after '^'");
            if (pos_ - start > 6) fail("exponent too large");
            op.exponent = static_cast<unsigned>(std::stoul(s_.substr(start, pos_ - start)));
            op.value = sp_pow(op.base, op.exponent, nvars_);
        }
        if (negative) {
            for (auto& [m, c] : op.value) c = -c;
        }
        check_juxtaposition();
        return op;
    }

    Sparse primary() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Sparse v = expr(nullptr, nullptr);
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            Integer value(s_.substr(start, pos_ - start));
            Sparse v;
            if (value != 0) v[Monomial(nvars_, 0)] = value;
            return v;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            const std::string name = s_.substr(start, pos_ - start);
            const std::size_t index = resolve(name, start);
            Monomial m(nvars_, 0);
            m[index] = 1;
            return Sparse{{m, 1}};
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::size_t resolve(const std::string& name, std::size_t at) const {
        if (nvars_ <= 4 && name.size() == 1) {
            static const std::string aliases = "XYZW";
            const auto k = aliases.find(name[0]);
            if (k != std::string::npos && k < nvars_) return k;
        }
        if (name.size() >= 2 && name[0] == 'X') {
            bool digits = true;
            for (std::size_t i = 1; i < name.size(); ++i) digits &= std::isdigit(static_cast<unsigned char>(name[i])) != 0;
            if (digits && name.size() < 8 && (name.size() == 2 || name[1] != '0')) {
                const std::size_t k = std::stoul(name.substr(1));
                if (k < nvars_) return k;
            }
        }
        throw UnknownVariable(name, at);
    }

    const std::string& s_;
    std::size_t nvars_;
    std::size_t pos_ = 0;
};

}  // namespace

ParsedProduct parse_with_factors(const std::string& text, std::size_t dimension) {
    return Parser(text, dimension).run();
}

HomogPoly parse_polynomial(const std::string& text, std::size_t dimension) {
    return parse_with_factors(text, dimension).expanded;
}

}  // namespace orbitlab::poly

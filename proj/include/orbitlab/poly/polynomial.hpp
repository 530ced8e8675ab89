#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "orbitlab/arith/integer.hpp"

namespace orbitlab::poly {

using arith::Integer;
using arith::Rational;

/// Exponent vector, one entry per variable X0..XN.
using Monomial = std::vector<std::uint32_t>;

struct Term {
    Monomial exps;
    Integer coef;
};

/// Polynomials above this many terms raise ResourceCapExceeded.
std::size_t term_cap();
void set_term_cap(std::size_t cap);

/// Sparse homogeneous polynomial over Z in variables X0..XN.
///
/// Terms are kept sorted by graded lex (X0 > X1 > ... > XN), largest first,
/// with nonzero coefficients.  The zero polynomial has no terms and no degree.
/// Integer content is kept: map coordinates are only defined up to a common
/// scalar, so individual coordinates must not be rescaled silently.
class HomogPoly {
public:
    HomogPoly() = default;
    /// Zero polynomial in nvars variables.
    explicit HomogPoly(std::size_t nvars) : nvars_(nvars) {}

    static HomogPoly constant(std::size_t nvars, const Integer& c);
    static HomogPoly variable(std::size_t nvars, std::size_t index);
    /// Merges duplicate monomials and drops zeros.  Throws NonHomogeneous on mixed degrees.
    static HomogPoly from_terms(std::size_t nvars, std::vector<Term> terms);
    /// Linear form sum coeffs[i]*Xi.
    static HomogPoly linear(const std::vector<Integer>& coeffs);

    std::size_t nvars() const noexcept { return nvars_; }
    /// Ambient projective dimension N = nvars - 1.
    std::size_t dimension() const noexcept { return nvars_ - 1; }
    bool is_zero() const noexcept { return terms_.empty(); }
    /// Throws InputError on the zero polynomial.
    unsigned degree() const;
    const std::vector<Term>& terms() const noexcept { return terms_; }
    const Term& leading_term() const;

    bool is_constant() const { return !is_zero() && degree() == 0; }
    bool is_linear() const { return !is_zero() && degree() == 1; }
    /// Coefficients of a linear form (InputError if not linear).
    std::vector<Integer> linear_coefficients() const;

    /// gcd of coefficients (0 for the zero polynomial).
    Integer content() const;
    /// Divided by its content, leading coefficient positive.
    HomogPoly canonical() const;
    /// Divided by its content, sign kept.
    HomogPoly primitive_part() const;

    Integer evaluate(const std::vector<Integer>& point) const;
    /// Value modulo a 62-bit prime.
    std::uint64_t evaluate_mod(const std::vector<std::uint64_t>& point, std::uint64_t p) const;

    HomogPoly operator-() const;
    HomogPoly scaled(const Integer& c) const;
    /// Exact division of every coefficient by c.
    HomogPoly divided_by(const Integer& c) const;
    HomogPoly pow(unsigned k) const;

    friend HomogPoly operator+(const HomogPoly& a, const HomogPoly& b);
    friend HomogPoly operator-(const HomogPoly& a, const HomogPoly& b);
    friend HomogPoly operator*(const HomogPoly& a, const HomogPoly& b);
    friend bool operator==(const HomogPoly& a, const HomogPoly& b);

    /// Largest exponent of Xi over all terms.
    std::uint32_t max_exponent(std::size_t var) const;

    /// Grammar-conforming text.  Uses X,Y,Z,W when N <= 3, else X0..XN.
    std::string to_string() const;

private:
    std::size_t nvars_ = 0;
    std::vector<Term> terms_;

    friend struct PolyAccess;
};

/// a == c*b for some nonzero rational c.
bool proportional(const HomogPoly& a, const HomogPoly& b);

/// Name of variable i in a space with nvars variables.
std::string variable_name(std::size_t nvars, std::size_t i);

/// F(G_0, ..., G_N).  All G_i share nvars and degree; F has G.size() variables.
HomogPoly compose(const HomogPoly& f, const std::vector<HomogPoly>& g);

struct Quotient {
    HomogPoly quotient;
    Rational scalar;  // scalar * quotient * divisor == dividend
};

/// Exact division.  Throws NotDivisible.
Quotient exact_divide(const HomogPoly& f, const HomogPoly& g);

/// True and sets q when f = q * g with q integral (g need not be primitive).
bool try_divide(const HomogPoly& f, const HomogPoly& g, HomogPoly& q);

struct MonomialSplit {
    Monomial exps;
    HomogPoly cofactor;
};

MonomialSplit extract_monomial_factor(const HomogPoly& f);

/// Monomial prod Xi^e_i as a polynomial.
HomogPoly monomial_poly(const Monomial& exps);

/// All exponent vectors of total degree d in nvars variables, descending lex.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned d);

}  // namespace orbitlab::poly

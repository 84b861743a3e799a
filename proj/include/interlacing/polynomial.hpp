#pragma once

#include "interlacing/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace interlacing {

/// Univariate polynomial with exact rational coefficients, stored in
/// ascending degree order and always trimmed so the last stored
/// coefficient is nonzero. The zero polynomial stores nothing and has
/// degree -1.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);
    Polynomial(std::initializer_list<Rational> coeffs);

    static Polynomial constant(const Rational& c);
    /// x^k
    static Polynomial monomial(std::size_t k, const Rational& c = 1);
    /// Product of (x - r) over the given roots. Empty list gives 1.
    static Polynomial from_roots(std::span<const Rational> roots);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }

    const std::vector<Rational>& coeffs() const { return coeffs_; }
    /// Coefficient of x^k, zero past the degree.
    Rational coeff(std::size_t k) const;
    /// Leading coefficient; zero for the zero polynomial.
    Rational leading() const;

    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Rational& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial operator-() const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

    /// Human-readable form, e.g. "x^2 - 3*x + 3".
    std::string to_string() const;

private:
    void trim();

    std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

/// f + alpha * g.
Polynomial lin_comb(const Polynomial& f, const Polynomial& g, const Rational& alpha);

/// Horner evaluation.
Rational evaluate(const Polynomial& p, const Rational& t);

Polynomial derivative(const Polynomial& p);

/// Euclidean division p = q * d + r with deg r < deg d. Throws InvalidInput
/// if d is zero.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& p, const Polynomial& d);

/// Scales p so its leading coefficient is 1. Zero stays zero.
Polynomial make_monic(const Polynomial& p);

/// Monic gcd. Throws InvalidInput when both inputs are zero.
Polynomial poly_gcd(const Polynomial& p, const Polynomial& q);

/// p / gcd(p, p'), monic. Same distinct roots as p, all simple.
/// Throws InvalidInput on zero input.
Polynomial squarefree_part(const Polynomial& p);

/// p(x - t): translates every root of p by +t.
Polynomial shift(const Polynomial& p, const Rational& t);

}  // namespace interlacing

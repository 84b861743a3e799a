#include "interlacing/polynomial.hpp"

#include "interlacing/errors.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace interlacing {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial(std::vector<Rational>{c}); }

Polynomial Polynomial::monomial(std::size_t k, const Rational& c) {
    std::vector<Rational> coeffs(k + 1);
    coeffs[k] = c;
    return Polynomial(std::move(coeffs));
}

Polynomial Polynomial::from_roots(std::span<const Rational> roots) {
    Polynomial result = constant(1);
    for (const auto& r : roots) {
        result = result * Polynomial{Rational(-r), Rational(1)};
    }
    return result;
}

void Polynomial::trim() {
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rational Polynomial::coeff(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : Rational(0);
}

Rational Polynomial::leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (sgn(c) == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& a : coeffs_) a *= c;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-() const {
    Polynomial out = *this;
    for (auto& a : out.coeffs_) a = -a;
    return out;
}

std::string Polynomial::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rational& c = coeffs_[static_cast<std::size_t>(k)];
        if (sgn(c) == 0) continue;
        Rational mag = abs(c);
        if (first) {
            if (sgn(c) < 0) os << "-";
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        first = false;
        const bool unit = mag == 1;
        if (k == 0 || !unit) {
            os << mag.get_str();
            if (k > 0) os << "*";
        }
        if (k >= 1) os << "x";
        if (k >= 2) os << "^" << k;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

Polynomial lin_comb(const Polynomial& f, const Polynomial& g, const Rational& alpha) {
    return f + g * alpha;
}

Rational evaluate(const Polynomial& p, const Rational& t) {
    Rational acc = 0;
    const auto& c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc *= t;
        acc += *it;
    }
    return acc;
}

Polynomial derivative(const Polynomial& p) {
    if (p.degree() < 1) return {};
    std::vector<Rational> out(static_cast<std::size_t>(p.degree()));
    for (std::size_t k = 1; k < p.coeffs().size(); ++k) out[k - 1] = p.coeffs()[k] * static_cast<long>(k);
    return Polynomial(std::move(out));
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& p, const Polynomial& d) {
    if (d.is_zero()) throw InvalidInput("polynomial division by zero");
    if (p.degree() < d.degree()) return {Polynomial{}, p};

    std::vector<Rational> rem = p.coeffs();
    std::vector<Rational> quot(static_cast<std::size_t>(p.degree() - d.degree() + 1));
    const auto dd = static_cast<std::size_t>(d.degree());
    const Rational lead = d.leading();
    for (std::size_t k = quot.size(); k-- > 0;) {
        Rational q = rem[k + dd] / lead;
        if (sgn(q) == 0) continue;
        for (std::size_t i = 0; i <= dd; ++i) rem[k + i] -= q * d.coeffs()[i];
        quot[k] = std::move(q);
    }
    rem.resize(dd);
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial make_monic(const Polynomial& p) {
    if (p.is_zero()) return p;
    return p * Rational(1 / p.leading());
}

Polynomial poly_gcd(const Polynomial& p, const Polynomial& q) {
    if (p.is_zero() && q.is_zero()) throw InvalidInput("gcd(0, 0) is undefined");
    Polynomial a = make_monic(p);
    Polynomial b = make_monic(q);
    while (!b.is_zero()) {
        Polynomial r = make_monic(divmod(a, b).second);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

Polynomial squarefree_part(const Polynomial& p) {
    if (p.is_zero()) throw InvalidInput("squarefree part of the zero polynomial");
    if (p.is_constant()) return Polynomial::constant(1);
    const Polynomial g = poly_gcd(p, derivative(p));
    return make_monic(divmod(p, g).first);
}

Polynomial shift(const Polynomial& p, const Rational& t) {
    // Horner in the shifted variable: p(x - t) = (...(c_n (x - t) + c_{n-1})(x - t) + ...)
    const Polynomial lin{Rational(-t), Rational(1)};
    Polynomial acc;
    const auto& c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc = acc * lin + Polynomial::constant(*it);
    }
    return acc;
}

}  // namespace interlacing

#pragma once

#include "alpfeas/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace alpfeas {

/// Univariate polynomial in the time parameter K with exact rational
/// coefficients. coeff(i) is the coefficient of K^i. The zero polynomial
/// is the empty coefficient sequence; otherwise the leading coefficient
/// is nonzero (trailing zeros are trimmed on construction).
class KPoly {
public:
    KPoly() = default;
    KPoly(const Rational& c) { // NOLINT: implicit, constants embed naturally
        if (!c.is_zero()) c_.push_back(c);
    }
    KPoly(long c) : KPoly(Rational(c)) {} // NOLINT

    static KPoly k();                                 // the monomial K
    static KPoly from_coeffs(std::vector<Rational> coeffs);
    /// a*K + b
    static KPoly linear(const Rational& a, const Rational& b);

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    /// Coefficient of K^i; zero beyond the degree.
    const Rational& coeff(int i) const;
    const Rational& leading() const;
    /// The constant term coeff(0).
    const Rational& constant() const { return coeff(0); }

    Rational eval(const Rational& k) const;

    KPoly operator-() const;
    friend KPoly operator+(const KPoly& a, const KPoly& b);
    friend KPoly operator-(const KPoly& a, const KPoly& b);
    friend KPoly operator*(const KPoly& a, const KPoly& b);
    KPoly& operator+=(const KPoly& o) { return *this = *this + o; }
    KPoly& operator-=(const KPoly& o) { return *this = *this - o; }
    KPoly& operator*=(const KPoly& o) { return *this = *this * o; }
    KPoly scaled(const Rational& s) const;

    friend bool operator==(const KPoly& a, const KPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const KPoly& a, const KPoly& b) { return !(a == b); }

    /// Euclidean division by a nonzero divisor: returns {quotient, remainder}
    /// with deg(remainder) < deg(divisor).
    static std::pair<KPoly, KPoly> divmod(const KPoly& a, const KPoly& b);
    /// Monic gcd; gcd(0, 0) = 0.
    static KPoly gcd(KPoly a, KPoly b);

    /// Compact text in decreasing powers, e.g. "K+2", "3*K^2-1/2*K", "0".
    std::string str() const;

private:
    void trim();
    std::vector<Rational> c_;
};

} // namespace alpfeas

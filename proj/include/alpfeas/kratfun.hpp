#pragma once

#include "alpfeas/kpoly.hpp"
#include "alpfeas/rational.hpp"

#include <string>

namespace alpfeas {

/// Rational function in K, the working scalar of the ALP simplex.
/// Kept reduced (gcd(num, den) constant) with a monic denominator, so
/// representations are unique and equality is structural. Ordered by the
/// sign of values as K grows beyond every real root: an ordered field.
class KRatFun {
public:
    KRatFun() : den_(Rational(1)) {}
    KRatFun(const Rational& c) : num_(c), den_(Rational(1)) {} // NOLINT
    KRatFun(long c) : num_(Rational(c)), den_(Rational(1)) {}  // NOLINT
    KRatFun(const KPoly& p) : num_(p), den_(Rational(1)) {}    // NOLINT
    /// num/den; throws std::domain_error if den is the zero polynomial.
    KRatFun(KPoly num, KPoly den);

    const KPoly& num() const { return num_; }
    const KPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

    /// Sign of f(K) for all sufficiently large K: sign of the leading
    /// numerator coefficient (the denominator is monic). 0 iff f == 0.
    int sign_at_infinity() const { return num_.leading().sign(); }

    /// Exact value at K = k; throws std::domain_error at a pole.
    Rational eval(const Rational& k) const;
    bool has_pole_at(const Rational& k) const { return den_.eval(k).is_zero(); }

    KRatFun operator-() const;
    friend KRatFun operator+(const KRatFun& a, const KRatFun& b);
    friend KRatFun operator-(const KRatFun& a, const KRatFun& b);
    friend KRatFun operator*(const KRatFun& a, const KRatFun& b);
    /// Throws std::domain_error when dividing by the zero function.
    friend KRatFun operator/(const KRatFun& a, const KRatFun& b);
    KRatFun& operator+=(const KRatFun& o) { return *this = *this + o; }
    KRatFun& operator-=(const KRatFun& o) { return *this = *this - o; }
    KRatFun& operator*=(const KRatFun& o) { return *this = *this * o; }
    KRatFun& operator/=(const KRatFun& o) { return *this = *this / o; }

    friend bool operator==(const KRatFun& a, const KRatFun& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const KRatFun& a, const KRatFun& b) { return !(a == b); }

    /// "num" or "num/den", polynomials in compact form, parenthesized
    /// when they have more than one term.
    std::string str() const;

private:
    void normalize();
    KPoly num_;
    KPoly den_;
};

/// Sign of f at infinity; the simplex uses this as its only comparison.
inline int sign(const KRatFun& f) { return f.sign_at_infinity(); }

/// Total order at infinity: -1, 0, +1 as a <, =, > b eventually.
inline int compare(const KRatFun& a, const KRatFun& b) { return sign(a - b); }

} // namespace alpfeas

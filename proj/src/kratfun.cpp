#include "alpfeas/kratfun.hpp"

#include <stdexcept>

namespace alpfeas {

KRatFun::KRatFun(KPoly num, KPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("kratfun: zero denominator");
    normalize();
}

void KRatFun::normalize() {
    if (num_.is_zero()) {
        den_ = KPoly(Rational(1));
        return;
    }
    if (den_.degree() > 0 && num_.degree() > 0) {
        KPoly g = KPoly::gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = KPoly::divmod(num_, g).first;
            den_ = KPoly::divmod(den_, g).first;
        }
    }
    const Rational lc = den_.leading();
    if (!(lc == Rational(1))) {
        const Rational inv = Rational(1) / lc;
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

Rational KRatFun::eval(const Rational& k) const {
    const Rational d = den_.eval(k);
    if (d.is_zero()) throw std::domain_error("kratfun: pole at K = " + k.str());
    return num_.eval(k) / d;
}

KRatFun KRatFun::operator-() const {
    KRatFun r = *this;
    r.num_ = -r.num_;
    return r;
}

KRatFun operator+(const KRatFun& a, const KRatFun& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    KRatFun r;
    if (a.den_ == b.den_) {
        r.num_ = a.num_ + b.num_;
        r.den_ = a.den_;
    } else {
        r.num_ = a.num_ * b.den_ + b.num_ * a.den_;
        r.den_ = a.den_ * b.den_;
    }
    r.normalize();
    return r;
}

KRatFun operator-(const KRatFun& a, const KRatFun& b) {
    return a + (-b);
}

KRatFun operator*(const KRatFun& a, const KRatFun& b) {
    if (a.is_zero() || b.is_zero()) return {};
    KRatFun r;
    r.num_ = a.num_ * b.num_;
    r.den_ = a.den_ * b.den_;
    r.normalize();
    return r;
}

KRatFun operator/(const KRatFun& a, const KRatFun& b) {
    if (b.is_zero()) throw std::domain_error("kratfun: division by zero function");
    if (a.is_zero()) return {};
    KRatFun r;
    r.num_ = a.num_ * b.den_;
    r.den_ = a.den_ * b.num_;
    r.normalize();
    return r;
}

std::string KRatFun::str() const {
    auto wrap = [](const KPoly& p) {
        std::string s = p.str();
        bool atom = p.is_constant() || (s.find('+') == std::string::npos &&
                                        s.rfind('-', 0) == std::string::npos &&
                                        s.find('-', 1) == std::string::npos);
        return atom ? s : "(" + s + ")";
    };
    if (den_ == KPoly(Rational(1))) return wrap(num_);
    return wrap(num_) + "/" + wrap(den_);
}

} // namespace alpfeas

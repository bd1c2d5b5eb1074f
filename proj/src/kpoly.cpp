#include "alpfeas/kpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace alpfeas {

namespace {
const Rational kZero{};
} // namespace

KPoly KPoly::k() {
    return from_coeffs({Rational(0), Rational(1)});
}

KPoly KPoly::from_coeffs(std::vector<Rational> coeffs) {
    KPoly p;
    p.c_ = std::move(coeffs);
    p.trim();
    return p;
}

KPoly KPoly::linear(const Rational& a, const Rational& b) {
    return from_coeffs({b, a});
}

void KPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const Rational& KPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
    return c_[static_cast<size_t>(i)];
}

const Rational& KPoly::leading() const {
    if (c_.empty()) return kZero;
    return c_.back();
}

Rational KPoly::eval(const Rational& k) const {
    Rational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * k + *it;
    return acc;
}

KPoly KPoly::operator-() const {
    KPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

KPoly operator+(const KPoly& a, const KPoly& b) {
    KPoly r;
    r.c_.resize(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < r.c_.size(); ++i) {
        r.c_[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
    }
    r.trim();
    return r;
}

KPoly operator-(const KPoly& a, const KPoly& b) {
    return a + (-b);
}

KPoly operator*(const KPoly& a, const KPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    KPoly r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) {
            r.c_[i + j] += a.c_[i] * b.c_[j];
        }
    }
    r.trim();
    return r;
}

KPoly KPoly::scaled(const Rational& s) const {
    if (s.is_zero()) return {};
    KPoly r = *this;
    for (auto& c : r.c_) c *= s;
    return r;
}

std::pair<KPoly, KPoly> KPoly::divmod(const KPoly& a, const KPoly& b) {
    if (b.is_zero()) throw std::domain_error("kpoly: division by zero polynomial");
    KPoly rem = a;
    KPoly quot;
    const int db = b.degree();
    if (rem.degree() >= db) {
        quot.c_.assign(static_cast<size_t>(rem.degree() - db) + 1, Rational(0));
        while (!rem.is_zero() && rem.degree() >= db) {
            const int shift = rem.degree() - db;
            Rational f = rem.leading() / b.leading();
            quot.c_[static_cast<size_t>(shift)] = f;
            // rem -= f * K^shift * b
            for (int i = 0; i <= db; ++i) {
                size_t idx = static_cast<size_t>(i + shift);
                rem.c_[idx] -= f * b.coeff(i);
            }
            rem.trim();
        }
        quot.trim();
    }
    return {quot, rem};
}

KPoly KPoly::gcd(KPoly a, KPoly b) {
    while (!b.is_zero()) {
        KPoly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.scaled(Rational(1) / a.leading()); // monic
}

std::string KPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int d = degree(); d >= 0; --d) {
        const Rational& c = coeff(d);
        if (c.is_zero()) continue;
        const Rational mag = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? "-" : "+");
        }
        const bool unit = (mag == Rational(1));
        if (d == 0) {
            os << mag.str();
        } else {
            if (!unit) os << mag.str() << "*";
            os << "K";
            if (d >= 2) os << "^" << d;
        }
    }
    return os.str();
}

} // namespace alpfeas

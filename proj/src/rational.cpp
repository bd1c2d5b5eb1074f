#include "alpfeas/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace alpfeas {

Rational::Rational(long n, long d) {
    if (d == 0) throw std::domain_error("rational: zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

Rational::Rational(const mpz_class& n, const mpz_class& d) {
    if (sgn(d) == 0) throw std::domain_error("rational: zero denominator");
    v_ = mpq_class(n) / mpq_class(d);
}

Rational Rational::from_string(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("rational: empty string");
    mpq_class q;
    if (q.set_str(text, 10) != 0)
        throw std::invalid_argument("rational: bad literal '" + text + "'");
    if (q.get_den() == 0) throw std::domain_error("rational: zero denominator");
    q.canonicalize();
    Rational r;
    r.v_ = std::move(q);
    return r;
}

Rational Rational::pow2(unsigned t) {
    mpz_class n = 1;
    n <<= t;
    Rational r;
    r.v_ = mpq_class(n);
    return r;
}

Rational Rational::abs() const {
    Rational r = *this;
    r.v_ = ::abs(r.v_);
    return r;
}

Rational Rational::operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("rational: division by zero");
    v_ /= o.v_;
    return *this;
}

std::string Rational::str() const {
    return v_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

} // namespace alpfeas

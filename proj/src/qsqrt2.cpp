#include "symmetria/qsqrt2.hpp"

#include <ostream>
#include <sstream>

#include "symmetria/error.hpp"

namespace symmetria {

int QSqrt2::sign() const {
    const int sp = p_.sign();
    const int sq = q_.sign();
    if (sq == 0) return sp;
    if (sp == 0) return sq;
    if (sp == sq) return sp;
    // Opposite signs: compare p^2 with 2 q^2; equality would force p = q = 0.
    const Rational diff = p_ * p_ - 2 * q_ * q_;
    const int sd = diff.sign();
    // p > 0, q < 0: positive iff p^2 > 2 q^2. p < 0, q > 0: the reverse.
    return sp > 0 ? sd : -sd;
}

double QSqrt2::to_double() const {
    return p_.convert_to<double>() + q_.convert_to<double>() * 1.41421356237309504880168872420969808;
}

QSqrt2& QSqrt2::operator+=(const QSqrt2& o) {
    p_ += o.p_;
    q_ += o.q_;
    return *this;
}

QSqrt2& QSqrt2::operator-=(const QSqrt2& o) {
    p_ -= o.p_;
    q_ -= o.q_;
    return *this;
}

QSqrt2& QSqrt2::operator*=(const QSqrt2& o) {
    const Rational p = p_ * o.p_ + 2 * q_ * o.q_;
    const Rational q = p_ * o.q_ + q_ * o.p_;
    p_ = p;
    q_ = q;
    return *this;
}

QSqrt2 QSqrt2::inverse() const {
    // (p + q sqrt2)^-1 = (p - q sqrt2) / (p^2 - 2 q^2)
    const Rational den = p_ * p_ - 2 * q_ * q_;
    if (den == 0) throw Error("BadParam", "inverse of zero in Q[sqrt(2)]");
    return QSqrt2(p_ / den, -q_ / den);
}

std::string rational_to_string(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

std::string QSqrt2::to_string() const {
    if (q_ == 0) return rational_to_string(p_);
    std::ostringstream os;
    if (p_ != 0) os << rational_to_string(p_) << (q_ > 0 ? " + " : " - ");
    else if (q_ < 0) os << "-";
    const Rational aq = q_ < 0 ? Rational(-q_) : q_;
    if (aq != 1) os << rational_to_string(aq) << "*";
    os << "sqrt(2)";
    return os.str();
}

int qs_cmp(const QSqrt2& a, const QSqrt2& b) { return (a - b).sign(); }

std::ostream& operator<<(std::ostream& os, const QSqrt2& v) { return os << v.to_string(); }

}  // namespace symmetria

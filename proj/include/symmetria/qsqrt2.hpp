#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <iosfwd>
#include <string>

namespace symmetria {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Exact scalar p + q*sqrt(2) with rational p, q. The sign is decidable
// exactly: sqrt(2) is irrational, so p + q*sqrt(2) = 0 only when p = q = 0,
// and otherwise comparison reduces to the sign of p^2 - 2 q^2.
class QSqrt2 {
public:
    QSqrt2() = default;
    QSqrt2(long value) : p_(value) {}  // NOLINT(google-explicit-constructor)
    QSqrt2(Rational p) : p_(std::move(p)) {}
    QSqrt2(Rational p, Rational q) : p_(std::move(p)), q_(std::move(q)) {}

    static QSqrt2 sqrt2() { return QSqrt2(Rational(0), Rational(1)); }
    static QSqrt2 from(long num, long den) { return QSqrt2(Rational(num, den)); }

    const Rational& rational_part() const { return p_; }
    const Rational& sqrt2_part() const { return q_; }

    bool is_zero() const { return p_ == 0 && q_ == 0; }
    bool is_rational() const { return q_ == 0; }

    int sign() const;
    double to_double() const;
    std::string to_string() const;  // e.g. "20/41 + 6/41*sqrt(2)"

    QSqrt2 operator-() const { return QSqrt2(-p_, -q_); }
    QSqrt2& operator+=(const QSqrt2& o);
    QSqrt2& operator-=(const QSqrt2& o);
    QSqrt2& operator*=(const QSqrt2& o);
    QSqrt2 inverse() const;  // throws for zero

    friend QSqrt2 operator+(QSqrt2 a, const QSqrt2& b) { return a += b; }
    friend QSqrt2 operator-(QSqrt2 a, const QSqrt2& b) { return a -= b; }
    friend QSqrt2 operator*(QSqrt2 a, const QSqrt2& b) { return a *= b; }
    friend QSqrt2 operator/(const QSqrt2& a, const QSqrt2& b) { return a * b.inverse(); }

    friend bool operator==(const QSqrt2& a, const QSqrt2& b) {
        return a.p_ == b.p_ && a.q_ == b.q_;
    }
    friend bool operator!=(const QSqrt2& a, const QSqrt2& b) { return !(a == b); }
    friend bool operator<(const QSqrt2& a, const QSqrt2& b) { return (a - b).sign() < 0; }
    friend bool operator>(const QSqrt2& a, const QSqrt2& b) { return (a - b).sign() > 0; }
    friend bool operator<=(const QSqrt2& a, const QSqrt2& b) { return (a - b).sign() <= 0; }
    friend bool operator>=(const QSqrt2& a, const QSqrt2& b) { return (a - b).sign() >= 0; }

private:
    Rational p_;
    Rational q_;
};

// three-way comparison, {-1, 0, +1}
int qs_cmp(const QSqrt2& a, const QSqrt2& b);

std::ostream& operator<<(std::ostream& os, const QSqrt2& v);

std::string rational_to_string(const Rational& r);

}  // namespace symmetria

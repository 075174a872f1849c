#pragma once

#include <string>

#include "nok/rational.hpp"

namespace nok {

// Exact element a + b*sqrt(d) of a real quadratic field.
// Canonical form: d squarefree, and d == 0 whenever b == 0 (rational embedding).
// Arithmetic mixing two distinct nonzero radicands throws RadicandMismatch.
class QuadraticNumber {
public:
    QuadraticNumber() : a_(0), b_(0), d_(0) {}
    QuadraticNumber(const Rational& r) : a_(r), b_(0), d_(0) {}  // NOLINT(google-explicit-constructor)
    QuadraticNumber(int r) : a_(r), b_(0), d_(0) {}              // NOLINT(google-explicit-constructor)
    QuadraticNumber(const Rational& a, const Rational& b, const Integer& d);

    const Rational& rational_part() const { return a_; }
    const Rational& radical_coefficient() const { return b_; }
    const Integer& radicand() const { return d_; }
    bool is_rational() const { return b_ == 0; }
    // Throws if not rational.
    const Rational& as_rational() const;

    int sign() const;
    bool is_zero() const { return a_ == 0 && b_ == 0; }

    QuadraticNumber operator-() const;
    QuadraticNumber& operator+=(const QuadraticNumber& o);
    QuadraticNumber& operator-=(const QuadraticNumber& o);
    QuadraticNumber& operator*=(const QuadraticNumber& o);
    QuadraticNumber& operator/=(const QuadraticNumber& o);

    friend QuadraticNumber operator+(QuadraticNumber x, const QuadraticNumber& y) { return x += y; }
    friend QuadraticNumber operator-(QuadraticNumber x, const QuadraticNumber& y) { return x -= y; }
    friend QuadraticNumber operator*(QuadraticNumber x, const QuadraticNumber& y) { return x *= y; }
    friend QuadraticNumber operator/(QuadraticNumber x, const QuadraticNumber& y) { return x /= y; }

    friend bool operator==(const QuadraticNumber& x, const QuadraticNumber& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && x.d_ == y.d_;
    }
    friend bool operator!=(const QuadraticNumber& x, const QuadraticNumber& y) { return !(x == y); }
    friend bool operator<(const QuadraticNumber& x, const QuadraticNumber& y) { return (x - y).sign() < 0; }
    friend bool operator>(const QuadraticNumber& x, const QuadraticNumber& y) { return (x - y).sign() > 0; }
    friend bool operator<=(const QuadraticNumber& x, const QuadraticNumber& y) { return (x - y).sign() <= 0; }
    friend bool operator>=(const QuadraticNumber& x, const QuadraticNumber& y) { return (x - y).sign() >= 0; }

    double approx() const;

    // "p/q" when rational, "p/q + r/s*sqrt(d)" / "p/q - r/s*sqrt(d)" otherwise.
    std::string str() const;
    static QuadraticNumber from_string(const std::string& s);

    // sqrt of a non-negative rational, radicand reduced to squarefree form.
    static QuadraticNumber sqrt_of(const Rational& r);

private:
    Rational a_, b_;
    Integer d_;
};

// Smaller real root of a t^2 + b t + c = 0.
// Throws NegativeDiscriminant, or DomainError when a == 0.
QuadraticNumber quadratic_smaller_root(const Rational& a, const Rational& b, const Rational& c);

inline std::string to_string(const QuadraticNumber& q) { return q.str(); }

}  // namespace nok

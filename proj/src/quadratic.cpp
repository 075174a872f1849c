#include "nok/quadratic.hpp"

#include <cmath>

#include "nok/errors.hpp"

namespace nok {

QuadraticNumber::QuadraticNumber(const Rational& a, const Rational& b, const Integer& d) : a_(a), b_(b), d_(d) {
    if (sgn(d_) < 0) throw DomainError("negative radicand");
    if (b_ == 0 || d_ == 0 || d_ == 1) {
        if (d_ == 1) a_ += b_;
        b_ = 0;
        d_ = 0;
        return;
    }
    Integer s, f;
    squarefree_split(d_, s, f);
    if (f != d_) {
        b_ *= Rational(s);
        d_ = f;
        if (d_ == 1 || d_ == 0) {
            a_ += (d_ == 1) ? b_ : Rational(0);
            b_ = 0;
            d_ = 0;
        }
    }
}

const Rational& QuadraticNumber::as_rational() const {
    if (!is_rational()) throw DomainError("value is irrational: " + str());
    return a_;
}

int QuadraticNumber::sign() const {
    if (b_ == 0) return sgn(a_);
    if (a_ == 0) return sgn(b_);
    int sa = sgn(a_), sb = sgn(b_);
    if (sa == sb) return sa;
    // a and b of opposite signs: compare a^2 with b^2 d.
    Rational lhs = a_ * a_;
    Rational rhs = b_ * b_ * Rational(d_);
    int cmp = sgn(lhs - rhs);
    if (cmp == 0) return 0;  // cannot happen with d squarefree > 1, kept for totality
    return cmp > 0 ? sa : sb;
}

QuadraticNumber QuadraticNumber::operator-() const {
    QuadraticNumber r(*this);
    r.a_ = -r.a_;
    r.b_ = -r.b_;
    return r;
}

namespace {
Integer merged_radicand(const QuadraticNumber& x, const QuadraticNumber& y) {
    if (x.radical_coefficient() == 0) return y.radicand();
    if (y.radical_coefficient() == 0) return x.radicand();
    if (x.radicand() != y.radicand()) throw RadicandMismatch();
    return x.radicand();
}
}  // namespace

QuadraticNumber& QuadraticNumber::operator+=(const QuadraticNumber& o) {
    Integer d = merged_radicand(*this, o);
    a_ += o.a_;
    b_ += o.b_;
    d_ = (b_ == 0) ? Integer(0) : d;
    return *this;
}

QuadraticNumber& QuadraticNumber::operator-=(const QuadraticNumber& o) { return *this += -o; }

QuadraticNumber& QuadraticNumber::operator*=(const QuadraticNumber& o) {
    Integer d = merged_radicand(*this, o);
    Rational na = a_ * o.a_ + b_ * o.b_ * Rational(d);
    Rational nb = a_ * o.b_ + b_ * o.a_;
    a_ = na;
    b_ = nb;
    d_ = (b_ == 0) ? Integer(0) : d;
    return *this;
}

QuadraticNumber& QuadraticNumber::operator/=(const QuadraticNumber& o) {
    if (o.is_zero()) throw DomainError("division by zero");
    Integer d = merged_radicand(*this, o);
    // multiply by the conjugate of o
    Rational norm = o.a_ * o.a_ - o.b_ * o.b_ * Rational(d);
    QuadraticNumber conj = o;
    conj.b_ = -conj.b_;
    *this *= conj;
    a_ /= norm;
    b_ /= norm;
    d_ = (b_ == 0) ? Integer(0) : d;
    return *this;
}

double QuadraticNumber::approx() const {
    double v = a_.get_d();
    if (b_ != 0) v += b_.get_d() * std::sqrt(d_.get_d());
    return v;
}

std::string QuadraticNumber::str() const {
    if (b_ == 0) return to_string(a_);
    std::string s = to_string(a_);
    s += (sgn(b_) < 0) ? " - " : " + ";
    Rational ab = abs(b_);
    s += to_string(ab) + "*sqrt(" + d_.get_str() + ")";
    return s;
}

QuadraticNumber QuadraticNumber::from_string(const std::string& s) {
    auto pos = s.find("sqrt(");
    if (pos == std::string::npos) return QuadraticNumber(rational_from_string(s));
    auto close = s.find(')', pos);
    if (close == std::string::npos) throw ParseError("unterminated sqrt(...)", pos);
    Integer d(s.substr(pos + 5, close - pos - 5));
    // split off "<a> +/- <b>*" in front of sqrt
    std::size_t star = s.rfind('*', pos);
    if (star == std::string::npos) throw ParseError("expected '*sqrt(d)'", pos);
    std::size_t split = std::string::npos;
    int sign_b = 1;
    for (std::size_t i = star; i-- > 0;) {
        if (s[i] == '+' || s[i] == '-') {
            // unary sign of b (no preceding digits) only when nothing nonspace before
            std::size_t j = i;
            while (j > 0 && std::isspace(static_cast<unsigned char>(s[j - 1]))) --j;
            if (j == 0) {
                split = 0;
                sign_b = (s[i] == '-') ? -1 : 1;
                // whole string is "+/- b*sqrt(d)"
                Rational b = rational_from_string(s.substr(i + 1, star - i - 1));
                return QuadraticNumber(Rational(0), Rational(sign_b) * b, d);
            }
            split = i;
            sign_b = (s[i] == '-') ? -1 : 1;
            break;
        }
    }
    if (split == std::string::npos) {
        // "b*sqrt(d)" with no rational part
        Rational b = rational_from_string(s.substr(0, star));
        return QuadraticNumber(Rational(0), b, d);
    }
    Rational a = rational_from_string(s.substr(0, split));
    Rational b = rational_from_string(s.substr(split + 1, star - split - 1));
    return QuadraticNumber(a, Rational(sign_b) * b, d);
}

QuadraticNumber QuadraticNumber::sqrt_of(const Rational& r) {
    if (sgn(r) < 0) throw NegativeDiscriminant();
    if (r == 0) return QuadraticNumber(0);
    // sqrt(p/q) = sqrt(p*q)/q
    Integer pq = r.get_num() * r.get_den();
    Integer s, f;
    squarefree_split(pq, s, f);
    Rational coeff(s, r.get_den());
    coeff.canonicalize();
    if (f == 1) return QuadraticNumber(coeff);
    return QuadraticNumber(Rational(0), coeff, f);
}

QuadraticNumber quadratic_smaller_root(const Rational& a, const Rational& b, const Rational& c) {
    if (a == 0) throw DomainError("degenerate quadratic (a = 0), solve linearly");
    Rational disc = b * b - 4 * a * c;
    if (sgn(disc) < 0) throw NegativeDiscriminant();
    QuadraticNumber root = QuadraticNumber::sqrt_of(disc);
    QuadraticNumber minus_b(-b);
    QuadraticNumber two_a(Rational(2) * a);
    // smaller root: (-b - sqrt(disc))/(2a) when a > 0, the other one when a < 0
    if (sgn(a) > 0) return (minus_b - root) / two_a;
    return (minus_b + root) / two_a;
}

}  // namespace nok

#include "nok/rational.hpp"

#include <cctype>

#include "nok/errors.hpp"

namespace nok {

int sign(const Rational& q) { return sgn(q); }

Rational rational_from_string(const std::string& s) {
    std::size_t begin = 0, end = s.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(s[begin]))) ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(s[end - 1]))) --end;
    std::string body = s.substr(begin, end - begin);
    if (body.empty()) throw ParseError("empty rational literal");
    mpq_t tmp;
    mpq_init(tmp);
    if (mpq_set_str(tmp, body.c_str(), 10) != 0) {
        mpq_clear(tmp);
        throw ParseError("invalid rational literal '" + body + "'");
    }
    if (mpz_sgn(mpq_denref(tmp)) == 0) {
        mpq_clear(tmp);
        throw ParseError("zero denominator in '" + body + "'");
    }
    mpq_canonicalize(tmp);
    Rational out(tmp);
    mpq_clear(tmp);
    return out;
}

std::string to_string(const Rational& q) {
    Rational c(q);
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Integer isqrt_floor(const Rational& q) {
    if (sgn(q) < 0) throw DomainError("isqrt_floor of a negative value");
    // floor(sqrt(p/q)) = floor(sqrt(p*q)/q); verify and adjust to be safe.
    Integer pq = q.get_num() * q.get_den();
    Integer r = sqrt(pq);  // floor sqrt of an Integer
    Integer c = r / q.get_den();
    while (Rational(c + 1) * Rational(c + 1) <= q) ++c;
    while (Rational(c) * Rational(c) > q) --c;
    return c;
}

void squarefree_split(const Integer& n, Integer& square_root_part, Integer& squarefree_part) {
    if (sgn(n) < 0) throw DomainError("squarefree_split of a negative value");
    square_root_part = 1;
    squarefree_part = n;
    if (n == 0 || n == 1) return;
    if (mpz_perfect_square_p(squarefree_part.get_mpz_t())) {
        square_root_part = sqrt(squarefree_part);
        squarefree_part = 1;
        return;
    }
    Integer rest = n;
    Integer p = 2;
    while (p * p <= rest) {
        Integer p2 = p * p;
        while (rest % p2 == 0) {
            rest /= p2;
            square_root_part *= p;
        }
        // after stripping p^2, a perfect-square remainder finishes early
        if (mpz_perfect_square_p(rest.get_mpz_t())) {
            square_root_part *= sqrt(rest);
            rest = 1;
            break;
        }
        p += (p == 2) ? 1 : 2;
    }
    squarefree_part = rest;
}

}  // namespace nok

#pragma once

#include <gmpxx.h>

#include <string>

namespace nok {

// Exact arbitrary-precision rational, always kept in canonical (reduced) form.
using Rational = mpq_class;
using Integer = mpz_class;

int sign(const Rational& q);

// Parses "p", "-p/q", whitespace-trimmed. Throws ParseError on garbage.
Rational rational_from_string(const std::string& s);

// Canonical form "p" or "p/q" with q > 1.
std::string to_string(const Rational& q);

// floor(sqrt(q)) for q >= 0.
Integer isqrt_floor(const Rational& q);

// Largest s with s^2 | n; n = s^2 * squarefree. n must be >= 0.
void squarefree_split(const Integer& n, Integer& square_root_part, Integer& squarefree_part);

}  // namespace nok

#pragma once

#include <gmpxx.h>

#include <string>

namespace frieze {

// Exact rational scalar. mpq_class keeps values canonical (positive
// denominator, gcd 1) as long as they are built through the helpers below;
// all gmp arithmetic preserves canonical form.
using Rational = mpq_class;
using Integer = mpz_class;

Rational rat(long num, long den = 1);

// Accepts "p", "-p", "p/q" with q > 0 after canonicalization.
Rational rat_parse(const std::string& text);

// Canonical form: "p" when the denominator is 1, else "p/q".
std::string rat_str(const Rational& value);

bool rat_is_canonical(const Rational& value);

}  // namespace frieze

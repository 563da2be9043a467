#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace sixvertex::exact {

// Always canonical (lowest terms, positive denominator) after every public
// operation in this library.
using Rational = mpq_class;
using BigInt = mpz_class;

// Accepts "p", "p/q" or a plain decimal such as "3.5" (converted exactly).
// Throws DomainError on anything else or a zero denominator.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& x);

// Weights on the critical line b - a = c = 1 for alpha > 1.
struct CriticalWeights {
  Rational alpha;
  Rational a;    // (alpha - 1) / 2
  Rational b;    // (alpha + 1) / 2
  Rational c;    // 1
  Rational tau;  // 1 / alpha

  // Throws DomainError unless alpha > 1.
  static CriticalWeights from_alpha(const Rational& alpha);
};

}  // namespace sixvertex::exact

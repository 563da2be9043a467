#include "sixvertex/exact/rational.hpp"

#include <cctype>

#include "sixvertex/errors.hpp"

namespace sixvertex::exact {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

BigInt parse_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw DomainError("not a rational number: '" + std::string(whole) + "'");
  BigInt z(std::string(s), 10);
  return negative ? BigInt(-z) : z;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view whole = text;
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);

  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const BigInt p = parse_integer(text.substr(0, slash), whole);
    const std::string_view den = text.substr(slash + 1);
    if (!all_digits(den)) throw DomainError("not a rational number: '" + std::string(whole) + "'");
    const BigInt q(std::string(den), 10);
    if (q == 0) throw DomainError("zero denominator in '" + std::string(whole) + "'");
    Rational r(p, q);
    r.canonicalize();
    return r;
  }
  if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    const std::string_view frac = text.substr(dot + 1);
    std::string_view ip = text.substr(0, dot);
    const bool negative = !ip.empty() && ip.front() == '-';
    if (!ip.empty() && (ip.front() == '-' || ip.front() == '+')) ip.remove_prefix(1);
    if ((ip.empty() && frac.empty()) || (!ip.empty() && !all_digits(ip)) || (!frac.empty() && !all_digits(frac))) {
      throw DomainError("not a rational number: '" + std::string(whole) + "'");
    }
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    const BigInt digits(std::string(ip.empty() ? "0" : ip) + std::string(frac), 10);
    Rational r(negative ? BigInt(-digits) : digits, scale);
    r.canonicalize();
    return r;
  }
  return Rational(parse_integer(text, whole));
}

std::string to_string(const Rational& x) { return x.get_str(10); }

CriticalWeights CriticalWeights::from_alpha(const Rational& alpha) {
  if (!(alpha > 1)) throw DomainError("alpha must exceed 1, got " + to_string(alpha));
  CriticalWeights w;
  w.alpha = alpha;
  w.a = (alpha - 1) / 2;
  w.b = (alpha + 1) / 2;
  w.c = 1;
  w.tau = 1 / alpha;
  w.a.canonicalize();
  w.b.canonicalize();
  w.tau.canonicalize();
  return w;
}

}  // namespace sixvertex::exact

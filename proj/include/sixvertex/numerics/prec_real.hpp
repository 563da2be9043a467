#pragma once

#include <mpfr.h>
#include <gmpxx.h>

#include <algorithm>
#include <climits>
#include <compare>
#include <concepts>
#include <string>
#include <string_view>
#include <utility>

namespace sixvertex::numerics {

using Bits = mpfr_prec_t;

inline constexpr Bits kDefaultBits = 128;

// Arbitrary-precision real backed by an MPFR value. Every value carries its own
// mantissa width; binary operations are carried out at the larger of the two
// operand widths, so precision is never silently lost by mixing values.
class PrecReal {
 public:
  PrecReal() : PrecReal(WidthTag{}, kDefaultBits) {}

  // Zero at the given width.
  static PrecReal zero(Bits bits) { return PrecReal(WidthTag{}, bits); }

  template <std::integral I>
  PrecReal(I value, Bits bits = kDefaultBits) {  // NOLINT: implicit by design of numeric literals
    mpfr_init2(v_, bits);
    if constexpr (std::is_signed_v<I>) {
      mpfr_set_si(v_, static_cast<long>(value), MPFR_RNDN);
    } else {
      mpfr_set_ui(v_, static_cast<unsigned long>(value), MPFR_RNDN);
    }
  }

  PrecReal(const mpq_class& q, Bits bits) {
    mpfr_init2(v_, bits);
    mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
  }

  PrecReal(const mpz_class& z, Bits bits) {
    mpfr_init2(v_, bits);
    mpfr_set_z(v_, z.get_mpz_t(), MPFR_RNDN);
  }

  static PrecReal from_double(double d, Bits bits = kDefaultBits) {
    PrecReal r(WidthTag{}, bits);
    mpfr_set_d(r.v_, d, MPFR_RNDN);
    return r;
  }

  // Parses a decimal literal ("1e-20", "0.5", "-3"); throws DomainError.
  static PrecReal parse(std::string_view text, Bits bits = kDefaultBits);

  PrecReal(const PrecReal& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }

  PrecReal(PrecReal&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
  }

  PrecReal& operator=(const PrecReal& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }

  PrecReal& operator=(PrecReal&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }

  ~PrecReal() { mpfr_clear(v_); }

  Bits precision() const { return mpfr_get_prec(v_); }

  // Same value rounded to a different width.
  PrecReal with_precision(Bits bits) const {
    PrecReal r(WidthTag{}, bits);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
  }

  mpfr_srcptr get() const { return v_; }
  mpfr_ptr get_mutable() { return v_; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long to_long() const { return mpfr_get_si(v_, MPFR_RNDZ); }

  // Decimal rendering with `digits` significant digits (scientific when needed).
  std::string str(int digits = 30) const;

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  long exponent2() const { return is_zero() ? LONG_MIN : mpfr_get_exp(v_); }

  PrecReal operator-() const {
    PrecReal r(WidthTag{}, precision());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
  }

  PrecReal& operator+=(const PrecReal& o) { return assign_binary(o, mpfr_add); }
  PrecReal& operator-=(const PrecReal& o) { return assign_binary(o, mpfr_sub); }
  PrecReal& operator*=(const PrecReal& o) { return assign_binary(o, mpfr_mul); }
  PrecReal& operator/=(const PrecReal& o) { return assign_binary(o, mpfr_div); }

  friend PrecReal operator+(const PrecReal& a, const PrecReal& b) { return binary(a, b, mpfr_add); }
  friend PrecReal operator-(const PrecReal& a, const PrecReal& b) { return binary(a, b, mpfr_sub); }
  friend PrecReal operator*(const PrecReal& a, const PrecReal& b) { return binary(a, b, mpfr_mul); }
  friend PrecReal operator/(const PrecReal& a, const PrecReal& b) { return binary(a, b, mpfr_div); }

  template <std::integral I>
  friend PrecReal operator+(const PrecReal& a, I b) {
    PrecReal r(WidthTag{}, a.precision());
    mpfr_add_si(r.v_, a.v_, static_cast<long>(b), MPFR_RNDN);
    return r;
  }
  template <std::integral I>
  friend PrecReal operator+(I a, const PrecReal& b) {
    return b + a;
  }
  template <std::integral I>
  friend PrecReal operator-(const PrecReal& a, I b) {
    PrecReal r(WidthTag{}, a.precision());
    mpfr_sub_si(r.v_, a.v_, static_cast<long>(b), MPFR_RNDN);
    return r;
  }
  template <std::integral I>
  friend PrecReal operator-(I a, const PrecReal& b) {
    PrecReal r(WidthTag{}, b.precision());
    mpfr_si_sub(r.v_, static_cast<long>(a), b.v_, MPFR_RNDN);
    return r;
  }
  template <std::integral I>
  friend PrecReal operator*(const PrecReal& a, I b) {
    PrecReal r(WidthTag{}, a.precision());
    mpfr_mul_si(r.v_, a.v_, static_cast<long>(b), MPFR_RNDN);
    return r;
  }
  template <std::integral I>
  friend PrecReal operator*(I a, const PrecReal& b) {
    return b * a;
  }
  template <std::integral I>
  friend PrecReal operator/(const PrecReal& a, I b) {
    PrecReal r(WidthTag{}, a.precision());
    mpfr_div_si(r.v_, a.v_, static_cast<long>(b), MPFR_RNDN);
    return r;
  }
  template <std::integral I>
  friend PrecReal operator/(I a, const PrecReal& b) {
    PrecReal r(WidthTag{}, b.precision());
    mpfr_si_div(r.v_, static_cast<long>(a), b.v_, MPFR_RNDN);
    return r;
  }
  template <std::integral I>
  PrecReal& operator+=(I b) {
    mpfr_add_si(v_, v_, static_cast<long>(b), MPFR_RNDN);
    return *this;
  }
  template <std::integral I>
  PrecReal& operator-=(I b) {
    mpfr_sub_si(v_, v_, static_cast<long>(b), MPFR_RNDN);
    return *this;
  }
  template <std::integral I>
  PrecReal& operator*=(I b) {
    mpfr_mul_si(v_, v_, static_cast<long>(b), MPFR_RNDN);
    return *this;
  }
  template <std::integral I>
  PrecReal& operator/=(I b) {
    mpfr_div_si(v_, v_, static_cast<long>(b), MPFR_RNDN);
    return *this;
  }

  friend bool operator==(const PrecReal& a, const PrecReal& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend std::partial_ordering operator<=>(const PrecReal& a, const PrecReal& b) {
    if (mpfr_unordered_p(a.v_, b.v_)) return std::partial_ordering::unordered;
    const int c = mpfr_cmp(a.v_, b.v_);
    return c < 0 ? std::partial_ordering::less
                 : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
  }
  template <std::integral I>
  friend bool operator==(const PrecReal& a, I b) {
    return mpfr_cmp_si(a.v_, static_cast<long>(b)) == 0;
  }
  template <std::integral I>
  friend std::partial_ordering operator<=>(const PrecReal& a, I b) {
    const int c = mpfr_cmp_si(a.v_, static_cast<long>(b));
    return c < 0 ? std::partial_ordering::less
                 : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
  }

  using UnaryFn = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);
  PrecReal apply(UnaryFn fn) const {
    PrecReal r(WidthTag{}, precision());
    fn(r.v_, v_, MPFR_RNDN);
    return r;
  }

 private:
  struct WidthTag {};
  PrecReal(WidthTag, Bits bits) {
    mpfr_init2(v_, bits);
    mpfr_set_zero(v_, 1);
  }

  using BinaryFn = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);

  static PrecReal binary(const PrecReal& a, const PrecReal& b, BinaryFn fn) {
    PrecReal r(WidthTag{}, std::max(a.precision(), b.precision()));
    fn(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }

  PrecReal& assign_binary(const PrecReal& o, BinaryFn fn) {
    if (o.precision() > precision()) {
      mpfr_prec_round(v_, o.precision(), MPFR_RNDN);
    }
    fn(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }

  mpfr_t v_;
};

inline PrecReal sqrt(const PrecReal& x) { return x.apply(mpfr_sqrt); }
inline PrecReal exp(const PrecReal& x) { return x.apply(mpfr_exp); }
inline PrecReal expm1(const PrecReal& x) { return x.apply(mpfr_expm1); }
inline PrecReal log(const PrecReal& x) { return x.apply(mpfr_log); }
inline PrecReal log1p(const PrecReal& x) { return x.apply(mpfr_log1p); }
inline PrecReal sin(const PrecReal& x) { return x.apply(mpfr_sin); }
inline PrecReal cos(const PrecReal& x) { return x.apply(mpfr_cos); }
inline PrecReal tan(const PrecReal& x) { return x.apply(mpfr_tan); }
inline PrecReal cot(const PrecReal& x) { return x.apply(mpfr_cot); }
inline PrecReal asin(const PrecReal& x) { return x.apply(mpfr_asin); }
inline PrecReal atan(const PrecReal& x) { return x.apply(mpfr_atan); }
inline PrecReal sinh(const PrecReal& x) { return x.apply(mpfr_sinh); }
inline PrecReal cosh(const PrecReal& x) { return x.apply(mpfr_cosh); }
inline PrecReal tanh(const PrecReal& x) { return x.apply(mpfr_tanh); }
inline PrecReal coth(const PrecReal& x) { return x.apply(mpfr_coth); }
inline PrecReal acosh(const PrecReal& x) { return x.apply(mpfr_acosh); }
inline PrecReal gamma(const PrecReal& x) { return x.apply(mpfr_gamma); }
inline PrecReal abs(const PrecReal& x) { return x.apply(mpfr_abs); }

inline PrecReal pow(const PrecReal& x, const PrecReal& y) {
  auto r = PrecReal::zero(std::max(x.precision(), y.precision()));
  mpfr_pow(r.get_mutable(), x.get(), y.get(), MPFR_RNDN);
  return r;
}

inline PrecReal pow(const PrecReal& x, long n) {
  auto r = PrecReal::zero(x.precision());
  mpfr_pow_si(r.get_mutable(), x.get(), n, MPFR_RNDN);
  return r;
}

inline PrecReal atan2(const PrecReal& y, const PrecReal& x) {
  auto r = PrecReal::zero(std::max(x.precision(), y.precision()));
  mpfr_atan2(r.get_mutable(), y.get(), x.get(), MPFR_RNDN);
  return r;
}

// x * 2^e, exact.
inline PrecReal ldexp(const PrecReal& x, long e) {
  auto r = PrecReal::zero(x.precision());
  mpfr_mul_2si(r.get_mutable(), x.get(), e, MPFR_RNDN);
  return r;
}

inline PrecReal max(const PrecReal& a, const PrecReal& b) { return a < b ? b : a; }
inline PrecReal min(const PrecReal& a, const PrecReal& b) { return b < a ? b : a; }

PrecReal const_pi(Bits bits);
PrecReal const_log2(Bits bits);

// 2^-bits: unit roundoff scale of a given width.
inline PrecReal epsilon(Bits bits) { return ldexp(PrecReal(1, bits), -static_cast<long>(bits)); }

// Exact rational p/q rounded to nearest at the given width.
inline PrecReal rational(long p, long q, Bits bits) {
  mpq_class r(p, q);
  r.canonicalize();
  return PrecReal(r, bits);
}

}  // namespace sixvertex::numerics

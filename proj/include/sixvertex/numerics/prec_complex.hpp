#pragma once

#include "sixvertex/numerics/prec_real.hpp"

namespace sixvertex::numerics {

// Minimal complex arithmetic over PrecReal, enough for contour quadrature.
struct PrecComplex {
  PrecReal re;
  PrecReal im;

  PrecComplex() = default;
  PrecComplex(PrecReal r, PrecReal i) : re(std::move(r)), im(std::move(i)) {}
  explicit PrecComplex(const PrecReal& r) : re(r), im(PrecReal::zero(r.precision())) {}

  Bits precision() const { return std::max(re.precision(), im.precision()); }

  friend PrecComplex operator+(const PrecComplex& a, const PrecComplex& b) { return {a.re + b.re, a.im + b.im}; }
  friend PrecComplex operator-(const PrecComplex& a, const PrecComplex& b) { return {a.re - b.re, a.im - b.im}; }
  friend PrecComplex operator*(const PrecComplex& a, const PrecComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend PrecComplex operator*(const PrecComplex& a, const PrecReal& s) { return {a.re * s, a.im * s}; }
  friend PrecComplex operator/(const PrecComplex& a, const PrecComplex& b) {
    const PrecReal den = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
  }
  friend PrecComplex operator/(const PrecComplex& a, const PrecReal& s) { return {a.re / s, a.im / s}; }
  PrecComplex operator-() const { return {-re, -im}; }
  PrecComplex& operator+=(const PrecComplex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
};

inline PrecReal abs(const PrecComplex& z) {
  auto r = PrecReal::zero(z.precision());
  mpfr_hypot(r.get_mutable(), z.re.get(), z.im.get(), MPFR_RNDN);
  return r;
}

// Principal branch, cut along the negative real axis.
inline PrecComplex sqrt(const PrecComplex& z) {
  const PrecReal r = abs(z);
  if (r.is_zero()) return z;
  if (z.re.sign() >= 0) {
    PrecReal s = sqrt((r + z.re) / 2);
    return {s, z.im / (2 * s)};
  }
  PrecReal s = sqrt((r - z.re) / 2);
  PrecReal re = abs(z.im) / (2 * s);
  return {re, mpfr_signbit(z.im.get()) ? -s : s};
}

inline PrecComplex exp(const PrecComplex& z) {
  const PrecReal m = exp(z.re);
  return {m * cos(z.im), m * sin(z.im)};
}

}  // namespace sixvertex::numerics

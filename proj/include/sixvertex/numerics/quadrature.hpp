#pragma once

#include <functional>
#include <string>
#include <vector>

#include "sixvertex/numerics/prec_real.hpp"

namespace sixvertex::numerics {

using RealFn = std::function<PrecReal(const PrecReal&)>;

// Base rule applied on every panel of the adaptive driver. A panel's estimate
// is the rule on its two halves; the error estimate is the difference against
// the rule on the whole panel.
enum class PanelRule {
  gauss_legendre_10,
  gauss_legendre_20,
  gauss_legendre_40,
};

int panel_nodes(PanelRule rule);
std::string to_string(PanelRule rule);

struct QuadratureSpec {
  PrecReal abs_tol;
  PrecReal rel_tol;
  int max_subdivisions = 4000;
  PanelRule panel_rule = PanelRule::gauss_legendre_20;

  // Absolute and relative tolerance 1e-20 at the given width.
  static QuadratureSpec defaults(Bits bits = kDefaultBits);
  static QuadratureSpec with_tolerance(const PrecReal& tol);

  Bits precision() const { return std::max(abs_tol.precision(), rel_tol.precision()); }

  // Throws DomainError unless abs_tol > 0, rel_tol > 0, max_subdivisions >= 1.
  void validate() const;
};

struct QuadResult {
  PrecReal value;
  PrecReal error;
  int subdivisions = 0;
  int evaluations = 0;
};

// Gauss-Legendre nodes and weights on [-1, 1] at the given width (cached).
struct GaussLegendreRule {
  std::vector<PrecReal> nodes;
  std::vector<PrecReal> weights;
};
const GaussLegendreRule& gauss_legendre(int n, Bits bits);

// Globally adaptive integral of f over [a, b]. Throws NonConvergence when the
// subdivision budget is exhausted before max(abs_tol, rel_tol*|I|) is met.
QuadResult integrate(const RealFn& f, const PrecReal& a, const PrecReal& b, const QuadratureSpec& spec);

// Same, with the interval pre-split at the given interior breakpoints.
QuadResult integrate(const RealFn& f, const std::vector<PrecReal>& breakpoints, const QuadratureSpec& spec);

enum class JacobiWeight {
  sqrt_u_over_one_minus_u,      // sqrt(u/(1-u))
  inv_sqrt_u_times_one_minus_u  // 1/sqrt(u(1-u))
};

// Integral over (0,1) of weight(u) f(u); both endpoint singularities are
// removed by u = sin^2(theta) before quadrature.
QuadResult quad_jacobi_half(const RealFn& f, JacobiWeight weight, const QuadratureSpec& spec);

// Integral over (0, inf) of g for |g(x)| <= M exp(-x/decay_scale) eventually.
// The tail beyond the probed cutoff is bounded and added to the error.
// Throws TailNotDecaying when the probe cannot find such a cutoff.
QuadResult quad_semi_infinite(const RealFn& g, const PrecReal& decay_scale, const QuadratureSpec& spec);

// Integral over (from, inf) of g with power-law decay (faster than 1/x).
// Uses x = from / y^2, which makes half-integer power expansions analytic in y.
QuadResult quad_power_tail(const RealFn& g, const PrecReal& from, const QuadratureSpec& spec);

}  // namespace sixvertex::numerics

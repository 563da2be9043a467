#pragma once

#include <functional>
#include <optional>

#include "sixvertex/numerics/prec_real.hpp"
#include "sixvertex/numerics/quadrature.hpp"

namespace sixvertex::numerics {

// f^(order)(x) for a smooth summand extended to real x; order 0 is f itself.
using DerivativeFn = std::function<PrecReal(int order, const PrecReal& x)>;

// Closed form of the integral of f over (M, inf), given M.
using TailIntegralFn = std::function<PrecReal(const PrecReal& cutoff)>;

struct EmTailOptions {
  long start = 1;
  // Highest odd derivative order available; the correction uses
  // B_2 f' ... B_{order+1} f^(order) at the cutoff.
  int max_derivative_order = 3;
  std::optional<TailIntegralFn> tail_integral;  // quad_power_tail when absent
  long max_cutoff = 1L << 22;
};

struct EmTailResult {
  PrecReal value;
  PrecReal remainder_bound;
  long cutoff = 0;
};

// Sum over k >= start of f(k) as a direct sum up to a cutoff M plus the
// Euler-Maclaurin tail at M. M is doubled until the last correction term used,
// which bounds the remainder for summands with monotone derivatives, is below
// spec.abs_tol. Throws NonConvergence when max_cutoff is reached first.
EmTailResult em_tail_sum(const DerivativeFn& f, const EmTailOptions& options, const QuadratureSpec& spec);

// The Euler-Maclaurin tail from a fixed cutoff M:
//   int_M^inf f + f(M)/2 - sum_{j=1}^{J} B_2j/(2j)! f^(2j-1)(M),
// together with |last correction term|.
EmTailResult em_tail_from(const DerivativeFn& f, long cutoff, int max_derivative_order,
                          const PrecReal& tail_integral);

}  // namespace sixvertex::numerics

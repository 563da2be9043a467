#pragma once

#include <optional>
#include <vector>

#include "sixvertex/exact/rational.hpp"
#include "sixvertex/numerics/prec_complex.hpp"
#include "sixvertex/numerics/prec_real.hpp"

namespace sixvertex::equilibrium {

using numerics::Bits;
using numerics::PrecComplex;
using numerics::PrecReal;

struct SolverOptions {
  Bits bits = numerics::kDefaultBits;
  // Endpoint iteration stops when |b_j - b_{j-1}| <= tol |b_j|;
  // 2^-(bits-16) when absent.
  std::optional<PrecReal> tol;
  int max_iter = 2000;
  // Admissible tau is [0, 1 - tau_margin].
  PrecReal tau_margin = PrecReal::parse("1e-3");
  int max_contour_nodes = 1 << 16;
};

struct EndpointResult {
  PrecReal b;
  int iterations = 0;
  PrecReal residual;    // |b - f(b)|
  bool damped = false;  // the update was relaxed at least once
};

struct EquilibriumSolution {
  PrecReal tau;
  PrecReal t;
  PrecReal b;
  PrecReal l;
  PrecReal v;
  PrecReal q0;
  PrecReal qb;
  PrecReal qb_prime;
  int iterations = 0;
  PrecReal residual;
  bool damped = false;
  int contour_nodes = 0;   // 0 when the density came from the real-axis form
  bool real_axis_fallback = false;
};

// f(b) = 4/(1-tau) + (2 tau/((1-tau) t)) I(2bt), written as
// 4/(1-tau) + (4 tau b/(1-tau)) (I(z)/z) so that t = 0 is regular.
PrecReal endpoint_map(const PrecReal& b, const PrecReal& tau, const PrecReal& t);

// b_0 = 4/(1-tau), b_j = f(b_{j-1}); when the residuals oscillate the update is
// relaxed, b_j = b_{j-1} + omega (f(b_{j-1}) - b_{j-1}), with omega from the
// observed residual ratio. Throws NonConvergence after max_iter, DomainError outside the
// admissible (tau, t) region.
EndpointResult solve_endpoint(const PrecReal& tau, const PrecReal& t, const SolverOptions& options = {});

// Two-iteration closed form b_2 with b_0 = 4/(1-tau).
PrecReal endpoint_two_iterations(const PrecReal& tau, const PrecReal& t);

// k(z) = coth z - 1/z at complex argument (regular at 0).
PrecComplex coth_minus_inv(const PrecComplex& z);

// s(z,t) = -(1/2 pi i) \oint sqrt(w/(w-b)) k(tw)/(w-z) dw sampled once on a
// confocal ellipse around [0, b] by the trapezoid rule. The ellipse passes
// halfway (in the elliptic radius) between the segment and the nearest pole
// of k(tw) at i pi / t; the node count doubles until probe values settle.
class ContourDensity {
 public:
  // Throws StripViolation when the ellipse is too thin for max_nodes.
  ContourDensity(const PrecReal& b, const PrecReal& t, const PrecReal& tol, int max_nodes = 1 << 16);

  PrecReal s(const PrecReal& z) const;
  PrecReal s_prime(const PrecReal& z) const;
  int nodes() const { return static_cast<int>(w_.size()); }
  const PrecReal& rho() const { return rho_; }

 private:
  void sample(int m);
  PrecReal sum(const PrecReal& z, int power) const;

  PrecReal b_;
  PrecReal t_;
  PrecReal rho_;
  bool trivial_ = false;
  std::vector<PrecComplex> w_;
  std::vector<PrecComplex> g_;  // sqrt(w/(w-b)) k(tw) dw/dtheta
};

// s and d s/dz from the real-axis form
//   s(z) = -k(tz) - (1/pi) int_0^b sqrt(w/(b-w)) (k(tw) - k(tz))/(w - z) dw,
// evaluated at elevated precision (oracle and fallback for the contour).
PrecReal s_real_axis(const PrecReal& z, const PrecReal& t, const PrecReal& b);
PrecReal s_prime_real_axis(const PrecReal& z, const PrecReal& t, const PrecReal& b);

// Contour evaluation, falling back to the real-axis form on StripViolation.
PrecReal s_function(const PrecReal& z, const PrecReal& t, const PrecReal& b);

// q(z) = 1 + tau s(z, t) and q'(z) = tau s'(z, t).
PrecReal q_eval(const PrecReal& z, const PrecReal& tau, const PrecReal& t, const PrecReal& b);
PrecReal q_prime_eval(const PrecReal& z, const PrecReal& tau, const PrecReal& t, const PrecReal& b);

// l = 4(1-ln2) - (b/2)(1-tau) - b + 2 ln b + (2 tau/t)(J(2bt) - (1-ln2)) + (tau/t) ln S(tb).
// The tau/t terms are carried as 4 tau b (J(2bt) - (1-ln2))/(2bt) and
// tau b H(tb), which are regular at t = 0.
PrecReal lagrange_multiplier(const PrecReal& tau, const PrecReal& t, const PrecReal& b);

// v = 3/(4 b q(0)) - q'(b)/(4 q(b)^2) + 47/(12 b q(b)); DomainError unless q0, qb > 0.
PrecReal v_correction(const PrecReal& b, const PrecReal& q0, const PrecReal& qb, const PrecReal& qb_prime);

EquilibriumSolution solve_equilibrium(const PrecReal& tau, const PrecReal& t, const SolverOptions& options = {});

// (1/2 pi) int_0^b sqrt(w/(b-w)) V'(w) dw; equals 1 at the true endpoint.
PrecReal endpoint_normalization(const PrecReal& b, const PrecReal& tau, const PrecReal& t);

// int_0^b psi, psi(x) = (1/2 pi) sqrt((b-x)/x) q(x), with q from the contour.
PrecReal density_mass(const EquilibriumSolution& solution);

// ln of the predicted h_N/(N!)^2:
//   ln(N/8) + (2N+2) ln tau + 2 ln b + N(l+2) + v/N - 1/(6N), tau = 1/alpha, t = N tau.
PrecReal ln_h_asymptotic(int N, const exact::Rational& alpha, Bits bits = numerics::kDefaultBits);
PrecReal h_asymptotic(int N, const exact::Rational& alpha, Bits bits = numerics::kDefaultBits);

// ln(h_N/(N!)^2) from the exact norms.
PrecReal ln_h_exact(int N, const exact::Rational& alpha, Bits bits = numerics::kDefaultBits);

// ln[(alpha-1)^{2N+1} h_N/(N!)^2] + zeta(3/2)/(2 sqrt(pi(r-1)) sqrt(N)) - 1/(4N),
// r = (alpha+1)/(alpha-1), from the exact h_N.
PrecReal hN_o_expansion_residual(int N, const exact::Rational& alpha, Bits bits = numerics::kDefaultBits);

}  // namespace sixvertex::equilibrium

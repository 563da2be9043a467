#include "sixvertex/equilibrium/equilibrium.hpp"

#include <cmath>
#include <string>

#include "sixvertex/errors.hpp"
#include "sixvertex/exact/partition.hpp"
#include "sixvertex/numerics/bernoulli.hpp"
#include "sixvertex/numerics/quadrature.hpp"
#include "sixvertex/numerics/zeta.hpp"
#include "sixvertex/special/functions.hpp"

namespace sixvertex::equilibrium {

using numerics::const_log2;
using numerics::const_pi;
using numerics::epsilon;
using numerics::ldexp;
using numerics::QuadratureSpec;
using numerics::rational;

namespace {

Bits width(const PrecReal& a, const PrecReal& b) { return std::max(a.precision(), b.precision()); }

void require_region(const PrecReal& tau, const PrecReal& t, const PrecReal& margin) {
  if (!tau.is_finite() || !t.is_finite()) throw DomainError("equilibrium: non-finite parameter");
  if (tau.sign() < 0 || tau > 1 - margin) {
    throw DomainError("equilibrium: tau = " + tau.str(12) + " outside [0, 1 - " + margin.str(6) + "]");
  }
  if (t.sign() < 0) throw DomainError("equilibrium: t must be >= 0");
}

// 4^n B_{2n}/(2n)!, the Taylor coefficients of coth y - 1/y.
PrecReal coth_coefficient(int n, Bits bits) {
  mpq_class c = numerics::bernoulli_over_factorial(2 * n);
  c *= mpq_class(mpz_class(1) << (2 * n));
  return PrecReal(c, bits);
}

PrecReal coth_minus_inv_second(const PrecReal& y) {
  const Bits bits = y.precision();
  if (abs(y) < rational(1, 4, bits)) {
    const PrecReal y2 = y * y;
    PrecReal power = y;
    PrecReal sum = PrecReal::zero(bits);
    for (int n = 2;; ++n) {
      const PrecReal term = coth_coefficient(n, bits) * (2 * n - 1) * (2 * n - 2) * power;
      sum += term;
      if (abs(term) <= epsilon(bits + 4) * abs(sum) || n > 4 * bits) break;
      power *= y2;
    }
    return sum;
  }
  const PrecReal csch = 1 / sinh(y);
  return 2 * csch * csch * coth(y) - 2 / (y * y * y);
}

PrecReal default_tol(Bits bits) { return ldexp(PrecReal(1, bits), -static_cast<long>(bits) + 16); }

long tol_bits(const PrecReal& tol) { return std::max(16L, -tol.exponent2() + 1); }

}  // namespace

PrecReal endpoint_map(const PrecReal& b, const PrecReal& tau, const PrecReal& t) {
  const Bits bits = std::max(width(b, tau), t.precision());
  const PrecReal one_minus = 1 - tau.with_precision(bits);
  return 4 / one_minus + 4 * tau * b / one_minus * special::I_over_z(2 * b.with_precision(bits) * t);
}

EndpointResult solve_endpoint(const PrecReal& tau_in, const PrecReal& t_in, const SolverOptions& options) {
  require_region(tau_in, t_in, options.tau_margin);
  if (options.max_iter < 1) throw DomainError("solve_endpoint: max_iter must be >= 1");
  const Bits bits = options.bits;
  const PrecReal tau = tau_in.with_precision(bits);
  const PrecReal t = t_in.with_precision(bits);
  const PrecReal tol = options.tol ? options.tol->with_precision(bits) : default_tol(bits);
  if (tol.sign() <= 0) throw DomainError("solve_endpoint: tol must be > 0");

  EndpointResult out;
  // f(b) reduces to 4/(1-tau) - tau b/(1-tau) at t = 0, whose fixed point is 4.
  if (tau.is_zero() || t.is_zero()) {
    out.b = PrecReal(4, bits);
    out.residual = PrecReal::zero(bits);
    return out;
  }

  PrecReal b = 4 / (1 - tau);
  PrecReal omega(1, bits);
  PrecReal last_step = PrecReal::zero(bits);
  for (int j = 1; j <= options.max_iter; ++j) {
    const PrecReal step = endpoint_map(b, tau, t) - b;
    if (abs(step) <= tol * abs(b)) {
      out.b = b;
      out.iterations = j - 1;
      out.residual = abs(step);
      return out;
    }
    // f' <= 0, so the relaxed map has residual ratio 1 - omega (1 - f'); an
    // oscillating ratio below -1/2 gives an estimate of f' and omega is reset
    // to the value that cancels it.
    if (j > 1 && !last_step.is_zero()) {
      const PrecReal ratio = step / last_step;
      if (ratio < rational(-1, 2, bits)) {
        omega /= 1 - ratio;
        out.damped = true;
      }
    }
    last_step = step;
    b += omega * step;
    if (b.sign() <= 0) {
      b = 4 / (1 - tau);
      omega /= 2;
      out.damped = true;
    }
  }
  throw NonConvergence("solve_endpoint: no convergence after " + std::to_string(options.max_iter) +
                       " iterations (tau = " + tau.str(12) + ", t = " + t.str(12) + ")");
}

PrecReal endpoint_two_iterations(const PrecReal& tau, const PrecReal& t) {
  const Bits bits = width(tau, t);
  const PrecReal b0 = 4 / (1 - tau.with_precision(bits));
  return endpoint_map(endpoint_map(b0, tau, t), tau, t);
}

PrecComplex coth_minus_inv(const PrecComplex& z) {
  const Bits bits = z.precision();
  if (abs(z) < rational(1, 4, bits)) {
    const PrecComplex z2 = z * z;
    PrecComplex power = z;
    PrecComplex sum(PrecReal::zero(bits), PrecReal::zero(bits));
    for (int n = 1;; ++n) {
      const PrecComplex term = power * coth_coefficient(n, bits);
      sum += term;
      if (abs(term) <= epsilon(bits + 4) * abs(sum) || n > 4 * bits) break;
      power = power * z2;
    }
    return sum;
  }
  if (z.re.sign() < 0) return -coth_minus_inv(-z);
  const PrecComplex e = exp(z * PrecReal(2, bits));
  const PrecComplex one(PrecReal(1, bits));
  const PrecComplex two(PrecReal(2, bits));
  return one + two / (e - one) - one / z;
}

ContourDensity::ContourDensity(const PrecReal& b, const PrecReal& t, const PrecReal& tol, int max_nodes)
    : b_(b), t_(t) {
  if (b.sign() <= 0) throw DomainError("ContourDensity: b must be > 0");
  if (t.sign() < 0) throw DomainError("ContourDensity: t must be >= 0");
  if (tol.sign() <= 0) throw DomainError("ContourDensity: tol must be > 0");
  const Bits bits = width(b, t) + 32;
  b_ = b.with_precision(bits);
  t_ = t.with_precision(bits);
  if (t.is_zero()) {
    trivial_ = true;
    rho_ = PrecReal::zero(bits);
    return;
  }

  const PrecReal pi = const_pi(bits);
  const PrecReal h = pi / t_;
  const PrecReal rho_pole = numerics::acosh((h + sqrt(h * h + b_ * b_)) / b_);
  rho_ = min(rho_pole / 2, PrecReal(2, bits));

  // Trapezoid error decays like exp(-rho M).
  const double needed = 1.2 * static_cast<double>(tol_bits(tol)) * std::log(2.0) / rho_.to_double();
  if (needed > max_nodes) {
    throw StripViolation("ContourDensity: ellipse radius " + rho_.str(6) + " needs about " +
                         std::to_string(static_cast<long>(needed)) + " nodes (limit " + std::to_string(max_nodes) + ")");
  }
  int m = 64;
  while (2.0 * m < needed) m *= 2;

  const PrecReal half_b = b_ / 2;
  const std::vector<PrecReal> probes{PrecReal::zero(bits), half_b, b_};
  const auto probe_values = [&] {
    std::vector<PrecReal> v;
    for (const auto& z : probes) v.push_back(s(z));
    v.push_back(s_prime(b_));
    return v;
  };

  sample(m);
  std::vector<PrecReal> previous = probe_values();
  while (true) {
    if (2 * m > max_nodes) {
      throw StripViolation("ContourDensity: trapezoid rule did not settle within " + std::to_string(max_nodes) +
                           " nodes");
    }
    m *= 2;
    sample(m);
    std::vector<PrecReal> current = probe_values();
    bool settled = true;
    for (std::size_t i = 0; i < current.size(); ++i) {
      if (abs(current[i] - previous[i]) > tol * (1 + abs(current[i]))) settled = false;
    }
    if (settled) return;
    previous = std::move(current);
  }
}

void ContourDensity::sample(int m) {
  const Bits bits = b_.precision();
  const PrecReal pi = const_pi(bits);
  const PrecReal half_b = b_ / 2;
  const PrecReal ch = cosh(rho_);
  const PrecReal sh = sinh(rho_);
  const PrecComplex b_c(b_);
  w_.assign(m, PrecComplex());
  g_.assign(m, PrecComplex());
  for (int j = 0; j < m; ++j) {
    const PrecReal theta = 2 * pi * j / m;
    const PrecReal c = cos(theta);
    const PrecReal sn = sin(theta);
    const PrecComplex w(half_b + half_b * ch * c, half_b * sh * sn);
    const PrecComplex dw(-half_b * ch * sn, half_b * sh * c);
    // w/(w-b) is real and negative only for w in [0, b], inside the ellipse.
    const PrecComplex root = sqrt(w / (w - b_c));
    w_[j] = w;
    g_[j] = root * coth_minus_inv(w * t_) * dw;
  }
}

PrecReal ContourDensity::sum(const PrecReal& z, int power) const {
  const Bits bits = b_.precision();
  const PrecComplex zc(z.with_precision(bits));
  PrecReal acc = PrecReal::zero(bits);
  for (std::size_t j = 0; j < w_.size(); ++j) {
    PrecComplex d = w_[j] - zc;
    if (power == 2) d = d * d;
    acc += (g_[j] / d).im;
  }
  return -acc / static_cast<long>(w_.size());
}

PrecReal ContourDensity::s(const PrecReal& z) const {
  if (trivial_) return PrecReal::zero(z.precision());
  return sum(z, 1).with_precision(z.precision());
}

PrecReal ContourDensity::s_prime(const PrecReal& z) const {
  if (trivial_) return PrecReal::zero(z.precision());
  return sum(z, 2).with_precision(z.precision());
}

namespace {

// Width used for the divided differences of the real-axis form; the second
// difference cancels about 2 (bits + 32) bits when w is within 2^-(bits+32) of z.
Bits elevated(Bits bits) { return 3 * bits + 128; }

QuadratureSpec real_axis_spec(Bits bits) {
  const Bits wide = elevated(bits);
  QuadratureSpec spec;
  spec.abs_tol = ldexp(PrecReal(1, wide), -static_cast<long>(bits) - 8);
  spec.rel_tol = spec.abs_tol;
  return spec;
}

void require_real_axis(const PrecReal& z, const PrecReal& t, const PrecReal& b) {
  if (b.sign() <= 0) throw DomainError("s: b must be > 0");
  if (t.sign() < 0) throw DomainError("s: t must be >= 0");
  if (z.sign() < 0 || z > b) throw DomainError("s: z must lie in [0, b]");
}

}  // namespace

PrecReal s_real_axis(const PrecReal& z_in, const PrecReal& t_in, const PrecReal& b_in) {
  require_real_axis(z_in, t_in, b_in);
  const Bits bits = std::max(width(z_in, t_in), b_in.precision());
  if (t_in.is_zero()) return PrecReal::zero(bits);
  const Bits wide = elevated(bits);
  const PrecReal z = z_in.with_precision(wide);
  const PrecReal t = t_in.with_precision(wide);
  const PrecReal b = b_in.with_precision(wide);
  const PrecReal kz = special::coth_minus_inv(t * z);
  const PrecReal dkz = t * special::coth_minus_inv_prime(t * z);
  const PrecReal d2kz = t * t * coth_minus_inv_second(t * z);
  const PrecReal near = ldexp(PrecReal(1, wide), -static_cast<long>(bits) - 32);

  const numerics::RealFn f = [&](const PrecReal& u) {
    const PrecReal w = b * u;
    const PrecReal d = w - z;
    if (abs(d) < near) return b * (dkz + d * d2kz / 2);
    return b * (special::coth_minus_inv(t * w) - kz) / d;
  };
  const auto r = numerics::quad_jacobi_half(f, numerics::JacobiWeight::sqrt_u_over_one_minus_u, real_axis_spec(bits));
  return (-kz - r.value / const_pi(wide)).with_precision(bits);
}

PrecReal s_prime_real_axis(const PrecReal& z_in, const PrecReal& t_in, const PrecReal& b_in) {
  require_real_axis(z_in, t_in, b_in);
  const Bits bits = std::max(width(z_in, t_in), b_in.precision());
  if (t_in.is_zero()) return PrecReal::zero(bits);
  const Bits wide = elevated(bits);
  const PrecReal z = z_in.with_precision(wide);
  const PrecReal t = t_in.with_precision(wide);
  const PrecReal b = b_in.with_precision(wide);
  const PrecReal kz = special::coth_minus_inv(t * z);
  const PrecReal dkz = t * special::coth_minus_inv_prime(t * z);
  const PrecReal d2kz = t * t * coth_minus_inv_second(t * z);
  const PrecReal near = ldexp(PrecReal(1, wide), -static_cast<long>(bits) - 32);

  const numerics::RealFn f = [&](const PrecReal& u) {
    const PrecReal w = b * u;
    const PrecReal d = w - z;
    if (abs(d) < near) return b * d2kz / 2;
    const PrecReal first = (special::coth_minus_inv(t * w) - kz) / d;
    return b * (first - dkz) / d;
  };
  const auto r = numerics::quad_jacobi_half(f, numerics::JacobiWeight::sqrt_u_over_one_minus_u, real_axis_spec(bits));
  return (-dkz - r.value / const_pi(wide)).with_precision(bits);
}

PrecReal s_function(const PrecReal& z, const PrecReal& t, const PrecReal& b) {
  require_real_axis(z, t, b);
  const Bits bits = std::max(width(z, t), b.precision());
  try {
    const ContourDensity contour(b, t, ldexp(PrecReal(1, bits), -static_cast<long>(bits) + 4));
    return contour.s(z.with_precision(bits));
  } catch (const StripViolation&) {
    return s_real_axis(z, t, b);
  }
}

PrecReal q_eval(const PrecReal& z, const PrecReal& tau, const PrecReal& t, const PrecReal& b) {
  return 1 + tau * s_function(z, t, b);
}

PrecReal q_prime_eval(const PrecReal& z, const PrecReal& tau, const PrecReal& t, const PrecReal& b) {
  require_real_axis(z, t, b);
  const Bits bits = std::max(width(z, t), b.precision());
  try {
    const ContourDensity contour(b, t, ldexp(PrecReal(1, bits), -static_cast<long>(bits) + 4));
    return tau * contour.s_prime(z.with_precision(bits));
  } catch (const StripViolation&) {
    return tau * s_prime_real_axis(z, t, b);
  }
}

PrecReal lagrange_multiplier(const PrecReal& tau_in, const PrecReal& t_in, const PrecReal& b_in) {
  if (tau_in.sign() < 0 || tau_in >= 1) throw DomainError("lagrange_multiplier: tau must lie in [0, 1)");
  if (t_in.sign() < 0) throw DomainError("lagrange_multiplier: t must be >= 0");
  if (b_in.sign() <= 0) throw DomainError("lagrange_multiplier: b must be > 0");
  const Bits bits = std::max(width(tau_in, t_in), b_in.precision());
  const Bits work = bits + 16;
  const PrecReal tau = tau_in.with_precision(work);
  const PrecReal t = t_in.with_precision(work);
  const PrecReal b = b_in.with_precision(work);
  PrecReal l = 4 * (1 - const_log2(work)) - b / 2 * (1 - tau) - b + 2 * log(b);
  if (!tau.is_zero()) {
    l += 4 * tau * b * special::J_deficit_over_z(2 * b * t) + tau * b * special::H_fn(t * b);
  }
  return l.with_precision(bits);
}

PrecReal v_correction(const PrecReal& b, const PrecReal& q0, const PrecReal& qb, const PrecReal& qb_prime) {
  if (b.sign() <= 0) throw DomainError("v_correction: b must be > 0");
  if (q0.sign() <= 0 || qb.sign() <= 0) {
    throw DomainError("v_correction: density factor not positive (q(0) = " + q0.str(12) + ", q(b) = " + qb.str(12) +
                      ")");
  }
  return 3 / (4 * b * q0) - qb_prime / (4 * qb * qb) + 47 / (12 * b * qb);
}

EquilibriumSolution solve_equilibrium(const PrecReal& tau_in, const PrecReal& t_in, const SolverOptions& options) {
  const EndpointResult ep = solve_endpoint(tau_in, t_in, options);
  const Bits bits = options.bits;
  EquilibriumSolution sol;
  sol.tau = tau_in.with_precision(bits);
  sol.t = t_in.with_precision(bits);
  sol.b = ep.b;
  sol.iterations = ep.iterations;
  sol.residual = ep.residual;
  sol.damped = ep.damped;

  if (sol.tau.is_zero() || sol.t.is_zero()) {
    sol.l = PrecReal(-2, bits);
    sol.v = rational(7, 6, bits);
    sol.q0 = PrecReal(1, bits);
    sol.qb = PrecReal(1, bits);
    sol.qb_prime = PrecReal::zero(bits);
    return sol;
  }

  sol.l = lagrange_multiplier(sol.tau, sol.t, sol.b);
  const PrecReal zero = PrecReal::zero(bits);
  try {
    const ContourDensity contour(sol.b, sol.t, ldexp(PrecReal(1, bits), -static_cast<long>(bits) + 8),
                                 options.max_contour_nodes);
    sol.q0 = 1 + sol.tau * contour.s(zero);
    sol.qb = 1 + sol.tau * contour.s(sol.b);
    sol.qb_prime = sol.tau * contour.s_prime(sol.b);
    sol.contour_nodes = contour.nodes();
  } catch (const StripViolation&) {
    sol.q0 = 1 + sol.tau * s_real_axis(zero, sol.t, sol.b);
    sol.qb = 1 + sol.tau * s_real_axis(sol.b, sol.t, sol.b);
    sol.qb_prime = sol.tau * s_prime_real_axis(sol.b, sol.t, sol.b);
    sol.real_axis_fallback = true;
  }
  sol.v = v_correction(sol.b, sol.q0, sol.qb, sol.qb_prime);
  return sol;
}

PrecReal endpoint_normalization(const PrecReal& b, const PrecReal& tau, const PrecReal& t) {
  if (b.sign() <= 0) throw DomainError("endpoint_normalization: b must be > 0");
  const Bits bits = std::max(width(b, tau), t.precision());
  const Bits work = bits + 16;
  const PrecReal bw = b.with_precision(work);
  const PrecReal tw = t.with_precision(work);
  const PrecReal tauw = tau.with_precision(work);
  const numerics::RealFn f = [&](const PrecReal& u) { return special::potential_V_prime(bw * u, tauw, tw); };
  const auto r = numerics::quad_jacobi_half(f, numerics::JacobiWeight::sqrt_u_over_one_minus_u,
                                            QuadratureSpec::with_tolerance(ldexp(PrecReal(1, work), -bits)));
  return (bw * r.value / (2 * const_pi(work))).with_precision(bits);
}

PrecReal density_mass(const EquilibriumSolution& solution) {
  const Bits bits = solution.b.precision();
  const PrecReal& b = solution.b;
  const PrecReal& tau = solution.tau;
  const PrecReal& t = solution.t;
  std::optional<ContourDensity> contour;
  if (!solution.real_axis_fallback && !tau.is_zero()) {
    contour.emplace(b, t, ldexp(PrecReal(1, bits), -static_cast<long>(bits) + 8));
  }
  const auto q = [&](const PrecReal& x) {
    if (tau.is_zero()) return PrecReal(1, bits);
    return 1 + tau * (contour ? contour->s(x) : s_real_axis(x, t, b));
  };
  // int_0^b sqrt((b-x)/x) q(x) dx with x = b(1-u).
  const numerics::RealFn f = [&](const PrecReal& u) { return q(b * (1 - u)); };
  const auto r = numerics::quad_jacobi_half(f, numerics::JacobiWeight::sqrt_u_over_one_minus_u,
                                            QuadratureSpec::with_tolerance(ldexp(PrecReal(1, bits), -bits + 8)));
  return b * r.value / (2 * const_pi(bits));
}

namespace {

void require_alpha(int N, const exact::Rational& alpha) {
  if (N < 1) throw DomainError("h_N: N must be >= 1");
  if (alpha <= 1) throw DomainError("h_N: alpha must be > 1");
}

exact::Rational h_over_factorial_squared(int N, const exact::Rational& alpha) {
  const std::vector<exact::Rational> h = exact::norms_h(N + 1, alpha, std::max(exact::kDefaultMaxN, N + 1));
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(N));
  exact::Rational r = h[N] / exact::Rational(f * f);
  r.canonicalize();
  return r;
}

}  // namespace

PrecReal ln_h_asymptotic(int N, const exact::Rational& alpha, Bits bits) {
  require_alpha(N, alpha);
  SolverOptions options;
  options.bits = bits;
  const PrecReal tau(exact::Rational(1 / alpha), bits);
  const PrecReal t(exact::Rational(N / alpha), bits);
  const EquilibriumSolution sol = solve_equilibrium(tau, t, options);
  return log(PrecReal(N, bits) / 8) + (2 * N + 2) * log(tau) + 2 * log(sol.b) + N * (sol.l + 2) + sol.v / N -
         1 / (6 * PrecReal(N, bits));
}

PrecReal h_asymptotic(int N, const exact::Rational& alpha, Bits bits) { return exp(ln_h_asymptotic(N, alpha, bits)); }

PrecReal ln_h_exact(int N, const exact::Rational& alpha, Bits bits) {
  require_alpha(N, alpha);
  return exact::ln_rational(h_over_factorial_squared(N, alpha), bits);
}

PrecReal hN_o_expansion_residual(int N, const exact::Rational& alpha, Bits bits) {
  require_alpha(N, alpha);
  mpz_class num = alpha.get_num() - alpha.get_den();
  mpz_class den = alpha.get_den();
  mpz_pow_ui(num.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(2 * N + 1));
  mpz_pow_ui(den.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(2 * N + 1));
  exact::Rational scaled = h_over_factorial_squared(N, alpha) * exact::Rational(num, den);
  scaled.canonicalize();
  const Bits work = bits + 16;
  const PrecReal r_minus_one(exact::Rational(2 / (alpha - 1)), work);
  const PrecReal n(N, work);
  const PrecReal z32 = numerics::zeta(rational(3, 2, work), work);
  const PrecReal value = exact::ln_rational(scaled, work) + z32 / (2 * sqrt(const_pi(work) * r_minus_one * n)) -
                         1 / (4 * n);
  return value.with_precision(bits);
}

}  // namespace sixvertex::equilibrium

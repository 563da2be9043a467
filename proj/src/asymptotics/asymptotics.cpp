#include "sixvertex/asymptotics/asymptotics.hpp"

#include <map>
#include <mutex>
#include <string>

#include "sixvertex/errors.hpp"
#include "sixvertex/exact/partition.hpp"
#include "sixvertex/numerics/euler_maclaurin.hpp"
#include "sixvertex/numerics/quadrature.hpp"
#include "sixvertex/numerics/zeta.hpp"
#include "sixvertex/special/functions.hpp"

namespace sixvertex::asymptotics {

using numerics::const_log2;
using numerics::const_pi;
using numerics::ldexp;
using numerics::QuadratureSpec;
using numerics::QuadResult;
using numerics::rational;
using numerics::RealFn;

namespace {

PrecReal pow2(long e, Bits bits) { return ldexp(PrecReal(1, bits), e); }

void require_tol(const PrecReal& tol, Bits bits, const char* what) {
  if (!(tol >= pow2(-static_cast<long>(bits) + 24, bits)) || tol > PrecReal::parse("1e-3", bits)) {
    throw DomainError(std::string(what) + ": tol must lie in [2^-(bits-24), 1e-3]");
  }
}

// k-th derivative of m^-1/2 / (m+n) at m, times n^-1/2.
PrecReal bracket_summand(int k, const PrecReal& m, const PrecReal& n, const PrecReal& inv_sqrt_n) {
  const Bits bits = m.precision();
  PrecReal total = PrecReal::zero(bits);
  // u = (m+n)^-1, w = m^-1/2; binomial(k, j) u^(j) w^(k-j).
  const PrecReal mn = m + n;
  const PrecReal w0 = 1 / sqrt(m);
  PrecReal binom(1, bits);
  for (int j = 0; j <= k; ++j) {
    const int i = k - j;
    PrecReal u = 1 / mn;
    for (int r = 1; r <= j; ++r) u *= -PrecReal(r, bits) / mn;
    PrecReal w = w0;
    for (int r = 0; r < i; ++r) w *= -(PrecReal(2 * r + 1, bits) / 2) / m;
    total += binom * u * w;
    binom = binom * (k - j) / (j + 1);
  }
  return total * inv_sqrt_n;
}

// sum_{n >= N} n^-s with its Euler-Maclaurin remainder bound.
numerics::EmTailResult hurwitz_tail(const PrecReal& s, long N) {
  const Bits bits = s.precision();
  const numerics::DerivativeFn f = [&s](int k, const PrecReal& x) {
    PrecReal c(1, x.precision());
    for (int r = 0; r < k; ++r) c *= -(s + r);
    return c * pow(x, -(s + k));
  };
  const PrecReal Nr(N, bits);
  return numerics::em_tail_from(f, N, 9, pow(Nr, 1 - s) / (s - 1));
}

}  // namespace

BracketValue bracket(long n, const PrecReal& tol) {
  if (n < 1) throw DomainError("bracket: n must be >= 1");
  if (tol.sign() <= 0) throw DomainError("bracket: tol must be > 0");
  const Bits bits = tol.precision();
  const PrecReal nr(n, bits);
  const PrecReal inv_sqrt_n = 1 / sqrt(nr);
  const numerics::DerivativeFn f = [&](int k, const PrecReal& m) { return bracket_summand(k, m, nr, inv_sqrt_n); };
  numerics::EmTailOptions options;
  options.max_derivative_order = 9;
  // int_M^inf dm / ((m+n) sqrt(mn)) = (2/n) atan(sqrt(n/M)).
  options.tail_integral = [&](const PrecReal& M) { return 2 * atan(sqrt(nr / M)) / nr; };
  const auto r = numerics::em_tail_sum(f, options, QuadratureSpec::with_tolerance(tol));
  return BracketValue{r.value - const_pi(bits) / nr, r.remainder_bound, r.cutoff};
}

ConstantC constant_c(const PrecReal& tol_in, Bits bits) {
  const PrecReal tol = tol_in.with_precision(bits);
  require_tol(tol, bits, "constant_c");
  const Bits work = bits + 16;
  const PrecReal pi = const_pi(work);

  // For large n, B(n) ~ sum_k (-1)^k zeta(1/2-k) n^{-k-3/2}: the Euler-Maclaurin
  // expansion of sum_m m^-1/2 g(m) with g(m) = 1/((m+n) sqrt n) smooth on the
  // scale n. The tail over n >= N is summed term by term as Hurwitz tails.
  std::vector<PrecReal> zeta_coeff;
  const auto coeff = [&](int k) -> const PrecReal& {
    while (static_cast<int>(zeta_coeff.size()) <= k) {
      const int j = static_cast<int>(zeta_coeff.size());
      PrecReal z = numerics::zeta_continued(rational(1 - 2 * j, 2, work), work);
      zeta_coeff.push_back(j % 2 == 0 ? z : -z);
    }
    return zeta_coeff[k];
  };

  for (long N = 32; N <= (1L << 14); N *= 2) {
    const PrecReal target = tol.with_precision(work) / 4;
    // Asymptotic tail: stop at the smallest term or once below target.
    PrecReal tail = PrecReal::zero(work);
    PrecReal tail_bound = PrecReal::zero(work);
    PrecReal previous_term;
    int used = 0;
    bool reached = false;
    for (int k = 0; k < 200; ++k) {
      const numerics::EmTailResult h = hurwitz_tail(PrecReal(2 * k + 3, work) / 2, N);
      const PrecReal term = coeff(k) * h.value;
      if (k > 0 && abs(term) >= abs(previous_term)) break;
      if (abs(term) <= target / 4) {
        tail_bound += 2 * abs(term);
        reached = true;
        break;
      }
      tail += term;
      tail_bound += abs(coeff(k)) * h.remainder_bound;
      previous_term = term;
      ++used;
    }
    if (!reached) continue;

    const PrecReal inner_tol = target / N;
    PrecReal direct = PrecReal::zero(work);
    PrecReal bound = tail_bound;
    long max_inner = 0;
    for (long n = 1; n < N; ++n) {
      const BracketValue b = bracket(n, inner_tol);
      direct += b.value;
      bound += b.error_bound;
      max_inner = std::max(max_inner, b.inner_cutoff);
    }
    if (bound > tol) continue;

    ConstantC out;
    out.series_total = (direct + tail).with_precision(bits);
    out.c = (const_log2(work) / 4 + log(pi) / 2 + (direct + tail) / (4 * pi)).with_precision(bits);
    out.error_bound = bound.with_precision(bits);
    out.outer_cutoff = N;
    out.outer_terms = used;
    out.max_inner_cutoff = max_inner;
    return out;
  }
  throw NonConvergence("constant_c: tolerance " + tol.str(6) + " not reached");
}

const PrecReal& constant_c_cached(Bits bits) {
  static std::mutex mutex;
  static std::map<Bits, PrecReal> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(bits);
  if (it == cache.end()) {
    it = cache.emplace(bits, constant_c(pow2(-static_cast<long>(bits) + 24, bits), bits).c).first;
  }
  return it->second;
}

AsymptoticModel asymptotic_model(const PrecReal& alpha) {
  if (!(alpha > 1)) throw DomainError("asymptotic model: alpha must be > 1");
  const Bits bits = alpha.precision();
  const Bits work = bits + 16;
  const PrecReal a = alpha.with_precision(work);
  const PrecReal z32 = numerics::zeta(rational(3, 2, work), work);
  const PrecReal c = constant_c_cached(bits).with_precision(work);
  AsymptoticModel m;
  m.alpha = alpha;
  m.F = ((a + 1) / 2).with_precision(bits);
  m.G = exp(-z32 * sqrt((a - 1) / (2 * const_pi(work)))).with_precision(bits);
  m.C = (exp(c) * sqrt(sqrt(a - 1))).with_precision(bits);
  m.c_const = c.with_precision(bits);
  m.d_const = PrecReal::zero(bits);
  return m;
}

PrecReal predict_lnZ(int N, const PrecReal& alpha) {
  if (N < 1) throw DomainError("predict_lnZ: N must be >= 1");
  if (!(alpha > 1)) throw DomainError("predict_lnZ: alpha must be > 1");
  const Bits bits = alpha.precision();
  const Bits work = bits + 16;
  const PrecReal a = alpha.with_precision(work);
  const PrecReal n(N, work);
  const PrecReal z32 = numerics::zeta(rational(3, 2, work), work);
  const PrecReal ln_C = constant_c_cached(bits).with_precision(work) + log(a - 1) / 4;
  const PrecReal ln_F = log((a + 1) / 2);
  const PrecReal ln_G = -z32 * sqrt((a - 1) / (2 * const_pi(work)));
  return (ln_C + n * n * ln_F + sqrt(n) * ln_G + log(n) / 4).with_precision(bits);
}

PrecReal ln_Z_exact(int N, const exact::Rational& alpha, Bits bits) {
  if (N < 1) throw DomainError("ln_Z_exact: N must be >= 1");
  if (alpha <= 1) throw DomainError("ln_Z_exact: alpha must be > 1");
  return exact::ln_rational(exact::ik_partition(N, alpha, std::max(exact::kDefaultMaxN, N)), bits);
}

PrecReal ln_factorial(int N, Bits bits) {
  if (N < 0) throw DomainError("ln_factorial: N must be >= 0");
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(N));
  return exact::ln_integer(f, bits);
}

namespace {

QuadratureSpec working_spec(Bits bits) {
  QuadratureSpec spec = QuadratureSpec::with_tolerance(pow2(-static_cast<long>(bits) + 24, bits + 16));
  spec.max_subdivisions = 8000;
  return spec;
}

// Breakpoints [0, t] refined where the I, J evaluators switch branch at 8x.
std::vector<PrecReal> branch_points(const PrecReal& t, long scale) {
  const Bits bits = t.precision();
  std::vector<PrecReal> pts{PrecReal::zero(bits)};
  for (const PrecReal& z : {rational(1, 10, bits), PrecReal(60, bits)}) {
    const PrecReal x = z / scale;
    if (x < t) pts.push_back(x);
  }
  pts.push_back(t);
  return pts;
}

// 1 + 4 I(z)/z, which vanishes like z/8 at 0; the width grows with -log2 z.
PrecReal one_plus_four_I_over_z(const PrecReal& z) {
  const Bits bits = z.precision();
  if (z < rational(1, 8, bits)) {
    const long extra = 8 + (z.is_zero() ? 0 : std::max(0L, -z.exponent2()));
    const PrecReal zw = z.with_precision(bits + extra);
    return (1 + 4 * special::I_over_z(zw)).with_precision(bits);
  }
  return 1 + 4 * special::I_over_z(z);
}

}  // namespace

PrecReal phi(const PrecReal& t_in) {
  if (t_in.sign() < 0) throw DomainError("phi: t must be >= 0");
  const Bits bits = t_in.precision();
  if (t_in.is_zero()) return PrecReal::zero(bits);
  const Bits work = bits + 16;
  const PrecReal t = t_in.with_precision(work);
  const RealFn g = [](const PrecReal& x) {
    const PrecReal z = 8 * x;
    return z * special::J_deficit_over_z(z) - special::I_fn(z).value + special::log_sinhc(4 * x) / 2;
  };
  const QuadResult r = numerics::integrate(g, branch_points(t, 8), working_spec(bits));
  return (-t + 2 * r.value / t).with_precision(bits);
}

PrecReal psi(const PrecReal& t_in) {
  if (t_in.sign() < 0) throw DomainError("psi: t must be >= 0");
  const Bits bits = t_in.precision();
  if (t_in.is_zero()) return PrecReal::zero(bits);
  const Bits work = bits + 16;
  const PrecReal t = t_in.with_precision(work);
  const RealFn g = [](const PrecReal& x) {
    const PrecReal z = 8 * x;
    const PrecReal I = special::I_fn(z).value;
    const PrecReal I_over = special::I_over_z(z);
    const PrecReal mixed = z * (2 * special::J_prime(z) + special::coth_minus_inv(4 * x) / 2) * one_plus_four_I_over_z(z);
    return -2 * I * I_over + 8 * I_over + mixed;
  };
  const QuadResult r = numerics::integrate(g, branch_points(t, 8), working_spec(bits));
  const PrecReal z = 8 * t;
  const PrecReal I = special::I_fn(z).value;
  const PrecReal J_deficit = z * special::J_deficit_over_z(z);
  const PrecReal outer = 3 * t - 3 * t * t / 2 - 2 * t * I - I * I / 2 + I -
                         special::log_sinhc(4 * t) / 2 - J_deficit;
  return (outer + r.value).with_precision(bits);
}

DoubleScalingModel double_scaling(const PrecReal& t) { return DoubleScalingModel{t, phi(t), psi(t)}; }

PrecReal predict_lnZ_ds(int N, const PrecReal& alpha) {
  if (N < 1) throw DomainError("predict_lnZ_ds: N must be >= 1");
  if (!(alpha > 1)) throw DomainError("predict_lnZ_ds: alpha must be > 1");
  const Bits bits = alpha.precision();
  const Bits work = bits + 16;
  const PrecReal a = alpha.with_precision(work);
  const PrecReal n(N, work);
  const PrecReal t = n / a;
  // Phi and Psi carry their own quadrature tolerance; extra width buys nothing there
  const PrecReal t_at_bits = t.with_precision(bits);
  const PrecReal value = ln_factorial(N, work) + n * n * log((a * a - 1) / (2 * a)) + n * log(2 / a) +
                         n * phi(t_at_bits) + psi(t_at_bits);
  return value.with_precision(bits);
}

namespace {

struct Integral {
  PrecReal value;
  PrecReal error;
};

Integral operator+(const Integral& a, const Integral& b) { return {a.value + b.value, a.error + b.error}; }
Integral operator*(const PrecReal& s, const Integral& a) { return {s * a.value, abs(s) * a.error}; }

Integral finite(const RealFn& g, const std::vector<PrecReal>& pts, const QuadratureSpec& spec) {
  const QuadResult r = numerics::integrate(g, pts, spec);
  return {r.value, r.error};
}

// int_X^inf g for g with half-integer power decay.
Integral power_tail(const RealFn& g, const PrecReal& X, const QuadratureSpec& spec) {
  const QuadResult r = numerics::quad_power_tail(g, X, spec);
  return {r.value, r.error};
}

// int_0^X g(x) dx with g ~ x^-1/2 at 0, through x = y^2.
Integral sqrt_singular(const RealFn& g, const std::vector<PrecReal>& pts, const QuadratureSpec& spec) {
  std::vector<PrecReal> ys;
  for (const auto& p : pts) ys.push_back(sqrt(p));
  const RealFn h = [&g](const PrecReal& y) { return 2 * y * g(y * y); };
  return finite(h, ys, spec);
}

IdentityResidual residual(std::string name, const Integral& lhs, const PrecReal& rhs, Bits bits) {
  return IdentityResidual{std::move(name), lhs.value.with_precision(bits), rhs.with_precision(bits),
                          (lhs.value - rhs).with_precision(bits), lhs.error.with_precision(bits)};
}

QuadratureSpec identity_spec(const PrecReal& tol, Bits bits) {
  QuadratureSpec spec = QuadratureSpec::with_tolerance(tol.with_precision(bits + 16) / 64);
  spec.max_subdivisions = 8000;
  return spec;
}

PrecReal I_of(const PrecReal& z) { return special::I_fn(z).value; }

}  // namespace

C0Report c0_identity_check(const PrecReal& tol_in, Bits bits) {
  const PrecReal tol = tol_in.with_precision(bits);
  require_tol(tol, bits, "c0_identity_check");
  const Bits work = bits + 16;
  const QuadratureSpec spec = identity_spec(tol, bits);
  const PrecReal pi = const_pi(work);
  const PrecReal ln2 = const_log2(work);
  const PrecReal zero = PrecReal::zero(work);
  const PrecReal z_lo = rational(1, 10, work);
  const PrecReal z_hi(60, work);
  const PrecReal X(64, work);

  // I(x)/(e^x - 1) = (I(x)/x) * x/(e^x - 1); exponential decay.
  const RealFn a1 = [](const PrecReal& x) { return special::I_over_z(x) * special::bose_kernel(x); };
  const QuadResult A1q = numerics::quad_semi_infinite(a1, PrecReal(1, work), spec);
  const Integral A1{A1q.value, A1q.error};

  const RealFn a2 = [](const PrecReal& x) { return special::J_prime(x) * I_of(x); };
  const Integral A2 = finite(a2, {zero, z_lo, z_hi, X}, spec) + power_tail(a2, X, spec);

  const RealFn a3 = [](const PrecReal& x) { return I_of(x) * special::I_over_z(x); };
  const Integral A3 = rational(-1, 4, work) * finite(a3, {zero, z_lo, PrecReal(1, work)}, spec);

  const RealFn a4 = [](const PrecReal& x) {
    const PrecReal I = I_of(x);
    return (1 - I) * (1 + I) / x;
  };
  const Integral A4 =
      rational(1, 4, work) * (finite(a4, {PrecReal(1, work), z_hi, X}, spec) + power_tail(a4, X, spec));

  const ConstantC cc = constant_c(tol / 64, bits);
  const PrecReal S = cc.series_total.with_precision(work);
  const PrecReal c = cc.c.with_precision(work);

  const Integral c0 = Integral{-rational(1, 2, work) - ln2 / 4 + log(pi) / 2, zero} + rational(1, 2, work) * A1 +
                      A2 + A3 + A4;

  C0Report report;
  report.c0 = c0.value.with_precision(bits);
  report.c = cc.c;
  report.A1 = A1.value.with_precision(bits);
  report.A2 = A2.value.with_precision(bits);
  report.A3 = A3.value.with_precision(bits);
  report.A4 = A4.value.with_precision(bits);
  report.identities.push_back(residual("c0 = c", c0, c, bits));
  report.identities.push_back(residual("evsum1", A3 + A4, ln2 / 2 - S / (4 * pi), bits));
  report.identities.push_back(
      residual("evsum2", A2, rational(1, 2, work) - A1.value / 2 + S / (2 * pi), bits));
  return report;
}

std::vector<IdentityResidual> c_constants_check(const PrecReal& tol_in, Bits bits) {
  const PrecReal tol = tol_in.with_precision(bits);
  require_tol(tol, bits, "c_constants_check");
  const Bits work = bits + 16;
  const QuadratureSpec spec = identity_spec(tol, bits);
  const PrecReal pi = const_pi(work);
  const PrecReal ln2 = const_log2(work);
  const PrecReal zero = PrecReal::zero(work);
  const PrecReal one(1, work);
  const PrecReal pi2_48 = pi * pi / 48;
  const PrecReal z32 = numerics::zeta(rational(3, 2, work), work);
  // Branch switches of I(8x), J(8x) and the start of the power tails.
  const PrecReal x_lo = rational(1, 80, work);
  const PrecReal x_hi = rational(15, 2, work);
  const PrecReal X8(8, work);
  const PrecReal X(64, work);
  const PrecReal z_lo = rational(1, 10, work);
  const PrecReal z_hi(60, work);

  std::vector<IdentityResidual> out;

  // c1, both raw forms.
  const RealFn i8_over_x = [](const PrecReal& x) { return 8 * special::I_over_z(8 * x); };
  const RealFn i8_plus_one_over_x = [](const PrecReal& x) { return (I_of(8 * x) + 1) / x; };
  const Integral c1_raw = finite(i8_over_x, {zero, x_lo, one}, spec) +
                          finite(i8_plus_one_over_x, {one, x_hi, X8}, spec) + power_tail(i8_plus_one_over_x, X8, spec);
  out.push_back(residual("c1", c1_raw, -ln2, bits));
  const RealFn i_over_x = [](const PrecReal& x) { return special::I_over_z(x); };
  const RealFn i_plus_one_over_x = [](const PrecReal& x) { return (I_of(x) + 1) / x; };
  const Integral c1_alt = Integral{-3 * ln2, zero} + finite(i_over_x, {zero, z_lo, one}, spec) +
                          finite(i_plus_one_over_x, {one, z_hi, X}, spec) + power_tail(i_plus_one_over_x, X, spec);
  out.push_back(residual("c1 (rescaled)", c1_alt, -ln2, bits));

  // c2: ln S(4x) - 4x + ln(8x) is ln(1 - e^{-8x}); the latter avoids the
  // cancellation that would swamp the exponential tail.
  const RealFn c2_integrand = [](const PrecReal& x) { return log1p(-exp(-8 * x)); };
  const QuadResult c2q = numerics::quad_semi_infinite(c2_integrand, rational(1, 8, work), spec);
  out.push_back(residual("c2", Integral{c2q.value, c2q.error}, -pi2_48, bits));

  // c4 = 2 int J(8x) dx.
  const RealFn j8 = [](const PrecReal& x) { return special::J_fn(8 * x).value; };
  const Integral c4 = PrecReal(2, work) * (finite(j8, {zero, x_lo, x_hi, X8}, spec) + power_tail(j8, X8, spec));
  out.push_back(residual("c4", c4, pi2_48, bits));

  // c6 = -2 int (I(8x) + 1 - zeta(3/2)/(4 sqrt(2 pi x))) dx.
  const PrecReal k6 = z32 / (4 * sqrt(2 * pi));
  const RealFn c6_integrand = [k6](const PrecReal& x) { return I_of(8 * x) + 1 - k6 / sqrt(x); };
  const Integral c6_body = sqrt_singular(c6_integrand, {zero, x_lo, x_hi, X8}, spec) + power_tail(c6_integrand, X8, spec);
  const Integral c6 = PrecReal(-2, work) * c6_body;
  out.push_back(residual("c6", c6, zero, bits));

  // The simplified forms use A1 = int I/(e^x-1), A2 = int J' I and the evsum1
  // left side.
  const RealFn a1 = [](const PrecReal& x) { return special::I_over_z(x) * special::bose_kernel(x); };
  const QuadResult A1 = numerics::quad_semi_infinite(a1, one, spec);
  const RealFn a2 = [](const PrecReal& x) { return special::J_prime(x) * I_of(x); };
  const Integral A2 = finite(a2, {zero, z_lo, z_hi, X}, spec) + power_tail(a2, X, spec);
  const RealFn a3 = [](const PrecReal& x) { return I_of(x) * special::I_over_z(x); };
  const Integral A3 = finite(a3, {zero, z_lo, one}, spec);
  const RealFn a4 = [](const PrecReal& x) {
    const PrecReal I = I_of(x);
    return (1 - I) * (1 + I) / x;
  };
  const Integral A4 = finite(a4, {one, z_hi, X}, spec) + power_tail(a4, X, spec);

  // c3 raw: (3/2) ln2 + int 4x (S'/S(4x) - 1 + 1/(4x)) (1 + I(8x)/(2x)) dx
  //   - c6 - (1/2)(c1 integrals); S'/S(y) - 1 + 1/y = 2/(e^{2y} - 1).
  const RealFn c3_integrand = [](const PrecReal& x) {
    const PrecReal z = 8 * x;
    // 4x * 2/(e^{8x}-1) = bose_kernel(8x).
    return special::bose_kernel(z) * one_plus_four_I_over_z(z);
  };
  const QuadResult c3q = numerics::quad_semi_infinite(c3_integrand, rational(1, 8, work), spec);
  const Integral c3_raw = Integral{rational(3, 2, work) * ln2, zero} + Integral{c3q.value, c3q.error} +
                          PrecReal(2, work) * c6_body + rational(-1, 2, work) * c1_raw;
  out.push_back(residual("c3", c3_raw, 2 * ln2 + pi2_48 + A1.value / 2, bits));

  // c5 raw: -(1 - ln2) + 16 int x J'(8x)(1 + I(8x)/(2x)) dx.
  const RealFn c5_integrand = [](const PrecReal& x) {
    const PrecReal z = 8 * x;
    return 16 * x * special::J_prime(z) * one_plus_four_I_over_z(z);
  };
  const Integral c5_raw = Integral{-(1 - ln2), zero} + finite(c5_integrand, {zero, x_lo, x_hi, X8}, spec) +
                          power_tail(c5_integrand, X8, spec);
  out.push_back(residual("c5", c5_raw, -(1 - ln2) - pi2_48 + A2.value, bits));

  // c7 raw, term by term.
  const PrecReal k7 = z32 / (4 * sqrt(pi));
  const RealFn c7_b = [k7](const PrecReal& x) {
    const PrecReal z = 8 * x;
    return (special::I_prime(z) + k7 / (z * sqrt(z))) * z * one_plus_four_I_over_z(z);
  };
  const Integral c7_b_int =
      sqrt_singular(c7_b, {zero, x_lo, x_hi, X8}, spec) + power_tail(c7_b, X8, spec);
  const RealFn c7_a = [](const PrecReal& x) {
    const PrecReal z = 8 * x;
    return I_of(z) * special::I_over_z(z) * 2;  // I^2(8x)/(4x)
  };
  const Integral c7_a_int = finite(c7_a, {zero, x_lo, one}, spec);
  const RealFn c7_c = [](const PrecReal& x) {
    const PrecReal I = I_of(8 * x);
    return (1 - I) * (1 + I) / (4 * x);
  };
  const Integral c7_c_int = finite(c7_c, {one, x_hi, X8}, spec) + power_tail(c7_c, X8, spec);
  const RealFn c7_d = [](const PrecReal& x) {
    const PrecReal z = 8 * x;
    return (4 * special::I_prime(z) - 4 * special::I_over_z(z)) / sqrt(x);
  };
  const Integral c7_d_int = sqrt_singular(c7_d, {zero, x_lo, x_hi, X8}, spec) + power_tail(c7_d, X8, spec);
  const Integral c7_raw = Integral{one, zero} + PrecReal(-1, work) * c7_a_int + PrecReal(-2, work) * c7_b_int +
                          c7_c_int + PrecReal(-2, work) * c6_body +
                          (-z32 / (2 * sqrt(2 * pi))) * c7_d_int;
  const PrecReal c7_simplified = rational(1, 2, work) - 3 * ln2 / 4 - A3.value / 4 + A4.value / 4;
  out.push_back(residual("c7", c7_raw, c7_simplified, bits));
  return out;
}

}  // namespace sixvertex::asymptotics

#include "sixvertex/special/functions.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "sixvertex/errors.hpp"
#include "sixvertex/numerics/bernoulli.hpp"
#include "sixvertex/numerics/quadrature.hpp"
#include "sixvertex/numerics/zeta.hpp"

namespace sixvertex::special {

using numerics::const_pi;
using numerics::epsilon;
using numerics::rational;

std::string to_string(Branch b) {
  switch (b) {
    case Branch::series_small: return "series_small";
    case Branch::quadrature: return "quadrature";
    case Branch::asymptotic_large: return "asymptotic_large";
  }
  return "unknown";
}

namespace {

constexpr int kSeriesTerms = 160;
constexpr int kAsymptoticTerms = 140;

// c_n = C(2n, n) / 4^n = (2/pi) int_0^{pi/2} sin^{2n}
mpq_class central_ratio(int n) {
  mpz_class binom;
  mpz_bin_uiui(binom.get_mpz_t(), 2 * n, n);
  mpz_class four;
  mpz_ui_pow_ui(four.get_mpz_t(), 4, n);
  mpq_class r(binom, four);
  r.canonicalize();
  return r;
}

struct Tables {
  std::vector<PrecReal> bern_fact;  // B_n / n!
  std::vector<PrecReal> i_series;   // I(z) = sum_{n>=1} i_series[n] z^n
  std::vector<PrecReal> j_series;   // J(z) = (1 - ln 2) + sum_{n>=1} j_series[n] z^n
  std::vector<PrecReal> coth_series;  // coth y - 1/y = sum_{n>=1} coth_series[n] y^{2n-1}
  std::vector<PrecReal> i_asym;     // I(z) ~ -1 + sum_k i_asym[k] z^{-(k+1/2)}
  std::vector<PrecReal> j_asym;     // J(z) ~ sum_k j_asym[k] z^{-(k+1/2)}
  bool have_asymptotic = false;
};

Tables& tables(Bits bits) {
  static std::mutex mutex;
  static std::map<Bits, std::unique_ptr<Tables>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[bits];
  if (!slot) {
    slot = std::make_unique<Tables>();
    Tables& t = *slot;
    t.bern_fact.resize(kSeriesTerms + 1);
    t.i_series.resize(kSeriesTerms + 1);
    t.j_series.resize(kSeriesTerms + 1);
    t.coth_series.resize(kSeriesTerms / 2 + 1);
    for (int n = 0; n <= kSeriesTerms; ++n) {
      mpz_class f;
      mpz_fac_ui(f.get_mpz_t(), n);
      const mpq_class bf = numerics::bernoulli(n) / mpq_class(f);
      t.bern_fact[n] = PrecReal(bf, bits);
      if (n >= 1) {
        const mpq_class c = central_ratio(n);
        t.i_series[n] = PrecReal(bf * c, bits);
        mpq_class jc = bf * (c * mpq_class(2 * n + 1, 2 * n) - mpq_class(1, 2 * n));
        jc.canonicalize();
        t.j_series[n] = PrecReal(jc, bits);
      }
    }
    for (int n = 1; n <= kSeriesTerms / 2; ++n) {
      mpz_class pow4;
      mpz_ui_pow_ui(pow4.get_mpz_t(), 4, n);
      t.coth_series[n] = PrecReal(mpq_class(pow4) * numerics::bernoulli_over_factorial(2 * n), bits);
    }
  }
  return *slot;
}

const Tables& asymptotic_tables(Bits bits) {
  Tables& t = tables(bits);
  static std::mutex mutex;
  std::lock_guard lock(mutex);
  if (!t.have_asymptotic) {
    const Bits work = bits + 16;
    const PrecReal pi = const_pi(work);
    t.i_asym.resize(kAsymptoticTerms);
    t.j_asym.resize(kAsymptoticTerms);
    for (int k = 0; k < kAsymptoticTerms; ++k) {
      // int_0^inf u^{k-1/2} x/(e^x-1) at x = zu gives Gamma(k+3/2) zeta(k+3/2) z^{-(k+1/2)}
      const PrecReal s = rational(2 * k + 3, 2, work);
      const PrecReal base = PrecReal(central_ratio(k), work) * numerics::gamma(s) * numerics::zeta(s, work) / pi;
      t.i_asym[k] = base.with_precision(bits);
      t.j_asym[k] = (base * (2 * k) / (2 * k + 1)).with_precision(bits);
    }
    t.have_asymptotic = true;
  }
  return t;
}

Bits work_bits(const PrecReal& z) { return z.precision() + 16; }

PrecReal quad_tol(const PrecReal& z, const BranchOptions& options) {
  if (options.tol) return options.tol->with_precision(work_bits(z));
  return epsilon(z.precision() - 12).with_precision(work_bits(z));
}

void require_nonnegative(const PrecReal& z, const char* name) {
  if (z < 0) throw DomainError(std::string(name) + " requires z >= 0, got " + z.str(10));
}

// 1 - theta cot theta, with its Taylor series near 0.
PrecReal one_minus_theta_cot(const PrecReal& theta, const Tables& t) {
  if (theta < rational(1, 4, theta.precision())) {
    // theta cot theta = sum_n (-1)^n 4^n B_2n theta^2n / (2n)!
    const PrecReal th2 = theta * theta;
    PrecReal power = th2;
    PrecReal sum = PrecReal::zero(theta.precision());
    const PrecReal tiny = epsilon(theta.precision() + 8);
    for (int n = 1; n < static_cast<int>(t.coth_series.size()); ++n) {
      const PrecReal term = t.coth_series[n] * power;
      if (n % 2) {
        sum += term;
      } else {
        sum -= term;
      }
      if (abs(term) <= tiny * abs(sum)) break;
      power *= th2;
    }
    return sum;
  }
  return 1 - theta * numerics::cot(theta);
}

// Series branch. sum_{n>=1} coeff[n] z^n; error = 2 |first omitted term|
// (the ratio of successive nonzero terms is below (z/2pi)^2).
FnEval eval_series(const PrecReal& z, const std::vector<PrecReal>& coeff, const PrecReal& constant,
                   bool derivative) {
  const Bits bits = work_bits(z);
  if (!(z < 2 * const_pi(bits))) throw DomainError("series branch needs z < 2 pi, got " + z.str(10));
  const PrecReal zz = z.with_precision(bits);
  PrecReal sum = constant.with_precision(bits);
  PrecReal power(1, bits);  // z^(n-1) for the derivative, z^n otherwise
  if (!derivative) power = zz;
  const PrecReal tiny = epsilon(bits);
  PrecReal omitted = PrecReal::zero(bits);
  const int n_max = static_cast<int>(coeff.size()) - 1;
  for (int n = 1; n <= n_max; ++n) {
    PrecReal term = coeff[n] * power;
    if (derivative) term *= n;
    sum += term;
    power *= zz;
    if (n >= 2 && n % 2 == 0 && abs(term) <= tiny * max(abs(sum), PrecReal(1, bits))) {
      PrecReal next = coeff[n + 2 <= n_max ? n + 2 : n] * power * zz;
      if (derivative) next *= n + 2;
      omitted = abs(next);
      break;
    }
  }
  return FnEval{sum.with_precision(z.precision()), Branch::series_small,
                (2 * omitted + tiny * abs(sum)).with_precision(z.precision())};
}

// Optimally truncated large-z expansion sum_k coeff[k] z^{-(k+1/2)} (or its
// z-derivative); the error adds the exponentially small remainder from the
// u = 1 endpoint.
FnEval eval_asymptotic(const PrecReal& z, const std::vector<PrecReal>& coeff, const PrecReal& constant,
                       bool derivative) {
  if (!(z > 0)) throw DomainError("asymptotic branch needs z > 0");
  const Bits bits = work_bits(z);
  const PrecReal zz = z.with_precision(bits);
  const PrecReal inv = 1 / zz;
  PrecReal power = sqrt(inv);  // z^{-(k+1/2)}
  if (derivative) power *= inv;
  PrecReal sum = constant.with_precision(bits);
  const PrecReal tiny = epsilon(bits);
  PrecReal previous;
  bool have_previous = false;
  PrecReal omitted = PrecReal::zero(bits);
  for (int k = 0; k < static_cast<int>(coeff.size()); ++k) {
    PrecReal term = coeff[k] * power;
    if (derivative) term *= -(rational(2 * k + 1, 2, bits));
    const PrecReal mag = abs(term);
    if (have_previous && !mag.is_zero() && mag > previous) {
      omitted = mag;
      break;
    }
    sum += term;
    omitted = mag;
    if (!mag.is_zero()) {
      previous = mag;
      have_previous = true;
    }
    if (!mag.is_zero() && mag <= tiny * abs(sum)) break;
    power *= inv;
  }
  const PrecReal endpoint = sqrt(zz) * exp(-zz) * (derivative ? zz : PrecReal(1, bits));
  return FnEval{sum.with_precision(z.precision()), Branch::asymptotic_large,
                (omitted + endpoint).with_precision(z.precision())};
}

enum class Which { I, J, I_prime, J_prime };

// (2/pi) int_0^{pi/2} weight(theta) kernel(z sin^2 theta) d theta with the
// interval split at sin^2 theta = 30/z for large z.
FnEval eval_quadrature(const PrecReal& z, Which which, const BranchOptions& options) {
  const Bits bits = work_bits(z);
  const Tables& tab = tables(bits);
  const PrecReal zz = z.with_precision(bits);
  const PrecReal pi = const_pi(bits);
  numerics::RealFn f;
  switch (which) {
    case Which::I:
      f = [&zz](const PrecReal& th) {
        const PrecReal s = sin(th);
        return bose_kernel(zz * s * s) - 1;
      };
      break;
    case Which::J:
      f = [&zz, &tab](const PrecReal& th) {
        const PrecReal s = sin(th);
        return one_minus_theta_cot(th, tab) * bose_kernel(zz * s * s);
      };
      break;
    case Which::I_prime:
      f = [&zz](const PrecReal& th) {
        const PrecReal s2 = sin(th) * sin(th);
        return s2 * bose_kernel_prime(zz * s2);
      };
      break;
    case Which::J_prime:
      f = [&zz, &tab](const PrecReal& th) {
        const PrecReal s2 = sin(th) * sin(th);
        return one_minus_theta_cot(th, tab) * s2 * bose_kernel_prime(zz * s2);
      };
      break;
  }
  std::vector<PrecReal> breaks{PrecReal::zero(bits)};
  if (zz > 30) breaks.push_back(numerics::asin(sqrt(PrecReal(30, bits) / zz)));
  breaks.push_back(pi / 2);
  const auto spec = numerics::QuadratureSpec::with_tolerance(quad_tol(z, options) * pi / 2);
  const auto r = numerics::integrate(f, breaks, spec);
  return FnEval{(2 * r.value / pi).with_precision(z.precision()), Branch::quadrature,
                (2 * r.error / pi).with_precision(z.precision())};
}

Branch select(const PrecReal& z, const BranchOptions& options) {
  if (z <= options.z_lo) return Branch::series_small;
  if (z >= options.z_hi) return Branch::asymptotic_large;
  return Branch::quadrature;
}

FnEval eval_branch(const PrecReal& z, Which which, Branch branch, const BranchOptions& options) {
  const Bits bits = work_bits(z);
  switch (branch) {
    case Branch::series_small: {
      const Tables& t = tables(bits);
      switch (which) {
        case Which::I: return eval_series(z, t.i_series, PrecReal::zero(bits), false);
        case Which::J: return eval_series(z, t.j_series, 1 - numerics::const_log2(bits), false);
        case Which::I_prime: return eval_series(z, t.i_series, PrecReal::zero(bits), true);
        case Which::J_prime: return eval_series(z, t.j_series, PrecReal::zero(bits), true);
      }
      break;
    }
    case Branch::asymptotic_large: {
      const Tables& t = asymptotic_tables(bits);
      switch (which) {
        case Which::I: return eval_asymptotic(z, t.i_asym, PrecReal(-1, bits), false);
        case Which::J: return eval_asymptotic(z, t.j_asym, PrecReal::zero(bits), false);
        case Which::I_prime: return eval_asymptotic(z, t.i_asym, PrecReal::zero(bits), true);
        case Which::J_prime: return eval_asymptotic(z, t.j_asym, PrecReal::zero(bits), true);
      }
      break;
    }
    case Branch::quadrature: return eval_quadrature(z, which, options);
  }
  throw DomainError("unknown branch");
}

}  // namespace

PrecReal bose_kernel(const PrecReal& x) {
  const Bits bits = x.precision();
  if (abs(x) < rational(1, 8, bits)) {
    const Tables& t = tables(bits);
    PrecReal sum(1, bits);
    PrecReal power = x;
    for (int n = 1; n < kSeriesTerms; ++n) {
      const PrecReal term = t.bern_fact[n] * power;
      sum += term;
      if (n >= 2 && n % 2 == 0 && abs(term) <= epsilon(bits + 4)) break;
      power *= x;
    }
    return sum;
  }
  return x / numerics::expm1(x);
}

PrecReal bose_kernel_prime(const PrecReal& x) {
  const Bits bits = x.precision();
  if (abs(x) < rational(1, 8, bits)) {
    const Tables& t = tables(bits);
    PrecReal sum = t.bern_fact[1];
    PrecReal power = x;
    for (int n = 2; n < kSeriesTerms; ++n) {
      const PrecReal term = t.bern_fact[n] * power * n;
      sum += term;
      if (n % 2 == 0 && abs(term) <= epsilon(bits + 4)) break;
      power *= x;
    }
    return sum;
  }
  // k' = k/x - k - k^2/x
  const PrecReal k = bose_kernel(x);
  return k / x - k - k * k / x;
}

namespace {

// S(x) - 1 = sum_{n>=1} x^2n / (2n+1)! for |x| < 1/4, without cancellation.
PrecReal sinhc_minus_one(const PrecReal& x) {
  const Bits bits = x.precision();
  const PrecReal x2 = x * x;
  PrecReal sum = PrecReal::zero(bits);
  PrecReal term(1, bits);
  for (int n = 1; n < 60; ++n) {
    term *= x2;
    term /= (2 * n) * (2 * n + 1);
    sum += term;
    if (term <= epsilon(bits + 4) * sum) break;
  }
  return sum;
}

}  // namespace

PrecReal sinhc(const PrecReal& x) {
  if (abs(x) < rational(1, 4, x.precision())) return 1 + sinhc_minus_one(x);
  return numerics::sinh(x) / x;
}

PrecReal log_sinhc(const PrecReal& x) {
  const Bits bits = x.precision();
  const PrecReal ax = abs(x);
  if (ax < rational(1, 4, bits)) return numerics::log1p(sinhc_minus_one(x));
  if (ax > 1) {
    // ln(sinh x / x) = x + ln(1 - e^{-2x}) - ln 2 - ln x
    return ax + numerics::log1p(-exp(-2 * ax)) - numerics::const_log2(bits) - log(ax);
  }
  return log(sinhc(x));
}

PrecReal H_fn(const PrecReal& z) {
  if (z.is_zero()) return PrecReal::zero(z.precision());
  return log_sinhc(z) / z;
}

PrecReal coth_minus_inv(const PrecReal& y) {
  const Bits bits = y.precision();
  if (abs(y) < rational(1, 4, bits)) {
    const Tables& t = tables(bits);
    const PrecReal y2 = y * y;
    PrecReal power = y;
    PrecReal sum = PrecReal::zero(bits);
    for (int n = 1; n < static_cast<int>(t.coth_series.size()); ++n) {
      const PrecReal term = t.coth_series[n] * power;
      sum += term;
      if (abs(term) <= epsilon(bits + 4) * abs(sum)) break;
      power *= y2;
    }
    return sum;
  }
  return numerics::coth(y) - 1 / y;
}

PrecReal coth_minus_inv_prime(const PrecReal& y) {
  const Bits bits = y.precision();
  if (abs(y) < rational(1, 4, bits)) {
    const Tables& t = tables(bits);
    const PrecReal y2 = y * y;
    PrecReal power(1, bits);
    PrecReal sum = PrecReal::zero(bits);
    for (int n = 1; n < static_cast<int>(t.coth_series.size()); ++n) {
      const PrecReal term = t.coth_series[n] * power * (2 * n - 1);
      sum += term;
      if (abs(term) <= epsilon(bits + 4) * abs(sum)) break;
      power *= y2;
    }
    return sum;
  }
  const PrecReal sh = numerics::sinh(y);
  return 1 / (y * y) - 1 / (sh * sh);
}

namespace {

void require_potential(const PrecReal& tau, const PrecReal& t) {
  if (tau < 0 || !(tau < 1)) throw DomainError("tau must lie in [0, 1), got " + tau.str(10));
  if (t < 0) throw DomainError("t must be non-negative, got " + t.str(10));
}

}  // namespace

PrecReal potential_V(const PrecReal& x, const PrecReal& tau, const PrecReal& t) {
  require_potential(tau, t);
  return x * (1 - tau * H_fn(t * x));
}

PrecReal potential_V_prime(const PrecReal& x, const PrecReal& tau, const PrecReal& t) {
  require_potential(tau, t);
  return 1 - tau * coth_minus_inv(t * x);
}

PrecReal potential_V_second(const PrecReal& x, const PrecReal& tau, const PrecReal& t) {
  require_potential(tau, t);
  return -tau * t * coth_minus_inv_prime(t * x);
}

FnEval I_branch(const PrecReal& z, Branch branch, const BranchOptions& options) {
  require_nonnegative(z, "I");
  return eval_branch(z, Which::I, branch, options);
}

FnEval J_branch(const PrecReal& z, Branch branch, const BranchOptions& options) {
  require_nonnegative(z, "J");
  return eval_branch(z, Which::J, branch, options);
}

FnEval I_prime_branch(const PrecReal& z, Branch branch, const BranchOptions& options) {
  require_nonnegative(z, "I'");
  return eval_branch(z, Which::I_prime, branch, options);
}

FnEval J_prime_branch(const PrecReal& z, Branch branch, const BranchOptions& options) {
  require_nonnegative(z, "J'");
  return eval_branch(z, Which::J_prime, branch, options);
}

FnEval I_fn(const PrecReal& z, const BranchOptions& options) {
  require_nonnegative(z, "I");
  return eval_branch(z, Which::I, select(z, options), options);
}

FnEval J_fn(const PrecReal& z, const BranchOptions& options) {
  require_nonnegative(z, "J");
  return eval_branch(z, Which::J, select(z, options), options);
}

FnEval I_prime_eval(const PrecReal& z, const BranchOptions& options) {
  require_nonnegative(z, "I'");
  return eval_branch(z, Which::I_prime, select(z, options), options);
}

FnEval J_prime_eval(const PrecReal& z, const BranchOptions& options) {
  require_nonnegative(z, "J'");
  return eval_branch(z, Which::J_prime, select(z, options), options);
}

PrecReal I_prime(const PrecReal& z) { return I_prime_eval(z).value; }

PrecReal J_prime(const PrecReal& z) { return J_prime_eval(z).value; }

namespace {

// sum_{n>=1} coeff[n] z^{n-1}
PrecReal series_over_z(const PrecReal& z, const std::vector<PrecReal>& coeff) {
  const Bits bits = work_bits(z);
  PrecReal sum = PrecReal::zero(bits);
  PrecReal power(1, bits);
  for (int n = 1; n < static_cast<int>(coeff.size()); ++n) {
    const PrecReal term = coeff[n] * power;
    sum += term;
    if (n >= 2 && n % 2 == 0 && abs(term) <= epsilon(bits) * abs(sum)) break;
    power *= z;
  }
  return sum.with_precision(z.precision());
}

}  // namespace

PrecReal I_over_z(const PrecReal& z) {
  require_nonnegative(z, "I");
  const BranchOptions options;
  if (z > options.z_lo) return I_fn(z, options).value / z;
  return series_over_z(z, tables(work_bits(z)).i_series);
}

PrecReal J_deficit_over_z(const PrecReal& z) {
  require_nonnegative(z, "J");
  const BranchOptions options;
  if (z > options.z_lo) {
    const Bits bits = work_bits(z);
    return ((J_fn(z, options).value - (1 - numerics::const_log2(bits))) / z).with_precision(z.precision());
  }
  return series_over_z(z, tables(work_bits(z)).j_series);
}

}  // namespace sixvertex::special

#include <cmath>

#include "doctest.h"
#include "sixvertex/errors.hpp"
#include "sixvertex/numerics/bernoulli.hpp"
#include "sixvertex/numerics/euler_maclaurin.hpp"
#include "sixvertex/numerics/prec_complex.hpp"
#include "sixvertex/numerics/quadrature.hpp"
#include "sixvertex/numerics/zeta.hpp"

using namespace sixvertex;
using namespace sixvertex::numerics;

namespace {

PrecReal mpfr_zeta_oracle(const PrecReal& s) {
  auto r = PrecReal::zero(s.precision());
  mpfr_zeta(r.get_mutable(), s.get(), MPFR_RNDN);
  return r;
}

QuadratureSpec tight(Bits bits = 128) { return QuadratureSpec::with_tolerance(PrecReal::parse("1e-36", bits)); }

const PrecReal kFixtureTol = PrecReal::parse("1e-34", 128);  // 10^-(38-4) at 128 bits

}  // namespace

TEST_CASE("PrecReal arithmetic runs at the wider operand precision") {
  const PrecReal a(1, 64);
  const PrecReal b(3, 200);
  CHECK((a / b).precision() == 200);
  CHECK((b - a).precision() == 200);
  PrecReal c(1, 64);
  c /= b;
  CHECK(c.precision() == 200);
  CHECK(abs(c * 3 - 1) < epsilon(190));
}

TEST_CASE("PrecReal from rational rounds to nearest") {
  const PrecReal third(mpq_class(1, 3), 256);
  CHECK(abs(third * 3 - 1) <= epsilon(255));
  CHECK(PrecReal(mpq_class(-7, 2), 53).to_double() == -3.5);
}

TEST_CASE("PrecReal parse rejects junk") {
  CHECK(PrecReal::parse("0.25").to_double() == 0.25);
  CHECK_THROWS_AS(PrecReal::parse(""), DomainError);
  CHECK_THROWS_AS(PrecReal::parse("1e-3x"), DomainError);
  CHECK_THROWS_AS(PrecReal::parse("inf"), DomainError);
}

TEST_CASE("complex square root is the principal branch") {
  const PrecComplex z(PrecReal(-4), PrecReal::zero(128));
  const PrecComplex r = sqrt(z);
  CHECK(abs(r.re) < epsilon(120));
  CHECK(abs(r.im - 2) < epsilon(120));
  const PrecComplex w(PrecReal(-4), -PrecReal(1, 128) / 1000000);
  CHECK(sqrt(w).im < 0);
  const PrecComplex u(PrecReal(3), PrecReal(4));
  const PrecComplex su = sqrt(u);
  CHECK(abs(su.re - 2) < epsilon(120));
  CHECK(abs(su.im - 1) < epsilon(120));
}

TEST_CASE("Bernoulli numbers") {
  CHECK(bernoulli(0) == 1);
  CHECK(bernoulli(1) == mpq_class(-1, 2));
  CHECK(bernoulli(2) == mpq_class(1, 6));
  CHECK(bernoulli(4) == mpq_class(-1, 30));
  CHECK(bernoulli(12) == mpq_class(-691, 2730));
  CHECK(bernoulli(21) == 0);
  CHECK(bernoulli_over_factorial(4) == mpq_class(-1, 720));
}

TEST_CASE("Gauss-Legendre rule integrates polynomials exactly") {
  const auto& rule = gauss_legendre(20, 128);
  PrecReal sum = PrecReal::zero(128);
  for (const auto& w : rule.weights) sum += w;
  CHECK(abs(sum - 2) < epsilon(124));
  // int_{-1}^{1} x^38 = 2/39
  PrecReal moment = PrecReal::zero(128);
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) moment += rule.weights[i] * pow(rule.nodes[i], 38);
  CHECK(abs(moment - PrecReal(2, 128) / 39) < epsilon(122));
}

TEST_CASE("quad_jacobi_half fixtures") {
  const auto spec = tight();
  const PrecReal pi = const_pi(128);
  RealFn one = [](const PrecReal& u) { return PrecReal(1, u.precision()); };
  RealFn ident = [](const PrecReal& u) { return u; };
  CHECK(abs(quad_jacobi_half(one, JacobiWeight::sqrt_u_over_one_minus_u, spec).value - pi / 2) < kFixtureTol);
  CHECK(abs(quad_jacobi_half(ident, JacobiWeight::sqrt_u_over_one_minus_u, spec).value - 3 * pi / 8) <
        kFixtureTol);
  CHECK(abs(quad_jacobi_half(one, JacobiWeight::inv_sqrt_u_times_one_minus_u, spec).value - pi) < kFixtureTol);
}

TEST_CASE("quad_jacobi_half on polynomials matches Beta integrals") {
  const auto spec = tight();
  for (int d = 0; d <= 12; ++d) {
    RealFn f = [d](const PrecReal& u) { return pow(u, d); };
    // int u^(d+1/2) (1-u)^(-1/2) = Gamma(d+3/2) Gamma(1/2) / Gamma(d+2)
    const PrecReal half = rational(1, 2, 160);
    const PrecReal beta = gamma(d + 1 + half) * gamma(half) / gamma(PrecReal(d + 2, 160));
    CHECK(abs(quad_jacobi_half(f, JacobiWeight::sqrt_u_over_one_minus_u, spec).value - beta) < kFixtureTol);
  }
}

TEST_CASE("quad_semi_infinite fixtures") {
  const auto spec = tight();
  const PrecReal pi = const_pi(128);
  const PrecReal one(1, 128);

  RealFn g1 = [](const PrecReal& u) { return sqrt(u) / expm1(u); };
  const PrecReal target1 = sqrt(pi) / 2 * mpfr_zeta_oracle(rational(3, 2, 128));
  CHECK(abs(quad_semi_infinite(g1, one, spec).value - target1) < kFixtureTol);

  RealFn g2 = [](const PrecReal& x) { return x.is_zero() ? PrecReal(1, x.precision()) : x / expm1(x); };
  CHECK(abs(quad_semi_infinite(g2, one, spec).value - pi * pi / 6) < kFixtureTol);

  RealFn g3 = [](const PrecReal& x) { return log(-expm1(-x)); };
  CHECK(abs(quad_semi_infinite(g3, one, spec).value + pi * pi / 6) < kFixtureTol);
}

TEST_CASE("quad_semi_infinite reports a non-decaying tail") {
  RealFn grow = [](const PrecReal& x) { return x; };
  CHECK_THROWS_AS(quad_semi_infinite(grow, PrecReal(1), QuadratureSpec::defaults()), TailNotDecaying);
}

TEST_CASE("quadrature raises NonConvergence on an exhausted budget") {
  auto spec = tight();
  spec.max_subdivisions = 3;
  RealFn kink = [](const PrecReal& x) { return sqrt(abs(x - rational(1, 3, 128))); };
  CHECK_THROWS_AS(integrate(kink, PrecReal(0), PrecReal(1), spec), NonConvergence);
}

TEST_CASE("doubling the subdivision budget stays within the reported error") {
  auto spec = QuadratureSpec::with_tolerance(PrecReal::parse("1e-25"));
  RealFn kink = [](const PrecReal& x) { return sqrt(abs(x - rational(1, 3, 128))); };
  const QuadResult a = integrate(kink, PrecReal(0), PrecReal(1), spec);
  spec.max_subdivisions *= 2;
  const QuadResult b = integrate(kink, PrecReal(0), PrecReal(1), spec);
  CHECK(abs(a.value - b.value) <= a.error);
}

TEST_CASE("QuadratureSpec validation") {
  auto spec = QuadratureSpec::defaults();
  spec.max_subdivisions = 0;
  CHECK_THROWS_AS(spec.validate(), DomainError);
  spec = QuadratureSpec::defaults();
  spec.abs_tol = PrecReal(0);
  CHECK_THROWS_AS(spec.validate(), DomainError);
}

TEST_CASE("zeta at closed-form and tabulated points") {
  const PrecReal pi = const_pi(128);
  CHECK(abs(zeta(PrecReal(2, 128), 128) - pi * pi / 6) < epsilon(124));
  for (const auto& s : {rational(3, 2, 128), rational(5, 2, 128), rational(7, 2, 128), rational(11, 10, 128)}) {
    const PrecReal ref = mpfr_zeta_oracle(s);
    CHECK(abs(zeta(s, 128) - ref) < epsilon(122) * ref);
  }
  CHECK(std::abs(zeta(rational(3, 2, 128), 128).to_double() - 2.61237534868) < 1e-11);
  CHECK(std::abs(zeta(rational(5, 2, 128), 128).to_double() - 1.34148725725) < 1e-11);
}

TEST_CASE("zeta at cutoffs M and 2M agree within the remainder bound") {
  const PrecReal s = rational(3, 2, 128);
  const ZetaResult a = zeta_em(s, 20, 12, 128);
  const ZetaResult b = zeta_em(s, 40, 12, 128);
  CHECK(abs(a.value - b.value) <= a.remainder_bound + b.remainder_bound + epsilon(120));
}

TEST_CASE("zeta domain") {
  CHECK_THROWS_AS(zeta(PrecReal(1), 128), DomainError);
  CHECK_THROWS_AS(zeta(rational(1, 2, 128), 128), DomainError);
}

TEST_CASE("zeta continuation to s < 1") {
  CHECK(abs(zeta_continued(PrecReal(-1, 128), 128) + rational(1, 12, 128)) < epsilon(120));
  CHECK(abs(zeta_continued(PrecReal(-3, 128), 128) - rational(1, 120, 128)) < epsilon(120));
  CHECK(abs(zeta_continued(rational(1, 2, 128), 128) - PrecReal::parse("-1.46035450880958681288949915251529801246722933101258149054289", 128)) <
        epsilon(118));
  const PrecReal s = rational(-7, 2, 128);
  CHECK(abs(zeta_continued(s, 128) - mpfr_zeta_oracle(s)) < epsilon(118));
}

TEST_CASE("em_tail_sum") {
  const auto spec = QuadratureSpec::defaults();
  SUBCASE("k^-2 from 1 is zeta(2)") {
    DerivativeFn f = [](int order, const PrecReal& x) {
      // d^r/dx^r x^-2 = (-1)^r (r+1)! x^-(r+2)
      long fact = 1;
      for (int i = 2; i <= order + 1; ++i) fact *= i;
      return pow(x, -(order + 2)) * (order % 2 ? -fact : fact);
    };
    EmTailOptions opts;
    opts.tail_integral = [](const PrecReal& m) { return 1 / m; };
    const auto r = em_tail_sum(f, opts, spec);
    const PrecReal pi = const_pi(128);
    CHECK(abs(r.value - pi * pi / 6) < PrecReal::parse("1e-19"));
    CHECK(r.remainder_bound <= spec.abs_tol);
  }
  SUBCASE("k^-3/2 from 10 against brute summation") {
    DerivativeFn f = [](int order, const PrecReal& x) {
      PrecReal c(1, x.precision());
      for (int i = 0; i < order; ++i) c *= -(rational(3, 2, x.precision()) + i);
      return c * pow(x, -(rational(3, 2, x.precision()) + order));
    };
    EmTailOptions opts;
    opts.start = 10;
    const auto r = em_tail_sum(f, opts, spec);  // tail integral by quadrature
    // Kahan-summed long double brute force to 10^7 plus a midpoint tail
    long double sum = 0, comp = 0;
    for (long k = 10; k <= 10000000; ++k) {
      const long double y = 1.0L / (k * std::sqrt(static_cast<long double>(k))) - comp;
      const long double t = sum + y;
      comp = (t - sum) - y;
      sum = t;
    }
    sum += 2.0L / std::sqrt(10000000.5L);
    CHECK(std::abs(r.value.to_double() - static_cast<double>(sum)) < 1e-11);
  }
  SUBCASE("zero summand") {
    DerivativeFn f = [](int, const PrecReal& x) { return PrecReal::zero(x.precision()); };
    const auto r = em_tail_sum(f, EmTailOptions{}, spec);
    CHECK(r.value.is_zero());
  }
}

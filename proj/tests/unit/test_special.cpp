#include <array>
#include <cmath>

#include "doctest.h"
#include "sixvertex/errors.hpp"
#include "sixvertex/numerics/zeta.hpp"
#include "sixvertex/special/functions.hpp"

using namespace sixvertex;
using namespace sixvertex::special;
using numerics::epsilon;
using numerics::rational;

namespace {

PrecReal P(const char* s) { return PrecReal::parse(s, 128); }

struct Reference {
  const char* z;
  const char* I;
  const char* J;
  const char* I_prime;
  const char* J_prime;
};

// tests/oracles/special_values.py: the original u-integrals under mpmath
// tanh-sinh at 60 digits, derivatives by mpmath numerical differentiation.
constexpr std::array<Reference, 5> kReference{{
    {"0.5", "-0.1172111199645177816964497255491660166732", "0.2488943416662880094467165998025275489175",
     "-0.2189384985060796948261479711323749117867", "-0.1068966597389966185881494189177917400686"},
    {"1", "-0.219122473209618143748193934966532301422", "0.1998335588236134148285918662944486745359",
     "-0.1889756011317895072095261344821417555574", "-0.08952519117126179127612410451991077860655"},
    {"3", "-0.4949588469411188267939855959072452717571", "0.07859786658258262851905300592431052820593",
     "-0.09490082072545293444428339159407910644056", "-0.03692514346126738156261402154516347052553"},
    {"10", "-0.7558547893493904823635958680057015806673", "0.007766882443174073854513386872941431984985",
     "-0.01365586888352670683625045921735562778835", "-0.001471309346501074838594732748062423934443"},
    {"45", "-0.8891685468980311012250778295873867960922", "0.0006550102130236844584572091643128194379252",
     "-0.001253967132881472081892218540069833365532", "-0.00002250654285959544315012066045439182009666"},
}};

}  // namespace

TEST_CASE("sinhc") {
  CHECK(sinhc(PrecReal(0, 128)) == 1);
  CHECK(abs(sinhc(PrecReal(1, 128)) - numerics::sinh(PrecReal(1, 256))) < epsilon(124));
  CHECK(abs(sinhc(P("0.3")) - sinhc(P("-0.3"))) < epsilon(126));
  // Taylor branch against the direct formula at a high width
  const PrecReal x = P("0.2");
  CHECK(abs(sinhc(x) - numerics::sinh(x.with_precision(400)) / x.with_precision(400)) < epsilon(125));
  CHECK(sinhc(P("-7")) > 0);
}

TEST_CASE("log_sinhc and H") {
  for (const char* s : {"0.001", "0.2", "0.7", "3", "40"}) {
    const PrecReal x = P(s);
    const PrecReal hi = x.with_precision(512);
    CHECK(abs(log_sinhc(x) - log(numerics::sinh(hi) / hi)) < epsilon(120) * max(PrecReal(1), abs(log_sinhc(x))));
  }
  CHECK(H_fn(PrecReal(0, 128)).is_zero());
  CHECK(abs(H_fn(P("1e-10")) - P("1e-10") / 6) < P("1e-32"));  // next term -z^3/180
  CHECK(std::isfinite(log_sinhc(P("1e6")).to_double()));
}

TEST_CASE("coth(y) - 1/y") {
  for (const char* s : {"0.01", "0.2", "0.3", "2"}) {
    const PrecReal y = P(s);
    const PrecReal hi = y.with_precision(512);
    CHECK(abs(coth_minus_inv(y) - (numerics::coth(hi) - 1 / hi)) < epsilon(124));
    const PrecReal sh = numerics::sinh(hi);
    CHECK(abs(coth_minus_inv_prime(y) - (1 / (hi * hi) - 1 / (sh * sh))) < epsilon(122));
  }
  CHECK(coth_minus_inv(PrecReal(0, 128)).is_zero());
  CHECK(abs(coth_minus_inv_prime(PrecReal(0, 128)) - rational(1, 3, 128)) < epsilon(126));
}

TEST_CASE("Bose kernel x/(e^x-1)") {
  for (const char* s : {"0", "0.05", "-0.1", "0.124", "0.126", "2", "50"}) {
    const PrecReal x = P(s);
    const PrecReal hi = x.with_precision(512);
    const PrecReal direct = x.is_zero() ? PrecReal(1, 512) : hi / numerics::expm1(hi);
    CHECK(abs(bose_kernel(x) - direct) < epsilon(124));
    // central difference at 512 bits as derivative oracle
    const PrecReal h = P("1e-30").with_precision(512);
    auto k = [](const PrecReal& y) { return y.is_zero() ? PrecReal(1, 512) : y / numerics::expm1(y); };
    const PrecReal fd = (k(hi + h) - k(hi - h)) / (2 * h);
    CHECK(abs(bose_kernel_prime(x) - fd) < P("1e-35"));
  }
}

TEST_CASE("potential V") {
  const PrecReal tau = rational(1, 2, 128);
  const PrecReal t(2, 128);
  const PrecReal x(1, 128);
  CHECK(potential_V(P("3.7"), PrecReal(0, 128), t) == P("3.7"));
  CHECK(potential_V(P("3.7"), tau, PrecReal(0, 128)) == P("3.7"));
  CHECK(abs(potential_V(x, tau, t) - (x - tau / t * log(numerics::sinh(t * x) / (t * x)))) < epsilon(124));
  // coth form against the exponential form
  const PrecReal expected = 1 - tau * (numerics::coth(t) - rational(1, 2, 128));
  const PrecReal exp_form = 1 - tau * (1 - 1 / (t * x) + 2 / numerics::expm1(2 * t * x));
  CHECK(abs(potential_V_prime(x, tau, t) - expected) < epsilon(124));
  CHECK(abs(potential_V_prime(x, tau, t) - exp_form) < epsilon(124));
  CHECK(abs(potential_V_prime(P("1e6"), tau, t) - (1 - tau)) < P("1e-6"));
  CHECK(potential_V_prime(PrecReal(0, 128), tau, t) == 1);
  CHECK_THROWS_AS(potential_V(x, PrecReal(1, 128), t), DomainError);
  CHECK_THROWS_AS(potential_V(x, tau, PrecReal(-1, 128)), DomainError);
}

TEST_CASE("V' decreases from 1 to 1 - tau, so V'' <= 0 on the half-line") {
  const PrecReal tau = rational(1, 2, 128);
  for (const char* ts : {"0.1", "1", "5"}) {
    const PrecReal t = P(ts);
    PrecReal previous(2, 128);
    for (int k = 0; k <= 40; ++k) {
      const PrecReal x = rational(k, 4, 128);
      const PrecReal vp = potential_V_prime(x, tau, t);
      CHECK(vp <= 1);
      CHECK(vp >= 1 - tau);
      CHECK(vp <= previous);
      CHECK(potential_V_second(x, tau, t) <= 0);
      previous = vp;
    }
  }
}

TEST_CASE("I and J at the origin") {
  CHECK(I_fn(PrecReal(0, 128)).value.is_zero());
  const PrecReal j0 = J_fn(PrecReal(0, 128)).value;
  CHECK(abs(j0 - (1 - numerics::const_log2(128))) < epsilon(124));
  CHECK(std::abs(j0.to_double() - 0.30685281944) < 1e-11);
  CHECK(abs(J_prime(PrecReal(0, 128)) + rational(1, 8, 128)) < epsilon(124));
  CHECK(abs(I_prime(PrecReal(0, 128)) + rational(1, 4, 128)) < epsilon(124));
  CHECK(abs(I_over_z(PrecReal(0, 128)) + rational(1, 4, 128)) < epsilon(124));
  CHECK(abs(J_deficit_over_z(PrecReal(0, 128)) + rational(1, 8, 128)) < epsilon(124));
  CHECK_THROWS_AS(I_fn(P("-0.1")), DomainError);
  CHECK_THROWS_AS(J_fn(P("-0.1")), DomainError);
}

TEST_CASE("small-z expansions of I and J") {
  const PrecReal z = P("0.1");
  const FnEval i = I_fn(z);
  CHECK(i.branch == Branch::series_small);
  CHECK(std::abs(i.value.to_double() - (-0.1 / 4 + 0.01 / 32)) < 1e-3 * 0.1);
  const FnEval j = J_fn(z);
  CHECK(std::abs(j.value.to_double() - (1 - std::log(2.0) - 0.0125 + 7 * 0.01 / 384)) < 1e-4);
  // third-order remainders are O(z^3)
  const PrecReal zs = P("0.01");
  CHECK(abs(I_fn(zs).value - (-zs / 4 + zs * zs / 32)) < P("1e-6"));
  CHECK(abs(J_fn(zs).value - (1 - numerics::const_log2(128) - zs / 8 + 7 * zs * zs / 384)) < P("1e-6"));
}

TEST_CASE("large-z expansions of I and J") {
  const PrecReal z(100, 128);
  const PrecReal sqpi = sqrt(numerics::const_pi(128));
  const PrecReal z32 = numerics::zeta(rational(3, 2, 128), 128);
  const PrecReal z52 = numerics::zeta(rational(5, 2, 128), 128);
  const PrecReal z72 = numerics::zeta(rational(7, 2, 128), 128);
  const FnEval i = I_fn(z);
  CHECK(i.branch == Branch::asymptotic_large);
  const PrecReal i3 = -1 + z32 / (2 * sqpi * 10) + 3 * z52 / (8 * sqpi * 1000);
  CHECK(abs(i.value - i3) < pow(z, -3) * sqrt(z));
  const PrecReal j2 = z52 / (4 * sqpi * 1000) + 9 * z72 / (16 * sqpi * 100000);
  CHECK(abs(J_fn(z).value - j2) < 10 * pow(z, -4) * sqrt(z));
  const PrecReal z50(50, 128);
  const PrecReal jp = -rational(3, 2, 128) * z52 / (4 * sqpi) * pow(z50, -2) / sqrt(z50);
  CHECK(abs(J_prime(z50) - jp) < abs(jp) * P("0.1"));
}

TEST_CASE("I, J and derivatives against the independent quadrature oracle") {
  for (const auto& ref : kReference) {
    const PrecReal z = P(ref.z);
    CHECK(abs(I_fn(z).value - P(ref.I)) < P("1e-28"));
    CHECK(abs(J_fn(z).value - P(ref.J)) < P("1e-28"));
    CHECK(abs(I_prime(z) - P(ref.I_prime)) < P("1e-25"));
    CHECK(abs(J_prime(z) - P(ref.J_prime)) < P("1e-25"));
  }
}

TEST_CASE("J' against a central difference of J") {
  for (const char* s : {"0.05", "1", "20", "80"}) {
    const PrecReal z = P(s);
    const PrecReal h = P("1e-6");
    const PrecReal fd = (J_fn(z + h).value - J_fn(z - h).value) / (2 * h);
    // truncation error h^2 |J'''| / 6 with |J'''| < 1
    CHECK(abs(J_prime(z) - fd) < P("1e-12"));
  }
}

TEST_CASE("monotonicity and bounds on a geometric grid") {
  PrecReal prev_i(1, 128);
  PrecReal prev_j(1, 128);
  const PrecReal j_max = 1 - numerics::const_log2(128);
  for (int k = 0; k <= 14; ++k) {
    const PrecReal z = numerics::ldexp(PrecReal(1, 128), k - 4);
    const PrecReal i = I_fn(z).value;
    const PrecReal j = J_fn(z).value;
    CHECK(i > -1);
    CHECK(i < 0);
    CHECK(j > 0);
    CHECK(j < j_max);
    CHECK(i < prev_i);
    CHECK(j < prev_j);
    prev_i = i;
    prev_j = j;
  }
}

TEST_CASE("adjacent branches agree at the thresholds") {
  const BranchOptions options;
  for (const PrecReal& z : {options.z_lo, options.z_hi}) {
    const Branch other = z < 1 ? Branch::series_small : Branch::asymptotic_large;
    const FnEval qi = I_branch(z, Branch::quadrature);
    const FnEval oi = I_branch(z, other);
    CHECK(abs(qi.value - oi.value) <= qi.est_error + oi.est_error + epsilon(120));
    CHECK(abs(qi.value - oi.value) < P("1e-10"));
    const FnEval qj = J_branch(z, Branch::quadrature);
    const FnEval oj = J_branch(z, other);
    CHECK(abs(qj.value - oj.value) <= qj.est_error + oj.est_error + epsilon(120));
    const FnEval qip = I_prime_branch(z, Branch::quadrature);
    const FnEval oip = I_prime_branch(z, other);
    CHECK(abs(qip.value - oip.value) <= qip.est_error + oip.est_error + epsilon(120));
    const FnEval qjp = J_prime_branch(z, Branch::quadrature);
    const FnEval ojp = J_prime_branch(z, other);
    CHECK(abs(qjp.value - ojp.value) <= qjp.est_error + ojp.est_error + epsilon(120));
  }
}

TEST_CASE("three-term large-z remainder of I scales like z^-5/2") {
  const PrecReal sqpi = sqrt(numerics::const_pi(128));
  const PrecReal z32 = numerics::zeta(rational(3, 2, 128), 128);
  const PrecReal z52 = numerics::zeta(rational(5, 2, 128), 128);
  auto remainder = [&](int zi) {
    const PrecReal z(zi, 128);
    const PrecReal three = -1 + z32 / (2 * sqpi * sqrt(z)) + 3 * z52 / (8 * sqpi * z * sqrt(z));
    return abs(I_branch(z, Branch::quadrature).value - three);
  };
  const PrecReal k = remainder(30) * pow(PrecReal(30, 128), 2) * sqrt(PrecReal(30, 128));
  for (int z : {60, 120}) {
    const PrecReal zz(z, 128);
    CHECK(remainder(z) <= k * pow(zz, -2) / sqrt(zz));
  }
}

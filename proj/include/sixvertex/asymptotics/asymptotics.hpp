#pragma once

#include <string>
#include <vector>

#include "sixvertex/exact/rational.hpp"
#include "sixvertex/numerics/prec_real.hpp"

namespace sixvertex::asymptotics {

using numerics::Bits;
using numerics::PrecReal;

// B(n) = -pi/n + sum_{m>=1} 1/((m+n) sqrt(mn)).
struct BracketValue {
  PrecReal value;
  PrecReal error_bound;
  long inner_cutoff = 0;  // direct terms before the Euler-Maclaurin tail
};
BracketValue bracket(long n, const PrecReal& tol);

// c = (1/4) ln 2 + (1/2) ln pi + S/(4 pi), S = sum_{n>=1} B(n).
struct ConstantC {
  PrecReal c;
  PrecReal series_total;  // S
  PrecReal error_bound;   // certified bound on |S - series_total|
  long outer_cutoff = 0;  // brackets summed directly for n < outer_cutoff
  int outer_terms = 0;    // terms of the large-n expansion of B used for the rest
  long max_inner_cutoff = 0;
};

// Throws DomainError unless 2^-(bits-24) <= tol <= 1e-3, NonConvergence if
// the bound cannot reach tol.
ConstantC constant_c(const PrecReal& tol, Bits bits = numerics::kDefaultBits);

// c at the given width (tolerance 2^-(bits-24)), computed once per width.
const PrecReal& constant_c_cached(Bits bits = numerics::kDefaultBits);

struct AsymptoticModel {
  PrecReal alpha;
  PrecReal F;        // (alpha+1)/2
  PrecReal G;        // exp[-zeta(3/2) sqrt((alpha-1)/(2 pi))]
  PrecReal C;        // e^c (alpha-1)^{1/4}
  PrecReal c_const;
  PrecReal d_const;  // 0
};

// Throws DomainError unless alpha > 1.
AsymptoticModel asymptotic_model(const PrecReal& alpha);

// ln C + N^2 ln F + sqrt(N) ln G + (1/4) ln N.
PrecReal predict_lnZ(int N, const PrecReal& alpha);

// ln Z_N from the exact partition function.
PrecReal ln_Z_exact(int N, const exact::Rational& alpha, Bits bits = numerics::kDefaultBits);

struct DoubleScalingModel {
  PrecReal t;
  PrecReal Phi;
  PrecReal Psi;
};

// Phi(t) = -t + (2/t) int_0^t [J(8x) - (1-ln2) - I(8x) + ln S(4x)/2] dx, Phi(0) = 0.
PrecReal phi(const PrecReal& t);
// Psi(t) = 3t - 3t^2/2 - 2t I - I^2/2 + I - ln S(4t)/2 - (J - (1-ln2))   (I, J at 8t)
//   + int_0^t [-I^2(8x)/(4x) + I(8x)/x + (4x + 2I(8x)) (4J'(8x) + k(4x))] dx,
// with k(y) = S'(y)/S(y) = coth y - 1/y. This is the O(1) term of
// sum_{k<N} [2 ln(b/4) + k(l+2)] at tau = t/N, from b and l expanded to second
// order in tau. Psi(t) = t^2/2 + t^4/18 + O(t^6); Phi(t) = t^2/3 - 7t^4/90 + O(t^6).
PrecReal psi(const PrecReal& t);
DoubleScalingModel double_scaling(const PrecReal& t);

// ln N! + N^2 ln((alpha^2-1)/(2 alpha)) + N ln(2/alpha) + N Phi(t) + Psi(t), t = N/alpha.
PrecReal predict_lnZ_ds(int N, const PrecReal& alpha);

// ln N! from the exact factorial.
PrecReal ln_factorial(int N, Bits bits);

struct IdentityResidual {
  std::string name;
  PrecReal lhs;
  PrecReal rhs;
  PrecReal residual;  // lhs - rhs
  PrecReal error_bound;
};

struct C0Report {
  PrecReal c0;
  PrecReal c;
  PrecReal A1;  // int_0^inf I(x)/(e^x-1) dx
  PrecReal A2;  // int_0^inf J'(x) I(x) dx
  PrecReal A3;  // -(1/4) int_0^1 I(x)^2 dx/x
  PrecReal A4;  // (1/4) int_1^inf (1 - I(x)^2) dx/x
  std::vector<IdentityResidual> identities;  // c0 = c, evsum1, evsum2
};

// Throws DomainError unless 2^-(bits-24) <= tol <= 1e-3.
C0Report c0_identity_check(const PrecReal& tol, Bits bits = numerics::kDefaultBits);

// c1 (two raw forms) = -ln 2, c2 = -pi^2/48, c4 = pi^2/48, c6 = 0, and the raw
// integral forms of c3, c5, c7 against their simplified forms.
std::vector<IdentityResidual> c_constants_check(const PrecReal& tol, Bits bits = numerics::kDefaultBits);

}  // namespace sixvertex::asymptotics

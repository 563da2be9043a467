#pragma once

#include <array>
#include <map>
#include <vector>

#include "sixvertex/exact/rational.hpp"
#include "sixvertex/numerics/prec_real.hpp"

namespace sixvertex::exact {

// Soft limit on N for the Hankel pipelines; runtime, not correctness,
// degrades past it. Callers may pass a larger limit explicitly.
inline constexpr int kDefaultMaxN = 64;

struct HankelResult {
  int N = 0;
  Rational tau_N;
  std::vector<Rational> h;  // h_0 .. h_{N-1}
  Rational Z_N;
};

// m_k = k! [(alpha-1)^-(k+1) - (alpha+1)^-(k+1)], the k-th moment of
// e^{-alpha x}(e^x - e^{-x}) on (0, inf). phi^(k)(alpha) = (-1)^k m_k.
Rational moment(int k, const Rational& alpha);

// det(m_{i+j})_{i,j<N}, fraction-free.
Rational hankel_tau(int N, const Rational& alpha, int max_n = kDefaultMaxN);

// h_k = D_{k+1} / D_k from the leading minors of one elimination pass.
std::vector<Rational> norms_h(int N, const Rational& alpha, int max_n = kDefaultMaxN);

// tau_N, the norms and Z_N from a single elimination.
HankelResult hankel(int N, const Rational& alpha, int max_n = kDefaultMaxN);

// Z_N = ((alpha^2-1)/2)^{N^2} prod_k h_k / (k!)^2
Rational ik_partition(int N, const Rational& alpha, int max_n = kDefaultMaxN);

// Exponent histogram of all domain-wall ice configurations on an N x N grid:
// key (n_a, n_b, n_c) -> number of configurations. N <= 5, else SizeLimit.
std::map<std::array<int, 3>, long> enumerate_configurations(int N);

// Sum over configurations of a^{n_a} b^{n_b} c^{n_c}.
Rational brute_force_Z(int N, const Rational& a, const Rational& b, const Rational& c);

// tau_N tau_N'' - (tau_N')^2 - tau_{N+1} tau_{N-1}, exactly (tau_0 = 1).
Rational toda_check(int N, const Rational& alpha, int max_n = kDefaultMaxN);

// Natural log of x > 0 via bit length and a normalized leading mantissa.
numerics::PrecReal ln_rational(const Rational& x, numerics::Bits bits);
numerics::PrecReal ln_integer(const BigInt& x, numerics::Bits bits);

}  // namespace sixvertex::exact

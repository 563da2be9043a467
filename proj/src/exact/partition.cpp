#include "sixvertex/exact/partition.hpp"

#include <functional>
#include <string>

#include "sixvertex/errors.hpp"
#include "sixvertex/exact/determinant.hpp"

namespace sixvertex::exact {

namespace {

void require_alpha(const Rational& alpha) {
  if (!(alpha > 1)) throw DomainError("alpha must exceed 1, got " + to_string(alpha));
}

void require_size(int N, int max_n) {
  if (N < 1) throw DomainError("N must be positive");
  if (N > max_n) throw SizeLimit("N = " + std::to_string(N) + " exceeds the limit " + std::to_string(max_n));
}

BigInt factorial(int k) {
  BigInt f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(k));
  return f;
}

Rational power(const Rational& x, long e) {
  Rational r;
  const bool invert = e < 0;
  const unsigned long n = static_cast<unsigned long>(invert ? -e : e);
  mpz_pow_ui(r.get_num_mpz_t(), x.get_num_mpz_t(), n);
  mpz_pow_ui(r.get_den_mpz_t(), x.get_den_mpz_t(), n);
  r.canonicalize();
  if (invert) {
    if (r == 0) throw DomainError("zero to a negative power");
    r = 1 / r;
  }
  return r;
}

// phi^(k)(alpha) = (-1)^k m_k
Rational phi_derivative(int k, const Rational& alpha) {
  Rational m = moment(k, alpha);
  return (k % 2 == 0) ? m : Rational(-m);
}

HankelResult hankel_impl(int N, const Rational& alpha, int max_n) {
  require_alpha(alpha);
  require_size(N, max_n);
  std::vector<Rational> m(2 * N - 1);
  BigInt lcm = 1;
  for (int k = 0; k < 2 * N - 1; ++k) {
    m[k] = moment(k, alpha);
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m[k].get_den_mpz_t());
  }
  // A = L * H is an integer Hankel matrix with D_k(H) = D_k(A) / L^k.
  std::vector<BigInt> scaled(2 * N - 1);
  for (int k = 0; k < 2 * N - 1; ++k) scaled[k] = m[k].get_num() * (lcm / m[k].get_den());
  Matrix<BigInt> a(N, std::vector<BigInt>(N));
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < N; ++j) a[i][j] = scaled[i + j];
  }
  const std::vector<BigInt> minors = leading_minors(std::move(a));

  HankelResult r;
  r.N = N;
  r.h.reserve(N);
  BigInt prev = 1;
  for (int k = 0; k < N; ++k) {
    Rational h(minors[k], prev * lcm);
    h.canonicalize();
    if (!(h > 0)) throw ConsistencyFailure("non-positive norm h_" + std::to_string(k));
    r.h.push_back(h);
    prev = minors[k];
  }
  BigInt lcm_pow;
  mpz_pow_ui(lcm_pow.get_mpz_t(), lcm.get_mpz_t(), static_cast<unsigned long>(N));
  r.tau_N = Rational(minors[N - 1], lcm_pow);
  r.tau_N.canonicalize();

  Rational z = power((alpha * alpha - 1) / 2, static_cast<long>(N) * N) * r.tau_N;
  BigInt fact_prod = 1;
  for (int k = 1; k < N; ++k) fact_prod *= factorial(k);
  z /= fact_prod * fact_prod;
  z.canonicalize();
  r.Z_N = z;
  return r;
}

// Hankel matrix of phi-derivatives; row i optionally shifted by `shift[i]`
// extra derivatives (the row-replacement terms of tau' and tau'').
Matrix<Rational> shifted_hankel(int N, const std::vector<Rational>& phi, const std::vector<int>& shift) {
  Matrix<Rational> a(N, std::vector<Rational>(N));
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < N; ++j) a[i][j] = phi[i + j + shift[i]];
  }
  return a;
}

}  // namespace

Rational moment(int k, const Rational& alpha) {
  require_alpha(alpha);
  if (k < 0) throw DomainError("moment index must be non-negative");
  Rational r = factorial(k) * (power(alpha - 1, -(k + 1)) - power(alpha + 1, -(k + 1)));
  r.canonicalize();
  return r;
}

Rational hankel_tau(int N, const Rational& alpha, int max_n) { return hankel_impl(N, alpha, max_n).tau_N; }

std::vector<Rational> norms_h(int N, const Rational& alpha, int max_n) { return hankel_impl(N, alpha, max_n).h; }

HankelResult hankel(int N, const Rational& alpha, int max_n) { return hankel_impl(N, alpha, max_n); }

Rational ik_partition(int N, const Rational& alpha, int max_n) { return hankel_impl(N, alpha, max_n).Z_N; }

std::map<std::array<int, 3>, long> enumerate_configurations(int N) {
  if (N < 1) throw DomainError("N must be positive");
  if (N > 5) throw SizeLimit("brute-force enumeration is limited to N <= 5");

  // Arrow values: horizontal +1 points right, vertical +1 points up.
  // Domain walls: horizontal boundary arrows point out, vertical point in.
  // Rows are filled bottom to top, vertices left to right; the ice rule
  // l + d = r + u determines u once r is chosen.
  std::map<std::array<int, 3>, long> histogram;
  // vertical[r][c] is the arrow on the edge below vertex row r (r = N: top).
  std::vector<std::vector<int>> vertical(N + 1, std::vector<int>(N, 0));
  vertical[0].assign(N, +1);
  std::array<int, 3> counts{0, 0, 0};

  std::function<void(int, int, int)> visit = [&](int row, int col, int left) {
    if (col == N) {
      if (left != +1) return;  // right boundary
      if (row == N - 1) {
        for (int c = 0; c < N; ++c) {
          if (vertical[N][c] != -1) return;  // top boundary
        }
        ++histogram[counts];
        return;
      }
      visit(row + 1, 0, -1);
      return;
    }
    const int d = vertical[row][col];
    for (int right : {-1, +1}) {
      const int up = left + d - right;
      if (up != -1 && up != +1) continue;
      const int kind = (left == right) ? (left == d ? 0 : 1) : 2;
      vertical[row + 1][col] = up;
      ++counts[kind];
      visit(row, col + 1, right);
      --counts[kind];
    }
  };
  visit(0, 0, -1);
  return histogram;
}

Rational brute_force_Z(int N, const Rational& a, const Rational& b, const Rational& c) {
  Rational z = 0;
  for (const auto& [exponents, count] : enumerate_configurations(N)) {
    z += Rational(count) * power(a, exponents[0]) * power(b, exponents[1]) * power(c, exponents[2]);
  }
  z.canonicalize();
  return z;
}

Rational toda_check(int N, const Rational& alpha, int max_n) {
  require_alpha(alpha);
  require_size(N, max_n);
  std::vector<Rational> phi(2 * N + 1);
  for (int k = 0; k <= 2 * N; ++k) phi[k] = phi_derivative(k, alpha);

  std::vector<int> shift(N, 0);
  const Rational tau = determinant(shifted_hankel(N, phi, shift));
  Rational d1 = 0;
  Rational d2 = 0;
  for (int i = 0; i < N; ++i) {
    shift.assign(N, 0);
    shift[i] = 1;
    d1 += determinant(shifted_hankel(N, phi, shift));
    shift[i] = 2;
    d2 += determinant(shifted_hankel(N, phi, shift));
    for (int j = 0; j < N; ++j) {
      if (j == i) continue;
      shift.assign(N, 0);
      shift[i] = 1;
      shift[j] = 1;
      d2 += determinant(shifted_hankel(N, phi, shift));
    }
  }
  const Rational tau_next = hankel_tau(N + 1, alpha, max_n + 1);
  const Rational tau_prev = N > 1 ? hankel_tau(N - 1, alpha, max_n) : Rational(1);
  Rational residual = tau * d2 - d1 * d1 - tau_next * tau_prev;
  residual.canonicalize();
  return residual;
}

numerics::PrecReal ln_integer(const BigInt& x, numerics::Bits bits) {
  if (x <= 0) throw DomainError("logarithm of a non-positive number");
  using numerics::PrecReal;
  const numerics::Bits work = bits + 32;
  const long length = static_cast<long>(mpz_sizeinbase(x.get_mpz_t(), 2));
  const long shift = std::max<long>(0, length - work);
  BigInt mantissa;
  mpz_fdiv_q_2exp(mantissa.get_mpz_t(), x.get_mpz_t(), static_cast<mp_bitcnt_t>(shift));
  // Truncation changes the mantissa by a relative 2^-(work-1) at most.
  PrecReal r = log(PrecReal(mantissa, work)) + numerics::const_log2(work) * shift;
  return r.with_precision(bits);
}

numerics::PrecReal ln_rational(const Rational& x, numerics::Bits bits) {
  if (!(x > 0)) throw DomainError("logarithm of a non-positive number");
  return (ln_integer(x.get_num(), bits + 8) - ln_integer(x.get_den(), bits + 8)).with_precision(bits);
}

}  // namespace sixvertex::exact

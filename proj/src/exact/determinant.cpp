#include "sixvertex/exact/determinant.hpp"

#include <utility>

#include "sixvertex/errors.hpp"

namespace sixvertex::exact {

namespace {

template <class T>
void require_square(const Matrix<T>& a) {
  for (const auto& row : a) {
    if (row.size() != a.size()) throw DomainError("determinant of a non-square matrix");
  }
}

}  // namespace

BigInt determinant(Matrix<BigInt> a) {
  require_square(a);
  const std::size_t n = a.size();
  if (n == 0) return 1;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        // exact by Sylvester's identity
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]);
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

Rational determinant(const Matrix<Rational>& a) {
  require_square(a);
  Matrix<BigInt> scaled(a.size());
  BigInt scale = 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    BigInt l = 1;
    for (const auto& x : a[i]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    scaled[i].reserve(a.size());
    for (const auto& x : a[i]) scaled[i].push_back(x.get_num() * (l / x.get_den()));
    scale *= l;
  }
  Rational r(determinant(std::move(scaled)), scale);
  r.canonicalize();
  return r;
}

std::vector<BigInt> leading_minors(Matrix<BigInt> a) {
  require_square(a);
  const std::size_t n = a.size();
  std::vector<BigInt> minors;
  minors.reserve(n);
  BigInt prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    // After k steps the (k,k) entry is the (k+1)-th leading minor.
    if (a[k][k] == 0) throw ConsistencyFailure("vanishing leading minor D_" + std::to_string(k + 1));
    minors.push_back(a[k][k]);
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]);
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a[k][k];
  }
  return minors;
}

Rational cofactor_determinant(const Matrix<Rational>& a) {
  require_square(a);
  const std::size_t n = a.size();
  if (n == 0) return 1;
  if (n == 1) return a[0][0];
  Rational sum = 0;
  for (std::size_t col = 0; col < n; ++col) {
    if (a[0][col] == 0) continue;
    Matrix<Rational> minor(n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (j != col) minor[i - 1].push_back(a[i][j]);
      }
    }
    const Rational term = a[0][col] * cofactor_determinant(minor);
    sum += (col % 2 == 0) ? term : Rational(-term);
  }
  sum.canonicalize();
  return sum;
}

}  // namespace sixvertex::exact

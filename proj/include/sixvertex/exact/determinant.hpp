#pragma once

#include <vector>

#include "sixvertex/exact/rational.hpp"

namespace sixvertex::exact {

template <class T>
using Matrix = std::vector<std::vector<T>>;

// Bareiss elimination with row pivoting on a square integer matrix.
BigInt determinant(Matrix<BigInt> a);

// Each row is scaled by the lcm of its denominators, then Bareiss.
Rational determinant(const Matrix<Rational>& a);

// Leading principal minors D_1..D_n of an integer matrix, read off the
// pivots of a single Bareiss pass without pivoting. Throws
// ConsistencyFailure if a pivot vanishes (the caller asserted they cannot).
std::vector<BigInt> leading_minors(Matrix<BigInt> a);

// Laplace expansion along the first row. Exponential cost; test oracle only.
Rational cofactor_determinant(const Matrix<Rational>& a);

}  // namespace sixvertex::exact

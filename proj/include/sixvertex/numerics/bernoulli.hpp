#pragma once

#include <gmpxx.h>

namespace sixvertex::numerics {

// Exact Bernoulli number B_n with B_1 = -1/2. Cached; thread-safe.
mpq_class bernoulli(int n);

// B_{2j} / (2j)!, exact.
mpq_class bernoulli_over_factorial(int two_j);

}  // namespace sixvertex::numerics

#include "sixvertex/numerics/bernoulli.hpp"

#include <mutex>
#include <vector>

#include "sixvertex/errors.hpp"

namespace sixvertex::numerics {

mpq_class bernoulli(int n) {
  if (n < 0) throw DomainError("bernoulli index must be non-negative");
  static std::mutex mutex;
  static std::vector<mpq_class> cache{mpq_class(1)};
  std::lock_guard lock(mutex);
  while (static_cast<int>(cache.size()) <= n) {
    // sum_{k=0}^{m} C(m+1, k) B_k = 0
    const int m = static_cast<int>(cache.size());
    mpq_class sum = 0;
    mpz_class binom = 1;  // C(m+1, 0)
    for (int k = 0; k < m; ++k) {
      sum += binom * cache[k];
      binom = binom * (m + 1 - k) / (k + 1);
    }
    mpq_class b = -sum / (m + 1);
    b.canonicalize();
    cache.push_back(b);
  }
  return cache[n];
}

mpq_class bernoulli_over_factorial(int two_j) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(two_j));
  mpq_class r = bernoulli(two_j) / f;
  r.canonicalize();
  return r;
}

}  // namespace sixvertex::numerics

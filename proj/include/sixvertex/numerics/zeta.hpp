#pragma once

#include "sixvertex/numerics/prec_real.hpp"

namespace sixvertex::numerics {

struct ZetaResult {
  PrecReal value;
  PrecReal remainder_bound;  // first omitted Euler-Maclaurin term
};

// Riemann zeta for real s > 1 at the given width. Throws DomainError otherwise.
PrecReal zeta(const PrecReal& s, Bits bits);

// Direct sum over n < cutoff plus the Euler-Maclaurin tail with `terms`
// Bernoulli corrections. Valid for any real s != 1 with s > 1 - 2*terms.
ZetaResult zeta_em(const PrecReal& s, long cutoff, int terms, Bits bits);

// Analytic continuation to real s != 1: Euler-Maclaurin for s >= 0, the
// functional equation below that.
PrecReal zeta_continued(const PrecReal& s, Bits bits);

}  // namespace sixvertex::numerics

#include "sixvertex/numerics/zeta.hpp"

#include <algorithm>

#include "sixvertex/errors.hpp"
#include "sixvertex/numerics/bernoulli.hpp"

namespace sixvertex::numerics {

ZetaResult zeta_em(const PrecReal& s_in, long cutoff, int terms, Bits bits) {
  const Bits work = bits + 16;
  const PrecReal s = s_in.with_precision(std::max(work, s_in.precision()));
  if (s == 1) throw DomainError("zeta has a pole at s = 1");
  if (cutoff < 1 || terms < 1) throw DomainError("zeta_em needs cutoff >= 1 and terms >= 1");

  PrecReal sum = PrecReal::zero(work);
  for (long n = 1; n < cutoff; ++n) sum += pow(PrecReal(n, work), -s);

  const PrecReal m(cutoff, work);
  const PrecReal m_pow = pow(m, -s);  // M^-s
  sum += m * m_pow / (s - 1) + m_pow / 2;

  // T_j = B_2j/(2j)! * s(s+1)...(s+2j-2) * M^(-s-2j+1)
  PrecReal rising = s;  // s (s+1) ... (s+2j-2)
  PrecReal m_power = m_pow / m;
  const PrecReal m_sq = m * m;
  PrecReal next;
  for (int j = 1; j <= terms + 1; ++j) {
    const PrecReal term = PrecReal(bernoulli_over_factorial(2 * j), work) * rising * m_power;
    if (j <= terms) {
      sum += term;
    } else {
      next = abs(term);
    }
    rising *= (s + (2 * j - 1)) * (s + 2 * j);
    m_power /= m_sq;
  }
  return ZetaResult{sum.with_precision(bits), next.with_precision(bits)};
}

PrecReal zeta(const PrecReal& s, Bits bits) {
  if (!(s > 1)) throw DomainError("zeta requires s > 1, got " + s.str(10));
  // Balanced cutoff: with M ~ bits/3 the Bernoulli terms fall off like
  // (s+2j)^2/(2 pi M)^2 long enough to reach 2^-bits.
  const long cutoff = std::max<long>(16, bits / 3);
  const PrecReal target = epsilon(bits + 4);
  int terms = 4;
  while (true) {
    ZetaResult r = zeta_em(s, cutoff, terms, bits);
    if (r.remainder_bound <= target * abs(r.value) || terms >= 200) return r.value;
    terms *= 2;
  }
}

PrecReal zeta_continued(const PrecReal& s, Bits bits) {
  if (s == 1) throw DomainError("zeta has a pole at s = 1");
  if (s > 1) return zeta(s, bits);
  if (s >= 0) {
    const long cutoff = std::max<long>(16, bits / 3);
    return zeta_em(s, cutoff, std::max<int>(8, static_cast<int>(bits / 4)), bits).value;
  }
  // zeta(s) = 2^s pi^(s-1) sin(pi s/2) Gamma(1-s) zeta(1-s)
  const Bits work = bits + 32;
  const PrecReal sw = s.with_precision(work);
  const PrecReal pi = const_pi(work);
  const PrecReal one_minus = 1 - sw;
  const PrecReal r = pow(PrecReal(2, work), sw) * pow(pi, sw - 1) * sin(pi * sw / 2) * gamma(one_minus) *
                     zeta(one_minus, work);
  return r.with_precision(bits);
}

}  // namespace sixvertex::numerics

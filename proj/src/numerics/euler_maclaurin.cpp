#include "sixvertex/numerics/euler_maclaurin.hpp"

#include <string>

#include "sixvertex/errors.hpp"
#include "sixvertex/numerics/bernoulli.hpp"

namespace sixvertex::numerics {

EmTailResult em_tail_from(const DerivativeFn& f, long cutoff, int max_derivative_order,
                          const PrecReal& tail_integral) {
  if (max_derivative_order < 1 || max_derivative_order % 2 == 0) {
    throw DomainError("max_derivative_order must be odd and positive");
  }
  const Bits bits = tail_integral.precision();
  const PrecReal m(cutoff, bits);
  PrecReal value = tail_integral + f(0, m) / 2;
  PrecReal last = PrecReal::zero(bits);
  for (int order = 1; order <= max_derivative_order; order += 2) {
    const PrecReal coeff(bernoulli_over_factorial(order + 1), bits);
    last = coeff * f(order, m);
    value -= last;
  }
  return EmTailResult{value, abs(last), cutoff};
}

EmTailResult em_tail_sum(const DerivativeFn& f, const EmTailOptions& options, const QuadratureSpec& spec) {
  spec.validate();
  if (options.start < 1) throw DomainError("em_tail_sum start must be >= 1");
  const Bits bits = spec.precision();

  auto tail_integral = [&](long cutoff) {
    const PrecReal m(cutoff, bits);
    if (options.tail_integral) return (*options.tail_integral)(m);
    RealFn g = [&f](const PrecReal& x) { return f(0, x); };
    return quad_power_tail(g, m, spec).value;
  };

  PrecReal direct = PrecReal::zero(bits);
  long summed_to = options.start;  // direct holds sum over [start, summed_to)
  long cutoff = std::max<long>(options.start, 8);
  while (true) {
    for (; summed_to < cutoff; ++summed_to) direct += f(0, PrecReal(summed_to, bits));
    EmTailResult tail = em_tail_from(f, cutoff, options.max_derivative_order, tail_integral(cutoff));
    if (tail.remainder_bound <= spec.abs_tol) {
      return EmTailResult{direct + tail.value, tail.remainder_bound, cutoff};
    }
    if (cutoff >= options.max_cutoff) {
      throw NonConvergence("Euler-Maclaurin remainder " + tail.remainder_bound.str(6) +
                           " above tolerance at cutoff " + std::to_string(cutoff));
    }
    cutoff = std::min(cutoff * 2, options.max_cutoff);
  }
}

}  // namespace sixvertex::numerics

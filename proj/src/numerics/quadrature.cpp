#include "sixvertex/numerics/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <queue>
#include <utility>

#include "sixvertex/errors.hpp"

namespace sixvertex::numerics {

int panel_nodes(PanelRule rule) {
  switch (rule) {
    case PanelRule::gauss_legendre_10: return 10;
    case PanelRule::gauss_legendre_20: return 20;
    case PanelRule::gauss_legendre_40: return 40;
  }
  return 20;
}

std::string to_string(PanelRule rule) {
  return "gauss_legendre_" + std::to_string(panel_nodes(rule));
}

QuadratureSpec QuadratureSpec::defaults(Bits bits) {
  return with_tolerance(PrecReal::parse("1e-20", bits));
}

QuadratureSpec QuadratureSpec::with_tolerance(const PrecReal& tol) {
  QuadratureSpec s;
  s.abs_tol = tol;
  s.rel_tol = tol;
  return s;
}

void QuadratureSpec::validate() const {
  if (!(abs_tol > 0)) throw DomainError("quadrature abs_tol must be positive");
  if (!(rel_tol > 0)) throw DomainError("quadrature rel_tol must be positive");
  if (max_subdivisions < 1) throw DomainError("quadrature max_subdivisions must be >= 1");
}

namespace {

GaussLegendreRule compute_gauss_legendre(int n, Bits bits) {
  // Newton iteration on P_n from the classical cosine initial guesses, done
  // with guard bits so the cached nodes are correct to the requested width.
  const Bits work = bits + 32;
  const PrecReal pi = const_pi(work);
  GaussLegendreRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const PrecReal tol = ldexp(PrecReal(1, work), -static_cast<long>(bits) - 8);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    PrecReal x = cos(pi * (4 * i + 3) / (4 * n + 2));
    PrecReal dp(0, work);
    for (int iter = 0; iter < 100; ++iter) {
      PrecReal p0(1, work);
      PrecReal p1 = x;
      for (int k = 2; k <= n; ++k) {
        PrecReal p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = std::move(p1);
        p1 = std::move(p2);
      }
      dp = n * (x * p1 - p0) / (x * x - 1);
      const PrecReal step = p1 / dp;
      x -= step;
      if (abs(step) < tol) {
        // one more derivative evaluation at the converged node
        PrecReal q0(1, work);
        PrecReal q1 = x;
        for (int k = 2; k <= n; ++k) {
          PrecReal q2 = ((2 * k - 1) * x * q1 - (k - 1) * q0) / k;
          q0 = std::move(q1);
          q1 = std::move(q2);
        }
        dp = n * (x * q1 - q0) / (x * x - 1);
        break;
      }
    }
    const PrecReal w = 2 / ((1 - x * x) * dp * dp);
    rule.nodes[i] = (-x).with_precision(bits);
    rule.nodes[n - 1 - i] = x.with_precision(bits);
    rule.weights[i] = w.with_precision(bits);
    rule.weights[n - 1 - i] = w.with_precision(bits);
  }
  return rule;
}

struct Panel {
  PrecReal a;
  PrecReal b;
  PrecReal whole;
  PrecReal left;
  PrecReal right;
  PrecReal estimate;
  PrecReal error;
  long order = 0;
};

struct PanelWorse {
  bool operator()(const std::shared_ptr<Panel>& x, const std::shared_ptr<Panel>& y) const {
    if (x->error != y->error) return x->error < y->error;
    return x->order > y->order;
  }
};

class AdaptiveIntegrator {
 public:
  AdaptiveIntegrator(const RealFn& f, const QuadratureSpec& spec, Bits bits)
      : f_(f), spec_(spec), bits_(bits), rule_(gauss_legendre(panel_nodes(spec.panel_rule), bits)) {}

  PrecReal apply_rule(const PrecReal& a, const PrecReal& b) {
    const PrecReal half = (b - a) / 2;
    const PrecReal mid = (a + b) / 2;
    PrecReal sum = PrecReal::zero(bits_);
    for (std::size_t i = 0; i < rule_.nodes.size(); ++i) {
      sum += rule_.weights[i] * f_(mid + half * rule_.nodes[i]);
    }
    evaluations_ += static_cast<int>(rule_.nodes.size());
    return sum * half;
  }

  std::shared_ptr<Panel> make_panel(PrecReal a, PrecReal b, PrecReal whole) {
    auto p = std::make_shared<Panel>();
    const PrecReal mid = (a + b) / 2;
    p->left = apply_rule(a, mid);
    p->right = apply_rule(mid, b);
    p->estimate = p->left + p->right;
    p->error = abs(p->estimate - whole);
    p->whole = std::move(whole);
    p->a = std::move(a);
    p->b = std::move(b);
    p->order = order_++;
    return p;
  }

  QuadResult run(const std::vector<PrecReal>& breaks) {
    std::priority_queue<std::shared_ptr<Panel>, std::vector<std::shared_ptr<Panel>>, PanelWorse> queue;
    std::vector<std::shared_ptr<Panel>> done;
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
      if (breaks[i] == breaks[i + 1]) continue;
      PrecReal whole = apply_rule(breaks[i], breaks[i + 1]);
      queue.push(make_panel(breaks[i], breaks[i + 1], whole));
    }
    int subdivisions = 0;
    const PrecReal tiny = ldexp(PrecReal(1, bits_), -static_cast<long>(bits_) + 4);
    PrecReal total = PrecReal::zero(bits_);
    PrecReal err = PrecReal::zero(bits_);
    auto resum = [&] {
      total = PrecReal::zero(bits_);
      err = PrecReal::zero(bits_);
      for (const auto& p : done) {
        total += p->estimate;
        err += p->error;
      }
      auto copy = queue;
      while (!copy.empty()) {
        total += copy.top()->estimate;
        err += copy.top()->error;
        copy.pop();
      }
    };
    resum();
    while (true) {
      if (err <= max(spec_.abs_tol, spec_.rel_tol * abs(total)) || queue.empty()) {
        // running sums drift; confirm against a fresh sum before stopping
        resum();
        if (err <= max(spec_.abs_tol, spec_.rel_tol * abs(total)) || queue.empty()) {
          return finish(queue, done, subdivisions, err);
        }
      }
      if (subdivisions >= spec_.max_subdivisions) {
        throw NonConvergence("adaptive quadrature exhausted " + std::to_string(spec_.max_subdivisions) +
                             " subdivisions (estimate " + total.str(20) + ", error " + err.str(6) + ")");
      }
      auto worst = queue.top();
      queue.pop();
      // Panels at the resolution limit of the working precision cannot improve.
      if (abs(worst->b - worst->a) <= tiny * max(abs(worst->a), abs(worst->b))) {
        done.push_back(worst);
        continue;
      }
      const PrecReal mid = (worst->a + worst->b) / 2;
      auto left = make_panel(worst->a, mid, worst->left);
      auto right = make_panel(mid, worst->b, worst->right);
      total += left->estimate + right->estimate - worst->estimate;
      err += left->error + right->error - worst->error;
      queue.push(left);
      queue.push(right);
      ++subdivisions;
    }
  }

 private:
  template <class Queue>
  QuadResult finish(Queue& queue, std::vector<std::shared_ptr<Panel>>& done, int subdivisions,
                    const PrecReal& err) {
    while (!queue.empty()) {
      done.push_back(queue.top());
      queue.pop();
    }
    // Deterministic summation order: left to right.
    std::sort(done.begin(), done.end(), [](const auto& x, const auto& y) { return x->a < y->a; });
    PrecReal total = PrecReal::zero(bits_);
    for (const auto& p : done) total += p->estimate;
    return QuadResult{total, err, subdivisions, evaluations_};
  }

  const RealFn& f_;
  const QuadratureSpec& spec_;
  Bits bits_;
  const GaussLegendreRule& rule_;
  int evaluations_ = 0;
  long order_ = 0;
};

}  // namespace

const GaussLegendreRule& gauss_legendre(int n, Bits bits) {
  static std::mutex mutex;
  static std::map<std::pair<int, Bits>, std::unique_ptr<GaussLegendreRule>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{n, bits}];
  if (!slot) slot = std::make_unique<GaussLegendreRule>(compute_gauss_legendre(n, bits));
  return *slot;
}

QuadResult integrate(const RealFn& f, const std::vector<PrecReal>& breakpoints, const QuadratureSpec& spec) {
  spec.validate();
  if (breakpoints.size() < 2) throw DomainError("integrate needs at least two breakpoints");
  Bits bits = spec.precision();
  for (const auto& x : breakpoints) bits = std::max(bits, x.precision());
  AdaptiveIntegrator integrator(f, spec, bits);
  return integrator.run(breakpoints);
}

QuadResult integrate(const RealFn& f, const PrecReal& a, const PrecReal& b, const QuadratureSpec& spec) {
  return integrate(f, std::vector<PrecReal>{a, b}, spec);
}

QuadResult quad_jacobi_half(const RealFn& f, JacobiWeight weight, const QuadratureSpec& spec) {
  const Bits bits = spec.precision();
  const PrecReal half_pi = const_pi(bits) / 2;
  RealFn mapped;
  if (weight == JacobiWeight::sqrt_u_over_one_minus_u) {
    // sqrt(u/(1-u)) du = 2 sin^2(theta) dtheta
    mapped = [&f](const PrecReal& theta) {
      const PrecReal s = sin(theta);
      const PrecReal u = s * s;
      return 2 * u * f(u);
    };
  } else {
    // du / sqrt(u(1-u)) = 2 dtheta
    mapped = [&f](const PrecReal& theta) {
      const PrecReal s = sin(theta);
      return 2 * f(s * s);
    };
  }
  return integrate(mapped, PrecReal::zero(bits), half_pi, spec);
}

QuadResult quad_semi_infinite(const RealFn& g, const PrecReal& decay_scale, const QuadratureSpec& spec) {
  spec.validate();
  if (!(decay_scale > 0)) throw DomainError("decay_scale must be positive");
  const Bits bits = std::max(spec.precision(), decay_scale.precision());
  const PrecReal tail_target = spec.abs_tol / 8;

  // Probe x_j = s * 2^j; stop once the exponential tail bound |g(x)| * s is
  // below target and the integrand is no longer growing.
  PrecReal cutoff;
  PrecReal tail_bound;
  bool found = false;
  PrecReal previous = PrecReal::zero(bits);
  for (int j = 0; j <= 24; ++j) {
    const PrecReal x = ldexp(decay_scale, j);
    const PrecReal gx = abs(g(x));
    const PrecReal bound = gx * decay_scale;
    if (j > 0 && bound <= tail_target && gx <= previous) {
      cutoff = x;
      tail_bound = bound;
      found = true;
      break;
    }
    previous = gx;
  }
  if (!found) {
    throw TailNotDecaying("integrand does not decay on the probed range up to " +
                          ldexp(decay_scale, 24).str(6));
  }

  // x = y^2 removes x^(-1/2) behaviour at the origin; panels are split at
  // multiples of the decay scale so each is resolved at its own scale.
  RealFn mapped = [&g](const PrecReal& y) { return 2 * y * g(y * y); };
  std::vector<PrecReal> breaks{PrecReal::zero(bits)};
  for (PrecReal x = decay_scale; x < cutoff; x = x * 2) breaks.push_back(sqrt(x));
  breaks.push_back(sqrt(cutoff));
  QuadratureSpec inner = spec;
  inner.abs_tol = spec.abs_tol - tail_bound;
  QuadResult r = integrate(mapped, breaks, inner);
  r.error += tail_bound;
  return r;
}

QuadResult quad_power_tail(const RealFn& g, const PrecReal& from, const QuadratureSpec& spec) {
  if (!(from > 0)) throw DomainError("power tail must start at a positive abscissa");
  const Bits bits = std::max(spec.precision(), from.precision());
  // x = from / y^2, dx = 2 from / y^3 dy, y in (0, 1]
  RealFn mapped = [&g, &from](const PrecReal& y) {
    const PrecReal y2 = y * y;
    return g(from / y2) * (2 * from) / (y2 * y);
  };
  std::vector<PrecReal> breaks{PrecReal::zero(bits), rational(1, 8, bits), rational(1, 2, bits), PrecReal(1, bits)};
  return integrate(mapped, breaks, spec);
}

}  // namespace sixvertex::numerics

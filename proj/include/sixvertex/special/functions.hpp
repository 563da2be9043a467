#pragma once

#include <optional>
#include <string>

#include "sixvertex/numerics/prec_real.hpp"

namespace sixvertex::special {

using numerics::Bits;
using numerics::PrecReal;

enum class Branch { series_small, quadrature, asymptotic_large };
std::string to_string(Branch b);

struct FnEval {
  PrecReal value;
  Branch branch = Branch::quadrature;
  PrecReal est_error;
};

struct BranchOptions {
  PrecReal z_lo = numerics::rational(1, 10, numerics::kDefaultBits);
  PrecReal z_hi = PrecReal(60);
  // Quadrature tolerance; 2^-(bits-12) at the argument's width when absent.
  std::optional<PrecReal> tol;
};

// x / (e^x - 1) and its derivative, with Taylor branches for |x| < 1/8.
PrecReal bose_kernel(const PrecReal& x);
PrecReal bose_kernel_prime(const PrecReal& x);

// S(x) = sinh(x)/x, S(0) = 1.
PrecReal sinhc(const PrecReal& x);
// ln S(x), without overflow for large |x| or cancellation near 0.
PrecReal log_sinhc(const PrecReal& x);
// H(z) = ln S(z) / z, H(0) = 0.
PrecReal H_fn(const PrecReal& z);
// coth(y) - 1/y and its derivative 1/y^2 - 1/sinh^2(y); both regular at 0.
PrecReal coth_minus_inv(const PrecReal& y);
PrecReal coth_minus_inv_prime(const PrecReal& y);

// V(x) = x - (tau/t) ln S(tx) = x (1 - tau H(tx)); V(x) = x at t = 0.
// Throws DomainError unless 0 <= tau < 1 and t >= 0.
PrecReal potential_V(const PrecReal& x, const PrecReal& tau, const PrecReal& t);
PrecReal potential_V_prime(const PrecReal& x, const PrecReal& tau, const PrecReal& t);
PrecReal potential_V_second(const PrecReal& x, const PrecReal& tau, const PrecReal& t);

// I(z) = -1 + (z/pi) int_0^1 sqrt(u/(1-u)) du/(e^{zu}-1), z >= 0.
FnEval I_fn(const PrecReal& z, const BranchOptions& options = {});
// J(z) = (z/pi) int_0^1 (sqrt(u/(1-u)) - arctan sqrt(u/(1-u))) du/(e^{zu}-1).
FnEval J_fn(const PrecReal& z, const BranchOptions& options = {});
FnEval I_prime_eval(const PrecReal& z, const BranchOptions& options = {});
FnEval J_prime_eval(const PrecReal& z, const BranchOptions& options = {});
PrecReal I_prime(const PrecReal& z);
// Defined on z >= 0; the limit at 0 is -1/8.
PrecReal J_prime(const PrecReal& z);

// Evaluate one branch regardless of the thresholds (cross-branch checks).
// The series branch needs z < 2 pi; the asymptotic branch z > 0.
FnEval I_branch(const PrecReal& z, Branch branch, const BranchOptions& options = {});
FnEval J_branch(const PrecReal& z, Branch branch, const BranchOptions& options = {});
FnEval I_prime_branch(const PrecReal& z, Branch branch, const BranchOptions& options = {});
FnEval J_prime_branch(const PrecReal& z, Branch branch, const BranchOptions& options = {});

// I(z)/z with the value -1/4 at z = 0.
PrecReal I_over_z(const PrecReal& z);
// (J(z) - (1 - ln 2))/z with the value -1/8 at z = 0.
PrecReal J_deficit_over_z(const PrecReal& z);

}  // namespace sixvertex::special

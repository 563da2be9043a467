#include "sixvertex/cli/app.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <optional>

#include "CLI11.hpp"
#include "sixvertex/asymptotics/asymptotics.hpp"
#include "sixvertex/cli/report.hpp"
#include "sixvertex/equilibrium/equilibrium.hpp"
#include "sixvertex/errors.hpp"
#include "sixvertex/exact/partition.hpp"
#include "sixvertex/numerics/zeta.hpp"
#include "sixvertex/special/functions.hpp"

namespace sixvertex::cli {

namespace {

using exact::Rational;
using numerics::Bits;
using numerics::PrecReal;

struct RunConfig {
  int precision_bits = 128;
  int digits = 30;
  std::string tol = "1e-12";
  std::string format = "text";
  std::string out_path;
};

struct Context {
  Bits bits;
  int digits;
  PrecReal tol;
  std::string num(const PrecReal& x) const { return x.str(digits); }
};

Report make_report(const std::string& command, const RunConfig& cfg, const Context& ctx) {
  Report r;
  r.command = command;
  r.precision_bits = static_cast<int>(ctx.bits);
  r.digits = ctx.digits;
  r.tol = cfg.tol;
  return r;
}

// Exact pipelines take integers or p/q only; a decimal would hide whether the
// value was meant exactly.
Rational parse_exact_alpha(const std::string& text) {
  if (text.find_first_of(".eE") != std::string::npos) {
    throw DomainError("alpha must be an integer or a fraction p/q for exact computations, got '" + text + "'");
  }
  const Rational alpha = exact::parse_rational(text);
  exact::CriticalWeights::from_alpha(alpha);
  return alpha;
}

struct AlphaInput {
  PrecReal value;
  std::optional<Rational> exact;
};

AlphaInput parse_any_alpha(const std::string& text, Bits bits) {
  if (text.find_first_of(".eE") == std::string::npos) {
    const Rational q = parse_exact_alpha(text);
    return {PrecReal(q, bits), q};
  }
  const PrecReal a = PrecReal::parse(text, bits);
  if (!(a > 1)) throw DomainError("alpha must exceed 1, got " + text);
  return {a, std::nullopt};
}

// --- exact -------------------------------------------------------------------

struct ExactArgs {
  int n = 0;
  std::string alpha;
  bool brute_force = false;
  int max_n = exact::kDefaultMaxN;
};

Report cmd_exact(const ExactArgs& args, const RunConfig& cfg, const Context& ctx, bool& mismatch) {
  const Rational alpha = parse_exact_alpha(args.alpha);
  if (args.n < 1) throw DomainError("N must be >= 1");
  const exact::HankelResult h = exact::hankel(args.n, alpha, args.max_n);
  Report r = make_report("exact", cfg, ctx);
  r.inputs = {{"N", static_cast<long>(args.n)}, {"alpha", exact::to_string(alpha)}};
  Record row{{"N", static_cast<long>(args.n)},
             {"alpha", exact::to_string(alpha)},
             {"Z", exact::to_string(h.Z_N)},
             {"Z_numerator", h.Z_N.get_num().get_str()},
             {"Z_denominator", h.Z_N.get_den().get_str()},
             {"ln_Z", ctx.num(exact::ln_rational(h.Z_N, ctx.bits))}};
  if (args.brute_force) {
    const exact::CriticalWeights w = exact::CriticalWeights::from_alpha(alpha);
    const Rational brute = exact::brute_force_Z(args.n, w.a, w.b, w.c);
    long configurations = 0;
    for (const auto& kv : exact::enumerate_configurations(args.n)) configurations += kv.second;
    mismatch = brute != h.Z_N;
    row.emplace_back("brute_force_Z", exact::to_string(brute));
    row.emplace_back("configurations", configurations);
    row.emplace_back("check", std::string(mismatch ? "MISMATCH" : "MATCH"));
  }
  r.rows.push_back(std::move(row));
  return r;
}

// --- asymptotic --------------------------------------------------------------

Report cmd_asymptotic(int n, const std::string& alpha_text, const RunConfig& cfg, const Context& ctx) {
  if (n < 1) throw DomainError("N must be >= 1");
  const AlphaInput alpha = parse_any_alpha(alpha_text, ctx.bits);
  const asymptotics::AsymptoticModel m = asymptotics::asymptotic_model(alpha.value);
  const PrecReal t = PrecReal(n, ctx.bits) / alpha.value;
  const asymptotics::DoubleScalingModel ds = asymptotics::double_scaling(t);
  Report r = make_report("asymptotic", cfg, ctx);
  r.inputs = {{"N", static_cast<long>(n)}, {"alpha", alpha_text}, {"alpha_exact", alpha.exact.has_value()}};
  r.rows.push_back({{"N", static_cast<long>(n)},
                    {"alpha", alpha.exact ? exact::to_string(*alpha.exact) : ctx.num(alpha.value)},
                    {"F", ctx.num(m.F)},
                    {"G", ctx.num(m.G)},
                    {"C", ctx.num(m.C)},
                    {"c", ctx.num(m.c_const)},
                    {"lnZ_thm11", ctx.num(asymptotics::predict_lnZ(n, alpha.value))},
                    {"t", ctx.num(t)},
                    {"Phi", ctx.num(ds.Phi)},
                    {"Psi", ctx.num(ds.Psi)},
                    {"lnZ_ds", ctx.num(asymptotics::predict_lnZ_ds(n, alpha.value))}});
  if (!alpha.exact) r.notes.push_back("alpha given as a decimal; rounded to the working precision");
  return r;
}

// --- compare -----------------------------------------------------------------

// Least-squares slope of ln|y| against ln x; empty when fewer than two usable points.
std::optional<double> decay_exponent(const std::vector<int>& xs, const std::vector<PrecReal>& ys) {
  std::vector<std::pair<double, double>> pts;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (ys[i].is_zero()) continue;
    pts.emplace_back(std::log(static_cast<double>(xs[i])), std::log(std::abs(ys[i].to_double())));
  }
  if (pts.size() < 2) return std::nullopt;
  double mx = 0, my = 0;
  for (const auto& [x, y] : pts) mx += x, my += y;
  mx /= pts.size();
  my /= pts.size();
  double sxy = 0, sxx = 0;
  for (const auto& [x, y] : pts) sxy += (x - mx) * (y - my), sxx += (x - mx) * (x - mx);
  if (sxx == 0) return std::nullopt;
  return sxy / sxx;
}

std::string exponent_text(const std::optional<double>& e) {
  if (!e) return "";
  return PrecReal::from_double(*e, 64).str(4);
}

struct CompareArgs {
  std::string alpha;
  std::string alpha_from_t;
  std::vector<int> n;
  int max_n = exact::kDefaultMaxN;
};

Report cmd_compare(const CompareArgs& args, const RunConfig& cfg, const Context& ctx) {
  if (args.n.empty()) throw DomainError("--n needs at least one value");
  if (args.alpha.empty() == args.alpha_from_t.empty()) throw DomainError("give exactly one of --alpha, --alpha-from-t");
  std::optional<Rational> fixed_alpha;
  std::optional<Rational> t;
  if (!args.alpha.empty()) fixed_alpha = parse_exact_alpha(args.alpha);
  if (!args.alpha_from_t.empty()) {
    if (args.alpha_from_t.find_first_of(".eE") != std::string::npos) {
      throw DomainError("t must be an integer or a fraction p/q, got '" + args.alpha_from_t + "'");
    }
    t = exact::parse_rational(args.alpha_from_t);
    if (*t <= 0) throw DomainError("t must be positive");
  }
  Report r = make_report("compare", cfg, ctx);
  if (fixed_alpha) r.inputs.emplace_back("alpha", exact::to_string(*fixed_alpha));
  if (t) r.inputs.emplace_back("alpha_from_t", exact::to_string(*t));
  std::string ns;
  for (int n : args.n) ns += (ns.empty() ? "" : ",") + std::to_string(n);
  r.inputs.emplace_back("n", ns);

  std::vector<PrecReal> res_thm11, res_ds;
  for (int n : args.n) {
    if (n < 1) throw DomainError("N must be >= 1");
    if (n > args.max_n) throw SizeLimit("N = " + std::to_string(n) + " exceeds --max-n " + std::to_string(args.max_n));
    const Rational alpha = fixed_alpha ? *fixed_alpha : Rational(n) / *t;
    exact::CriticalWeights::from_alpha(alpha);
    const PrecReal a(alpha, ctx.bits);
    const PrecReal exact_value = asymptotics::ln_Z_exact(n, alpha, ctx.bits);
    const PrecReal thm11 = asymptotics::predict_lnZ(n, a);
    const PrecReal ds = asymptotics::predict_lnZ_ds(n, a);
    res_thm11.push_back(exact_value - thm11);
    res_ds.push_back(exact_value - ds);
    r.rows.push_back({{"N", static_cast<long>(n)},
                      {"alpha", exact::to_string(alpha)},
                      {"lnZ_exact", ctx.num(exact_value)},
                      {"lnZ_thm11", ctx.num(thm11)},
                      {"lnZ_ds", ctx.num(ds)},
                      {"residual_thm11", ctx.num(res_thm11.back())},
                      {"residual_ds", ctx.num(res_ds.back())}});
  }
  const auto e11 = decay_exponent(args.n, res_thm11);
  const auto eds = decay_exponent(args.n, res_ds);
  r.summary = {{"rows", static_cast<long>(args.n.size())},
               {"decay_exponent_thm11", e11 ? Value(exponent_text(e11)) : Value()},
               {"decay_exponent_ds", eds ? Value(exponent_text(eds)) : Value()}};
  return r;
}

// --- constant-c, identities ----------------------------------------------------

Report cmd_constant_c(const RunConfig& cfg, const Context& ctx) {
  const asymptotics::ConstantC c = asymptotics::constant_c(ctx.tol, ctx.bits);
  Report r = make_report("constant-c", cfg, ctx);
  // digits beyond the certified bound are noise
  int shown = ctx.digits;
  if (c.error_bound.sign() > 0) {
    const double lost = -std::log10(c.error_bound.to_double());
    shown = std::clamp(static_cast<int>(std::floor(lost)) + 1, 1, ctx.digits);
  }
  r.rows.push_back({{"c", c.c.str(shown)},
                    {"error_bound", c.error_bound.str(6)},
                    {"series_total", ctx.num(c.series_total)},
                    {"outer_cutoff", c.outer_cutoff},
                    {"outer_terms", static_cast<long>(c.outer_terms)},
                    {"max_inner_cutoff", c.max_inner_cutoff}});
  return r;
}

Record identity_row(const asymptotics::IdentityResidual& id, const Context& ctx) {
  return {{"name", id.name},
          {"lhs", ctx.num(id.lhs)},
          {"rhs", ctx.num(id.rhs)},
          {"residual", id.residual.str(6)},
          {"error_bound", id.error_bound.str(6)}};
}

Report cmd_identities(const RunConfig& cfg, const Context& ctx) {
  const asymptotics::C0Report c0 = asymptotics::c0_identity_check(ctx.tol, ctx.bits);
  Report r = make_report("identities", cfg, ctx);
  for (const auto& id : c0.identities) r.rows.push_back(identity_row(id, ctx));
  for (const auto& id : asymptotics::c_constants_check(ctx.tol, ctx.bits)) r.rows.push_back(identity_row(id, ctx));
  r.summary = {{"c0", ctx.num(c0.c0)}, {"c", ctx.num(c0.c)},   {"A1", ctx.num(c0.A1)},
               {"A2", ctx.num(c0.A2)}, {"A3", ctx.num(c0.A3)}, {"A4", ctx.num(c0.A4)}};
  return r;
}

// --- equilibrium ---------------------------------------------------------------

Report cmd_equilibrium(const std::string& tau_text, const std::string& t_text, int max_iter, const RunConfig& cfg,
                       const Context& ctx) {
  const PrecReal tau = PrecReal::parse(tau_text, ctx.bits);
  const PrecReal t = PrecReal::parse(t_text, ctx.bits);
  equilibrium::SolverOptions options;
  options.bits = ctx.bits;
  options.tol = ctx.tol;
  options.max_iter = max_iter;
  const equilibrium::EquilibriumSolution s = equilibrium::solve_equilibrium(tau, t, options);
  Report r = make_report("equilibrium", cfg, ctx);
  r.inputs = {{"tau", tau_text}, {"t", t_text}};
  r.rows.push_back({{"tau", ctx.num(s.tau)},
                    {"t", ctx.num(s.t)},
                    {"b", ctx.num(s.b)},
                    {"l", ctx.num(s.l)},
                    {"v", ctx.num(s.v)},
                    {"q0", ctx.num(s.q0)},
                    {"qb", ctx.num(s.qb)},
                    {"qb_prime", ctx.num(s.qb_prime)},
                    {"iterations", static_cast<long>(s.iterations)},
                    {"residual", s.residual.str(6)},
                    {"damped", s.damped},
                    {"contour_nodes", static_cast<long>(s.contour_nodes)},
                    {"real_axis_fallback", s.real_axis_fallback}});
  return r;
}

// --- double-scaling ------------------------------------------------------------

Report cmd_double_scaling(const std::vector<std::string>& ts, const RunConfig& cfg, const Context& ctx) {
  if (ts.empty()) throw DomainError("--t needs at least one value");
  Report r = make_report("double-scaling", cfg, ctx);
  std::string joined;
  for (const auto& t : ts) joined += (joined.empty() ? "" : ",") + t;
  r.inputs = {{"t", joined}};
  for (const auto& text : ts) {
    const PrecReal t = PrecReal::parse(text, ctx.bits);
    const asymptotics::DoubleScalingModel m = asymptotics::double_scaling(t);
    r.rows.push_back({{"t", ctx.num(t)}, {"Phi", ctx.num(m.Phi)}, {"Psi", ctx.num(m.Psi)}});
  }
  return r;
}

// --- specfn --------------------------------------------------------------------

const std::vector<std::string> kSpecFunctions{"I", "J", "Iprime", "Jprime", "S", "lnS", "H", "k", "zeta"};

Report cmd_specfn(const std::string& fn, const std::string& z_text, const RunConfig& cfg, const Context& ctx) {
  const PrecReal z = PrecReal::parse(z_text, ctx.bits);
  special::BranchOptions options;
  options.z_lo = numerics::rational(1, 10, ctx.bits);
  options.z_hi = PrecReal(60, ctx.bits);
  options.tol = ctx.tol;
  const std::map<std::string, std::function<special::FnEval()>> branched{
      {"I", [&] { return special::I_fn(z, options); }},
      {"J", [&] { return special::J_fn(z, options); }},
      {"Iprime", [&] { return special::I_prime_eval(z, options); }},
      {"Jprime", [&] { return special::J_prime_eval(z, options); }},
  };
  const std::map<std::string, std::function<PrecReal()>> closed{
      {"S", [&] { return special::sinhc(z); }},
      {"lnS", [&] { return special::log_sinhc(z); }},
      {"H", [&] { return special::H_fn(z); }},
      {"k", [&] { return special::coth_minus_inv(z); }},
      {"zeta", [&] { return numerics::zeta(z, ctx.bits); }},
  };
  Report r = make_report("specfn", cfg, ctx);
  r.inputs = {{"fn", fn}, {"z", z_text}};
  if (const auto it = branched.find(fn); it != branched.end()) {
    const special::FnEval e = it->second();
    r.rows.push_back({{"fn", fn},
                      {"z", ctx.num(z)},
                      {"value", ctx.num(e.value)},
                      {"branch", special::to_string(e.branch)},
                      {"est_error", e.est_error.str(6)}});
  } else {
    r.rows.push_back({{"fn", fn},
                      {"z", ctx.num(z)},
                      {"value", ctx.num(closed.at(fn)())},
                      {"branch", std::string("closed_form")},
                      {"est_error", std::string("0")}});
  }
  return r;
}

int emit(const Report& report, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Format format = cfg.format == "json" ? Format::json : cfg.format == "csv" ? Format::csv : Format::text;
  if (cfg.out_path.empty()) {
    render(report, format, out);
    return kExitOk;
  }
  std::ofstream file(cfg.out_path, std::ios::binary);
  if (!file) {
    err << "error: cannot open output file " << cfg.out_path << '\n';
    return kExitUsage;
  }
  render(report, format, file);
  return file ? kExitOk : kExitUsage;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Six-vertex partition function on the critical line: exact values, asymptotics, checks", "sixvertex"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("--precision-bits", cfg.precision_bits, "Working precision in bits")
      ->check(CLI::Range(64, 1 << 16))
      ->capture_default_str();
  app.add_option("--digits", cfg.digits, "Significant digits printed (capped by the precision)")
      ->check(CLI::Range(1, 10000))
      ->capture_default_str();
  app.add_option("--tol", cfg.tol, "Target tolerance")->capture_default_str();
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"text", "csv", "json"}))
      ->capture_default_str();
  app.add_option("--out", cfg.out_path, "Write the report to this file instead of stdout");

  ExactArgs exact_args;
  auto* exact_cmd = app.add_subcommand("exact", "Exact Z_N from the Hankel determinant");
  exact_cmd->add_option("--n", exact_args.n, "Lattice size N")->required();
  exact_cmd->add_option("--alpha", exact_args.alpha, "alpha > 1 as p or p/q")->required();
  exact_cmd->add_flag("--brute-force", exact_args.brute_force, "Cross-check by enumerating configurations (N <= 5)");
  exact_cmd->add_option("--max-n", exact_args.max_n, "Largest N accepted")->capture_default_str();

  int asym_n = 0;
  std::string asym_alpha;
  auto* asym_cmd = app.add_subcommand("asymptotic", "Large-N predictions for ln Z_N");
  asym_cmd->add_option("--n", asym_n, "Lattice size N")->required();
  asym_cmd->add_option("--alpha", asym_alpha, "alpha > 1 (p, p/q or decimal)")->required();

  CompareArgs cmp_args;
  auto* cmp_cmd = app.add_subcommand("compare", "Exact ln Z_N against both asymptotic predictions");
  auto* cmp_alpha = cmp_cmd->add_option("--alpha", cmp_args.alpha, "Fixed alpha as p or p/q");
  auto* cmp_t = cmp_cmd->add_option("--alpha-from-t", cmp_args.alpha_from_t, "Use alpha = N/t for each N");
  cmp_alpha->excludes(cmp_t);
  cmp_cmd->add_option("--n", cmp_args.n, "Comma-separated list of N")->required()->delimiter(',');
  cmp_cmd->add_option("--max-n", cmp_args.max_n, "Largest N accepted")->capture_default_str();

  auto* c_cmd = app.add_subcommand("constant-c", "The constant c with a certified error bound");
  auto* id_cmd = app.add_subcommand("identities", "Residuals of the integral identities for c0 and c1..c7");

  std::string eq_tau, eq_t;
  int eq_max_iter = 2000;
  auto* eq_cmd = app.add_subcommand("equilibrium", "Equilibrium endpoint, multiplier and density data");
  eq_cmd->add_option("--tau", eq_tau, "tau in [0, 1)")->required();
  eq_cmd->add_option("--t", eq_t, "t >= 0")->required();
  eq_cmd->add_option("--max-iter", eq_max_iter, "Endpoint iteration budget")->capture_default_str();

  std::vector<std::string> ds_t;
  auto* ds_cmd = app.add_subcommand("double-scaling", "Phi(t) and Psi(t)");
  ds_cmd->add_option("--t", ds_t, "Comma-separated list of t >= 0")->required()->delimiter(',');

  std::string sf_fn, sf_z;
  auto* sf_cmd = app.add_subcommand("specfn", "Evaluate one special function");
  sf_cmd->add_option("--fn", sf_fn, "Function name")->required()->check(CLI::IsMember(kSpecFunctions));
  sf_cmd->add_option("--z", sf_z, "Argument")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    const Bits bits = static_cast<Bits>(cfg.precision_bits);
    const int max_digits = static_cast<int>(std::floor(static_cast<double>(bits) * std::log10(2.0)));
    const Context ctx{bits, std::min(cfg.digits, max_digits), PrecReal::parse(cfg.tol, bits)};
    if (!(ctx.tol > 0)) throw DomainError("--tol must be positive");

    bool mismatch = false;
    Report report;
    if (*exact_cmd) {
      report = cmd_exact(exact_args, cfg, ctx, mismatch);
    } else if (*asym_cmd) {
      report = cmd_asymptotic(asym_n, asym_alpha, cfg, ctx);
    } else if (*cmp_cmd) {
      report = cmd_compare(cmp_args, cfg, ctx);
    } else if (*c_cmd) {
      report = cmd_constant_c(cfg, ctx);
    } else if (*id_cmd) {
      report = cmd_identities(cfg, ctx);
    } else if (*eq_cmd) {
      report = cmd_equilibrium(eq_tau, eq_t, eq_max_iter, cfg, ctx);
    } else if (*ds_cmd) {
      report = cmd_double_scaling(ds_t, cfg, ctx);
    } else {
      report = cmd_specfn(sf_fn, sf_z, cfg, ctx);
    }
    const int code = emit(report, cfg, out, err);
    if (code == kExitOk && mismatch) {
      err << "error: brute-force value differs from the determinant formula\n";
      return kExitConsistency;
    }
    return code;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const NonConvergence& e) {
    err << "error: " << e.what() << '\n';
    return kExitNonConvergence;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitConsistency;
  }
}

}  // namespace sixvertex::cli

#include "cli.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "mpa/bvp.hpp"
#include "mpa/error.hpp"
#include "mpa/io.hpp"
#include "mpa/params.hpp"
#include "mpa/switching.hpp"
#include "mpa/synthesis.hpp"
#include "mpa/verification.hpp"

namespace mpa::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParamFlags {
  std::optional<double> l, q, hbar;
  std::optional<double> D, R, mu, Hbar, Q, L;

  bool any_scaled() const { return l || q || hbar; }
  bool any_unscaled() const { return D || R || mu || Hbar || Q || L; }
};

void add_param_flags(CLI::App& app, ParamFlags& f) {
  app.add_option("--l", f.l, "scaled coast length");
  app.add_option("--q", f.q, "scaled density weight");
  app.add_option("--hbar", f.hbar, "scaled maximal harvest rate");
  app.add_option("--D", f.D, "diffusion coefficient");
  app.add_option("--R", f.R, "recruitment rate");
  app.add_option("--mu", f.mu, "death rate");
  app.add_option("--Hbar", f.Hbar, "maximal harvest rate");
  app.add_option("--Q", f.Q, "density weight");
  app.add_option("--L", f.L, "coast length");
}

double need(const std::optional<double>& v, const char* flag) {
  if (!v) throw UsageError(std::string("missing required flag ") + flag);
  return *v;
}

struct Resolved {
  ScaledParams scaled;
  std::optional<UnscaledParams> unscaled;
};

// `length_fallback` stands in for an absent length when the subcommand does
// not depend on it.
Resolved resolve(const ParamFlags& f,
                 std::optional<double> length_fallback = std::nullopt) {
  if (f.any_scaled() && f.any_unscaled()) {
    throw UsageError(
        "scaled (--l --q --hbar) and unscaled (--D --R --mu --Hbar --Q --L) "
        "flags are mutually exclusive");
  }
  if (f.any_unscaled()) {
    const double R = length_fallback ? f.R.value_or(1.0) : need(f.R, "--R");
    const double L =
        length_fallback ? f.L.value_or(*length_fallback) : need(f.L, "--L");
    UnscaledParams p(need(f.D, "--D"), R, need(f.mu, "--mu"),
                     need(f.Hbar, "--Hbar"), need(f.Q, "--Q"), L);
    return {to_scaled(p), p};
  }
  const double l =
      length_fallback ? f.l.value_or(*length_fallback) : need(f.l, "--l");
  return {ScaledParams(l, need(f.q, "--q"), need(f.hbar, "--hbar")),
          std::nullopt};
}

Json scaled_json(const ScaledParams& sp) {
  Json j;
  j["l"] = sp.length();
  j["q"] = sp.density_weight();
  j["hbar"] = sp.max_harvest();
  return j;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot open output file " + path);
  return f;
}

// ---------------------------------------------------------------- scale

int cmd_scale(const ParamFlags& f, std::ostream& out) {
  if (f.any_scaled() || !f.any_unscaled()) {
    throw UsageError("scale takes the unscaled flags --D --R --mu --Hbar --Q --L");
  }
  const Resolved r = resolve(f);
  Json j = scaled_json(r.scaled);
  j["length_scale"] = length_scale(*r.unscaled);
  j["objective_scale"] = r.unscaled->recruitment();
  out << dump_json(j);
  return 0;
}

// ---------------------------------------------------------------- lmin

int cmd_lmin(const ParamFlags& f, std::ostream& out) {
  const Resolved r = resolve(f, 1.0);
  Json j;
  j["l_min"] = min_length(r.scaled);
  if (r.unscaled) j["L_min"] = unscaled_min_length(*r.unscaled);
  out << dump_json(j);
  return 0;
}

// ---------------------------------------------------------------- solve

struct SolveFlags {
  std::string profile;
  std::string adjoint;
  int samples = 512;
};

int cmd_solve(const ParamFlags& f, const SolveFlags& s, std::ostream& out) {
  if (s.samples < 2) throw UsageError("--samples must be >= 2");
  const Resolved r = resolve(f);
  const OptimalSolution sol = optimal_policy(r.scaled);
  std::optional<double> boundary;
  if (r.unscaled) boundary = unscaled_reserve_boundary(*r.unscaled);

  Json j = solution_json(sol, boundary);
  if (r.unscaled) {
    Json u;
    u["length_scale"] = length_scale(*r.unscaled);
    u["objective_J"] = unscale_objective(sol.objective, *r.unscaled);
    u["L_min"] = r.scaled.density_weight() > 1.0
                     ? Json(unscaled_min_length(*r.unscaled))
                     : Json(nullptr);
    j["unscaled"] = u;
  }
  const auto n = static_cast<std::size_t>(s.samples);
  if (!s.profile.empty()) {
    auto file = open_output(s.profile);
    write_state_csv(file, shoot_steady_state(sol.policy).samples(n));
  }
  if (!s.adjoint.empty()) {
    auto file = open_output(s.adjoint);
    write_adjoint_csv(file,
                      solve_adjoint(sol.policy, r.scaled.density_weight())
                          .samples(n));
  }
  out << dump_json(j);
  return 0;
}

// ---------------------------------------------------------------- verify

struct VerifyFlags {
  int cells = 12;
  int centers = 41;
  int widths = 81;
  int oracle_samples = 200;
  int eig_points = 512;
  double t_max = 40.0;
};

constexpr double kObjectiveSlack = 1e-9;
constexpr double kOracleTolerance = 1e-8;
constexpr double kPdeTolerance = 1e-6;
constexpr double kResidualTolerance = 1e-8;

int cmd_verify(const ParamFlags& f, const VerifyFlags& v, std::ostream& out) {
  if (v.cells < 1 || v.cells > kMaxBruteForceCells) {
    throw UsageError("--cells must lie in [1, " +
                     std::to_string(kMaxBruteForceCells) + "]");
  }
  if (v.centers < 2 || v.widths < 2 || v.oracle_samples < 1 ||
      v.eig_points < 16 || !(v.t_max > 0.0)) {
    throw UsageError("invalid verification grid settings");
  }
  const Resolved r = resolve(f);
  const ScaledParams& sp = r.scaled;
  const OptimalSolution sol = optimal_policy(sp);

  Json checks;
  bool all = true;
  const auto record = [&](const char* name, bool pass, Json detail) {
    detail["pass"] = pass;
    checks[name] = detail;
    all = all && pass;
  };

  {
    const SweepResult bf = brute_force_bangbang(sp, v.cells);
    Json d = sweep_summary_json(bf);
    record("brute_force", bf.gap >= -kObjectiveSlack, d);
  }
  {
    const SweepResult rs = reserve_sweep(sp, v.centers, v.widths);
    record("reserve_sweep", rs.gap >= -kObjectiveSlack, sweep_summary_json(rs));
  }
  {
    Json d;
    if (sp.density_weight() > 1.0) {
      const DerivedConstants dc = derive_constants(sp);
      double worst = 0.0;
      for (int i = 0; i < v.oracle_samples; ++i) {
        const double lambda0 = dc.escape_lambda0 * (i + 0.5) / v.oracle_samples;
        const HitTime closed = axis_hit_time(lambda0, dc);
        const HitTime oracle = integrate_adjoint_with_events(lambda0, sp).hit;
        const double e = closed.hits() && oracle.hits()
                             ? std::abs(closed.value() - oracle.value())
                             : std::numeric_limits<double>::infinity();
        worst = std::max(worst, e);
      }
      d["samples"] = v.oracle_samples;
      d["max_error"] = worst;
      record("adjoint_oracle", worst <= kOracleTolerance, d);
    } else {
      d["skipped"] = "switching analysis applies only when q > 1";
      record("adjoint_oracle", true, d);
    }
  }
  {
    PdeOptions opt;
    opt.t_max = v.t_max;
    const PdeResult pde = pde_time_stepper(sol.policy, opt);
    Json d;
    d["t_max"] = v.t_max;
    d["l2_distance"] = pde.distance;
    record("pde_convergence", pde.distance <= kPdeTolerance, d);
  }
  {
    const SpectrumResult spec = stability_eigenvalues(sol.policy, v.eig_points);
    Json d;
    d["interior_points"] = v.eig_points;
    d["max_eigenvalue"] = spec.max_eigenvalue;
    record("stability", spec.max_eigenvalue <= -1.0 + 1e-6, d);
  }
  {
    const Diagnostics& dg = sol.diagnostics;
    Json d;
    d["transversality"] = dg.transversality;
    d["hamiltonian_deviation"] = dg.hamiltonian_deviation;
    d["switch_mismatch"] = dg.switch_mismatch;
    d["switching_law_holds"] = dg.switching_law_holds;
    record("pontryagin",
           dg.transversality <= kResidualTolerance &&
               dg.hamiltonian_deviation <= kResidualTolerance &&
               dg.switch_mismatch <= kResidualTolerance &&
               dg.switching_law_holds,
           d);
  }

  Json j;
  j["params"] = scaled_json(sp);
  j["checks"] = checks;
  j["all_pass"] = all;
  out << dump_json(j);
  return all ? 0 : 1;
}

// ---------------------------------------------------------------- sweep

struct SweepFlags {
  std::string param;
  std::optional<double> from, to;
  int steps = 0;
  std::string out;
};

int cmd_sweep(ParamFlags f, const SweepFlags& s, std::ostream& out) {
  if (!s.from || !s.to || !std::isfinite(*s.from) || !std::isfinite(*s.to) ||
      !(*s.from < *s.to) || s.steps < 2) {
    throw UsageError("sweep needs --from < --to (finite) and --steps >= 2");
  }
  const std::map<std::string, std::optional<double> ParamFlags::*> slots{
      {"l", &ParamFlags::l},   {"q", &ParamFlags::q},
      {"hbar", &ParamFlags::hbar}, {"D", &ParamFlags::D},
      {"R", &ParamFlags::R},   {"mu", &ParamFlags::mu},
      {"Hbar", &ParamFlags::Hbar}, {"Q", &ParamFlags::Q},
      {"L", &ParamFlags::L}};
  const auto slot = slots.find(s.param);
  if (slot == slots.end()) throw UsageError("unknown sweep parameter " + s.param);

  std::ostringstream csv;
  csv << "param,reserve_present,halfwidth,Ts,l_min,objective_j\n";
  const auto opt = [](const std::optional<double>& v) {
    return v ? format_double(*v) : std::string();
  };
  for (int i = 0; i < s.steps; ++i) {
    const double value =
        i + 1 == s.steps ? *s.to : *s.from + (*s.to - *s.from) * i / (s.steps - 1);
    f.*(slot->second) = value;
    const Resolved r = resolve(f);
    const OptimalSolution sol = optimal_policy(r.scaled);
    const bool present = sol.reserve_halfwidth > 0.0;
    std::optional<double> halfwidth = sol.reserve_halfwidth;
    std::optional<double> edge = sol.edge_distance;
    std::optional<double> lmin = sol.min_length;
    double objective = sol.objective;
    if (r.unscaled) {
      // Physical units throughout.
      const double unit = length_scale(*r.unscaled);
      halfwidth = present ? unscaled_reserve_boundary(*r.unscaled) : 0.0;
      if (edge) *edge *= unit;
      if (lmin) *lmin *= unit;
      objective = unscale_objective(objective, *r.unscaled);
    }
    csv << format_double(value) << ',' << (present ? "true" : "false") << ','
        << opt(halfwidth) << ',' << opt(edge) << ',' << opt(lmin) << ','
        << format_double(objective) << '\n';
  }
  if (s.out.empty()) {
    out << csv.str();
  } else {
    auto file = open_output(s.out);
    file << csv.str();
  }
  return 0;
}

// ---------------------------------------------------------------- simulate

struct SimulateFlags {
  double dx = 0.0;
  double dt = 0.0;
  double t_max = 40.0;
  std::optional<double> rate;
  std::string out;
};

int cmd_simulate(const ParamFlags& f, const SimulateFlags& s, std::ostream& out) {
  if (s.dx < 0.0 || s.dt < 0.0 || !(s.t_max > 0.0)) {
    throw UsageError("--dx and --dt must be >= 0 and --t-max > 0");
  }
  const Resolved r = resolve(f);
  const double l = r.scaled.length();
  const double hbar = r.scaled.max_harvest();
  const HarvestPolicy policy = s.rate
                                   ? HarvestPolicy::constant(l, *s.rate, hbar)
                                   : optimal_policy(r.scaled).policy;
  PdeOptions opt;
  opt.dx = s.dx;
  opt.dt = s.dt;
  opt.t_max = s.t_max;
  const PdeResult res = pde_time_stepper(policy, opt);

  Json j;
  j["params"] = scaled_json(r.scaled);
  j["policy"] = policy_json(policy);
  j["nodes"] = res.final_state.size();
  j["l2_distance"] = res.distance;
  Json hist = Json::array();
  for (const auto& [t, d] : res.history) hist.push_back(Json::array({t, d}));
  j["history"] = hist;
  if (!s.out.empty()) {
    auto file = open_output(s.out);
    write_pde_csv(file, res.final_state);
  }
  out << dump_json(j);
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Optimal harvesting and marine reserve design on a coastline"};
  app.require_subcommand(1);

  ParamFlags params;
  SolveFlags solve;
  VerifyFlags verify;
  SweepFlags sweep;
  SimulateFlags simulate;

  auto* scale_cmd = app.add_subcommand("scale", "convert unscaled parameters");
  add_param_flags(*scale_cmd, params);

  auto* lmin_cmd = app.add_subcommand("lmin", "minimal coast length for a reserve");
  add_param_flags(*lmin_cmd, params);

  auto* solve_cmd = app.add_subcommand("solve", "optimal policy and reserve");
  add_param_flags(*solve_cmd, params);
  solve_cmd->add_option("--profile", solve.profile, "write x,u,v CSV here");
  solve_cmd->add_option("--adjoint", solve.adjoint,
                        "write x,lambda1,lambda2 CSV here");
  solve_cmd->add_option("--samples", solve.samples, "profile sample count");

  auto* verify_cmd = app.add_subcommand("verify", "run the oracle suite");
  add_param_flags(*verify_cmd, params);
  verify_cmd->add_option("--cells", verify.cells, "brute-force cells (<= 16)");
  verify_cmd->add_option("--centers", verify.centers, "reserve sweep centers");
  verify_cmd->add_option("--widths", verify.widths, "reserve sweep widths");
  verify_cmd->add_option("--oracle-samples", verify.oracle_samples,
                         "start values for the adjoint oracle");
  verify_cmd->add_option("--eig-points", verify.eig_points,
                         "interior points of the eigenvalue grid");
  verify_cmd->add_option("--t-max", verify.t_max, "PDE end time");

  auto* sweep_cmd = app.add_subcommand("sweep", "tabulate the solution over a parameter range");
  add_param_flags(*sweep_cmd, params);
  sweep_cmd->add_option("--param", sweep.param, "swept parameter name")->required();
  sweep_cmd->add_option("--from", sweep.from, "first value")->required();
  sweep_cmd->add_option("--to", sweep.to, "last value")->required();
  sweep_cmd->add_option("--steps", sweep.steps, "number of points")->required();
  sweep_cmd->add_option("--out", sweep.out, "CSV path (default: stdout)");

  auto* sim_cmd = app.add_subcommand("simulate", "time-step the PDE to steady state");
  add_param_flags(*sim_cmd, params);
  sim_cmd->add_option("--dx", simulate.dx, "grid spacing (default l/4096)");
  sim_cmd->add_option("--dt", simulate.dt, "time step (default l/512)");
  sim_cmd->add_option("--t-max", simulate.t_max, "end time");
  sim_cmd->add_option("--rate", simulate.rate,
                      "constant harvest rate instead of the optimal policy");
  sim_cmd->add_option("--out", simulate.out, "final state CSV path");

  std::vector<std::string> argv_storage{"mpa"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*scale_cmd) return cmd_scale(params, out);
    if (*lmin_cmd) return cmd_lmin(params, out);
    if (*solve_cmd) return cmd_solve(params, solve, out);
    if (*verify_cmd) return cmd_verify(params, verify, out);
    if (*sweep_cmd) return cmd_sweep(params, sweep, out);
    if (*sim_cmd) return cmd_simulate(params, simulate, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const NumericalDefect& e) {
    err << "numerical defect: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace mpa::cli

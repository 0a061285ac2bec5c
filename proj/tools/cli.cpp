// Copyright 2026 The mgdiscord Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "mgd/discord.hpp"
#include "mgd/dynamics.hpp"
#include "mgd/errors.hpp"
#include "mgd/family.hpp"
#include "mgd/surface.hpp"
#include "mgd/text_format.hpp"
#include "mgd/verify.hpp"

namespace mgd::cli {

namespace {

constexpr double kCompareGap = 1e-5;

struct Options {
  int n = 2;
  std::string c;
  std::string mode = "closed";
  double tau = 1.0;
  double t_max = 4.0;
  int steps = 200;
  double target = 0.1;
  double band = 0.005;
  int resolution = 81;
  std::string domain = "cube";
  std::uint64_t seed = 0;
  int samples = 100;
  int restarts = OptimizerConfig{}.restarts;
  std::string out = "stdout";
  std::string tree_out;
  bool allow_unphysical = false;
};

// Builds the family state for --n/--c. Unphysical triples are an error
// unless --allow-unphysical, in which case a warning comment is queued.
PauliFamilyState load_state(const Options &o, std::vector<std::string> &comments) {
  const Coefficients c = parse_coefficients(o.c);
  if (o.n < 2 || o.n > kMaxQubits) {
    throw ParameterError("--n must be in [2, " + std::to_string(kMaxQubits) + "]");
  }
  if (!o.allow_unphysical) return PauliFamilyState::make(o.n, c);
  auto s = PauliFamilyState::formal(o.n, c);
  const Physicality p = is_physical(o.n, c);
  if (!p.physical) {
    comments.push_back("# warning: unphysical coefficients, minimal eigenvalue " +
                       format_csv(p.min_eigenvalue));
  }
  return s;
}

int cmd_compute(const Options &o, std::ostream &out) {
  if (o.mode != "closed" && o.mode != "numeric" && o.mode != "both") {
    throw ParameterError("--mode must be closed, numeric or both");
  }
  std::vector<std::string> comments;
  const PauliFamilyState s = load_state(o, comments);
  const double exact = closed_form(s);
  std::optional<DiscordResult> numeric;
  if (o.mode != "closed") {
    OptimizerConfig cfg;
    cfg.seed = o.seed;
    cfg.restarts = o.restarts;
    numeric = minimize_numeric(to_density_matrix(s), cfg);
  }
  const bool compare = o.mode == "both";
  const double gap = numeric ? std::abs(numeric->value - exact) : 0.0;

  out << "n,c1,c2,c3,mode,closed_form,numeric,gap,converged,restarts_used\n";
  out << s.qubits() << ',' << format_csv(s.c()[0]) << ',' << format_csv(s.c()[1]) << ','
      << format_csv(s.c()[2]) << ',' << o.mode << ',';
  out << (o.mode == "numeric" ? "" : format_csv(exact)) << ',';
  out << (numeric ? format_csv(numeric->value) : "") << ',';
  out << (compare ? format_csv(gap) : "") << ',';
  out << (numeric ? (numeric->converged ? "true" : "false") : "") << ',';
  out << (numeric ? std::to_string(numeric->restarts_used) : "") << '\n';
  for (const auto &line : comments) out << line << '\n';
  if (numeric) {
    out << "# arg_tree t,y1,y2,y3 (level order)\n";
    std::istringstream rows(numeric->arg_tree.serialize());
    for (std::string row; std::getline(rows, row);) out << "# " << row << '\n';
    if (!o.tree_out.empty()) {
      std::ofstream file(o.tree_out);
      if (!file) throw ParameterError("cannot write tree file " + o.tree_out);
      file << numeric->arg_tree.serialize();
    }
  }
  if (compare && gap > kCompareGap) {
    out << "# gap exceeds " << format_csv(kCompareGap) << '\n';
    return kValidationFailure;
  }
  return kSuccess;
}

int cmd_dynamics(const Options &o, std::ostream &out) {
  std::vector<std::string> comments;
  const PauliFamilyState s = load_state(o, comments);
  PhaseFlipParams p;
  p.tau = o.tau;
  p.t_max = o.t_max;
  p.steps = o.steps;
  const auto points = trajectory(s, p);
  out << "t,gamma,c1_eff,c2_eff,c3_eff,discord\n";
  for (const TrajectoryPoint &pt : points) {
    out << format_csv(pt.t) << ',' << format_csv(pt.gamma) << ',' << format_csv(pt.c_effective[0]) << ','
        << format_csv(pt.c_effective[1]) << ',' << format_csv(pt.c_effective[2]) << ','
        << format_csv(pt.discord) << '\n';
  }
  for (const auto &line : comments) out << line << '\n';
  const auto t0 = sudden_change_time(s, o.tau);
  out << "# sudden_change_t0=" << (t0 ? format_csv(*t0) : std::string("none")) << '\n';
  return kSuccess;
}

int cmd_surface(const Options &o, std::ostream &out) {
  SurfaceGridSpec spec;
  spec.n_qubits = o.n;
  spec.target_discord = o.target;
  spec.tolerance_band = o.band;
  spec.grid_resolution = o.resolution;
  if (o.domain == "cube") {
    spec.domain = SurfaceDomain::kCube;
  } else if (o.domain == "physical") {
    spec.domain = SurfaceDomain::kPhysical;
  } else {
    throw ParameterError("--domain must be cube or physical");
  }
  const auto points = level_surface(spec);
  out << "c1,c2,c3,discord\n";
  for (const SurfacePoint &pt : points) {
    out << format_csv(pt.c[0]) << ',' << format_csv(pt.c[1]) << ',' << format_csv(pt.c[2]) << ','
        << format_csv(pt.discord) << '\n';
  }
  out << "# points=" << points.size() << " domain=" << o.domain << '\n';
  return kSuccess;
}

int cmd_verify(const Options &o, std::ostream &out) {
  const VerificationReport report = run_verification(o.seed, o.samples);
  out << format_report(report);
  return report.ok() ? kSuccess : kValidationFailure;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  Options o;
  CLI::App app{"Geometric multipartite quantum discord of N-qubit Pauli-diagonal states"};
  app.name("mgdiscord");
  app.require_subcommand(1);

  auto add_out = [&](CLI::App *cmd) {
    cmd->add_option("--out", o.out, "Output path, or 'stdout'")->capture_default_str();
  };
  auto add_state = [&](CLI::App *cmd) {
    cmd->add_option("--n", o.n, "Number of qubits N >= 2")->required();
    cmd->add_option("--c", o.c, "Coefficient triple 'c1,c2,c3'")->required();
    cmd->add_flag("--allow-unphysical", o.allow_unphysical,
                  "Evaluate the formulas even if the operator is not positive semidefinite");
  };

  CLI::App *compute = app.add_subcommand("compute", "Closed-form and/or numeric geometric discord");
  add_state(compute);
  compute->add_option("--mode", o.mode, "closed, numeric or both")
      ->check(CLI::IsMember({"closed", "numeric", "both"}))
      ->capture_default_str();
  compute->add_option("--seed", o.seed, "Optimizer seed")->capture_default_str();
  compute->add_option("--restarts", o.restarts, "Optimizer restarts")->check(CLI::PositiveNumber);
  compute->add_option("--tree-out", o.tree_out, "Write the minimizing tree rows to this file");
  add_out(compute);

  CLI::App *dynamics = app.add_subcommand("dynamics", "Discord under phase-flip noise on qubit 1 (CSV)");
  add_state(dynamics);
  dynamics->add_option("--tau", o.tau, "Transversal decay rate")->capture_default_str();
  dynamics->add_option("--t-max", o.t_max, "End of the time window")->capture_default_str();
  dynamics->add_option("--steps", o.steps, "Uniform samples on [0, t-max]")->capture_default_str();
  add_out(dynamics);

  CLI::App *surface = app.add_subcommand("surface", "Level-surface point cloud of the closed form (CSV)");
  surface->add_option("--n", o.n, "Number of qubits N >= 2")->required();
  surface->add_option("--target", o.target, "Target discord")->capture_default_str();
  surface->add_option("--band", o.band, "Tolerance band around the target")->capture_default_str();
  surface->add_option("--resolution", o.resolution, "Grid points per axis on [-1, 1]")->capture_default_str();
  surface->add_option("--domain", o.domain, "cube (whole coefficient cube) or physical")
      ->check(CLI::IsMember({"cube", "physical"}))
      ->capture_default_str();
  add_out(surface);

  CLI::App *verify = app.add_subcommand("verify", "Run the oracle, invariant and dynamics suites");
  verify->add_option("--seed", o.seed, "Random seed")->capture_default_str();
  verify->add_option("--samples", o.samples, "Cases per suite and qubit count")->capture_default_str();
  add_out(verify);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  std::ofstream file;
  std::ostream *sink = &out;
  if (o.out != "stdout") {
    file.open(o.out);
    if (!file) {
      err << "error: cannot open " << o.out << " for writing\n";
      return kUsageError;
    }
    sink = &file;
  }

  try {
    if (*compute) return cmd_compute(o, *sink);
    if (*dynamics) return cmd_dynamics(o, *sink);
    if (*surface) return cmd_surface(o, *sink);
    return cmd_verify(o, *sink);
  } catch (const ValidationError &e) {
    err << "error: " << e.what() << '\n';
    return kValidationFailure;
  } catch (const ParameterError &e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  }
}

}  // namespace mgd::cli

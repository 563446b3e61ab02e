// gfid: command-line front end for Gaussian channel fidelities.
//
// Exit codes:
//   0 success
//   2 parse / usage error (including unsupported oracle combinations)
//   3 precondition failure (mixed or non-physical input, singular matrix)
//   4 output write failure
//   5 channel fails the symmetric-PSD noise condition (validate)
//   6 oracle disagrees with the closed form (oracle)

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gfid/channels.hpp"
#include "gfid/config.hpp"
#include "gfid/errors.hpp"
#include "gfid/fidelity.hpp"
#include "gfid/oracle.hpp"
#include "gfid/parallel.hpp"
#include "gfid/sweep.hpp"

namespace {

using nlohmann::json;

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kPrecondition = 3,
  kWriteFailure = 4,
  kInvalidChannel = 5,
  kOracleMismatch = 6,
};

struct WriteError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Inline channel/state description; merged over --config when present.
struct InlineSpec {
  std::string config_path;
  std::string channel;
  std::optional<double> eta, noise, correlation, r;
  std::optional<int> modes;
  std::string a_json, g_json;
  std::string state;
  std::string alphas;
};

void add_spec_options(CLI::App* cmd, InlineSpec& spec, bool with_state) {
  cmd->add_option("--config", spec.config_path, "JSON config with \"channel\"/\"state\" objects");
  cmd->add_option("--channel", spec.channel, "identity|amplifier|attenuator|classical_noise|memory|custom");
  cmd->add_option("--eta", spec.eta, "amplifier gain / attenuator transmissivity");
  cmd->add_option("--N", spec.noise, "memory channel noise variance");
  cmd->add_option("--x", spec.correlation, "memory channel correlation in [0, 1]");
  cmd->add_option("--modes", spec.modes, "mode count for identity channel / vacuum state");
  cmd->add_option("--A", spec.a_json, "A matrix as a JSON nested array");
  cmd->add_option("--G", spec.g_json, "G matrix as a JSON nested array");
  if (with_state) {
    cmd->add_option("--state", spec.state, "vacuum|coherent|tmsv|squeezed");
    cmd->add_option("--alphas", spec.alphas, "coherent amplitudes as re,im,re,im,...");
    cmd->add_option("--r", spec.r, "squeeze parameter");
  }
}

json read_config(const std::string& path) {
  if (path.empty()) return json::object();
  std::ifstream in(path);
  if (!in) throw gfid::InvalidArgument("cannot open config file " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw gfid::InvalidArgument("config " + path + ": " + e.what());
  }
}

json parse_json_arg(const std::string& text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw gfid::InvalidArgument(std::string(what) + ": " + e.what());
  }
}

json parse_alphas(const std::string& text) {
  std::vector<double> flat;
  std::stringstream ss(text);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    try {
      std::size_t used = 0;
      flat.push_back(std::stod(cell, &used));
      if (used != cell.size()) throw std::invalid_argument(cell);
    } catch (const std::exception&) {
      throw gfid::InvalidArgument("--alphas: bad number \"" + cell + "\"");
    }
  }
  if (flat.empty() || flat.size() % 2 != 0) throw gfid::InvalidArgument("--alphas expects re,im pairs");
  json out = json::array();
  for (std::size_t i = 0; i < flat.size(); i += 2) out.push_back({flat[i], flat[i + 1]});
  return out;
}

// Resolved JSON document with "channel", "state" and optionally "oracle".
json resolve(const InlineSpec& spec) {
  json doc = read_config(spec.config_path);
  if (!doc.is_object()) throw gfid::InvalidArgument("config must be a JSON object");
  if (!spec.channel.empty()) {
    json c{{"type", spec.channel}};
    if (spec.eta) c["eta"] = *spec.eta;
    if (spec.noise) c["N"] = *spec.noise;
    if (spec.correlation) c["x"] = *spec.correlation;
    if (spec.modes) c["n"] = *spec.modes;
    if (!spec.a_json.empty()) c["A"] = parse_json_arg(spec.a_json, "--A");
    if (!spec.g_json.empty()) c["G"] = parse_json_arg(spec.g_json, "--G");
    doc["channel"] = c;
  }
  if (!spec.state.empty()) {
    json s{{"type", spec.state}};
    if (!spec.alphas.empty()) s["alphas"] = parse_alphas(spec.alphas);
    if (spec.r) s["r"] = *spec.r;
    if (spec.modes) s["n"] = *spec.modes;
    doc["state"] = s;
  }
  if (!doc.contains("channel")) throw gfid::InvalidArgument("no channel given (use --channel or --config)");
  return doc;
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

void warn_cp(const gfid::GaussianChannel& channel) {
  const auto report = gfid::validate(channel);
  if (!report.cp_condition) {
    std::cerr << "warning: channel violates the complete-positivity condition (min eigenvalue "
              << fmt(report.cp_min_eig) << ")\n";
  }
}

gfid::Problem problem_from(const json& doc) {
  if (!doc.contains("state")) throw gfid::InvalidArgument("no state given (use --state or --config)");
  return gfid::build_problem(gfid::parse_channel_spec(doc["channel"]), gfid::parse_state_spec(doc["state"]));
}

int cmd_fidelity(const InlineSpec& spec, bool as_json) {
  const auto problem = problem_from(resolve(spec));
  warn_cp(problem.channel);
  const auto f = gfid::channel_fidelity(problem.channel, problem.state);
  if (as_json) {
    std::cout << json{{"fidelity", f.value},
                      {"det_factor", f.det_factor},
                      {"disp_factor", f.disp_factor},
                      {"matrix_condition", f.matrix_condition}}
                     .dump()
              << "\n";
  } else {
    std::cout << "fidelity: " << fmt(f.value) << "\n"
              << "det_factor: " << fmt(f.det_factor) << "\n"
              << "disp_factor: " << fmt(f.disp_factor) << "\n"
              << "matrix_condition: " << fmt(f.matrix_condition) << "\n";
  }
  return kOk;
}

int cmd_validate(const InlineSpec& spec) {
  const json doc = resolve(spec);
  gfid::StateSpec state;
  if (doc.contains("state")) state = gfid::parse_state_spec(doc["state"]);
  const auto channel_spec = gfid::parse_channel_spec(doc["channel"]);
  const auto channel = gfid::build_problem(channel_spec, state).channel;
  const auto report = gfid::validate(channel);
  std::cout << "modes: " << channel.modes() << "\n"
            << "noise_condition: " << (report.paper_condition ? "OK" : "FAIL") << " (min eigenvalue of G "
            << fmt(report.g_min_eig) << ")\n"
            << "cp_condition: " << (report.cp_condition ? "OK" : "FAIL") << " (min eigenvalue "
            << fmt(report.cp_min_eig) << ")\n";
  if (!report.cp_condition) std::cerr << "warning: channel violates the complete-positivity condition\n";
  return report.paper_condition ? kOk : kInvalidChannel;
}

struct OracleFlags {
  std::string method;
  std::optional<double> half_width, tolerance;
  std::optional<int> points;
  std::optional<std::int64_t> samples;
  std::optional<std::uint64_t> seed;
};

int cmd_oracle(const InlineSpec& spec, const OracleFlags& flags) {
  const json doc = resolve(spec);
  json oracle_doc = doc.value("oracle", json::object());
  if (!flags.method.empty()) oracle_doc["method"] = flags.method;
  if (flags.half_width) oracle_doc["L"] = *flags.half_width;
  if (flags.points) oracle_doc["m"] = *flags.points;
  if (flags.tolerance) oracle_doc["tol"] = *flags.tolerance;
  if (flags.samples) oracle_doc["samples"] = *flags.samples;
  if (flags.seed) oracle_doc["seed"] = *flags.seed;
  const auto settings = gfid::parse_oracle_settings(oracle_doc);
  const auto problem = problem_from(doc);
  warn_cp(problem.channel);

  const double analytic = gfid::channel_fidelity(problem.channel, problem.state).value;
  const int threads = gfid::default_parallelism();
  bool ok = false;
  if (settings.method == gfid::OracleMethod::quad) {
    const double q = gfid::quad_fidelity(problem.channel, problem.state, settings.grid, threads);
    const double diff = std::abs(q - analytic);
    ok = diff <= settings.tolerance;
    std::cout << "method: quad (L=" << fmt(settings.grid.half_width) << ", m=" << settings.grid.points_per_axis
              << ")\n"
              << "analytic: " << fmt(analytic) << "\n"
              << "oracle: " << fmt(q) << "\n"
              << "abs_diff: " << fmt(diff) << "\n"
              << "tolerance: " << fmt(settings.tolerance) << "\n";
  } else {
    const auto est = gfid::mc_fidelity(problem.channel, problem.state, settings.mc, threads);
    const double diff = std::abs(est.estimate - analytic);
    ok = diff <= 4.0 * est.std_error;
    std::cout << "method: mc (samples=" << settings.mc.samples << ", seed=" << settings.mc.seed << ")\n"
              << "analytic: " << fmt(analytic) << "\n"
              << "oracle: " << fmt(est.estimate) << "\n"
              << "abs_diff: " << fmt(diff) << "\n"
              << "std_error: " << fmt(est.std_error) << "\n";
  }
  std::cout << (ok ? "AGREE" : "DISAGREE") << "\n";
  return ok ? kOk : kOracleMismatch;
}

int cmd_sweep(const std::string& config_path, const std::string& out_path, const std::string& format,
              std::optional<int> parallelism) {
  const auto spec = gfid::parse_sweep_spec(read_config(config_path));
  const int threads = parallelism.value_or(gfid::default_parallelism());
  const auto table = gfid::run_sweep(spec, threads);
  const std::string text = format == "json" ? gfid::to_json(table) : gfid::to_csv(table);

  std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
  if (!out) throw WriteError("cannot open " + out_path + " for writing");
  out << text;
  out.flush();
  if (!out) throw WriteError("failed writing " + out_path);

  double lo = 1.0, hi = 0.0;
  for (const auto& row : table.rows) {
    lo = std::min(lo, row.fidelity);
    hi = std::max(hi, row.fidelity);
  }
  std::cout << "rows=" << table.rows.size() << " min_fidelity=" << fmt(lo) << " max_fidelity=" << fmt(hi) << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Input-output fidelity of bosonic Gaussian channels with pure Gaussian inputs"};
  app.require_subcommand(1);

  InlineSpec fid_spec;
  bool fid_json = false;
  auto* fidelity = app.add_subcommand("fidelity", "Closed-form channel fidelity");
  add_spec_options(fidelity, fid_spec, true);
  fidelity->add_flag("--json", fid_json, "Emit a JSON object instead of text");

  InlineSpec val_spec;
  auto* validate = app.add_subcommand("validate", "Check the noise-matrix and complete-positivity conditions");
  add_spec_options(validate, val_spec, true);

  InlineSpec orc_spec;
  OracleFlags orc_flags;
  auto* oracle = app.add_subcommand("oracle", "Cross-check the closed form against a numerical oracle");
  add_spec_options(oracle, orc_spec, true);
  oracle->add_option("--method", orc_flags.method, "quad|mc")->check(CLI::IsMember({"quad", "mc"}));
  oracle->add_option("--L", orc_flags.half_width, "quadrature half width");
  oracle->add_option("--m", orc_flags.points, "quadrature points per axis");
  oracle->add_option("--tol", orc_flags.tolerance, "quadrature agreement tolerance");
  oracle->add_option("--samples", orc_flags.samples, "Monte-Carlo sample count");
  oracle->add_option("--seed", orc_flags.seed, "Monte-Carlo seed");

  std::string sweep_config, sweep_out, sweep_format = "csv";
  std::optional<int> sweep_threads;
  auto* sweep = app.add_subcommand("sweep", "Evaluate a parameter grid and write a table");
  sweep->add_option("--config", sweep_config, "sweep JSON config")->required();
  sweep->add_option("--out", sweep_out, "output file")->required();
  sweep->add_option("--format", sweep_format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
  sweep->add_option("--parallelism", sweep_threads, "worker count (default: GF_THREADS or core count)")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (fidelity->parsed()) return cmd_fidelity(fid_spec, fid_json);
    if (validate->parsed()) return cmd_validate(val_spec);
    if (oracle->parsed()) return cmd_oracle(orc_spec, orc_flags);
    if (sweep->parsed()) return cmd_sweep(sweep_config, sweep_out, sweep_format, sweep_threads);
  } catch (const WriteError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kWriteFailure;
  } catch (const gfid::PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kPrecondition;
  } catch (const gfid::InvalidState& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kPrecondition;
  } catch (const gfid::SingularMatrix& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kPrecondition;
  } catch (const gfid::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gfid/config.hpp"
#include "gfid/parallel.hpp"

namespace gfid {

struct SweptParameter {
  std::string name;
  std::vector<double> values;
};

struct SweepSpec {
  ChannelSpec channel;
  StateSpec state;
  std::vector<SweptParameter> swept;
  std::optional<OracleSettings> oracle;
};

inline constexpr std::size_t kMaxSweepRows = 1'000'000;

struct SweepRow {
  std::vector<double> params;
  double fidelity;
  double det_factor;
  double disp_factor;
  std::optional<double> oracle;
  std::optional<double> oracle_err;
};

struct SweepTable {
  std::vector<std::string> param_names;
  bool has_oracle = false;
  std::vector<SweepRow> rows;
};

/// Parses {"channel": ..., "state": ..., "sweep": [...], "oracle": ...}.
/// Each sweep entry is {"name", "values": [...]} or {"name", "start", "stop",
/// "count"}. Rejects unknown parameter names and products above kMaxSweepRows.
SweepSpec parse_sweep_spec(const nlohmann::json& j);

std::size_t sweep_size(const SweepSpec& spec);

/// Evaluates the cartesian product in row-major order (last parameter varies
/// fastest). Rows are evaluated on `threads` workers; output order and values
/// do not depend on the worker count. MC oracles seed row i with
/// mix_seed(root seed, i).
SweepTable run_sweep(const SweepSpec& spec, int threads);

std::string to_csv(const SweepTable& table);
std::string to_json(const SweepTable& table);
SweepTable parse_csv(const std::string& text);

}  // namespace gfid

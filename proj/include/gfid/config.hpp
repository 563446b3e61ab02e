#pragma once

#include <complex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "gfid/channels.hpp"
#include "gfid/oracle.hpp"
#include "gfid/states.hpp"

namespace gfid {

enum class ChannelType { identity, amplifier, attenuator, classical_noise, memory, custom };
enum class StateType { vacuum, coherent, tmsv, squeezed, custom };

/// Channel description as read from a JSON config or CLI flags.
struct ChannelSpec {
  ChannelType type = ChannelType::identity;
  double eta = 1.0;
  double noise = 0.0;
  double correlation = 0.0;
  std::optional<int> modes;  // identity only
  std::optional<Matrix> a;   // custom
  std::optional<Matrix> g;   // custom, classical_noise
};

struct StateSpec {
  StateType type = StateType::vacuum;
  std::vector<std::complex<double>> alphas;
  double r = 0.0;
  std::optional<int> modes;  // vacuum only
  std::optional<Matrix> covariance;     // custom
  std::optional<Vector> displacement;   // custom, zero when absent
};

/// Mode count implied by the spec alone, if any.
std::optional<int> implied_modes(const ChannelSpec& spec);
std::optional<int> implied_modes(const StateSpec& spec);

/// All parse functions throw InvalidArgument on malformed input.
ChannelSpec parse_channel_spec(const nlohmann::json& j);
StateSpec parse_state_spec(const nlohmann::json& j);
Matrix parse_matrix(const nlohmann::json& j);

std::string_view to_string(ChannelType t);
std::string_view to_string(StateType t);
ChannelType parse_channel_type(std::string_view name);
StateType parse_state_type(std::string_view name);

/// Builds a consistent (channel, state) pair. Families without an intrinsic
/// mode count (identity, vacuum without "n") take it from the other side.
struct Problem {
  GaussianChannel channel;
  GaussianState state;
};
Problem build_problem(const ChannelSpec& channel, const StateSpec& state);

/// Sets a sweepable scalar ("eta", "N", "x" on the channel, "r" on the
/// state). Throws InvalidArgument when the family has no such parameter.
void set_parameter(ChannelSpec& channel, StateSpec& state, std::string_view name, double value);
bool accepts_parameter(const ChannelSpec& channel, const StateSpec& state, std::string_view name);

enum class OracleMethod { quad, mc };

struct OracleSettings {
  OracleMethod method = OracleMethod::quad;
  QuadratureGrid grid;
  double tolerance = 1e-6;  // quad agreement threshold
  McConfig mc{1'000'000, 42};
};

OracleSettings parse_oracle_settings(const nlohmann::json& j);

/// Shortest decimal string that parses back to exactly `v`.
std::string format_double(double v);

}  // namespace gfid

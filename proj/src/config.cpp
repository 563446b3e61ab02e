#include "gfid/config.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <string>

#include "gfid/errors.hpp"

namespace gfid {

using nlohmann::json;

namespace {

double number(const json& j, const char* key, const char* family) {
  const auto it = j.find(key);
  if (it == j.end()) throw InvalidArgument(std::string(family) + " requires \"" + key + "\"");
  if (!it->is_number()) throw InvalidArgument(std::string("\"") + key + "\" must be a number");
  return it->get<double>();
}

std::optional<int> optional_modes(const json& j) {
  const auto it = j.find("n");
  if (it == j.end()) return std::nullopt;
  if (!it->is_number_integer() || it->get<int>() < 1) throw InvalidArgument("\"n\" must be a positive integer");
  return it->get<int>();
}

void check_object(const json& j, const char* what) {
  if (!j.is_object()) throw InvalidArgument(std::string(what) + " spec must be a JSON object");
  if (!j.contains("type") || !j["type"].is_string()) {
    throw InvalidArgument(std::string(what) + " spec requires a string \"type\"");
  }
}

}  // namespace

std::string_view to_string(ChannelType t) {
  switch (t) {
    case ChannelType::identity: return "identity";
    case ChannelType::amplifier: return "amplifier";
    case ChannelType::attenuator: return "attenuator";
    case ChannelType::classical_noise: return "classical_noise";
    case ChannelType::memory: return "memory";
    case ChannelType::custom: return "custom";
  }
  return "?";
}

std::string_view to_string(StateType t) {
  switch (t) {
    case StateType::vacuum: return "vacuum";
    case StateType::coherent: return "coherent";
    case StateType::tmsv: return "tmsv";
    case StateType::squeezed: return "squeezed";
    case StateType::custom: return "custom";
  }
  return "?";
}

ChannelType parse_channel_type(std::string_view name) {
  for (auto t : {ChannelType::identity, ChannelType::amplifier, ChannelType::attenuator, ChannelType::classical_noise,
                 ChannelType::memory, ChannelType::custom}) {
    if (to_string(t) == name) return t;
  }
  throw InvalidArgument("unknown channel type \"" + std::string(name) + "\"");
}

StateType parse_state_type(std::string_view name) {
  for (auto t : {StateType::vacuum, StateType::coherent, StateType::tmsv, StateType::squeezed, StateType::custom}) {
    if (to_string(t) == name) return t;
  }
  throw InvalidArgument("unknown state type \"" + std::string(name) + "\"");
}

Matrix parse_matrix(const json& j) {
  if (!j.is_array() || j.empty()) throw InvalidArgument("matrix must be a non-empty array of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  if (!j[0].is_array() || j[0].empty()) throw InvalidArgument("matrix rows must be non-empty arrays");
  const auto cols = static_cast<Eigen::Index>(j[0].size());
  Matrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const auto& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) {
      throw InvalidArgument("matrix rows must all have the same length");
    }
    for (Eigen::Index k = 0; k < cols; ++k) {
      const auto& v = row[static_cast<std::size_t>(k)];
      if (!v.is_number()) throw InvalidArgument("matrix entries must be numbers");
      m(i, k) = v.get<double>();
    }
  }
  return m;
}

ChannelSpec parse_channel_spec(const json& j) {
  check_object(j, "channel");
  ChannelSpec spec;
  spec.type = parse_channel_type(j["type"].get<std::string>());
  switch (spec.type) {
    case ChannelType::identity:
      spec.modes = optional_modes(j);
      break;
    case ChannelType::amplifier:
    case ChannelType::attenuator:
      spec.eta = number(j, "eta", "amplifier/attenuator channel");
      break;
    case ChannelType::memory:
      spec.noise = number(j, "N", "memory channel");
      spec.correlation = number(j, "x", "memory channel");
      break;
    case ChannelType::classical_noise:
      if (!j.contains("G")) throw InvalidArgument("classical_noise channel requires \"G\"");
      spec.g = parse_matrix(j["G"]);
      break;
    case ChannelType::custom:
      if (!j.contains("A") || !j.contains("G")) throw InvalidArgument("custom channel requires \"A\" and \"G\"");
      spec.a = parse_matrix(j["A"]);
      spec.g = parse_matrix(j["G"]);
      break;
  }
  return spec;
}

StateSpec parse_state_spec(const json& j) {
  check_object(j, "state");
  StateSpec spec;
  spec.type = parse_state_type(j["type"].get<std::string>());
  switch (spec.type) {
    case StateType::vacuum:
      spec.modes = optional_modes(j);
      break;
    case StateType::coherent: {
      const auto it = j.find("alphas");
      if (it == j.end() || !it->is_array() || it->empty()) {
        throw InvalidArgument("coherent state requires a non-empty \"alphas\" array");
      }
      for (const auto& a : *it) {
        if (a.is_number()) {
          spec.alphas.emplace_back(a.get<double>(), 0.0);
        } else if (a.is_array() && a.size() == 2 && a[0].is_number() && a[1].is_number()) {
          spec.alphas.emplace_back(a[0].get<double>(), a[1].get<double>());
        } else {
          throw InvalidArgument("each alpha must be a number or a [re, im] pair");
        }
      }
      break;
    }
    case StateType::tmsv:
    case StateType::squeezed:
      spec.r = number(j, "r", "squeezed state");
      break;
    case StateType::custom: {
      if (!j.contains("Gamma")) throw InvalidArgument("custom state requires \"Gamma\"");
      spec.covariance = parse_matrix(j["Gamma"]);
      if (j.contains("D")) {
        const auto& d = j["D"];
        if (!d.is_array()) throw InvalidArgument("\"D\" must be an array of numbers");
        Vector v(static_cast<Eigen::Index>(d.size()));
        for (std::size_t i = 0; i < d.size(); ++i) {
          if (!d[i].is_number()) throw InvalidArgument("\"D\" must be an array of numbers");
          v(static_cast<Eigen::Index>(i)) = d[i].get<double>();
        }
        spec.displacement = std::move(v);
      }
      break;
    }
  }
  return spec;
}

std::optional<int> implied_modes(const ChannelSpec& spec) {
  switch (spec.type) {
    case ChannelType::identity: return spec.modes;
    case ChannelType::amplifier:
    case ChannelType::attenuator: return 1;
    case ChannelType::memory: return 2;
    case ChannelType::classical_noise:
    case ChannelType::custom: return spec.g ? std::optional<int>(static_cast<int>(spec.g->rows() / 2)) : std::nullopt;
  }
  return std::nullopt;
}

std::optional<int> implied_modes(const StateSpec& spec) {
  switch (spec.type) {
    case StateType::vacuum: return spec.modes;
    case StateType::coherent: return static_cast<int>(spec.alphas.size());
    case StateType::tmsv: return 2;
    case StateType::squeezed: return 1;
    case StateType::custom:
      return spec.covariance ? std::optional<int>(static_cast<int>(spec.covariance->rows() / 2)) : std::nullopt;
  }
  return std::nullopt;
}

Problem build_problem(const ChannelSpec& cs, const StateSpec& ss) {
  const int fallback = implied_modes(cs).value_or(implied_modes(ss).value_or(1));
  const auto channel = [&]() -> GaussianChannel {
    switch (cs.type) {
      case ChannelType::identity: return identity_channel(cs.modes.value_or(implied_modes(ss).value_or(1)));
      case ChannelType::amplifier: return amplifier(cs.eta);
      case ChannelType::attenuator: return attenuator(cs.eta);
      case ChannelType::memory: return memory_channel({cs.noise, cs.correlation});
      case ChannelType::classical_noise: return classical_noise(*cs.g);
      case ChannelType::custom: return GaussianChannel(*cs.a, *cs.g);
    }
    throw InvalidArgument("unsupported channel type");
  }();
  const auto state = [&]() -> GaussianState {
    switch (ss.type) {
      case StateType::vacuum: return vacuum(ss.modes.value_or(fallback));
      case StateType::coherent: return coherent(ss.alphas);
      case StateType::tmsv: return two_mode_squeezed(ss.r);
      case StateType::squeezed: return squeezed_vacuum(ss.r);
      case StateType::custom:
        return GaussianState(*ss.covariance, ss.displacement.value_or(Vector::Zero(ss.covariance->rows())));
    }
    throw InvalidArgument("unsupported state type");
  }();
  if (channel.modes() != state.modes()) {
    throw InvalidArgument("channel acts on " + std::to_string(channel.modes()) + " mode(s) but the state has " +
                          std::to_string(state.modes()));
  }
  return {channel, state};
}

bool accepts_parameter(const ChannelSpec& channel, const StateSpec& state, std::string_view name) {
  if (name == "eta") return channel.type == ChannelType::amplifier || channel.type == ChannelType::attenuator;
  if (name == "N" || name == "x") return channel.type == ChannelType::memory;
  if (name == "r") return state.type == StateType::tmsv || state.type == StateType::squeezed;
  return false;
}

void set_parameter(ChannelSpec& channel, StateSpec& state, std::string_view name, double value) {
  if (!accepts_parameter(channel, state, name)) {
    throw InvalidArgument("parameter \"" + std::string(name) + "\" is not accepted by channel \"" +
                          std::string(to_string(channel.type)) + "\" / state \"" + std::string(to_string(state.type)) +
                          "\"");
  }
  if (name == "eta") channel.eta = value;
  else if (name == "N") channel.noise = value;
  else if (name == "x") channel.correlation = value;
  else state.r = value;
}

OracleSettings parse_oracle_settings(const json& j) {
  if (!j.is_object()) throw InvalidArgument("oracle settings must be a JSON object");
  OracleSettings s;
  const std::string method = j.value("method", std::string("quad"));
  if (method == "quad") s.method = OracleMethod::quad;
  else if (method == "mc") s.method = OracleMethod::mc;
  else throw InvalidArgument("oracle method must be \"quad\" or \"mc\"");
  try {
    s.grid.half_width = j.value("L", s.grid.half_width);
    s.grid.points_per_axis = j.value("m", s.grid.points_per_axis);
    s.tolerance = j.value("tol", s.tolerance);
    s.mc.samples = j.value("samples", s.mc.samples);
    s.mc.seed = j.value("seed", s.mc.seed);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("oracle settings: ") + e.what());
  }
  return s;
}

std::string format_double(double v) {
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return {buf.data(), res.ptr};
}

}  // namespace gfid

#include "gfid/sweep.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "gfid/errors.hpp"
#include "gfid/fidelity.hpp"

using namespace gfid;
using nlohmann::json;

namespace {

json memory_config() {
  return json::parse(R"({
    "channel": {"type": "memory", "N": 1.0, "x": 0.0},
    "state": {"type": "coherent", "alphas": [[0, 0], [0, 0]]}
  })");
}

}  // namespace

TEST(ParseSpecs, channel_and_state) {
  const auto c = parse_channel_spec(json::parse(R"({"type": "custom", "A": [[1,0],[0,1]], "G": [[0.5,0],[0,0.5]]})"));
  EXPECT_EQ(c.type, ChannelType::custom);
  EXPECT_EQ(c.g->rows(), 2);
  const auto s = parse_state_spec(json::parse(R"({"type": "coherent", "alphas": [[1, 2], 3]})"));
  ASSERT_EQ(s.alphas.size(), 2u);
  EXPECT_EQ(s.alphas[0], std::complex<double>(1, 2));
  EXPECT_EQ(s.alphas[1], std::complex<double>(3, 0));

  EXPECT_THROW(parse_channel_spec(json::parse(R"({"type": "teleporter"})")), InvalidArgument);
  EXPECT_THROW(parse_channel_spec(json::parse(R"({"type": "memory", "N": 1})")), InvalidArgument);
  EXPECT_THROW(parse_channel_spec(json::parse(R"({"type": "custom", "A": [[1,0],[0]], "G": [[0]]})")),
               InvalidArgument);
  EXPECT_THROW(parse_state_spec(json::parse(R"({"type": "coherent", "alphas": []})")), InvalidArgument);
  EXPECT_THROW(parse_state_spec(json::parse(R"([1, 2])")), InvalidArgument);
}

TEST(BuildProblem, infers_mode_counts) {
  ChannelSpec identity;
  StateSpec tmsv{StateType::tmsv, {}, 0.3, std::nullopt};
  EXPECT_EQ(build_problem(identity, tmsv).channel.modes(), 2);

  ChannelSpec memory{ChannelType::memory, 1.0, 0.5, 0.5, std::nullopt, std::nullopt, std::nullopt};
  StateSpec vac;
  EXPECT_EQ(build_problem(memory, vac).state.modes(), 2);

  ChannelSpec amp{ChannelType::amplifier, 2.0, 0.0, 0.0, std::nullopt, std::nullopt, std::nullopt};
  EXPECT_THROW(build_problem(amp, tmsv), InvalidArgument);
}

TEST(Sweep, x_grid_runs_between_memory_bounds) {
  auto cfg = memory_config();
  cfg["sweep"] = json::parse(R"([{"name": "x", "start": 0, "stop": 1, "count": 11}])");
  const auto table = run_sweep(parse_sweep_spec(cfg), 2);
  ASSERT_EQ(table.rows.size(), 11u);
  EXPECT_EQ(table.rows.front().params[0], 0.0);
  EXPECT_EQ(table.rows.back().params[0], 1.0);
  EXPECT_NEAR(table.rows.front().fidelity, 0.25, 1e-12);
  EXPECT_NEAR(table.rows.back().fidelity, 1.0 / 3.0, 1e-12);
  for (std::size_t i = 1; i < table.rows.size(); ++i) EXPECT_GT(table.rows[i].fidelity, table.rows[i - 1].fidelity);
}

TEST(Sweep, n_grid_matches_memoryless_formula) {
  auto cfg = memory_config();
  cfg["sweep"] = json::parse(R"([{"name": "N", "values": [0, 0.5, 1, 2, 5]}])");
  for (const auto& row : run_sweep(parse_sweep_spec(cfg), 1).rows) {
    const double n = row.params[0];
    EXPECT_NEAR(row.fidelity, 1.0 / ((n + 1) * (n + 1)), 1e-12);
  }
}

TEST(Sweep, empty_sweep_gives_single_row) {
  const auto table = run_sweep(parse_sweep_spec(memory_config()), 1);
  ASSERT_EQ(table.rows.size(), 1u);
  EXPECT_TRUE(table.param_names.empty());
  EXPECT_EQ(to_csv(table).substr(0, to_csv(table).find('\n')), "fidelity,det_factor,disp_factor");
}

TEST(Sweep, last_parameter_varies_fastest) {
  auto cfg = memory_config();
  cfg["state"] = json::parse(R"({"type": "tmsv", "r": 0})");
  cfg["sweep"] = json::parse(R"([{"name": "N", "values": [0.5, 1]}, {"name": "r", "values": [0, 0.5, 1]}])");
  const auto table = run_sweep(parse_sweep_spec(cfg), 3);
  ASSERT_EQ(table.rows.size(), 6u);
  EXPECT_EQ(table.rows[0].params, (std::vector<double>{0.5, 0.0}));
  EXPECT_EQ(table.rows[1].params, (std::vector<double>{0.5, 0.5}));
  EXPECT_EQ(table.rows[3].params, (std::vector<double>{1.0, 0.0}));
  for (const auto& row : table.rows) {
    EXPECT_NEAR(row.fidelity, closed_form_entangled(row.params[0], 0.0, row.params[1]), 1e-12);
  }
}

TEST(Sweep, rejects_bad_specs) {
  auto cfg = memory_config();
  cfg["sweep"] = json::parse(R"([{"name": "eta", "values": [1, 2]}])");
  EXPECT_THROW(parse_sweep_spec(cfg), InvalidArgument);
  cfg["sweep"] = json::parse(R"([{"name": "N", "start": 0, "stop": 1, "count": 1001},
                                 {"name": "x", "start": 0, "stop": 1, "count": 1001}])");
  EXPECT_THROW(parse_sweep_spec(cfg), InvalidArgument);
  cfg["sweep"] = json::parse(R"([{"name": "x", "values": []}])");
  EXPECT_THROW(parse_sweep_spec(cfg), InvalidArgument);
}

TEST(Sweep, output_independent_of_parallelism) {
  auto cfg = memory_config();
  cfg["sweep"] = json::parse(R"([{"name": "N", "values": [0.5, 1]}, {"name": "x", "values": [0, 0.5, 1]}])");
  cfg["oracle"] = json::parse(R"({"method": "mc", "samples": 20000, "seed": 11})");
  const auto spec = parse_sweep_spec(cfg);
  const auto one = run_sweep(spec, 1);
  const auto four = run_sweep(spec, 4);
  EXPECT_EQ(to_csv(one), to_csv(four));
  EXPECT_EQ(to_json(one), to_json(four));
  for (const auto& row : one.rows) {
    EXPECT_LE(std::abs(*row.oracle - row.fidelity), 5.0 * *row.oracle_err);
  }
}

TEST(Sweep, csv_round_trip) {
  auto cfg = memory_config();
  cfg["state"] = json::parse(R"({"type": "tmsv", "r": 0})");
  cfg["sweep"] = json::parse(R"([{"name": "x", "start": 0, "stop": 1, "count": 7},
                                 {"name": "r", "start": -0.3, "stop": 1.1, "count": 5}])");
  cfg["oracle"] = json::parse(R"({"method": "quad", "L": 5, "m": 16})");
  const auto table = run_sweep(parse_sweep_spec(cfg), 2);
  const auto back = parse_csv(to_csv(table));
  EXPECT_EQ(back.param_names, table.param_names);
  EXPECT_TRUE(back.has_oracle);
  ASSERT_EQ(back.rows.size(), table.rows.size());
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    EXPECT_EQ(back.rows[i].params, table.rows[i].params);
    EXPECT_EQ(back.rows[i].fidelity, table.rows[i].fidelity);
    EXPECT_EQ(back.rows[i].det_factor, table.rows[i].det_factor);
    EXPECT_EQ(back.rows[i].disp_factor, table.rows[i].disp_factor);
    EXPECT_EQ(back.rows[i].oracle, table.rows[i].oracle);
    EXPECT_EQ(back.rows[i].oracle_err, table.rows[i].oracle_err);
  }
}

TEST(FormatDouble, shortest_round_trip) {
  EXPECT_EQ(format_double(0.25), "0.25");
  EXPECT_EQ(format_double(1.0), "1");
  EXPECT_EQ(format_double(0.1), "0.1");
  const double third = 1.0 / 3.0;
  EXPECT_EQ(std::stod(format_double(third)), third);
}

TEST(MixSeed, distinct_and_stable) {
  EXPECT_EQ(mix_seed(0, 0), mix_seed(0, 0));
  EXPECT_NE(mix_seed(0, 0), mix_seed(0, 1));
  EXPECT_NE(mix_seed(1, 0), mix_seed(0, 0));
}

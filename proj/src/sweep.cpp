#include "gfid/sweep.hpp"

#include <charconv>
#include <sstream>

#include "gfid/errors.hpp"
#include "gfid/fidelity.hpp"
#include "gfid/parallel.hpp"

namespace gfid {

using nlohmann::json;

namespace {

std::vector<double> parse_values(const json& entry, const std::string& name) {
  if (entry.contains("values")) {
    const auto& v = entry["values"];
    if (!v.is_array() || v.empty()) throw InvalidArgument("sweep \"" + name + "\": values must be a non-empty array");
    std::vector<double> out;
    for (const auto& x : v) {
      if (!x.is_number()) throw InvalidArgument("sweep \"" + name + "\": values must be numbers");
      out.push_back(x.get<double>());
    }
    return out;
  }
  for (const char* key : {"start", "stop", "count"}) {
    if (!entry.contains(key) || !entry[key].is_number()) {
      throw InvalidArgument("sweep \"" + name + "\": need \"values\" or numeric start/stop/count");
    }
  }
  if (!entry["count"].is_number_integer() || entry["count"].get<std::int64_t>() < 1) {
    throw InvalidArgument("sweep \"" + name + "\": count must be a positive integer");
  }
  const double start = entry["start"].get<double>();
  const double stop = entry["stop"].get<double>();
  const auto count = entry["count"].get<std::int64_t>();
  if (static_cast<std::size_t>(count) > kMaxSweepRows) {
    throw InvalidArgument("sweep \"" + name + "\": count exceeds the row limit");
  }
  std::vector<double> out(static_cast<std::size_t>(count));
  for (std::int64_t i = 0; i < count; ++i) {
    // Endpoints are hit exactly.
    out[static_cast<std::size_t>(i)] =
        count == 1 ? start : (i == count - 1 ? stop : start + (stop - start) * static_cast<double>(i) / (count - 1));
  }
  return out;
}

double parse_number(const std::string& s) {
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) throw InvalidArgument("csv: bad number \"" + s + "\"");
  return v;
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

}  // namespace

SweepSpec parse_sweep_spec(const json& j) {
  if (!j.is_object()) throw InvalidArgument("sweep config must be a JSON object");
  if (!j.contains("channel") || !j.contains("state")) {
    throw InvalidArgument("sweep config requires \"channel\" and \"state\"");
  }
  SweepSpec spec;
  spec.channel = parse_channel_spec(j["channel"]);
  spec.state = parse_state_spec(j["state"]);
  if (j.contains("sweep")) {
    const auto& list = j["sweep"];
    if (!list.is_array()) throw InvalidArgument("\"sweep\" must be an array");
    for (const auto& entry : list) {
      if (!entry.is_object() || !entry.contains("name") || !entry["name"].is_string()) {
        throw InvalidArgument("each sweep entry needs a string \"name\"");
      }
      SweptParameter p{entry["name"].get<std::string>(), {}};
      if (!accepts_parameter(spec.channel, spec.state, p.name)) {
        throw InvalidArgument("swept parameter \"" + p.name + "\" is not accepted by the chosen channel/state");
      }
      for (const auto& other : spec.swept) {
        if (other.name == p.name) throw InvalidArgument("parameter \"" + p.name + "\" is swept twice");
      }
      p.values = parse_values(entry, p.name);
      spec.swept.push_back(std::move(p));
    }
  }
  if (j.contains("oracle") && !j["oracle"].is_null()) spec.oracle = parse_oracle_settings(j["oracle"]);
  if (sweep_size(spec) > kMaxSweepRows) throw InvalidArgument("sweep exceeds 1e6 rows");
  return spec;
}

std::size_t sweep_size(const SweepSpec& spec) {
  std::size_t total = 1;
  for (const auto& p : spec.swept) {
    if (p.values.empty()) return 0;
    if (total > kMaxSweepRows / p.values.size()) return kMaxSweepRows + 1;
    total *= p.values.size();
  }
  return total;
}

SweepTable run_sweep(const SweepSpec& spec, int threads) {
  const std::size_t total = sweep_size(spec);
  if (total > kMaxSweepRows) throw InvalidArgument("sweep exceeds 1e6 rows");
  SweepTable table;
  for (const auto& p : spec.swept) table.param_names.push_back(p.name);
  table.has_oracle = spec.oracle.has_value();
  table.rows.resize(total);

  parallel_for(total, threads, [&](std::size_t row) {
    ChannelSpec cs = spec.channel;
    StateSpec ss = spec.state;
    SweepRow out{};
    out.params.resize(spec.swept.size());
    std::size_t rem = row;
    for (std::size_t k = spec.swept.size(); k-- > 0;) {
      const auto& p = spec.swept[k];
      const double v = p.values[rem % p.values.size()];
      rem /= p.values.size();
      out.params[k] = v;
      set_parameter(cs, ss, p.name, v);
    }
    const auto problem = build_problem(cs, ss);
    const auto f = channel_fidelity(problem.channel, problem.state);
    out.fidelity = f.value;
    out.det_factor = f.det_factor;
    out.disp_factor = f.disp_factor;
    if (spec.oracle) {
      const auto& o = *spec.oracle;
      if (o.method == OracleMethod::quad) {
        const double q = quad_fidelity(problem.channel, problem.state, o.grid, 1);
        out.oracle = q;
        out.oracle_err = std::abs(q - f.value);
      } else {
        McConfig cfg = o.mc;
        cfg.seed = mix_seed(o.mc.seed, row);
        const auto est = mc_fidelity(problem.channel, problem.state, cfg, 1);
        out.oracle = est.estimate;
        out.oracle_err = est.std_error;
      }
    }
    table.rows[row] = std::move(out);
  });
  return table;
}

std::string to_csv(const SweepTable& table) {
  std::string out;
  for (const auto& name : table.param_names) out += name + ",";
  out += "fidelity,det_factor,disp_factor";
  if (table.has_oracle) out += ",oracle,oracle_err";
  out += "\n";
  for (const auto& row : table.rows) {
    for (double v : row.params) out += format_double(v) + ",";
    out += format_double(row.fidelity) + "," + format_double(row.det_factor) + "," + format_double(row.disp_factor);
    if (table.has_oracle) {
      out += "," + format_double(row.oracle.value_or(0.0)) + "," + format_double(row.oracle_err.value_or(0.0));
    }
    out += "\n";
  }
  return out;
}

std::string to_json(const SweepTable& table) {
  json columns = table.param_names;
  for (const char* c : {"fidelity", "det_factor", "disp_factor"}) columns.push_back(c);
  if (table.has_oracle) {
    columns.push_back("oracle");
    columns.push_back("oracle_err");
  }
  json rows = json::array();
  for (const auto& row : table.rows) {
    json r = json::object();
    for (std::size_t k = 0; k < row.params.size(); ++k) r[table.param_names[k]] = row.params[k];
    r["fidelity"] = row.fidelity;
    r["det_factor"] = row.det_factor;
    r["disp_factor"] = row.disp_factor;
    if (table.has_oracle) {
      r["oracle"] = row.oracle.value_or(0.0);
      r["oracle_err"] = row.oracle_err.value_or(0.0);
    }
    rows.push_back(std::move(r));
  }
  return json{{"columns", columns}, {"rows", rows}}.dump(2) + "\n";
}

SweepTable parse_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw InvalidArgument("csv: missing header");
  const auto header = split(line);
  SweepTable table;
  std::size_t fixed = 3;
  table.has_oracle = header.size() >= 5 && header[header.size() - 2] == "oracle";
  if (table.has_oracle) fixed = 5;
  if (header.size() < fixed || header[header.size() - fixed] != "fidelity") {
    throw InvalidArgument("csv: unexpected header");
  }
  const std::size_t nparams = header.size() - fixed;
  table.param_names.assign(header.begin(), header.begin() + static_cast<std::ptrdiff_t>(nparams));
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto cells = split(line);
    if (cells.size() != header.size()) throw InvalidArgument("csv: row has the wrong number of columns");
    SweepRow row{};
    for (std::size_t k = 0; k < nparams; ++k) row.params.push_back(parse_number(cells[k]));
    row.fidelity = parse_number(cells[nparams]);
    row.det_factor = parse_number(cells[nparams + 1]);
    row.disp_factor = parse_number(cells[nparams + 2]);
    if (table.has_oracle) {
      row.oracle = parse_number(cells[nparams + 3]);
      row.oracle_err = parse_number(cells[nparams + 4]);
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace gfid

#include "boolnet/report.hpp"

#include <cmath>
#include <cstdio>

#include <json.hpp>

namespace boolnet {

using nlohmann::ordered_json;

namespace {

std::string fixed2(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", std::floor(v * 100.0 + 0.5) / 100.0);
  return buf;
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string states_text(const std::vector<std::uint64_t>& states, std::size_t width) {
  std::string out;
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (i) out += ", ";
    out += to_bitstring(states[i], width);
  }
  return out;
}

ordered_json states_json(const std::vector<std::uint64_t>& states, std::size_t width) {
  ordered_json arr = ordered_json::array();
  for (auto s : states) arr.push_back(to_bitstring(s, width));
  return arr;
}

std::string column_title(const AttractorReport& report, std::size_t i) {
  std::size_t fp = 0;
  std::size_t lc = 0;
  for (std::size_t k = 0; k <= i; ++k) {
    (report.attractors[k].kind() == AttractorKind::FixedPoint ? fp : lc)++;
  }
  return report.attractors[i].kind() == AttractorKind::FixedPoint ? "Steady state " + std::to_string(fp)
                                                                   : "Limit Cycle " + std::to_string(lc);
}

// Rows: node name, then one cell per attractor; cycle cells list per-state values.
std::vector<std::vector<std::string>> attractor_grid(const Network& net, const AttractorReport& report,
                                                     const TableOptions& options) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header{"Components"};
  for (std::size_t i = 0; i < report.attractors.size(); ++i) header.push_back(column_title(report, i));
  rows.push_back(header);

  // values[a][t] = node values of state t of attractor a
  std::vector<std::vector<std::vector<std::pair<std::string, bool>>>> values;
  for (const auto& a : report.attractors) {
    auto& per_state = values.emplace_back();
    for (auto s : a.states) per_state.push_back(node_values(net, State{s, net.width()}));
  }
  for (std::size_t n = 0; n < net.size(); ++n) {
    const bool output = net.is_output(n);
    if (output && !options.include_outputs) continue;
    std::vector<std::string> row{net.nodes()[n]};
    for (std::size_t a = 0; a < report.attractors.size(); ++a) {
      std::string cell;
      const bool cycle = report.attractors[a].kind() == AttractorKind::LimitCycle;
      for (std::size_t t = 0; t < values[a].size(); ++t) {
        if (t) cell += ' ';
        cell += output && cycle && options.dash_cycle_outputs ? "-" : (values[a][t][n].second ? "1" : "0");
      }
      row.push_back(cell);
    }
    rows.push_back(row);
  }
  std::vector<std::string> basin{"Attraction basin"};
  for (std::size_t i = 0; i < report.attractors.size(); ++i) basin.push_back(fixed2(report.basin_percent(i)));
  rows.push_back(basin);
  return rows;
}

}  // namespace

std::string attractors_json(const Network& net, const AttractorReport& report) {
  ordered_json j;
  j["network"] = report.network;
  j["schedule"] = report.schedule;
  j["width"] = report.width;
  j["state_count"] = report.state_count();
  j["state_nodes"] = report.state_nodes;
  j["pinned"] = net.pinned();
  j["fixed_points"] = report.fixed_point_count();
  j["limit_cycles"] = report.cycle_count();
  ordered_json list = ordered_json::array();
  for (std::size_t i = 0; i < report.attractors.size(); ++i) {
    const auto& a = report.attractors[i];
    ordered_json item;
    item["id"] = i;
    item["kind"] = a.kind() == AttractorKind::FixedPoint ? "fixed_point" : "limit_cycle";
    item["period"] = a.period();
    item["states"] = states_json(a.states, report.width);
    item["basin"] = a.basin;
    item["basin_percent"] = report.basin_percent(i);
    ordered_json phenos = ordered_json::array();
    for (auto s : a.states) {
      ordered_json p = ordered_json::object();
      for (const auto& [name, v] : phenotype_projection(net, State{s, net.width()})) p[name] = v ? 1 : 0;
      phenos.push_back(p);
    }
    item["phenotypes"] = phenos;
    list.push_back(item);
  }
  j["attractors"] = list;
  return j.dump(2) + "\n";
}

std::string attractors_csv(const Network& net, const AttractorReport& report, const TableOptions& options) {
  std::string out;
  for (const auto& row : attractor_grid(net, report, options)) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += ',';
      out += csv_cell(row[c]);
    }
    out += '\n';
  }
  return out;
}

std::string attractors_table(const Network& net, const AttractorReport& report, const TableOptions& options) {
  const auto rows = attractor_grid(net, report, options);
  std::vector<std::size_t> width(rows.front().size(), 0);
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::string out = "network " + (report.network.empty() ? std::string("-") : report.network) + ", schedule " +
                    report.schedule + ", " + std::to_string(report.state_count()) + " states\n";
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (r == 1 || r + 1 == rows.size()) {
      std::size_t total = 0;
      for (auto w : width) total += w + 2;
      out += std::string(total, '-') + '\n';
    }
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      out += rows[r][c];
      out += std::string(width[c] - rows[r][c].size() + 2, ' ');
    }
    while (!out.empty() && out.back() == ' ') out.pop_back();
    out += '\n';
  }
  return out;
}

std::string basins_csv(const BasinMap& basins) {
  std::string out = "state,attractor_id\n";
  const std::size_t w = basins.report.width;
  for (std::size_t s = 0; s < basins.attractor_of.size(); ++s) {
    out += to_bitstring(s, w) + ',' + std::to_string(basins.attractor_of[s]) + '\n';
  }
  return out;
}

std::string ensemble_steady_csv(const EnsembleStats& stats, std::size_t width) {
  std::string out = "Steady state Configuration,Average Basin Attraction,SD,Count\n";
  for (const auto& r : stats.fixed_points) {
    out += states_text(r.states, width) + ',' + fixed2(r.mean_basin()) + ',' + fixed2(r.sd_basin()) + ',' +
           std::to_string(r.count) + '\n';
  }
  return out;
}

std::string ensemble_cycles_csv(const EnsembleStats& stats, std::size_t width) {
  std::string out = "Limit cycle Configuration,Average Basin Attraction,SD,Count,Percent\n";
  for (const auto& r : stats.cycles) {
    out += csv_cell(states_text(r.states, width)) + ',' + fixed2(r.mean_basin()) + ',' + fixed2(r.sd_basin()) +
           ',' + std::to_string(r.count) + ',' + fixed2(stats.cycle_percent(r)) + '\n';
  }
  return out;
}

std::string ensemble_summary_json(const EnsembleStats& stats, std::size_t width) {
  ordered_json j;
  j["network"] = stats.network;
  j["schedules"] = stats.schedules;
  j["fixed_point_only"] = stats.fixed_point_only;
  j["fixed_point_only_percent"] = stats.fixed_point_only_percent();
  j["with_cycles"] = stats.with_cycles();
  ordered_json hist = ordered_json::object();
  for (const auto& [k, v] : stats.cycle_histogram) hist[std::to_string(k)] = v;
  j["cycle_histogram"] = hist;
  ordered_json lengths = ordered_json::object();
  for (const auto& [k, v] : stats.cycle_lengths) lengths[std::to_string(k)] = v;
  j["cycle_lengths"] = lengths;
  j["cycle_occurrences"] = stats.cycle_occurrences();
  j["sd_definition"] = "sample";
  auto records = [&](const std::vector<AttractorRecord>& rs, bool with_percent) {
    ordered_json arr = ordered_json::array();
    for (const auto& r : rs) {
      ordered_json item;
      item["states"] = states_json(r.states, width);
      item["mean_basin"] = r.mean_basin();
      item["sd_basin"] = r.sd_basin();
      item["count"] = r.count;
      if (with_percent) item["percent"] = stats.cycle_percent(r);
      arr.push_back(item);
    }
    return arr;
  };
  j["fixed_points"] = records(stats.fixed_points, false);
  j["cycles"] = records(stats.cycles, true);
  return j.dump(2) + "\n";
}

std::string fit_json(const FitReport& report, std::size_t width) {
  ordered_json j;
  j["network"] = report.network;
  ordered_json desired = ordered_json::array();
  for (const auto& a : report.desired) desired.push_back(states_json(a, width));
  j["desired"] = desired;
  j["generated"] = report.generated;
  j["local_passed"] = report.local_passed;
  j["global_passed"] = report.global_passed;
  ordered_json cands = ordered_json::array();
  for (const auto& t : report.targets) {
    for (const auto& c : report.accepted.at(t)) {
      ordered_json item;
      item["target"] = c.target;
      item["expression"] = c.expression;
      item["regulators"] = c.regulators;
      item["local_pass"] = c.local_pass;
      item["global_pass"] = c.global_pass;
      cands.push_back(item);
    }
  }
  j["candidates"] = cands;
  return j.dump(2) + "\n";
}

std::string reduction_json(const ReductionCheck& check) {
  ordered_json j;
  j["large_network"] = check.large_network;
  j["small_network"] = check.small_network;
  j["shared_nodes"] = check.shared_nodes;
  j["pins"] = check.pins;
  j["fixed_points_match"] = check.fixed_points_match;
  j["cycles_match"] = check.cycles_match;
  j["matches"] = check.matches;
  const std::size_t w = check.shared_nodes.size();
  auto side = [&](const std::vector<ProjectedAttractor>& v, const AttractorReport& rep) {
    ordered_json arr = ordered_json::array();
    for (const auto& p : v) {
      ordered_json item;
      item["source"] = p.source;
      item["kind"] = p.original_period == 1 ? "fixed_point" : "limit_cycle";
      item["original_states"] = states_json(rep.attractors[p.source].states, rep.width);
      item["projected_states"] = states_json(p.states, w);
      item["collapsed"] = p.collapsed;
      item["basin_percent"] = p.basin_percent;
      item["matched"] = p.matched;
      arr.push_back(item);
    }
    return arr;
  };
  j["large"] = side(check.large, check.large_report);
  j["small"] = side(check.small, check.small_report);
  return j.dump(2) + "\n";
}

std::string circuits_json(const InteractionDigraph& g, const std::vector<SignedCircuit>& circuits) {
  ordered_json j;
  j["vertices"] = g.vertices();
  j["arcs"] = g.arc_count();
  std::size_t negative = 0;
  std::size_t positive = 0;
  ordered_json list = ordered_json::array();
  for (const auto& c : circuits) {
    if (c.sign == CircuitSign::Negative) ++negative;
    if (c.sign == CircuitSign::Positive) ++positive;
    ordered_json item;
    std::vector<std::string> names;
    for (auto v : c.vertices) names.push_back(g.vertices()[v]);
    item["nodes"] = names;
    item["length"] = c.vertices.size();
    item["sign"] = to_string(c.sign);
    list.push_back(item);
  }
  j["positive"] = positive;
  j["negative"] = negative;
  j["circuits"] = list;
  return j.dump(2) + "\n";
}

std::string schedule_classes_csv(const InteractionDigraph& g, const EnumerationOptions& options) {
  std::string header = "index,labeling,representative";
  std::string out;
  enumerate_representatives(
      g,
      [&](const Representative& r) {
        out += std::to_string(r.index) + ',' + r.labeling.to_string() + ',' +
               csv_cell(UpdateSchedule::from_levels(g.vertices(), r.levels).to_string()) + '\n';
      },
      options);
  // Column key for the labeling string: one character per arc, in arc order.
  std::string arcs = "# arcs:";
  for (const auto& a : g.arcs()) arcs += " " + g.vertices()[a.source] + "->" + g.vertices()[a.target];
  return arcs + "\n" + header + "\n" + out;
}

}  // namespace boolnet

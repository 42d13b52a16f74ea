#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "boolnet/bundled.hpp"
#include "boolnet/compiled.hpp"
#include "boolnet/dynamics.hpp"
#include "boolnet/ensemble.hpp"
#include "boolnet/fitting.hpp"
#include "boolnet/network.hpp"
#include "boolnet/schedule.hpp"
#include "helpers.hpp"

using namespace boolnet;
namespace ts = testing_support;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back("MISMATCH " + what);
    }
  }
  void note(const std::string& text) { notes.push_back(text); }
};

std::string num(double v, int digits = 2) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

bool near(double got, double want, double tol) { return std::fabs(got - want) <= tol + 1e-9; }

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void check_runtime(Outcome& out, const Stopwatch& w, double limit, const std::string& what = "runtime") {
  const double s = w.seconds();
  out.require(s < limit, what + " " + num(s) + " s over " + num(limit, 0) + " s");
}

AnalysisOptions threaded() {
  AnalysisOptions o = default_analysis_options();
  o.threads = std::max(1U, std::thread::hardware_concurrency());
  return o;
}

std::vector<std::string> bitstrings(const std::vector<std::uint64_t>& codes, std::size_t width) {
  std::vector<std::string> out;
  for (auto c : codes) out.push_back(to_bitstring(c, width));
  return out;
}

std::set<std::string> as_set(const std::vector<std::uint64_t>& codes, std::size_t width) {
  const auto v = bitstrings(codes, width);
  return {v.begin(), v.end()};
}

// ---------------------------------------------------------------------------
// Reference attractor tables: one line per node, one cell per attractor,
// cycle states separated by '/', '-' for an unspecified value.

struct RefTable {
  std::vector<std::string> nodes;
  // columns[j][t][row]
  std::vector<std::vector<std::string>> columns;
};

RefTable parse_table(const std::string& text) {
  RefTable t;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    std::istringstream row(line);
    std::string name;
    if (!(row >> name)) continue;
    const std::size_t r = t.nodes.size();
    t.nodes.push_back(name);
    std::size_t j = 0;
    for (std::string cell; row >> cell; ++j) {
      std::vector<std::string> parts;
      std::stringstream cs(cell);
      for (std::string p; std::getline(cs, p, '/');) parts.push_back(p);
      if (t.columns.size() <= j) t.columns.emplace_back(parts.size());
      for (std::size_t k = 0; k < parts.size(); ++k) {
        auto& s = t.columns[j].at(k);
        s.resize(r + 1, '?');
        s[r] = parts[k] == "-" ? '?' : parts[k][0];
      }
    }
  }
  return t;
}

void skip_cell(RefTable& t, const std::string& node, std::size_t column) {
  const auto r = static_cast<std::size_t>(std::find(t.nodes.begin(), t.nodes.end(), node) - t.nodes.begin());
  for (auto& s : t.columns.at(column)) s.at(r) = '?';
}

std::vector<std::string> attractor_rows(const Network& net, const Attractor& a, const std::vector<std::string>& nodes) {
  std::vector<std::string> out;
  for (auto code : a.states) {
    std::map<std::string, bool> values;
    for (const auto& [name, v] : node_values(net, State{code, net.width()})) values[name] = v;
    std::string s;
    for (const auto& n : nodes) s += values.at(n) ? '1' : '0';
    out.push_back(s);
  }
  return out;
}

bool same_up_to_rotation(const std::vector<std::string>& got, const std::vector<std::string>& want) {
  if (got.size() != want.size()) return false;
  const auto cell_ok = [](const std::string& g, const std::string& w) {
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i] != '?' && w[i] != g[i]) return false;
    }
    return true;
  };
  for (std::size_t shift = 0; shift < got.size(); ++shift) {
    bool ok = true;
    for (std::size_t t = 0; t < got.size() && ok; ++t) ok = cell_ok(got[(t + shift) % got.size()], want[t]);
    if (ok) return true;
  }
  return false;
}

// Column j -> index into report.attractors, or -1.
std::vector<int> match_columns(const Network& net, const AttractorReport& r, const RefTable& t) {
  std::vector<int> out(t.columns.size(), -1);
  std::vector<bool> used(r.attractors.size(), false);
  for (std::size_t j = 0; j < t.columns.size(); ++j) {
    for (std::size_t i = 0; i < r.attractors.size(); ++i) {
      if (!used[i] && same_up_to_rotation(attractor_rows(net, r.attractors[i], t.nodes), t.columns[j])) {
        used[i] = true;
        out[j] = static_cast<int>(i);
        break;
      }
    }
  }
  return out;
}

void compare_table(Outcome& out, const Network& net, const AttractorReport& r, const RefTable& t,
                   const std::vector<double>& percents, double tol) {
  out.require(r.attractors.size() == t.columns.size(),
              std::to_string(r.attractors.size()) + " attractors, expected " + std::to_string(t.columns.size()));
  const auto m = match_columns(net, r, t);
  for (std::size_t j = 0; j < m.size(); ++j) {
    out.require(m[j] >= 0, "no attractor matches column " + std::to_string(j + 1));
    if (m[j] < 0 || percents.empty()) continue;
    const double p = r.basin_percent(static_cast<std::size_t>(m[j]));
    out.require(near(p, percents[j], tol), "column " + std::to_string(j + 1) + " basin " + num(p, 4) + "% vs " +
                                               num(percents[j]) + "%");
  }
}

std::string basin_summary(const AttractorReport& r) {
  std::string s;
  for (std::size_t i = 0; i < r.attractors.size(); ++i) {
    s += (i ? "/" : "") + num(r.basin_percent(i));
  }
  return s;
}

std::vector<std::size_t> cycle_periods(const AttractorReport& r) {
  std::vector<std::size_t> p;
  for (const auto& a : r.attractors) {
    if (a.period() > 1) p.push_back(a.period());
  }
  std::sort(p.begin(), p.end());
  return p;
}

// ---------------------------------------------------------------------------

Network example_network() { return load_network("targets, factors\nA, C\nB, C\nC, A & B\n", {"example", {}, {}, false}); }

Outcome criterion1() {
  Outcome out;
  Stopwatch w;
  const Network net = example_network();
  const std::vector<std::string> names{"A", "B", "C"};
  // Levels of A, B, C for s1..s9, then successors of 000..111.
  const std::vector<std::vector<std::size_t>> levels{{1, 1, 1}, {2, 1, 2}, {1, 2, 1}, {2, 1, 1}, {3, 1, 2},
                                                     {2, 2, 1}, {1, 2, 2}, {1, 1, 2}, {1, 3, 2}};
  const std::vector<std::vector<std::string>> columns{
      {"000", "110", "000", "110", "000", "110", "001", "111"}, {"000", "110", "000", "110", "000", "111", "000", "111"},
      {"000", "100", "000", "100", "000", "100", "011", "111"}, {"000", "010", "000", "010", "000", "010", "101", "111"},
      {"000", "010", "000", "010", "000", "111", "000", "111"}, {"000", "000", "000", "000", "000", "000", "111", "111"},
      {"000", "110", "000", "111", "000", "110", "000", "111"}, {"000", "111", "000", "111", "000", "111", "000", "111"},
      {"000", "100", "000", "111", "000", "100", "000", "111"}};
  std::size_t cells = 0;
  for (std::size_t k = 0; k < levels.size(); ++k) {
    const auto sched = UpdateSchedule::from_levels(names, levels[k]);
    for (std::uint64_t s = 0; s < 8; ++s) {
      const auto got = step(net, State{s, 3}, sched).to_string();
      out.require(got == columns[k][s], "s" + std::to_string(k + 1) + " from " + to_bitstring(s, 3) + ": " + got);
      ++cells;
    }
  }
  out.note(std::to_string(cells) + " transitions checked");

  const auto g = InteractionDigraph::of(net);
  std::set<std::vector<std::size_t>> reps;
  const auto count = enumerate_representatives(g, [&](const Representative& r) {
    reps.insert(UpdateSchedule::from_levels(g.vertices(), r.levels).levels(names));
  });
  out.require(count == 9, std::to_string(count) + " classes");
  std::set<std::vector<std::size_t>> want;
  for (const char* s : {"(A,B,C)", "(B)(A,C)", "(A,C)(B)", "(B,C)(A)", "(B)(C)(A)", "(C)(A,B)", "(A)(B,C)", "(A,B)(C)",
                        "(A)(C)(B)"}) {
    want.insert(UpdateSchedule::parse(s).levels(names));
  }
  out.require(reps == want, "representative schedules differ from the nine listed classes");
  out.note(std::to_string(count) + " classes");
  check_runtime(out, w, 1);
  return out;
}

using AttractorSpec = std::map<std::set<std::string>, std::uint64_t>;

void compare_exact(Outcome& out, const AttractorReport& r, const AttractorSpec& want) {
  AttractorSpec got;
  for (const auto& a : r.attractors) got[as_set(a.states, r.width)] = a.basin;
  out.require(got == want, "attractor set or basins differ");
  std::string basins;
  for (const auto& a : r.attractors) basins += (basins.empty() ? "" : "/") + std::to_string(a.basin);
  out.note("basins " + basins);
}

Outcome criterion2() {
  Outcome out;
  Stopwatch w;
  const auto r = find_attractors(load_bundled("net09"));
  compare_exact(out, r,
                {{{"011110001"}, 504}, {{"100001010"}, 2}, {{"100001100"}, 2}, {{"100001000", "100001110"}, 4}});
  out.require(r.fixed_point_count() == 3 && r.cycle_count() == 1, "expected 3 fixed points and 1 cycle");
  check_runtime(out, w, 1);
  return out;
}

Outcome criterion3() {
  Outcome out;
  Stopwatch w;
  const auto r = find_attractors(load_bundled("net09_fitted"));
  compare_exact(out, r, {{{"011110001"}, 508}, {{"100001010"}, 2}, {{"100001100"}, 2}});
  out.require(r.cycle_count() == 0, "unexpected limit cycles");
  check_runtime(out, w, 1);
  return out;
}

constexpr const char* kNet14Table = R"(
miR_145   0 1 1 1/1
Sp1       1 0 0 0/0
MALAT1    1 0 0 0/0
BMI1      1 0 0 0/0
KLF4      1 0 0 0/0
p53       0 1 1 1/1
p53_A     0 0 1 1/0
p53_K     0 1 0 1/0
p21       0 1 1 0/1
PUMA      0 1 0 0/1
BCL2      1 0 0 0/0
BAX       0 0 1 1/0
E2F1      1 0 0 0/0
Caspase3  0 0 1 0/1
)";

Outcome criterion4() {
  Outcome out;
  Stopwatch w;
  const Network net = load_bundled("net14");
  const auto r = find_attractors(net, threaded());
  const RefTable t = parse_table(kNet14Table);
  // Two-decimal percentages must agree exactly.
  compare_table(out, net, r, t, {98.44, 0.39, 0.39, 0.78}, 0.005);
  out.note(std::to_string(r.state_count()) + " states, basins " + basin_summary(r));
  check_runtime(out, w, 5);
  return out;
}

constexpr const char* kNet29Table = R"(
ATM              0 1 1 1 1/1
p38MAPK          0 1 1 1 1/1
miR_145          0 0 1 1 1/1
Sp1              1 1 0 0 0/0
MALAT1           1 1 0 0 0/0
BMI1             1 1 0 0 0/0
KLF4             1 1 0 0 0/0
HDAC1            0 0 0 0 0/0
Myc              1 0 0 0 0/0
p53              0 0 1 1 1/1
Mdm2             1 0 0 0 0/0
p53_A            0 0 0 1 1/0
p53_K            0 0 1 0 1/0
Wip1             0 0 0 0 0/0
p21              0 0 1 1 0/1
Cdc25A           1 0 0 0 0/0
CDK46_CycD       1 0 0 0 0/0
CDK2_CycE        1 0 0 0 0/0
RB               0 1 1 1 1/1
PUMA             0 0 1 0 0/1
BCL2             1 1 0 0 0/0
BAX              0 0 0 1 1/0
E2F1             1 1 0 0 0/0
Caspase3         0 0 0 1 0/1
DNA_Damage       0 1 1 1 1/1
Proliferation    1 0 0 0 -/-
Drug_Resistance  0 1 0 0 -/-
Senescence       0 0 1 1 -/-
Apoptosis        0 0 0 1 -/-
)";

Outcome criterion5() {
  Outcome out;
  Stopwatch w;
  const Network net = load_bundled("net29");
  const auto r = find_attractors(net, threaded());
  RefTable t = parse_table(kNet29Table);
  // The reference lists HDAC1 = 0 in the first steady state, but its rule is
  // HDAC1 = !DNA_Damage and DNA_Damage = 0 there, so that cell is not compared.
  skip_cell(t, "HDAC1", 0);
  compare_table(out, net, r, t, {50.00, 49.89, 0.01, 0.04, 0.05}, 0.01);
  out.require(r.fixed_point_count() == 4 && cycle_periods(r) == std::vector<std::size_t>{2},
              "expected 4 fixed points and one 2-cycle");
  out.note(std::to_string(r.width) + " bits, basins " + basin_summary(r) + ", HDAC1 cell of steady state 1 skipped");
  check_runtime(out, w, 120);
  return out;
}

constexpr const char* kNet31Table = R"(
ATM              0 1 1 1 1/1 0/0/0/0 0/0/0/0
p38MAPK          0 1 1 1 1/1 0/0/0/0 0/0/0/0
miR_145          0 0 1 1 1/1 0/0/0/0 0/0/0/0
Sp1              1 1 0 0 0/0 1/1/1/1 1/1/1/1
MALAT1           1 1 0 0 0/0 1/1/1/1 1/1/1/1
BMI1             1 1 0 0 0/0 1/1/1/1 1/1/1/1
KLF4             1 1 0 0 0/0 1/1/1/1 1/1/1/1
HDAC1            0 0 0 0 0/0 1/1/1/1 1/0/1/0
Myc              1 0 0 0 0/0 1/1/0/0 1/1/0/1
p53              0 0 1 1 1/1 0/0/0/0 0/0/0/0
Mdm2             1 0 0 0 0/0 0/0/1/1 0/1/1/1
p53_A            0 0 0 1 1/0 0/0/1/1 0/0/1/0
p53_K            0 0 1 0 1/0 0/0/0/0 0/0/0/0
Sirt_1           1 1 0 0 0/0 0/0/0/0 1/0/1/0
p53_INP1         0 0 1 1 0/1 1/0/0/1 0/0/0/1
Wip1             0 0 0 0 0/0 1/0/0/1 0/0/0/1
p21              0 0 1 1 0/1 1/0/0/1 0/0/0/1
Cdc25A           1 0 0 0 0/0 1/1/1/1 1/1/1/1
CDK46_CycD       1 0 0 0 0/0 0/0/1/1 0/1/1/1
CDK2_CycE        1 0 0 0 0/0 0/0/1/1 0/1/1/1
RB               0 1 1 1 1/1 0/1/1/0 0/1/0/0
PUMA             0 0 1 0 0/1 0/0/0/0 0/0/0/0
BCL2             1 1 0 0 0/0 1/1/1/1 1/1/1/1
BAX              0 0 0 1 1/0 0/0/0/0 0/0/0/0
E2F1             1 1 0 0 0/0 1/1/1/1 1/1/1/1
Caspase3         0 0 0 1 0/1 0/0/0/0 0/0/0/0
DNA_Damage       0 1 1 1 1/1 0/0/0/0 0/0/0/0
Proliferation    1 0 0 0 -/- -/-/-/- -/-/-/-
Drug_Resistance  0 1 0 0 -/- -/-/-/- -/-/-/-
Senescence       0 0 1 1 -/- -/-/-/- -/-/-/-
Apoptosis        0 0 0 1 -/- -/-/-/- -/-/-/-
)";

Outcome criterion6() {
  Outcome out;
  Stopwatch w;
  const Network net = load_bundled("net31");
  const auto r = find_attractors(net, threaded());
  compare_table(out, net, r, parse_table(kNet31Table), {}, 0);
  out.require(r.fixed_point_count() == 4, std::to_string(r.fixed_point_count()) + " fixed points");
  out.require(cycle_periods(r) == std::vector<std::size_t>{2, 4, 4}, "cycle lengths differ from {2, 4, 4}");
  out.note(std::to_string(r.width) + " bits, " + std::to_string(r.fixed_point_count()) + " fixed points, cycles {2, 4, 4}");
  check_runtime(out, w, 600);
  return out;
}

Outcome criterion7() {
  Outcome out;
  const std::vector<int> want{1, 1, 3, 13, 75};
  std::string got;
  for (unsigned n = 0; n < want.size(); ++n) {
    const auto t = count_schedules(n);
    out.require(t == want[n], "T_" + std::to_string(n) + " = " + t.str());
    got += (n ? ", " : "") + t.str();
  }
  out.note("T_0..T_4 = " + got);
  return out;
}

Outcome criterion8() {
  Outcome out;
  for (const auto& [name, want] : std::vector<std::pair<std::string, std::uint64_t>>{{"net09", 10632}, {"net09_fitted", 23107}}) {
    Stopwatch w;
    const auto n = enumerate_representatives(InteractionDigraph::of(load_bundled(name)), [](const Representative&) {});
    out.require(n == want, name + " gives " + std::to_string(n));
    check_runtime(out, w, 30, name + " runtime");
    out.note(name + " " + std::to_string(n) + " in " + num(w.seconds()) + " s");
  }
  return out;
}

struct SteadyRow {
  std::string state;
  double mean, sd;
  std::uint64_t count;
};

struct CycleRow {
  std::set<std::string> states;
  double mean, sd;
  std::uint64_t count;
  double percent;
};

const AttractorRecord* find_record(const std::vector<AttractorRecord>& list, const std::set<std::string>& states,
                                   std::size_t width) {
  for (const auto& r : list) {
    if (as_set(r.states, width) == states) return &r;
  }
  return nullptr;
}

void compare_steady(Outcome& out, const EnsembleStats& s, std::size_t width, const std::vector<SteadyRow>& rows) {
  for (const auto& row : rows) {
    const auto* r = find_record(s.fixed_points, {row.state}, width);
    out.require(r != nullptr, "fixed point " + row.state + " missing");
    if (!r) continue;
    out.require(r->count == row.count, row.state + " count " + std::to_string(r->count));
    out.require(near(r->mean_basin(), row.mean, 0.01),
                row.state + " mean " + num(r->mean_basin(), 3) + " vs " + num(row.mean));
    out.require(near(r->sd_basin(), row.sd, 0.5), row.state + " SD " + num(r->sd_basin(), 3) + " vs " + num(row.sd));
  }
}

void compare_cycles(Outcome& out, const EnsembleStats& s, std::size_t width, const std::vector<CycleRow>& rows,
                    bool check_mean) {
  for (const auto& row : rows) {
    const std::string label = *row.states.begin() + "," + *row.states.rbegin();
    const auto* r = find_record(s.cycles, row.states, width);
    out.require(r != nullptr, "cycle " + label + " missing");
    if (!r) continue;
    out.require(r->count == row.count, label + " count " + std::to_string(r->count));
    out.require(near(s.cycle_percent(*r), row.percent, 0.01), label + " percent " + num(s.cycle_percent(*r), 3));
    if (check_mean) {
      out.require(near(r->mean_basin(), row.mean, 0.01), label + " mean " + num(r->mean_basin(), 3));
      out.require(near(r->sd_basin(), row.sd, 0.5), label + " SD " + num(r->sd_basin(), 3));
    }
  }
}

std::string histogram_text(const std::map<std::size_t, std::uint64_t>& h) {
  std::string s;
  for (const auto& [k, v] : h) s += (s.empty() ? "" : ", ") + std::to_string(k) + ":" + std::to_string(v);
  return "{" + s + "}";
}

void compare_ensemble_head(Outcome& out, const EnsembleStats& s, std::uint64_t schedules, std::uint64_t steady_only,
                           double steady_percent, const std::map<std::size_t, std::uint64_t>& histogram) {
  out.require(s.schedules == schedules, "schedules " + std::to_string(s.schedules));
  out.require(s.fixed_point_only == steady_only, "steady-only " + std::to_string(s.fixed_point_only));
  out.require(near(s.fixed_point_only_percent(), steady_percent, 0.01),
              "steady-only percent " + num(s.fixed_point_only_percent(), 3));
  out.require(s.cycle_histogram == histogram, "histogram " + histogram_text(s.cycle_histogram));
  out.note("steady-only " + std::to_string(s.fixed_point_only) + " (" + num(s.fixed_point_only_percent()) +
           "%), histogram " + histogram_text(s.cycle_histogram));
}

Outcome criterion9() {
  Outcome out;
  Stopwatch w;
  const Network net = load_bundled("net09");
  const auto s = analyze_ensemble(net);
  compare_ensemble_head(out, s, 10632, 7356, 69.19, {{1, 2836}, {2, 362}, {5, 78}});
  compare_steady(out, s, net.width(),
                 {{"011110001", 441.19, 69.43, 10632}, {"100001010", 23.25, 21.86, 10632}, {"100001100", 23.25, 21.86, 10632}});
  const std::vector<CycleRow> top{
      {{"100001000", "100001110"}, 31.50, 26.57, 2658, 67.29}, {{"010111101", "101001100"}, 93.75, 57.41, 32, 0.81},
      {{"010111100", "101001101"}, 93.75, 57.41, 32, 0.81},    {{"010111011", "101001010"}, 93.75, 57.41, 32, 0.81},
      {{"010111010", "101001011"}, 93.75, 57.41, 32, 0.81},    {{"010011100", "101101101"}, 89.63, 61.81, 32, 0.81},
      {{"010011010", "101101011"}, 89.63, 61.81, 32, 0.81},    {{"001101101", "110011100"}, 87.78, 53.75, 32, 0.81},
      {{"001101011", "110011010"}, 87.78, 53.75, 32, 0.81},    {{"000111101", "111001100"}, 81.38, 44.17, 32, 0.81}};
  out.require(!s.cycles.empty() && as_set(s.cycles.front().states, net.width()) == top.front().states,
              "most frequent cycle differs");
  compare_cycles(out, s, net.width(), top, true);
  if (!s.cycles.empty()) {
    out.note("top cycle count " + std::to_string(s.cycles.front().count) + " (" + num(s.cycle_percent(s.cycles.front())) + "%)");
  }
  check_runtime(out, w, 300);
  return out;
}

Outcome criterion10() {
  Outcome out;
  Stopwatch w;
  const Network net = load_bundled("net09_fitted");
  const auto s = analyze_ensemble(net);
  compare_ensemble_head(out, s, 23107, 21858, 94.59, {{1, 586}, {2, 534}, {3, 129}});
  compare_steady(out, s, net.width(),
                 {{"011110001", 460.87, 54.98, 23107}, {"100001010", 22.47, 18.46, 23107}, {"100001100", 22.47, 18.46, 23107}});
  const std::vector<CycleRow> top{
      {{"010011100", "101101101"}, 78.87, 43.28, 67, 3.28}, {{"010011010", "101101011"}, 78.87, 43.28, 67, 3.28},
      {{"000111100", "111001101"}, 60.42, 32.22, 67, 3.28}, {{"000111010", "111001011"}, 60.42, 32.22, 67, 3.28},
      {{"010111010", "101001011"}, 88.36, 52.96, 67, 3.28}, {{"010111100", "101001101"}, 88.36, 52.96, 67, 3.28},
      {{"000111101", "111001100"}, 77.01, 39.66, 67, 3.28}, {{"000111011", "111001010"}, 77.01, 39.66, 67, 3.28},
      {{"010111011", "101001010"}, 89.07, 53.82, 67, 3.28}, {{"010111101", "101001100"}, 89.07, 53.82, 67, 3.28}};
  compare_cycles(out, s, net.width(), top, false);
  out.note("schedules with cycles " + std::to_string(s.with_cycles()) + ", cycle occurrences " +
           std::to_string(s.cycle_occurrences()));
  check_runtime(out, w, 600);
  return out;
}

Outcome criterion11() {
  Outcome out;
  Stopwatch w;
  const auto report = fit_rules(load_bundled("net09"));
  bool found = false;
  if (auto it = report.accepted.find("BMI1"); it != report.accepted.end()) {
    for (const auto& c : it->second) found = found || c.expression == "(!p53_A & !p53_K) | E2F1";
  }
  out.require(found, "BMI1 <- (!p53_A & !p53_K) | E2F1 not among passing candidates");
  out.note(std::to_string(report.generated) + " generated, " + std::to_string(report.local_passed) +
           " pass the local check, " + std::to_string(report.global_passed) + " pass globally (reference 5)");
  check_runtime(out, w, 120);
  return out;
}

Outcome criterion12() {
  Outcome out;
  Stopwatch w;

  // Basin conservation and fixed-point invariance under every representative.
  for (const char* name : {"net09", "net09_fitted"}) {
    const Network net = load_bundled(name);
    const auto g = InteractionDigraph::of(net);
    std::set<std::uint64_t> parallel_fixed;
    for (const auto& a : find_attractors(net).attractors) {
      if (a.period() == 1) parallel_fixed.insert(a.states[0]);
    }
    std::uint64_t bad_sum = 0, bad_fixed = 0, bad_identity = 0, runs = 0;
    enumerate_representatives(g, [&](const Representative& rep) {
      const auto sched = schedule_from_labeling(rep.labeling, g);
      if (label_of(sched, g) != rep.labeling) ++bad_identity;
      const auto r = find_attractors(net, sched);
      std::uint64_t total = 0;
      std::set<std::uint64_t> fixed;
      for (const auto& a : r.attractors) {
        total += a.basin;
        if (a.period() == 1) fixed.insert(a.states[0]);
      }
      if (total != r.state_count()) ++bad_sum;
      if (fixed != parallel_fixed) ++bad_fixed;
      ++runs;
    });
    out.require(bad_sum == 0, std::string(name) + " basin sums off in " + std::to_string(bad_sum) + " runs");
    out.require(bad_fixed == 0, std::string(name) + " fixed points change in " + std::to_string(bad_fixed) + " runs");
    out.require(bad_identity == 0, std::string(name) + " labeling identity fails " + std::to_string(bad_identity) + " times");
    out.note(std::string(name) + " " + std::to_string(runs) + " schedules");
  }
  for (const char* name : {"net14"}) {
    const auto r = find_attractors(load_bundled(name));
    std::uint64_t total = 0;
    for (const auto& a : r.attractors) total += a.basin;
    out.require(total == r.state_count(), std::string(name) + " basin sum");
  }

  // Dynamics against a direct evaluation of the rules.
  std::mt19937 rng(20240);
  std::size_t oracle_fail = 0;
  for (int round = 0; round < 100; ++round) {
    const std::size_t n = 1 + static_cast<std::size_t>(round % 10);
    const Network net = ts::random_network(rng, n);
    std::vector<std::size_t> levels(n);
    for (auto& l : levels) l = std::uniform_int_distribution<std::size_t>(1, n)(rng);
    std::vector<std::size_t> used(levels);
    std::sort(used.begin(), used.end());
    used.erase(std::unique(used.begin(), used.end()), used.end());
    for (auto& l : levels) l = static_cast<std::size_t>(std::lower_bound(used.begin(), used.end(), l) - used.begin()) + 1;
    std::vector<std::uint64_t> succ(std::uint64_t{1} << n);
    for (std::uint64_t s = 0; s < succ.size(); ++s) succ[s] = ts::encode(ts::reference_step(net, ts::decode(s, n), levels));
    const auto r = find_attractors(net, UpdateSchedule::from_levels(net.dynamic_names(), levels));
    std::map<std::vector<std::uint64_t>, std::uint64_t> got;
    for (const auto& a : r.attractors) got[a.states] = a.basin;
    if (got != ts::reference_attractors(succ)) ++oracle_fail;
  }
  out.require(oracle_fail == 0, std::to_string(oracle_fail) + " random networks disagree with the oracle");

  // Schedules sharing a labeling share their dynamics (full sweep, n <= 4).
  std::size_t grouping_fail = 0;
  std::size_t sweeps = 0;
  for (std::size_t n = 1; n <= 4; ++n) {
    for (int round = 0; round < 10; ++round) {
      const Network net = ts::random_network(rng, n);
      const auto g = InteractionDigraph::of(net);
      std::map<std::string, std::vector<std::uint64_t>> by_label;
      for (const auto& lv : ts::all_level_vectors(n)) {
        std::vector<std::uint64_t> succ(std::uint64_t{1} << n);
        CompiledNetwork(net, lv).successors(0, std::span<std::uint64_t>(succ));
        auto [it, inserted] = by_label.emplace(label_of_levels(lv, g).to_string(), succ);
        if (!inserted && it->second != succ) ++grouping_fail;
        ++sweeps;
      }
      if (enumerate_representatives(g, [](const Representative&) {}) != by_label.size()) ++grouping_fail;
    }
  }
  out.require(grouping_fail == 0, std::to_string(grouping_fail) + " labeling-class violations");
  out.note("100 random networks vs oracle, " + std::to_string(sweeps) + " schedules swept for n <= 4");
  out.note(num(w.seconds()) + " s");
  return out;
}

Outcome criterion13() {
  Outcome out;
  Stopwatch w;
  for (const char* name : {"net09", "net29"}) {
    const auto g = InteractionDigraph::of(load_bundled(name));
    const auto circuits = enumerate_circuits(g);
    std::size_t negative = 0;
    const SignedCircuit* example = nullptr;
    for (const auto& c : circuits) {
      if (c.sign == CircuitSign::Negative) {
        if (!example || c.vertices.size() < example->vertices.size()) example = &c;
        ++negative;
      }
    }
    out.require(negative == 0, std::string(name) + " has " + std::to_string(negative) + " negative circuits of " +
                                   std::to_string(circuits.size()) + (example ? ", e.g. " + describe(*example, g) : ""));
  }
  const auto g = InteractionDigraph::of(load_bundled("net31"));
  const auto sirt = g.find("Sirt_1");
  const auto inp = g.find("p53_INP1");
  std::size_t through = 0;
  std::string example;
  for (const auto& c : enumerate_circuits(g)) {
    if (c.sign != CircuitSign::Negative) continue;
    const bool hit = std::any_of(c.vertices.begin(), c.vertices.end(), [&](std::size_t v) { return v == sirt || v == inp; });
    if (hit) {
      if (example.empty()) example = describe(c, g);
      ++through;
    }
  }
  out.require(through > 0, "net31 has no negative circuit through Sirt_1 or p53_INP1");
  out.note("net31 negative circuits through Sirt_1/p53_INP1: " + std::to_string(through) + ", e.g. " + example);
  check_runtime(out, w, 10);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reference checks for the boolnet library"};
  std::vector<int> selected;
  app.add_option("--criterion", selected, "Run only these criteria (1-13)")->check(CLI::Range(1, 13));
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::function<Outcome()>> criteria{criterion1, criterion2,  criterion3,  criterion4, criterion5,
                                                       criterion6, criterion7,  criterion8,  criterion9, criterion10,
                                                       criterion11, criterion12, criterion13};
  if (selected.empty()) {
    for (int i = 1; i <= 13; ++i) selected.push_back(i);
  }
  bool all = true;
  for (int id : selected) {
    Stopwatch w;
    Outcome out;
    try {
      out = criteria[static_cast<std::size_t>(id - 1)]();
    } catch (const std::exception& e) {
      out.pass = false;
      out.note(std::string("exception: ") + e.what());
    }
    std::string detail;
    for (const auto& n : out.notes) detail += (detail.empty() ? "" : "; ") + n;
    std::cout << "criterion " << id << ": " << (out.pass ? "PASS" : "FAIL") << " [" << num(w.seconds()) << " s] "
              << detail << std::endl;
    all = all && out.pass;
  }
  return all ? 0 : 1;
}

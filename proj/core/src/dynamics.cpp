#include "boolnet/dynamics.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <thread>

namespace boolnet {

State State::parse(std::string_view bits) {
  if (bits.size() > 64) throw ParseError("state wider than 64 bits", 64);
  State s;
  s.width = bits.size();
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] != '0' && bits[i] != '1') throw ParseError("state must be a bitstring", i);
    s.code = (s.code << 1) | (bits[i] == '1' ? 1U : 0U);
  }
  return s;
}

std::string to_bitstring(std::uint64_t code, std::size_t width) {
  std::string out(width, '0');
  for (std::size_t k = 0; k < width; ++k) {
    if (((code >> (width - 1 - k)) & 1U) != 0) out[k] = '1';
  }
  return out;
}

std::string State::to_string() const { return to_bitstring(code, width); }

std::vector<std::uint64_t> canonical_cycle(std::vector<std::uint64_t> cycle) {
  if (cycle.empty()) return cycle;
  auto min_it = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), min_it, cycle.end());
  return cycle;
}

double AttractorReport::basin_percent(std::size_t i) const {
  return 100.0 * static_cast<double>(attractors.at(i).basin) / static_cast<double>(state_count());
}

std::size_t AttractorReport::fixed_point_count() const {
  return static_cast<std::size_t>(std::count_if(attractors.begin(), attractors.end(), [](const Attractor& a) {
    return a.kind() == AttractorKind::FixedPoint;
  }));
}

std::size_t AttractorReport::cycle_count() const { return attractors.size() - fixed_point_count(); }

std::size_t default_max_width() {
  if (const char* env = std::getenv("BOOLNET_MAX_WIDTH")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 28;
}

AnalysisOptions default_analysis_options() {
  AnalysisOptions o;
  o.max_width = default_max_width();
  return o;
}

State step(const Network& net, const State& state, const UpdateSchedule& schedule) {
  if (state.width != net.width()) throw NetworkError("state width does not match network");
  CompiledNetwork compiled(net, schedule);
  return State{compiled.successor(state.code), state.width};
}

namespace {

void check_width(std::size_t width, const AnalysisOptions& options) {
  if (width > options.max_width) {
    throw GuardError("state width " + std::to_string(width) + " exceeds the limit of " +
                     std::to_string(options.max_width) + " (set BOOLNET_MAX_WIDTH to raise it)");
  }
  if (width > 31) throw GuardError("exhaustive analysis supports at most 31 state bits");
}

std::vector<std::uint32_t> successor_table(const CompiledNetwork& compiled, unsigned threads) {
  const std::uint64_t n = std::uint64_t{1} << compiled.width();
  std::vector<std::uint32_t> succ(n);
  const unsigned workers = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>((n + 65535) / 65536)));
  if (workers == 1) {
    compiled.successors(0, std::span<std::uint32_t>(succ));
    return succ;
  }
  // Chunks are multiples of 64 so batches never straddle two workers.
  const std::uint64_t chunk = (((n + workers - 1) / workers) + 63) & ~std::uint64_t{63};
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t begin = std::min<std::uint64_t>(n, w * chunk);
    const std::uint64_t end = std::min<std::uint64_t>(n, begin + chunk);
    if (begin == end) break;
    pool.emplace_back([&, begin, end] {
      compiled.successors(begin, std::span<std::uint32_t>(succ.data() + begin, end - begin));
    });
  }
  for (auto& t : pool) t.join();
  return succ;
}

struct Traversal {
  std::vector<Attractor> attractors;
  std::vector<std::uint32_t> label;  // attractor index per state after sorting
};

// Follows every trajectory once. Unvisited states get kOnPath while on the
// current walk; a walk ends on a labelled state (join its basin) or on its own
// path (a new cycle).
Traversal traverse(const std::vector<std::uint32_t>& succ, bool keep_labels) {
  constexpr std::uint32_t kUnvisited = 0;
  constexpr std::uint32_t kOnPath = std::numeric_limits<std::uint32_t>::max();
  const std::uint64_t n = succ.size();
  std::vector<std::uint32_t> label(n, kUnvisited);
  std::vector<Attractor> found;
  std::vector<std::uint32_t> path;
  for (std::uint64_t s = 0; s < n; ++s) {
    if (label[s] != kUnvisited) continue;
    path.clear();
    std::uint32_t x = static_cast<std::uint32_t>(s);
    while (label[x] == kUnvisited) {
      label[x] = kOnPath;
      path.push_back(x);
      x = succ[x];
    }
    std::uint32_t id = label[x];
    if (id == kOnPath) {
      Attractor a;
      std::uint32_t y = x;
      do {
        a.states.push_back(y);
        y = succ[y];
      } while (y != x);
      a.states = canonical_cycle(std::move(a.states));
      found.push_back(std::move(a));
      id = static_cast<std::uint32_t>(found.size());
    }
    for (auto p : path) label[p] = id;
    found[id - 1].basin += path.size();
  }

  std::vector<std::uint32_t> order(found.size());
  std::iota(order.begin(), order.end(), 0U);
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    if (found[a].basin != found[b].basin) return found[a].basin > found[b].basin;
    return found[a].states.front() < found[b].states.front();
  });
  Traversal t;
  std::vector<std::uint32_t> rank(found.size());
  for (std::uint32_t r = 0; r < order.size(); ++r) {
    rank[order[r]] = r;
    t.attractors.push_back(std::move(found[order[r]]));
  }
  if (keep_labels) {
    for (auto& l : label) l = rank[l - 1];
    t.label = std::move(label);
  }
  return t;
}

AttractorReport make_report(const Network& net, const UpdateSchedule& schedule, std::vector<Attractor> attractors) {
  AttractorReport r;
  r.network = net.name();
  r.schedule = schedule.to_string();
  r.width = net.width();
  r.state_nodes = net.dynamic_names();
  r.attractors = std::move(attractors);
  return r;
}

}  // namespace

AttractorReport find_attractors(const CompiledNetwork& compiled, const AnalysisOptions& options) {
  check_width(compiled.width(), options);
  const auto succ = successor_table(compiled, options.threads);
  AttractorReport r;
  r.width = compiled.width();
  r.attractors = traverse(succ, false).attractors;
  return r;
}

AttractorReport find_attractors(const Network& net, const UpdateSchedule& schedule, const AnalysisOptions& options) {
  check_width(net.width(), options);
  CompiledNetwork compiled(net, schedule);
  return make_report(net, schedule, find_attractors(compiled, options).attractors);
}

AttractorReport find_attractors(const Network& net, const AnalysisOptions& options) {
  return find_attractors(net, UpdateSchedule::parallel(net.dynamic_names()), options);
}

BasinMap map_basins(const Network& net, const UpdateSchedule& schedule, const AnalysisOptions& options) {
  check_width(net.width(), options);
  CompiledNetwork compiled(net, schedule);
  auto t = traverse(successor_table(compiled, options.threads), true);
  BasinMap m;
  m.report = make_report(net, schedule, std::move(t.attractors));
  m.attractor_of = std::move(t.label);
  return m;
}

std::vector<std::pair<std::string, bool>> node_values(const Network& net, const State& state) {
  if (state.width != net.width()) throw NetworkError("state width does not match network");
  std::vector<std::pair<std::string, bool>> values(net.size());
  std::vector<bool> known(net.size(), false);
  for (std::size_t i = 0; i < net.size(); ++i) {
    values[i].first = net.nodes()[i];
    if (auto pos = net.state_position(i)) {
      values[i].second = state.bit(*pos);
      known[i] = true;
    } else if (auto pinned = net.pinned_value(i)) {
      values[i].second = *pinned;
      known[i] = true;
    }
  }
  for (auto o : net.output_order()) {
    values[o].second = evaluate(net.rule(o), [&](const std::string& name) -> std::optional<bool> {
      const auto idx = net.find(name);
      if (!idx || !known[*idx]) return std::nullopt;
      return values[*idx].second;
    });
    known[o] = true;
  }
  return values;
}

std::vector<std::pair<std::string, bool>> phenotype_projection(const Network& net, const State& state) {
  const auto all = node_values(net, state);
  std::vector<std::pair<std::string, bool>> out;
  for (std::size_t i = 0; i < net.size(); ++i) {
    if (net.is_output(i)) out.push_back(all[i]);
  }
  return out;
}

std::string export_stg(const Network& net, const UpdateSchedule& schedule, std::size_t max_width) {
  if (net.width() > max_width) {
    throw GuardError("state transition graph limited to " + std::to_string(max_width) + " state bits");
  }
  CompiledNetwork compiled(net, schedule);
  const std::uint64_t n = std::uint64_t{1} << net.width();
  std::vector<std::uint64_t> succ(n);
  compiled.successors(0, std::span<std::uint64_t>(succ));
  std::string out = "digraph stg {\n";
  out += "  // " + (net.name().empty() ? std::string("network") : net.name()) + " " + schedule.to_string() + "\n";
  out += "  node [shape=box, fontname=\"monospace\"];\n";
  for (std::uint64_t s = 0; s < n; ++s) out += "  \"" + to_bitstring(s, net.width()) + "\";\n";
  for (std::uint64_t s = 0; s < n; ++s) {
    out += "  \"" + to_bitstring(s, net.width()) + "\" -> \"" + to_bitstring(succ[s], net.width()) + "\";\n";
  }
  out += "}\n";
  return out;
}

}  // namespace boolnet

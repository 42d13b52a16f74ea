#include "boolnet/schedule.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace boolnet {

UpdateSchedule::UpdateSchedule(std::vector<std::vector<std::string>> blocks) : blocks_(std::move(blocks)) {
  std::set<std::string> seen;
  for (const auto& block : blocks_) {
    if (block.empty()) throw NetworkError("schedule has an empty block");
    for (const auto& node : block) {
      if (!seen.insert(node).second) throw NetworkError("node '" + node + "' appears twice in schedule");
    }
  }
}

UpdateSchedule UpdateSchedule::parallel(const std::vector<std::string>& nodes) {
  if (nodes.empty()) return UpdateSchedule();
  return UpdateSchedule({nodes});
}

UpdateSchedule UpdateSchedule::parse(std::string_view text) {
  std::vector<std::vector<std::string>> blocks;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])) != 0) ++pos;
  };
  auto fail = [&](const std::string& what) -> ParseError { return ParseError("schedule: " + what, pos); };
  skip();
  if (pos == text.size()) throw fail("empty schedule");
  while (true) {
    skip();
    if (pos == text.size()) break;
    if (text[pos] != '(') throw fail("expected '('");
    ++pos;
    std::vector<std::string> block;
    while (true) {
      skip();
      const std::size_t start = pos;
      while (pos < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[pos])) != 0 || text[pos] == '_')) {
        ++pos;
      }
      if (pos == start) throw fail("expected node name");
      block.emplace_back(text.substr(start, pos - start));
      skip();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos < text.size() && text[pos] == ')') {
        ++pos;
        break;
      }
      throw fail("expected ',' or ')'");
    }
    blocks.push_back(std::move(block));
  }
  return UpdateSchedule(std::move(blocks));
}

UpdateSchedule UpdateSchedule::from_levels(const std::vector<std::string>& nodes,
                                           const std::vector<std::size_t>& levels) {
  if (nodes.size() != levels.size()) throw NetworkError("level vector size mismatch");
  const std::size_t k = levels.empty() ? 0 : *std::max_element(levels.begin(), levels.end());
  std::vector<std::vector<std::string>> blocks(k);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (levels[i] == 0) throw NetworkError("levels are 1-based");
    blocks[levels[i] - 1].push_back(nodes[i]);
  }
  for (const auto& b : blocks) {
    if (b.empty()) throw NetworkError("levels must be consecutive");
  }
  return UpdateSchedule(std::move(blocks));
}

std::vector<std::size_t> UpdateSchedule::levels(const std::vector<std::string>& nodes) const {
  std::vector<std::size_t> out(nodes.size(), 0);
  std::size_t covered = 0;
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    for (const auto& name : blocks_[b]) {
      auto it = std::find(nodes.begin(), nodes.end(), name);
      if (it == nodes.end()) throw NetworkError("schedule names unknown or non-dynamic node '" + name + "'");
      out[static_cast<std::size_t>(it - nodes.begin())] = b + 1;
      ++covered;
    }
  }
  if (covered != nodes.size()) {
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      if (out[i] == 0) throw NetworkError("schedule does not cover node '" + nodes[i] + "'");
    }
  }
  return out;
}

std::string UpdateSchedule::to_string() const {
  std::string out;
  for (const auto& block : blocks_) {
    out += '(';
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (i) out += ',';
      out += block[i];
    }
    out += ')';
  }
  return out;
}

boost::multiprecision::cpp_int count_schedules(unsigned n) {
  using boost::multiprecision::cpp_int;
  std::vector<cpp_int> t(n + 1);
  t[0] = 1;
  for (unsigned m = 1; m <= n; ++m) {
    cpp_int binom = 1;  // C(m, k), updated incrementally
    cpp_int sum = 0;
    for (unsigned k = 0; k < m; ++k) {
      sum += binom * t[k];
      binom = binom * (m - k) / (k + 1);
    }
    t[m] = sum;
  }
  return t[n];
}

std::size_t Labeling::minus_count() const {
  return static_cast<std::size_t>(std::count(labels.begin(), labels.end(), Label::Minus));
}

std::string Labeling::to_string() const {
  std::string out;
  out.reserve(labels.size());
  for (auto l : labels) out += l == Label::Plus ? '+' : '-';
  return out;
}

Labeling label_of_levels(const std::vector<std::size_t>& levels, const InteractionDigraph& g) {
  if (levels.size() != g.vertex_count()) throw NetworkError("level vector does not match digraph");
  Labeling lab;
  lab.labels.reserve(g.arc_count());
  for (const auto& a : g.arcs()) {
    lab.labels.push_back(levels[a.source] >= levels[a.target] ? Label::Plus : Label::Minus);
  }
  return lab;
}

Labeling label_of(const UpdateSchedule& schedule, const InteractionDigraph& g) {
  return label_of_levels(schedule.levels(g.vertices()), g);
}

namespace {

// Tarjan's SCC over an adjacency list; returns the component id of each vertex.
std::vector<std::size_t> strong_components(const std::vector<std::vector<std::size_t>>& adj) {
  const std::size_t n = adj.size();
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(n, kUnset), low(n, 0), comp(n, kUnset);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::size_t counter = 0;
  std::size_t comps = 0;

  struct Frame {
    std::size_t v;
    std::size_t next;
  };
  std::vector<Frame> call;
  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != kUnset) continue;
    call.push_back({root, 0});
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      Frame& f = call.back();
      if (f.next < adj[f.v].size()) {
        const std::size_t w = adj[f.v][f.next++];
        if (index[w] == kUnset) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
        continue;
      }
      const std::size_t v = f.v;
      call.pop_back();
      if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
      if (low[v] == index[v]) {
        while (true) {
          const std::size_t w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp[w] = comps;
          if (w == v) break;
        }
        ++comps;
      }
    }
  }
  return comp;
}

}  // namespace

bool is_update_digraph(const Labeling& labeling, const InteractionDigraph& g) {
  if (labeling.labels.size() != g.arc_count()) throw NetworkError("labeling does not match digraph");
  std::vector<std::vector<std::size_t>> adj(g.vertex_count());
  for (std::size_t k = 0; k < g.arc_count(); ++k) {
    const Arc& a = g.arcs()[k];
    if (labeling.labels[k] == Label::Minus) {
      if (a.is_loop()) return false;
      adj[a.target].push_back(a.source);
    } else {
      adj[a.source].push_back(a.target);
    }
  }
  const auto comp = strong_components(adj);
  for (std::size_t k = 0; k < g.arc_count(); ++k) {
    const Arc& a = g.arcs()[k];
    if (labeling.labels[k] == Label::Minus && comp[a.source] == comp[a.target]) return false;
  }
  return true;
}

std::vector<std::size_t> levels_from_labeling(const Labeling& labeling, const InteractionDigraph& g) {
  if (labeling.labels.size() != g.arc_count()) throw NetworkError("labeling does not match digraph");
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> level(n, 1);
  // Longest-path relaxation; a labeling is feasible iff it settles within n passes.
  for (std::size_t pass = 0; pass <= n; ++pass) {
    bool changed = false;
    for (std::size_t k = 0; k < g.arc_count(); ++k) {
      const Arc& a = g.arcs()[k];
      if (labeling.labels[k] == Label::Plus) {
        if (level[a.source] < level[a.target]) {
          level[a.source] = level[a.target];
          changed = true;
        }
      } else if (level[a.target] < level[a.source] + 1) {
        level[a.target] = level[a.source] + 1;
        changed = true;
      }
    }
    if (!changed) {
      if (label_of_levels(level, g) != labeling) throw NetworkError("labeling round-trip failed");
      return level;
    }
  }
  throw NetworkError("labeling " + labeling.to_string() + " is not an update digraph");
}

UpdateSchedule schedule_from_labeling(const Labeling& labeling, const InteractionDigraph& g) {
  return UpdateSchedule::from_levels(g.vertices(), levels_from_labeling(labeling, g));
}

std::uint64_t labeling_space(const InteractionDigraph& g) {
  std::size_t free_arcs = 0;
  for (const auto& a : g.arcs()) free_arcs += a.is_loop() ? 0 : 1;
  if (free_arcs >= 64) return 0;
  return std::uint64_t{1} << free_arcs;
}

std::uint64_t enumerate_representatives(const InteractionDigraph& g,
                                        const std::function<void(const Representative&)>& sink,
                                        const EnumerationOptions& options) {
  const std::uint64_t space = labeling_space(g);
  if (space == 0 || space > options.max_labelings) {
    throw GuardError("digraph has " + std::to_string(g.arc_count()) + " arcs; labeling space exceeds guard of " +
                     std::to_string(options.max_labelings));
  }
  std::vector<std::size_t> free_arcs;
  for (std::size_t k = 0; k < g.arc_count(); ++k) {
    if (!g.arcs()[k].is_loop()) free_arcs.push_back(k);
  }
  Representative rep;
  rep.labeling.labels.assign(g.arc_count(), Label::Plus);
  std::uint64_t count = 0;
  for (std::uint64_t idx = 0; idx < space; ++idx) {
    for (std::size_t b = 0; b < free_arcs.size(); ++b) {
      rep.labeling.labels[free_arcs[b]] = ((idx >> b) & 1U) != 0 ? Label::Minus : Label::Plus;
    }
    if (!is_update_digraph(rep.labeling, g)) continue;
    rep.index = idx;
    rep.levels = levels_from_labeling(rep.labeling, g);
    ++count;
    if (sink) sink(rep);
  }
  return count;
}

std::vector<UpdateSchedule> representative_schedules(const InteractionDigraph& g, const EnumerationOptions& options) {
  std::vector<UpdateSchedule> out;
  enumerate_representatives(
      g, [&](const Representative& r) { out.push_back(UpdateSchedule::from_levels(g.vertices(), r.levels)); },
      options);
  return out;
}

}  // namespace boolnet

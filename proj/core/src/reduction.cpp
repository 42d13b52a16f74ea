#include "boolnet/reduction.hpp"

#include <algorithm>
#include <set>

namespace boolnet {

namespace {

Network apply_pins(Network net, const std::map<std::string, bool>& pins) {
  for (const auto& [node, value] : pins) {
    if (net.find(node)) net = pin(net, node, value);
  }
  return net;
}

// How to read one shared node out of a state code of a given network.
struct Source {
  std::optional<std::size_t> bit;  // shift amount in the state code
  bool constant = false;
};

std::vector<Source> sources(const Network& net, const std::vector<std::string>& shared) {
  std::vector<Source> out;
  for (const auto& name : shared) {
    const std::size_t i = net.index_of(name);
    Source s;
    if (auto pos = net.state_position(i)) {
      s.bit = net.width() - 1 - *pos;
    } else {
      s.constant = net.pinned_value(i).value_or(false);
    }
    out.push_back(s);
  }
  return out;
}

std::uint64_t project(std::uint64_t code, const std::vector<Source>& src) {
  std::uint64_t out = 0;
  for (const auto& s : src) {
    const bool v = s.bit ? ((code >> *s.bit) & 1U) != 0 : s.constant;
    out = (out << 1) | (v ? 1U : 0U);
  }
  return out;
}

std::vector<ProjectedAttractor> project_all(const AttractorReport& report, const std::vector<Source>& src) {
  std::vector<ProjectedAttractor> out;
  for (std::size_t i = 0; i < report.attractors.size(); ++i) {
    const auto& a = report.attractors[i];
    std::vector<std::uint64_t> seq;
    for (auto s : a.states) seq.push_back(project(s, src));
    // Shortest period of the projected sequence.
    std::size_t period = seq.size();
    for (std::size_t p = 1; p < seq.size(); ++p) {
      if (seq.size() % p != 0) continue;
      bool ok = true;
      for (std::size_t t = 0; t + p < seq.size() && ok; ++t) ok = seq[t] == seq[t + p];
      if (ok) {
        period = p;
        break;
      }
    }
    seq.resize(period);
    ProjectedAttractor pa;
    pa.source = i;
    pa.states = canonical_cycle(std::move(seq));
    pa.original_period = a.states.size();
    pa.collapsed = period < a.states.size();
    pa.basin_percent = report.basin_percent(i);
    out.push_back(std::move(pa));
  }
  return out;
}

}  // namespace

ReductionCheck verify_reduction(const Network& large_in, const Network& small_in, const ReductionOptions& options) {
  const Network large = apply_pins(large_in, options.pins);
  const Network small = apply_pins(small_in, options.pins);

  ReductionCheck check;
  check.large_network = large.name();
  check.small_network = small.name();
  check.pins = options.pins;
  for (std::size_t i = 0; i < small.size(); ++i) {
    if (small.is_output(i)) continue;
    const auto j = large.find(small.nodes()[i]);
    if (j && !large.is_output(*j)) check.shared_nodes.push_back(small.nodes()[i]);
  }
  if (check.shared_nodes.empty()) throw NetworkError("networks share no non-output nodes");
  if (check.shared_nodes.size() > 64) throw GuardError("more than 64 shared nodes");

  check.large_report = find_attractors(large, options.analysis);
  check.small_report = find_attractors(small, options.analysis);
  check.large = project_all(check.large_report, sources(large, check.shared_nodes));
  check.small = project_all(check.small_report, sources(small, check.shared_nodes));

  std::set<std::vector<std::uint64_t>> large_set, small_set;
  for (const auto& p : check.large) large_set.insert(p.states);
  for (const auto& p : check.small) small_set.insert(p.states);
  for (auto& p : check.large) p.matched = small_set.count(p.states) != 0;
  for (auto& p : check.small) p.matched = large_set.count(p.states) != 0;

  auto all_matched = [](const std::vector<ProjectedAttractor>& v, bool cycles) {
    return std::all_of(v.begin(), v.end(), [&](const ProjectedAttractor& p) {
      return (p.original_period > 1) != cycles || p.matched;
    });
  };
  check.fixed_points_match = all_matched(check.large, false) && all_matched(check.small, false);
  const bool small_cycles = all_matched(check.small, true);
  check.cycles_match = small_cycles && all_matched(check.large, true);
  check.matches = check.fixed_points_match && (check.cycles_match || (options.allow_extra_cycles_in_large && small_cycles));
  return check;
}

}  // namespace boolnet

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "boolnet/expr.hpp"
#include "boolnet/network.hpp"

namespace testing_support {

// Random rule over the given variable names; `depth` bounds the tree height.
inline std::string random_rule(std::mt19937& rng, const std::vector<std::string>& vars, int depth) {
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 1 : 4);
  const int kind = pick(rng);
  if (kind <= 1) {
    const std::string v = vars[std::uniform_int_distribution<std::size_t>(0, vars.size() - 1)(rng)];
    return kind == 0 ? v : "!" + v;
  }
  const std::string lhs = random_rule(rng, vars, depth - 1);
  const std::string rhs = random_rule(rng, vars, depth - 1);
  if (kind == 2) return "!(" + lhs + ")";
  return "(" + lhs + (kind == 3 ? " & " : " | ") + rhs + ")";
}

// Network x0..x(n-1); each rule mentions 1..3 randomly chosen nodes.
inline boolnet::Network random_network(std::mt19937& rng, std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
  std::vector<boolnet::Expr> rules;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::string> regs;
    const std::size_t k = std::uniform_int_distribution<std::size_t>(1, std::min<std::size_t>(3, n))(rng);
    std::vector<std::string> pool = names;
    std::shuffle(pool.begin(), pool.end(), rng);
    regs.assign(pool.begin(), pool.begin() + static_cast<long>(k));
    rules.push_back(boolnet::parse_expression(random_rule(rng, regs, 2)));
  }
  return boolnet::Network("random", names, rules);
}

// Every ordered set partition of n items, as 1-based levels per item.
inline std::vector<std::vector<std::size_t>> all_level_vectors(std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> lv(n, 1);
  while (true) {
    std::set<std::size_t> used(lv.begin(), lv.end());
    if (!used.empty() && *used.rbegin() == used.size()) out.push_back(lv);
    std::size_t i = 0;
    while (i < n && lv[i] == n) lv[i++] = 1;
    if (i == n) break;
    ++lv[i];
  }
  if (n == 0) out.push_back({});
  return out;
}

// Reference successor: blocks in level order, each reading the pre-block state.
inline std::vector<bool> reference_step(const boolnet::Network& net, std::vector<bool> state,
                                        const std::vector<std::size_t>& levels) {
  const auto& dyn = net.dynamic_nodes();
  std::size_t max_level = 0;
  for (auto l : levels) max_level = std::max(max_level, l);
  for (std::size_t level = 1; level <= max_level; ++level) {
    boolnet::Assignment env;
    for (std::size_t i = 0; i < net.size(); ++i) {
      if (auto p = net.state_position(i)) env[net.nodes()[i]] = state[*p];
      else if (auto v = net.pinned_value(i)) env[net.nodes()[i]] = *v;
    }
    std::vector<bool> next = state;
    for (std::size_t k = 0; k < dyn.size(); ++k) {
      if (levels[k] == level) next[k] = boolnet::evaluate(net.rule(dyn[k]), env);
    }
    state = next;
  }
  return state;
}

inline std::vector<bool> decode(std::uint64_t code, std::size_t width) {
  std::vector<bool> out(width);
  for (std::size_t k = 0; k < width; ++k) out[k] = ((code >> (width - 1 - k)) & 1U) != 0;
  return out;
}

inline std::uint64_t encode(const std::vector<bool>& bits) {
  std::uint64_t code = 0;
  for (bool b : bits) code = (code << 1) | (b ? 1U : 0U);
  return code;
}

// Attractor -> basin size, computed by walking every trajectory.
inline std::map<std::vector<std::uint64_t>, std::uint64_t> reference_attractors(
    const std::vector<std::uint64_t>& succ) {
  std::map<std::vector<std::uint64_t>, std::uint64_t> out;
  for (std::uint64_t s = 0; s < succ.size(); ++s) {
    std::map<std::uint64_t, std::size_t> seen;
    std::vector<std::uint64_t> path;
    std::uint64_t x = s;
    while (!seen.count(x)) {
      seen[x] = path.size();
      path.push_back(x);
      x = succ[x];
    }
    std::vector<std::uint64_t> cycle(path.begin() + static_cast<long>(seen[x]), path.end());
    std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
    ++out[cycle];
  }
  return out;
}

}  // namespace testing_support

#include "boolnet/fitting.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace boolnet {

std::vector<std::string> generate_candidates(const std::vector<std::string>& regulators) {
  auto lit = [](const std::string& v, bool negated) { return negated ? "!" + v : v; };
  std::vector<std::string> out;
  switch (regulators.size()) {
    case 1:
      out.push_back(lit(regulators[0], false));
      out.push_back(lit(regulators[0], true));
      break;
    case 2:
      for (bool nx : {false, true}) {
        for (bool ny : {false, true}) {
          const auto x = lit(regulators[0], nx);
          const auto y = lit(regulators[1], ny);
          out.push_back(x + " & " + y);
          out.push_back(x + " | " + y);
        }
      }
      break;
    case 3:
      for (bool nx : {false, true}) {
        for (bool ny : {false, true}) {
          for (bool nz : {false, true}) {
            const auto x = lit(regulators[0], nx);
            const auto y = lit(regulators[1], ny);
            const auto z = lit(regulators[2], nz);
            out.push_back(x + " & " + y + " & " + z);
            out.push_back(x + " | " + y + " | " + z);
            out.push_back("(" + x + " & " + y + ") | " + z);
            out.push_back("(" + x + " | " + y + ") & " + z);
          }
        }
      }
      break;
    default:
      throw NetworkError("candidate generation needs 1 to 3 regulators, got " + std::to_string(regulators.size()));
  }
  // Exact-string dedup; only matters if a caller repeats a regulator.
  std::vector<std::string> unique;
  std::set<std::string> seen;
  for (auto& e : out) {
    if (seen.insert(e).second) unique.push_back(std::move(e));
  }
  return unique;
}

namespace {

void for_each_combination(std::size_t n, std::size_t r, const std::function<void(const std::vector<std::size_t>&)>& f) {
  if (r == 0 || r > n) return;
  std::vector<std::size_t> idx(r);
  for (std::size_t i = 0; i < r; ++i) idx[i] = i;
  while (true) {
    f(idx);
    std::size_t i = r;
    while (i > 0 && idx[i - 1] == n - r + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::set<std::vector<std::uint64_t>> attractor_set(const AttractorReport& report, bool fixed_points_only) {
  std::set<std::vector<std::uint64_t>> out;
  for (const auto& a : report.attractors) {
    if (fixed_points_only && a.kind() != AttractorKind::FixedPoint) continue;
    out.insert(a.states);
  }
  return out;
}

}  // namespace

FitReport fit_rules(const Network& net, const std::vector<std::string>& targets,
                    std::vector<std::vector<std::uint64_t>> desired, const FitOptions& options) {
  if (options.max_regulators < 1 || options.max_regulators > 3) {
    throw NetworkError("max_regulators must be between 1 and 3");
  }
  if (net.width() > options.analysis.max_width) {
    throw GuardError("state width " + std::to_string(net.width()) + " exceeds the limit of " +
                     std::to_string(options.analysis.max_width));
  }
  const auto names = net.dynamic_names();
  const std::size_t width = net.width();

  if (desired.empty()) {
    for (const auto& a : find_attractors(net, options.analysis).attractors) {
      if (a.kind() == AttractorKind::FixedPoint) desired.push_back(a.states);
    }
    if (desired.empty()) throw NetworkError("network has no fixed points to preserve");
  }
  for (auto& a : desired) {
    if (a.empty()) throw NetworkError("desired attractor without states");
    for (auto s : a) {
      if (width < 64 && (s >> width) != 0) throw NetworkError("desired state wider than the network");
    }
    a = canonical_cycle(std::move(a));
  }
  std::sort(desired.begin(), desired.end());
  desired.erase(std::unique(desired.begin(), desired.end()), desired.end());
  std::set<std::vector<std::uint64_t>> wanted;
  for (const auto& a : desired) {
    if (!options.fixed_points_only || a.size() == 1) wanted.insert(a);
  }

  std::vector<std::size_t> target_positions;
  if (targets.empty()) {
    for (std::size_t k = 0; k < width; ++k) target_positions.push_back(k);
  } else {
    for (const auto& t : targets) {
      const auto pos = net.state_position(net.index_of(t));
      if (!pos) throw NetworkError("target '" + t + "' is not a state node");
      target_positions.push_back(*pos);
    }
    std::sort(target_positions.begin(), target_positions.end());
    target_positions.erase(std::unique(target_positions.begin(), target_positions.end()), target_positions.end());
  }

  // (state, expected next value of the target) pairs drawn from the desired attractors.
  auto local_constraints = [&](std::size_t target) {
    std::vector<std::pair<std::uint64_t, bool>> out;
    for (const auto& a : desired) {
      for (std::size_t t = 0; t < a.size(); ++t) {
        const std::uint64_t next = a[(t + 1) % a.size()];
        out.emplace_back(a[t], ((next >> (width - 1 - target)) & 1U) != 0);
      }
    }
    return out;
  };

  FitReport report;
  report.network = net.name();
  report.desired = desired;
  for (auto pos : target_positions) {
    const std::string& target = names[pos];
    report.targets.push_back(target);
    auto& accepted = report.accepted[target];
    const auto constraints = local_constraints(pos);

    std::vector<std::size_t> inputs;
    for (std::size_t k = 0; k < width; ++k) {
      if (k != pos) inputs.push_back(k);
    }
    for (std::size_t r = 1; r <= options.max_regulators; ++r) {
      for_each_combination(inputs.size(), r, [&](const std::vector<std::size_t>& combo) {
        std::vector<std::string> regs;
        for (auto c : combo) regs.push_back(names[inputs[c]]);
        for (const auto& text : generate_candidates(regs)) {
          ++report.generated;
          const Expr expr = parse_expression(text);
          const bool local = std::all_of(constraints.begin(), constraints.end(), [&](const auto& c) {
            return evaluate(expr, [&](const std::string& v) -> std::optional<bool> {
                     const auto k = net.state_position(net.index_of(v));
                     return ((c.first >> (width - 1 - *k)) & 1U) != 0;
                   }) == c.second;
          });
          if (!local) continue;
          ++report.local_passed;
          const Network refit = apply_rule(net, target, expr);
          const auto got = attractor_set(find_attractors(refit, options.analysis), options.fixed_points_only);
          if (got != wanted) continue;
          ++report.global_passed;
          accepted.push_back(CandidateRule{target, text, regs, true, true});
        }
      });
    }
  }
  return report;
}

}  // namespace boolnet

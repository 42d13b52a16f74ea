#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "boolnet/dynamics.hpp"
#include "boolnet/network.hpp"

namespace boolnet {

/// Candidate rules over 1-3 regulators, in generation order:
///  - one regulator `v`: `v`, `!v`;
///  - two `x, y`: for each sign of x, each sign of y: `x & y`, `x | y`;
///  - three `x, y, z`: for each of the 8 sign assignments: `x & y & z`,
///    `x | y | z`, `(x & y) | z`, `(x | y) & z`.
/// Signs vary with the first regulator outermost and positive first.
/// Throws NetworkError for an empty or oversized regulator set.
std::vector<std::string> generate_candidates(const std::vector<std::string>& regulators);

struct CandidateRule {
  std::string target;
  std::string expression;
  std::vector<std::string> regulators;
  bool local_pass = false;
  bool global_pass = false;
};

struct FitOptions {
  std::size_t max_regulators = 3;
  /// Compare fixed-point sets only, ignoring limit cycles in the refitted network.
  bool fixed_points_only = false;
  AnalysisOptions analysis = default_analysis_options();
};

struct FitReport {
  std::string network;
  std::vector<std::vector<std::uint64_t>> desired;  ///< canonical attractors
  std::map<std::string, std::vector<CandidateRule>> accepted;  ///< per target, generation order
  std::uint64_t generated = 0;
  std::uint64_t local_passed = 0;
  std::uint64_t global_passed = 0;

  std::vector<std::string> targets;  ///< in declaration order
};

/// Two-stage search for replacement rules.
///
/// Stage 1 keeps a candidate only if it reproduces the target's next value on
/// every desired attractor state. Stage 2 swaps the rule in and requires the
/// parallel attractor set of the new network to equal `desired` (fixed points
/// and cycles, or fixed points only with `fixed_points_only`).
///
/// `desired` holds attractors as state-code sequences; empty means "the fixed
/// points of `net` under the parallel schedule". Regulators and targets are
/// dynamic nodes; an empty `targets` means all of them.
FitReport fit_rules(const Network& net, const std::vector<std::string>& targets = {},
                    std::vector<std::vector<std::uint64_t>> desired = {}, const FitOptions& options = {});

}  // namespace boolnet

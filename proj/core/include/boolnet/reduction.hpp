#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "boolnet/dynamics.hpp"
#include "boolnet/network.hpp"

namespace boolnet {

/// An attractor of one network, restricted to the shared nodes.
struct ProjectedAttractor {
  std::size_t source = 0;             ///< index in that network's AttractorReport
  std::vector<std::uint64_t> states;  ///< canonical, over shared nodes, minimal period
  std::size_t original_period = 1;
  bool collapsed = false;             ///< projection shortened the cycle
  double basin_percent = 0.0;
  bool matched = false;
};

struct ReductionOptions {
  std::map<std::string, bool> pins;  ///< applied to each network that has the node
  bool allow_extra_cycles_in_large = false;
  AnalysisOptions analysis = default_analysis_options();
};

struct ReductionCheck {
  std::string large_network;
  std::string small_network;
  std::vector<std::string> shared_nodes;  ///< in the small network's order
  std::map<std::string, bool> pins;
  AttractorReport large_report;
  AttractorReport small_report;
  std::vector<ProjectedAttractor> large;
  std::vector<ProjectedAttractor> small;
  bool fixed_points_match = false;
  bool cycles_match = false;
  /// Overall verdict under the chosen strictness.
  bool matches = false;
};

/// Compares parallel attractor landscapes on the nodes the two networks share.
/// The check is set-based on projected states; basins are reported, not compared.
ReductionCheck verify_reduction(const Network& large, const Network& small, const ReductionOptions& options = {});

}  // namespace boolnet

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "boolnet/dynamics.hpp"
#include "boolnet/network.hpp"
#include "boolnet/schedule.hpp"

namespace boolnet {

/// Basin statistics of one attractor across the schedules in which it occurs.
struct AttractorRecord {
  std::vector<std::uint64_t> states;  ///< canonical form
  std::uint64_t count = 0;            ///< schedules in which it occurs
  std::uint64_t basin_sum = 0;
  std::uint64_t basin_sum_sq = 0;

  double mean_basin() const;
  /// Sample standard deviation (divides by `count - 1`); 0 for a single occurrence.
  double sd_basin() const;
};

struct EnsembleStats {
  std::string network;
  std::uint64_t schedules = 0;
  std::uint64_t fixed_point_only = 0;
  /// Number of limit cycles -> number of schedules with that many (zero excluded).
  std::map<std::size_t, std::uint64_t> cycle_histogram;
  /// Sorted by descending count, then state code.
  std::vector<AttractorRecord> fixed_points;
  /// Sorted by descending count, descending mean basin, then first state code.
  std::vector<AttractorRecord> cycles;
  /// Cycle length -> number of occurrences.
  std::map<std::size_t, std::uint64_t> cycle_lengths;

  std::uint64_t with_cycles() const noexcept { return schedules - fixed_point_only; }
  double fixed_point_only_percent() const;
  /// Sum of all cycle occurrences over all schedules.
  std::uint64_t cycle_occurrences() const;
  /// Share of one cycle record among all cycle occurrences, in percent.
  double cycle_percent(const AttractorRecord& record) const;
};

struct EnsembleOptions {
  EnumerationOptions enumeration;
  AnalysisOptions analysis = default_analysis_options();
};

/// Runs find_attractors under every representative schedule and aggregates.
EnsembleStats analyze_ensemble(const Network& net, const EnsembleOptions& options = {});

}  // namespace boolnet

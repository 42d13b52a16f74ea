#pragma once

#include <string>

#include "boolnet/dynamics.hpp"
#include "boolnet/ensemble.hpp"
#include "boolnet/fitting.hpp"
#include "boolnet/network.hpp"
#include "boolnet/reduction.hpp"
#include "boolnet/schedule.hpp"

namespace boolnet {

// Serializers for every report type. JSON documents follow the schemas in
// schemas/; CSV layouts put components in rows and attractors in columns.

struct TableOptions {
  /// Append output-node rows.
  bool include_outputs = false;
  /// Print `-` for output nodes inside limit cycles, as published tables do.
  bool dash_cycle_outputs = false;
};

std::string attractors_json(const Network& net, const AttractorReport& report);
std::string attractors_csv(const Network& net, const AttractorReport& report, const TableOptions& options = {});
std::string attractors_table(const Network& net, const AttractorReport& report, const TableOptions& options = {});

/// `state,attractor_id` rows for every state.
std::string basins_csv(const BasinMap& basins);

/// Fixed-point ensemble table: configuration, mean basin, SD, count.
std::string ensemble_steady_csv(const EnsembleStats& stats, std::size_t width);
/// Cycle ensemble table: configuration, mean basin, SD, count, percent.
std::string ensemble_cycles_csv(const EnsembleStats& stats, std::size_t width);
std::string ensemble_summary_json(const EnsembleStats& stats, std::size_t width);

std::string fit_json(const FitReport& report, std::size_t width);
std::string reduction_json(const ReductionCheck& check);
std::string circuits_json(const InteractionDigraph& g, const std::vector<SignedCircuit>& circuits);

/// `index,labeling,representative` rows for every valid labeling.
std::string schedule_classes_csv(const InteractionDigraph& g, const EnumerationOptions& options = {});

}  // namespace boolnet

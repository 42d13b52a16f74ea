#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "boolnet/compiled.hpp"
#include "boolnet/network.hpp"
#include "boolnet/schedule.hpp"

namespace boolnet {

/// Configuration of the state-vector nodes. Renders as a bitstring whose
/// leftmost character is the first dynamic node; the integer code uses the
/// same order with the leftmost bit most significant.
struct State {
  std::uint64_t code = 0;
  std::size_t width = 0;

  static State parse(std::string_view bits);
  /// Bit of the k-th dynamic node.
  bool bit(std::size_t k) const { return ((code >> (width - 1 - k)) & 1U) != 0; }
  std::string to_string() const;

  friend bool operator==(const State&, const State&) = default;
};

std::string to_bitstring(std::uint64_t code, std::size_t width);

enum class AttractorKind { FixedPoint, LimitCycle };

struct Attractor {
  /// Fixed point: one state. Limit cycle: the orbit rotated so that its
  /// smallest code comes first; states[t + 1] is the successor of states[t].
  std::vector<std::uint64_t> states;
  /// Number of states that reach this attractor, including its own.
  std::uint64_t basin = 0;

  AttractorKind kind() const noexcept { return states.size() == 1 ? AttractorKind::FixedPoint : AttractorKind::LimitCycle; }
  std::size_t period() const noexcept { return states.size(); }
};

/// Rotates a cycle so its minimal element is first.
std::vector<std::uint64_t> canonical_cycle(std::vector<std::uint64_t> cycle);

struct AttractorReport {
  std::string network;
  std::string schedule;
  std::size_t width = 0;
  std::vector<std::string> state_nodes;
  /// Sorted by descending basin, then by first state code.
  std::vector<Attractor> attractors;

  std::uint64_t state_count() const noexcept { return std::uint64_t{1} << width; }
  double basin_percent(std::size_t i) const;
  std::size_t fixed_point_count() const;
  std::size_t cycle_count() const;
};

struct AnalysisOptions {
  std::size_t max_width = 28;
  unsigned threads = 1;
};

/// 28, or the value of the BOOLNET_MAX_WIDTH environment variable when set.
std::size_t default_max_width();
AnalysisOptions default_analysis_options();

/// One schedule pass: blocks in order, rules inside a block read the same
/// pre-block state.
State step(const Network& net, const State& state, const UpdateSchedule& schedule);

/// Exact attractors and basins over all 2^width states.
/// Throws GuardError when the width exceeds `options.max_width`.
AttractorReport find_attractors(const Network& net, const UpdateSchedule& schedule,
                                const AnalysisOptions& options = default_analysis_options());
AttractorReport find_attractors(const Network& net, const AnalysisOptions& options = default_analysis_options());
/// Core traversal over a precompiled network; report metadata is left empty.
AttractorReport find_attractors(const CompiledNetwork& compiled, const AnalysisOptions& options);

struct BasinMap {
  AttractorReport report;
  /// Index into `report.attractors` for every state code.
  std::vector<std::uint32_t> attractor_of;
};

BasinMap map_basins(const Network& net, const UpdateSchedule& schedule,
                    const AnalysisOptions& options = default_analysis_options());

/// Output-node values for a state (pinned values supplied automatically).
std::vector<std::pair<std::string, bool>> phenotype_projection(const Network& net, const State& state);

/// Value of every node in declaration order: dynamic nodes from the state,
/// pinned nodes from their pin, output nodes from their rules.
std::vector<std::pair<std::string, bool>> node_values(const Network& net, const State& state);

/// State transition graph in DOT; refuses widths above `max_width`.
std::string export_stg(const Network& net, const UpdateSchedule& schedule, std::size_t max_width = 16);

}  // namespace boolnet

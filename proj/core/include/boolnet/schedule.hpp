#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "boolnet/network.hpp"

namespace boolnet {

/// Block-sequential update schedule `(A1)(A2)...(Ak)`: blocks are applied in
/// order, nodes inside a block are updated simultaneously. A single block is
/// the parallel (synchronous) schedule.
class UpdateSchedule {
 public:
  UpdateSchedule() = default;
  /// Blocks must be non-empty and pairwise disjoint.
  explicit UpdateSchedule(std::vector<std::vector<std::string>> blocks);

  static UpdateSchedule parallel(const std::vector<std::string>& nodes);
  /// Accepts `(A)(B,C)` with arbitrary whitespace.
  static UpdateSchedule parse(std::string_view text);
  /// Groups `nodes` by 1-based level; levels must be consecutive from 1.
  static UpdateSchedule from_levels(const std::vector<std::string>& nodes, const std::vector<std::size_t>& levels);

  const std::vector<std::vector<std::string>>& blocks() const noexcept { return blocks_; }
  std::size_t block_count() const noexcept { return blocks_.size(); }
  bool is_parallel() const noexcept { return blocks_.size() == 1; }

  /// 1-based block index of each entry of `nodes`. Throws NetworkError unless
  /// the schedule covers exactly those nodes.
  std::vector<std::size_t> levels(const std::vector<std::string>& nodes) const;

  std::string to_string() const;

  friend bool operator==(const UpdateSchedule&, const UpdateSchedule&) = default;

 private:
  std::vector<std::vector<std::string>> blocks_;
};

/// Number of block-sequential schedules on n nodes (ordered set partitions):
/// T_0 = 1, T_n = sum_{k<n} C(n,k) T_k.
boost::multiprecision::cpp_int count_schedules(unsigned n);

enum class Label : unsigned char { Plus, Minus };

/// One label per arc of an InteractionDigraph, indexed like `arcs()`.
struct Labeling {
  std::vector<Label> labels;

  std::size_t minus_count() const;
  /// One character per arc, `+` or `-`.
  std::string to_string() const;
  friend bool operator==(const Labeling&, const Labeling&) = default;
};

/// `+` when the source is updated no earlier than the target, `-` otherwise.
Labeling label_of(const UpdateSchedule& schedule, const InteractionDigraph& g);
Labeling label_of_levels(const std::vector<std::size_t>& levels, const InteractionDigraph& g);

/// True iff the labeling is realized by some schedule: after reversing every
/// `-` arc, no strongly connected component holds both ends of a `-` arc.
bool is_update_digraph(const Labeling& labeling, const InteractionDigraph& g);

/// Minimal 1-based levels realizing the labeling (`+` arc (i,j): level i >= level j;
/// `-` arc: level j >= level i + 1). Throws NetworkError for an invalid labeling.
std::vector<std::size_t> levels_from_labeling(const Labeling& labeling, const InteractionDigraph& g);

/// Canonical representative of the labeling's equivalence class.
UpdateSchedule schedule_from_labeling(const Labeling& labeling, const InteractionDigraph& g);

struct Representative {
  std::uint64_t index = 0;  ///< raw labeling index; bit k set = k-th non-loop arc is `-`
  Labeling labeling;
  std::vector<std::size_t> levels;
};

struct EnumerationOptions {
  /// Refuse graphs with more raw labelings (2^non-loop arcs) than this.
  std::uint64_t max_labelings = std::uint64_t{1} << 26;
};

/// 2^(number of non-loop arcs), or 0 when that does not fit in 64 bits.
std::uint64_t labeling_space(const InteractionDigraph& g);

/// Streams one representative per valid labeling in raw-index order (the
/// parallel schedule first). Returns the number of representatives.
/// Throws GuardError when the labeling space exceeds the guard.
std::uint64_t enumerate_representatives(const InteractionDigraph& g,
                                        const std::function<void(const Representative&)>& sink,
                                        const EnumerationOptions& options = {});

std::vector<UpdateSchedule> representative_schedules(const InteractionDigraph& g,
                                                     const EnumerationOptions& options = {});

}  // namespace boolnet

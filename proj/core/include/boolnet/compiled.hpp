#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "boolnet/network.hpp"
#include "boolnet/schedule.hpp"

namespace boolnet {

/// Rules of a network lowered to postfix bytecode and evaluated 64 states at a
/// time, one state per bit lane.
///
/// States are integer codes over the network's state vector: the first dynamic
/// node is the most significant bit. The semantic contract is per-state
/// equality with `evaluate()` on the rule trees under the given schedule.
class CompiledNetwork {
 public:
  /// `levels` holds the 1-based block index of every dynamic node.
  CompiledNetwork(const Network& net, const std::vector<std::size_t>& levels);
  CompiledNetwork(const Network& net, const UpdateSchedule& schedule);
  /// Parallel schedule.
  explicit CompiledNetwork(const Network& net);

  std::size_t width() const noexcept { return width_; }

  std::uint64_t successor(std::uint64_t code) const;

  /// Successors of the consecutive codes `first, first+1, ...`, one per output slot.
  void successors(std::uint64_t first, std::span<std::uint32_t> out) const;
  void successors(std::uint64_t first, std::span<std::uint64_t> out) const;

 private:
  enum class OpCode : unsigned char { Load, Zero, One, Not, And, Or };
  struct Op {
    OpCode code;
    std::uint32_t arg;
  };
  struct Program {
    std::uint32_t target = 0;  // state position written by this rule
    std::vector<Op> ops;
  };

  void compile(const Network& net, const std::vector<std::size_t>& levels);
  std::uint64_t run(const Program& p, const std::uint64_t* words) const;
  /// Fills `rows[p]` with the successor bit p of 64 lanes starting at `base`.
  void step_lanes(std::uint64_t base, std::uint64_t rows[64]) const;

  std::size_t width_ = 0;
  std::size_t max_stack_ = 1;
  std::vector<std::vector<Program>> blocks_;
};

}  // namespace boolnet

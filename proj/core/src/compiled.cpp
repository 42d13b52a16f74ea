#include "boolnet/compiled.hpp"

#include <algorithm>
#include <array>

namespace boolnet {

namespace {

// Lane l of a 64-lane batch holds code base + l, so the low six code bits
// follow fixed patterns across lanes.
constexpr std::array<std::uint64_t, 6> kLanePattern = {
    0xAAAAAAAAAAAAAAAAULL, 0xCCCCCCCCCCCCCCCCULL, 0xF0F0F0F0F0F0F0F0ULL,
    0xFF00FF00FF00FF00ULL, 0xFFFF0000FFFF0000ULL, 0xFFFFFFFF00000000ULL,
};

// In-place 64x64 bit-matrix transpose: afterwards bit i of a[j] is the former bit j of a[i].
void transpose64(std::uint64_t a[64]) {
  std::uint64_t m = 0x00000000FFFFFFFFULL;
  for (int j = 32; j != 0; j >>= 1, m ^= m << j) {
    for (int k = 0; k < 64; k = ((k | j) + 1) & ~j) {
      const std::uint64_t t = ((a[k] >> j) ^ a[k | j]) & m;
      a[k] ^= t << j;
      a[k | j] ^= t;
    }
  }
}

}  // namespace

CompiledNetwork::CompiledNetwork(const Network& net, const std::vector<std::size_t>& levels) {
  compile(net, levels);
}

CompiledNetwork::CompiledNetwork(const Network& net, const UpdateSchedule& schedule) {
  compile(net, schedule.levels(net.dynamic_names()));
}

CompiledNetwork::CompiledNetwork(const Network& net) {
  compile(net, std::vector<std::size_t>(net.width(), 1));
}

void CompiledNetwork::compile(const Network& net, const std::vector<std::size_t>& levels) {
  width_ = net.width();
  if (width_ > 64) throw GuardError("state width above 64 is not supported");
  if (levels.size() != width_) throw NetworkError("schedule levels do not match the state width");
  const std::size_t block_count = levels.empty() ? 0 : *std::max_element(levels.begin(), levels.end());
  blocks_.assign(block_count, {});

  for (std::size_t k = 0; k < width_; ++k) {
    if (levels[k] == 0) throw NetworkError("schedule levels are 1-based");
    Program prog;
    prog.target = static_cast<std::uint32_t>(k);
    std::size_t depth = 0;
    std::size_t max_depth = 0;
    auto push = [&](Op op) {
      prog.ops.push_back(op);
      if (op.code == OpCode::And || op.code == OpCode::Or) {
        --depth;
      } else if (op.code != OpCode::Not) {
        max_depth = std::max(max_depth, ++depth);
      }
    };
    auto emit = [&](auto&& self, const Expr& e) -> void {
      switch (e.kind()) {
        case Expr::Kind::Const: push({e.value() ? OpCode::One : OpCode::Zero, 0}); return;
        case Expr::Kind::Var: {
          const std::size_t node = net.index_of(e.name());
          if (auto pinned = net.pinned_value(node)) {
            push({*pinned ? OpCode::One : OpCode::Zero, 0});
            return;
          }
          const auto pos = net.state_position(node);
          if (!pos) throw NetworkError("dynamic rule reads output node '" + e.name() + "'");
          push({OpCode::Load, static_cast<std::uint32_t>(*pos)});
          return;
        }
        case Expr::Kind::Not:
          self(self, e.lhs());
          push({OpCode::Not, 0});
          return;
        case Expr::Kind::And:
        case Expr::Kind::Or:
          self(self, e.lhs());
          self(self, e.rhs());
          push({e.kind() == Expr::Kind::And ? OpCode::And : OpCode::Or, 0});
          return;
      }
    };
    emit(emit, net.rule(net.dynamic_nodes()[k]));
    max_stack_ = std::max(max_stack_, max_depth);
    blocks_[levels[k] - 1].push_back(std::move(prog));
  }
  for (const auto& b : blocks_) {
    if (b.empty()) throw NetworkError("schedule levels must be consecutive");
  }
}

std::uint64_t CompiledNetwork::run(const Program& p, const std::uint64_t* words) const {
  // Rules are shallow; a small fixed stack covers every realistic depth.
  std::uint64_t small[64];
  small[0] = 0;
  std::vector<std::uint64_t> large;
  std::uint64_t* stack = small;
  if (max_stack_ > 64) {
    large.resize(max_stack_);
    stack = large.data();
  }
  std::size_t top = 0;
  for (const Op& op : p.ops) {
    switch (op.code) {
      case OpCode::Load: stack[top++] = words[op.arg]; break;
      case OpCode::Zero: stack[top++] = 0; break;
      case OpCode::One: stack[top++] = ~std::uint64_t{0}; break;
      case OpCode::Not: stack[top - 1] = ~stack[top - 1]; break;
      case OpCode::And: --top; stack[top - 1] &= stack[top]; break;
      case OpCode::Or: --top; stack[top - 1] |= stack[top]; break;
    }
  }
  return stack[0];
}

void CompiledNetwork::step_lanes(std::uint64_t base, std::uint64_t rows[64]) const {
  std::uint64_t words[64];
  for (std::size_t k = 0; k < width_; ++k) {
    const std::size_t bit = width_ - 1 - k;
    words[k] = bit < 6 ? kLanePattern[bit] : (((base >> bit) & 1U) != 0 ? ~std::uint64_t{0} : 0);
  }
  std::uint64_t next[64];
  for (const auto& block : blocks_) {
    for (const auto& prog : block) next[prog.target] = run(prog, words);
    for (const auto& prog : block) words[prog.target] = next[prog.target];
  }
  std::fill(rows, rows + 64, 0);
  for (std::size_t k = 0; k < width_; ++k) rows[width_ - 1 - k] = words[k];
  transpose64(rows);
}

std::uint64_t CompiledNetwork::successor(std::uint64_t code) const {
  std::uint64_t rows[64];
  step_lanes(code & ~std::uint64_t{63}, rows);
  return rows[code & 63U];
}

void CompiledNetwork::successors(std::uint64_t first, std::span<std::uint64_t> out) const {
  std::uint64_t rows[64];
  std::size_t i = 0;
  while (i < out.size()) {
    const std::uint64_t code = first + i;
    const std::uint64_t base = code & ~std::uint64_t{63};
    step_lanes(base, rows);
    for (std::uint64_t lane = code - base; lane < 64 && i < out.size(); ++lane) out[i++] = rows[lane];
  }
}

void CompiledNetwork::successors(std::uint64_t first, std::span<std::uint32_t> out) const {
  std::uint64_t rows[64];
  std::size_t i = 0;
  while (i < out.size()) {
    const std::uint64_t code = first + i;
    const std::uint64_t base = code & ~std::uint64_t{63};
    step_lanes(base, rows);
    for (std::uint64_t lane = code - base; lane < 64 && i < out.size(); ++lane) {
      out[i++] = static_cast<std::uint32_t>(rows[lane]);
    }
  }
}

}  // namespace boolnet

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "boolnet/expr.hpp"

namespace boolnet {

/// A Boolean network: ordered nodes with one local rule each.
///
/// Output (phenotype) nodes are excluded from the dynamic state and evaluated
/// afterwards; pinned nodes are clamped to a constant that is folded into every
/// rule. The remaining nodes, in declaration order, form the state vector.
///
/// Invariants checked on construction:
///  - node names are unique and every rule dependency is a declared node;
///  - no non-output rule depends on an output node;
///  - pinned nodes are not outputs;
///  - output rules do not depend on each other cyclically.
class Network {
 public:
  Network() = default;
  Network(std::string name, std::vector<std::string> nodes, std::vector<Expr> rules,
          std::set<std::string> outputs = {}, std::map<std::string, bool> pinned = {});

  const std::string& name() const noexcept { return name_; }
  std::size_t size() const noexcept { return nodes_.size(); }
  const std::vector<std::string>& nodes() const noexcept { return nodes_; }
  const std::vector<Expr>& rules() const noexcept { return rules_; }
  const Expr& rule(std::size_t node) const { return rules_.at(node); }
  /// Rule as written before pin folding.
  const Expr& original_rule(std::size_t node) const { return original_rules_.at(node); }

  std::optional<std::size_t> find(std::string_view node) const;
  /// Throws NetworkError for an unknown node.
  std::size_t index_of(std::string_view node) const;

  bool is_output(std::size_t node) const { return is_output_.at(node); }
  bool is_pinned(std::size_t node) const { return pinned_.count(nodes_.at(node)) != 0; }
  std::optional<bool> pinned_value(std::size_t node) const;
  const std::map<std::string, bool>& pinned() const noexcept { return pinned_; }
  const std::set<std::string>& outputs() const noexcept { return outputs_; }

  /// Indices of the state-vector nodes (non-output, non-pinned), in declaration order.
  const std::vector<std::size_t>& dynamic_nodes() const noexcept { return dynamic_; }
  std::vector<std::string> dynamic_names() const;
  /// Output nodes in an order where each only depends on earlier ones.
  const std::vector<std::size_t>& output_order() const noexcept { return output_order_; }
  /// Position of `node` in the state vector, or nullopt if it is not dynamic.
  std::optional<std::size_t> state_position(std::size_t node) const;

  std::size_t width() const noexcept { return dynamic_.size(); }

  /// True when the rule is the identity on the node itself (BoolNet input idiom).
  bool is_input(std::size_t node) const;

 private:
  std::string name_;
  std::vector<std::string> nodes_;
  std::vector<Expr> original_rules_;
  std::vector<Expr> rules_;
  std::set<std::string> outputs_;
  std::map<std::string, bool> pinned_;
  std::vector<bool> is_output_;
  std::vector<std::size_t> dynamic_;
  std::vector<std::optional<std::size_t>> state_position_;
  std::vector<std::size_t> output_order_;
};

/// Directives that sit beside a rule file (sidecar config or CLI flags).
struct NetworkConfig {
  std::string name;
  std::vector<std::string> outputs;
  std::map<std::string, bool> pins;
  /// Treat every node with out-degree 0 as an output.
  bool detect_outputs = false;
};

/// Parses `outputs: A, B`, `pin: X=1, Y=0` and `name: foo` lines; `#` starts a comment.
NetworkConfig parse_config(std::string_view text);

/// Parses a BoolNet rule file: a `targets, factors` header, then one
/// `node, expression` line per node. Blank lines and `#` comments are ignored.
Network load_network(std::string_view text, const NetworkConfig& config = {});

/// Clamps `node` to `value`. Pinning an already pinned node to the same value
/// is a no-op; to a different value is an error.
Network pin(const Network& net, std::string_view node, bool value);

/// Replaces one node's rule; every variable must be a declared node.
Network apply_rule(const Network& net, std::string_view node, Expr rule);

/// Non-output nodes that no rule depends on.
std::vector<std::string> terminal_nodes(const Network& net);

/// Renders the network back to the BoolNet rule-file format.
std::string to_boolnet(const Network& net);

// ---------------------------------------------------------------------------
// Interaction digraph and signed circuits

enum class ArcSign { Activating, Inhibiting, Dual };

struct Arc {
  std::size_t source = 0;
  std::size_t target = 0;
  ArcSign sign = ArcSign::Activating;

  bool is_loop() const noexcept { return source == target; }
  friend bool operator==(const Arc&, const Arc&) = default;
};

/// Vertices are the state-vector nodes; arc (i, j) exists when j's rule
/// mentions i. Arcs are ordered by target, then by first appearance in the rule.
class InteractionDigraph {
 public:
  InteractionDigraph() = default;
  /// Explicit graph; arcs are validated against the vertex list.
  InteractionDigraph(std::vector<std::string> vertices, std::vector<Arc> arcs);

  static InteractionDigraph of(const Network& net);

  const std::vector<std::string>& vertices() const noexcept { return vertices_; }
  const std::vector<Arc>& arcs() const noexcept { return arcs_; }
  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t arc_count() const noexcept { return arcs_.size(); }
  std::optional<std::size_t> find(std::string_view vertex) const;
  std::optional<std::size_t> find_arc(std::size_t source, std::size_t target) const;

 private:
  std::vector<std::string> vertices_;
  std::vector<Arc> arcs_;
};

enum class CircuitSign { Positive, Negative, Both };

struct SignedCircuit {
  /// Simple cycle; starts at its lowest vertex index, arcs follow consecutive
  /// entries and close back to the front.
  std::vector<std::size_t> vertices;
  CircuitSign sign = CircuitSign::Positive;
};

/// Every simple cycle of length at most `max_len` (all lengths when 0).
std::vector<SignedCircuit> enumerate_circuits(const InteractionDigraph& g, std::size_t max_len = 0);

std::string to_string(ArcSign sign);
std::string to_string(CircuitSign sign);
/// `A -> B -> A  negative`
std::string describe(const SignedCircuit& circuit, const InteractionDigraph& g);

}  // namespace boolnet

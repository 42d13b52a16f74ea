#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "boolnet/error.hpp"

namespace boolnet {

/// Immutable Boolean expression tree over named variables.
///
/// Nodes are shared between copies, so an `Expr` is cheap to copy and safe to
/// read from any number of threads. Constants only appear after folding a
/// pinned input into a rule (or when a rule file uses the BoolNet literals
/// `0` / `1`).
class Expr {
 public:
  enum class Kind : unsigned char { Const, Var, Not, And, Or };

  static Expr constant(bool value);
  static Expr var(std::string name);
  static Expr negate(Expr operand);
  static Expr conj(Expr lhs, Expr rhs);
  static Expr disj(Expr lhs, Expr rhs);

  Kind kind() const noexcept { return node_->kind; }
  bool is_const() const noexcept { return kind() == Kind::Const; }
  bool is_binary() const noexcept { return kind() == Kind::And || kind() == Kind::Or; }

  /// Variable name. Only meaningful for `Kind::Var`.
  const std::string& name() const noexcept { return node_->name; }
  /// Constant value. Only meaningful for `Kind::Const`.
  bool value() const noexcept { return node_->value; }
  /// Operand of `Not`, or left operand of `And` / `Or`.
  Expr lhs() const { return Expr(node_->lhs); }
  Expr rhs() const { return Expr(node_->rhs); }

  /// Structural equality.
  friend bool operator==(const Expr& a, const Expr& b);

 private:
  struct Node {
    Kind kind = Kind::Const;
    bool value = false;
    std::string name;
    std::shared_ptr<const Node> lhs;
    std::shared_ptr<const Node> rhs;
  };

  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

/// Parses rule text with `!` > `&` > `|` precedence; binary operators are
/// left-associative and parentheses override. Identifiers are runs of
/// `[A-Za-z0-9_]`; the bare tokens `0` and `1` are constants.
Expr parse_expression(std::string_view text);

/// Renders with the minimal parenthesization that re-parses to the same tree,
/// except that a binary operand of the other binary operator is always
/// parenthesized (`(a & b) | c`).
std::string render(const Expr& expr);

using Assignment = std::unordered_map<std::string, bool>;
using VariableLookup = std::function<std::optional<bool>(const std::string&)>;

bool evaluate(const Expr& expr, const Assignment& assignment);
/// Throws `EvaluationError` when `lookup` returns nullopt for a referenced variable.
bool evaluate(const Expr& expr, const VariableLookup& lookup);

/// Variables in first-appearance order, without duplicates.
std::vector<std::string> dependencies(const Expr& expr);

/// Replaces every occurrence of `name` by a constant and folds constants away.
Expr substitute(const Expr& expr, const std::string& name, bool value);

/// Constant folding: `!0 -> 1`, `x & 0 -> 0`, `x | 0 -> x`, and so on.
Expr fold_constants(const Expr& expr);

/// Polarity of a variable inside an expression.
enum class Polarity { Positive, Negative, Both };

/// Polarity of every variable: negative iff every occurrence sits under an odd
/// number of negations, positive iff under an even number, both otherwise.
std::map<std::string, Polarity> polarities(const Expr& expr);

}  // namespace boolnet

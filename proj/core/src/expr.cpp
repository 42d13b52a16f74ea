#include "boolnet/expr.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

namespace boolnet {

Expr Expr::constant(bool value) {
  Node node;
  node.kind = Kind::Const;
  node.value = value;
  return Expr(std::make_shared<const Node>(std::move(node)));
}

Expr Expr::var(std::string name) {
  Node node;
  node.kind = Kind::Var;
  node.name = std::move(name);
  return Expr(std::make_shared<const Node>(std::move(node)));
}

Expr Expr::negate(Expr operand) {
  Node node;
  node.kind = Kind::Not;
  node.lhs = std::move(operand.node_);
  return Expr(std::make_shared<const Node>(std::move(node)));
}

Expr Expr::conj(Expr lhs, Expr rhs) {
  Node node;
  node.kind = Kind::And;
  node.lhs = std::move(lhs.node_);
  node.rhs = std::move(rhs.node_);
  return Expr(std::make_shared<const Node>(std::move(node)));
}

Expr Expr::disj(Expr lhs, Expr rhs) {
  Node node;
  node.kind = Kind::Or;
  node.lhs = std::move(lhs.node_);
  node.rhs = std::move(rhs.node_);
  return Expr(std::make_shared<const Node>(std::move(node)));
}

bool operator==(const Expr& a, const Expr& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Expr::Kind::Const: return a.value() == b.value();
    case Expr::Kind::Var: return a.name() == b.name();
    case Expr::Kind::Not: return a.lhs() == b.lhs();
    case Expr::Kind::And:
    case Expr::Kind::Or: return a.lhs() == b.lhs() && a.rhs() == b.rhs();
  }
  return false;
}

namespace {

bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

// Grammar:
//   or_expr  := and_expr ('|' and_expr)*
//   and_expr := unary ('&' unary)*
//   unary    := '!' unary | '(' or_expr ')' | identifier
class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expr parse() {
    skip_space();
    if (pos_ == text_.size()) throw ParseError("empty expression", pos_);
    Expr result = parse_or();
    skip_space();
    if (pos_ != text_.size()) {
      if (text_[pos_] == ')') throw ParseError("unbalanced ')'", pos_);
      throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    }
    return result;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Expr parse_or() {
    Expr lhs = parse_and();
    while (accept('|')) lhs = Expr::disj(std::move(lhs), parse_and());
    return lhs;
  }

  Expr parse_and() {
    Expr lhs = parse_unary();
    while (accept('&')) lhs = Expr::conj(std::move(lhs), parse_unary());
    return lhs;
  }

  Expr parse_unary() {
    skip_space();
    if (pos_ == text_.size()) throw ParseError("expected operand, found end of input", pos_);
    const char c = text_[pos_];
    if (c == '!') {
      ++pos_;
      return Expr::negate(parse_unary());
    }
    if (c == '(') {
      const std::size_t open = pos_++;
      Expr inner = parse_or();
      if (!accept(')')) {
        skip_space();
        if (pos_ == text_.size()) throw ParseError("unbalanced '('", open);
        throw ParseError(std::string("expected ')', found '") + text_[pos_] + "'", pos_);
      }
      return inner;
    }
    if (is_ident_char(c)) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
      std::string ident(text_.substr(start, pos_ - start));
      if (ident == "0") return Expr::constant(false);
      if (ident == "1") return Expr::constant(true);
      return Expr::var(std::move(ident));
    }
    if (c == '&' || c == '|') throw ParseError(std::string("dangling operator '") + c + "'", pos_);
    if (c == ')') throw ParseError("unexpected ')'", pos_);
    throw ParseError(std::string("illegal character '") + c + "'", pos_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void render_into(const Expr& e, std::string& out);

void render_operand(const Expr& parent, const Expr& child, bool right, std::string& out) {
  bool wrap = false;
  if (child.is_binary()) {
    // Other operator: always wrap. Same operator: only a right operand needs
    // parentheses to keep the tree left-associative on re-parse.
    wrap = child.kind() != parent.kind() || right;
  }
  if (wrap) out += '(';
  render_into(child, out);
  if (wrap) out += ')';
}

void render_into(const Expr& e, std::string& out) {
  switch (e.kind()) {
    case Expr::Kind::Const: out += e.value() ? '1' : '0'; return;
    case Expr::Kind::Var: out += e.name(); return;
    case Expr::Kind::Not: {
      out += '!';
      const bool wrap = e.lhs().is_binary();
      if (wrap) out += '(';
      render_into(e.lhs(), out);
      if (wrap) out += ')';
      return;
    }
    case Expr::Kind::And:
    case Expr::Kind::Or:
      render_operand(e, e.lhs(), false, out);
      out += e.kind() == Expr::Kind::And ? " & " : " | ";
      render_operand(e, e.rhs(), true, out);
      return;
  }
}

template <typename Lookup>
bool eval_impl(const Expr& e, const Lookup& lookup) {
  switch (e.kind()) {
    case Expr::Kind::Const: return e.value();
    case Expr::Kind::Var: return lookup(e.name());
    case Expr::Kind::Not: return !eval_impl(e.lhs(), lookup);
    case Expr::Kind::And: return eval_impl(e.lhs(), lookup) && eval_impl(e.rhs(), lookup);
    case Expr::Kind::Or: return eval_impl(e.lhs(), lookup) || eval_impl(e.rhs(), lookup);
  }
  return false;
}

void collect_deps(const Expr& e, std::vector<std::string>& out, std::unordered_set<std::string>& seen) {
  switch (e.kind()) {
    case Expr::Kind::Const: return;
    case Expr::Kind::Var:
      if (seen.insert(e.name()).second) out.push_back(e.name());
      return;
    case Expr::Kind::Not: collect_deps(e.lhs(), out, seen); return;
    case Expr::Kind::And:
    case Expr::Kind::Or:
      collect_deps(e.lhs(), out, seen);
      collect_deps(e.rhs(), out, seen);
      return;
  }
}

void collect_polarity(const Expr& e, bool negated, std::map<std::string, Polarity>& out) {
  switch (e.kind()) {
    case Expr::Kind::Const: return;
    case Expr::Kind::Var: {
      const Polarity p = negated ? Polarity::Negative : Polarity::Positive;
      auto [it, inserted] = out.emplace(e.name(), p);
      if (!inserted && it->second != p) it->second = Polarity::Both;
      return;
    }
    case Expr::Kind::Not: collect_polarity(e.lhs(), !negated, out); return;
    case Expr::Kind::And:
    case Expr::Kind::Or:
      collect_polarity(e.lhs(), negated, out);
      collect_polarity(e.rhs(), negated, out);
      return;
  }
}

}  // namespace

Expr parse_expression(std::string_view text) { return Parser(text).parse(); }

std::string render(const Expr& expr) {
  std::string out;
  render_into(expr, out);
  return out;
}

bool evaluate(const Expr& expr, const Assignment& assignment) {
  return eval_impl(expr, [&](const std::string& name) {
    auto it = assignment.find(name);
    if (it == assignment.end()) throw EvaluationError(name);
    return it->second;
  });
}

bool evaluate(const Expr& expr, const VariableLookup& lookup) {
  return eval_impl(expr, [&](const std::string& name) {
    auto value = lookup(name);
    if (!value) throw EvaluationError(name);
    return *value;
  });
}

std::vector<std::string> dependencies(const Expr& expr) {
  std::vector<std::string> out;
  std::unordered_set<std::string> seen;
  collect_deps(expr, out, seen);
  return out;
}

Expr fold_constants(const Expr& e) {
  switch (e.kind()) {
    case Expr::Kind::Const:
    case Expr::Kind::Var: return e;
    case Expr::Kind::Not: {
      Expr inner = fold_constants(e.lhs());
      if (inner.is_const()) return Expr::constant(!inner.value());
      return Expr::negate(std::move(inner));
    }
    case Expr::Kind::And:
    case Expr::Kind::Or: {
      const bool is_and = e.kind() == Expr::Kind::And;
      Expr lhs = fold_constants(e.lhs());
      Expr rhs = fold_constants(e.rhs());
      // Absorbing element: 0 for AND, 1 for OR. Identity: the other one.
      for (const Expr* side : {&lhs, &rhs}) {
        if (side->is_const() && side->value() != is_and) return Expr::constant(!is_and);
      }
      if (lhs.is_const()) return rhs;
      if (rhs.is_const()) return lhs;
      return is_and ? Expr::conj(std::move(lhs), std::move(rhs)) : Expr::disj(std::move(lhs), std::move(rhs));
    }
  }
  return e;
}

namespace {

Expr substitute_impl(const Expr& e, const std::string& name, bool value) {
  switch (e.kind()) {
    case Expr::Kind::Const: return e;
    case Expr::Kind::Var: return e.name() == name ? Expr::constant(value) : e;
    case Expr::Kind::Not: return Expr::negate(substitute_impl(e.lhs(), name, value));
    case Expr::Kind::And:
      return Expr::conj(substitute_impl(e.lhs(), name, value), substitute_impl(e.rhs(), name, value));
    case Expr::Kind::Or:
      return Expr::disj(substitute_impl(e.lhs(), name, value), substitute_impl(e.rhs(), name, value));
  }
  return e;
}

}  // namespace

Expr substitute(const Expr& expr, const std::string& name, bool value) {
  return fold_constants(substitute_impl(expr, name, value));
}

std::map<std::string, Polarity> polarities(const Expr& expr) {
  std::map<std::string, Polarity> out;
  collect_polarity(expr, false, out);
  return out;
}

}  // namespace boolnet

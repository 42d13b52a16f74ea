#include "boolnet/network.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>
#include <unordered_map>

namespace boolnet {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())) != 0) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())) != 0) s.remove_suffix(1);
  return s;
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t at = s.find(sep, start);
    parts.push_back(trim(s.substr(start, at == std::string_view::npos ? std::string_view::npos : at - start)));
    if (at == std::string_view::npos) break;
    start = at + 1;
  }
  return parts;
}

}  // namespace

Network::Network(std::string name, std::vector<std::string> nodes, std::vector<Expr> rules,
                 std::set<std::string> outputs, std::map<std::string, bool> pinned)
    : name_(std::move(name)),
      nodes_(std::move(nodes)),
      original_rules_(std::move(rules)),
      outputs_(std::move(outputs)),
      pinned_(std::move(pinned)) {
  if (nodes_.size() != original_rules_.size()) {
    throw NetworkError("node count and rule count differ");
  }
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (!index.emplace(nodes_[i], i).second) throw NetworkError("duplicate node '" + nodes_[i] + "'");
  }
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    for (const auto& dep : dependencies(original_rules_[i])) {
      if (!index.count(dep)) {
        throw NetworkError("rule of '" + nodes_[i] + "' references undeclared node '" + dep + "'");
      }
    }
  }
  for (const auto& out : outputs_) {
    if (!index.count(out)) throw NetworkError("unknown output node '" + out + "'");
    if (pinned_.count(out)) throw NetworkError("output node '" + out + "' cannot be pinned");
  }
  for (const auto& [node, value] : pinned_) {
    (void)value;
    if (!index.count(node)) throw NetworkError("unknown pinned node '" + node + "'");
  }

  is_output_.assign(nodes_.size(), false);
  for (const auto& out : outputs_) is_output_[index.at(out)] = true;

  rules_ = original_rules_;
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    auto pin = pinned_.find(nodes_[i]);
    if (pin != pinned_.end()) {
      rules_[i] = Expr::constant(pin->second);
      continue;
    }
    for (const auto& [node, value] : pinned_) rules_[i] = substitute(rules_[i], node, value);
  }

  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (is_output_[i]) continue;
    for (const auto& dep : dependencies(rules_[i])) {
      if (is_output_[index.at(dep)]) {
        throw NetworkError("non-output node '" + nodes_[i] + "' depends on output node '" + dep + "'");
      }
    }
  }

  state_position_.assign(nodes_.size(), std::nullopt);
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (is_output_[i] || pinned_.count(nodes_[i])) continue;
    state_position_[i] = dynamic_.size();
    dynamic_.push_back(i);
  }

  // Outputs may read other outputs; order them so dependencies come first.
  std::vector<int> mark(nodes_.size(), 0);
  std::function<void(std::size_t)> visit = [&](std::size_t i) {
    if (mark[i] == 2) return;
    if (mark[i] == 1) throw NetworkError("cyclic dependency among output nodes at '" + nodes_[i] + "'");
    mark[i] = 1;
    for (const auto& dep : dependencies(rules_[i])) {
      const std::size_t d = index.at(dep);
      if (is_output_[d]) visit(d);
    }
    mark[i] = 2;
    output_order_.push_back(i);
  };
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (is_output_[i]) visit(i);
  }
}

std::optional<std::size_t> Network::find(std::string_view node) const {
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (nodes_[i] == node) return i;
  }
  return std::nullopt;
}

std::size_t Network::index_of(std::string_view node) const {
  auto i = find(node);
  if (!i) throw NetworkError("unknown node '" + std::string(node) + "'");
  return *i;
}

std::optional<bool> Network::pinned_value(std::size_t node) const {
  auto it = pinned_.find(nodes_.at(node));
  if (it == pinned_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::string> Network::dynamic_names() const {
  std::vector<std::string> names;
  names.reserve(dynamic_.size());
  for (auto i : dynamic_) names.push_back(nodes_[i]);
  return names;
}

std::optional<std::size_t> Network::state_position(std::size_t node) const {
  return state_position_.at(node);
}

bool Network::is_input(std::size_t node) const {
  const Expr& r = original_rules_.at(node);
  return r.kind() == Expr::Kind::Var && r.name() == nodes_[node];
}

NetworkConfig parse_config(std::string_view text) {
  NetworkConfig config;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto colon = line.find(':');
    if (colon == std::string_view::npos) throw FormatError("expected 'key: value'", line_no);
    const std::string key = lower(trim(line.substr(0, colon)));
    const std::string_view value = trim(line.substr(colon + 1));
    if (key == "name") {
      config.name = std::string(value);
    } else if (key == "outputs") {
      for (auto item : split(value, ',')) {
        if (!item.empty()) config.outputs.emplace_back(item);
      }
    } else if (key == "pin") {
      for (auto item : split(value, ',')) {
        if (item.empty()) continue;
        const auto eq = item.find('=');
        if (eq == std::string_view::npos) throw FormatError("pin entry must be NODE=0|1", line_no);
        const auto node = trim(item.substr(0, eq));
        const auto bit = trim(item.substr(eq + 1));
        if (node.empty() || (bit != "0" && bit != "1")) throw FormatError("pin entry must be NODE=0|1", line_no);
        config.pins[std::string(node)] = bit == "1";
      }
    } else if (key == "detect_outputs") {
      config.detect_outputs = value == "1" || lower(value) == "true";
    } else {
      throw FormatError("unknown config key '" + key + "'", line_no);
    }
  }
  return config;
}

Network load_network(std::string_view text, const NetworkConfig& config) {
  std::vector<std::string> nodes;
  std::vector<Expr> rules;
  std::unordered_map<std::string, std::size_t> rule_line;
  bool header_seen = false;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    if (!header_seen) {
      const auto parts = split(line, ',');
      if (parts.size() != 2 || lower(parts[0]) != "targets" || lower(parts[1]) != "factors") {
        throw FormatError("expected header 'targets, factors'", line_no);
      }
      header_seen = true;
      continue;
    }
    const auto comma = line.find(',');
    if (comma == std::string_view::npos) throw FormatError("expected 'node, expression'", line_no);
    const std::string node(trim(line.substr(0, comma)));
    if (node.empty()) throw FormatError("empty node name", line_no);
    if (!std::all_of(node.begin(), node.end(), [](unsigned char c) { return std::isalnum(c) || c == '_'; })) {
      throw FormatError("invalid node name '" + node + "'", line_no);
    }
    if (!rule_line.emplace(node, line_no).second) {
      throw FormatError("duplicate node '" + node + "'", line_no);
    }
    try {
      rules.push_back(parse_expression(line.substr(comma + 1)));
    } catch (const ParseError& e) {
      throw FormatError(std::string("syntax error in rule of '") + node + "': " + e.what(), line_no);
    }
    nodes.push_back(node);
  }
  if (!header_seen) throw FormatError("missing header 'targets, factors'", line_no);
  if (nodes.empty()) throw FormatError("no rules", line_no);

  // Report undeclared dependencies with the offending line number.
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (const auto& dep : dependencies(rules[i])) {
      if (!rule_line.count(dep)) {
        throw FormatError("rule of '" + nodes[i] + "' references undeclared node '" + dep + "'",
                          rule_line.at(nodes[i]));
      }
    }
  }

  std::set<std::string> outputs(config.outputs.begin(), config.outputs.end());
  Network net(config.name, nodes, rules, outputs, {});
  if (config.detect_outputs) {
    for (auto& t : terminal_nodes(net)) outputs.insert(std::move(t));
  }
  return Network(config.name, std::move(nodes), std::move(rules), std::move(outputs), config.pins);
}

Network pin(const Network& net, std::string_view node, bool value) {
  const std::size_t i = net.index_of(node);
  auto pinned = net.pinned();
  auto [it, inserted] = pinned.emplace(net.nodes()[i], value);
  if (!inserted && it->second != value) {
    throw NetworkError("node '" + std::string(node) + "' is already pinned to " + (it->second ? "1" : "0"));
  }
  std::vector<Expr> rules;
  for (std::size_t k = 0; k < net.size(); ++k) rules.push_back(net.original_rule(k));
  return Network(net.name(), net.nodes(), std::move(rules), net.outputs(), std::move(pinned));
}

Network apply_rule(const Network& net, std::string_view node, Expr rule) {
  const std::size_t i = net.index_of(node);
  for (const auto& dep : dependencies(rule)) {
    if (!net.find(dep)) throw NetworkError("rule references unknown node '" + dep + "'");
  }
  std::vector<Expr> rules;
  for (std::size_t k = 0; k < net.size(); ++k) rules.push_back(k == i ? rule : net.original_rule(k));
  return Network(net.name(), net.nodes(), std::move(rules), net.outputs(), net.pinned());
}

std::vector<std::string> terminal_nodes(const Network& net) {
  std::vector<bool> used(net.size(), false);
  for (std::size_t i = 0; i < net.size(); ++i) {
    for (const auto& dep : dependencies(net.original_rule(i))) used[net.index_of(dep)] = true;
  }
  std::vector<std::string> out;
  for (std::size_t i = 0; i < net.size(); ++i) {
    if (!used[i] && !net.is_output(i)) out.push_back(net.nodes()[i]);
  }
  return out;
}

std::string to_boolnet(const Network& net) {
  std::string out = "targets, factors\n";
  for (std::size_t i = 0; i < net.size(); ++i) {
    out += net.nodes()[i] + ", " + render(net.original_rule(i)) + "\n";
  }
  return out;
}

// ---------------------------------------------------------------------------

InteractionDigraph::InteractionDigraph(std::vector<std::string> vertices, std::vector<Arc> arcs)
    : vertices_(std::move(vertices)), arcs_(std::move(arcs)) {
  for (const auto& a : arcs_) {
    if (a.source >= vertices_.size() || a.target >= vertices_.size()) {
      throw NetworkError("arc endpoint out of range");
    }
  }
  for (std::size_t i = 0; i < arcs_.size(); ++i) {
    for (std::size_t j = i + 1; j < arcs_.size(); ++j) {
      if (arcs_[i].source == arcs_[j].source && arcs_[i].target == arcs_[j].target) {
        throw NetworkError("duplicate arc " + vertices_[arcs_[i].source] + " -> " + vertices_[arcs_[i].target]);
      }
    }
  }
}

InteractionDigraph InteractionDigraph::of(const Network& net) {
  std::vector<std::string> vertices = net.dynamic_names();
  std::vector<Arc> arcs;
  for (std::size_t t = 0; t < net.width(); ++t) {
    const Expr& rule = net.rule(net.dynamic_nodes()[t]);
    const auto signs = polarities(rule);
    for (const auto& dep : dependencies(rule)) {
      const auto pos = net.state_position(net.index_of(dep));
      if (!pos) continue;
      ArcSign sign = ArcSign::Activating;
      switch (signs.at(dep)) {
        case Polarity::Positive: sign = ArcSign::Activating; break;
        case Polarity::Negative: sign = ArcSign::Inhibiting; break;
        case Polarity::Both: sign = ArcSign::Dual; break;
      }
      arcs.push_back(Arc{*pos, t, sign});
    }
  }
  return InteractionDigraph(std::move(vertices), std::move(arcs));
}

std::optional<std::size_t> InteractionDigraph::find(std::string_view vertex) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (vertices_[i] == vertex) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> InteractionDigraph::find_arc(std::size_t source, std::size_t target) const {
  for (std::size_t i = 0; i < arcs_.size(); ++i) {
    if (arcs_[i].source == source && arcs_[i].target == target) return i;
  }
  return std::nullopt;
}

std::string to_string(ArcSign sign) {
  switch (sign) {
    case ArcSign::Activating: return "+";
    case ArcSign::Inhibiting: return "-";
    case ArcSign::Dual: return "+/-";
  }
  return "?";
}

std::string to_string(CircuitSign sign) {
  switch (sign) {
    case CircuitSign::Positive: return "positive";
    case CircuitSign::Negative: return "negative";
    case CircuitSign::Both: return "both";
  }
  return "?";
}

}  // namespace boolnet

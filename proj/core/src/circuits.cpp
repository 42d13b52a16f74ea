#include <algorithm>
#include <set>

#include "boolnet/network.hpp"

namespace boolnet {

namespace {

class CircuitFinder {
 public:
  CircuitFinder(const InteractionDigraph& g, std::size_t max_len)
      : g_(g), n_(g.vertex_count()), max_len_(max_len == 0 || max_len > n_ ? n_ : max_len), out_(n_) {
    for (const auto& a : g.arcs()) out_[a.source].push_back(a.target);
    for (auto& succ : out_) std::sort(succ.begin(), succ.end());
  }

  std::vector<SignedCircuit> run() {
    blocked_.assign(n_, false);
    block_map_.assign(n_, {});
    for (start_ = 0; start_ < n_; ++start_) {
      std::fill(blocked_.begin(), blocked_.end(), false);
      for (auto& b : block_map_) b.clear();
      if (max_len_ == n_) {
        johnson(start_);
      } else {
        bounded(start_);
      }
    }
    return std::move(found_);
  }

 private:
  // Johnson's elementary-circuit search restricted to vertices >= start_.
  bool johnson(std::size_t v) {
    bool closed = false;
    path_.push_back(v);
    blocked_[v] = true;
    for (auto w : out_[v]) {
      if (w < start_) continue;
      if (w == start_) {
        record();
        closed = true;
      } else if (!blocked_[w] && johnson(w)) {
        closed = true;
      }
    }
    if (closed) {
      unblock(v);
    } else {
      for (auto w : out_[v]) {
        if (w >= start_) block_map_[w].insert(v);
      }
    }
    path_.pop_back();
    return closed;
  }

  void unblock(std::size_t v) {
    blocked_[v] = false;
    auto pending = std::move(block_map_[v]);
    block_map_[v].clear();
    for (auto w : pending) {
      if (blocked_[w]) unblock(w);
    }
  }

  // Plain depth-limited search; Johnson's blocking is unsound under a length cap.
  void bounded(std::size_t v) {
    path_.push_back(v);
    blocked_[v] = true;
    for (auto w : out_[v]) {
      if (w < start_) continue;
      if (w == start_) {
        record();
      } else if (!blocked_[w] && path_.size() < max_len_) {
        bounded(w);
      }
    }
    blocked_[v] = false;
    path_.pop_back();
  }

  void record() {
    SignedCircuit c;
    c.vertices = path_;
    bool negative = false;
    bool dual = false;
    for (std::size_t k = 0; k < path_.size(); ++k) {
      const std::size_t from = path_[k];
      const std::size_t to = path_[(k + 1) % path_.size()];
      const auto arc = g_.find_arc(from, to);
      const ArcSign s = g_.arcs()[*arc].sign;
      if (s == ArcSign::Dual) dual = true;
      if (s == ArcSign::Inhibiting) negative = !negative;
    }
    c.sign = dual ? CircuitSign::Both : (negative ? CircuitSign::Negative : CircuitSign::Positive);
    found_.push_back(std::move(c));
  }

  const InteractionDigraph& g_;
  std::size_t n_;
  std::size_t max_len_;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<bool> blocked_;
  std::vector<std::set<std::size_t>> block_map_;
  std::vector<std::size_t> path_;
  std::size_t start_ = 0;
  std::vector<SignedCircuit> found_;
};

}  // namespace

std::vector<SignedCircuit> enumerate_circuits(const InteractionDigraph& g, std::size_t max_len) {
  auto circuits = CircuitFinder(g, max_len).run();
  std::stable_sort(circuits.begin(), circuits.end(), [](const SignedCircuit& a, const SignedCircuit& b) {
    if (a.vertices.size() != b.vertices.size()) return a.vertices.size() < b.vertices.size();
    return a.vertices < b.vertices;
  });
  return circuits;
}

std::string describe(const SignedCircuit& circuit, const InteractionDigraph& g) {
  std::string out;
  for (auto v : circuit.vertices) out += g.vertices()[v] + " -> ";
  out += g.vertices()[circuit.vertices.front()];
  return out + "  " + to_string(circuit.sign);
}

}  // namespace boolnet

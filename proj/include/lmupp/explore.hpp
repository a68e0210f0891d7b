#pragma once

#include <cstddef>
#include <cstdlib>
#include <deque>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "lmupp/position.hpp"

namespace lmu {

inline constexpr std::size_t kDefaultBudget = 200000;

struct Budget {
  std::optional<std::size_t> max_nodes = kDefaultBudget;
  std::optional<std::size_t> max_depth;
  // Reducts larger than this are dropped and the run is not exhaustive.
  std::optional<std::size_t> max_size;

  static Budget unbounded() { return Budget{std::nullopt, std::nullopt, std::nullopt}; }
  static Budget nodes(std::size_t n) { return Budget{n, std::nullopt, std::nullopt}; }
};

// Result of exploring a reduction graph. Normal forms are kept in discovery
// order; `canon` holds their alpha-invariant keys.
template <class Term>
struct ValueSet {
  std::vector<Term> normals;
  std::vector<std::string> canon;
  std::size_t explored = 0;
  std::size_t pending = 0;
  bool exhaustive() const { return pending == 0; }

  bool contains(const std::string& key) const {
    for (const auto& c : canon) {
      if (c == key) return true;
    }
    return false;
  }
};

template <class Rule>
struct GraphEdge {
  std::size_t from, to;
  Rule rule;
  Position at;
};

// Breadth-first exploration with alpha-canonical memoisation. `Step` must
// expose `rule`, `at` and `reduct`. Nodes are expanded in discovery order and
// successors in the order the engine enumerates them, so the outcome is a
// deterministic function of the input and the budget.
template <class Term, class Step>
class Explorer {
 public:
  using Successors = std::function<std::vector<Step>(const Term&)>;
  using Canonical = std::function<std::string(const Term&)>;
  using Rule = decltype(std::declval<Step>().rule);

  struct Node {
    Term term;
    std::size_t depth;
    std::optional<std::size_t> parent;
    std::optional<Step> via;  // step from parent, without its reduct
    bool expanded = false;
    bool normal = false;
  };

  Explorer(Successors succ, Canonical canon) : succ_(std::move(succ)), canon_(std::move(canon)) {}

  void record_edges(bool on) { record_edges_ = on; }
  // Off: expanded non-normal nodes drop their term, so path_to and nodes()
  // only keep the normal forms and the frontier.
  void keep_terms(bool on) { keep_terms_ = on; }
  // Stops as soon as a node satisfying `goal` is discovered.
  void set_goal(std::function<bool(const Term&)> goal) { goal_ = std::move(goal); }

  void run(const Term& root, const Budget& budget) {
    max_size_ = budget.max_size;
    add(root, 0, std::nullopt, std::nullopt);
    if (found_) return;
    std::size_t expanded = 0;
    while (!queue_.empty()) {
      if (budget.max_nodes && expanded >= *budget.max_nodes) break;
      std::size_t id = queue_.front();
      if (budget.max_depth && nodes_[id].depth >= *budget.max_depth) {
        // Beyond the horizon: stays pending.
        queue_.pop_front();
        horizon_.push_back(id);
        continue;
      }
      queue_.pop_front();
      ++expanded;
      expand(id);
      if (found_) break;
    }
    explored_ = expanded;
  }

  const std::vector<Node>& nodes() const { return nodes_; }
  const std::vector<GraphEdge<Rule>>& edges() const { return edges_; }
  std::optional<std::size_t> found() const { return found_; }
  std::size_t explored() const { return explored_; }
  std::size_t pending() const { return queue_.size() + horizon_.size() + pruned_; }
  std::size_t pruned() const { return pruned_; }

  std::optional<std::size_t> lookup(const std::string& key) const {
    auto it = index_.find(key);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  // Steps from the root to node id.
  std::vector<Step> path_to(std::size_t id) const {
    std::vector<Step> out;
    while (nodes_[id].parent) {
      Step s = *nodes_[id].via;
      s.reduct = nodes_[id].term;
      out.push_back(std::move(s));
      id = *nodes_[id].parent;
    }
    return {out.rbegin(), out.rend()};
  }

  ValueSet<Term> values() const {
    ValueSet<Term> v;
    for (const auto& n : nodes_) {
      if (n.normal) {
        v.normals.push_back(n.term);
        v.canon.push_back(canon_(n.term));
      }
    }
    v.explored = explored_;
    v.pending = pending();
    return v;
  }

 private:
  std::size_t add(const Term& t, std::size_t depth, std::optional<std::size_t> parent, std::optional<Step> via) {
    std::string key = canon_(t);
    auto it = index_.find(key);
    if (it != index_.end()) return it->second;
    std::size_t id = nodes_.size();
    index_.emplace(std::move(key), id);
    nodes_.push_back(Node{t, depth, parent, std::move(via)});
    queue_.push_back(id);
    if (goal_ && !found_ && goal_(t)) found_ = id;
    return id;
  }

  void expand(std::size_t id) {
    Term t = nodes_[id].term;
    std::size_t depth = nodes_[id].depth;
    std::vector<Step> steps = succ_(t);
    nodes_[id].expanded = true;
    nodes_[id].normal = steps.empty();
    if (!keep_terms_ && !steps.empty()) nodes_[id].term = Term{};
    for (auto& s : steps) {
      Term reduct = std::move(s.reduct);
      s.reduct = Term{};
      if (max_size_ && reduct.size() > *max_size_) {
        ++pruned_;
        continue;
      }
      Rule rule = s.rule;
      Position at = s.at;
      std::size_t to = add(reduct, depth + 1, id, std::move(s));
      if (record_edges_) edges_.push_back({id, to, rule, std::move(at)});
      if (found_) return;
    }
  }

  Successors succ_;
  Canonical canon_;
  std::vector<Node> nodes_;
  std::unordered_map<std::string, std::size_t> index_;
  std::deque<std::size_t> queue_;
  std::vector<std::size_t> horizon_;
  std::vector<GraphEdge<Rule>> edges_;
  std::function<bool(const Term&)> goal_;
  std::optional<std::size_t> found_;
  std::size_t explored_ = 0;
  std::size_t pruned_ = 0;
  std::optional<std::size_t> max_size_;
  bool record_edges_ = false;
  bool keep_terms_ = true;
};

// Default node budget, overridable through LMUPP_BUDGET.
inline std::size_t default_budget() {
  if (const char* env = std::getenv("LMUPP_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultBudget;
}

}  // namespace lmu

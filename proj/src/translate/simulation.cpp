#include <functional>
#include <set>
#include <unordered_map>

#include "lmupp/translate.hpp"

namespace lmu {

namespace {

// Breadth-first search tree keyed by alpha-canonical form.
template <class Term, class Step>
class SearchTree {
 public:
  using Successors = std::function<std::vector<Step>(const Term&)>;

  SearchTree(const Term& root, Successors next) : next_(std::move(next)) {
    nodes_.push_back({root, 0, std::nullopt, 0});
    index_.emplace(canonical(root), 0);
    frontier_ = {0};
  }

  // Expands one layer. Returns the indices of the new nodes.
  std::vector<std::size_t> grow(std::size_t node_cap) {
    std::vector<std::size_t> added;
    for (std::size_t i : frontier_) {
      for (auto& s : next_(nodes_[i].term)) {
        if (nodes_.size() >= node_cap) {
          truncated_ = true;
          break;
        }
        auto [it, inserted] = index_.emplace(canonical(s.reduct), nodes_.size());
        if (!inserted) continue;
        Term reduct = s.reduct;
        nodes_.push_back({std::move(reduct), i, std::move(s), nodes_[i].depth + 1});
        added.push_back(nodes_.size() - 1);
      }
    }
    frontier_ = added;
    ++radius_;
    return added;
  }

  std::optional<std::size_t> find(const std::string& canon) const {
    auto it = index_.find(canon);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  std::vector<Step> path_to(std::size_t i) const {
    std::vector<Step> out;
    for (; i != 0; i = nodes_[i].parent) out.push_back(*nodes_[i].via);
    return {out.rbegin(), out.rend()};
  }

  const Term& term(std::size_t i) const { return nodes_[i].term; }
  std::size_t depth(std::size_t i) const { return nodes_[i].depth; }
  std::size_t size() const { return nodes_.size(); }
  std::size_t radius() const { return radius_; }
  bool done() const { return frontier_.empty(); }
  bool truncated() const { return truncated_; }
  const std::vector<std::size_t>& frontier() const { return frontier_; }

 private:
  struct Node {
    Term term;
    std::size_t parent;
    std::optional<Step> via;
    std::size_t depth;
  };

  Successors next_;
  std::vector<Node> nodes_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<std::size_t> frontier_;
  std::size_t radius_ = 0;
  bool truncated_ = false;
};

std::size_t cap(const Budget& b) { return b.max_nodes.value_or(SIZE_MAX); }
std::size_t depth(const Budget& b) { return b.max_depth.value_or(SIZE_MAX); }

// Canonical forms reachable from u in exactly n lambda-mu+ steps.
bool reachable_exactly(const LmuTerm& u, const std::string& target, std::size_t n, std::size_t node_cap) {
  std::vector<LmuTerm> layer{u};
  std::size_t total = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<LmuTerm> next;
    std::set<std::string> seen;
    for (const auto& t : layer) {
      for (auto& r : redexes_lmu(t, LmuMode::MuPlus)) {
        if (seen.insert(canonical(r.reduct)).second) next.push_back(std::move(r.reduct));
      }
    }
    total += next.size();
    if (total > node_cap) return false;
    layer = std::move(next);
  }
  for (const auto& t : layer) {
    if (canonical(t) == target) return true;
  }
  return false;
}

}  // namespace

std::optional<SimWitness> check_sim_star(const LmuTerm& u, const LmuTerm& v, std::size_t n, const Budget& budget) {
  if (!reachable_exactly(u, canonical(v), n, cap(budget))) return std::nullopt;
  const std::string target = canonical(star(v));
  // States pair a term with min(length, n) so that the first hit has length >= n.
  struct State {
    MuppTerm term;
    std::size_t len;
    std::size_t parent;
    std::optional<Redex> via;
  };
  std::vector<State> states{{star(u), 0, 0, std::nullopt}};
  std::unordered_map<std::string, std::size_t> seen{{canonical(star(u)) + "|0", 0}};
  auto witness = [&](std::size_t i) {
    SimWitness w;
    for (; i != 0; i = states[i].parent) w.path.push_back(*states[i].via);
    w.path = {w.path.rbegin(), w.path.rend()};
    w.steps = w.path.size();
    return w;
  };
  if (n == 0 && canonical(star(u)) == target) return SimWitness{};
  std::vector<std::size_t> frontier{0};
  for (std::size_t d = 0; d < depth(budget) && !frontier.empty(); ++d) {
    std::vector<std::size_t> next;
    for (std::size_t i : frontier) {
      for (auto& r : redexes_mupp(states[i].term, MuppMode::Core)) {
        std::size_t len = std::min(states[i].len + 1, n);
        std::string canon = canonical(r.reduct);
        if (!seen.emplace(canon + "|" + std::to_string(len), states.size()).second) continue;
        MuppTerm reduct = r.reduct;
        states.push_back({std::move(reduct), len, i, std::move(r)});
        if (len == n && canon == target) return witness(states.size() - 1);
        if (states.size() >= cap(budget)) return std::nullopt;
        next.push_back(states.size() - 1);
      }
    }
    frontier = std::move(next);
  }
  return std::nullopt;
}

JoinOutcome join_circ(const MuppTerm& u, const MuppTerm& v, const Budget& budget) {
  JoinOutcome out;
  if (!alpha_eq(u, v)) {
    bool step = false;
    for (const auto& r : redexes_mupp(u, MuppMode::Modified)) {
      if (alpha_eq(r.reduct, v)) {
        step = true;
        break;
      }
    }
    if (!step) {
      out.status = JoinOutcome::Status::NotAStep;
      return out;
    }
  }
  using Tree = SearchTree<LmuTerm, LmuRedex>;
  auto next = [](const LmuTerm& t) { return redexes_lmu(t, LmuMode::MuPlus); };
  Tree trees[2] = {Tree(circ(u), next), Tree(circ(v), next)};
  auto join = [&](int side, std::size_t i, std::size_t j) {
    std::size_t left = side == 0 ? i : j;
    std::size_t right = side == 0 ? j : i;
    out.status = JoinOutcome::Status::Joined;
    out.witness = JoinWitness{trees[0].term(left), trees[0].path_to(left), trees[1].path_to(right)};
    return out;
  };
  if (auto j = trees[1].find(canonical(trees[0].term(0)))) return join(0, 0, *j);
  auto stuck = [&](int side) { return trees[side].done() || trees[side].radius() >= depth(budget); };
  while (true) {
    int side = trees[0].frontier().size() <= trees[1].frontier().size() ? 0 : 1;
    if (stuck(side)) side = 1 - side;
    if (stuck(side) || trees[0].size() + trees[1].size() >= cap(budget)) break;
    std::size_t room = cap(budget) - trees[1 - side].size();
    for (std::size_t i : trees[side].grow(room)) {
      if (auto j = trees[1 - side].find(canonical(trees[side].term(i)))) return join(side, i, *j);
    }
  }
  bool complete = trees[0].done() && trees[1].done() && !trees[0].truncated() && !trees[1].truncated();
  out.status = complete ? JoinOutcome::Status::Refuted : JoinOutcome::Status::Inconclusive;
  return out;
}

std::optional<JoinWitness> check_join_circ(const MuppTerm& u, const MuppTerm& v, const Budget& budget) {
  return join_circ(u, v, budget).witness;
}

}  // namespace lmu

#pragma once

// Silent-transition removal. Closures are computed by iterating the one-step
// operator from the empty set until it stabilises; the operator is monotone
// and bounded by the node list, so the iteration terminates.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "zipaut/automaton.hpp"

namespace zipaut {

/// Duplicate-free, canonically ordered set of base nodes.
template <class N>
class NodeSet {
 public:
  NodeSet() = default;
  explicit NodeSet(const std::set<N>& s) : members_(s.begin(), s.end()) {}

  static NodeSet of(std::vector<N> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    NodeSet out;
    out.members_ = std::move(v);
    return out;
  }

  const std::vector<N>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(const N& n) const { return std::binary_search(members_.begin(), members_.end(), n); }

  friend bool operator==(const NodeSet&, const NodeSet&) = default;
  friend bool operator<(const NodeSet& a, const NodeSet& b) {
    return std::lexicographical_compare(a.members_.begin(), a.members_.end(), b.members_.begin(),
                                        b.members_.end());
  }

 private:
  std::vector<N> members_;
};

namespace detail {

// Silent edges grouped by source, keeping only destinations in `nodes(M)`.
template <class N>
struct SilentSuccessors {
  std::set<N> nodes;
  std::map<N, std::vector<N>> next;

  explicit SilentSuccessors(const Automaton<N>& m) : nodes(m.nodes.begin(), m.nodes.end()) {
    for (const auto& e : m.edges) {
      if (e.action.silent() && nodes.contains(e.dest)) next[e.source].push_back(e.dest);
    }
  }

  std::set<N> step(const N& s, const std::set<N>& x) const {
    std::set<N> out = x;
    out.insert(s);
    for (const auto& src : x) {
      auto it = next.find(src);
      if (it == next.end()) continue;
      out.insert(it->second.begin(), it->second.end());
    }
    return out;
  }
};

}  // namespace detail

/// {s} ∪ x ∪ the nodes of M one silent edge away from x.
template <class N>
std::set<N> tauclose_step(const Automaton<N>& m, const N& s, const std::set<N>& x) {
  return detail::SilentSuccessors<N>(m).step(s, x);
}

template <class N>
struct ClosureRun {
  NodeSet<N> closure;
  std::size_t iterations = 0;  // applications of tauclose_step, including the final stable one
};

namespace detail {

template <class N>
ClosureRun<N> iterate_closure(const SilentSuccessors<N>& g, const N& s) {
  std::set<N> x;
  std::size_t it = 0;
  while (true) {
    auto nx = g.step(s, x);
    ++it;
    if (nx == x) return {NodeSet<N>(x), it};
    x = std::move(nx);
  }
}

}  // namespace detail

template <class N>
ClosureRun<N> tauclose_comp_traced(const Automaton<N>& m, const N& s) {
  return detail::iterate_closure(detail::SilentSuccessors<N>(m), s);
}

template <class N>
NodeSet<N> tauclose_comp(const Automaton<N>& m, const N& s) {
  return tauclose_comp_traced(m, s).closure;
}

/// The least fixpoint of tauclose_step; realised by iteration.
template <class N>
NodeSet<N> tauclose(const Automaton<N>& m, const N& s) {
  return tauclose_comp(m, s);
}

template <class N>
std::vector<NodeSet<N>> tauclose_nodes(const Automaton<N>& m) {
  const detail::SilentSuccessors<N> g(m);
  std::vector<NodeSet<N>> out;
  out.reserve(m.nodes.size());
  for (const auto& n : m.nodes) out.push_back(detail::iterate_closure(g, n).closure);
  return out;
}

template <class N>
NodeSet<N> tauclose_init_s(const Automaton<N>& m) {
  return tauclose(m, m.init);
}

template <class N>
std::vector<Action> acts_of_ta(const Automaton<N>& m) {
  std::vector<Action> out;
  out.reserve(m.edges.size());
  for (const auto& e : m.edges) out.push_back(e.action);
  return out;
}

/// Every ⟨closure(s1), a, closure(s2)⟩ over nodes × actions × nodes, with
/// repetitions. Quadratic in the node count; meant for small automata.
template <class N>
std::vector<Edge<NodeSet<N>>> possible_tau_edges(const Automaton<N>& m) {
  const auto closures = tauclose_nodes(m);
  const auto acts = acts_of_ta(m);
  std::vector<Edge<NodeSet<N>>> out;
  out.reserve(closures.size() * closures.size() * acts.size());
  for (const auto& c1 : closures) {
    for (const auto& a : acts) {
      for (const auto& c2 : closures) out.push_back({c1, a, c2});
    }
  }
  return out;
}

/// Non-silent edges of the closed automaton, deduplicated and sorted.
/// ⟨closure(s1), a, closure(s2)⟩ is kept when some s in closure(s1) has a
/// non-silent edge ⟨s, a, s2⟩ in M, with s1 and s2 nodes of M.
template <class N>
std::vector<Edge<NodeSet<N>>> tauclose_edges(const Automaton<N>& m) {
  const detail::SilentSuccessors<N> g(m);
  std::map<N, NodeSet<N>> closure_of;
  for (const auto& n : m.nodes) {
    if (!closure_of.contains(n)) closure_of.emplace(n, detail::iterate_closure(g, n).closure);
  }

  std::map<N, std::vector<const Edge<N>*>> visible_from;
  for (const auto& e : m.edges) {
    if (!e.action.silent() && closure_of.contains(e.dest)) visible_from[e.source].push_back(&e);
  }

  std::set<Edge<NodeSet<N>>> out;
  for (const auto& [s1, c1] : closure_of) {
    for (const auto& s : c1.members()) {
      auto it = visible_from.find(s);
      if (it == visible_from.end()) continue;
      for (const Edge<N>* e : it->second) out.insert({c1, e->action, closure_of.at(e->dest)});
    }
  }
  return {out.begin(), out.end()};
}

template <class N>
Automaton<NodeSet<N>> tauclose_ta(const Automaton<N>& m) {
  return {tauclose_nodes(m), tauclose_edges(m), tauclose_init_s(m)};
}

template <class N>
struct TauViolation {
  enum class Kind { NotClosure, InitUnrelated, UnmatchedEdge };
  Kind kind;
  std::optional<N> base;
  std::optional<NodeSet<N>> closed;
  std::optional<Edge<N>> edge;
};

template <class N>
struct TauReport {
  std::size_t checked_pairs = 0;
  bool result = true;
  std::optional<TauViolation<N>> first_violation;
};

/// Checks that membership, R(s, S) ⟺ s ∈ nodes(M) ∧ S ∈ nodes(Mc) ∧ s ∈ S,
/// is a τ-simulation of `m` by `mc`. `mc` must be tauclose_ta(m).
template <class N>
TauReport<N> check_tau_sim_witness(const Automaton<N>& m, const Automaton<NodeSet<N>>& mc) {
  using V = TauViolation<N>;
  TauReport<N> report;
  auto fail = [&report](V v) {
    report.result = false;
    report.first_violation = std::move(v);
    return report;
  };

  if (!(mc == tauclose_ta(m))) return fail({V::Kind::NotClosure, {}, {}, {}});

  const std::set<N> base_nodes(m.nodes.begin(), m.nodes.end());
  const std::set<NodeSet<N>> closed_nodes(mc.nodes.begin(), mc.nodes.end());
  auto related = [&](const N& s, const NodeSet<N>& sc) {
    return base_nodes.contains(s) && closed_nodes.contains(sc) && sc.contains(s);
  };

  if (!related(m.init, mc.init)) return fail({V::Kind::InitUnrelated, m.init, mc.init, {}});

  std::map<N, std::vector<const Edge<N>*>> out_of;
  for (const auto& e : m.edges) out_of[e.source].push_back(&e);
  std::map<NodeSet<N>, std::vector<const Edge<NodeSet<N>>*>> closed_out_of;
  for (const auto& e : mc.edges) closed_out_of[e.source].push_back(&e);

  for (const auto& sc : closed_nodes) {
    const auto& candidates = closed_out_of[sc];
    for (const auto& s : sc.members()) {
      if (!related(s, sc)) continue;
      ++report.checked_pairs;
      auto it = out_of.find(s);
      if (it == out_of.end()) continue;
      for (const Edge<N>* e : it->second) {
        bool ok = e->action.silent() && related(e->dest, sc);
        for (std::size_t k = 0; !ok && k < candidates.size(); ++k) {
          ok = candidates[k]->action == e->action && related(e->dest, candidates[k]->dest);
        }
        if (!ok) return fail({V::Kind::UnmatchedEdge, s, sc, *e});
      }
    }
  }
  return report;
}

/// Follows `word` through `mc` from its initial node, tracking every node
/// reachable so far. Returns the index of the first action that cannot be
/// taken, or nothing if the whole word labels a path.
template <class N>
std::optional<std::size_t> first_unmatched_action(const Automaton<N>& mc, const std::vector<Action>& word) {
  std::set<N> current{mc.init};
  for (std::size_t i = 0; i < word.size(); ++i) {
    std::set<N> next;
    for (const auto& e : mc.edges) {
      if (e.action == word[i] && current.contains(e.source)) next.insert(e.dest);
    }
    if (next.empty()) return i;
    current = std::move(next);
  }
  return std::nullopt;
}

}  // namespace zipaut

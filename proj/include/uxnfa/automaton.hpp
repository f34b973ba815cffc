#pragma once

// Unary automata: one graph type shared by DFAs, NFAs and XNFAs.  The only
// input symbol is implicit; `successors[q]` is the image of q under it.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "uxnfa/error.hpp"
#include "uxnfa/saturating.hpp"

namespace uxnfa {

/// How the paths of a computation tree are read.
///   existential   - NFA, at least one accepting path
///   exclusive     - XNFA, exactly one accepting path
///   deterministic - DFA, every state has exactly one successor
enum class semantics { existential, exclusive, deterministic };

struct unary_automaton {
  std::size_t state_count = 1;
  std::size_t initial = 0;
  std::vector<std::size_t> accepting;               // sorted, no duplicates
  std::vector<std::vector<std::size_t>> successors;  // per state, sorted, no duplicates

  bool is_accepting(std::size_t q) const {
    return std::binary_search(accepting.begin(), accepting.end(), q);
  }

  std::size_t edge_count() const {
    std::size_t total = 0;
    for (const auto& s : successors) total += s.size();
    return total;
  }

  bool operator==(const unary_automaton&) const = default;
};

struct violation {
  errc code;
  std::string message;
};

/// Checks the structural invariants and, for `deterministic`, that every
/// state has out-degree one.  Returns the first violation found.
inline std::optional<violation> validate(const unary_automaton& a, semantics mode) {
  const std::size_t n = a.state_count;
  auto out_of_range = [&](std::string what) {
    return violation{errc::index_out_of_range, std::move(what)};
  };
  if (n == 0) return out_of_range("automaton has no states");
  if (a.successors.size() != n)
    return out_of_range("successor table has " + std::to_string(a.successors.size()) +
                        " rows for " + std::to_string(n) + " states");
  if (a.initial >= n)
    return out_of_range("initial state " + std::to_string(a.initial) + " >= " + std::to_string(n));
  for (std::size_t i = 0; i < a.accepting.size(); ++i) {
    const std::size_t f = a.accepting[i];
    if (f >= n) return out_of_range("accepting state " + std::to_string(f) + " >= " + std::to_string(n));
    if (i > 0 && a.accepting[i - 1] >= f)
      return violation{errc::duplicate_edge, "accepting list is not strictly increasing"};
  }
  for (std::size_t q = 0; q < n; ++q) {
    const auto& succ = a.successors[q];
    for (std::size_t i = 0; i < succ.size(); ++i) {
      if (succ[i] >= n)
        return out_of_range("edge " + std::to_string(q) + " -> " + std::to_string(succ[i]) +
                            " leaves a " + std::to_string(n) + "-state automaton");
      if (i > 0 && succ[i - 1] >= succ[i])
        return violation{errc::duplicate_edge, "successors of state " + std::to_string(q) +
                                                   " are not a strictly increasing set"};
    }
    if (mode == semantics::deterministic && succ.size() != 1)
      return violation{errc::nondeterministic_under_dfa_mode,
                       "state " + std::to_string(q) + " has " + std::to_string(succ.size()) +
                           " successors"};
  }
  return std::nullopt;
}

inline void require_valid(const unary_automaton& a, semantics mode) {
  if (auto v = validate(a, mode)) throw error(v->code, v->message);
}

/// Builds an automaton from an edge list.  Duplicate edges and accepting
/// entries collapse (transitions are sets); indices are range-checked.
inline unary_automaton make_automaton(std::size_t state_count, std::size_t initial,
                                      std::vector<std::size_t> accepting,
                                      std::span<const std::pair<std::size_t, std::size_t>> edges) {
  unary_automaton a;
  a.state_count = state_count;
  a.initial = initial;
  std::sort(accepting.begin(), accepting.end());
  accepting.erase(std::unique(accepting.begin(), accepting.end()), accepting.end());
  a.accepting = std::move(accepting);
  a.successors.assign(state_count, {});
  for (auto [from, to] : edges) {
    if (from >= state_count || to >= state_count)
      throw error(errc::index_out_of_range, "edge " + std::to_string(from) + " -> " +
                                                std::to_string(to) + " leaves a " +
                                                std::to_string(state_count) + "-state automaton");
    a.successors[from].push_back(to);
  }
  for (auto& s : a.successors) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }
  require_valid(a, semantics::existential);
  return a;
}

inline unary_automaton make_automaton(std::size_t state_count, std::size_t initial,
                                      std::vector<std::size_t> accepting,
                                      std::initializer_list<std::pair<std::size_t, std::size_t>> edges) {
  return make_automaton(state_count, initial, std::move(accepting),
                        std::span<const std::pair<std::size_t, std::size_t>>(edges.begin(), edges.size()));
}

inline std::vector<std::vector<std::size_t>> predecessors(const unary_automaton& a) {
  std::vector<std::vector<std::size_t>> pred(a.state_count);
  for (std::size_t q = 0; q < a.state_count; ++q)
    for (std::size_t r : a.successors[q]) pred[r].push_back(q);
  return pred;
}

namespace detail {

inline std::vector<bool> reach(const std::vector<std::vector<std::size_t>>& adj,
                               std::span<const std::size_t> sources) {
  std::vector<bool> seen(adj.size(), false);
  std::vector<std::size_t> stack;
  for (std::size_t s : sources) {
    if (!seen[s]) {
      seen[s] = true;
      stack.push_back(s);
    }
  }
  while (!stack.empty()) {
    const std::size_t q = stack.back();
    stack.pop_back();
    for (std::size_t r : adj[q]) {
      if (!seen[r]) {
        seen[r] = true;
        stack.push_back(r);
      }
    }
  }
  return seen;
}

}  // namespace detail

/// Removes states that are unreachable or cannot reach an accepting state.
/// Surviving states keep their relative order.  If the initial state itself
/// is unproductive the result is the one-state automaton with no edges.
inline unary_automaton trim(const unary_automaton& a) {
  const std::size_t n = a.state_count;
  const std::size_t start[] = {a.initial};
  const auto reachable = detail::reach(a.successors, start);
  const auto productive = detail::reach(predecessors(a), a.accepting);
  if (!productive[a.initial]) {
    unary_automaton dead;
    dead.successors.assign(1, {});
    return dead;
  }
  std::vector<std::size_t> index(n, n);
  std::size_t kept = 0;
  for (std::size_t q = 0; q < n; ++q)
    if (reachable[q] && productive[q]) index[q] = kept++;

  unary_automaton out;
  out.state_count = kept;
  out.initial = index[a.initial];
  out.successors.assign(kept, {});
  for (std::size_t q = 0; q < n; ++q) {
    if (index[q] == n) continue;
    for (std::size_t r : a.successors[q])
      if (index[r] != n) out.successors[index[q]].push_back(index[r]);
    if (a.is_accepting(q)) out.accepting.push_back(index[q]);
  }
  return out;
}

/// One transition step: v' = v * A over the saturating semiring.
inline count_vector step(const unary_automaton& a, const count_vector& v) {
  count_vector next(a.state_count, sat_count::zero);
  for (std::size_t q = 0; q < a.state_count; ++q) {
    if (v[q] == sat_count::zero) continue;
    for (std::size_t r : a.successors[q]) next[r] += v[q];
  }
  return next;
}

inline count_vector initial_vector(const unary_automaton& a) {
  count_vector v(a.state_count, sat_count::zero);
  v[a.initial] = sat_count::one;
  return v;
}

/// Entry q is the saturated number of paths of exactly `length` steps from
/// the initial state to q.
inline count_vector path_count_vector(const unary_automaton& a, std::uint64_t length) {
  count_vector v = initial_vector(a);
  for (std::uint64_t i = 0; i < length; ++i) v = step(a, v);
  return v;
}

inline sat_count accepting_total(const unary_automaton& a, const count_vector& v) {
  sat_count total = sat_count::zero;
  for (std::size_t f : a.accepting) total += v[f];
  return total;
}

/// Reads a saturated accepting-path total under the given semantics.
constexpr bool verdict(semantics mode, sat_count accepting_paths) noexcept {
  return mode == semantics::exclusive ? accepting_paths == sat_count::one
                                      : accepting_paths != sat_count::zero;
}

inline bool accepts(const unary_automaton& a, semantics mode, std::uint64_t length) {
  return verdict(mode, accepting_total(a, path_count_vector(a, length)));
}

/// Acceptance bits for every length in [0, max_length], one sweep.
inline std::vector<bool> acceptance_prefix(const unary_automaton& a, semantics mode,
                                           std::uint64_t max_length) {
  std::vector<bool> bits;
  bits.reserve(max_length + 1);
  count_vector v = initial_vector(a);
  for (std::uint64_t len = 0;; ++len) {
    bits.push_back(verdict(mode, accepting_total(a, v)));
    if (len == max_length) break;
    v = step(a, v);
  }
  return bits;
}

// ---------------------------------------------------------------------------
// Strongly connected components

struct scc_component {
  std::vector<std::size_t> nodes;  // ascending
  bool nontrivial = false;         // has at least one internal edge
  std::size_t period = 0;          // gcd of internal cycle lengths; 0 if trivial
  bool simple_cycle = false;       // exactly one directed cycle through all nodes
};

struct scc_analysis {
  std::vector<std::size_t> component_of;
  std::vector<scc_component> components;  // reverse topological order of the condensation
};

/// Tarjan's algorithm (iterative), followed by a level-labelling gcd for
/// the period of each component.
inline scc_analysis analyze_scc(const unary_automaton& a) {
  const std::size_t n = a.state_count;
  constexpr std::size_t unvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(n, unvisited), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::vector<std::pair<std::size_t, std::size_t>> call;  // (state, next successor slot)
  scc_analysis out;
  out.component_of.assign(n, unvisited);
  std::size_t counter = 0;

  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != unvisited) continue;
    call.emplace_back(root, 0);
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      auto& [q, slot] = call.back();
      if (slot < a.successors[q].size()) {
        const std::size_t r = a.successors[q][slot++];
        if (index[r] == unvisited) {
          index[r] = low[r] = counter++;
          stack.push_back(r);
          on_stack[r] = true;
          call.emplace_back(r, 0);
        } else if (on_stack[r]) {
          low[q] = std::min(low[q], index[r]);
        }
        continue;
      }
      const std::size_t done = q;
      call.pop_back();
      if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
      if (low[done] != index[done]) continue;
      scc_component comp;
      const std::size_t id = out.components.size();
      for (;;) {
        const std::size_t w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        out.component_of[w] = id;
        comp.nodes.push_back(w);
        if (w == done) break;
      }
      std::sort(comp.nodes.begin(), comp.nodes.end());
      out.components.push_back(std::move(comp));
    }
  }

  std::vector<std::size_t> level(n, unvisited);
  for (std::size_t id = 0; id < out.components.size(); ++id) {
    auto& comp = out.components[id];
    std::size_t internal_edges = 0;
    bool out_degree_one = true;
    for (std::size_t q : comp.nodes) {
      std::size_t local = 0;
      for (std::size_t r : a.successors[q])
        if (out.component_of[r] == id) ++local;
      internal_edges += local;
      out_degree_one = out_degree_one && local == 1;
    }
    comp.nontrivial = internal_edges > 0;
    if (!comp.nontrivial) continue;
    comp.simple_cycle = out_degree_one;

    // BFS levels from the first node; every internal edge u->v closes a
    // cycle-length discrepancy level[u] + 1 - level[v].
    std::vector<std::size_t> queue{comp.nodes.front()};
    level[comp.nodes.front()] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::size_t q = queue[head];
      for (std::size_t r : a.successors[q]) {
        if (out.component_of[r] != id || level[r] != unvisited) continue;
        level[r] = level[q] + 1;
        queue.push_back(r);
      }
    }
    std::size_t g = 0;
    for (std::size_t q : comp.nodes) {
      for (std::size_t r : a.successors[q]) {
        if (out.component_of[r] != id) continue;
        const std::size_t lhs = level[q] + 1, rhs = level[r];
        g = std::gcd(g, lhs > rhs ? lhs - rhs : rhs - lhs);
      }
    }
    comp.period = g;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Single-final-state normalization

struct single_final_form {
  unary_automaton automaton;  // accepting == {final_state}
  std::size_t final_state = 0;
};

/// Rewrites a trimmed automaton so that the initial state has no incoming
/// edges and a single accepting state q+ is the only state without outgoing
/// edges.  Every state u with an accepting successor gains an edge to q+;
/// a state with two or more accepting successors additionally gets one copy
/// that shares its incoming edges and leads only to q+.
///
/// For every length >= 2 the saturated number of paths to q+ equals the
/// saturated number of accepting paths of the input; the counts are exact
/// when no state has three or more accepting successors.  Length 1 is exact
/// only if the initial state has at most one accepting successor, and the
/// empty word is not represented at all.  Callers that need those short
/// lengths read them off the input directly.
///
/// Throws errc::empty_language_after_trim when no nonempty word has an
/// accepting path.
inline single_final_form normalize_single_final(const unary_automaton& a) {
  const std::size_t n = a.state_count;
  const auto pred = predecessors(a);

  std::vector<std::vector<std::size_t>> succ = a.successors;
  std::size_t start = a.initial;
  if (!pred[a.initial].empty()) {
    start = succ.size();
    succ.push_back(a.successors[a.initial]);
  }
  const std::size_t working = succ.size();  // originals plus the fresh start, if any

  std::vector<std::vector<std::size_t>> in(working);
  for (std::size_t q = 0; q < working; ++q)
    for (std::size_t r : succ[q]) in[r].push_back(q);

  const std::size_t final_state = working;
  succ.emplace_back();
  std::vector<std::size_t> fan_in_to_final;
  for (std::size_t u = 0; u < working; ++u) {
    const auto accepting_successors = static_cast<std::size_t>(std::count_if(
        succ[u].begin(), succ[u].end(), [&](std::size_t r) { return r < n && a.is_accepting(r); }));
    if (accepting_successors == 0) continue;
    fan_in_to_final.push_back(u);
    if (accepting_successors >= 2 && !in[u].empty()) {
      const std::size_t copy = succ.size();
      succ.push_back({final_state});
      for (std::size_t v : in[u]) succ[v].push_back(copy);
    }
  }
  for (std::size_t u : fan_in_to_final) succ[u].push_back(final_state);

  unary_automaton raw;
  raw.state_count = succ.size();
  raw.initial = start;
  raw.accepting = {final_state};
  raw.successors = std::move(succ);
  for (auto& s : raw.successors) std::sort(s.begin(), s.end());

  unary_automaton trimmed = trim(raw);
  if (trimmed.accepting.empty())
    throw error(errc::empty_language_after_trim, "no nonempty word has an accepting path");
  const std::size_t f = trimmed.accepting.front();
  return {std::move(trimmed), f};
}

}  // namespace uxnfa

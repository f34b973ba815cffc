#pragma once

// Conversion of unary XNFAs to Chrobak normal form (a deterministic tail
// followed by one nondeterministic branch into disjoint cycles), and the
// determinization of that normal form into a tail plus one lcm-length cycle.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "uxnfa/automaton.hpp"
#include "uxnfa/error.hpp"
#include "uxnfa/saturating.hpp"

namespace uxnfa {

struct chrobak_cycle {
  std::size_t length = 1;
  std::vector<std::size_t> accepting;  // positions < length, ascending

  bool operator==(const chrobak_cycle&) const = default;
};

/// Tail states 0 .. m^3+1 form a chain; the last one branches into position
/// 0 of every cycle, so position i of a cycle of length d is occupied at
/// lengths m^3 + 2 + i + x*d.  Cycles come in pairs of equal length (the
/// "A" cycle first, then its "R" twin), ordered by length.
struct chrobak_automaton {
  std::vector<bool> tail_accepting;
  std::vector<chrobak_cycle> cycles;
  semantics mode = semantics::exclusive;
  std::size_t m = 0;

  std::size_t tail_length() const { return tail_accepting.size(); }

  std::size_t total_cycle_length() const {
    std::size_t total = 0;
    for (const auto& c : cycles) total += c.length;
    return total;
  }

  std::size_t state_count() const { return tail_length() + total_cycle_length(); }

  bool operator==(const chrobak_automaton&) const = default;
};

enum class superpath_case { one_simple_cycle, many_simple_cycles };

/// All initial -> q+ walks of a single-final automaton that pass through the
/// same nontrivial components in the same order.
struct superpath_summary {
  std::vector<std::size_t> scc_sequence;  // component ids in path order
  std::size_t d = 1;                      // gcd of the component periods
  superpath_case kind = superpath_case::many_simple_cycles;
  std::vector<std::size_t> residues;  // lengths of the walks mod d, ascending
  /// For each residue class mod d: how many walks of one fixed, sufficiently
  /// long length in that class exist, saturated.  With several simple cycles
  /// every realized class has at least two (cycles can trade iterations).
  std::vector<sat_count> multiplicity;
};

inline constexpr std::size_t default_superpath_budget = 10'000;
inline constexpr std::size_t default_lcm_budget = 1'000'000;

namespace detail {

inline std::vector<std::vector<std::size_t>> scc_sequences(const unary_automaton& a, const scc_analysis& scc,
                                                          std::size_t final_state, std::size_t budget) {
  using sequence_set = std::set<std::vector<std::size_t>>;
  const std::size_t k = scc.components.size();
  // Component ids are a reverse topological order: every edge leads to a
  // component with a smaller or equal id, so ascending ids see successors first.
  std::vector<sequence_set> from(k);
  for (std::size_t id = 0; id < k; ++id) {
    const auto& comp = scc.components[id];
    sequence_set tails;
    if (scc.component_of[final_state] == id) tails.insert(std::vector<std::size_t>{});
    for (std::size_t q : comp.nodes)
      for (std::size_t r : a.successors[q]) {
        const std::size_t next = scc.component_of[r];
        if (next != id) tails.insert(from[next].begin(), from[next].end());
      }
    if (comp.nontrivial) {
      for (const auto& t : tails) {
        std::vector<std::size_t> s{id};
        s.insert(s.end(), t.begin(), t.end());
        from[id].insert(std::move(s));
      }
    } else {
      from[id] = std::move(tails);
    }
    if (from[id].size() > budget)
      throw error(errc::superpath_budget_exceeded,
                  "more than " + std::to_string(budget) + " component sequences");
  }
  const auto& all = from[scc.component_of[a.initial]];
  std::vector<std::vector<std::size_t>> out;
  for (const auto& s : all)
    if (!s.empty()) out.push_back(s);
  return out;
}

// Residues mod d of walks that visit exactly the components of `seq`, in order.
inline std::vector<std::size_t> walk_residues(const unary_automaton& a, const scc_analysis& scc,
                                              std::size_t final_state, const std::vector<std::size_t>& seq,
                                              std::size_t d) {
  const std::size_t phases = seq.size() + 1;
  auto slot = [&](std::size_t q, std::size_t phase, std::size_t r) { return (q * phases + phase) * d + r; };
  std::vector<bool> seen(a.state_count * phases * d, false);
  struct node { std::size_t q, phase, r; };
  std::vector<node> queue{{a.initial, 0, 0}};
  seen[slot(a.initial, 0, 0)] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const node cur = queue[head];
    for (std::size_t v : a.successors[cur.q]) {
      const std::size_t cv = scc.component_of[v];
      std::size_t phase = cur.phase;
      if (scc.components[cv].nontrivial) {
        if (phase >= 1 && seq[phase - 1] == cv) {
        } else if (phase < seq.size() && seq[phase] == cv) {
          ++phase;
        } else {
          continue;
        }
      }
      const std::size_t r = (cur.r + 1) % d;
      if (seen[slot(v, phase, r)]) continue;
      seen[slot(v, phase, r)] = true;
      queue.push_back({v, phase, r});
    }
  }
  std::vector<std::size_t> out;
  for (std::size_t r = 0; r < d; ++r)
    if (seen[slot(final_state, seq.size(), r)]) out.push_back(r);
  return out;
}

// Walk multiplicity per residue class for a sequence that is one simple cycle
// C of length d.  A long walk is fixed by its entry prefix (initial -> v in C
// through trivial states) and exit suffix (w in C -> q+ through trivial
// states); the part inside C is then forced.  Trivial states form a DAG, so
// both prefix and suffix counts are finite.
inline std::vector<sat_count> single_cycle_multiplicity(const unary_automaton& a, const scc_analysis& scc,
                                                        std::size_t final_state, std::size_t cycle_id,
                                                        std::size_t d) {
  const std::size_t n = a.state_count;
  const auto& cycle = scc.components[cycle_id];
  auto trivial = [&](std::size_t q) { return !scc.components[scc.component_of[q]].nontrivial; };

  std::vector<std::size_t> pos(n, 0);
  {
    std::size_t q = cycle.nodes.front();
    for (std::size_t i = 0; i < d; ++i) {
      pos[q] = i;
      for (std::size_t r : a.successors[q])
        if (scc.component_of[r] == cycle_id) {
          q = r;
          break;
        }
    }
  }

  std::vector<std::size_t> order;  // trivial states, sources first
  for (std::size_t id = scc.components.size(); id-- > 0;)
    if (!scc.components[id].nontrivial) order.push_back(scc.components[id].nodes.front());

  using table = std::vector<std::vector<sat_count>>;
  table prefix(n, std::vector<sat_count>(d, sat_count::zero));
  table enter(n, std::vector<sat_count>(d, sat_count::zero));
  if (trivial(a.initial)) prefix[a.initial][0] = sat_count::one;
  for (std::size_t q : order)
    for (std::size_t v : a.successors[q])
      for (std::size_t r = 0; r < d; ++r) {
        if (prefix[q][r] == sat_count::zero) continue;
        if (trivial(v)) prefix[v][(r + 1) % d] += prefix[q][r];
        else if (scc.component_of[v] == cycle_id) enter[v][(r + 1) % d] += prefix[q][r];
      }

  table suffix(n, std::vector<sat_count>(d, sat_count::zero));
  table leave(n, std::vector<sat_count>(d, sat_count::zero));
  suffix[final_state][0] = sat_count::one;
  for (auto it = order.rbegin(); it != order.rend(); ++it)
    for (std::size_t v : a.successors[*it])
      if (trivial(v))
        for (std::size_t r = 0; r < d; ++r) suffix[*it][(r + 1) % d] += suffix[v][r];
  for (std::size_t w : cycle.nodes)
    for (std::size_t x : a.successors[w])
      if (trivial(x))
        for (std::size_t r = 0; r < d; ++r) leave[w][(r + 1) % d] += suffix[x][r];

  std::vector<sat_count> out(d, sat_count::zero);
  for (std::size_t v : cycle.nodes)
    for (std::size_t w : cycle.nodes) {
      const std::size_t inside = (pos[w] + d - pos[v]) % d;
      for (std::size_t r1 = 0; r1 < d; ++r1) {
        if (enter[v][r1] == sat_count::zero) continue;
        for (std::size_t r2 = 0; r2 < d; ++r2) out[(r1 + inside + r2) % d] += enter[v][r1] * leave[w][r2];
      }
    }
  return out;
}

}  // namespace detail

/// One summary per nonempty sequence of nontrivial components that some
/// initial -> q+ walk of `form` passes through.  Walks through no nontrivial
/// component have bounded length and are not summarized.
inline std::vector<superpath_summary> summarize_superpaths(const single_final_form& form,
                                                           std::size_t budget = default_superpath_budget) {
  const auto& a = form.automaton;
  const auto scc = analyze_scc(a);
  std::vector<superpath_summary> out;
  for (auto& seq : detail::scc_sequences(a, scc, form.final_state, budget)) {
    superpath_summary s;
    s.d = 0;
    for (std::size_t id : seq) s.d = std::gcd(s.d, scc.components[id].period);
    s.kind = seq.size() == 1 && scc.components[seq.front()].simple_cycle ? superpath_case::one_simple_cycle
                                                                        : superpath_case::many_simple_cycles;
    s.residues = detail::walk_residues(a, scc, form.final_state, seq, s.d);
    if (s.kind == superpath_case::one_simple_cycle) {
      s.multiplicity = detail::single_cycle_multiplicity(a, scc, form.final_state, seq.front(), s.d);
    } else {
      s.multiplicity.assign(s.d, sat_count::zero);
      for (std::size_t r : s.residues) s.multiplicity[r] = sat_count::many;
    }
    s.scc_sequence = std::move(seq);
    out.push_back(std::move(s));
  }
  return out;
}

struct chrobak_options {
  std::size_t superpath_budget = default_superpath_budget;
};

/// Converts an XNFA into an equivalent XNFA in Chrobak normal form.
///
/// The input is trimmed and brought into single-final form; m is the state
/// count of that form.  Lengths up to m^3 + 1 are decided by the tail, whose
/// bits are read off the input directly.  Every longer length is covered by
/// cycles: each component sequence with gcd d contributes, per residue class,
/// its saturated walk multiplicity to a counter per position of the d-cycle
/// pair, and position i of A_d (resp. R_d) accepts when the counter is at
/// least one (resp. two).  An exclusive reading of the pair therefore accepts
/// exactly the lengths with one walk overall.
inline chrobak_automaton to_chrobak(const unary_automaton& a, const chrobak_options& options = {}) {
  require_valid(a, semantics::existential);
  const unary_automaton trimmed = trim(a);

  chrobak_automaton out;
  out.mode = semantics::exclusive;
  std::vector<superpath_summary> summaries;
  try {
    const single_final_form form = normalize_single_final(trimmed);
    out.m = form.automaton.state_count;
    summaries = summarize_superpaths(form, options.superpath_budget);
  } catch (const error& e) {
    if (e.code() != errc::empty_language_after_trim) throw;
    out.m = trimmed.state_count;
  }

  const std::uint64_t m = out.m;
  const std::uint64_t tail = m * m * m + 2;
  out.tail_accepting = acceptance_prefix(a, semantics::exclusive, tail - 1);

  std::map<std::size_t, std::vector<sat_count>> counters;
  for (const auto& s : summaries) {
    auto& counter = counters.try_emplace(s.d, s.d, sat_count::zero).first->second;
    for (std::size_t i = 0; i < s.d; ++i) counter[i] += s.multiplicity[(tail + i) % s.d];
  }
  for (const auto& [d, counter] : counters) {
    chrobak_cycle accept{d, {}}, reject{d, {}};
    for (std::size_t i = 0; i < d; ++i) {
      if (counter[i] != sat_count::zero) accept.accepting.push_back(i);
      if (counter[i] == sat_count::many) reject.accepting.push_back(i);
    }
    out.cycles.push_back(std::move(accept));
    out.cycles.push_back(std::move(reject));
  }
  return out;
}

/// Explicit state graph of a normal-form automaton: tail states first, then
/// the cycles in order.
inline unary_automaton chrobak_as_automaton(const chrobak_automaton& c) {
  const std::size_t tail = c.tail_length();
  unary_automaton a;
  a.state_count = c.state_count();
  a.initial = 0;
  a.successors.resize(a.state_count);
  for (std::size_t i = 0; i + 1 < tail; ++i) a.successors[i] = {i + 1};
  for (std::size_t i = 0; i < tail; ++i)
    if (c.tail_accepting[i]) a.accepting.push_back(i);
  std::size_t base = tail;
  for (const auto& cyc : c.cycles) {
    a.successors[tail - 1].push_back(base);
    for (std::size_t h = 0; h < cyc.length; ++h) a.successors[base + h] = {base + (h + 1) % cyc.length};
    for (std::size_t h : cyc.accepting) a.accepting.push_back(base + h);
    base += cyc.length;
  }
  return a;
}

/// Determinizes an exclusive normal-form automaton: the tail is kept and all
/// cycles are replaced by one cycle of length lcm of their lengths.  Each
/// position of the big cycle counts the accepting small-cycle positions it
/// aliases and accepts iff that count is exactly one.
inline unary_automaton chrobak_to_dfa(const chrobak_automaton& c, std::size_t lcm_budget = default_lcm_budget) {
  std::size_t big = 1;
  for (const auto& cyc : c.cycles) {
    big = std::lcm(big, cyc.length);
    if (big > lcm_budget)
      throw error(errc::lcm_overflow, "cycle lcm exceeds the budget of " + std::to_string(lcm_budget) + " states");
  }
  std::vector<std::size_t> counter(big, 0);
  for (const auto& cyc : c.cycles)
    for (std::size_t j : cyc.accepting)
      for (std::size_t t = j; t < big; t += cyc.length) ++counter[t];

  const std::size_t tail = c.tail_length();
  unary_automaton a;
  a.state_count = tail + big;
  a.initial = 0;
  a.successors.resize(a.state_count);
  for (std::size_t i = 0; i < tail; ++i) {
    a.successors[i] = {i + 1};
    if (c.tail_accepting[i]) a.accepting.push_back(i);
  }
  for (std::size_t t = 0; t < big; ++t) {
    a.successors[tail + t] = {tail + (t + 1) % big};
    if (counter[t] == 1) a.accepting.push_back(tail + t);
  }
  return a;
}

}  // namespace uxnfa

#pragma once

// Generators for the extremal automaton families and the complement gadget,
// plus the seeded random generator behind every test corpus.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "uxnfa/automaton.hpp"
#include "uxnfa/error.hpp"
#include "uxnfa/numtheory.hpp"

namespace uxnfa {

/// XNFA accepting exactly the lengths divisible by exactly one listed prime.
/// State 0 branches into disjoint cycles of the prime lengths, entering each
/// at position 1; position 0 of every cycle accepts.  The initial state does
/// not accept, so the empty word is rejected even for a single prime.
inline unary_automaton witness_xnfa(const std::vector<std::size_t>& primes) {
  if (primes.empty()) throw error(errc::invalid_primes, "prime list is empty");
  std::set<std::size_t> distinct;
  for (std::size_t p : primes) {
    if (!is_prime(p)) throw error(errc::invalid_primes, std::to_string(p) + " is not prime");
    if (!distinct.insert(p).second) throw error(errc::invalid_primes, std::to_string(p) + " is listed twice");
  }
  std::size_t n = 1;
  for (std::size_t p : primes) n += p;
  unary_automaton a;
  a.state_count = n;
  a.initial = 0;
  a.successors.resize(n);
  std::size_t base = 1;
  for (std::size_t p : primes) {
    for (std::size_t h = 0; h < p; ++h) a.successors[base + h] = {base + (h + 1) % p};
    a.successors[0].push_back(base + 1);
    a.accepting.push_back(base);
    base += p;
  }
  return a;
}

/// NFA for {m : m = 0 or m is not a multiple of lcm(cycles)} with
/// 1 + sum(cycles) states: an accepting initial state branching to position 1
/// of each cycle, where every position except 0 accepts.
inline unary_automaton okhotin_nfa(const std::vector<std::size_t>& cycles) {
  if (cycles.empty()) throw error(errc::invalid_cycle_lengths, "cycle list is empty");
  std::size_t n = 1;
  for (std::size_t c : cycles) {
    if (c < 2) throw error(errc::invalid_cycle_lengths, "cycle lengths must be >= 2, got " + std::to_string(c));
    n += c;
  }
  unary_automaton a;
  a.state_count = n;
  a.initial = 0;
  a.successors.resize(n);
  a.accepting.push_back(0);
  std::size_t base = 1;
  for (std::size_t c : cycles) {
    for (std::size_t h = 0; h < c; ++h) {
      a.successors[base + h] = {base + (h + 1) % c};
      if (h != 0) a.accepting.push_back(base + h);
    }
    a.successors[0].push_back(base + 1);
    base += c;
  }
  return a;
}

/// Reads `a` as an NFA and returns an XNFA for the complement of its
/// language.  Two states are appended: a new initial state p0 = n that copies
/// the old initial state's edges and also steps into an accepting sink
/// p = n + 1.  Every nonempty word then has one accepting path more than in
/// `a`, which is exactly one iff `a` had none.  p0 accepts iff the old
/// initial state does not, which gives the same answer for the empty word.
inline unary_automaton complement_gadget(const unary_automaton& a) {
  require_valid(a, semantics::existential);
  const std::size_t p0 = a.state_count, sink = a.state_count + 1;
  unary_automaton g;
  g.state_count = a.state_count + 2;
  g.initial = p0;
  g.successors = a.successors;
  auto start = a.successors[a.initial];
  start.push_back(sink);
  g.successors.push_back(std::move(start));
  g.successors.push_back({sink});
  g.accepting = a.accepting;
  if (!a.is_accepting(a.initial)) g.accepting.push_back(p0);
  g.accepting.push_back(sink);
  return g;
}

/// Reproducible random automaton.  The generator is std::mt19937_64 seeded
/// with `seed`; draws are consumed in this order:
///   1. for each ordered pair (i, j), row-major: one draw x, edge i -> j
///      present iff (x >> 11) * 2^-53 < density;
///   2. for each state i: one draw x, accepting iff the top bit of x is set;
///   3. if no state accepts: one draw x, state x % states becomes accepting.
/// State 0 is initial.  Only raw engine output is used, so the result is
/// identical on every conforming platform.
inline unary_automaton random_automaton(std::size_t states, double density, std::uint64_t seed,
                                        bool ensure_trim) {
  if (states == 0) throw error(errc::index_out_of_range, "random automaton needs at least one state");
  if (!(density >= 0.0 && density <= 1.0))
    throw error(errc::unsorted_or_out_of_range, "density must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  auto unit = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  unary_automaton a;
  a.state_count = states;
  a.initial = 0;
  a.successors.resize(states);
  for (std::size_t i = 0; i < states; ++i)
    for (std::size_t j = 0; j < states; ++j)
      if (unit() < density) a.successors[i].push_back(j);
  for (std::size_t i = 0; i < states; ++i)
    if (rng() >> 63) a.accepting.push_back(i);
  if (a.accepting.empty()) a.accepting.push_back(static_cast<std::size_t>(rng() % states));
  return ensure_trim ? trim(a) : a;
}

}  // namespace uxnfa

#pragma once

// Ultimately periodic sets of naturals: the canonical form of a unary
// regular language, and the oracle every equivalence check is run against.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <boost/container_hash/hash.hpp>

#include "uxnfa/automaton.hpp"
#include "uxnfa/error.hpp"
#include "uxnfa/natural.hpp"

namespace uxnfa {

/// member(m) = pre[m] for m < threshold, cycle[(m - threshold) % period]
/// otherwise.  Values produced by this header are always normalized: the
/// period is minimal and the threshold is minimal for that period, so two
/// sets are equal iff their representations are.
struct periodic_set {
  std::size_t threshold = 0;
  std::size_t period = 1;
  std::vector<bool> pre;
  std::vector<bool> cycle{false};

  bool contains(std::uint64_t m) const {
    return m < threshold ? pre[m] : cycle[(m - threshold) % period];
  }

  bool operator==(const periodic_set&) const = default;
};

namespace detail {

inline std::vector<std::size_t> prime_factors(std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t f = 2; f * f <= n; ++f) {
    if (n % f) continue;
    out.push_back(f);
    while (n % f == 0) n /= f;
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace detail

inline periodic_set normalize(periodic_set s) {
  // Shrink the period by prime factors while the cycle folds onto itself.
  for (std::size_t q : detail::prime_factors(s.period)) {
    while (s.period % q == 0) {
      const std::size_t shorter = s.period / q;
      bool folds = true;
      for (std::size_t i = shorter; i < s.period && folds; ++i) folds = s.cycle[i] == s.cycle[i % shorter];
      if (!folds) break;
      s.period = shorter;
      s.cycle.resize(shorter);
    }
  }
  // Pull the threshold back while the last prefix bit agrees with the cycle.
  while (s.threshold > 0 && s.pre.back() == s.cycle.back()) {
    std::rotate(s.cycle.rbegin(), s.cycle.rbegin() + 1, s.cycle.rend());
    s.pre.pop_back();
    --s.threshold;
  }
  return s;
}

inline periodic_set make_periodic(std::vector<bool> pre, std::vector<bool> cycle) {
  if (cycle.empty()) throw error(errc::unsorted_or_out_of_range, "periodic set needs a period >= 1");
  periodic_set s;
  s.threshold = pre.size();
  s.period = cycle.size();
  s.pre = std::move(pre);
  s.cycle = std::move(cycle);
  return normalize(std::move(s));
}

inline periodic_set all_lengths() { return make_periodic({}, {true}); }
inline periodic_set no_lengths() { return make_periodic({}, {false}); }

inline bool member(const periodic_set& s, const natural& m) {
  if (m < s.threshold) return s.pre[static_cast<std::size_t>(m)];
  const natural offset = (m - s.threshold) % s.period;
  return s.cycle[static_cast<std::size_t>(offset)];
}

inline constexpr std::size_t default_vector_cap = 2'000'000;

struct periodic_extraction {
  periodic_set set;
  std::size_t preperiod = 0;     // first index of the repeated count vector
  std::size_t vector_period = 0;
};

/// Iterates the saturated count vector from length 0 until a vector repeats.
/// The sequence of vectors determines acceptance at every length, so the
/// result is exact.  Vectors are stored sparsely as (state << 2 | count).
inline periodic_extraction extract_with_stats(const unary_automaton& a, semantics mode,
                                              std::size_t cap = default_vector_cap) {
  using key = std::vector<std::uint32_t>;
  struct key_hash {
    std::size_t operator()(const key& k) const noexcept { return boost::hash_range(k.begin(), k.end()); }
  };
  const std::size_t n = a.state_count;
  std::vector<bool> accepting(n, false);
  for (std::size_t f : a.accepting) accepting[f] = true;

  std::unordered_map<key, std::size_t, key_hash> seen;
  std::vector<bool> bits;
  std::vector<sat_count> scratch(n, sat_count::zero);
  std::vector<std::uint32_t> touched;
  key current{static_cast<std::uint32_t>(a.initial << 2) | 1u};

  for (std::size_t k = 0;; ++k) {
    auto [it, inserted] = seen.try_emplace(current, k);
    if (!inserted) {
      periodic_extraction out;
      out.preperiod = it->second;
      out.vector_period = k - it->second;
      std::vector<bool> pre(bits.begin(), bits.begin() + static_cast<std::ptrdiff_t>(out.preperiod));
      std::vector<bool> cyc(bits.begin() + static_cast<std::ptrdiff_t>(out.preperiod), bits.end());
      out.set = make_periodic(std::move(pre), std::move(cyc));
      return out;
    }
    if (seen.size() > cap)
      throw error(errc::vector_space_exceeded,
                  "more than " + std::to_string(cap) + " distinct count vectors");

    sat_count total = sat_count::zero;
    for (std::uint32_t e : current)
      if (accepting[e >> 2]) total += static_cast<sat_count>(e & 3u);
    bits.push_back(verdict(mode, total));

    for (std::uint32_t e : current) {
      const auto c = static_cast<sat_count>(e & 3u);
      for (std::size_t r : a.successors[e >> 2]) {
        if (scratch[r] == sat_count::zero) touched.push_back(static_cast<std::uint32_t>(r));
        scratch[r] += c;
      }
    }
    std::sort(touched.begin(), touched.end());
    key next;
    next.reserve(touched.size());
    for (std::uint32_t r : touched) {
      next.push_back((r << 2) | static_cast<std::uint32_t>(scratch[r]));
      scratch[r] = sat_count::zero;
    }
    touched.clear();
    current = std::move(next);
  }
}

inline periodic_set extract_periodic(const unary_automaton& a, semantics mode,
                                     std::size_t cap = default_vector_cap) {
  return extract_with_stats(a, mode, cap).set;
}

// ---------------------------------------------------------------------------
// Boolean operations

enum class set_op { complement, unite, intersect, difference };

namespace detail {

inline std::vector<bool> aligned_bits(const periodic_set& s, std::size_t threshold, std::size_t period) {
  std::vector<bool> bits(threshold + period);
  for (std::size_t m = 0; m < bits.size(); ++m) bits[m] = s.contains(m);
  return bits;
}

inline periodic_set from_aligned(const std::vector<bool>& bits, std::size_t threshold) {
  const auto split = bits.begin() + static_cast<std::ptrdiff_t>(threshold);
  return make_periodic(std::vector<bool>(bits.begin(), split), std::vector<bool>(split, bits.end()));
}

}  // namespace detail

/// `complement` ignores y; the binary operations require it.
inline periodic_set combine(const periodic_set& x, const std::optional<periodic_set>& y, set_op op) {
  if (op == set_op::complement) {
    auto bits = detail::aligned_bits(x, x.threshold, x.period);
    bits.flip();
    return detail::from_aligned(bits, x.threshold);
  }
  if (!y) throw error(errc::unsorted_or_out_of_range, "binary set operation needs two operands");
  const std::size_t t = std::max(x.threshold, y->threshold);
  const std::size_t p = std::lcm(x.period, y->period);
  auto bx = detail::aligned_bits(x, t, p);
  const auto by = detail::aligned_bits(*y, t, p);
  for (std::size_t m = 0; m < bx.size(); ++m) {
    switch (op) {
      case set_op::unite: bx[m] = bx[m] || by[m]; break;
      case set_op::intersect: bx[m] = bx[m] && by[m]; break;
      case set_op::difference: bx[m] = bx[m] && !by[m]; break;
      case set_op::complement: break;
    }
  }
  return detail::from_aligned(bx, t);
}

inline periodic_set complement(const periodic_set& x) { return combine(x, std::nullopt, set_op::complement); }
inline periodic_set unite(const periodic_set& x, const periodic_set& y) { return combine(x, y, set_op::unite); }
inline periodic_set intersect(const periodic_set& x, const periodic_set& y) { return combine(x, y, set_op::intersect); }
inline periodic_set difference(const periodic_set& x, const periodic_set& y) { return combine(x, y, set_op::difference); }

enum class relation { equal, x_subset_y, y_subset_x, incomparable };

struct comparison {
  relation rel = relation::equal;
  bool disjoint = false;
};

inline comparison compare(const periodic_set& x, const periodic_set& y) {
  const std::size_t t = std::max(x.threshold, y.threshold);
  const std::size_t p = std::lcm(x.period, y.period);
  bool x_in_y = true, y_in_x = true, disjoint = true;
  for (std::size_t m = 0; m < t + p; ++m) {
    const bool a = x.contains(m), b = y.contains(m);
    x_in_y = x_in_y && (!a || b);
    y_in_x = y_in_x && (!b || a);
    disjoint = disjoint && !(a && b);
  }
  comparison out;
  out.disjoint = disjoint;
  out.rel = x_in_y && y_in_x ? relation::equal
          : x_in_y           ? relation::x_subset_y
          : y_in_x           ? relation::y_subset_x
                             : relation::incomparable;
  return out;
}

/// Smallest length whose membership equals `wanted`, if any.
inline std::optional<std::uint64_t> first_length(const periodic_set& s, bool wanted) {
  for (std::uint64_t m = 0; m < s.threshold + s.period; ++m)
    if (s.contains(m) == wanted) return m;
  return std::nullopt;
}

/// The minimal DFA: a chain of `threshold` states feeding a cycle of `period`.
inline unary_automaton canonical_dfa(const periodic_set& s) {
  unary_automaton a;
  const std::size_t n = s.threshold + s.period;
  a.state_count = n;
  a.initial = 0;
  a.successors.resize(n);
  for (std::size_t q = 0; q + 1 < n; ++q) a.successors[q] = {q + 1};
  a.successors[n - 1] = {s.threshold};
  for (std::size_t q = 0; q < n; ++q)
    if (s.contains(q)) a.accepting.push_back(q);
  return a;
}

inline std::string render(const periodic_set& s) {
  std::string out = "t=" + std::to_string(s.threshold) + " p=" + std::to_string(s.period) + " pre=";
  for (bool b : s.pre) out += b ? '1' : '0';
  out += " cyc=";
  for (bool b : s.cycle) out += b ? '1' : '0';
  return out;
}

}  // namespace uxnfa

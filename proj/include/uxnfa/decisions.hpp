#pragma once

// Decision procedures for unary automata.  Membership at huge lengths uses
// ternary exponentiation of the adjacency matrix over the saturating
// semiring; emptiness, universality, inclusion and equivalence are read off
// the exact ultimately periodic form of each language.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "uxnfa/automaton.hpp"
#include "uxnfa/natural.hpp"
#include "uxnfa/periodic.hpp"
#include "uxnfa/saturating.hpp"

namespace uxnfa {

/// Base-3 digits, most significant first.  Zero is the single digit 0.
class ternary_digits {
 public:
  explicit ternary_digits(const natural& value) {
    if (value == 0) {
      digits_.push_back(0);
      return;
    }
    natural rest = value;
    while (rest > 0) {
      digits_.push_back(static_cast<std::uint8_t>(rest % 3));
      rest /= 3;
    }
    std::reverse(digits_.begin(), digits_.end());
  }

  const std::vector<std::uint8_t>& digits() const noexcept { return digits_; }
  std::size_t size() const noexcept { return digits_.size(); }

  natural value() const {
    natural v = 0;
    for (std::uint8_t d : digits_) v = v * 3 + d;
    return v;
  }

 private:
  std::vector<std::uint8_t> digits_;
};

struct decision_report {
  bool verdict = false;
  std::optional<natural> witness_length;
  std::size_t work = 0;  // matrix multiplications or count-vector steps
};

inline count_matrix adjacency_matrix(const unary_automaton& a) {
  count_matrix m(a.state_count);
  for (std::size_t q = 0; q < a.state_count; ++q)
    for (std::size_t r : a.successors[q]) m(q, r) = sat_count::one;
  return m;
}

/// Membership of the length `m` via A^m, processing ternary digits from the
/// most significant end: acc <- acc^3 * A^digit.  The identity is never
/// multiplied, so the first digit costs at most one product and every later
/// digit costs two (cube) plus the digit value.
inline decision_report member_at(const unary_automaton& a, semantics mode, const ternary_digits& m) {
  const count_matrix base = adjacency_matrix(a);
  std::optional<count_matrix> acc;
  decision_report report;
  for (std::uint8_t digit : m.digits()) {
    if (acc) {
      count_matrix square = *acc * *acc;
      acc = square * *acc;
      report.work += 2;
    }
    for (std::uint8_t i = 0; i < digit; ++i) {
      if (acc) {
        acc = *acc * base;
        ++report.work;
      } else {
        acc = base;
      }
    }
  }
  sat_count total = sat_count::zero;
  if (acc) {
    for (std::size_t f : a.accepting) total += (*acc)(a.initial, f);
  } else {
    total = a.is_accepting(a.initial) ? sat_count::one : sat_count::zero;
  }
  report.verdict = verdict(mode, total);
  return report;
}

inline decision_report member_at(const unary_automaton& a, semantics mode, const natural& m) {
  return member_at(a, mode, ternary_digits(m));
}

namespace detail {

inline decision_report report_from(bool verdict, std::optional<std::uint64_t> witness, std::size_t work) {
  decision_report r;
  r.verdict = verdict;
  if (witness) r.witness_length = natural(*witness);
  r.work = work;
  return r;
}

}  // namespace detail

/// Verdict true iff no length is accepted; the witness is the shortest
/// accepted length otherwise.
inline decision_report is_empty(const unary_automaton& a, semantics mode, std::size_t cap = default_vector_cap) {
  const auto ex = extract_with_stats(a, mode, cap);
  const auto w = first_length(ex.set, true);
  return detail::report_from(!w, w, ex.preperiod + ex.vector_period);
}

/// Verdict true iff every length is accepted; the witness is the shortest
/// rejected length otherwise.
inline decision_report is_universal(const unary_automaton& a, semantics mode,
                                    std::size_t cap = default_vector_cap) {
  const auto ex = extract_with_stats(a, mode, cap);
  const auto w = first_length(ex.set, false);
  return detail::report_from(!w, w, ex.preperiod + ex.vector_period);
}

/// Verdict true iff L(a) is a subset of L(b); the witness is the shortest
/// length in L(a) \ L(b) otherwise.
inline decision_report includes(const unary_automaton& a, semantics mode_a, const unary_automaton& b,
                                semantics mode_b, std::size_t cap = default_vector_cap) {
  const auto ea = extract_with_stats(a, mode_a, cap);
  const auto eb = extract_with_stats(b, mode_b, cap);
  const auto w = first_length(difference(ea.set, eb.set), true);
  return detail::report_from(!w, w, ea.preperiod + ea.vector_period + eb.preperiod + eb.vector_period);
}

/// Verdict true iff L(a) = L(b); the witness is the shortest length on which
/// they disagree otherwise.
inline decision_report equivalent(const unary_automaton& a, semantics mode_a, const unary_automaton& b,
                                  semantics mode_b, std::size_t cap = default_vector_cap) {
  const auto ea = extract_with_stats(a, mode_a, cap);
  const auto eb = extract_with_stats(b, mode_b, cap);
  const auto both = unite(difference(ea.set, eb.set), difference(eb.set, ea.set));
  const auto w = first_length(both, true);
  return detail::report_from(ea.set == eb.set, w, ea.preperiod + ea.vector_period + eb.preperiod + eb.vector_period);
}

}  // namespace uxnfa

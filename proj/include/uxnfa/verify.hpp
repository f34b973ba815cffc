#pragma once

// Seeded corpus harness: runs every cross-check between the constructions
// and the two independent evaluators (step-by-step simulation and the
// periodic oracle) over randomly generated automata.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "uxnfa/automaton.hpp"
#include "uxnfa/automaton_file.hpp"
#include "uxnfa/chrobak.hpp"
#include "uxnfa/decisions.hpp"
#include "uxnfa/numtheory.hpp"
#include "uxnfa/periodic.hpp"
#include "uxnfa/witnesses.hpp"

namespace uxnfa {

struct verify_options {
  std::uint64_t seed = 1;
  std::size_t count = 100;
  std::size_t max_states = 6;
};

struct check_tally {
  std::string name;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::string first_failure;

  bool ok() const { return failed == 0; }
};

struct verify_report {
  verify_options options;
  std::vector<check_tally> checks;

  bool ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const check_tally& c) { return c.ok(); });
  }

  std::string summary() const {
    std::ostringstream out;
    for (const auto& c : checks) {
      out << c.name << ": " << c.passed << '/' << (c.passed + c.failed) << (c.ok() ? " PASS" : " FAIL");
      if (!c.ok()) out << " (first failure: " << c.first_failure << ')';
      out << '\n';
    }
    out << "verify seed=" << options.seed << " count=" << options.count << " max-states=" << options.max_states
        << ": " << (ok() ? "PASS" : "FAIL") << '\n';
    return out.str();
  }
};

/// splitmix64; derives independent per-case seeds from the run seed.
constexpr std::uint64_t mix_seed(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// The i-th automaton of the corpus identified by `seed`: 1..max_states
/// states, edge density one of 0.15, 0.25, 0.35, 0.5, trimmed.  Draws whose
/// trimmed form has no edge are replaced by the next draw (up to 64 times),
/// so most of the corpus has cycles to work on.
inline unary_automaton corpus_automaton(std::uint64_t seed, std::size_t i, std::size_t max_states) {
  static constexpr double densities[] = {0.15, 0.25, 0.35, 0.5};
  unary_automaton a;
  for (std::uint64_t attempt = 0; attempt < 64; ++attempt) {
    const std::uint64_t h = mix_seed(seed ^ mix_seed(i) ^ mix_seed(attempt << 32));
    const std::size_t states = 1 + static_cast<std::size_t>(h % max_states);
    const double density = densities[(h >> 32) % 4];
    a = random_automaton(states, density, mix_seed(h), true);
    if (a.edge_count() > 0) break;
  }
  return a;
}

/// Horizon beyond which neither language can change behaviour.
inline std::uint64_t decision_horizon(const periodic_set& x, const periodic_set& y) {
  return std::max(x.threshold, y.threshold) + 2 * std::lcm(x.period, y.period);
}

/// Checks all four decision procedures on (a, b) against exhaustive scans
/// and replays every witness through member_at.  Returns an empty string on
/// success, otherwise a description of the first mismatch.
inline std::string check_decisions(const unary_automaton& a, semantics mode_a, const unary_automaton& b,
                                   semantics mode_b) {
  const auto pa = extract_periodic(a, mode_a);
  const auto pb = extract_periodic(b, mode_b);
  const std::uint64_t horizon = decision_horizon(pa, pb);
  const auto bits_a = acceptance_prefix(a, mode_a, horizon);
  const auto bits_b = acceptance_prefix(b, mode_b, horizon);

  std::optional<std::uint64_t> first_a, first_not_a, first_a_not_b, first_diff;
  for (std::uint64_t m = 0; m <= horizon; ++m) {
    if (bits_a[m] && !first_a) first_a = m;
    if (!bits_a[m] && !first_not_a) first_not_a = m;
    if (bits_a[m] && !bits_b[m] && !first_a_not_b) first_a_not_b = m;
    if (bits_a[m] != bits_b[m] && !first_diff) first_diff = m;
  }
  auto same_witness = [](const decision_report& r, const std::optional<std::uint64_t>& expected) {
    if (r.verdict != !expected) return false;
    if (!expected) return !r.witness_length;
    return r.witness_length && *r.witness_length == *expected;
  };
  auto replay = [](const unary_automaton& x, semantics mode, const decision_report& r) {
    return member_at(x, mode, *r.witness_length).verdict;
  };

  const auto empty = is_empty(a, mode_a);
  if (!same_witness(empty, first_a)) return "is_empty disagrees with scan";
  if (!empty.verdict && !replay(a, mode_a, empty)) return "is_empty witness not accepted";

  const auto universal = is_universal(a, mode_a);
  if (!same_witness(universal, first_not_a)) return "is_universal disagrees with scan";
  if (!universal.verdict && replay(a, mode_a, universal)) return "is_universal witness accepted";

  const auto inc = includes(a, mode_a, b, mode_b);
  if (!same_witness(inc, first_a_not_b)) return "includes disagrees with scan";
  if (!inc.verdict && !(replay(a, mode_a, inc) && !replay(b, mode_b, inc)))
    return "includes witness does not separate";

  const auto eq = equivalent(a, mode_a, b, mode_b);
  if (!same_witness(eq, first_diff)) return "equivalent disagrees with scan";
  if (!eq.verdict && replay(a, mode_a, eq) == replay(b, mode_b, eq)) return "equivalent witness does not separate";
  if (eq.verdict && !(inc.verdict && includes(b, mode_b, a, mode_a).verdict))
    return "equivalence without mutual inclusion";
  return {};
}

inline verify_report run_verification(const verify_options& options) {
  verify_report report;
  report.options = options;
  enum check : std::size_t {
    oracle, file_round_trip, chrobak_equivalence, chrobak_size, determinization, matrix_membership,
    complement, decisions, check_count
  };
  for (const char* name : {"oracle-vs-simulation", "file-round-trip", "chrobak-equivalence", "chrobak-size-bounds",
                           "determinization", "matrix-membership", "complement-gadget", "decision-procedures"})
    report.checks.push_back(check_tally{name, 0, 0, {}});
  std::vector<bool> recorded(check_count);
  auto record = [&](check c, std::size_t i, bool pass, const std::string& what = {}) {
    recorded[c] = true;
    auto& t = report.checks[c];
    if (pass) {
      ++t.passed;
    } else if (t.failed++ == 0) {
      t.first_failure = "case " + std::to_string(i) + (what.empty() ? "" : ": " + what);
    }
  };

  for (std::size_t i = 0; i < options.count; ++i) {
    const unary_automaton a = corpus_automaton(options.seed, i, options.max_states);
    const unary_automaton b = corpus_automaton(options.seed, i + options.count, options.max_states);
    const semantics mode_a = i % 2 ? semantics::existential : semantics::exclusive;
    const semantics mode_b = i % 3 ? semantics::exclusive : semantics::existential;
    recorded.assign(check_count, false);
    try {
      bool agree = true;
      for (semantics mode : {semantics::exclusive, semantics::existential}) {
        const auto set = extract_periodic(a, mode);
        const auto bits = acceptance_prefix(a, mode, 300);
        for (std::uint64_t m = 0; m <= 300; ++m) agree = agree && set.contains(m) == bits[m];
      }
      record(oracle, i, agree);

      const std::string text = serialize(a, mode_a);
      const auto back = parse(text);
      record(file_round_trip, i, back.automaton == a && back.mode == mode_a && serialize(back.automaton, back.mode) == text);

      const auto xnfa_language = extract_periodic(a, semantics::exclusive);
      const auto c = to_chrobak(a);
      record(chrobak_equivalence, i, extract_periodic(chrobak_as_automaton(c), semantics::exclusive) == xnfa_language);
      const std::uint64_t m = c.m;
      record(chrobak_size, i, c.total_cycle_length() <= 2 * m && c.state_count() <= m * m * m + 2 + 2 * m);

      const auto dfa = chrobak_to_dfa(c);
      const bool det_ok = !validate(dfa, semantics::deterministic) &&
                          extract_periodic(dfa, semantics::deterministic) == xnfa_language &&
                          natural(dfa.state_count) <= natural(m * m * m + 2) + landau_f(c.m);
      record(determinization, i, det_ok);

      bool members = true;
      for (semantics mode : {semantics::exclusive, semantics::existential}) {
        const auto bits = acceptance_prefix(a, mode, 200);
        for (std::uint64_t len = 0; len <= 200; ++len) {
          const ternary_digits digits{natural(len)};
          const auto r = member_at(a, mode, digits);
          members = members && r.verdict == bits[len] && r.work <= 4 * digits.size();
        }
      }
      record(matrix_membership, i, members);

      const auto gadget = complement_gadget(a);
      record(complement, i,
             gadget.state_count == a.state_count + 2 &&
                 extract_periodic(gadget, semantics::exclusive) ==
                     uxnfa::complement(extract_periodic(a, semantics::existential)));

      const std::string mismatch = check_decisions(a, mode_a, b, mode_b);
      record(decisions, i, mismatch.empty(), mismatch);
    } catch (const std::exception& e) {
      for (std::size_t k = 0; k < check_count; ++k)
        if (!recorded[k]) record(static_cast<check>(k), i, false, e.what());
    }
  }
  return report;
}

}  // namespace uxnfa

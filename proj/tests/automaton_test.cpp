#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "oracles.hpp"
#include "uxnfa/automaton.hpp"
#include "uxnfa/error.hpp"
#include "uxnfa/witnesses.hpp"

namespace uxnfa {
namespace {

unary_automaton raw(std::size_t n, std::size_t initial, std::vector<std::size_t> accepting,
                    std::vector<std::vector<std::size_t>> successors) {
  unary_automaton a;
  a.state_count = n;
  a.initial = initial;
  a.accepting = std::move(accepting);
  a.successors = std::move(successors);
  return a;
}

unary_automaton random_trimmed(std::uint64_t seed, std::size_t max_states) {
  static constexpr double densities[] = {0.15, 0.25, 0.35, 0.5};
  return random_automaton(1 + seed % max_states, densities[(seed / 7) % 4], seed, true);
}

TEST(Validate, AcceptsDeterministicSelfLoop) {
  const auto a = raw(1, 0, {0}, {{0}});
  EXPECT_FALSE(validate(a, semantics::deterministic));
}

TEST(Validate, RejectsMissingEdgeInDeterministicMode) {
  const auto a = raw(1, 0, {0}, {{}});
  const auto v = validate(a, semantics::deterministic);
  ASSERT_TRUE(v);
  EXPECT_EQ(v->code, errc::nondeterministic_under_dfa_mode);
  EXPECT_FALSE(validate(a, semantics::exclusive));
}

TEST(Validate, RejectsOutOfRangeTarget) {
  const auto a = raw(3, 0, {}, {{5}, {}, {}});
  const auto v = validate(a, semantics::existential);
  ASSERT_TRUE(v);
  EXPECT_EQ(v->code, errc::index_out_of_range);
}

TEST(Validate, RejectsOutOfRangeInitialAndAccepting) {
  EXPECT_EQ(validate(raw(2, 2, {}, {{}, {}}), semantics::exclusive)->code, errc::index_out_of_range);
  EXPECT_EQ(validate(raw(2, 0, {4}, {{}, {}}), semantics::exclusive)->code, errc::index_out_of_range);
}

TEST(Validate, RejectsRepeatedEdge) {
  const auto a = raw(2, 0, {1}, {{1, 1}, {}});
  EXPECT_EQ(validate(a, semantics::exclusive)->code, errc::duplicate_edge);
}

TEST(Validate, RequireValidThrowsTypedError) {
  try {
    require_valid(raw(1, 0, {}, {{}}), semantics::deterministic);
    FAIL() << "expected an error";
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::nondeterministic_under_dfa_mode);
  }
}

TEST(MakeAutomaton, SortsAndDeduplicates) {
  const auto a = make_automaton(3, 0, {2, 1, 2}, {{0, 2}, {0, 1}, {0, 2}, {1, 1}});
  EXPECT_EQ(a.accepting, (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(a.successors[0], (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(a.edge_count(), 3u);
}

TEST(Trim, DropsUnproductiveSuffix) {
  const auto a = make_automaton(3, 0, {1}, {{0, 1}, {1, 2}});
  const auto t = trim(a);
  EXPECT_EQ(t.state_count, 2u);
  EXPECT_EQ(t.accepting, (std::vector<std::size_t>{1}));
  EXPECT_EQ(t.successors[0], (std::vector<std::size_t>{1}));
  EXPECT_TRUE(t.successors[1].empty());
}

TEST(Trim, KeepsAcceptingCycleIntact) {
  const auto a = make_automaton(3, 0, {0, 1, 2}, {{0, 1}, {1, 2}, {2, 0}});
  EXPECT_EQ(trim(a), a);
}

TEST(Trim, UnproductiveInitialGivesDeadAutomaton) {
  const auto t = trim(make_automaton(3, 0, {2}, {{0, 1}, {1, 0}}));
  EXPECT_EQ(t.state_count, 1u);
  EXPECT_TRUE(t.accepting.empty());
  EXPECT_EQ(t.edge_count(), 0u);
}

TEST(Trim, IsIdempotentAndPreservesCounts) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto a = random_automaton(1 + seed % 7, 0.3, seed, false);
    const auto t = trim(a);
    EXPECT_EQ(trim(t), t) << "seed " << seed;
    const auto before = oracle::exact_accepting_counts(a, 60);
    const auto after = oracle::exact_accepting_counts(t, 60);
    EXPECT_EQ(before, after) << "seed " << seed;
  }
}

TEST(PathCounts, ChainAndBranch) {
  // 0 -> 1, 0 -> 2, 1 -> 3, 2 -> 3
  const auto a = make_automaton(4, 0, {3}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  EXPECT_EQ(path_count_vector(a, 0), (count_vector{sat_count::one, sat_count::zero, sat_count::zero, sat_count::zero}));
  EXPECT_EQ(path_count_vector(a, 1), (count_vector{sat_count::zero, sat_count::one, sat_count::one, sat_count::zero}));
  EXPECT_EQ(path_count_vector(a, 2), (count_vector{sat_count::zero, sat_count::zero, sat_count::zero, sat_count::many}));
  EXPECT_EQ(path_count_vector(a, 3), count_vector(4, sat_count::zero));
  EXPECT_FALSE(accepts(a, semantics::exclusive, 2));
  EXPECT_TRUE(accepts(a, semantics::existential, 2));
}

TEST(PathCounts, SaturatedMatchesExactCounts) {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const auto a = random_automaton(1 + seed % 8, 0.35, seed * 31 + 1, false);
    const auto exact = oracle::exact_count_vectors(a, 300);
    count_vector v = initial_vector(a);
    for (std::size_t len = 0; len <= 300; ++len) {
      for (std::size_t q = 0; q < a.state_count; ++q) {
        const sat_count expected = exact[len][q] >= 2 ? sat_count::many : saturate(exact[len][q].convert_to<unsigned>());
        ASSERT_EQ(v[q], expected) << "seed " << seed << " len " << len << " state " << q;
      }
      v = step(a, v);
    }
    for (std::uint64_t len : {0u, 1u, 17u, 123u})
      for (std::size_t q = 0; q < a.state_count; ++q)
        EXPECT_EQ(path_count_vector(a, len)[q], exact[len][q] >= 2 ? sat_count::many
                                                                    : saturate(exact[len][q].convert_to<unsigned>()));
  }
}

TEST(Accepts, AgreesWithExactVerdicts) {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const auto a = random_automaton(1 + seed % 7, 0.3, seed + 1000, false);
    const auto exact = oracle::exact_accepting_counts(a, 200);
    for (semantics mode : {semantics::exclusive, semantics::existential}) {
      const auto bits = acceptance_prefix(a, mode, 200);
      ASSERT_EQ(bits.size(), 201u);
      for (std::size_t len = 0; len <= 200; ++len)
        ASSERT_EQ(bits[len], oracle::exact_verdict(mode, exact[len])) << "seed " << seed << " len " << len;
    }
  }
}

TEST(Accepts, WitnessFamilyByDivisibility) {
  const auto a = witness_xnfa({2, 3});
  for (std::uint64_t len = 0; len < 40; ++len) {
    const bool expected = (len % 2 == 0) != (len % 3 == 0);
    EXPECT_EQ(accepts(a, semantics::exclusive, len), expected) << len;
  }
}

TEST(Scc, SingleFiveCycle) {
  const auto a = make_automaton(5, 0, {0}, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  const auto s = analyze_scc(a);
  ASSERT_EQ(s.components.size(), 1u);
  EXPECT_TRUE(s.components[0].nontrivial);
  EXPECT_EQ(s.components[0].period, 5u);
  EXPECT_TRUE(s.components[0].simple_cycle);
}

TEST(Scc, ChordedCyclesHavePeriodOne) {
  // cycles 0-1-0 (length 2) and 0-2-3-0 (length 3)
  const auto a = make_automaton(4, 0, {0}, {{0, 1}, {1, 0}, {0, 2}, {2, 3}, {3, 0}});
  const auto s = analyze_scc(a);
  ASSERT_EQ(s.components.size(), 1u);
  EXPECT_EQ(s.components[0].period, 1u);
  EXPECT_FALSE(s.components[0].simple_cycle);
}

TEST(Scc, DagHasOnlyTrivialComponents) {
  const auto a = make_automaton(4, 0, {3}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  const auto s = analyze_scc(a);
  EXPECT_EQ(s.components.size(), 4u);
  for (const auto& c : s.components) {
    EXPECT_FALSE(c.nontrivial);
    EXPECT_EQ(c.period, 0u);
  }
}

TEST(Scc, SelfLoopIsNontrivial) {
  const auto s = analyze_scc(make_automaton(1, 0, {0}, {{0, 0}}));
  ASSERT_EQ(s.components.size(), 1u);
  EXPECT_TRUE(s.components[0].nontrivial);
  EXPECT_EQ(s.components[0].period, 1u);
  EXPECT_TRUE(s.components[0].simple_cycle);
}

TEST(Scc, PeriodsMatchCycleEnumeration) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const auto a = random_automaton(1 + seed % 8, 0.25, seed * 7 + 3, false);
    const auto s = analyze_scc(a);
    std::vector<std::size_t> seen(a.state_count, 0);
    for (std::size_t id = 0; id < s.components.size(); ++id) {
      const auto& c = s.components[id];
      for (std::size_t q : c.nodes) {
        EXPECT_EQ(s.component_of[q], id);
        ++seen[q];
      }
      const auto cycles = oracle::simple_cycle_lengths(a, c.nodes);
      std::size_t g = 0;
      for (std::size_t len : cycles) g = std::gcd(g, len);
      EXPECT_EQ(c.nontrivial, !cycles.empty()) << "seed " << seed;
      EXPECT_EQ(c.period, g) << "seed " << seed;
      const bool one_cycle = cycles.size() == 1 && *cycles.begin() == c.nodes.size();
      EXPECT_EQ(c.simple_cycle, one_cycle) << "seed " << seed;
    }
    for (std::size_t q = 0; q < a.state_count; ++q) EXPECT_EQ(seen[q], 1u);
    // reverse topological order: edges never point to a later component
    for (std::size_t q = 0; q < a.state_count; ++q)
      for (std::size_t r : a.successors[q]) EXPECT_LE(s.component_of[r], s.component_of[q]);
  }
}

TEST(SingleFinal, ChainKeepsShape) {
  const auto a = make_automaton(3, 0, {2}, {{0, 1}, {1, 2}});
  const auto f = normalize_single_final(a);
  EXPECT_EQ(f.automaton.state_count, 3u);
  EXPECT_EQ(f.automaton.accepting, (std::vector<std::size_t>{f.final_state}));
  EXPECT_TRUE(f.automaton.successors[f.final_state].empty());
  const auto counts = oracle::exact_path_counts(f.automaton, {f.final_state}, 5);
  EXPECT_EQ(counts, (std::vector<natural>{0, 0, 1, 0, 0, 0}));
}

TEST(SingleFinal, TwoAcceptingSuccessorsGetACopy) {
  const auto a = make_automaton(4, 0, {2, 3}, {{0, 1}, {1, 2}, {1, 3}});
  const auto f = normalize_single_final(a);
  EXPECT_EQ(f.automaton.state_count, 4u);
  const auto counts = oracle::exact_path_counts(f.automaton, {f.final_state}, 4);
  EXPECT_EQ(counts[2], 2);
  EXPECT_EQ(counts[1], 0);
  EXPECT_EQ(counts[3], 0);
}

TEST(SingleFinal, EmptyLanguageThrows) {
  try {
    normalize_single_final(make_automaton(1, 0, {0}, {}));
    FAIL() << "expected an error";
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::empty_language_after_trim);
  }
}

TEST(SingleFinal, StructureAndCountsOnRandomAutomata) {
  std::size_t checked = 0;
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    const auto a = random_trimmed(seed * 13 + 5, 6);
    if (a.accepting.empty()) continue;
    const auto exact_in = oracle::exact_accepting_counts(a, 120);
    if (std::all_of(exact_in.begin() + 1, exact_in.end(), [](const natural& x) { return x == 0; })) continue;
    const auto f = normalize_single_final(a);
    const auto& b = f.automaton;
    ++checked;

    EXPECT_LE(b.state_count, 2 * a.state_count + 2);
    EXPECT_EQ(b.accepting, (std::vector<std::size_t>{f.final_state}));
    for (std::size_t q = 0; q < b.state_count; ++q) {
      EXPECT_EQ(b.successors[q].empty(), q == f.final_state) << "seed " << seed;
      for (std::size_t r : b.successors[q]) EXPECT_NE(r, b.initial) << "seed " << seed;
    }

    std::size_t max_fan = 0;
    for (std::size_t q = 0; q < a.state_count; ++q) {
      std::size_t fan = 0;
      for (std::size_t r : a.successors[q]) fan += a.is_accepting(r);
      max_fan = std::max(max_fan, fan);
    }
    std::size_t initial_fan = 0;
    for (std::size_t r : a.successors[a.initial]) initial_fan += a.is_accepting(r);

    const auto exact_out = oracle::exact_path_counts(b, {f.final_state}, 120);
    EXPECT_EQ(exact_out[0], 0);
    for (std::size_t len = 1; len <= 120; ++len) {
      if (len == 1 && initial_fan > 1) continue;
      if (max_fan <= 2) {
        EXPECT_EQ(exact_out[len], exact_in[len]) << "seed " << seed << " len " << len;
      } else {
        EXPECT_EQ(std::min<natural>(exact_out[len], 2), std::min<natural>(exact_in[len], 2))
            << "seed " << seed << " len " << len;
      }
    }
  }
  EXPECT_GT(checked, 100u);
}

}  // namespace
}  // namespace uxnfa

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "uxnfa/chrobak.hpp"
#include "uxnfa/error.hpp"
#include "uxnfa/periodic.hpp"
#include "uxnfa/witnesses.hpp"

namespace uxnfa {
namespace {

// 0 -> 1 <-> 2 and 0 -> 3 <-> 4, accepting 1 and 3: every odd length has
// exactly two accepting paths.
unary_automaton twin_two_cycles() {
  return make_automaton(5, 0, {1, 3}, {{0, 1}, {1, 2}, {2, 1}, {0, 3}, {3, 4}, {4, 3}});
}

chrobak_automaton bare(std::vector<chrobak_cycle> cycles) {
  chrobak_automaton c;
  c.tail_accepting = {false};
  c.cycles = std::move(cycles);
  c.m = 0;
  return c;
}

std::vector<std::size_t> cycle_accepting(const unary_automaton& dfa, std::size_t tail) {
  std::vector<std::size_t> out;
  for (std::size_t f : dfa.accepting)
    if (f >= tail) out.push_back(f - tail);
  return out;
}

TEST(Chrobak, TwinCyclesMarkBothAcceptAndReject) {
  const auto c = to_chrobak(twin_two_cycles());
  ASSERT_EQ(c.cycles.size(), 2u);
  EXPECT_EQ(c.cycles[0].length, 2u);
  EXPECT_EQ(c.cycles[1].length, 2u);
  EXPECT_FALSE(c.cycles[0].accepting.empty());
  EXPECT_EQ(c.cycles[0].accepting, c.cycles[1].accepting);
  EXPECT_EQ(extract_periodic(chrobak_as_automaton(c), semantics::exclusive), no_lengths());
}

TEST(Chrobak, WitnessFamilyKeepsItsLanguage) {
  for (const std::vector<std::size_t>& primes : {std::vector<std::size_t>{2}, {2, 3}, {2, 5}, {3, 5}}) {
    const auto a = witness_xnfa(primes);
    const auto c = to_chrobak(a);
    EXPECT_EQ(c.tail_length(), c.m * c.m * c.m + 2);
    EXPECT_EQ(extract_periodic(chrobak_as_automaton(c), semantics::exclusive),
              extract_periodic(a, semantics::exclusive));
    for (std::size_t i = 0; i + 1 < c.cycles.size(); i += 2) {
      EXPECT_EQ(c.cycles[i].length, c.cycles[i + 1].length);
      if (i > 0) {
        EXPECT_LT(c.cycles[i - 1].length, c.cycles[i].length);
      }
    }
  }
}

TEST(Chrobak, EmptyLanguageHasNoCycles) {
  const auto c = to_chrobak(make_automaton(3, 0, {2}, {{0, 1}}));
  EXPECT_TRUE(c.cycles.empty());
  for (bool b : c.tail_accepting) EXPECT_FALSE(b);
  const auto dfa = chrobak_to_dfa(c);
  EXPECT_FALSE(validate(dfa, semantics::deterministic));
  EXPECT_EQ(extract_periodic(dfa, semantics::deterministic), no_lengths());
}

TEST(Chrobak, EmbeddingLayout) {
  const auto c = bare({{2, {1}}, {3, {0, 2}}});
  const auto a = chrobak_as_automaton(c);
  EXPECT_EQ(a.state_count, 6u);
  EXPECT_EQ(a.successors[0], (std::vector<std::size_t>{1, 3}));
  EXPECT_EQ(a.successors[1], (std::vector<std::size_t>{2}));
  EXPECT_EQ(a.successors[2], (std::vector<std::size_t>{1}));
  EXPECT_EQ(a.successors[5], (std::vector<std::size_t>{3}));
  EXPECT_EQ(a.accepting, (std::vector<std::size_t>{2, 3, 5}));
  EXPECT_FALSE(validate(a, semantics::exclusive));
}

TEST(ChrobakDfa, CounterExamples) {
  EXPECT_TRUE(cycle_accepting(chrobak_to_dfa(bare({{2, {0}}, {2, {0}}})), 1).empty());
  EXPECT_EQ(cycle_accepting(chrobak_to_dfa(bare({{3, {1}}})), 1), (std::vector<std::size_t>{1}));
  const auto dfa = chrobak_to_dfa(bare({{2, {0}}, {3, {0}}}));
  EXPECT_EQ(dfa.state_count, 7u);
  EXPECT_EQ(cycle_accepting(dfa, 1), (std::vector<std::size_t>{2, 3, 4}));
}

TEST(ChrobakDfa, NoCyclesGivesCycleOfOne) {
  const auto dfa = chrobak_to_dfa(bare({}));
  EXPECT_EQ(dfa.state_count, 2u);
  EXPECT_FALSE(validate(dfa, semantics::deterministic));
}

TEST(ChrobakDfa, LcmBudget) {
  const auto c = to_chrobak(witness_xnfa({2, 3, 5}));
  try {
    chrobak_to_dfa(c, 20);
    FAIL() << "expected an error";
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::lcm_overflow);
  }
  EXPECT_NO_THROW(chrobak_to_dfa(c, 30));
}

TEST(Chrobak, SuperpathBudget) {
  try {
    to_chrobak(twin_two_cycles(), {1});
    FAIL() << "expected an error";
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::superpath_budget_exceeded);
  }
}

TEST(Superpaths, SummariesReproduceLongCounts) {
  std::size_t checked = 0;
  for (std::uint64_t seed = 0; seed < 250; ++seed) {
    const auto a = random_automaton(1 + seed % 5, 0.35, seed * 11 + 9, true);
    single_final_form form;
    try {
      form = normalize_single_final(a);
    } catch (const error&) {
      continue;
    }
    ++checked;
    const auto summaries = summarize_superpaths(form);
    const std::size_t m = form.automaton.state_count;
    const std::size_t start = m * m * m + 2;
    const auto exact = oracle::exact_path_counts(form.automaton, {form.final_state}, start + 120);
    for (const auto& s : summaries) {
      ASSERT_EQ(s.multiplicity.size(), s.d);
      std::vector<std::size_t> realized;
      for (std::size_t r = 0; r < s.d; ++r)
        if (s.multiplicity[r] != sat_count::zero) realized.push_back(r);
      EXPECT_EQ(realized, s.residues) << "seed " << seed;
    }
    for (std::size_t len = start; len <= start + 120; ++len) {
      sat_count total = sat_count::zero;
      for (const auto& s : summaries) total += s.multiplicity[len % s.d];
      const sat_count expected = exact[len] >= 2 ? sat_count::many : saturate(exact[len].convert_to<unsigned>());
      ASSERT_EQ(total, expected) << "seed " << seed << " len " << len;
    }
  }
  EXPECT_GT(checked, 100u);
}

TEST(Superpaths, SingleCycleResiduesFromSimplePaths) {
  // 0 -> 1 -> 2 -> 3 -> 1 (3-cycle), exits 1 -> 4 and 3 -> 4, plus a
  // shortcut 0 -> 2.  Every walk is a simple entry path, some turns of the
  // cycle, and a simple exit path.
  const auto a = make_automaton(5, 0, {4}, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 1}, {1, 4}, {3, 4}});
  const auto form = normalize_single_final(a);
  const auto summaries = summarize_superpaths(form);
  ASSERT_EQ(summaries.size(), 1u);
  const auto& s = summaries[0];
  EXPECT_EQ(s.kind, superpath_case::one_simple_cycle);
  EXPECT_EQ(s.d, 3u);

  const auto& b = form.automaton;
  const auto scc = analyze_scc(b);
  const auto& cycle = scc.components[s.scc_sequence[0]].nodes;
  std::vector<std::size_t> position(b.state_count, 0);
  // positions along the cycle, starting from its smallest node
  std::size_t q = cycle.front();
  for (std::size_t k = 0; k < cycle.size(); ++k) {
    position[q] = k;
    for (std::size_t r : b.successors[q])
      if (scc.component_of[r] == s.scc_sequence[0]) q = r;
  }
  std::set<std::size_t> expected;
  for (std::size_t in : cycle)
    for (std::size_t out : cycle)
      for (const auto& pre : oracle::simple_paths(b, b.initial, in)) {
        bool outside = true;
        for (std::size_t k = 0; k + 1 < pre.size(); ++k) outside = outside && scc.component_of[pre[k]] != s.scc_sequence[0];
        if (!outside) continue;
        for (const auto& post : oracle::simple_paths(b, out, form.final_state)) {
          bool after = true;
          for (std::size_t k = 1; k < post.size(); ++k) after = after && scc.component_of[post[k]] != s.scc_sequence[0];
          if (!after) continue;
          const std::size_t inside = (position[out] + 3 - position[in]) % 3;
          expected.insert((pre.size() - 1 + inside + post.size() - 1) % 3);
        }
      }
  EXPECT_EQ(std::vector<std::size_t>(expected.begin(), expected.end()), s.residues);
}

TEST(Chrobak, PreservesLanguageAndBounds) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto a = random_automaton(1 + seed % 5, 0.3, seed * 3 + 77, seed % 2 == 0);
    const auto c = to_chrobak(a);
    const auto language = extract_periodic(a, semantics::exclusive);
    EXPECT_EQ(extract_periodic(chrobak_as_automaton(c), semantics::exclusive), language) << "seed " << seed;
    EXPECT_EQ(c.tail_length(), c.m * c.m * c.m + 2);
    const auto dfa = chrobak_to_dfa(c);
    EXPECT_FALSE(validate(dfa, semantics::deterministic));
    EXPECT_EQ(extract_periodic(dfa, semantics::deterministic), language) << "seed " << seed;
  }
}

}  // namespace
}  // namespace uxnfa

#include "indet/reveng.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "indet/bench.hpp"
#include "indet/oracle.hpp"
#include "test_util.hpp"

namespace indet {
namespace {

using testing::S;
using testing::Y;

void expect_sound(const FeasibleArray& y, const IndeterminateString& x) {
  ASSERT_EQ(compute_prefix_table(x), y) << format_array(y) << " -> " << format_string(x);
  const auto g = build_prefix_graph(y);
  for (const auto& e : g.positive_edges()) {
    ASSERT_TRUE(letters_match(x.at(e.u), x.at(e.v)));
  }
  for (const auto& e : g.negative_edges()) {
    ASSERT_FALSE(letters_match(x.at(e.u), x.at(e.v)));
  }
}

TEST(Infer, Examples) {
  EXPECT_EQ(infer(Y("5 0 2 1 0")), S("a b a {a,b} c"));
  EXPECT_EQ(infer(Y("8 0 1 0 3 0 1 0")), S("a b a c a b a d"));
  EXPECT_EQ(infer(Y("3 0 0")), S("a b b"));
  EXPECT_EQ(infer(Y("4 3 2 1")), S("a a a a"));
  EXPECT_EQ(infer(Y({1})), S("a"));
  EXPECT_EQ(infer(Y({})), S(""));
}

TEST(Infer, TraceOf50210) {
  const auto g = build_prefix_graph(Y("5 0 2 1 0"));
  InferenceTrace events;
  const auto x = infer(g, &events);
  EXPECT_EQ(format_trace(events, x),
            "# reveng trace v1\n"
            "edge 1 3\n"
            "  fresh a -> 1 3\n"
            "  forbid a at 2 5 (from 1)\n"
            "  forbid a at 5 (from 3)\n"
            "edge 1 4\n"
            "  accept a -> 4\n"
            "edge 2 4\n"
            "  reject a -> 2 (forbidden)\n"
            "  fresh b -> 2 4\n"
            "  forbid b at 1 5 (from 2)\n"
            "least 5 -> c\n"
            "result a b a {a,b} c\n");
}

TEST(Infer, TraceShowsSkippedEdges) {
  // 4 3 2 1: after (1,2),(1,3),(1,4) every later edge already matches.
  const auto g = build_prefix_graph(Y("4 3 2 1"));
  InferenceTrace events;
  infer(g, &events);
  const auto skipped = std::count_if(events.begin(), events.end(), [](const auto& e) {
    return std::holds_alternative<trace::EdgeSkipped>(e);
  });
  EXPECT_EQ(skipped, 3);
}

TEST(Least, Examples) {
  const auto g = build_prefix_graph(Y("5 0 2 1 0"));
  InferenceState state(g);
  state.x[0] = {Symbol(1)};
  state.x[1] = {Symbol(2)};
  state.x[2] = {Symbol(1)};
  state.lambda_max = 2;
  EXPECT_EQ(least(5, state), Symbol(3));
  EXPECT_EQ(least(4, state), Symbol(1));  // no negative neighbours

  const auto g300 = build_prefix_graph(Y("3 0 0"));
  InferenceState empty(g300);
  EXPECT_EQ(least(1, empty), Symbol(1));
}

TEST(UpdateForbidden, Examples) {
  const auto g = build_prefix_graph(Y("5 0 2 1 0"));
  InferenceState state(g);
  const Symbol a(1), b(2);

  assign_symbol(1, a, state);
  EXPECT_TRUE(state.forbidden.is_forbidden(2, a));
  EXPECT_TRUE(state.forbidden.is_forbidden(5, a));
  EXPECT_FALSE(state.forbidden.is_forbidden(3, a));

  assign_symbol(2, b, state);
  EXPECT_TRUE(state.forbidden.is_forbidden(1, b));
  EXPECT_TRUE(state.forbidden.is_forbidden(5, b));

  update_forbidden(2, b, state);  // idempotent
  EXPECT_TRUE(state.forbidden.is_forbidden(1, b));

  const Symbol c(3);
  update_forbidden(4, c, state);
  for (Vertex v = 1; v <= 5; ++v) EXPECT_FALSE(state.forbidden.is_forbidden(v, c));
}

TEST(ForbiddenMatrix, GrowsPastOneWord) {
  ForbiddenMatrix f(2);
  f.forbid(2, Symbol(130));
  EXPECT_TRUE(f.is_forbidden(2, Symbol(130)));
  EXPECT_FALSE(f.is_forbidden(2, Symbol(129)));
  EXPECT_FALSE(f.is_forbidden(1, Symbol(130)));
}

TEST(Infer, SoundExhaustiveUpToSeven) {
  for (std::size_t n = 0; n <= 7; ++n) {
    for (const auto& y : oracle::enumerate_feasible(n)) {
      const auto x = infer(y);
      expect_sound(y, x);
      const double bound = static_cast<double>(n) + std::ceil(std::sqrt(static_cast<double>(n)));
      ASSERT_LE(static_cast<double>(x.alphabet_size()), bound);
    }
  }
}

TEST(Infer, SoundOnRandomArrays) {
  for (std::size_t n = 9; n <= 200; n += 7) {
    auto rng = bench::rng_for_length(99, n);
    for (int t = 0; t < 5; ++t) {
      const auto y = bench::gen_random_feasible(n, rng);
      expect_sound(y, infer(y));
    }
  }
}

TEST(Infer, SoundOnStringsTables) {
  // Tables of random strings are biased towards long matches, unlike
  // uniformly drawn arrays.
  std::mt19937_64 rng(23);
  for (int round = 0; round < 300; ++round) {
    const auto x = testing::random_string(rng, 1 + rng() % 60, 3, 0.6);
    const auto y = compute_prefix_table(x);
    expect_sound(y, infer(y));
  }
}

TEST(Infer, RegularArraysGetSingletons) {
  for (std::size_t n = 1; n <= 7; ++n) {
    for (const auto& y : oracle::enumerate_feasible(n)) {
      if (is_regular(y).regular) {
        ASSERT_TRUE(infer(y).is_regular()) << format_array(y);
      }
    }
  }
}

TEST(Infer, Deterministic) {
  auto rng = bench::rng_for_length(7, 60);
  const auto y = bench::gen_random_feasible(60, rng);
  EXPECT_EQ(infer(y), infer(y));
}

TEST(Infer, MatchesOracleUpToFour) {
  std::vector<FeasibleArray> cases{Y("5 0 2 1 0")};
  for (std::size_t n = 0; n <= 4; ++n) {
    for (auto& y : oracle::enumerate_feasible(n)) cases.push_back(std::move(y));
  }
  for (const auto& y : cases) {
    const auto brute = oracle::brute_force_lex_least(y);
    ASSERT_TRUE(std::holds_alternative<oracle::LexLeast>(brute));
    const auto& least = std::get<oracle::LexLeast>(brute);
    const auto x = infer(y);
    EXPECT_EQ(x, least.string) << format_array(y);
    EXPECT_EQ(x.alphabet_size(), least.alphabet_size) << format_array(y);
  }
}

// Known gaps found by the oracle at n = 5: the greedy edge pass can settle on
// a larger alphabet, or a lexicographically larger string, than necessary.
TEST(Infer, KnownNonMinimalCases) {
  const auto y = Y("5 0 3 0 0");
  EXPECT_EQ(infer(y), S("a b {a,c} b c"));
  const auto brute = std::get<oracle::LexLeast>(oracle::brute_force_lex_least(y));
  EXPECT_EQ(brute.string, S("a b {a,b} b b"));
  EXPECT_EQ(brute.alphabet_size, 2u);

  const auto z = Y("5 0 2 1 1");
  EXPECT_EQ(infer(z), S("{a,b} c a {a,c} b"));
  EXPECT_EQ(std::get<oracle::LexLeast>(oracle::brute_force_lex_least(z)).string,
            S("{a,b} c a {a,b,c} b"));
}

}  // namespace
}  // namespace indet

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "towerlab/diagram.hpp"
#include "towerlab/errors.hpp"

using namespace towerlab;

namespace {

BrauerDiagram e(int j, int n) { return generator_diagram(DiagramKind::E, j, n); }
BrauerDiagram s(int j, int n) { return generator_diagram(DiagramKind::S, j, n); }

// Vertex numbering for from_pairs: top i -> i-1, bottom i -> n+i-1.
int top(int i) { return i - 1; }
int bot(int i, int n) { return n + i - 1; }

BrauerDiagram random_diagram(int n, std::mt19937& rng) {
  std::vector<int> v(2 * n);
  for (int i = 0; i < 2 * n; ++i) v[i] = i;
  std::shuffle(v.begin(), v.end(), rng);
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < 2 * n; i += 2) pairs.emplace_back(v[i], v[i + 1]);
  return BrauerDiagram::from_pairs(n, pairs);
}

long double_factorial(int n) {
  long r = 1;
  for (int k = 2 * n - 1; k > 1; k -= 2) r *= k;
  return r;
}

long catalan(int n) {
  long c = 1;
  for (int k = 0; k < n; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
  return c;
}

}  // namespace

TEST(Diagrams, ComposeExamples) {
  auto c = compose(e(1, 2), e(1, 2));
  EXPECT_EQ(c.diagram, e(1, 2));
  EXPECT_EQ(c.loops, 1);

  c = compose(s(1, 2), s(1, 2));
  EXPECT_EQ(c.diagram, BrauerDiagram::identity(2));
  EXPECT_EQ(c.loops, 0);

  c = compose(e(1, 3), e(2, 3));
  auto expected = BrauerDiagram::from_pairs(3, {{top(2), top(3)}, {top(1), bot(3, 3)}, {bot(1, 3), bot(2, 3)}});
  EXPECT_EQ(c.diagram, expected);
  EXPECT_EQ(c.loops, 0);
  EXPECT_TRUE(is_planar(c.diagram));
  EXPECT_EQ(c.diagram.to_string(), "[(t1,b3),(t2,t3),(b1,b2)]");
}

TEST(Diagrams, ComposeRankMismatch) {
  EXPECT_THROW(compose(e(1, 2), e(1, 3)), RankMismatch);
}

TEST(Diagrams, Planarity) {
  EXPECT_TRUE(is_planar(e(1, 2)));
  EXPECT_FALSE(is_planar(s(1, 2)));
  EXPECT_TRUE(is_planar(BrauerDiagram::identity(4)));
}

TEST(Diagrams, FlipAndGenerators) {
  EXPECT_EQ(flip(e(1, 2)), e(1, 2));
  EXPECT_EQ(flip(BrauerDiagram::identity(3)), BrauerDiagram::identity(3));
  auto s1 = BrauerDiagram::from_pairs(3, {{top(1), bot(2, 3)}, {top(2), bot(1, 3)}, {top(3), bot(3, 3)}});
  EXPECT_EQ(flip(s1), s1);
  EXPECT_EQ(s(1, 3), s1);

  EXPECT_EQ(e(1, 2), BrauerDiagram::from_pairs(2, {{top(1), top(2)}, {bot(1, 2), bot(2, 2)}}));
  EXPECT_EQ(generator_diagram(DiagramKind::Id, 1, 3), BrauerDiagram::identity(3));
  EXPECT_EQ(s(2, 3), BrauerDiagram::from_pairs(3, {{top(1), bot(1, 3)}, {top(2), bot(3, 3)}, {top(3), bot(2, 3)}}));
  EXPECT_THROW(generator_diagram(DiagramKind::E, 0, 3), IndexOutOfRange);
  EXPECT_THROW(generator_diagram(DiagramKind::S, 3, 3), IndexOutOfRange);
}

TEST(Diagrams, CanonicalEncoding) {
  auto a = BrauerDiagram::from_pairs(2, {{bot(2, 2), bot(1, 2)}, {top(2), top(1)}});
  EXPECT_EQ(a, e(1, 2));
  EXPECT_EQ(a.to_string(), "[(t1,t2),(b1,b2)]");
  EXPECT_EQ(a.hash(), e(1, 2).hash());
}

TEST(Diagrams, Counts) {
  for (int n = 0; n <= 5; ++n) {
    auto all = all_brauer_diagrams(n);
    EXPECT_EQ(static_cast<long>(all.size()), double_factorial(n)) << n;
    std::set<BrauerDiagram> distinct(all.begin(), all.end());
    EXPECT_EQ(distinct.size(), all.size());
  }
  for (int n = 0; n <= 6; ++n) {
    auto planar = planar_diagrams(n);
    EXPECT_EQ(static_cast<long>(planar.size()), catalan(n)) << n;
    for (const auto& d : planar) EXPECT_TRUE(is_planar(d));
  }
}

TEST(Diagrams, AssociativityExhaustive) {
  for (int n = 2; n <= 3; ++n) {
    auto all = all_brauer_diagrams(n);
    for (const auto& a : all)
      for (const auto& b : all)
        for (const auto& c : all) {
          auto ab = compose(a, b);
          auto left = compose(ab.diagram, c);
          auto bc = compose(b, c);
          auto right = compose(a, bc.diagram);
          ASSERT_EQ(left.diagram, right.diagram);
          ASSERT_EQ(ab.loops + left.loops, bc.loops + right.loops);
        }
  }
}

TEST(Diagrams, AssociativityRandom) {
  std::mt19937 rng(7);
  for (int n = 4; n <= 5; ++n)
    for (int trial = 0; trial < 500; ++trial) {
      auto a = random_diagram(n, rng), b = random_diagram(n, rng), c = random_diagram(n, rng);
      auto ab = compose(a, b);
      auto left = compose(ab.diagram, c);
      auto bc = compose(b, c);
      auto right = compose(a, bc.diagram);
      ASSERT_EQ(left.diagram, right.diagram);
      ASSERT_EQ(ab.loops + left.loops, bc.loops + right.loops);
    }
}

TEST(Diagrams, FlipIsAntiMultiplicative) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    int n = 1 + trial % 5;
    auto a = random_diagram(n, rng), b = random_diagram(n, rng);
    EXPECT_EQ(flip(flip(a)), a);
    auto ab = compose(a, b);
    auto ba = compose(flip(b), flip(a));
    EXPECT_EQ(flip(ab.diagram), ba.diagram);
    EXPECT_EQ(ab.loops, ba.loops);
  }
}

TEST(Diagrams, PlanarClosedUnderComposition) {
  for (int n = 1; n <= 4; ++n) {
    auto planar = planar_diagrams(n);
    for (const auto& a : planar)
      for (const auto& b : planar) EXPECT_TRUE(is_planar(compose(a, b).diagram));
  }
}

TEST(Diagrams, PermutationsComposeAsPermutations) {
  for (int n = 1; n <= 4; ++n) {
    auto perms = all_permutations(n);
    for (const auto& u : perms)
      for (const auto& w : perms) {
        auto c = compose(BrauerDiagram::from_permutation(u), BrauerDiagram::from_permutation(w));
        EXPECT_EQ(c.loops, 0);
        EXPECT_EQ(c.diagram.to_permutation(), compose_perm(u, w));
      }
  }
}

TEST(Diagrams, ReducedWords) {
  for (int n = 1; n <= 5; ++n)
    for (const auto& w : all_permutations(n)) {
      auto word = reduced_word(w);
      EXPECT_EQ(static_cast<int>(word.size()), perm_length(w));
      Permutation x = identity_permutation(n);
      for (int i : word) x = compose_perm(x, simple_transposition(i, n));
      EXPECT_EQ(x, w);
    }
}

TEST(Diagrams, Extend) {
  EXPECT_EQ(extend(e(1, 2), 3), e(1, 3));
  EXPECT_EQ(extend(BrauerDiagram::identity(1), 4), BrauerDiagram::identity(4));
}

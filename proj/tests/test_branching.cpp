#include <gtest/gtest.h>

#include <set>

#include "test_support.hpp"
#include "towerlab/branching.hpp"
#include "towerlab/errors.hpp"

using namespace towerlab;
using towerlab::testing::all_kinds;
using towerlab::testing::family;

namespace {

Vertex v(Partition p, int n) { return Vertex{std::move(p), n}; }

int max_rank(TowerKind kind) { return kind == TowerKind::BMW ? 4 : 5; }

}  // namespace

TEST(Branching, EdgeExamples) {
  auto out = edges(Lattice::Reflection, v({1}, 1));
  std::set<Vertex> got(out.begin(), out.end());
  std::set<Vertex> want{v({2}, 2), v({1, 1}, 2), v({}, 2)};
  EXPECT_EQ(got, want);
  EXPECT_EQ(edges(Lattice::Young, v({}, 0)), std::vector<Vertex>{v({1}, 1)});
  EXPECT_EQ(edges(Lattice::Reflection, v({}, 2)), std::vector<Vertex>{v({1}, 3)});
}

TEST(Branching, PathExamples) {
  EXPECT_EQ(paths(Lattice::Reflection, v({1}, 3)).size(), 3u);
  EXPECT_EQ(paths(Lattice::Reflection, v({}, 4)).size(), 3u);
  auto young = paths(Lattice::Young, v({2, 1}, 3));
  ASSERT_EQ(young.size(), 2u);
  Path row{v({}, 0), v({1}, 1), v({2}, 2), v({2, 1}, 3)};
  Path column{v({}, 0), v({1}, 1), v({1, 1}, 2), v({2, 1}, 3)};
  EXPECT_EQ(young[0], row);
  EXPECT_EQ(young[1], column);
  EXPECT_EQ(compare_paths(row, column, PathOrder::Revlex), Cmp::Greater);
  EXPECT_EQ(compare_paths(row, row, PathOrder::Revlex), Cmp::Equal);
  EXPECT_EQ(compare_paths(row, row, PathOrder::Dominance), Cmp::Equal);
  EXPECT_THROW(compare_paths(row, Path{v({}, 0)}, PathOrder::Revlex), LengthMismatch);
}

TEST(Branching, InvalidVertex) {
  EXPECT_FALSE(is_valid_vertex(Lattice::Young, v({1}, 3)));
  EXPECT_FALSE(is_valid_vertex(Lattice::Reflection, v({1}, 2)));
  EXPECT_FALSE(is_valid_vertex(Lattice::TwoColumn, v({3}, 3)));
  EXPECT_TRUE(is_valid_vertex(Lattice::TwoColumn, tl_vertex(1, 5)));
  auto p = family(TowerKind::Sym)->params_ptr();
  EXPECT_THROW(beta(*p, v({2, 1}, 4)), InvalidVertex);
}

TEST(Branching, TwoColumnVertices) {
  EXPECT_EQ(tl_vertex(1, 5).lambda, (Partition{2, 2, 1}));
  EXPECT_EQ(tl_through(tl_vertex(3, 5)), 3);
}

TEST(Branching, ScalarExamples) {
  EXPECT_EQ(contents({2, 1}), (std::vector<int>{0, 1, -1}));
  auto sym = family(TowerKind::Sym)->params_ptr();
  EXPECT_TRUE(alpha(*sym, {2, 1}).is_zero());
  auto hecke = family(TowerKind::Hecke)->params_ptr();
  EXPECT_EQ(alpha(*hecke, {2}), hecke->hecke_q);
  auto brauer = family(TowerKind::Brauer)->params_ptr();
  EXPECT_EQ(beta(*brauer, v({}, 2)), Scalar(1) - brauer->delta);
}

// Sum over endpoints of (number of paths)^2 is the algebra dimension.
TEST(Branching, PathCountsMatchDimensions) {
  for (auto kind : all_kinds()) {
    auto f = family(kind, Mode::Specialized);
    for (int n = 0; n <= max_rank(kind); ++n) {
      std::size_t total = 0;
      for (const auto& w : level_vertices(lattice_for(kind), n)) {
        auto ps = paths(lattice_for(kind), w);
        total += ps.size() * ps.size();
      }
      EXPECT_EQ(total, f->at(n)->dim()) << tower_name(kind) << " n=" << n;
    }
  }
}

TEST(Branching, BetaTelescopes) {
  for (auto kind : all_kinds()) {
    auto p = family(kind)->params_ptr();
    const Lattice lat = lattice_for(kind);
    for (int n = 1; n <= 5; ++n)
      for (const auto& from : level_vertices(lat, n - 1))
        for (const auto& to : edges(lat, from)) {
          Scalar step = step_scalar(*p, from, to);
          if (is_multiplicative(kind)) EXPECT_EQ(step, beta(*p, to) / beta(*p, from)) << tower_name(kind) << to.to_string();
          else EXPECT_EQ(step, beta(*p, to) - beta(*p, from)) << tower_name(kind) << to.to_string();
        }
  }
}

TEST(Branching, StepScalarClosedForms) {
  auto bmw = family(TowerKind::BMW)->params_ptr();
  const Scalar q = bmw->q;
  // Adding the box of content 1 to (1); removing it from (2).
  EXPECT_EQ(step_scalar(*bmw, v({1}, 1), v({2}, 2)), q * q);
  EXPECT_EQ(step_scalar(*bmw, v({2}, 2), v({1}, 3)), bmw->rho.pow(-2) * q.pow(-2));
  auto brauer = family(TowerKind::Brauer)->params_ptr();
  EXPECT_EQ(step_scalar(*brauer, v({1}, 1), v({1, 1}, 2)), Scalar(-1));
  EXPECT_EQ(step_scalar(*brauer, v({1, 1}, 2), v({1}, 3)), (Scalar(1) - brauer->delta) + Scalar(1));
}

TEST(Branching, RevlexIsStrictTotalOrder) {
  for (auto lat : {Lattice::Young, Lattice::Reflection, Lattice::TwoColumn})
    for (int n = 0; n <= 5; ++n)
      for (const auto& w : level_vertices(lat, n)) {
        auto ps = paths(lat, w);
        std::set<Path> distinct(ps.begin(), ps.end());
        EXPECT_EQ(distinct.size(), ps.size());
        for (std::size_t i = 0; i < ps.size(); ++i)
          for (std::size_t j = 0; j < ps.size(); ++j) {
            Cmp c = compare_paths(ps[i], ps[j], PathOrder::Revlex);
            Cmp d = compare_paths(ps[j], ps[i], PathOrder::Revlex);
            if (i == j) {
              EXPECT_EQ(c, Cmp::Equal);
              continue;
            }
            ASSERT_NE(c, Cmp::Incomparable);
            ASSERT_NE(c, Cmp::Equal);
            EXPECT_EQ(c == Cmp::Greater, d == Cmp::Less);
            // Sorted descending.
            EXPECT_EQ(c == Cmp::Greater, i < j);
          }
      }
}

TEST(Branching, DominanceRefinesRevlex) {
  for (auto lat : {Lattice::Young, Lattice::Reflection})
    for (int n = 0; n <= 4; ++n)
      for (const auto& w : level_vertices(lat, n)) {
        auto ps = paths(lat, w);
        for (const auto& s : ps)
          for (const auto& t : ps) {
            Cmp dom = compare_paths(s, t, PathOrder::Dominance);
            if (dom == Cmp::Incomparable) continue;
            EXPECT_EQ(dom, compare_paths(s, t, PathOrder::Revlex));
          }
      }
}

TEST(Branching, YoungPathsAreStandardTableaux) {
  // Hook length counts for n = 5.
  const std::map<Partition, std::size_t> f{{{5}, 1}, {{4, 1}, 4}, {{3, 2}, 5}, {{3, 1, 1}, 6},
                                          {{2, 2, 1}, 5}, {{2, 1, 1, 1}, 4}, {{1, 1, 1, 1, 1}, 1}};
  for (const auto& [lambda, count] : f) EXPECT_EQ(paths(Lattice::Young, v(lambda, 5)).size(), count);
}

#include <gtest/gtest.h>

#include <functional>

#include "test_support.hpp"
#include "towerlab/errors.hpp"
#include "towerlab/verify.hpp"

using namespace towerlab;
using towerlab::testing::all_kinds;
using towerlab::testing::family;

namespace {

Vertex v(Partition p, int n) { return Vertex{std::move(p), n}; }

FamilyPtr specialized(TowerKind kind, std::map<std::string, mpq_class> values) {
  return TowerFamily::create(make_params(kind, Mode::Specialized, values));
}

void expect_pass(const VerificationReport& r, const std::string& where) {
  for (const auto& c : r.checks)
    EXPECT_TRUE(c.pass) << where << ": " << c.name << " " << c.vertex << " [" << c.witness << "]";
  EXPECT_GT(r.checks.size(), 0u) << where;
}

// Up-down tableaux and their eigenvalues, computed from box contents without the library's
// lattice code.
struct Oracle {
  TowerKind kind;
  const Params& p;

  bool two_columns() const { return kind == TowerKind::TL; }
  bool may_remove() const { return kind == TowerKind::Brauer || kind == TowerKind::BMW; }

  struct Move {
    Partition shape;
    bool added;
    int content;
  };

  std::vector<Move> moves(const Partition& lam) const {
    std::vector<Move> out;
    for (std::size_t r = 0; r <= lam.size(); ++r) {
      const int len = r < lam.size() ? lam[r] : 0;
      if (r > 0 && lam[r - 1] <= len) continue;
      if (two_columns() && len >= 2) continue;
      Partition next = lam;
      if (r == lam.size()) next.push_back(1);
      else ++next[r];
      out.push_back({next, true, len - static_cast<int>(r)});
    }
    if (may_remove())
      for (std::size_t r = 0; r < lam.size(); ++r) {
        if (r + 1 < lam.size() && lam[r + 1] == lam[r]) continue;
        Partition next = lam;
        if (--next[r] == 0) next.pop_back();
        out.push_back({next, false, lam[r] - 1 - static_cast<int>(r)});
      }
    return out;
  }

  Scalar value(bool added, int c) const {
    switch (kind) {
      case TowerKind::Sym: return Scalar(c);
      case TowerKind::Hecke:
      case TowerKind::TL: return p.hecke_q.pow(c);
      case TowerKind::Brauer: return added ? Scalar(c) : Scalar(1) - p.delta - Scalar(c);
      case TowerKind::BMW: return added ? p.q.pow(2 * c) : p.rho.pow(-2) * p.q.pow(-2 * c);
      default: return Scalar(0);
    }
  }

  // Eigenvalue sequences of all tableaux of length n ending at lambda.
  std::vector<std::vector<Scalar>> sequences(const Partition& target, int n) const {
    std::vector<std::vector<Scalar>> out;
    std::vector<Scalar> cur;
    std::function<void(const Partition&, int)> walk = [&](const Partition& lam, int j) {
      if (j == n) {
        if (lam == target) out.push_back(cur);
        return;
      }
      for (const auto& m : moves(lam)) {
        cur.push_back(value(m.added, m.content));
        walk(m.shape, j + 1);
        cur.pop_back();
      }
    };
    walk({}, 0);
    return out;
  }
};

bool spectrum_matches(const Matrix& m, const std::vector<Scalar>& roots) {
  auto poly = characteristic_polynomial(m);
  for (const auto& r : roots)
    if (!divide_out_root(poly, r)) return false;
  return poly.size() == 1 && poly[0].is_one();
}

int symbolic_max(TowerKind kind) { return kind == TowerKind::BMW ? 3 : 4; }

}  // namespace

TEST(JmElements, SecondElementExamples) {
  auto brauer = family(TowerKind::Brauer);
  auto jb = jm_elements(brauer, 2);
  EXPECT_EQ(jb.at(2), brauer->generator(2, {'s', 1}) - brauer->generator(2, {'e', 1}));
  EXPECT_TRUE(jb.at(1).is_zero());
  EXPECT_EQ(jb.kind, JmKind::Additive);

  auto hecke = family(TowerKind::Hecke);
  const Scalar q = hecke->params().hecke_q;
  auto jh = jm_elements(hecke, 2);
  EXPECT_EQ(jh.at(2), (Scalar(1) - q.inverse()) * hecke->generator(2, {'T', 1}) + hecke->one(2));

  auto bmw = family(TowerKind::BMW);
  auto g = bmw->generator(2, {'g', 1});
  EXPECT_EQ(jm_elements(bmw, 2).at(2), g * g);
  EXPECT_EQ(jm_elements(bmw, 2).kind, JmKind::Multiplicative);
}

TEST(JmElements, RankZeroRejected) {
  EXPECT_THROW(jm_elements(family(TowerKind::BMW), 0), std::invalid_argument);
}

TEST(JmElements, GammaExamples) {
  auto brauer = family(TowerKind::Brauer);
  auto jb = jm_elements(brauer, 2);
  auto e = brauer->generator(2, {'e', 1});
  EXPECT_EQ((jb.at(1) + jb.at(2)) * e, (Scalar(1) - brauer->params().delta) * e);

  auto bmw = family(TowerKind::BMW);
  auto jw = jm_elements(bmw, 2);
  auto eb = bmw->generator(2, {'e', 1});
  EXPECT_EQ(jw.at(1) * jw.at(2) * eb, bmw->params().rho.pow(-2) * eb);

  // TL: L_j L_{j+1} e_j = q^{2-j} e_j, so the first index gives q.
  auto tl = family(TowerKind::TL);
  auto jt = jm_elements(tl, 3);
  const Scalar q = tl->params().hecke_q;
  auto e1 = tl->generator(3, {'e', 1}), e2 = tl->generator(3, {'e', 2});
  EXPECT_EQ(jt.at(1) * jt.at(2) * e1, q * e1);
  EXPECT_EQ(jt.at(2) * jt.at(3) * e2, e2);
  ASSERT_EQ(jt.gamma.size(), 2u);
  EXPECT_EQ(jt.gamma[0], q);
}

TEST(JmFamily, AxiomsHold) {
  for (auto kind : all_kinds())
    for (int n = 1; n <= symbolic_max(kind); ++n)
      expect_pass(verify_jm_family(jm_elements(family(kind), n)), tower_name(kind) + " n=" + std::to_string(n));
  expect_pass(verify_jm_family(jm_elements(family(TowerKind::BMW, Mode::Specialized), 4)), "bmw n=4");
}

TEST(JmFamily, BrokenFamilyReportsWitness) {
  auto f = jm_elements(family(TowerKind::Brauer), 3);
  f.elements[2] = f.elements[2] + f.family->generator(3, {'e', 1});
  auto r = verify_jm_family(f);
  EXPECT_GT(r.failed(), 0u);
  for (const auto& c : r.checks)
    if (!c.pass) EXPECT_FALSE(c.witness.empty()) << c.name;
}

TEST(JmFamily, ReportsAreDeterministic) {
  auto f = jm_elements(family(TowerKind::Hecke), 3);
  auto a = verify_jm_family(f), b = verify_jm_family(f);
  ASSERT_EQ(a.checks.size(), b.checks.size());
  for (std::size_t i = 0; i < a.checks.size(); ++i) {
    EXPECT_EQ(a.checks[i].name, b.checks[i].name);
    EXPECT_EQ(a.checks[i].pass, b.checks[i].pass);
    EXPECT_EQ(a.checks[i].witness, b.checks[i].witness);
  }
}

TEST(CenterScalar, Examples) {
  auto brauer = family(TowerKind::Brauer);
  CellTheory bt(brauer);
  auto jb = jm_elements(brauer, 2);
  EXPECT_TRUE(bt.module(v({}, 2))->action_matrix(jb.central_element()).is_scalar(Scalar(1) - brauer->params().delta));

  auto hecke = family(TowerKind::Hecke);
  CellTheory ht(hecke);
  EXPECT_TRUE(ht.module(v({2}, 2))->action_matrix(jm_elements(hecke, 2).central_element()).is_scalar(hecke->params().hecke_q));

  auto bmw = family(TowerKind::BMW);
  CellTheory wt(bmw);
  EXPECT_TRUE(wt.module(v({1}, 3))->action_matrix(jm_elements(bmw, 3).central_element()).is_scalar(bmw->params().rho.pow(-2)));
}

TEST(CenterScalar, ReportsPassAndMatchOracle) {
  for (auto kind : all_kinds()) {
    auto f = family(kind);
    CellTheory theory(f);
    Oracle oracle{kind, f->params()};
    for (int n = 1; n <= 3; ++n) {
      auto jm = jm_elements(f, n);
      for (const auto& vert : level_vertices(theory.lattice(), n)) {
        expect_pass(verify_center_scalar(theory, jm, vert), tower_name(kind) + " " + vert.to_string());
        auto seqs = oracle.sequences(vert.lambda, n);
        ASSERT_FALSE(seqs.empty());
        Scalar expected = jm.kind == JmKind::Multiplicative ? Scalar(1) : Scalar(0);
        for (const auto& x : seqs.front()) expected = jm.kind == JmKind::Multiplicative ? expected * x : expected + x;
        EXPECT_TRUE(beta(f->params(), vert) == expected)
            << tower_name(kind) << " " << vert.to_string() << " " << f->params().format(beta(f->params(), vert))
            << " vs " << f->params().format(expected);
      }
    }
  }
}

TEST(Spectrum, Examples) {
  auto brauer = family(TowerKind::Brauer);
  CellTheory bt(brauer);
  auto m = bt.module(v({}, 2))->action_matrix(jm_elements(brauer, 2).at(2));
  EXPECT_TRUE(spectrum_matches(m, {Scalar(1) - brauer->params().delta}));

  auto hecke = family(TowerKind::Hecke);
  CellTheory ht(hecke);
  const Scalar q = hecke->params().hecke_q;
  m = ht.module(v({2, 1}, 3))->action_matrix(jm_elements(hecke, 3).at(3));
  EXPECT_TRUE(spectrum_matches(m, {q, q.inverse()}));

  auto bmw = family(TowerKind::BMW);
  CellTheory wt(bmw);
  const Scalar rho = bmw->params().rho, bq = bmw->params().q;
  m = wt.module(v({1}, 3))->action_matrix(jm_elements(bmw, 3).at(3));
  EXPECT_TRUE(spectrum_matches(m, {rho.pow(-2) * bq.pow(-2), rho.pow(-2) * bq.pow(2), Scalar(1)}));
}

TEST(Spectrum, MatchesUpDownTableauOracle) {
  for (auto kind : all_kinds())
    for (auto mode : {Mode::Symbolic, Mode::Specialized}) {
      auto f = family(kind, mode);
      CellTheory theory(f);
      Oracle oracle{kind, f->params()};
      const int top = mode == Mode::Symbolic ? 3 : 4;
      for (int n = 1; n <= top; ++n) {
        auto jm = jm_elements(f, n);
        for (const auto& vert : level_vertices(theory.lattice(), n)) {
          auto seqs = oracle.sequences(vert.lambda, n);
          auto mod = theory.module(vert);
          ASSERT_EQ(seqs.size(), mod->dim()) << tower_name(kind) << " " << vert.to_string();
          for (int j = 1; j <= n; ++j) {
            std::vector<Scalar> roots;
            for (const auto& s : seqs) roots.push_back(s[j - 1]);
            EXPECT_TRUE(spectrum_matches(mod->action_matrix(jm.at(j)), roots))
                << tower_name(kind) << " " << vert.to_string() << " L" << j;
          }
        }
      }
    }
}

TEST(Triangularity, ReportsPass) {
  for (auto kind : all_kinds()) {
    auto f = family(kind);
    CellTheory theory(f);
    for (int n = 1; n <= symbolic_max(kind); ++n) {
      auto jm = jm_elements(f, n);
      for (const auto& vert : level_vertices(theory.lattice(), n))
        expect_pass(verify_triangularity_and_spectrum(theory, jm, vert), tower_name(kind) + " " + vert.to_string());
    }
  }
}

TEST(Gz, SymSeparationUpToFive) {
  auto f = family(TowerKind::Sym);
  Oracle oracle{TowerKind::Sym, f->params()};
  for (int n = 1; n <= 5; ++n) {
    std::vector<std::vector<Scalar>> all;
    for (const auto& lam : partitions_of(n))
      for (auto& s : oracle.sequences(lam, n)) all.push_back(std::move(s));
    for (std::size_t a = 0; a < all.size(); ++a)
      for (std::size_t b = a + 1; b < all.size(); ++b) EXPECT_NE(all[a], all[b]);
    EXPECT_NO_THROW(gz_idempotents(jm_elements(f, n)));
  }
}

TEST(Gz, ReportsPass) {
  for (auto kind : all_kinds()) {
    auto f = family(kind);
    CellTheory theory(f);
    for (int n = 1; n <= 3; ++n)
      expect_pass(verify_separation_and_gz(theory, jm_elements(f, n)), tower_name(kind) + " n=" + std::to_string(n));
  }
}

TEST(Gz, BrauerRankThree) {
  auto f = family(TowerKind::Brauer);
  CellTheory theory(f);
  auto gz = gz_idempotents(jm_elements(f, 3));
  EXPECT_EQ(gz.paths.size(), 7u);
  for (const auto& vert : level_vertices(Lattice::Reflection, 3)) {
    AlgebraElement sum = Scalar(0) * f->one(3);
    for (std::size_t t = 0; t < gz.paths.size(); ++t)
      if (gz.paths[t].back() == vert) sum = sum + gz.idempotents[t];
    EXPECT_EQ(sum, theory.central_idempotent(vert));
  }
}

TEST(Gz, DegenerateValuesFailSeparation) {
  auto f = specialized(TowerKind::Brauer, {{"delta", 1}});
  EXPECT_THROW(gz_idempotents(jm_elements(f, 3)), SeparationFailure);
  CellTheory theory(f);
  EXPECT_THROW(verify_separation_and_gz(theory, jm_elements(f, 3)), GenericityViolation);
}

TEST(FrameworkAxioms, ReportsPass) {
  for (auto kind : {TowerKind::Brauer, TowerKind::TL, TowerKind::BMW})
    for (int n = 2; n <= 4; ++n)
      expect_pass(verify_framework_axioms(*family(kind), n), tower_name(kind) + " n=" + std::to_string(n));
  for (auto kind : {TowerKind::Sym, TowerKind::Hecke}) {
    auto r = verify_framework_axioms(*family(kind), 3);
    expect_pass(r, tower_name(kind));
    EXPECT_EQ(r.meta.count("axioms"), 1u);
  }
}

TEST(FrameworkAxioms, NamedChecksPresent) {
  auto r = verify_framework_axioms(*family(TowerKind::TL), 3);
  auto has = [&](const std::string& prefix) {
    for (const auto& c : r.checks)
      if (c.name.rfind(prefix, 0) == 0) return true;
    return false;
  };
  EXPECT_TRUE(has("(5)"));
  EXPECT_TRUE(has("(6)"));
  EXPECT_TRUE(has("(7)"));
  EXPECT_TRUE(has("(8) e1 = e1 e2 e1"));
}

TEST(Branching, ReportsPass) {
  for (auto kind : all_kinds()) {
    CellTheory theory(family(kind));
    for (int n = 1; n <= symbolic_max(kind); ++n)
      expect_pass(verify_branching_multiplicities(theory, n), tower_name(kind) + " n=" + std::to_string(n));
  }
}

TEST(Bridge, PhiSquaredBothWays) {
  auto tl = family(TowerKind::TL);
  const Scalar qh = tl->params().qhalf, q = tl->params().hecke_q;
  auto one = tl->one(2);
  auto phi = qh * tl->generator(2, {'e', 1}) - one;
  // (qh e - 1)^2 = qh^2 delta e - 2 qh e + 1 and also (q - 1) phi + q
  auto direct = (qh * qh * tl->params().delta - Scalar(2) * qh) * tl->generator(2, {'e', 1}) + one;
  EXPECT_EQ(phi * phi, direct);
  EXPECT_EQ(phi * phi, (q - Scalar(1)) * phi + q * one);
}

TEST(Bridge, ReportsPass) {
  auto tl = family(TowerKind::TL);
  for (int n = 1; n <= 4; ++n) expect_pass(verify_tl_hecke_bridge(tl, n), "tl n=" + std::to_string(n));
  auto r = verify_tl_hecke_bridge(tl, 3);
  bool saw_xi = false;
  for (const auto& c : r.checks) saw_xi = saw_xi || c.name == "phi(xi) = 0";
  EXPECT_TRUE(saw_xi);
  EXPECT_THROW(verify_tl_hecke_bridge(family(TowerKind::Hecke), 3), TowerMismatch);
}

#include "towerlab/relations.hpp"

#include <cstdlib>

namespace towerlab {

namespace {

class RelationList {
 public:
  RelationList(const TowerFamily& family, int n) : family_(family), n_(n), one_(family.one(n)) {}

  AlgebraElement gen(char kind, int i) const { return family_.generator(n_, Generator{kind, i}); }
  const AlgebraElement& one() const { return one_; }

  void add(std::string name, const AlgebraElement& lhs, const AlgebraElement& rhs) {
    out_.push_back({std::move(name), lhs == rhs});
  }
  std::vector<RelationCheck> take() { return std::move(out_); }

 private:
  const TowerFamily& family_;
  int n_;
  AlgebraElement one_;
  std::vector<RelationCheck> out_;
};

std::string nm(char k, int i) { return std::string(1, k) + std::to_string(i); }

// Quadratic, braid and far-commutation relations for a family of braid-like generators.
void braid_relations(RelationList& r, char k, int n) {
  for (int i = 1; i + 1 < n; ++i) {
    auto a = r.gen(k, i), b = r.gen(k, i + 1);
    r.add(nm(k, i) + "*" + nm(k, i + 1) + "*" + nm(k, i) + " = " + nm(k, i + 1) + "*" + nm(k, i) + "*" + nm(k, i + 1),
          a * b * a, b * a * b);
  }
  for (int i = 1; i < n; ++i)
    for (int j = i + 2; j < n; ++j)
      r.add(nm(k, i) + "*" + nm(k, j) + " = " + nm(k, j) + "*" + nm(k, i), r.gen(k, i) * r.gen(k, j),
            r.gen(k, j) * r.gen(k, i));
}

void idempotent_relations(RelationList& r, const Scalar& delta, int n) {
  for (int i = 1; i < n; ++i) r.add(nm('e', i) + "^2 = delta*" + nm('e', i), r.gen('e', i) * r.gen('e', i), delta * r.gen('e', i));
  for (int i = 1; i < n; ++i)
    for (int j : {i - 1, i + 1}) {
      if (j < 1 || j >= n) continue;
      auto e = r.gen('e', i), f = r.gen('e', j);
      r.add(nm('e', i) + "*" + nm('e', j) + "*" + nm('e', i) + " = " + nm('e', i), e * f * e, e);
    }
  for (int i = 1; i < n; ++i)
    for (int j = i + 2; j < n; ++j)
      r.add(nm('e', i) + "*" + nm('e', j) + " = " + nm('e', j) + "*" + nm('e', i), r.gen('e', i) * r.gen('e', j),
            r.gen('e', j) * r.gen('e', i));
}

// Mixed commutation g_i e_j = e_j g_i for |i-j| >= 2.
void mixed_far_commutation(RelationList& r, char k, int n) {
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j) {
      if (std::abs(i - j) < 2) continue;
      r.add(nm(k, i) + "*" + nm('e', j) + " = " + nm('e', j) + "*" + nm(k, i), r.gen(k, i) * r.gen('e', j),
            r.gen('e', j) * r.gen(k, i));
    }
}

}  // namespace

std::vector<RelationCheck> check_relations(const TowerFamily& family, int n) {
  RelationList r(family, n);
  const Params& p = family.params();
  switch (family.kind()) {
    case TowerKind::TL: idempotent_relations(r, p.delta, n); break;
    case TowerKind::Sym:
      for (int i = 1; i < n; ++i) r.add(nm('s', i) + "^2 = 1", r.gen('s', i) * r.gen('s', i), r.one());
      braid_relations(r, 's', n);
      break;
    case TowerKind::Hecke:
      for (int i = 1; i < n; ++i) {
        auto t = r.gen('T', i);
        r.add("(" + nm('T', i) + " - q)(" + nm('T', i) + " + 1) = 0", (t - p.hecke_q * r.one()) * (t + r.one()),
              Scalar() * r.one());
      }
      braid_relations(r, 'T', n);
      break;
    case TowerKind::Brauer:
      for (int i = 1; i < n; ++i) r.add(nm('s', i) + "^2 = 1", r.gen('s', i) * r.gen('s', i), r.one());
      braid_relations(r, 's', n);
      idempotent_relations(r, p.delta, n);
      mixed_far_commutation(r, 's', n);
      for (int i = 1; i < n; ++i) {
        auto s = r.gen('s', i), e = r.gen('e', i);
        r.add(nm('s', i) + "*" + nm('e', i) + " = " + nm('e', i), s * e, e);
        r.add(nm('e', i) + "*" + nm('s', i) + " = " + nm('e', i), e * s, e);
      }
      for (int i = 1; i < n; ++i)
        for (int j : {i - 1, i + 1}) {
          if (j < 1 || j >= n) continue;
          auto si = r.gen('s', i), sj = r.gen('s', j), ei = r.gen('e', i), ej = r.gen('e', j);
          r.add(nm('s', i) + "*" + nm('e', j) + "*" + nm('e', i) + " = " + nm('s', j) + "*" + nm('e', i), si * ej * ei, sj * ei);
          r.add(nm('e', i) + "*" + nm('e', j) + "*" + nm('s', i) + " = " + nm('e', i) + "*" + nm('s', j), ei * ej * si, ei * sj);
        }
      break;
    case TowerKind::BMW: {
      const Scalar z = p.z();
      for (int i = 1; i < n; ++i) {
        auto g = r.gen('g', i), gi = r.gen('G', i), e = r.gen('e', i);
        r.add(nm('g', i) + "*" + nm('g', i) + "^-1 = 1", g * gi, r.one());
        r.add(nm('g', i) + "^-1*" + nm('g', i) + " = 1", gi * g, r.one());
        r.add(nm('g', i) + " - " + nm('g', i) + "^-1 = z(1 - " + nm('e', i) + ")", g - gi, z * (r.one() - e));
        r.add(nm('g', i) + "*" + nm('e', i) + " = rho^-1*" + nm('e', i), g * e, p.rho.inverse() * e);
        r.add(nm('e', i) + "*" + nm('g', i) + " = rho^-1*" + nm('e', i), e * g, p.rho.inverse() * e);
      }
      braid_relations(r, 'g', n);
      idempotent_relations(r, p.delta, n);
      mixed_far_commutation(r, 'g', n);
      for (int i = 1; i < n; ++i)
        for (int j : {i - 1, i + 1}) {
          if (j < 1 || j >= n) continue;
          auto gi = r.gen('g', i), gj = r.gen('g', j), ei = r.gen('e', i), ej = r.gen('e', j);
          r.add(nm('g', i) + "*" + nm('g', j) + "*" + nm('e', i) + " = " + nm('e', j) + "*" + nm('e', i), gi * gj * ei, ej * ei);
          r.add(nm('e', i) + "*" + nm('g', j) + "*" + nm('g', i) + " = " + nm('e', i) + "*" + nm('e', j), ei * gj * gi, ei * ej);
          r.add(nm('e', i) + "*" + nm('g', j) + "*" + nm('e', i) + " = rho*" + nm('e', i), ei * gj * ei, p.rho * ei);
        }
      break;
    }
    case TowerKind::Ground: break;
  }
  return r.take();
}

}  // namespace towerlab

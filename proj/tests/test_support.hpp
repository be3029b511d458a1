#pragma once

#include <random>

#include "towerlab/tower.hpp"

namespace towerlab::testing {

inline FamilyPtr family(TowerKind kind, Mode mode = Mode::Symbolic) {
  auto values = mode == Mode::Specialized ? default_specialization(kind) : std::map<std::string, mpq_class>{};
  return TowerFamily::create(make_params(kind, mode, values));
}

// A few basis elements with small integer coefficients.
inline AlgebraElement random_element(const TowerFamily& f, int n, std::mt19937& rng, int terms = 3) {
  auto t = f.at(n);
  std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(t->dim() - 1));
  std::uniform_int_distribution<int> coeff(-3, 3);
  SparseVec v;
  for (int k = 0; k < terms; ++k) {
    int c = coeff(rng);
    if (c != 0) v = v + SparseVec::unit(pick(rng), Scalar(c));
  }
  return f.element(n, v);
}

inline std::vector<TowerKind> all_kinds() {
  return {TowerKind::TL, TowerKind::Brauer, TowerKind::Sym, TowerKind::Hecke, TowerKind::BMW};
}

}  // namespace towerlab::testing

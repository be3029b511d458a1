#pragma once

#include <memory>

#include "towerlab/tower.hpp"

namespace towerlab {

// TL, Brauer, Sym and the ground ring: products are diagram compositions with delta^loops.
class DiagramTower : public Tower {
 public:
  DiagramTower(TowerKind kind, int n, ParamsPtr params);
  SparseVec multiply(const SparseVec& a, const SparseVec& b) const override;
  SparseVec left_generator(const Generator& g, const SparseVec& v) const override;
  SparseVec right_generator(const SparseVec& v, const Generator& g) const override;
  SparseVec involve(const SparseVec& a) const override;

 private:
  const Scalar& delta_power(int r) const { return delta_powers_[r]; }
  BrauerDiagram generator_label(const Generator& g) const;
  std::vector<Scalar> delta_powers_;
};

// Iwahori-Hecke algebra on the T_w basis with (T - Q)(T + 1) = 0.
class HeckeTower : public Tower {
 public:
  HeckeTower(int n, ParamsPtr params);
  SparseVec multiply(const SparseVec& a, const SparseVec& b) const override;
  SparseVec left_generator(const Generator& g, const SparseVec& v) const override;
  SparseVec right_generator(const SparseVec& v, const Generator& g) const override;
  SparseVec involve(const SparseVec& a) const override;

 private:
  // w∘s_i and s_i∘w as basis indices, with whether the length goes up.
  std::vector<std::vector<std::uint32_t>> right_, left_;
  std::vector<std::vector<bool>> right_up_, left_up_;
  std::vector<std::vector<int>> words_;
  std::vector<std::uint32_t> inverse_;
};

TowerPtr make_bmw_tower(int n, ParamsPtr params);

}  // namespace towerlab

#include <stdexcept>

#include "towerlab/errors.hpp"
#include "towers_internal.hpp"

namespace towerlab {

DiagramTower::DiagramTower(TowerKind kind, int n, ParamsPtr params) : Tower(kind, n, std::move(params)) {
  std::vector<BrauerDiagram> labels;
  switch (kind) {
    case TowerKind::Brauer: labels = all_brauer_diagrams(n); break;
    case TowerKind::TL: labels = planar_diagrams(n); break;
    case TowerKind::Sym:
      for (auto& w : all_permutations(n)) labels.push_back(BrauerDiagram::from_permutation(w));
      break;
    case TowerKind::Ground: labels.push_back(BrauerDiagram::identity(n)); break;
    default: throw std::invalid_argument("not a diagram tower");
  }
  set_labels(std::move(labels));
  delta_powers_.push_back(Scalar(1));
  for (int r = 1; r <= n; ++r) delta_powers_.push_back(delta_powers_.back() * params_->delta);
}

BrauerDiagram DiagramTower::generator_label(const Generator& g) const {
  if (g.index < 1 || g.index >= n_) throw IndexOutOfRange("generator index out of range: " + g.name());
  return generator_diagram(g.kind == 'e' ? DiagramKind::E : DiagramKind::S, g.index, n_);
}

SparseVec DiagramTower::multiply(const SparseVec& a, const SparseVec& b) const {
  if (kind_ == TowerKind::Ground) {
    Scalar s = a.get(0) * b.get(0);
    return SparseVec::unit(0, s);
  }
  DenseAccumulator acc(dim());
  for (const auto& [i, x] : a)
    for (const auto& [j, y] : b) {
      Composition c = compose(labels_[i], labels_[j]);
      acc.add(index_of(c.diagram), x * y * delta_power(c.loops));
    }
  return acc.take();
}

SparseVec DiagramTower::left_generator(const Generator& g, const SparseVec& v) const {
  BrauerDiagram gd = generator_label(g);
  DenseAccumulator acc(dim());
  for (const auto& [j, y] : v) {
    Composition c = compose(gd, labels_[j]);
    acc.add(index_of(c.diagram), c.loops ? y * delta_power(c.loops) : y);
  }
  return acc.take();
}

SparseVec DiagramTower::right_generator(const SparseVec& v, const Generator& g) const {
  BrauerDiagram gd = generator_label(g);
  DenseAccumulator acc(dim());
  for (const auto& [j, y] : v) {
    Composition c = compose(labels_[j], gd);
    acc.add(index_of(c.diagram), c.loops ? y * delta_power(c.loops) : y);
  }
  return acc.take();
}

SparseVec DiagramTower::involve(const SparseVec& a) const {
  std::vector<SparseVec::Entry> out;
  for (const auto& [i, c] : a) out.emplace_back(index_of(flip(labels_[i])), c);
  return SparseVec::from_entries(std::move(out));
}

HeckeTower::HeckeTower(int n, ParamsPtr params) : Tower(TowerKind::Hecke, n, std::move(params)) {
  std::vector<BrauerDiagram> labels;
  for (auto& w : all_permutations(n)) labels.push_back(BrauerDiagram::from_permutation(w));
  set_labels(std::move(labels));
  const std::size_t d = dim();
  right_.assign(d, std::vector<std::uint32_t>(n, 0));
  left_ = right_;
  right_up_.assign(d, std::vector<bool>(n, false));
  left_up_ = right_up_;
  words_.resize(d);
  inverse_.resize(d);
  for (std::uint32_t idx = 0; idx < d; ++idx) {
    Permutation w = labels_[idx].to_permutation();
    Permutation winv = inverse_perm(w);
    words_[idx] = reduced_word(w);
    inverse_[idx] = index_of(BrauerDiagram::from_permutation(winv));
    for (int i = 1; i < n; ++i) {
      Permutation s = simple_transposition(i, n);
      right_[idx][i] = index_of(BrauerDiagram::from_permutation(compose_perm(w, s)));
      left_[idx][i] = index_of(BrauerDiagram::from_permutation(compose_perm(s, w)));
      right_up_[idx][i] = w[i - 1] < w[i];
      left_up_[idx][i] = winv[i - 1] < winv[i];
    }
  }
}

SparseVec HeckeTower::right_generator(const SparseVec& v, const Generator& g) const {
  if (g.index < 1 || g.index >= n_) throw IndexOutOfRange("generator index out of range: " + g.name());
  const Scalar& Q = params_->hecke_q;
  DenseAccumulator acc(dim());
  for (const auto& [w, c] : v) {
    std::uint32_t ws = right_[w][g.index];
    if (right_up_[w][g.index]) {
      acc.add(ws, c);
    } else {
      acc.add(w, c * (Q - Scalar(1)));
      acc.add(ws, c * Q);
    }
  }
  return acc.take();
}

SparseVec HeckeTower::left_generator(const Generator& g, const SparseVec& v) const {
  if (g.index < 1 || g.index >= n_) throw IndexOutOfRange("generator index out of range: " + g.name());
  const Scalar& Q = params_->hecke_q;
  DenseAccumulator acc(dim());
  for (const auto& [w, c] : v) {
    std::uint32_t sw = left_[w][g.index];
    if (left_up_[w][g.index]) {
      acc.add(sw, c);
    } else {
      acc.add(w, c * (Q - Scalar(1)));
      acc.add(sw, c * Q);
    }
  }
  return acc.take();
}

SparseVec HeckeTower::multiply(const SparseVec& a, const SparseVec& b) const {
  DenseAccumulator acc(dim());
  for (const auto& [v, c] : b) {
    SparseVec cur = a;
    for (int i : words_[v]) cur = right_generator(cur, Generator{'T', i});
    acc.add(cur, c);
  }
  return acc.take();
}

SparseVec HeckeTower::involve(const SparseVec& a) const {
  std::vector<SparseVec::Entry> out;
  for (const auto& [i, c] : a) out.emplace_back(inverse_[i], c);
  return SparseVec::from_entries(std::move(out));
}

}  // namespace towerlab

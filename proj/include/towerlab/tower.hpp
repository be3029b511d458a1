#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "towerlab/diagram.hpp"
#include "towerlab/linalg.hpp"
#include "towerlab/params.hpp"

namespace towerlab {

// 'e' (essential idempotent), 's' (transposition), 'g' (BMW braid), 'T' (Hecke).
struct Generator {
  char kind = 'e';
  int index = 1;
  std::string name() const { return std::string(1, kind) + std::to_string(index); }
  friend bool operator==(const Generator& a, const Generator& b) {
    return a.kind == b.kind && a.index == b.index;
  }
};

// One algebra A_n of a tower, with a distinguished basis indexed by Brauer diagrams
// (permutation diagrams for Sym and Hecke). Elements are SparseVec over basis indices.
class Tower {
 public:
  Tower(TowerKind kind, int n, ParamsPtr params);
  virtual ~Tower() = default;
  Tower(const Tower&) = delete;
  Tower& operator=(const Tower&) = delete;

  TowerKind kind() const { return kind_; }
  int rank() const { return n_; }
  const Params& params() const { return *params_; }
  const ParamsPtr& params_ptr() const { return params_; }

  std::size_t dim() const { return labels_.size(); }
  const BrauerDiagram& label(std::uint32_t i) const { return labels_[i]; }
  const std::vector<BrauerDiagram>& labels() const { return labels_; }
  std::optional<std::uint32_t> find(const BrauerDiagram& d) const;
  std::uint32_t index_of(const BrauerDiagram& d) const;
  std::string label_string(std::uint32_t i) const;
  std::uint32_t identity_index() const { return index_of(BrauerDiagram::identity(n_)); }
  SparseVec one() const { return SparseVec::unit(identity_index()); }

  std::vector<Generator> generators() const;
  virtual SparseVec generator(const Generator& g) const;
  virtual SparseVec multiply(const SparseVec& a, const SparseVec& b) const = 0;
  virtual SparseVec left_generator(const Generator& g, const SparseVec& v) const;
  virtual SparseVec right_generator(const SparseVec& v, const Generator& g) const;
  virtual SparseVec involve(const SparseVec& a) const = 0;
  // Image of an element of a lower-rank algebra of the same tower under inclusion.
  virtual SparseVec include_from(const Tower& lower, const SparseVec& a) const;

 protected:
  void set_labels(std::vector<BrauerDiagram> labels);

  TowerKind kind_;
  int n_;
  ParamsPtr params_;
  std::vector<BrauerDiagram> labels_;
  std::unordered_map<BrauerDiagram, std::uint32_t, DiagramHash> index_;
};

using TowerPtr = std::shared_ptr<const Tower>;

// Sparse element tagged by its algebra.
class AlgebraElement {
 public:
  AlgebraElement() = default;
  AlgebraElement(TowerPtr tower, SparseVec coeffs) : tower_(std::move(tower)), coeffs_(std::move(coeffs)) {}

  const TowerPtr& tower() const { return tower_; }
  const SparseVec& coeffs() const { return coeffs_; }
  int rank() const { return tower_->rank(); }
  bool is_zero() const { return coeffs_.empty(); }
  Scalar coefficient(const BrauerDiagram& d) const;

  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
  friend AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b);
  friend AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b);
  friend AlgebraElement operator*(const Scalar& c, const AlgebraElement& a);
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b);
  friend bool operator!=(const AlgebraElement& a, const AlgebraElement& b) { return !(a == b); }

  std::string to_string() const;

 private:
  TowerPtr tower_;
  SparseVec coeffs_;
};

AlgebraElement involve(const AlgebraElement& a);
// Matrix of x -> a x in the distinguished basis.
Matrix left_mult_matrix(const AlgebraElement& a);

// A tower A_0 ⊆ A_1 ⊆ ... for fixed parameters, with its quotient tower Q_n.
class TowerFamily : public std::enable_shared_from_this<TowerFamily> {
 public:
  static std::shared_ptr<TowerFamily> create(ParamsPtr params);

  TowerKind kind() const { return params_->kind; }
  const Params& params() const { return *params_; }
  const ParamsPtr& params_ptr() const { return params_; }
  TowerPtr at(int n) const;

  AlgebraElement element(int n, const SparseVec& v) const { return {at(n), v}; }
  AlgebraElement generator(int n, const Generator& g) const;
  AlgebraElement one(int n) const { return {at(n), at(n)->one()}; }
  AlgebraElement basis_element(int n, const BrauerDiagram& d) const;
  AlgebraElement include(const AlgebraElement& a, int m) const;

  // Q_n: Sym for Brauer, Hecke(q^2) for BMW, ground ring for TL; Sym/Hecke are their own quotient.
  std::shared_ptr<const TowerFamily> quotient_family() const;
  AlgebraElement quotient_map(const AlgebraElement& a) const;

 private:
  explicit TowerFamily(ParamsPtr params) : params_(std::move(params)) {}
  ParamsPtr params_;
  mutable std::mutex mu_;
  mutable std::map<int, TowerPtr> towers_;
  mutable std::shared_ptr<const TowerFamily> quotient_;
};

using FamilyPtr = std::shared_ptr<const TowerFamily>;

}  // namespace towerlab

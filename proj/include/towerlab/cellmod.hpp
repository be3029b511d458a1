#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "towerlab/branching.hpp"
#include "towerlab/linalg.hpp"
#include "towerlab/tower.hpp"

namespace towerlab {

enum class Provenance { Murphy, Inflated, Induced };
std::string provenance_name(Provenance p);

// Number of through strands of the cell modules at v (TL vertices carry lambda(k,n)).
int through_strands(TowerKind kind, const Vertex& v);

// Row-stabilizer sum generating the cell module of lambda in A_k (k = |lambda|): group sum
// for Sym/Brauer, sum of T_w for Hecke, sum of q^{l(w)} T_w for BMW, the unit for TL.
SparseVec murphy_generator(const Tower& tower, const Partition& lambda);
// e_{k+1} e_{k+3} ... e_{n-1} times the included Murphy generator, k the through strands of v.
SparseVec cell_generator(const TowerFamily& family, const Vertex& v);

// Cyclic left module (A_n g + A')/A' realised inside A_n, with A' the span of the cell ideals
// above v. The construction basis consists of elements of A_n spanning A_n g modulo A'.
class CellModule {
 public:
  CellModule(FamilyPtr family, Vertex vertex);
  // Same quotient construction from another cyclic generator of the cell ideal.
  CellModule(FamilyPtr family, Vertex vertex, const SparseVec& generator);

  const FamilyPtr& family() const { return family_; }
  const TowerPtr& tower() const { return tower_; }
  const Vertex& vertex() const { return vertex_; }
  Provenance provenance() const { return provenance_; }
  std::size_t dim() const { return basis_.size(); }
  // Up-down paths labelling the path basis; their count equals dim().
  const std::vector<Path>& paths() const { return paths_; }
  const AlgebraElement& cyclic_generator() const { return generator_; }
  const std::vector<SparseVec>& construction_basis() const { return basis_; }

  // Matrices in the construction basis.
  const Matrix& generator_action(const Generator& g) const;
  Matrix action_matrix(const AlgebraElement& a) const;
  // Coordinates of an element of A_n g modulo A'.
  std::vector<Scalar> coordinates(const SparseVec& x) const;

 private:
  void build(const SparseVec& generator);
  SparseVec project(SparseVec v) const;
  SparseVec reduce_column(const SparseVec& x) const;

  FamilyPtr family_;
  TowerPtr tower_;
  Vertex vertex_;
  Provenance provenance_;
  int through_ = 0;
  std::vector<Path> paths_;
  AlgebraElement generator_;
  std::vector<SparseVec> basis_;
  EchelonBasis echelon_{0};  // rows of A' ∩ A_n g (zero tag) and the basis (unit tags)
  mutable std::mutex mu_;
  mutable std::map<std::pair<char, int>, Matrix> actions_;
};

using CellModulePtr = std::shared_ptr<const CellModule>;

// Matrix X with X a_i = b_i X for paired action lists, and whether X is invertible. The
// modules must be irreducible for the answer to be meaningful; nullopt when Hom is zero.
struct Intertwiner {
  Matrix map;
  bool invertible = false;
};
std::optional<Intertwiner> find_intertwiner(const std::vector<Matrix>& a, const std::vector<Matrix>& b);

struct RestrictionPiece {
  Vertex vertex;         // level n-1
  Matrix basis;          // columns span z_vertex Δ, in the construction basis
  std::size_t multiplicity = 0;
  bool isomorphism_verified = false;  // an invertible intertwiner with the cell module was found
};

struct PathBasis {
  std::vector<Path> paths;
  Matrix change;   // columns: path vectors in the construction basis
  Matrix inverse;

  Matrix transform(const Matrix& action) const { return inverse * action * change; }
};

// Cell modules, central idempotents and derived structure of one tower family, memoised per
// level. Requires parameters where the algebras are semisimple over the fraction field.
class CellTheory {
 public:
  explicit CellTheory(FamilyPtr family) : family_(std::move(family)) {}

  const FamilyPtr& family() const { return family_; }
  Lattice lattice() const { return lattice_for(family_->kind()); }

  CellModulePtr module(const Vertex& v) const;
  std::vector<CellModulePtr> level(int n) const;
  // Minimal central idempotent of A_n acting as 1 on Δ^v and 0 on the other cell modules.
  const AlgebraElement& central_idempotent(const Vertex& v) const;
  // Matrix of x -> (actions on all cell modules at level n), rows flattened. Memoised.
  const Matrix& representation_matrix(int n) const;
  // Actions of a on the cell modules of its level, in level() order.
  std::vector<Matrix> represent(const AlgebraElement& a) const;
  // Subquotients of Δ^v restricted to A_{n-1}, ordered descending in the linear extension;
  // N_j is the span of the first j pieces.
  std::vector<RestrictionPiece> restriction_filtration(const Vertex& v) const;
  const PathBasis& path_basis(const Vertex& v) const;
  // Action of z (central idempotent at level j < n) on Δ^v, in the construction basis.
  Matrix idempotent_action(const Vertex& v, const Vertex& lower) const;

 private:
  FamilyPtr family_;
  mutable std::mutex mu_;
  mutable std::map<Vertex, CellModulePtr> modules_;
  mutable std::map<Vertex, AlgebraElement> idempotents_;
  mutable std::map<int, Matrix> representations_;
  mutable std::map<Vertex, PathBasis> path_bases_;
  mutable std::map<std::pair<Vertex, Vertex>, Matrix> idempotent_actions_;
};

// Murphy module of Sym or Hecke; the same object CellTheory builds at a Young vertex.
CellModule murphy_cell_module(FamilyPtr family, const Partition& lambda);

}  // namespace towerlab

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "towerlab/rational_function.hpp"

namespace towerlab {

// Sparse coordinate vector; entries sorted by index, no stored zeros.
class SparseVec {
 public:
  using Entry = std::pair<std::uint32_t, Scalar>;

  SparseVec() = default;
  static SparseVec unit(std::uint32_t index, Scalar value = Scalar(1));

  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  const std::vector<Entry>& entries() const { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }
  Scalar get(std::uint32_t index) const;

  // this += c * other
  void axpy(const Scalar& c, const SparseVec& other);
  SparseVec scaled(const Scalar& c) const;
  SparseVec operator-() const { return scaled(Scalar(-1)); }
  friend SparseVec operator+(SparseVec a, const SparseVec& b) {
    a.axpy(Scalar(1), b);
    return a;
  }
  friend SparseVec operator-(SparseVec a, const SparseVec& b) {
    a.axpy(Scalar(-1), b);
    return a;
  }
  friend bool operator==(const SparseVec& a, const SparseVec& b) { return a.entries_ == b.entries_; }

  // Builds from unsorted entries, merging duplicates and dropping zeros.
  static SparseVec from_entries(std::vector<Entry> entries);

 private:
  std::vector<Entry> entries_;
};

// Dense vector accumulator used to sum many sparse contributions.
class DenseAccumulator {
 public:
  explicit DenseAccumulator(std::size_t dim) : values_(dim), touched_(dim, false) {}
  void add(std::uint32_t index, const Scalar& value);
  void add(const SparseVec& v, const Scalar& c);
  SparseVec take();

 private:
  std::vector<Scalar> values_;
  std::vector<bool> touched_;
  std::vector<std::uint32_t> order_;
};

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  Matrix scaled(const Scalar& c) const;
  Matrix transposed() const;
  friend bool operator==(const Matrix& a, const Matrix& b);
  bool is_zero() const;
  bool is_scalar(const Scalar& c) const;
  std::vector<Scalar> column(std::size_t j) const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> data_;
};

std::size_t rank(Matrix m);
// Columns form a basis of the right kernel.
Matrix nullspace(const Matrix& m);
// Solves a x = b; nullopt when inconsistent. Free variables are set to zero.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);
// Throws SingularSystem.
Matrix inverse(const Matrix& m);
// Matrix whose columns span the column space of m (a subset of its columns).
Matrix column_basis(const Matrix& m);

// Coefficients of det(xI - m), lowest degree first.
std::vector<Scalar> characteristic_polynomial(const Matrix& m);
// Divides p by (x - root) in place; returns false (leaving p untouched) if root is not a root.
bool divide_out_root(std::vector<Scalar>& p, const Scalar& root);

// Semi-echelon basis of a growing subspace of F^ambient. Each row may carry a tag
// vector recording it as a combination of externally named generators.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t ambient) : pivot_row_(ambient, -1), ambient_(ambient) {}

  struct Reduction {
    SparseVec residual;
    SparseVec tag;  // combination of row tags subtracted off
  };

  Reduction reduce(const SparseVec& v) const;
  bool contains(const SparseVec& v) const { return reduce(v).residual.empty(); }
  // Adds v if independent; returns whether the rank grew.
  bool insert(const SparseVec& v, const SparseVec& tag = SparseVec());
  std::size_t rank() const { return rows_.size(); }
  std::size_t ambient() const { return ambient_; }
  const std::vector<SparseVec>& rows() const { return rows_; }

 private:
  std::vector<SparseVec> rows_;
  std::vector<SparseVec> tags_;
  std::vector<int> pivot_row_;
  std::size_t ambient_;
};

}  // namespace towerlab

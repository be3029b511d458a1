#include "towerlab/linalg.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "towerlab/errors.hpp"

namespace towerlab {

SparseVec SparseVec::unit(std::uint32_t index, Scalar value) {
  SparseVec v;
  if (!value.is_zero()) v.entries_.emplace_back(index, std::move(value));
  return v;
}

Scalar SparseVec::get(std::uint32_t index) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                             [](const Entry& e, std::uint32_t i) { return e.first < i; });
  if (it != entries_.end() && it->first == index) return it->second;
  return Scalar();
}

void SparseVec::axpy(const Scalar& c, const SparseVec& other) {
  if (c.is_zero() || other.empty()) return;
  std::vector<Entry> out;
  out.reserve(entries_.size() + other.entries_.size());
  std::size_t i = 0, j = 0;
  const auto& a = entries_;
  const auto& b = other.entries_;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, c * b[j].second);
      ++j;
    } else {
      Scalar s = a[i].second + c * b[j].second;
      if (!s.is_zero()) out.emplace_back(a[i].first, std::move(s));
      ++i;
      ++j;
    }
  }
  entries_ = std::move(out);
}

SparseVec SparseVec::scaled(const Scalar& c) const {
  SparseVec r;
  if (c.is_zero()) return r;
  r.entries_.reserve(entries_.size());
  for (const auto& [i, v] : entries_) r.entries_.emplace_back(i, v * c);
  return r;
}

SparseVec SparseVec::from_entries(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });
  SparseVec r;
  for (auto& e : entries) {
    if (!r.entries_.empty() && r.entries_.back().first == e.first) {
      r.entries_.back().second += e.second;
    } else {
      if (!r.entries_.empty() && r.entries_.back().second.is_zero()) r.entries_.pop_back();
      r.entries_.push_back(std::move(e));
    }
  }
  if (!r.entries_.empty() && r.entries_.back().second.is_zero()) r.entries_.pop_back();
  return r;
}

void DenseAccumulator::add(std::uint32_t index, const Scalar& value) {
  if (value.is_zero()) return;
  if (!touched_[index]) {
    touched_[index] = true;
    order_.push_back(index);
  }
  values_[index] += value;
}

void DenseAccumulator::add(const SparseVec& v, const Scalar& c) {
  if (c.is_zero()) return;
  bool unit = c.is_one();
  for (const auto& [i, x] : v) add(i, unit ? x : x * c);
}

SparseVec DenseAccumulator::take() {
  std::sort(order_.begin(), order_.end());
  std::vector<SparseVec::Entry> out;
  out.reserve(order_.size());
  for (auto i : order_) {
    if (!values_[i].is_zero()) out.emplace_back(i, std::move(values_[i]));
    values_[i] = Scalar();
    touched_[i] = false;
  }
  order_.clear();
  return SparseVec::from_entries(std::move(out));
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
  Matrix r(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Scalar& y = b(k, j);
        if (!y.is_zero()) r(i, j) += x * y;
      }
    }
  return r;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix shape mismatch");
  Matrix r = a;
  for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] += b.data_[i];
  return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix shape mismatch");
  Matrix r = a;
  for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] -= b.data_[i];
  return r;
}

Matrix Matrix::scaled(const Scalar& c) const {
  Matrix r = *this;
  for (auto& x : r.data_) x *= c;
  return r;
}

Matrix Matrix::transposed() const {
  Matrix r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& x) { return x.is_zero(); });
}

bool Matrix::is_scalar(const Scalar& c) const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != (i == j ? c : Scalar())) return false;
  return true;
}

std::vector<Scalar> Matrix::column(std::size_t j) const {
  std::vector<Scalar> c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = m.rows();
    std::size_t best = 0;
    for (std::size_t i = r; i < m.rows(); ++i) {
      if (m(i, c).is_zero()) continue;
      std::size_t size = m(i, c).complexity();
      if (p == m.rows() || size < best) {
        p = i;
        best = size;
      }
    }
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    Scalar inv = m(r, c).inverse();
    for (std::size_t j = c; j < m.cols(); ++j)
      if (!m(r, j).is_zero()) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      Scalar f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t rank(Matrix m) {
  return rref(m).size();
}

Matrix nullspace(const Matrix& m) {
  Matrix e = m;
  auto pivots = rref(e);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free.push_back(c);
  Matrix basis(m.cols(), free.size());
  for (std::size_t k = 0; k < free.size(); ++k) {
    basis(free[k], k) = Scalar(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) basis(pivots[r], k) = -e(r, free[k]);
  }
  return basis;
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("matrix shape mismatch");
  Matrix aug(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) aug(i, a.cols() + j) = b(i, j);
  }
  auto pivots = rref(aug);
  Matrix x(a.cols(), b.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] >= a.cols()) return std::nullopt;
    for (std::size_t j = 0; j < b.cols(); ++j) x(pivots[r], j) = aug(r, a.cols() + j);
  }
  return x;
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw SingularSystem("non-square matrix has no inverse");
  Matrix e = m;
  std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = Scalar(1);
  }
  auto pivots = rref(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw SingularSystem("matrix is singular");
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

Matrix column_basis(const Matrix& m) {
  Matrix e = m;
  auto pivots = rref(e);
  Matrix r(m.rows(), pivots.size());
  for (std::size_t k = 0; k < pivots.size(); ++k)
    for (std::size_t i = 0; i < m.rows(); ++i) r(i, k) = m(i, pivots[k]);
  return r;
}

std::vector<Scalar> characteristic_polynomial(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("characteristic polynomial of non-square matrix");
  std::size_t n = m.rows();
  Matrix h = m;
  // Similarity reduction to upper Hessenberg form.
  for (std::size_t c = 1; c + 1 < n; ++c) {
    std::size_t p = c;
    while (p < n && h(p, c - 1).is_zero()) ++p;
    if (p == n) continue;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(h(p, j), h(c, j));
      for (std::size_t i = 0; i < n; ++i) std::swap(h(i, p), h(i, c));
    }
    Scalar inv = h(c, c - 1).inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (h(i, c - 1).is_zero()) continue;
      Scalar u = h(i, c - 1) * inv;
      for (std::size_t j = 0; j < n; ++j)
        if (!h(c, j).is_zero()) h(i, j) -= u * h(c, j);
      for (std::size_t k = 0; k < n; ++k)
        if (!h(k, i).is_zero()) h(k, c) += u * h(k, i);
    }
  }
  // p_k = det(x - H[0..k,0..k]) via the Hessenberg recurrence.
  std::vector<std::vector<Scalar>> p(n + 1);
  p[0] = {Scalar(1)};
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<Scalar> next(k + 1);
    const auto& prev = p[k - 1];
    for (std::size_t d = 0; d < prev.size(); ++d) {
      next[d + 1] += prev[d];
      next[d] -= h(k - 1, k - 1) * prev[d];
    }
    Scalar t(1);
    for (std::size_t i = 1; i < k; ++i) {
      t *= h(k - i, k - i - 1);
      if (t.is_zero()) break;
      Scalar f = t * h(k - i - 1, k - 1);
      if (f.is_zero()) continue;
      const auto& q = p[k - i - 1];
      for (std::size_t d = 0; d < q.size(); ++d) next[d] -= f * q[d];
    }
    p[k] = std::move(next);
  }
  return p[n];
}

bool divide_out_root(std::vector<Scalar>& p, const Scalar& root) {
  if (p.size() < 2) return false;
  std::size_t deg = p.size() - 1;
  std::vector<Scalar> q(deg);
  Scalar carry;
  for (std::size_t d = deg; d >= 1; --d) {
    carry = p[d] + carry * root;
    q[d - 1] = carry;
  }
  Scalar remainder = p[0] + carry * root;
  if (!remainder.is_zero()) return false;
  p = std::move(q);
  return true;
}

EchelonBasis::Reduction EchelonBasis::reduce(const SparseVec& v) const {
  std::map<std::uint32_t, Scalar> work;
  for (const auto& [i, x] : v) work.emplace(i, x);
  std::map<std::uint32_t, Scalar> tag;
  auto it = work.begin();
  while (it != work.end()) {
    std::uint32_t k = it->first;
    int r = pivot_row_[k];
    if (r < 0) {
      ++it;
      continue;
    }
    Scalar c = it->second;
    work.erase(it);
    for (const auto& [j, y] : rows_[r]) {
      if (j == k) continue;
      auto [pos, fresh] = work.try_emplace(j);
      pos->second -= c * y;
      if (pos->second.is_zero()) work.erase(pos);
    }
    for (const auto& [j, y] : tags_[r]) {
      auto [pos, fresh] = tag.try_emplace(j);
      pos->second += c * y;
      if (pos->second.is_zero()) tag.erase(pos);
    }
    it = work.upper_bound(k);
  }
  Reduction out;
  std::vector<SparseVec::Entry> res(work.begin(), work.end());
  std::vector<SparseVec::Entry> tg(tag.begin(), tag.end());
  out.residual = SparseVec::from_entries(std::move(res));
  out.tag = SparseVec::from_entries(std::move(tg));
  return out;
}

bool EchelonBasis::insert(const SparseVec& v, const SparseVec& tag) {
  Reduction red = reduce(v);
  if (red.residual.empty()) return false;
  Scalar lead = red.residual.entries().front().second;
  Scalar inv = lead.inverse();
  SparseVec row = red.residual.scaled(inv);
  SparseVec t = tag;
  t.axpy(Scalar(-1), red.tag);
  pivot_row_[row.entries().front().first] = static_cast<int>(rows_.size());
  rows_.push_back(std::move(row));
  tags_.push_back(t.scaled(inv));
  return true;
}

}  // namespace towerlab

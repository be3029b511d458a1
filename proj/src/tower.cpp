#include "towerlab/tower.hpp"

#include <algorithm>
#include <sstream>

#include "towerlab/errors.hpp"
#include "towers_internal.hpp"

namespace towerlab {

Tower::Tower(TowerKind kind, int n, ParamsPtr params) : kind_(kind), n_(n), params_(std::move(params)) {
  if (n < 0) throw std::invalid_argument("negative rank");
}

void Tower::set_labels(std::vector<BrauerDiagram> labels) {
  std::stable_sort(labels.begin(), labels.end(), [](const BrauerDiagram& a, const BrauerDiagram& b) {
    int ta = a.through_strands(), tb = b.through_strands();
    if (ta != tb) return ta > tb;
    return a < b;
  });
  labels_ = std::move(labels);
  index_.clear();
  for (std::uint32_t i = 0; i < labels_.size(); ++i) index_.emplace(labels_[i], i);
}

std::optional<std::uint32_t> Tower::find(const BrauerDiagram& d) const {
  auto it = index_.find(d);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::uint32_t Tower::index_of(const BrauerDiagram& d) const {
  auto i = find(d);
  if (!i) throw std::invalid_argument("diagram " + d.to_string() + " is not a basis label of " + tower_name(kind_));
  return *i;
}

std::string Tower::label_string(std::uint32_t i) const {
  if (kind_ == TowerKind::Sym || kind_ == TowerKind::Hecke) return perm_to_string(labels_[i].to_permutation());
  return labels_[i].to_string();
}

std::vector<Generator> Tower::generators() const {
  std::vector<Generator> out;
  for (int i = 1; i < n_; ++i) {
    switch (kind_) {
      case TowerKind::TL: out.push_back({'e', i}); break;
      case TowerKind::Brauer:
        out.push_back({'s', i});
        out.push_back({'e', i});
        break;
      case TowerKind::Sym: out.push_back({'s', i}); break;
      case TowerKind::Hecke: out.push_back({'T', i}); break;
      case TowerKind::BMW:
        out.push_back({'g', i});
        out.push_back({'e', i});
        break;
      case TowerKind::Ground: break;
    }
  }
  return out;
}

SparseVec Tower::generator(const Generator& g) const {
  if (g.index < 1 || g.index >= n_) throw IndexOutOfRange("generator index out of range: " + g.name());
  DiagramKind k = g.kind == 'e' ? DiagramKind::E : DiagramKind::S;
  return SparseVec::unit(index_of(generator_diagram(k, g.index, n_)));
}

SparseVec Tower::left_generator(const Generator& g, const SparseVec& v) const {
  return multiply(generator(g), v);
}

SparseVec Tower::right_generator(const SparseVec& v, const Generator& g) const {
  return multiply(v, generator(g));
}

SparseVec Tower::include_from(const Tower& lower, const SparseVec& a) const {
  if (lower.rank() > n_) throw RankMismatch("cannot include into a smaller rank");
  std::vector<SparseVec::Entry> out;
  for (const auto& [i, c] : a) out.emplace_back(index_of(extend(lower.label(i), n_)), c);
  return SparseVec::from_entries(std::move(out));
}

Scalar AlgebraElement::coefficient(const BrauerDiagram& d) const {
  auto i = tower_->find(d);
  return i ? coeffs_.get(*i) : Scalar();
}

namespace {

void check_same(const AlgebraElement& a, const AlgebraElement& b) {
  if (!a.tower() || !b.tower()) throw TowerMismatch("element without tower");
  if (a.tower()->kind() != b.tower()->kind() || a.tower()->params_ptr() != b.tower()->params_ptr())
    throw TowerMismatch("elements belong to different towers");
  if (a.rank() != b.rank()) throw RankMismatch("elements have different ranks");
}

}  // namespace

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  check_same(a, b);
  return {a.tower_, a.tower_->multiply(a.coeffs_, b.coeffs_)};
}

AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
  check_same(a, b);
  return {a.tower_, a.coeffs_ + b.coeffs_};
}

AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b) {
  check_same(a, b);
  return {a.tower_, a.coeffs_ - b.coeffs_};
}

AlgebraElement operator*(const Scalar& c, const AlgebraElement& a) {
  return {a.tower_, a.coeffs_.scaled(c)};
}

bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
  check_same(a, b);
  return a.coeffs_ == b.coeffs_;
}

std::string AlgebraElement::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [i, c] : coeffs_) {
    os << (first ? "" : " + ") << "(" << tower_->params().format(c) << ")*" << tower_->label_string(i);
    first = false;
  }
  return os.str();
}

AlgebraElement involve(const AlgebraElement& a) {
  return {a.tower(), a.tower()->involve(a.coeffs())};
}

Matrix left_mult_matrix(const AlgebraElement& a) {
  const Tower& t = *a.tower();
  Matrix m(t.dim(), t.dim());
  for (std::uint32_t j = 0; j < t.dim(); ++j) {
    SparseVec col = t.multiply(a.coeffs(), SparseVec::unit(j));
    for (const auto& [i, c] : col) m(i, j) = c;
  }
  return m;
}

std::shared_ptr<TowerFamily> TowerFamily::create(ParamsPtr params) {
  return std::shared_ptr<TowerFamily>(new TowerFamily(std::move(params)));
}

TowerPtr TowerFamily::at(int n) const {
  if (n < 0) throw std::invalid_argument("negative rank");
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = towers_.find(n);
    if (it != towers_.end()) return it->second;
  }
  TowerPtr t;
  switch (params_->kind) {
    case TowerKind::Hecke: t = std::make_shared<HeckeTower>(n, params_); break;
    case TowerKind::BMW: t = make_bmw_tower(n, params_); break;
    default: t = std::make_shared<DiagramTower>(params_->kind, n, params_); break;
  }
  std::lock_guard<std::mutex> lock(mu_);
  return towers_.emplace(n, t).first->second;
}

AlgebraElement TowerFamily::generator(int n, const Generator& g) const {
  auto t = at(n);
  return {t, t->generator(g)};
}

AlgebraElement TowerFamily::basis_element(int n, const BrauerDiagram& d) const {
  auto t = at(n);
  return {t, SparseVec::unit(t->index_of(d))};
}

AlgebraElement TowerFamily::include(const AlgebraElement& a, int m) const {
  if (a.tower()->params_ptr() != params_) throw TowerMismatch("element is not from this family");
  if (m < a.rank()) throw RankMismatch("include target rank below element rank");
  if (m == a.rank()) return a;
  auto t = at(m);
  return {t, t->include_from(*a.tower(), a.coeffs())};
}

std::shared_ptr<const TowerFamily> TowerFamily::quotient_family() const {
  std::lock_guard<std::mutex> lock(mu_);
  if (quotient_) return quotient_;
  switch (params_->kind) {
    case TowerKind::Brauer: quotient_ = create(derived_params(*params_, TowerKind::Sym)); break;
    case TowerKind::TL: quotient_ = create(derived_params(*params_, TowerKind::Ground)); break;
    case TowerKind::BMW: quotient_ = create(hecke_params_over(*params_, params_->q * params_->q)); break;
    default: quotient_ = shared_from_this(); break;
  }
  return quotient_;
}

AlgebraElement TowerFamily::quotient_map(const AlgebraElement& a) const {
  auto qf = quotient_family();
  if (qf.get() == this) return a;
  const int n = a.rank();
  auto qt = qf->at(n);
  std::vector<SparseVec::Entry> out;
  for (const auto& [i, c] : a.coeffs()) {
    const BrauerDiagram& d = a.tower()->label(i);
    if (d.through_strands() < n) continue;
    Scalar coeff = c;
    if (params_->kind == TowerKind::BMW) coeff *= params_->q.pow(-perm_length(d.to_permutation()));
    out.emplace_back(qt->index_of(d), coeff);
  }
  return {qt, SparseVec::from_entries(std::move(out))};
}

}  // namespace towerlab

#include "towerlab/cellmod.hpp"

#include <stdexcept>

#include "towerlab/errors.hpp"

namespace towerlab {

std::string provenance_name(Provenance p) {
  switch (p) {
    case Provenance::Murphy: return "murphy";
    case Provenance::Inflated: return "inflated";
    case Provenance::Induced: return "induced";
  }
  return "";
}

int through_strands(TowerKind kind, const Vertex& v) {
  return kind == TowerKind::TL ? tl_through(v) : v.k();
}

namespace {

// Permutations of 0..k-1 preserving the consecutive row blocks of lambda.
std::vector<Permutation> row_stabilizer(const Partition& lambda) {
  const int k = partition_size(lambda);
  std::vector<int> row_of(k);
  int pos = 0;
  for (std::size_t r = 0; r < lambda.size(); ++r)
    for (int c = 0; c < lambda[r]; ++c) row_of[pos++] = static_cast<int>(r);
  std::vector<Permutation> out;
  for (auto& w : all_permutations(k)) {
    bool keeps = true;
    for (int i = 0; i < k && keeps; ++i) keeps = row_of[w[i]] == row_of[i];
    if (keeps) out.push_back(std::move(w));
  }
  return out;
}

SparseVec column_vector(const std::vector<Scalar>& v) {
  std::vector<SparseVec::Entry> out;
  for (std::uint32_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) out.emplace_back(i, v[i]);
  return SparseVec::from_entries(std::move(out));
}

std::vector<Scalar> apply_matrix(const Matrix& m, const std::vector<Scalar>& v) {
  std::vector<Scalar> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!v[j].is_zero() && !m(i, j).is_zero()) out[i] += m(i, j) * v[j];
  return out;
}

}  // namespace

SparseVec murphy_generator(const Tower& tower, const Partition& lambda) {
  if (partition_size(lambda) != tower.rank()) throw InvalidVertex("partition size differs from the rank");
  if (tower.kind() == TowerKind::TL || tower.kind() == TowerKind::Ground) return tower.one();
  std::vector<SparseVec::Entry> out;
  for (const auto& w : row_stabilizer(lambda)) {
    Scalar c(1);
    if (tower.kind() == TowerKind::BMW) c = tower.params().q.pow(perm_length(w));
    out.emplace_back(tower.index_of(BrauerDiagram::from_permutation(w)), c);
  }
  return SparseVec::from_entries(std::move(out));
}

SparseVec cell_generator(const TowerFamily& family, const Vertex& v) {
  const TowerKind kind = family.kind();
  auto top = family.at(v.n);
  const int k = through_strands(kind, v);
  SparseVec g;
  if (kind == TowerKind::TL) {
    g = top->one();
  } else {
    auto low = family.at(k);
    g = top->include_from(*low, murphy_generator(*low, v.lambda));
  }
  for (int i = k + 1; i < v.n; i += 2) g = top->left_generator(Generator{'e', i}, g);
  return g;
}

CellModule::CellModule(FamilyPtr family, Vertex vertex) : family_(std::move(family)), vertex_(std::move(vertex)) {
  if (!is_valid_vertex(lattice_for(family_->kind()), vertex_))
    throw InvalidVertex("not a vertex of the " + tower_name(family_->kind()) + " lattice: " + vertex_.to_string());
  build(cell_generator(*family_, vertex_));
}

CellModule::CellModule(FamilyPtr family, Vertex vertex, const SparseVec& generator)
    : family_(std::move(family)), vertex_(std::move(vertex)) {
  build(generator);
}

void CellModule::build(const SparseVec& generator) {
  const TowerKind kind = family_->kind();
  const Lattice lat = lattice_for(kind);
  if (!is_valid_vertex(lat, vertex_)) throw InvalidVertex("not a vertex of the " + tower_name(kind) + " lattice: " + vertex_.to_string());
  tower_ = family_->at(vertex_.n);
  through_ = through_strands(kind, vertex_);
  paths_ = towerlab::paths(lat, vertex_);
  if (kind == TowerKind::Sym || kind == TowerKind::Hecke) provenance_ = Provenance::Murphy;
  else provenance_ = through_ == vertex_.n ? Provenance::Inflated : Provenance::Induced;

  const auto gens = tower_->generators();
  const std::size_t ambient = tower_->dim();
  auto closure = [&](const std::vector<SparseVec>& seeds, EchelonBasis& span, std::vector<SparseVec>* kept) {
    std::vector<SparseVec> frontier;
    for (const auto& s : seeds) {
      SparseVec p = project(s);
      if (span.insert(p)) {
        if (kept) kept->push_back(p);
        frontier.push_back(std::move(p));
      }
    }
    while (!frontier.empty()) {
      std::vector<SparseVec> next;
      for (const auto& v : frontier)
        for (const auto& g : gens) {
          SparseVec w = project(tower_->left_generator(g, v));
          if (span.insert(w)) {
            if (kept) kept->push_back(w);
            next.push_back(std::move(w));
          }
        }
      frontier = std::move(next);
    }
  };

  SparseVec g = project(generator);
  generator_ = AlgebraElement(tower_, g);
  EchelonBasis left_span(ambient);
  std::vector<SparseVec> left_vectors;
  closure({g}, left_span, &left_vectors);

  // A' ∩ A_n g: semisimplicity gives I ∩ L = I L = A g_mu L for the ideals I of same-size
  // vertices above v; smaller vertices are removed by project().
  std::vector<SparseVec> seeds;
  for (const auto& w : level_vertices(lat, vertex_.n)) {
    if (through_strands(kind, w) != through_ || compare_vertices(w, vertex_) != Cmp::Greater) continue;
    SparseVec gw = cell_generator(*family_, w);
    for (const auto& l : left_vectors) seeds.push_back(tower_->multiply(gw, l));
  }
  EchelonBasis upper(ambient);
  closure(seeds, upper, nullptr);

  echelon_ = EchelonBasis(ambient);
  for (const auto& row : upper.rows()) echelon_.insert(row);
  for (const auto& l : left_vectors)
    if (echelon_.insert(l, SparseVec::unit(static_cast<std::uint32_t>(basis_.size())))) basis_.push_back(l);
  if (basis_.size() != paths_.size())
    throw SingularSystem("cell module " + vertex_.to_string() + " has dimension " + std::to_string(basis_.size()) +
                             " but " + std::to_string(paths_.size()) + " paths");
}

SparseVec CellModule::project(SparseVec v) const {
  if (through_ == 0) return v;
  std::vector<SparseVec::Entry> out;
  for (const auto& [i, c] : v)
    if (tower_->label(i).through_strands() >= through_) out.emplace_back(i, c);
  return SparseVec::from_entries(std::move(out));
}

SparseVec CellModule::reduce_column(const SparseVec& x) const {
  auto red = echelon_.reduce(project(x));
  if (!red.residual.empty()) throw std::logic_error("element left the cyclic module " + vertex_.to_string());
  return red.tag;
}

std::vector<Scalar> CellModule::coordinates(const SparseVec& x) const {
  std::vector<Scalar> out(dim());
  for (const auto& [i, c] : reduce_column(x)) out[i] = c;
  return out;
}

const Matrix& CellModule::generator_action(const Generator& g) const {
  const auto key = std::make_pair(g.kind, g.index);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = actions_.find(key);
    if (it != actions_.end()) return it->second;
  }
  Matrix m(dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j)
    for (const auto& [i, c] : reduce_column(tower_->left_generator(g, basis_[j]))) m(i, j) = c;
  std::lock_guard<std::mutex> lock(mu_);
  return actions_.emplace(key, std::move(m)).first->second;
}

Matrix CellModule::action_matrix(const AlgebraElement& a) const {
  if (a.rank() != vertex_.n) throw RankMismatch("element rank differs from the module level");
  if (a.tower()->kind() != tower_->kind() || a.tower()->params_ptr() != tower_->params_ptr())
    throw TowerMismatch("element belongs to another tower");
  Matrix m(dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j)
    for (const auto& [i, c] : reduce_column(tower_->multiply(a.coeffs(), basis_[j]))) m(i, j) = c;
  return m;
}

CellModule murphy_cell_module(FamilyPtr family, const Partition& lambda) {
  if (family->kind() != TowerKind::Sym && family->kind() != TowerKind::Hecke)
    throw TowerMismatch("Murphy modules are built for Sym and Hecke");
  return CellModule(std::move(family), Vertex{lambda, partition_size(lambda)});
}

std::optional<Intertwiner> find_intertwiner(const std::vector<Matrix>& a, const std::vector<Matrix>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("action lists differ in length");
  if (a.empty()) return std::nullopt;
  const std::size_t d1 = a.front().rows(), d2 = b.front().rows();
  if (d1 == 0 || d2 == 0) return std::nullopt;

  // Spin a vector of the first module; X is fixed by the image u of that vector.
  for (std::size_t start = 0; start < d1; ++start) {
    std::vector<std::vector<Scalar>> vecs;
    std::vector<Matrix> words;  // matching word evaluated in the second module
    EchelonBasis span(d1);
    std::vector<Scalar> e(d1);
    e[start] = Scalar(1);
    span.insert(column_vector(e), SparseVec::unit(0));
    vecs.push_back(e);
    words.push_back(Matrix::identity(d2));
    for (std::size_t k = 0; k < vecs.size(); ++k)
      for (std::size_t g = 0; g < a.size(); ++g) {
        auto w = apply_matrix(a[g], vecs[k]);
        if (span.insert(column_vector(w), SparseVec::unit(static_cast<std::uint32_t>(vecs.size())))) {
          vecs.push_back(std::move(w));
          words.push_back(b[g] * words[k]);
        }
      }
    if (vecs.size() < d1) continue;

    std::vector<std::vector<Scalar>> rows;
    for (std::size_t k = 0; k < vecs.size(); ++k)
      for (std::size_t g = 0; g < a.size(); ++g) {
        auto red = span.reduce(column_vector(apply_matrix(a[g], vecs[k])));
        Matrix cond = b[g] * words[k];
        for (const auto& [m, c] : red.tag) cond = cond - words[m].scaled(c);
        for (std::size_t r = 0; r < d2; ++r) {
          std::vector<Scalar> row(d2);
          for (std::size_t c = 0; c < d2; ++c) row[c] = cond(r, c);
          rows.push_back(std::move(row));
        }
      }
    Matrix system(rows.size(), d2);
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t c = 0; c < d2; ++c) system(r, c) = rows[r][c];
    Matrix null = nullspace(system);
    if (null.cols() == 0) return std::nullopt;
    std::vector<Scalar> u = null.column(0);

    Matrix images(d2, d1), sources(d1, d1);
    for (std::size_t k = 0; k < d1; ++k) {
      auto img = apply_matrix(words[k], u);
      for (std::size_t r = 0; r < d2; ++r) images(r, k) = img[r];
      for (std::size_t r = 0; r < d1; ++r) sources(r, k) = vecs[k][r];
    }
    Intertwiner out;
    out.map = images * inverse(sources);
    out.invertible = d1 == d2 && rank(out.map) == d1;
    return out;
  }
  return std::nullopt;
}

CellModulePtr CellTheory::module(const Vertex& v) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = modules_.find(v);
    if (it != modules_.end()) return it->second;
  }
  auto m = std::make_shared<const CellModule>(family_, v);
  std::lock_guard<std::mutex> lock(mu_);
  return modules_.emplace(v, std::move(m)).first->second;
}

std::vector<CellModulePtr> CellTheory::level(int n) const {
  std::vector<CellModulePtr> out;
  for (const auto& v : level_vertices(lattice(), n)) out.push_back(module(v));
  return out;
}

const Matrix& CellTheory::representation_matrix(int n) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = representations_.find(n);
    if (it != representations_.end()) return it->second;
  }
  auto mods = level(n);
  auto tower = family_->at(n);
  std::size_t rows = 0;
  for (const auto& m : mods) rows += m->dim() * m->dim();
  Matrix rep(rows, tower->dim());
  for (std::uint32_t x = 0; x < tower->dim(); ++x) {
    AlgebraElement a(tower, SparseVec::unit(x));
    std::size_t offset = 0;
    for (const auto& m : mods) {
      Matrix act = m->action_matrix(a);
      for (std::size_t i = 0; i < m->dim(); ++i)
        for (std::size_t j = 0; j < m->dim(); ++j) rep(offset + i * m->dim() + j, x) = act(i, j);
      offset += m->dim() * m->dim();
    }
  }
  std::lock_guard<std::mutex> lock(mu_);
  return representations_.emplace(n, std::move(rep)).first->second;
}

std::vector<Matrix> CellTheory::represent(const AlgebraElement& a) const {
  if (a.tower()->kind() != family_->kind() || a.tower()->params_ptr() != family_->params_ptr())
    throw TowerMismatch("element belongs to another tower");
  const Matrix& rep = representation_matrix(a.rank());
  std::vector<Matrix> out;
  std::size_t offset = 0;
  for (const auto& m : level(a.rank())) {
    const std::size_t d = m->dim();
    Matrix act(d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        Scalar s;
        for (const auto& [x, c] : a.coeffs()) {
          const Scalar& r = rep(offset + i * d + j, x);
          if (!r.is_zero()) s += c * r;
        }
        act(i, j) = s;
      }
    out.push_back(std::move(act));
    offset += d * d;
  }
  return out;
}

const AlgebraElement& CellTheory::central_idempotent(const Vertex& v) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = idempotents_.find(v);
    if (it != idempotents_.end()) return it->second;
  }
  const int n = v.n;
  if (!is_valid_vertex(lattice(), v)) throw InvalidVertex("not a vertex: " + v.to_string());
  auto mods = level(n);
  auto tower = family_->at(n);
  const Matrix& rep = representation_matrix(n);
  if (rep.rows() != rep.cols()) throw SingularSystem("representation map is not square at level " + std::to_string(n));
  Matrix targets(rep.rows(), mods.size());
  std::size_t offset = 0;
  for (std::size_t k = 0; k < mods.size(); ++k) {
    const std::size_t d = mods[k]->dim();
    for (std::size_t i = 0; i < d; ++i) targets(offset + i * d + i, k) = Scalar(1);
    offset += d * d;
  }
  auto sol = solve(rep, targets);
  if (!sol) throw SingularSystem("representation map is singular at level " + std::to_string(n));
  std::lock_guard<std::mutex> lock(mu_);
  for (std::size_t k = 0; k < mods.size(); ++k) {
    std::vector<SparseVec::Entry> coeffs;
    for (std::uint32_t x = 0; x < tower->dim(); ++x)
      if (!(*sol)(x, k).is_zero()) coeffs.emplace_back(x, (*sol)(x, k));
    idempotents_.emplace(mods[k]->vertex(), AlgebraElement(tower, SparseVec::from_entries(std::move(coeffs))));
  }
  return idempotents_.at(v);
}

Matrix CellTheory::idempotent_action(const Vertex& v, const Vertex& lower) const {
  const auto key = std::make_pair(v, lower);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = idempotent_actions_.find(key);
    if (it != idempotent_actions_.end()) return it->second;
  }
  if (lower.n > v.n) throw RankMismatch("idempotent level above the module level");
  Matrix m = module(v)->action_matrix(family_->include(central_idempotent(lower), v.n));
  std::lock_guard<std::mutex> lock(mu_);
  return idempotent_actions_.emplace(key, std::move(m)).first->second;
}

std::vector<RestrictionPiece> CellTheory::restriction_filtration(const Vertex& v) const {
  if (v.n < 1) throw InvalidVertex("restriction needs level at least 1");
  auto mod = module(v);
  auto lower_tower = family_->at(v.n - 1);
  std::vector<RestrictionPiece> out;
  for (const auto& mu : level_vertices(lattice(), v.n - 1)) {
    Matrix z = idempotent_action(v, mu);
    const std::size_t r = rank(z);
    if (r == 0) continue;
    RestrictionPiece piece;
    piece.vertex = mu;
    piece.basis = column_basis(z);
    auto sub = module(mu);
    piece.multiplicity = r % sub->dim() == 0 ? r / sub->dim() : 0;
    if (r == sub->dim()) {
      std::vector<Matrix> restricted, target;
      for (const auto& g : lower_tower->generators()) {
        auto c = solve(piece.basis, mod->generator_action(g) * piece.basis);
        if (!c) throw std::logic_error("idempotent image is not a submodule");
        restricted.push_back(*c);
        target.push_back(sub->generator_action(g));
      }
      if (restricted.empty()) {
        piece.isomorphism_verified = true;
      } else {
        auto x = find_intertwiner(restricted, target);
        piece.isomorphism_verified = x && x->invertible;
      }
    }
    out.push_back(std::move(piece));
  }
  return out;
}

const PathBasis& CellTheory::path_basis(const Vertex& v) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = path_bases_.find(v);
    if (it != path_bases_.end()) return it->second;
  }
  auto mod = module(v);
  const std::size_t d = mod->dim();
  PathBasis pb;
  pb.paths = mod->paths();
  pb.change = Matrix(d, d);
  // The vector of t spans z_{t(n-1)} ... z_{t(1)} Δ: at every level the lift of the restriction
  // subquotient is the image of its central idempotent.
  for (std::size_t k = 0; k < d; ++k) {
    const Path& t = pb.paths[k];
    Matrix proj = Matrix::identity(d);
    for (int j = v.n - 1; j >= 2; --j) proj = idempotent_action(v, t[j]) * proj;
    std::optional<std::size_t> col;
    for (std::size_t c = 0; c < d && !col; ++c)
      for (std::size_t r = 0; r < d; ++r)
        if (!proj(r, c).is_zero()) {
          col = c;
          break;
        }
    if (!col) throw SingularSystem("path " + path_to_string(t) + " has a vanishing projector");
    for (std::size_t r = 0; r < d; ++r) pb.change(r, k) = proj(r, *col);
  }
  pb.inverse = inverse(pb.change);
  std::lock_guard<std::mutex> lock(mu_);
  return path_bases_.emplace(v, std::move(pb)).first->second;
}

}  // namespace towerlab

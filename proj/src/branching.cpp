#include "towerlab/branching.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "towerlab/errors.hpp"

namespace towerlab {

int partition_size(const Partition& p) {
  return std::accumulate(p.begin(), p.end(), 0);
}

bool is_partition(const Partition& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0) return false;
    if (i && p[i] > p[i - 1]) return false;
  }
  return true;
}

bool dominates(const Partition& a, const Partition& b) {
  int sa = 0, sb = 0;
  for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
    sa += i < a.size() ? a[i] : 0;
    sb += i < b.size() ? b[i] : 0;
    if (sa < sb) return false;
  }
  return true;
}

namespace {

void partitions_rec(int remaining, int max_part, Partition& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  Partition cur;
  partitions_rec(n, n, cur, out);
  return out;
}

std::string partition_to_string(const Partition& p) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
  os << ")";
  return os.str();
}

std::vector<int> contents(const Partition& p) {
  std::vector<int> c;
  for (int r = 0; r < static_cast<int>(p.size()); ++r)
    for (int col = 0; col < p[r]; ++col) c.push_back(col - r);
  return c;
}

int content_sum(const Partition& p) {
  auto c = contents(p);
  return std::accumulate(c.begin(), c.end(), 0);
}

std::string Vertex::to_string() const {
  return partition_to_string(lambda) + "@" + std::to_string(n);
}

Lattice lattice_for(TowerKind kind) {
  switch (kind) {
    case TowerKind::Brauer:
    case TowerKind::BMW: return Lattice::Reflection;
    case TowerKind::TL: return Lattice::TwoColumn;
    default: return Lattice::Young;
  }
}

bool is_valid_vertex(Lattice kind, const Vertex& v) {
  if (v.n < 0 || !is_partition(v.lambda)) return false;
  int k = v.k();
  switch (kind) {
    case Lattice::Young: return k == v.n;
    case Lattice::TwoColumn: return k == v.n && (v.lambda.empty() || v.lambda[0] <= 2);
    case Lattice::Reflection: return k <= v.n && (v.n - k) % 2 == 0;
  }
  return false;
}

namespace {

std::vector<Partition> add_box(const Partition& p) {
  std::vector<Partition> out;
  for (std::size_t r = 0; r <= p.size(); ++r) {
    int len = r < p.size() ? p[r] : 0;
    if (r > 0 && p[r - 1] <= len) continue;
    Partition q = p;
    if (r < q.size()) ++q[r];
    else q.push_back(1);
    out.push_back(std::move(q));
  }
  return out;
}

std::vector<Partition> remove_box(const Partition& p) {
  std::vector<Partition> out;
  for (std::size_t r = 0; r < p.size(); ++r) {
    if (r + 1 < p.size() && p[r + 1] == p[r]) continue;
    Partition q = p;
    if (--q[r] == 0) q.pop_back();
    out.push_back(std::move(q));
  }
  return out;
}

}  // namespace

std::vector<Vertex> edges(Lattice kind, const Vertex& v) {
  if (!is_valid_vertex(kind, v)) throw InvalidVertex("invalid vertex " + v.to_string());
  std::vector<Vertex> out;
  for (auto& q : add_box(v.lambda)) {
    if (kind == Lattice::TwoColumn && q[0] > 2) continue;
    out.push_back({q, v.n + 1});
  }
  if (kind == Lattice::Reflection)
    for (auto& q : remove_box(v.lambda)) out.push_back({q, v.n + 1});
  std::sort(out.begin(), out.end(), linear_greater);
  return out;
}

std::vector<Vertex> level_vertices(Lattice kind, int n) {
  std::vector<Vertex> out;
  for (int k = n; k >= 0; --k) {
    if (kind != Lattice::Reflection && k != n) continue;
    if ((n - k) % 2) continue;
    for (auto& p : partitions_of(k)) {
      Vertex v{p, n};
      if (is_valid_vertex(kind, v)) out.push_back(v);
    }
  }
  std::sort(out.begin(), out.end(), linear_greater);
  return out;
}

Vertex tl_vertex(int k, int n) {
  if (k < 0 || k > n || (n - k) % 2) throw InvalidVertex("invalid TL vertex");
  Partition p((n - k) / 2, 2);
  p.insert(p.end(), k, 1);
  return {p, n};
}

int tl_through(const Vertex& v) {
  return static_cast<int>(std::count(v.lambda.begin(), v.lambda.end(), 1));
}

std::string path_to_string(const Path& p) {
  std::ostringstream os;
  for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << partition_to_string(p[i].lambda);
  return os.str();
}

Cmp compare_vertices(const Vertex& a, const Vertex& b) {
  if (a == b) return Cmp::Equal;
  int ka = a.k(), kb = b.k();
  if (ka != kb) return ka < kb ? Cmp::Greater : Cmp::Less;
  bool ab = dominates(a.lambda, b.lambda), ba = dominates(b.lambda, a.lambda);
  if (ab) return Cmp::Greater;
  if (ba) return Cmp::Less;
  return Cmp::Incomparable;
}

bool linear_greater(const Vertex& a, const Vertex& b) {
  if (a.n != b.n) return a.n < b.n;
  int ka = a.k(), kb = b.k();
  if (ka != kb) return ka < kb;
  return a.lambda > b.lambda;  // lexicographic order refines dominance
}

Cmp compare_paths(const Path& s, const Path& t, PathOrder order) {
  if (s.size() != t.size()) throw LengthMismatch("paths have different lengths");
  if (order == PathOrder::Dominance) {
    bool all_ge = true, all_le = true;
    for (std::size_t i = 0; i < s.size(); ++i) {
      Cmp c = compare_vertices(s[i], t[i]);
      if (c == Cmp::Incomparable) return Cmp::Incomparable;
      if (c == Cmp::Less) all_ge = false;
      if (c == Cmp::Greater) all_le = false;
    }
    if (all_ge && all_le) return Cmp::Equal;
    if (all_ge) return Cmp::Greater;
    if (all_le) return Cmp::Less;
    return Cmp::Incomparable;
  }
  for (std::size_t i = s.size(); i-- > 0;)
    if (s[i] != t[i]) return compare_vertices(s[i], t[i]);
  return Cmp::Equal;
}

bool path_linear_greater(const Path& s, const Path& t) {
  for (std::size_t i = s.size(); i-- > 0;)
    if (s[i] != t[i]) return linear_greater(s[i], t[i]);
  return false;
}

namespace {

void extend_paths(Lattice kind, Path& cur, const Vertex& target, std::vector<Path>& out) {
  const Vertex& last = cur.back();
  if (last.n == target.n) {
    if (last == target) out.push_back(cur);
    return;
  }
  int remaining = target.n - last.n;
  for (auto& next : edges(kind, last)) {
    // Prune: the partition size changes by one per step.
    if (std::abs(next.k() - target.k()) > remaining - 1) continue;
    cur.push_back(next);
    extend_paths(kind, cur, target, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Path> paths(Lattice kind, const Vertex& target) {
  if (!is_valid_vertex(kind, target)) throw InvalidVertex("invalid vertex " + target.to_string());
  static std::mutex mu;
  static std::map<std::pair<int, Vertex>, std::vector<Path>> cache;
  auto key = std::make_pair(static_cast<int>(kind), target);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  std::vector<Path> out;
  Path cur{Vertex{{}, 0}};
  extend_paths(kind, cur, target, out);
  std::sort(out.begin(), out.end(), path_linear_greater);
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(key, out);
  return out;
}

std::vector<Path> all_paths(Lattice kind, int n) {
  std::vector<Path> out;
  for (auto& v : level_vertices(kind, n)) {
    auto ps = paths(kind, v);
    out.insert(out.end(), ps.begin(), ps.end());
  }
  return out;
}

namespace {

// The box distinguishing two partitions that differ by exactly one box.
int changed_box_content(const Partition& small, const Partition& big) {
  for (std::size_t r = 0; r < big.size(); ++r) {
    int s = r < small.size() ? small[r] : 0;
    if (s != big[r]) return (big[r] - 1) - static_cast<int>(r);
  }
  throw InvalidVertex("partitions do not differ by one box");
}

}  // namespace

Scalar step_scalar(const Params& params, const Vertex& from, const Vertex& to) {
  bool added = to.k() == from.k() + 1;
  if (!added && to.k() != from.k() - 1) throw InvalidVertex("not an edge");
  int c = added ? changed_box_content(from.lambda, to.lambda) : changed_box_content(to.lambda, from.lambda);
  switch (params.kind) {
    case TowerKind::Sym: return Scalar(c);
    case TowerKind::Brauer: return added ? Scalar(c) : Scalar(1) - params.delta - Scalar(c);
    case TowerKind::BMW:
      return added ? params.hecke_q.pow(c) : params.rho.pow(-2) * params.hecke_q.pow(-c);
    default: return params.hecke_q.pow(c);
  }
}

Scalar kappa(const Params& params, const Path& t, int j) {
  if (j < 1 || j >= static_cast<int>(t.size())) throw IndexOutOfRange("path index out of range");
  return step_scalar(params, t[j - 1], t[j]);
}

Scalar alpha(const Params& params, const Partition& lambda) {
  int s = content_sum(lambda);
  if (params.kind == TowerKind::Sym || params.kind == TowerKind::Brauer) return Scalar(s);
  return params.hecke_q.pow(s);
}

Scalar beta(const Params& params, const Vertex& v) {
  if (params.kind != TowerKind::Ground && !is_valid_vertex(lattice_for(params.kind), v))
    throw InvalidVertex("not a vertex of the " + tower_name(params.kind) + " lattice: " + v.to_string());
  int half = (v.n - v.k()) / 2;
  switch (params.kind) {
    case TowerKind::Brauer: return Scalar(half) * (Scalar(1) - params.delta) + alpha(params, v.lambda);
    case TowerKind::BMW: return params.rho.pow(-2 * half) * alpha(params, v.lambda);
    default: return alpha(params, v.lambda);
  }
}

}  // namespace towerlab

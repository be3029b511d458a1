#include "towerlab/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "towerlab/errors.hpp"

namespace towerlab {

Permutation identity_permutation(int n) {
  Permutation w(n);
  std::iota(w.begin(), w.end(), 0);
  return w;
}

Permutation compose_perm(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw RankMismatch("permutation sizes differ");
  Permutation r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[b[i]];
  return r;
}

Permutation inverse_perm(const Permutation& w) {
  Permutation r(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) r[w[i]] = static_cast<int>(i);
  return r;
}

int perm_length(const Permutation& w) {
  int l = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) ++l;
  return l;
}

std::vector<int> reduced_word(const Permutation& w) {
  // Peel right descents: if w(i) > w(i+1) then w = (w s_i) s_i with shorter w s_i.
  Permutation v = w;
  std::vector<int> word;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
      if (v[i] > v[i + 1]) {
        std::swap(v[i], v[i + 1]);
        word.push_back(static_cast<int>(i) + 1);
        changed = true;
        break;
      }
    }
  }
  std::reverse(word.begin(), word.end());
  return word;
}

Permutation simple_transposition(int i, int n) {
  if (i < 1 || i >= n) throw IndexOutOfRange("transposition index out of range");
  Permutation w = identity_permutation(n);
  std::swap(w[i - 1], w[i]);
  return w;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  Permutation w = identity_permutation(n);
  do {
    out.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

std::string perm_to_string(const Permutation& w) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i] + 1;
  os << "]";
  return os.str();
}

BrauerDiagram::BrauerDiagram(std::vector<std::uint8_t> mate) : mate_(std::move(mate)) {
  if (mate_.size() % 2) throw std::invalid_argument("diagram needs an even number of vertices");
  for (std::size_t v = 0; v < mate_.size(); ++v) {
    if (mate_[v] >= mate_.size() || mate_[v] == v || mate_[mate_[v]] != v)
      throw std::invalid_argument("not a perfect matching");
  }
}

BrauerDiagram BrauerDiagram::identity(int n) {
  std::vector<std::uint8_t> m(2 * n);
  for (int i = 0; i < n; ++i) {
    m[i] = static_cast<std::uint8_t>(n + i);
    m[n + i] = static_cast<std::uint8_t>(i);
  }
  return BrauerDiagram(std::move(m));
}

BrauerDiagram BrauerDiagram::from_pairs(int n, const std::vector<std::pair<int, int>>& pairs) {
  std::vector<std::uint8_t> m(2 * n, 0xff);
  for (auto [a, b] : pairs) {
    if (a < 0 || b < 0 || a >= 2 * n || b >= 2 * n || m[a] != 0xff || m[b] != 0xff)
      throw std::invalid_argument("invalid pair list");
    m[a] = static_cast<std::uint8_t>(b);
    m[b] = static_cast<std::uint8_t>(a);
  }
  return BrauerDiagram(std::move(m));
}

BrauerDiagram BrauerDiagram::from_permutation(const Permutation& w) {
  int n = static_cast<int>(w.size());
  std::vector<std::uint8_t> m(2 * n);
  for (int i = 0; i < n; ++i) {
    m[i] = static_cast<std::uint8_t>(n + w[i]);
    m[n + w[i]] = static_cast<std::uint8_t>(i);
  }
  return BrauerDiagram(std::move(m));
}

int BrauerDiagram::through_strands() const {
  int n = rank(), t = 0;
  for (int i = 0; i < n; ++i)
    if (mate_[i] >= n) ++t;
  return t;
}

Permutation BrauerDiagram::to_permutation() const {
  if (!is_permutation()) throw std::logic_error("diagram is not a permutation");
  int n = rank();
  Permutation w(n);
  for (int i = 0; i < n; ++i) w[i] = mate_[i] - n;
  return w;
}

std::vector<std::pair<int, int>> BrauerDiagram::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int v = 0; v < static_cast<int>(mate_.size()); ++v)
    if (v < mate_[v]) out.emplace_back(v, mate_[v]);
  return out;
}

std::string BrauerDiagram::to_string() const {
  int n = rank();
  auto name = [n](int v) { return v < n ? "t" + std::to_string(v + 1) : "b" + std::to_string(v - n + 1); };
  std::ostringstream os;
  os << "[";
  bool first = true;
  for (auto [a, b] : pairs()) {
    os << (first ? "" : ",") << "(" << name(a) << "," << name(b) << ")";
    first = false;
  }
  os << "]";
  return os.str();
}

std::size_t BrauerDiagram::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (auto x : mate_) h = (h ^ x) * 1099511628211ull;
  return h;
}

Composition compose(const BrauerDiagram& a, const BrauerDiagram& b) {
  if (a.rank() != b.rank()) throw RankMismatch("compose: ranks differ");
  const int n = a.rank();
  std::vector<bool> middle_seen(n, false);
  std::vector<std::uint8_t> result(2 * n, 0xff);

  // Walk from an outer endpoint until the strand exits at another outer endpoint.
  // in_b: currently inside b having arrived at vertex v of b; otherwise inside a.
  auto walk = [&](bool in_b, int v) {
    while (true) {
      if (in_b) {
        int u = b.mate(v);
        if (u < n) return u;  // top of result
        middle_seen[u - n] = true;
        in_b = false;
        v = u - n;  // a's top
      } else {
        int u = a.mate(v);
        if (u >= n) return u;  // bottom of result
        middle_seen[u] = true;
        in_b = true;
        v = n + u;  // b's bottom
      }
    }
  };

  for (int x = 0; x < n; ++x) {
    if (result[x] != 0xff) continue;
    int end = walk(true, x);
    result[x] = static_cast<std::uint8_t>(end);
    result[end] = static_cast<std::uint8_t>(x);
  }
  for (int x = n; x < 2 * n; ++x) {
    if (result[x] != 0xff) continue;
    int end = walk(false, x);
    result[x] = static_cast<std::uint8_t>(end);
    result[end] = static_cast<std::uint8_t>(x);
  }
  int loops = 0;
  for (int m = 0; m < n; ++m) {
    if (middle_seen[m]) continue;
    ++loops;
    int cur = m;
    while (!middle_seen[cur]) {
      middle_seen[cur] = true;
      int u = a.mate(cur);  // a top -> a top
      middle_seen[u] = true;
      cur = b.mate(n + u) - n;  // b bottom -> b bottom
    }
  }
  return {BrauerDiagram(std::move(result)), loops};
}

bool is_planar(const BrauerDiagram& d) {
  int n = d.rank();
  auto pos = [n](int v) { return v < n ? v : 3 * n - 1 - v; };
  std::vector<std::pair<int, int>> arcs;
  for (auto [a, b] : d.pairs()) {
    int p = pos(a), q = pos(b);
    arcs.emplace_back(std::min(p, q), std::max(p, q));
  }
  for (std::size_t i = 0; i < arcs.size(); ++i)
    for (std::size_t j = i + 1; j < arcs.size(); ++j) {
      auto [a, b] = arcs[i];
      auto [c, e] = arcs[j];
      if ((a < c && c < b && b < e) || (c < a && a < e && e < b)) return false;
    }
  return true;
}

BrauerDiagram flip(const BrauerDiagram& d) {
  int n = d.rank();
  std::vector<std::uint8_t> m(2 * n);
  auto swap_side = [n](int v) { return v < n ? v + n : v - n; };
  for (int v = 0; v < 2 * n; ++v) m[swap_side(v)] = static_cast<std::uint8_t>(swap_side(d.mate(v)));
  return BrauerDiagram(std::move(m));
}

BrauerDiagram generator_diagram(DiagramKind kind, int j, int n) {
  if (kind == DiagramKind::Id) return BrauerDiagram::identity(n);
  if (j < 1 || j >= n) throw IndexOutOfRange("generator index out of range");
  int i = j - 1;
  if (kind == DiagramKind::S) return BrauerDiagram::from_permutation(simple_transposition(j, n));
  std::vector<std::pair<int, int>> pairs{{i, i + 1}, {n + i, n + i + 1}};
  for (int k = 0; k < n; ++k)
    if (k != i && k != i + 1) pairs.emplace_back(k, n + k);
  return BrauerDiagram::from_pairs(n, pairs);
}

BrauerDiagram extend(const BrauerDiagram& d, int m) {
  int n = d.rank();
  if (m < n) throw RankMismatch("cannot extend to a smaller rank");
  auto remap = [n, m](int v) { return v < n ? v : v - n + m; };
  std::vector<std::uint8_t> out(2 * m);
  for (int v = 0; v < 2 * n; ++v) out[remap(v)] = static_cast<std::uint8_t>(remap(d.mate(v)));
  for (int k = n; k < m; ++k) {
    out[k] = static_cast<std::uint8_t>(m + k);
    out[m + k] = static_cast<std::uint8_t>(k);
  }
  return BrauerDiagram(std::move(out));
}

namespace {

void matchings(std::vector<std::uint8_t>& m, std::vector<BrauerDiagram>& out) {
  int first = -1;
  for (std::size_t v = 0; v < m.size(); ++v)
    if (m[v] == 0xff) {
      first = static_cast<int>(v);
      break;
    }
  if (first < 0) {
    out.emplace_back(m);
    return;
  }
  for (std::size_t w = first + 1; w < m.size(); ++w) {
    if (m[w] != 0xff) continue;
    m[first] = static_cast<std::uint8_t>(w);
    m[w] = static_cast<std::uint8_t>(first);
    matchings(m, out);
    m[first] = m[w] = 0xff;
  }
}

}  // namespace

std::vector<BrauerDiagram> all_brauer_diagrams(int n) {
  std::vector<BrauerDiagram> out;
  std::vector<std::uint8_t> m(2 * n, 0xff);
  matchings(m, out);
  return out;
}

std::vector<BrauerDiagram> planar_diagrams(int n) {
  std::vector<BrauerDiagram> out;
  for (auto& d : all_brauer_diagrams(n))
    if (is_planar(d)) out.push_back(std::move(d));
  return out;
}

}  // namespace towerlab

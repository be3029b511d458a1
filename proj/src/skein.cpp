#include "towerlab/skein.hpp"

#include <algorithm>
#include <unordered_map>

#include "towerlab/errors.hpp"

namespace towerlab {

void RawTangle::set(int port, int to) {
  if (port >= 0) xs_[port >> 2].link[port & 3] = to;
  else boundary_[-1 - port] = to;
}

RawTangle RawTangle::from_layers(int n, const std::vector<Layer>& layers, int free_loops) {
  RawTangle t;
  t.n_ = n;
  t.loops_ = free_loops;
  t.boundary_.assign(2 * n, 0);
  // Cups are modelled as joints (two internally connected ports) and spliced out at the end.
  std::unordered_map<int, int> link;
  const int joint_base = -1 - 2 * n;
  int joints = 0;
  auto connect = [&](int a, int b) {
    link[a] = b;
    link[b] = a;
  };
  std::vector<int> dangling(n);
  for (int x = 0; x < n; ++x) dangling[x] = -1 - x;
  for (const auto& layer : layers) {
    int i = layer.pos - 1;
    if (i < 0 || i + 1 >= n) throw IndexOutOfRange("layer position out of range");
    if (layer.kind == 'x') {
      int c = static_cast<int>(t.xs_.size());
      t.xs_.push_back(Crossing{{}, layer.positive, true});
      connect(dangling[i], 4 * c + 0);
      connect(dangling[i + 1], 4 * c + 3);
      dangling[i] = 4 * c + 1;
      dangling[i + 1] = 4 * c + 2;
    } else {
      connect(dangling[i], dangling[i + 1]);
      int j = joints++;
      dangling[i] = joint_base - 2 * j;
      dangling[i + 1] = joint_base - 2 * j - 1;
    }
  }
  for (int x = 0; x < n; ++x) connect(dangling[x], -1 - (n + x));
  for (int j = 0; j < joints; ++j) {
    int a0 = joint_base - 2 * j, a1 = a0 - 1;
    int p = link.at(a0), q = link.at(a1);
    if (p == a1) {
      ++t.loops_;
    } else {
      link[p] = q;
      link[q] = p;
    }
    link.erase(a0);
    link.erase(a1);
  }
  for (std::size_t c = 0; c < t.xs_.size(); ++c)
    for (int s = 0; s < 4; ++s) t.xs_[c].link[s] = link.at(4 * static_cast<int>(c) + s);
  for (int b = 0; b < 2 * n; ++b) t.boundary_[b] = link.at(-1 - b);
  t.alive_ = static_cast<int>(t.xs_.size());
  return t;
}

void RawTangle::smooth(int c, bool id_smoothing) {
  std::array<int, 4> f = xs_[c].over02 ? std::array<int, 4>{0, 1, 2, 3} : std::array<int, 4>{1, 2, 3, 0};
  std::array<std::pair<int, int>, 2> joins = id_smoothing
      ? std::array<std::pair<int, int>, 2>{{{f[0], f[1]}, {f[2], f[3]}}}
      : std::array<std::pair<int, int>, 2>{{{f[0], f[3]}, {f[1], f[2]}}};
  for (auto [x, y] : joins) {
    int px = 4 * c + x, py = 4 * c + y;
    int a = get(px), b = get(py);
    if (a == py) {
      ++loops_;
    } else {
      set(a, b);
      set(b, a);
    }
  }
  xs_[c].alive = false;
  --alive_;
}

namespace {

enum class WalkMode { Split, Force, Inspect };

struct Walk {
  BrauerDiagram diagram;
  int writhe = 0;
  int closed = 0;
  std::vector<int> bad;
};

// Walks every strand: arcs in order of their smallest boundary point, then closed
// components. A crossing whose first visit is along the under strand is "bad".
Walk walk(RawTangle& t, WalkMode mode, std::vector<std::pair<RawTangle, Scalar>>* children,
          const Scalar& coeff, const Scalar& z) {
  const int n = t.rank();
  const int nx = static_cast<int>(t.crossings().size());
  std::vector<int> entry(nx, -1), comp_of(nx, -1);
  std::vector<std::array<bool, 2>> seen(nx, {false, false});
  std::vector<std::uint8_t> mate(2 * n);
  std::vector<bool> done(2 * n, false);
  Walk w;
  int comp = 0;

  auto pass = [&](int c, int s) {
    seen[c][s & 1] = true;
    if (entry[c] < 0) {
      bool over = ((s & 1) == 0) == t.crossings()[c].over02;
      if (!over) {
        if (mode == WalkMode::Split) {
          RawTangle a = t, b = t;
          a.smooth(c, true);
          b.smooth(c, false);
          children->emplace_back(std::move(a), coeff * z);
          children->emplace_back(std::move(b), -(coeff * z));
          t.switch_crossing(c);
        } else if (mode == WalkMode::Force) {
          t.switch_crossing(c);
        } else {
          w.bad.push_back(c);
        }
      }
      entry[c] = s;
      comp_of[c] = comp;
    } else if (comp_of[c] == comp) {
      w.writhe += (s == (entry[c] + 3) % 4) ? 1 : -1;
    }
  };

  for (int b = 0; b < 2 * n; ++b) {
    if (done[b]) continue;
    done[b] = true;
    int p = t.get(-1 - b);
    while (p >= 0) {
      int c = p >> 2, s = p & 3;
      pass(c, s);
      p = t.get(4 * c + ((s + 2) & 3));
    }
    int e = -1 - p;
    done[e] = true;
    mate[b] = static_cast<std::uint8_t>(e);
    mate[e] = static_cast<std::uint8_t>(b);
    ++comp;
  }
  for (int c = 0; c < nx; ++c) {
    if (!t.crossings()[c].alive) continue;
    for (int k = 0; k < 2; ++k) {
      if (seen[c][k]) continue;
      ++w.closed;
      const int start = 4 * c + k;
      int p = start;
      do {
        int cc = p >> 2, s = p & 3;
        pass(cc, s);
        p = t.get(4 * cc + ((s + 2) & 3));
      } while (p != start);
      ++comp;
    }
  }
  w.diagram = BrauerDiagram(std::move(mate));
  return w;
}

void accumulate(SkeinCombination& out, const BrauerDiagram& d, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = out.try_emplace(d, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) out.erase(it);
  }
}

}  // namespace

SkeinEvaluator::SkeinEvaluator(ParamsPtr params) : params_(std::move(params)) {
  z_ = params_->z();
  rho_ = params_->rho;
  delta_ = params_->delta;
}

SkeinCombination SkeinEvaluator::reduce(const RawTangle& t) const {
  SkeinCombination out;
  std::vector<std::pair<RawTangle, Scalar>> stack;
  stack.emplace_back(t, Scalar(1));
  while (!stack.empty()) {
    auto [cur, coeff] = std::move(stack.back());
    stack.pop_back();
    const int before = cur.crossing_count();
    std::vector<std::pair<RawTangle, Scalar>> children;
    Walk w = walk(cur, WalkMode::Split, &children, coeff, z_);
    accumulate(out, w.diagram, coeff * rho_.pow(w.writhe) * delta_.pow(w.closed + cur.free_loops()));
    for (auto& child : children) {
      if (child.first.crossing_count() >= before) throw NonTermination("smoothing did not remove a crossing");
      stack.push_back(std::move(child));
    }
  }
  return out;
}

SkeinCombination SkeinEvaluator::reduce_randomized(const RawTangle& t, std::mt19937& rng) const {
  SkeinCombination out;
  struct Item {
    RawTangle tangle;
    Scalar coeff;
    int crossings;
    int bad;
  };
  std::vector<Item> stack;
  stack.push_back({t, Scalar(1), t.crossing_count() + 1, 0});
  while (!stack.empty()) {
    Item item = std::move(stack.back());
    stack.pop_back();
    RawTangle cur = item.tangle;
    Walk w = walk(cur, WalkMode::Inspect, nullptr, item.coeff, z_);
    const int bad = static_cast<int>(w.bad.size());
    if (cur.crossing_count() > item.crossings ||
        (cur.crossing_count() == item.crossings && bad >= item.bad))
      throw NonTermination("rewrite measure did not decrease");
    if (w.bad.empty()) {
      accumulate(out, w.diagram, item.coeff * rho_.pow(w.writhe) * delta_.pow(w.closed + cur.free_loops()));
      continue;
    }
    int c = w.bad[std::uniform_int_distribution<int>(0, bad - 1)(rng)];
    RawTangle switched = cur, a = cur, b = cur;
    switched.switch_crossing(c);
    a.smooth(c, true);
    b.smooth(c, false);
    int nc = cur.crossing_count();
    stack.push_back({std::move(switched), item.coeff, nc, bad});
    stack.push_back({std::move(a), item.coeff * z_, nc, 0});
    stack.push_back({std::move(b), -(item.coeff * z_), nc, 0});
  }
  return out;
}

CanonicalLift canonical_lift(const BrauerDiagram& d) {
  const int n = d.rank();
  std::vector<int> through_tops;
  std::vector<std::pair<int, int>> top_caps, bottom_caps;
  for (auto [a, b] : d.pairs()) {
    if (a < n && b >= n) through_tops.push_back(a);
    else if (b < n) top_caps.emplace_back(a, b);
    else bottom_caps.emplace_back(a, b);
  }
  std::sort(through_tops.begin(), through_tops.end());
  const int k = static_cast<int>(through_tops.size());

  // Upper permutation: top point -> position entering the cap layer.
  std::vector<int> upper(n), lower(n);
  for (int i = 0; i < k; ++i) {
    upper[through_tops[i]] = i;
    lower[i] = d.mate(through_tops[i]) - n;
  }
  for (std::size_t j = 0; j < top_caps.size(); ++j) {
    upper[top_caps[j].first] = k + 2 * static_cast<int>(j);
    upper[top_caps[j].second] = k + 2 * static_cast<int>(j) + 1;
  }
  for (std::size_t j = 0; j < bottom_caps.size(); ++j) {
    lower[k + 2 * j] = bottom_caps[j].first - n;
    lower[k + 2 * j + 1] = bottom_caps[j].second - n;
  }

  CanonicalLift lift;
  auto sort_network = [&](const std::vector<int>& target) {
    std::vector<int> arr(n);
    for (int x = 0; x < n; ++x) arr[x] = x;
    bool changed = true;
    while (changed) {
      changed = false;
      for (int pos = 0; pos + 1 < n; ++pos) {
        if (target[arr[pos]] > target[arr[pos + 1]]) {
          std::swap(arr[pos], arr[pos + 1]);
          lift.layers.push_back({'x', pos + 1, true});
          changed = true;
        }
      }
    }
  };
  sort_network(upper);
  for (int j = k; j + 1 < n; j += 2) lift.layers.push_back({'e', j + 1, true});
  sort_network(lower);

  RawTangle t = RawTangle::from_layers(n, lift.layers);
  Walk w = walk(t, WalkMode::Force, nullptr, Scalar(1), Scalar(0));
  if (!(w.diagram == d)) throw std::logic_error("canonical lift has the wrong connectivity");
  lift.writhe = w.writhe;
  int c = 0;
  for (auto& layer : lift.layers)
    if (layer.kind == 'x') layer.positive = t.crossings()[c++].over02;
  return lift;
}

BmwTower::BmwTower(int n, ParamsPtr params) : Tower(TowerKind::BMW, n, params), eval_(params) {
  set_labels(all_brauer_diagrams(n));
  for (const auto& d : labels_) {
    lifts_.push_back(canonical_lift(d));
    framing_.push_back(params_->rho.pow(-lifts_.back().writhe));
  }
  const std::size_t slots = n > 1 ? 2 * static_cast<std::size_t>(n - 1) : 0;
  left_.assign(slots, std::vector<std::optional<SparseVec>>(dim()));
  right_.assign(slots, std::vector<std::optional<SparseVec>>(dim()));
  involution_.assign(dim(), std::nullopt);
}

SparseVec BmwTower::to_vector(const SkeinCombination& c) const {
  std::vector<SparseVec::Entry> out;
  for (const auto& [d, x] : c) out.emplace_back(index_of(d), x);
  return SparseVec::from_entries(std::move(out));
}

SparseVec BmwTower::reduce_drawing(const std::vector<Layer>& layers, int free_loops) const {
  return to_vector(eval_.reduce(RawTangle::from_layers(n_, layers, free_loops)));
}

const SparseVec& BmwTower::table(bool left, const Generator& g, std::uint32_t d) const {
  if (g.index < 1 || g.index >= n_) throw IndexOutOfRange("generator index out of range: " + g.name());
  std::size_t slot = 2 * static_cast<std::size_t>(g.index - 1) + (g.kind == 'e' ? 1 : 0);
  auto& cell = (left ? left_ : right_)[slot][d];
  {
    std::lock_guard<std::mutex> lock(mu_);
    if (cell) return *cell;
  }
  Layer gl{g.kind == 'e' ? 'e' : 'x', g.index, true};
  std::vector<Layer> layers;
  if (left) {
    layers = lifts_[d].layers;
    layers.push_back(gl);
  } else {
    layers.push_back(gl);
    layers.insert(layers.end(), lifts_[d].layers.begin(), lifts_[d].layers.end());
  }
  SparseVec v = reduce_drawing(layers).scaled(framing_[d]);
  std::lock_guard<std::mutex> lock(mu_);
  if (!cell) cell = std::move(v);
  return *cell;
}

SparseVec BmwTower::generator(const Generator& g) const {
  if (g.kind == 'G') return left_generator(g, one());
  return Tower::generator(g);
}

SparseVec BmwTower::left_generator(const Generator& g, const SparseVec& v) const {
  if (g.kind == 'G') {
    Generator gp{'g', g.index}, ge{'e', g.index};
    SparseVec r = left_generator(gp, v);
    r.axpy(-params_->z(), v);
    r.axpy(params_->z(), left_generator(ge, v));
    return r;
  }
  DenseAccumulator acc(dim());
  for (const auto& [d, c] : v) acc.add(table(true, g, d), c);
  return acc.take();
}

SparseVec BmwTower::right_generator(const SparseVec& v, const Generator& g) const {
  if (g.kind == 'G') {
    Generator gp{'g', g.index}, ge{'e', g.index};
    SparseVec r = right_generator(v, gp);
    r.axpy(-params_->z(), v);
    r.axpy(params_->z(), right_generator(v, ge));
    return r;
  }
  DenseAccumulator acc(dim());
  for (const auto& [d, c] : v) acc.add(table(false, g, d), c);
  return acc.take();
}

SparseVec BmwTower::apply_layer(const Layer& layer, const SparseVec& v) const {
  char kind = layer.kind == 'e' ? 'e' : (layer.positive ? 'g' : 'G');
  return left_generator(Generator{kind, layer.pos}, v);
}

SparseVec BmwTower::multiply(const SparseVec& a, const SparseVec& b) const {
  DenseAccumulator acc(dim());
  for (const auto& [d, c] : a) {
    SparseVec cur = b;
    for (const auto& layer : lifts_[d].layers) cur = apply_layer(layer, cur);
    acc.add(cur, c * framing_[d]);
  }
  return acc.take();
}

SparseVec BmwTower::involve(const SparseVec& a) const {
  DenseAccumulator acc(dim());
  for (const auto& [d, c] : a) {
    std::optional<SparseVec> cached;
    {
      std::lock_guard<std::mutex> lock(mu_);
      cached = involution_[d];
    }
    if (!cached) {
      SparseVec cur = one();
      const auto& layers = lifts_[d].layers;
      for (auto it = layers.rbegin(); it != layers.rend(); ++it) cur = apply_layer(*it, cur);
      cached = cur.scaled(framing_[d]);
      std::lock_guard<std::mutex> lock(mu_);
      involution_[d] = cached;
    }
    acc.add(*cached, c);
  }
  return acc.take();
}

SparseVec BmwTower::multiply_by_stacking(std::uint32_t a, std::uint32_t b) const {
  std::vector<Layer> layers = lifts_[b].layers;
  layers.insert(layers.end(), lifts_[a].layers.begin(), lifts_[a].layers.end());
  return reduce_drawing(layers).scaled(framing_[a] * framing_[b]);
}

TowerPtr make_bmw_tower(int n, ParamsPtr params) {
  return std::make_shared<BmwTower>(n, std::move(params));
}

}  // namespace towerlab

#pragma once

#include <array>
#include <map>
#include <mutex>
#include <optional>
#include <random>
#include <vector>

#include "towerlab/tower.hpp"

namespace towerlab {

// One horizontal slice of a layered tangle drawing. A crossing layer at pos swaps
// strands pos, pos+1 (1-based); positive means the strand from the upper left passes over.
struct Layer {
  char kind = 'x';  // 'x' crossing, 'e' cap-cup pair
  int pos = 1;
  bool positive = true;
};

// Planar-diagram form of an (n,n)-tangle. Crossing slots are numbered counterclockwise
// from the upper-left end (0 NW, 1 SW, 2 SE, 3 NE for a freshly drawn layer); the strand
// through slots 0-2 is over when over02 is set. Ports: 4*c+slot for crossings, -1-b for
// boundary point b (top x -> x, bottom x -> n+x).
class RawTangle {
 public:
  struct Crossing {
    std::array<int, 4> link{};
    bool over02 = true;
    bool alive = true;
  };

  // Layers are listed top to bottom.
  static RawTangle from_layers(int n, const std::vector<Layer>& layers, int free_loops = 0);

  int rank() const { return n_; }
  int crossing_count() const { return alive_; }
  int free_loops() const { return loops_; }
  const std::vector<Crossing>& crossings() const { return xs_; }

  int get(int port) const { return port >= 0 ? xs_[port >> 2].link[port & 3] : boundary_[-1 - port]; }
  void set(int port, int to);
  void switch_crossing(int c) { xs_[c].over02 = !xs_[c].over02; }
  // Replaces crossing c by its smoothing: id joins the over strand's start to the next slot
  // counterclockwise, e joins it to the previous one.
  void smooth(int c, bool id_smoothing);

 private:
  int n_ = 0;
  std::vector<Crossing> xs_;
  std::vector<int> boundary_;
  int loops_ = 0;
  int alive_ = 0;
};

using SkeinCombination = std::map<BrauerDiagram, Scalar>;

// Evaluates tangles in the BMW skein module on the basis of zero-framed descending lifts.
class SkeinEvaluator {
 public:
  explicit SkeinEvaluator(ParamsPtr params);
  // Deterministic strategy: walk strands in boundary order, switching each crossing first met
  // from below and branching off its two smoothings.
  SkeinCombination reduce(const RawTangle& t) const;
  // Resolves a randomly chosen offending crossing at each step.
  SkeinCombination reduce_randomized(const RawTangle& t, std::mt19937& rng) const;

 private:
  ParamsPtr params_;
  Scalar z_, rho_, delta_;
};

struct CanonicalLift {
  std::vector<Layer> layers;  // top to bottom, crossing signs forced descending
  int writhe = 0;             // self-crossing writhe of this drawing
};

// Layered drawing of d as (permutation) · (e_{k+1} e_{k+3} ...) · (permutation), made descending
// with respect to the order of strands by smallest endpoint.
CanonicalLift canonical_lift(const BrauerDiagram& d);

class BmwTower : public Tower {
 public:
  BmwTower(int n, ParamsPtr params);

  // generator, left_generator and right_generator also accept kind 'G' for g_i^-1.
  SparseVec generator(const Generator& g) const override;
  SparseVec multiply(const SparseVec& a, const SparseVec& b) const override;
  SparseVec left_generator(const Generator& g, const SparseVec& v) const override;
  SparseVec right_generator(const SparseVec& v, const Generator& g) const override;
  SparseVec involve(const SparseVec& a) const override;

  const CanonicalLift& lift(std::uint32_t i) const { return lifts_[i]; }
  const SkeinEvaluator& evaluator() const { return eval_; }
  SparseVec to_vector(const SkeinCombination& c) const;
  // Skein-reduces a drawing given top to bottom.
  SparseVec reduce_drawing(const std::vector<Layer>& layers, int free_loops = 0) const;
  // Product of two basis tangles by stacking their drawings (no tables involved).
  SparseVec multiply_by_stacking(std::uint32_t a, std::uint32_t b) const;

 private:
  const SparseVec& table(bool left, const Generator& g, std::uint32_t d) const;
  SparseVec apply_layer(const Layer& layer, const SparseVec& v) const;

  SkeinEvaluator eval_;
  std::vector<CanonicalLift> lifts_;
  std::vector<Scalar> framing_;  // rho^{-writhe}
  mutable std::mutex mu_;
  mutable std::vector<std::vector<std::optional<SparseVec>>> left_, right_;
  mutable std::vector<std::optional<SparseVec>> involution_;
};

}  // namespace towerlab

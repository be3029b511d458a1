#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace towerlab {

// One-line notation, 0-based: w[i] is the image of i.
using Permutation = std::vector<int>;

Permutation identity_permutation(int n);
// (a*b)(i) = a(b(i))
Permutation compose_perm(const Permutation& a, const Permutation& b);
Permutation inverse_perm(const Permutation& w);
int perm_length(const Permutation& w);
// Word i_1..i_l (1-based generator indices) with w = s_{i_1} ∘ ... ∘ s_{i_l}, l = length(w).
std::vector<int> reduced_word(const Permutation& w);
Permutation simple_transposition(int i, int n);  // swaps i-1 and i (1-based i)
std::vector<Permutation> all_permutations(int n);
std::string perm_to_string(const Permutation& w);

// Perfect matching on 2n boundary points. Vertex v < n is top v+1, v >= n is bottom v-n+1.
class BrauerDiagram {
 public:
  BrauerDiagram() = default;
  explicit BrauerDiagram(std::vector<std::uint8_t> mate);
  static BrauerDiagram identity(int n);
  static BrauerDiagram from_pairs(int n, const std::vector<std::pair<int, int>>& pairs);
  static BrauerDiagram from_permutation(const Permutation& w);

  int rank() const { return static_cast<int>(mate_.size() / 2); }
  int mate(int v) const { return mate_[v]; }
  const std::vector<std::uint8_t>& mates() const { return mate_; }
  int through_strands() const;
  bool is_permutation() const { return through_strands() == rank(); }
  Permutation to_permutation() const;
  // Canonical pair list, smaller vertex first, sorted.
  std::vector<std::pair<int, int>> pairs() const;
  std::string to_string() const;

  friend bool operator==(const BrauerDiagram& a, const BrauerDiagram& b) { return a.mate_ == b.mate_; }
  friend bool operator<(const BrauerDiagram& a, const BrauerDiagram& b) { return a.mate_ < b.mate_; }
  std::size_t hash() const;

 private:
  std::vector<std::uint8_t> mate_;
};

struct DiagramHash {
  std::size_t operator()(const BrauerDiagram& d) const { return d.hash(); }
};

struct Composition {
  BrauerDiagram diagram;
  int loops = 0;
};

// Product ab: b stacked over a. Top of the result is b's top, bottom is a's bottom.
Composition compose(const BrauerDiagram& a, const BrauerDiagram& b);
bool is_planar(const BrauerDiagram& d);
BrauerDiagram flip(const BrauerDiagram& d);

enum class DiagramKind { E, S, Id };
BrauerDiagram generator_diagram(DiagramKind kind, int j, int n);
// Appends vertical strands up to rank m.
BrauerDiagram extend(const BrauerDiagram& d, int m);

std::vector<BrauerDiagram> all_brauer_diagrams(int n);
std::vector<BrauerDiagram> planar_diagrams(int n);

}  // namespace towerlab

#pragma once

#include <string>
#include <vector>

#include "towerlab/params.hpp"

namespace towerlab {

using Partition = std::vector<int>;  // weakly decreasing positive parts

int partition_size(const Partition& p);
bool is_partition(const Partition& p);
// True when a dominates b (same size assumed); reflexive.
bool dominates(const Partition& a, const Partition& b);
std::vector<Partition> partitions_of(int n);
std::string partition_to_string(const Partition& p);
// Content (column - row) of each box, row by row.
std::vector<int> contents(const Partition& p);
int content_sum(const Partition& p);

struct Vertex {
  Partition lambda;
  int n = 0;
  friend bool operator==(const Vertex& a, const Vertex& b) { return a.n == b.n && a.lambda == b.lambda; }
  friend bool operator!=(const Vertex& a, const Vertex& b) { return !(a == b); }
  friend bool operator<(const Vertex& a, const Vertex& b) {
    return a.n != b.n ? a.n < b.n : a.lambda < b.lambda;
  }
  int k() const { return partition_size(lambda); }
  std::string to_string() const;
};

// Young: |lambda| = n, add a box. Reflection: add or remove a box.
// TwoColumn: Young restricted to shapes with at most two columns (Temperley-Lieb).
enum class Lattice { Young, Reflection, TwoColumn };

Lattice lattice_for(TowerKind kind);
bool is_valid_vertex(Lattice kind, const Vertex& v);
std::vector<Vertex> edges(Lattice kind, const Vertex& v);
// Vertices at level n, sorted descending in the fixed linear extension of the vertex order.
std::vector<Vertex> level_vertices(Lattice kind, int n);

// lambda(k,n) = (2^{(n-k)/2}, 1^k)
Vertex tl_vertex(int k, int n);
int tl_through(const Vertex& v);

using Path = std::vector<Vertex>;  // (empty,0), ..., target
std::string path_to_string(const Path& p);

enum class Cmp { Less, Greater, Equal, Incomparable };
enum class PathOrder { Dominance, Revlex };

// Partial order on vertices of one level: smaller |lambda| is greater, then dominance.
Cmp compare_vertices(const Vertex& a, const Vertex& b);
// Total order extending compare_vertices: ties broken lexicographically.
bool linear_greater(const Vertex& a, const Vertex& b);
Cmp compare_paths(const Path& s, const Path& t, PathOrder order);
// Total order on paths used for sorting (revlex with linear extension at the differing level).
bool path_linear_greater(const Path& s, const Path& t);

// All paths to target sorted descending (index 0 most dominant).
std::vector<Path> paths(Lattice kind, const Vertex& target);
// All paths of length n (any endpoint), grouped by endpoint in level_vertices order.
std::vector<Path> all_paths(Lattice kind, int n);

// Eigenvalue of L_j on the basis vector indexed by a path, from the edge t(j-1) -> t(j).
Scalar step_scalar(const Params& params, const Vertex& from, const Vertex& to);
Scalar kappa(const Params& params, const Path& t, int j);  // 1 <= j <= n
// Central scalar of the running product (multiplicative) or sum (additive) on the cell module.
Scalar beta(const Params& params, const Vertex& v);
// Quotient-level scalar: q^{sum of contents} (Hecke-type) or the content sum (Sym-type).
Scalar alpha(const Params& params, const Partition& lambda);

}  // namespace towerlab

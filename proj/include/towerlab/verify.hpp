#pragma once

#include <map>
#include <string>
#include <vector>

#include "towerlab/cellmod.hpp"

namespace towerlab {

enum class JmKind { Multiplicative, Additive };

// L_1..L_n of one tower, all living in A_n.
struct JMFamily {
  FamilyPtr family;
  int n = 0;
  JmKind kind = JmKind::Multiplicative;
  std::vector<AlgebraElement> elements;  // L_j at index j-1
  std::vector<Scalar> gamma;             // gamma_j at index j-1, j < n; empty without e_j
  std::vector<AlgebraElement> quotient;  // JM elements of the quotient tower at rank n

  const AlgebraElement& at(int j) const { return elements.at(j - 1); }
  // Product (multiplicative) or sum (additive) of L_1..L_n.
  AlgebraElement central_element() const;
};

JMFamily jm_elements(FamilyPtr family, int n);

struct Check {
  int n = 0;  // rank the check ran at
  std::string name;
  std::string vertex;  // empty when the check is not tied to a vertex
  bool pass = false;
  std::string witness;  // failing residual; empty on success
  double millis = 0;
};

struct VerificationReport {
  TowerKind tower = TowerKind::Sym;
  int n = 0;
  Mode mode = Mode::Symbolic;
  std::map<std::string, std::string> meta;
  std::vector<Check> checks;

  void add(std::string name, std::string vertex, bool pass, std::string witness = {}, double millis = 0);
  void merge(const VerificationReport& other);
  std::size_t passed() const;
  std::size_t failed() const;
  bool all_passed() const { return failed() == 0; }
};

// Interpolation idempotents F_t for all paths t of length n, as elements of A_n.
struct GZFamily {
  int n = 0;
  std::vector<Path> paths;
  std::vector<AlgebraElement> idempotents;
  std::map<Path, AlgebraElement> prefixes;  // F_s for the shorter paths s, also in A_n
};
// Throws SeparationFailure when two paths share their eigenvalue vector.
GZFamily gz_idempotents(const JMFamily& jm);

// Eigenvalue of L_j on the path vector of t.
Scalar jm_eigenvalue(const Params& params, const Path& t, int j);

VerificationReport verify_jm_family(const JMFamily& f);
VerificationReport verify_center_scalar(const CellTheory& theory, const JMFamily& f, const Vertex& v);
VerificationReport verify_triangularity_and_spectrum(const CellTheory& theory, const JMFamily& f, const Vertex& v);
VerificationReport verify_separation_and_gz(const CellTheory& theory, const JMFamily& f);
VerificationReport verify_framework_axioms(const TowerFamily& family, int n);
VerificationReport verify_branching_multiplicities(const CellTheory& theory, int n);
// Also checks the cell modules of the TL family attached to the same parameters.
VerificationReport verify_tl_hecke_bridge(FamilyPtr tl, int n);

}  // namespace towerlab

#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace towerlab {

inline constexpr int kMaxVars = 3;
using Exponents = std::array<int, kMaxVars>;

// Graded-lex: total degree first, then lexicographic with variable 0 most significant.
bool grlex_greater(const Exponents& a, const Exponents& b);

struct Term {
  Exponents exp{};
  mpq_class coeff;
};

// Sparse polynomial over Q in at most kMaxVars variables.
// Terms are kept sorted by descending grlex with no zero coefficients.
class MultiPoly {
 public:
  MultiPoly() = default;
  explicit MultiPoly(int nvars);

  static MultiPoly constant(int nvars, const mpq_class& c);
  static MultiPoly variable(int nvars, int index);
  static MultiPoly monomial(int nvars, const Exponents& e, const mpq_class& c);
  // Sorts and merges arbitrary terms.
  static MultiPoly from_terms(int nvars, std::vector<Term> terms);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Value of a constant polynomial (0 for the zero polynomial).
  mpq_class constant_value() const;
  const std::vector<Term>& terms() const { return terms_; }
  const Term& leading() const { return terms_.front(); }

  int degree_in(int var) const;
  int total_degree() const;
  // Sum of terms whose exponent in var equals power, with that exponent cleared.
  MultiPoly coefficient_in(int var, int power) const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly scaled(const mpq_class& c) const;
  MultiPoly shifted(const Exponents& e) const;  // multiply by a monomial

  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

  MultiPoly monic() const;
  mpq_class evaluate(const std::vector<mpq_class>& values) const;
  std::string to_string(const std::vector<std::string>& names) const;
  std::size_t hash() const;

 private:
  void normalize();
  int nvars_ = 0;
  std::vector<Term> terms_;
};

// Quotient a/b when b divides a exactly, otherwise nullopt.
std::optional<MultiPoly> try_divide(const MultiPoly& a, const MultiPoly& b);
// Exact division; throws std::logic_error when b does not divide a.
MultiPoly divide_exact(const MultiPoly& a, const MultiPoly& b);
// Monic greatest common divisor (leading grlex coefficient 1). gcd(0,0) = 0.
MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b);

}  // namespace towerlab

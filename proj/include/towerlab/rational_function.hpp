#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

#include "towerlab/poly.hpp"

namespace towerlab {

// Element of Q(x_0, ..., x_{k-1}) kept in lowest terms with a monic denominator.
// Constants take a fast path that never touches polynomial storage.
class RationalFunction {
 public:
  RationalFunction() = default;
  RationalFunction(long v) : c_(v) {}  // NOLINT(google-explicit-constructor)
  RationalFunction(const mpq_class& v) : c_(v) {}  // NOLINT(google-explicit-constructor)
  RationalFunction(const MultiPoly& num, const MultiPoly& den);

  static RationalFunction variable(int nvars, int index);

  bool is_zero() const { return !symbolic_ && c_ == 0; }
  bool is_one() const { return !symbolic_ && c_ == 1; }
  bool is_constant() const { return !symbolic_; }
  const mpq_class& constant_value() const;
  MultiPoly numerator() const;
  MultiPoly denominator() const;
  int nvars() const { return symbolic_ ? num_.nvars() : 0; }

  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);
  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b);
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

  RationalFunction inverse() const;
  RationalFunction pow(int e) const;

  // Substitutes rational values; throws GenericityViolation when the denominator vanishes.
  mpq_class evaluate(const std::vector<mpq_class>& values) const;
  std::string to_string(const std::vector<std::string>& names) const;
  std::size_t hash() const;
  // Rough size used to pick cheap pivots.
  std::size_t complexity() const;

 private:
  void set(MultiPoly num, MultiPoly den, bool reduced = false);
  bool symbolic_ = false;
  mpq_class c_;
  MultiPoly num_, den_;
};

using Scalar = RationalFunction;

enum class Mode { Symbolic, Specialized };

struct RingContext {
  std::vector<std::string> variables;
  Mode mode = Mode::Symbolic;
  std::vector<mpq_class> values;  // one per variable in specialized mode

  void validate() const;
  std::string describe_values() const;
};

// Image of x under the evaluation homomorphism of a specialized context.
mpq_class specialize(const RationalFunction& x, const RingContext& ctx);

// Parses "7/3", "-2", "0.5" into an exact rational.
mpq_class parse_rational(const std::string& text);

}  // namespace towerlab

#include "towerlab/rational_function.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "towerlab/errors.hpp"

namespace towerlab {

RationalFunction::RationalFunction(const MultiPoly& num, const MultiPoly& den) {
  if (den.is_zero()) throw DivisionByZero();
  set(num, den);
}

RationalFunction RationalFunction::variable(int nvars, int index) {
  return RationalFunction(MultiPoly::variable(nvars, index), MultiPoly::constant(nvars, 1));
}

void RationalFunction::set(MultiPoly num, MultiPoly den, bool reduced) {
  if (num.is_zero()) {
    symbolic_ = false;
    c_ = 0;
    num_ = den_ = MultiPoly();
    return;
  }
  if (!reduced && !den.is_constant()) {
    MultiPoly g = poly_gcd(num, den);
    if (!g.is_constant()) {
      num = divide_exact(num, g);
      den = divide_exact(den, g);
    }
  }
  if (den.is_constant() && num.is_constant()) {
    symbolic_ = false;
    c_ = num.constant_value() / den.constant_value();
    num_ = den_ = MultiPoly();
    return;
  }
  mpq_class lc = den.leading().coeff;
  if (lc != 1) {
    mpq_class inv = 1 / lc;
    num = num.scaled(inv);
    den = den.scaled(inv);
  }
  int nv = std::max(num.nvars(), den.nvars());
  num_ = std::move(num) + MultiPoly(nv);
  den_ = std::move(den) + MultiPoly(nv);
  symbolic_ = true;
}

const mpq_class& RationalFunction::constant_value() const {
  if (symbolic_) throw std::logic_error("rational function is not constant");
  return c_;
}

MultiPoly RationalFunction::numerator() const {
  return symbolic_ ? num_ : MultiPoly::constant(0, c_);
}

MultiPoly RationalFunction::denominator() const {
  return symbolic_ ? den_ : MultiPoly::constant(0, 1);
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  if (symbolic_) r.num_ = -r.num_;
  else r.c_ = -r.c_;
  return r;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (!symbolic_ && !o.symbolic_) {
    c_ += o.c_;
    return *this;
  }
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  MultiPoly a = numerator(), b = denominator(), c = o.numerator(), d = o.denominator();
  if (b == d) set(a + c, b);
  else set(a * d + c * b, b * d);
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) {
  return *this += -o;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  if (!symbolic_ && !o.symbolic_) {
    c_ *= o.c_;
    return *this;
  }
  if (is_zero() || o.is_zero()) return *this = RationalFunction();
  if (!o.symbolic_) {
    if (o.c_ != 1) num_ = num_.scaled(o.c_);
    return *this;
  }
  if (!symbolic_) {
    mpq_class c = c_;
    *this = o;
    if (c != 1) num_ = num_.scaled(c);
    return *this;
  }
  // Cross-cancel before multiplying so the result is already reduced.
  MultiPoly g1 = poly_gcd(num_, o.den_), g2 = poly_gcd(o.num_, den_);
  MultiPoly n = divide_exact(num_, g1) * divide_exact(o.num_, g2);
  MultiPoly d = divide_exact(den_, g2) * divide_exact(o.den_, g1);
  set(std::move(n), std::move(d), true);
  return *this;
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (!symbolic_) return RationalFunction(mpq_class(1 / c_));
  RationalFunction r;
  r.set(den_, num_, true);
  return r;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
  if (o.is_zero()) throw DivisionByZero();
  if (!symbolic_ && !o.symbolic_) {
    c_ /= o.c_;
    return *this;
  }
  return *this *= o.inverse();
}

bool operator==(const RationalFunction& a, const RationalFunction& b) {
  if (a.symbolic_ != b.symbolic_) return false;
  if (!a.symbolic_) return a.c_ == b.c_;
  return a.num_ == b.num_ && a.den_ == b.den_;
}

RationalFunction RationalFunction::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  RationalFunction result(1), base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

mpq_class RationalFunction::evaluate(const std::vector<mpq_class>& values) const {
  if (!symbolic_) return c_;
  mpq_class d = den_.evaluate(values);
  if (d == 0) throw GenericityViolation("denominator vanishes at the chosen parameter values");
  return num_.evaluate(values) / d;
}

std::string RationalFunction::to_string(const std::vector<std::string>& names) const {
  if (!symbolic_) return c_.get_str();
  if (den_.is_constant()) return num_.to_string(names);
  return "(" + num_.to_string(names) + ")/(" + den_.to_string(names) + ")";
}

std::size_t RationalFunction::hash() const {
  if (!symbolic_) return std::hash<std::string>{}(c_.get_str());
  return num_.hash() * 31u + den_.hash();
}

void RingContext::validate() const {
  std::set<std::string> seen(variables.begin(), variables.end());
  if (seen.size() != variables.size()) throw std::invalid_argument("duplicate ring variable");
  if (mode == Mode::Specialized) {
    if (values.size() != variables.size())
      throw std::invalid_argument("specialized mode needs a value for every variable");
    for (std::size_t i = 0; i < values.size(); ++i)
      if (values[i] == 0) throw GenericityViolation("parameter " + variables[i] + " = 0 is not generic");
  }
}

std::string RingContext::describe_values() const {
  std::string s;
  for (std::size_t i = 0; i < variables.size(); ++i) {
    if (i) s += ", ";
    s += variables[i];
    if (i < values.size()) s += "=" + values[i].get_str();
  }
  return s;
}

mpq_class specialize(const RationalFunction& x, const RingContext& ctx) {
  if (ctx.mode != Mode::Specialized) throw std::invalid_argument("context is not specialized");
  try {
    return x.evaluate(ctx.values);
  } catch (const GenericityViolation&) {
    throw GenericityViolation("denominator of " + x.to_string(ctx.variables) + " vanishes at " +
                              ctx.describe_values());
  }
}

mpq_class parse_rational(const std::string& text) {
  std::string t = text;
  auto dot = t.find('.');
  if (dot != std::string::npos && t.find('/') == std::string::npos) {
    std::string frac = t.substr(dot + 1);
    std::string whole = t.substr(0, dot);
    bool neg = !whole.empty() && whole[0] == '-';
    if (neg) whole.erase(0, 1);
    if (whole.empty()) whole = "0";
    std::string den = "1" + std::string(frac.size(), '0');
    mpq_class q(mpz_class(whole + frac), mpz_class(den));
    q.canonicalize();
    return neg ? mpq_class(-q) : q;
  }
  mpq_class q;
  if (q.set_str(t, 10) != 0) throw std::invalid_argument("not a rational number: " + text);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator in " + text);
  q.canonicalize();
  return q;
}

std::size_t RationalFunction::complexity() const {
  if (!symbolic_) return 1 + mpz_sizeinbase(c_.get_num_mpz_t(), 2) / 64 + mpz_sizeinbase(c_.get_den_mpz_t(), 2) / 64;
  std::size_t size = 1000;
  for (const auto* p : {&num_, &den_})
    for (const auto& t : p->terms())
      size += 10 + mpz_sizeinbase(t.coeff.get_num_mpz_t(), 2) / 64 + mpz_sizeinbase(t.coeff.get_den_mpz_t(), 2) / 64;
  return size;
}

}  // namespace towerlab

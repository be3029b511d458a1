#include "towerlab/poly.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace towerlab {

bool grlex_greater(const Exponents& a, const Exponents& b) {
  int da = 0, db = 0;
  for (int i = 0; i < kMaxVars; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da > db;
  return a > b;
}

MultiPoly::MultiPoly(int nvars) : nvars_(nvars) {
  if (nvars < 0 || nvars > kMaxVars) throw std::invalid_argument("unsupported variable count");
}

MultiPoly MultiPoly::constant(int nvars, const mpq_class& c) {
  MultiPoly p(nvars);
  if (c != 0) p.terms_.push_back({Exponents{}, c});
  return p;
}

MultiPoly MultiPoly::variable(int nvars, int index) {
  if (index < 0 || index >= nvars) throw std::out_of_range("variable index");
  Exponents e{};
  e[index] = 1;
  return monomial(nvars, e, 1);
}

MultiPoly MultiPoly::monomial(int nvars, const Exponents& e, const mpq_class& c) {
  MultiPoly p(nvars);
  if (c != 0) p.terms_.push_back({e, c});
  return p;
}

MultiPoly MultiPoly::from_terms(int nvars, std::vector<Term> terms) {
  MultiPoly p(nvars);
  p.terms_ = std::move(terms);
  p.normalize();
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exp == Exponents{});
}

mpq_class MultiPoly::constant_value() const {
  if (!is_constant()) throw std::logic_error("polynomial is not constant");
  return terms_.empty() ? mpq_class(0) : terms_[0].coeff;
}

int MultiPoly::degree_in(int var) const {
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, t.exp[var]);
  return d;
}

int MultiPoly::total_degree() const {
  if (terms_.empty()) return 0;
  const auto& e = terms_.front().exp;
  int d = 0;
  for (int x : e) d += x;
  return d;
}

MultiPoly MultiPoly::coefficient_in(int var, int power) const {
  MultiPoly r(nvars_);
  for (const auto& t : terms_) {
    if (t.exp[var] != power) continue;
    Term u = t;
    u.exp[var] = 0;
    r.terms_.push_back(std::move(u));
  }
  // Clearing one coordinate can reorder terms.
  std::sort(r.terms_.begin(), r.terms_.end(),
            [](const Term& a, const Term& b) { return grlex_greater(a.exp, b.exp); });
  return r;
}

void MultiPoly::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return grlex_greater(a.exp, b.exp); });
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().exp == t.exp) {
      merged.back().coeff += t.coeff;
    } else {
      if (!merged.empty() && merged.back().coeff == 0) merged.pop_back();
      merged.push_back(std::move(t));
    }
  }
  if (!merged.empty() && merged.back().coeff == 0) merged.pop_back();
  terms_ = std::move(merged);
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

namespace {

// Merge two sorted term lists, combining coefficients with sign.
std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && grlex_greater(a[i].exp, b[j].exp))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || grlex_greater(b[j].exp, a[i].exp)) {
      out.push_back({b[j].exp, subtract ? mpq_class(-b[j].coeff) : b[j].coeff});
      ++j;
    } else {
      mpq_class c = subtract ? mpq_class(a[i].coeff - b[j].coeff) : mpq_class(a[i].coeff + b[j].coeff);
      if (c != 0) out.push_back({a[i].exp, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  nvars_ = std::max(nvars_, o.nvars_);
  terms_ = merge_terms(terms_, o.terms_, false);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  nvars_ = std::max(nvars_, o.nvars_);
  terms_ = merge_terms(terms_, o.terms_, true);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r(std::max(a.nvars_, b.nvars_));
  if (a.is_zero() || b.is_zero()) return r;
  r.terms_.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) {
      Exponents e;
      for (int i = 0; i < kMaxVars; ++i) e[i] = s.exp[i] + t.exp[i];
      r.terms_.push_back({e, s.coeff * t.coeff});
    }
  }
  r.normalize();
  return r;
}

MultiPoly MultiPoly::scaled(const mpq_class& c) const {
  if (c == 0) return MultiPoly(nvars_);
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

MultiPoly MultiPoly::shifted(const Exponents& e) const {
  MultiPoly r = *this;
  for (auto& t : r.terms_)
    for (int i = 0; i < kMaxVars; ++i) t.exp[i] += e[i];
  return r;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].exp != b.terms_[i].exp || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  return true;
}

MultiPoly MultiPoly::monic() const {
  if (terms_.empty()) return *this;
  mpq_class inv = 1 / terms_.front().coeff;
  return scaled(inv);
}

mpq_class MultiPoly::evaluate(const std::vector<mpq_class>& values) const {
  mpq_class sum = 0;
  for (const auto& t : terms_) {
    mpq_class v = t.coeff;
    for (int i = 0; i < kMaxVars; ++i) {
      if (t.exp[i] == 0) continue;
      if (i >= static_cast<int>(values.size())) throw std::out_of_range("missing variable value");
      mpq_class p;
      mpz_pow_ui(p.get_num_mpz_t(), values[i].get_num_mpz_t(), t.exp[i]);
      mpz_pow_ui(p.get_den_mpz_t(), values[i].get_den_mpz_t(), t.exp[i]);
      p.canonicalize();
      v *= p;
    }
    sum += v;
  }
  return sum;
}

std::string MultiPoly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    mpq_class c = t.coeff;
    bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    std::vector<std::string> factors;
    for (int i = 0; i < kMaxVars; ++i) {
      if (t.exp[i] == 0) continue;
      std::string name = i < static_cast<int>(names.size()) ? names[i] : "x" + std::to_string(i);
      factors.push_back(t.exp[i] == 1 ? name : name + "^" + std::to_string(t.exp[i]));
    }
    if (factors.empty() || c != 1) factors.insert(factors.begin(), c.get_str());
    for (std::size_t k = 0; k < factors.size(); ++k) os << (k ? "*" : "") << factors[k];
  }
  return os.str();
}

std::size_t MultiPoly::hash() const {
  std::size_t h = terms_.size();
  for (const auto& t : terms_) {
    for (int e : t.exp) h = h * 1000003u + static_cast<std::size_t>(e);
    h = h * 1000003u + std::hash<std::string>{}(t.coeff.get_str());
  }
  return h;
}

std::optional<MultiPoly> try_divide(const MultiPoly& a, const MultiPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  int nv = std::max(a.nvars(), b.nvars());
  MultiPoly q(nv), r = a;
  const Term& lb = b.leading();
  mpq_class inv = 1 / lb.coeff;
  while (!r.is_zero()) {
    const Term& lr = r.leading();
    Exponents e;
    for (int i = 0; i < kMaxVars; ++i) {
      e[i] = lr.exp[i] - lb.exp[i];
      if (e[i] < 0) return std::nullopt;
    }
    mpq_class c = lr.coeff * inv;
    q += MultiPoly::monomial(nv, e, c);
    r -= b.shifted(e).scaled(c);
  }
  return q;
}

MultiPoly divide_exact(const MultiPoly& a, const MultiPoly& b) {
  auto q = try_divide(a, b);
  if (!q) throw std::logic_error("inexact polynomial division");
  return *q;
}

namespace {

int first_active_var(const MultiPoly& a, const MultiPoly& b) {
  for (int v = 0; v < kMaxVars; ++v)
    if (a.degree_in(v) > 0 || b.degree_in(v) > 0) return v;
  return -1;
}

MultiPoly gcd_rec(const MultiPoly& a, const MultiPoly& b);

// gcd of the coefficients of p viewed as a polynomial in var.
MultiPoly content_in(const MultiPoly& p, int var) {
  MultiPoly g(p.nvars());
  for (int d = p.degree_in(var); d >= 0; --d) {
    MultiPoly c = p.coefficient_in(var, d);
    if (c.is_zero()) continue;
    g = gcd_rec(g, c);
    if (g.is_constant() && !g.is_zero()) break;
  }
  return g;
}

MultiPoly primitive_in(const MultiPoly& p, int var) {
  return divide_exact(p, content_in(p, var));
}

MultiPoly pseudo_remainder(MultiPoly a, const MultiPoly& b, int var) {
  int db = b.degree_in(var);
  MultiPoly lcb = b.coefficient_in(var, db);
  while (!a.is_zero()) {
    int da = a.degree_in(var);
    if (da < db) break;
    MultiPoly lca = a.coefficient_in(var, da);
    Exponents shift{};
    shift[var] = da - db;
    a = lcb * a - lca * b.shifted(shift);
  }
  return a;
}

MultiPoly monomial_gcd(const MultiPoly& a, const MultiPoly& b, int nv) {
  Exponents e = a.terms().front().exp;
  for (const auto* p : {&a, &b})
    for (const auto& t : p->terms())
      for (int i = 0; i < kMaxVars; ++i) e[i] = std::min(e[i], t.exp[i]);
  return MultiPoly::monomial(nv, e, 1);
}

// Heuristic gcd over Z: evaluate one variable at a large integer, recurse, and recover the
// candidate from its x-adic digits. Any candidate is confirmed by exact division.
mpz_class max_norm(const MultiPoly& p) {
  mpz_class m = 0;
  for (const auto& t : p.terms()) m = std::max(m, mpz_class(abs(t.coeff.get_num())));
  return m;
}

mpz_class integer_content(const MultiPoly& p) {
  mpz_class g = 0;
  for (const auto& t : p.terms()) g = gcd(g, t.coeff.get_num());
  return g;
}

// Scales p to an integer polynomial with coprime coefficients.
MultiPoly integer_primitive(const MultiPoly& p) {
  mpz_class l = 1;
  for (const auto& t : p.terms()) l = lcm(l, t.coeff.get_den());
  MultiPoly r = p.scaled(mpq_class(l));
  mpz_class g = integer_content(r);
  return g == 1 ? r : r.scaled(mpq_class(1, g));
}

MultiPoly evaluate_at(const MultiPoly& p, int var, const mpz_class& x) {
  std::vector<Term> out;
  out.reserve(p.terms().size());
  for (const auto& t : p.terms()) {
    mpz_class pw;
    mpz_pow_ui(pw.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(t.exp[var]));
    Term u{t.exp, mpq_class(t.coeff * pw)};
    u.exp[var] = 0;
    out.push_back(std::move(u));
  }
  return MultiPoly::from_terms(p.nvars(), std::move(out));
}

// Inverse of evaluate_at for polynomials with coefficients below x/2 in size.
MultiPoly interpolate_at(MultiPoly h, int var, const mpz_class& x) {
  std::vector<Term> out;
  const mpz_class half = x / 2;
  for (int power = 0; !h.is_zero(); ++power) {
    std::vector<Term> digit;
    for (const auto& t : h.terms()) {
      mpz_class r = t.coeff.get_num() % x;
      if (r > half) r -= x;
      else if (r < -half) r += x;
      if (r != 0) digit.push_back({t.exp, mpq_class(r)});
    }
    MultiPoly g = MultiPoly::from_terms(h.nvars(), digit);
    h = (h - g).scaled(mpq_class(1, x));
    for (auto& t : digit) {
      t.exp[var] = power;
      out.push_back(std::move(t));
    }
  }
  return MultiPoly::from_terms(h.nvars(), std::move(out));
}

std::optional<MultiPoly> heuristic_gcd(const MultiPoly& f, const MultiPoly& g, int var) {
  const int nv = std::max(f.nvars(), g.nvars());
  while (var < kMaxVars && f.degree_in(var) == 0 && g.degree_in(var) == 0) ++var;
  if (var == kMaxVars) {
    return MultiPoly::constant(nv, mpq_class(gcd(f.constant_value().get_num(), g.constant_value().get_num())));
  }
  const mpz_class fc = integer_content(f), gc = integer_content(g), common = gcd(fc, gc);
  const MultiPoly fp = f.scaled(mpq_class(1, fc)), gp = g.scaled(mpq_class(1, gc));
  const mpz_class nf = max_norm(fp), ng = max_norm(gp);
  const mpz_class b = 2 * std::min(nf, ng) + 29;
  mpz_class x = std::max(mpz_class(std::min(b, mpz_class(99 * sqrt(b)))), mpz_class(2 * std::min(nf, ng) + 2));
  for (int attempt = 0; attempt < 6; ++attempt) {
    MultiPoly fe = evaluate_at(fp, var, x), ge = evaluate_at(gp, var, x);
    if (!fe.is_zero() && !ge.is_zero()) {
      if (auto h = heuristic_gcd(fe, ge, var + 1)) {
        MultiPoly cand = interpolate_at(*h, var, x);
        if (!cand.is_zero()) {
          cand = integer_primitive(cand);
          if (try_divide(fp, cand) && try_divide(gp, cand)) return cand.scaled(mpq_class(common));
        }
      }
    }
    x = x * 73794 * sqrt(sqrt(x)) / 27011;
  }
  return std::nullopt;
}

MultiPoly gcd_rec(const MultiPoly& a, const MultiPoly& b) {
  int nv = std::max(a.nvars(), b.nvars());
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return MultiPoly::constant(nv, 1);
  if (a.terms().size() == 1 || b.terms().size() == 1) return monomial_gcd(a, b, nv);
  if (a.terms().size() <= b.terms().size() ? try_divide(b, a).has_value() : try_divide(a, b).has_value())
    return (a.terms().size() <= b.terms().size() ? a : b).monic();
  int v = first_active_var(a, b);
  if (a.degree_in(v) == 0) return gcd_rec(a, content_in(b, v));
  if (b.degree_in(v) == 0) return gcd_rec(content_in(a, v), b);

  MultiPoly ca = content_in(a, v), cb = content_in(b, v);
  MultiPoly c = gcd_rec(ca, cb);
  MultiPoly pa = divide_exact(a, ca), pb = divide_exact(b, cb);
  if (pa.degree_in(v) < pb.degree_in(v)) std::swap(pa, pb);
  // Primitive remainder sequence in v.
  while (true) {
    MultiPoly r = pseudo_remainder(pa, pb, v);
    if (r.is_zero()) break;
    if (r.degree_in(v) == 0) return c.monic();
    pa = std::move(pb);
    pb = primitive_in(r, v);
  }
  return (c * primitive_in(pb, v)).monic();
}

}  // namespace

MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero() || b.is_zero() || a.is_constant() || b.is_constant() || a.terms().size() == 1 ||
      b.terms().size() == 1)
    return gcd_rec(a, b);
  if (auto h = heuristic_gcd(integer_primitive(a), integer_primitive(b), 0)) return h->monic();
  return gcd_rec(a, b);
}

}  // namespace towerlab

// One PASS/FAIL line per acceptance criterion. Exit status is the number of failures.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "towerlab/errors.hpp"
#include "towerlab/relations.hpp"
#include "towerlab/verify.hpp"

using namespace towerlab;

namespace {

struct Outcome {
  std::size_t checks = 0;
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) failures.push_back(what);
  }
  void absorb(const VerificationReport& r, const std::string& where,
              const std::function<bool(const Check&)>& keep = [](const Check&) { return true; }) {
    for (const auto& c : r.checks)
      if (keep(c)) expect(c.pass, where + " " + c.name + " " + c.vertex + " [" + c.witness + "]");
  }
};

FamilyPtr make(TowerKind kind, Mode mode) {
  auto values = mode == Mode::Specialized ? default_specialization(kind) : std::map<std::string, mpq_class>{};
  return TowerFamily::create(make_params(kind, mode, values));
}

std::string label(TowerKind kind, Mode mode, int n) {
  return tower_name(kind) + (mode == Mode::Symbolic ? " symbolic" : " specialized") + " n=" + std::to_string(n);
}

// (kind, mode, top rank) triples shared by the per-vertex criteria.
struct Scope {
  TowerKind kind;
  Mode mode;
  int top;
};

std::vector<Scope> vertex_scopes() {
  std::vector<Scope> out;
  for (auto kind : {TowerKind::Brauer, TowerKind::TL, TowerKind::Hecke, TowerKind::Sym}) {
    out.push_back({kind, Mode::Symbolic, 4});
    if (kind != TowerKind::Sym) out.push_back({kind, Mode::Specialized, 5});
  }
  out.push_back({TowerKind::BMW, Mode::Symbolic, 3});
  out.push_back({TowerKind::BMW, Mode::Specialized, 4});
  return out;
}

void for_each_vertex(const std::function<void(const CellTheory&, const JMFamily&, const Vertex&, const std::string&)>& body) {
  for (const auto& s : vertex_scopes()) {
    CellTheory theory(make(s.kind, s.mode));
    for (int n = 1; n <= s.top; ++n) {
      auto jm = jm_elements(theory.family(), n);
      for (const auto& v : level_vertices(theory.lattice(), n)) body(theory, jm, v, label(s.kind, s.mode, n));
    }
  }
}

long double_factorial(int n) { return n <= 0 ? 1 : (2L * n - 1) * double_factorial(n - 1); }
long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }
long catalan(int n) { return n == 0 ? 1 : catalan(n - 1) * 2 * (2 * n - 1) / (n + 1); }

std::size_t closure_rank(const Tower& t) {
  EchelonBasis span(t.dim());
  span.insert(t.one());
  std::vector<SparseVec> frontier{t.one()};
  while (!frontier.empty()) {
    std::vector<SparseVec> next;
    for (const auto& v : frontier)
      for (const auto& g : t.generators()) {
        auto w = t.left_generator(g, v);
        if (span.insert(w)) next.push_back(std::move(w));
      }
    frontier = std::move(next);
  }
  return span.rank();
}

Outcome dimensions() {
  Outcome o;
  for (int n = 1; n <= 5; ++n) {
    o.expect(make(TowerKind::Brauer, Mode::Symbolic)->at(n)->dim() == static_cast<std::size_t>(double_factorial(n)),
             "brauer n=" + std::to_string(n));
    o.expect(make(TowerKind::TL, Mode::Symbolic)->at(n)->dim() == static_cast<std::size_t>(catalan(n)),
             "tl n=" + std::to_string(n));
    o.expect(make(TowerKind::Hecke, Mode::Symbolic)->at(n)->dim() == static_cast<std::size_t>(factorial(n)),
             "hecke n=" + std::to_string(n));
  }
  auto bmw = make(TowerKind::BMW, Mode::Symbolic);
  for (int n = 1; n <= 4; ++n) {
    const auto& t = *bmw->at(n);
    o.expect(t.dim() == static_cast<std::size_t>(double_factorial(n)) && closure_rank(t) == t.dim(),
             "bmw n=" + std::to_string(n));
  }
  return o;
}

Outcome relations() {
  Outcome o;
  for (auto kind : {TowerKind::Sym, TowerKind::Hecke, TowerKind::Brauer, TowerKind::TL, TowerKind::BMW}) {
    auto f = make(kind, Mode::Symbolic);
    for (int n = 1; n <= 4; ++n)
      for (const auto& c : check_relations(*f, n)) o.expect(c.pass, label(kind, Mode::Symbolic, n) + " " + c.name);
  }
  return o;
}

Outcome axioms() {
  Outcome o;
  for (auto kind : {TowerKind::Brauer, TowerKind::TL, TowerKind::BMW}) {
    auto f = make(kind, Mode::Symbolic);
    for (int n = 2; n <= 3; ++n) o.absorb(verify_framework_axioms(*f, n), label(kind, Mode::Symbolic, n));
  }
  o.absorb(verify_framework_axioms(*make(TowerKind::Brauer, Mode::Specialized), 4),
           label(TowerKind::Brauer, Mode::Specialized, 4));
  return o;
}

Outcome jm_axioms() {
  Outcome o;
  for (auto kind : {TowerKind::Sym, TowerKind::Hecke, TowerKind::Brauer, TowerKind::TL, TowerKind::BMW}) {
    const int top = kind == TowerKind::BMW ? 3 : 4;
    auto f = make(kind, Mode::Symbolic);
    for (int n = 1; n <= top; ++n) o.absorb(verify_jm_family(jm_elements(f, n)), label(kind, Mode::Symbolic, n));
  }
  o.absorb(verify_jm_family(jm_elements(make(TowerKind::BMW, Mode::Specialized), 4)),
           label(TowerKind::BMW, Mode::Specialized, 4));
  return o;
}

Outcome central_scalars() {
  Outcome o;
  for_each_vertex([&](const CellTheory& theory, const JMFamily& jm, const Vertex& v, const std::string& where) {
    o.absorb(verify_center_scalar(theory, jm, v), where);
  });
  return o;
}

bool is_spectrum(const Check& c) { return c.name.find("spectrum") != std::string::npos; }

Outcome spectra() {
  Outcome o;
  for_each_vertex([&](const CellTheory& theory, const JMFamily& jm, const Vertex& v, const std::string& where) {
    o.absorb(verify_triangularity_and_spectrum(theory, jm, v), where, is_spectrum);
  });
  return o;
}

Outcome triangularity() {
  Outcome o;
  for_each_vertex([&](const CellTheory& theory, const JMFamily& jm, const Vertex& v, const std::string& where) {
    o.absorb(verify_triangularity_and_spectrum(theory, jm, v), where, [](const Check& c) { return !is_spectrum(c); });
  });
  return o;
}

Outcome gz() {
  Outcome o;
  for (auto kind : {TowerKind::Sym, TowerKind::Hecke, TowerKind::Brauer, TowerKind::TL, TowerKind::BMW}) {
    const int top = kind == TowerKind::BMW ? 3 : 4;
    CellTheory theory(make(kind, Mode::Symbolic));
    for (int n = 1; n <= top; ++n)
      o.absorb(verify_separation_and_gz(theory, jm_elements(theory.family(), n)), label(kind, Mode::Symbolic, n));
  }
  return o;
}

Outcome branching() {
  Outcome o;
  for (auto kind : {TowerKind::Sym, TowerKind::Hecke, TowerKind::Brauer, TowerKind::TL, TowerKind::BMW}) {
    CellTheory theory(make(kind, Mode::Symbolic));
    for (int n = 1; n <= 4; ++n) o.absorb(verify_branching_multiplicities(theory, n), label(kind, Mode::Symbolic, n));
  }
  return o;
}

Outcome bridge() {
  Outcome o;
  auto tl = make(TowerKind::TL, Mode::Symbolic);
  for (int n = 1; n <= 4; ++n) o.absorb(verify_tl_hecke_bridge(tl, n), label(TowerKind::TL, Mode::Symbolic, n));
  o.absorb(verify_tl_hecke_bridge(make(TowerKind::TL, Mode::Specialized), 5), label(TowerKind::TL, Mode::Specialized, 5));
  return o;
}

struct Criterion {
  int id;
  std::string name;
  double budget_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "dimensions", 60, dimensions},
      {2, "defining relations", 120, relations},
      {3, "framework axioms", 300, axioms},
      {4, "JM family axioms", 300, jm_axioms},
      {5, "central scalars", 600, central_scalars},
      {6, "JM spectra", 600, spectra},
      {7, "path basis triangularity", 600, triangularity},
      {8, "GZ idempotents", 600, gz},
      {9, "branching", 300, branching},
      {10, "TL-Hecke bridge", 180, bridge},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    std::string error;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs <= c.budget_seconds;
    const bool ok = error.empty() && o.failures.empty() && o.checks > 0 && in_time;
    failures += ok ? 0 : 1;

    std::ostringstream line;
    line << (ok ? "PASS" : "FAIL") << " [" << c.id << "] " << c.name << ": " << o.checks - o.failures.size() << "/"
         << o.checks << " checks, " << secs << " s (budget " << c.budget_seconds << " s)";
    if (!error.empty()) line << ", error: " << error;
    if (!in_time) line << ", over budget";
    std::cout << line.str() << '\n';
    for (std::size_t i = 0; i < o.failures.size() && i < 5; ++i) std::cout << "    " << o.failures[i] << '\n';
    std::cout.flush();
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << '\n';
  return failures;
}

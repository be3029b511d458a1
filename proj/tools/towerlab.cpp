// towerlab: command-line front end for the tower verifications.

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "towerlab/errors.hpp"
#include "towerlab/verify.hpp"

namespace {

using namespace towerlab;
using json = nlohmann::ordered_json;

constexpr int kUsageError = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;
  std::string tower = "brauer";
  int n = 3;
  std::string mode = "symbolic";
  std::vector<std::string> assignments;
  std::string format = "text";
  int threads = 0;
  std::string out;
  bool timings = false;
};

int max_rank(TowerKind kind, Mode mode, const std::string& command) {
  if (command == "dims") return kind == TowerKind::BMW ? 5 : 7;
  if (mode == Mode::Symbolic) return 4;
  return kind == TowerKind::BMW ? 4 : 5;
}

ParamsPtr build_params(const RunConfig& cfg, TowerKind kind, Mode mode) {
  std::map<std::string, mpq_class> values;
  for (const auto& a : cfg.assignments) {
    auto eq = a.find('=');
    if (eq == std::string::npos) throw UsageError("--set expects name=value, got '" + a + "'");
    const std::string name = a.substr(0, eq);
    const auto vars = tower_variables(kind);
    if (std::find(vars.begin(), vars.end(), name) == vars.end())
      throw UsageError("tower " + tower_name(kind) + " has no parameter '" + name + "'");
    try {
      values[name] = parse_rational(a.substr(eq + 1));
    } catch (const std::exception&) {
      throw UsageError("cannot parse value of " + name + ": '" + a.substr(eq + 1) + "'");
    }
  }
  if (mode == Mode::Symbolic && !values.empty()) throw UsageError("--set only applies in specialized mode");
  if (mode == Mode::Specialized)
    for (const auto& v : tower_variables(kind))
      if (!values.count(v)) throw UsageError("specialized mode needs --set " + v + "=<value>");
  return make_params(kind, mode, values);
}

// Runs independent tasks on a few threads; results keep task order.
std::vector<VerificationReport> run_tasks(const std::vector<std::function<VerificationReport()>>& tasks,
                                          int threads) {
  std::vector<VerificationReport> results(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < tasks.size();) {
      try {
        results[i] = tasks[i]();
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return results;
}

class Session {
 public:
  Session(FamilyPtr family, int n_max) : family_(std::move(family)), theory_(family_), n_max_(n_max) {
    jm_.resize(static_cast<std::size_t>(n_max) + 1);
    jm_flags_ = std::vector<std::once_flag>(static_cast<std::size_t>(n_max) + 1);
  }

  const JMFamily& jm(int n) {
    std::call_once(jm_flags_[n], [&] { jm_[n] = jm_elements(family_, n); });
    return jm_[n];
  }

  void add_tasks(const std::string& what, std::vector<std::function<VerificationReport()>>& tasks) {
    const Lattice lat = lattice_for(family_->kind());
    for (int n = 1; n <= n_max_; ++n) {
      if (what == "axioms") tasks.emplace_back([this, n] { return verify_framework_axioms(*family_, n); });
      if (what == "jm") {
        tasks.emplace_back([this, n] { return verify_jm_family(jm(n)); });
        for (const auto& v : level_vertices(lat, n))
          tasks.emplace_back([this, v] { return verify_center_scalar(theory_, jm(v.n), v); });
      }
      if (what == "spectrum")
        for (const auto& v : level_vertices(lat, n))
          tasks.emplace_back([this, v] { return verify_triangularity_and_spectrum(theory_, jm(v.n), v); });
      if (what == "gz") tasks.emplace_back([this, n] { return verify_separation_and_gz(theory_, jm(n)); });
      if (what == "branching") tasks.emplace_back([this, n] { return verify_branching_multiplicities(theory_, n); });
      if (what == "bridge") tasks.emplace_back([this, n] { return verify_tl_hecke_bridge(family_, n); });
    }
  }

  json spectra() {
    json out = json::array();
    const Params& p = family_->params();
    for (int n = 1; n <= n_max_; ++n)
      for (const auto& v : level_vertices(lattice_for(family_->kind()), n)) {
        const auto ps = paths(lattice_for(family_->kind()), v);
        for (int j = 1; j <= n; ++j) {
          json values = json::array();
          for (const auto& t : ps) values.push_back(p.format(kappa(p, t, j)));
          out.push_back({{"n", n}, {"vertex", v.to_string()}, {"j", j}, {"eigenvalues", values}});
        }
      }
    return out;
  }

 private:
  FamilyPtr family_;
  CellTheory theory_;
  int n_max_;
  std::vector<JMFamily> jm_;
  std::vector<std::once_flag> jm_flags_;
};

json params_json(const Params& p) {
  json out = json::object();
  for (std::size_t i = 0; i < p.ctx.variables.size(); ++i)
    out[p.ctx.variables[i]] = i < p.ctx.values.size() ? p.ctx.values[i].get_str() : "generic";
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void write_report(std::ostream& os, const RunConfig& cfg, const Params& p, const VerificationReport& r,
                  const json& extra) {
  const std::string tower = tower_name(r.tower);
  if (cfg.format == "json") {
    json j;
    j["meta"] = {{"tower", tower}, {"n", r.n}, {"mode", cfg.mode}, {"params", params_json(p)}};
    for (const auto& [k, v] : r.meta) j["meta"][k] = v;
    j["checks"] = json::array();
    for (const auto& c : r.checks) {
      json row = {{"n", c.n}, {"name", c.name}, {"vertex", c.vertex}, {"pass", c.pass}, {"witness", c.witness}};
      if (cfg.timings) row["millis"] = c.millis;
      j["checks"].push_back(std::move(row));
    }
    j["summary"] = {{"passed", r.passed()}, {"failed", r.failed()}};
    for (const auto& [k, v] : extra.items()) j[k] = v;
    os << j.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    os << "tower,n,vertex,check,pass,witness" << (cfg.timings ? ",millis" : "") << "\n";
    for (const auto& c : r.checks) {
      os << tower << "," << c.n << "," << csv_field(c.vertex) << "," << csv_field(c.name) << ","
         << (c.pass ? "true" : "false") << "," << csv_field(c.witness);
      if (cfg.timings) os << "," << c.millis;
      os << "\n";
    }
  } else {
    os << tower << " n<=" << r.n << " " << cfg.mode;
    if (!p.ctx.values.empty()) os << " (" << p.ctx.describe_values() << ")";
    os << "\n";
    for (const auto& c : r.checks) {
      os << (c.pass ? "PASS " : "FAIL ") << "n=" << c.n << " ";
      if (!c.vertex.empty()) os << c.vertex << " ";
      os << c.name;
      if (!c.witness.empty()) os << "  [" << c.witness << "]";
      if (cfg.timings) os << "  " << c.millis << " ms";
      os << "\n";
    }
    if (extra.contains("spectra"))
      for (const auto& s : extra["spectra"]) {
        os << "spectrum n=" << s["n"].get<int>() << " " << s["vertex"].get<std::string>() << " L"
           << s["j"].get<int>() << ":";
        for (const auto& v : s["eigenvalues"]) os << " " << v.get<std::string>();
        os << "\n";
      }
    os << r.passed() << " passed, " << r.failed() << " failed\n";
  }
}

void write_dims(std::ostream& os, const RunConfig& cfg, const TowerFamily& family) {
  const std::string tower = tower_name(family.kind());
  const std::size_t dim = family.at(cfg.n)->dim();
  if (cfg.format == "json") {
    os << json{{"tower", tower}, {"n", cfg.n}, {"dim", dim}}.dump() << "\n";
  } else if (cfg.format == "csv") {
    os << "tower,n,dim\n" << tower << "," << cfg.n << "," << dim << "\n";
  } else {
    os << tower << " n=" << cfg.n << " dim=" << dim << "\n";
  }
}

int thread_count(int requested) {
  int n = requested > 0 ? requested : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  if (const char* cap = std::getenv("TOWERLAB_THREADS")) {
    int c = std::atoi(cap);
    if (c > 0) n = std::min(n, c);
  }
  return std::max(n, 1);
}

int run(const RunConfig& cfg) {
  const TowerKind kind = [&] {
    try {
      return parse_tower(cfg.tower);
    } catch (const std::exception&) {
      throw UsageError("unknown tower '" + cfg.tower + "'");
    }
  }();
  if (kind == TowerKind::Ground) throw UsageError("the ground tower is not a valid choice");
  const Mode mode = cfg.mode == "specialized" ? Mode::Specialized : Mode::Symbolic;
  const int lowest = cfg.command == "dims" ? 0 : 1;
  if (cfg.n < lowest || cfg.n > max_rank(kind, mode, cfg.command))
    throw UsageError("--n must lie in [" + std::to_string(lowest) + ", " +
                     std::to_string(max_rank(kind, mode, cfg.command)) + "] for " + tower_name(kind) + " in " +
                     cfg.mode + " mode");
  if (cfg.command == "bridge" && kind != TowerKind::TL) throw UsageError("bridge runs on --tower tl");

  ParamsPtr params = build_params(cfg, kind, mode);
  FamilyPtr family = TowerFamily::create(params);

  std::ofstream file;
  if (!cfg.out.empty()) {
    file.open(cfg.out);
    if (!file) throw UsageError("cannot open " + cfg.out);
  }
  std::ostream& os = cfg.out.empty() ? std::cout : file;

  if (cfg.command == "dims") {
    write_dims(os, cfg, *family);
    return 0;
  }

  Session session(family, cfg.n);
  std::vector<std::function<VerificationReport()>> tasks;
  std::vector<std::string> parts{cfg.command};
  if (cfg.command == "all") {
    parts = {"axioms", "jm", "spectrum", "gz", "branching"};
    if (kind == TowerKind::TL) parts.push_back("bridge");
  }
  for (const auto& part : parts) session.add_tasks(part, tasks);

  VerificationReport report;
  report.tower = kind;
  report.n = cfg.n;
  report.mode = mode;
  for (const auto& r : run_tasks(tasks, thread_count(cfg.threads))) report.merge(r);

  json extra = json::object();
  if (cfg.command == "spectrum") extra["spectra"] = session.spectra();
  write_report(os, cfg, *params, report, extra);
  return report.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of diagram algebra towers and their Jucys-Murphy elements"};
  app.require_subcommand(1);
  app.set_config("--config", "", "key=value file with the same options as the flags");

  RunConfig cfg;
  const std::vector<std::pair<std::string, std::string>> commands = {
      {"dims", "dimension of A_n"},
      {"axioms", "relations and the ideal/quotient axioms"},
      {"jm", "JM family axioms and central scalars"},
      {"spectrum", "triangularity and spectra of the JM elements"},
      {"gz", "separation and Gelfand-Zeitlin idempotents"},
      {"branching", "restriction of cell modules"},
      {"bridge", "Temperley-Lieb as a quotient of the Hecke algebra"},
      {"all", "every verification that applies to the tower"}};
  for (const auto& [name, help] : commands) app.add_subcommand(name, help)->fallthrough();

  app.add_option("--tower", cfg.tower, "tl, brauer, sym, hecke or bmw")->capture_default_str();
  app.add_option("--n", cfg.n, "rank (largest rank for verifications)")->capture_default_str();
  app.add_option("--mode", cfg.mode, "symbolic or specialized")
      ->check(CLI::IsMember({"symbolic", "specialized"}))
      ->capture_default_str();
  app.add_option("--set", cfg.assignments, "parameter value, e.g. delta=7/3 (repeatable)");
  app.add_option("--format", cfg.format, "json, csv or text")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  app.add_option("--threads", cfg.threads, "worker threads (capped by TOWERLAB_THREADS)");
  app.add_option("--out", cfg.out, "write the report to this file");
  app.add_flag("--timings", cfg.timings, "include per-check milliseconds");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }
  for (const auto* sub : app.get_subcommands()) cfg.command = sub->get_name();

  try {
    return run(cfg);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsageError;
  } catch (const GenericityViolation& e) {
    std::cerr << "genericity violation: " << e.what() << "\n";
    return kUsageError;
  } catch (const SingularSystem& e) {
    if (cfg.mode != "specialized") throw;
    std::cerr << "genericity violation: " << e.what() << " at the chosen values of";
    for (const auto& a : cfg.assignments) std::cerr << " " << a;
    std::cerr << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

#include "towerlab/params.hpp"

#include <algorithm>
#include <stdexcept>

#include "towerlab/errors.hpp"

namespace towerlab {

std::string tower_name(TowerKind kind) {
  switch (kind) {
    case TowerKind::TL: return "tl";
    case TowerKind::Brauer: return "brauer";
    case TowerKind::Sym: return "sym";
    case TowerKind::Hecke: return "hecke";
    case TowerKind::BMW: return "bmw";
    case TowerKind::Ground: return "ground";
  }
  return "?";
}

TowerKind parse_tower(const std::string& name) {
  std::string s = name;
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  for (auto k : {TowerKind::TL, TowerKind::Brauer, TowerKind::Sym, TowerKind::Hecke, TowerKind::BMW})
    if (tower_name(k) == s) return k;
  throw std::invalid_argument("unknown tower: " + name);
}

bool is_multiplicative(TowerKind kind) {
  return kind == TowerKind::TL || kind == TowerKind::Hecke || kind == TowerKind::BMW ||
         kind == TowerKind::Ground;
}

std::vector<std::string> tower_variables(TowerKind kind) {
  switch (kind) {
    case TowerKind::TL: return {"qhalf"};
    case TowerKind::Brauer: return {"delta"};
    case TowerKind::Hecke: return {"q"};
    case TowerKind::BMW: return {"rho", "q"};
    default: return {};
  }
}

std::map<std::string, mpq_class> default_specialization(TowerKind kind) {
  switch (kind) {
    case TowerKind::TL: return {{"qhalf", mpq_class(5, 3)}};
    case TowerKind::Brauer: return {{"delta", mpq_class(7, 3)}};
    case TowerKind::Hecke: return {{"q", mpq_class(5, 3)}};
    case TowerKind::BMW: return {{"rho", mpq_class(5, 3)}, {"q", mpq_class(3, 2)}};
    default: return {};
  }
}

ParamsPtr make_params(TowerKind kind, Mode mode, const std::map<std::string, mpq_class>& values) {
  auto p = std::make_shared<Params>();
  p->kind = kind;
  p->ctx.variables = tower_variables(kind);
  p->ctx.mode = mode;
  const int nv = static_cast<int>(p->ctx.variables.size());
  std::vector<Scalar> vars;
  for (int i = 0; i < nv; ++i) {
    const auto& name = p->ctx.variables[i];
    if (mode == Mode::Specialized) {
      auto it = values.find(name);
      if (it == values.end()) throw std::invalid_argument("missing value for parameter " + name);
      p->ctx.values.push_back(it->second);
      vars.emplace_back(it->second);
    } else {
      vars.push_back(Scalar::variable(nv, i));
    }
  }
  for (const auto& [name, v] : values)
    if (std::find(p->ctx.variables.begin(), p->ctx.variables.end(), name) == p->ctx.variables.end())
      throw std::invalid_argument("parameter " + name + " does not belong to tower " + tower_name(kind));
  p->ctx.validate();
  switch (kind) {
    case TowerKind::TL:
      p->qhalf = vars[0];
      p->delta = p->qhalf + p->qhalf.inverse();
      p->q = p->qhalf * p->qhalf;
      p->hecke_q = p->q;
      break;
    case TowerKind::Brauer:
      p->delta = vars[0];
      break;
    case TowerKind::Hecke:
      p->q = vars[0];
      p->hecke_q = vars[0];
      break;
    case TowerKind::BMW: {
      p->rho = vars[0];
      p->q = vars[1];
      Scalar denom = p->q.inverse() - p->q;
      if (denom.is_zero())
        throw GenericityViolation("q^-1 - q vanishes at " + p->ctx.describe_values() + " (parameter q)");
      p->delta = (p->rho.inverse() - p->rho) / denom + Scalar(1);
      p->hecke_q = p->q * p->q;
      break;
    }
    default:
      break;
  }
  return p;
}

ParamsPtr hecke_params_over(const Params& base, const Scalar& Q) {
  auto p = std::make_shared<Params>(base);
  p->kind = TowerKind::Hecke;
  p->hecke_q = Q;
  return p;
}

ParamsPtr derived_params(const Params& base, TowerKind kind) {
  auto p = std::make_shared<Params>(base);
  p->kind = kind;
  return p;
}

}  // namespace towerlab

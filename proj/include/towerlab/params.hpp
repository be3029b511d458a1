#pragma once

#include <map>
#include <memory>
#include <string>

#include "towerlab/rational_function.hpp"

namespace towerlab {

enum class TowerKind { TL, Brauer, Sym, Hecke, BMW, Ground };

std::string tower_name(TowerKind kind);
TowerKind parse_tower(const std::string& name);
bool is_multiplicative(TowerKind kind);

// Ring context of a tower together with the derived parameters the algebras use.
// In specialized mode every scalar here is a rational constant.
struct Params {
  TowerKind kind = TowerKind::Sym;
  RingContext ctx;
  Scalar delta;    // loop value
  Scalar q;        // Brauer/Sym: unused; BMW: skein q; TL: qhalf^2
  Scalar rho;      // BMW twist
  Scalar qhalf;    // TL
  Scalar hecke_q;  // quadratic parameter of Hecke (also BMW and TL quotient side)

  std::string format(const Scalar& x) const { return x.to_string(ctx.variables); }
  Scalar z() const { return q - q.inverse(); }  // BMW skein coefficient
};

using ParamsPtr = std::shared_ptr<const Params>;

// Variables of each tower: TL {qhalf}, Brauer {delta}, Hecke {q}, BMW {rho, q}, Sym none.
std::vector<std::string> tower_variables(TowerKind kind);

// Builds symbolic parameters, or specialized ones from the given assignments.
ParamsPtr make_params(TowerKind kind, Mode mode, const std::map<std::string, mpq_class>& values = {});

// Hecke parameters sharing another tower's context with quadratic parameter Q.
ParamsPtr hecke_params_over(const Params& base, const Scalar& Q);
// Sym/Ground parameters sharing another tower's context.
ParamsPtr derived_params(const Params& base, TowerKind kind);

// Default generic assignments used for specialized runs.
std::map<std::string, mpq_class> default_specialization(TowerKind kind);

}  // namespace towerlab

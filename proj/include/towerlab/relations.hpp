#pragma once

#include <string>
#include <vector>

#include "towerlab/tower.hpp"

namespace towerlab {

struct RelationCheck {
  std::string name;  // e.g. "g1*g2*g1 = g2*g1*g2"
  bool pass = false;
};

// Evaluates every defining relation of the tower at rank n as an element identity.
std::vector<RelationCheck> check_relations(const TowerFamily& family, int n);

}  // namespace towerlab

#pragma once

#include <stdexcept>
#include <string>

namespace towerlab {

struct DivisionByZero : std::domain_error {
  DivisionByZero() : std::domain_error("division by zero") {}
};

// A specialization hit a pole: the chosen parameter values are not generic.
struct GenericityViolation : std::domain_error {
  explicit GenericityViolation(const std::string& what) : std::domain_error(what) {}
};

struct RankMismatch : std::invalid_argument {
  explicit RankMismatch(const std::string& what) : std::invalid_argument(what) {}
};

struct TowerMismatch : std::invalid_argument {
  explicit TowerMismatch(const std::string& what) : std::invalid_argument(what) {}
};

struct IndexOutOfRange : std::out_of_range {
  explicit IndexOutOfRange(const std::string& what) : std::out_of_range(what) {}
};

struct InvalidVertex : std::invalid_argument {
  explicit InvalidVertex(const std::string& what) : std::invalid_argument(what) {}
};

struct LengthMismatch : std::invalid_argument {
  explicit LengthMismatch(const std::string& what) : std::invalid_argument(what) {}
};

struct SingularSystem : std::runtime_error {
  explicit SingularSystem(const std::string& what) : std::runtime_error(what) {}
};

struct SeparationFailure : std::runtime_error {
  explicit SeparationFailure(const std::string& what) : std::runtime_error(what) {}
};

struct NonTermination : std::logic_error {
  explicit NonTermination(const std::string& what) : std::logic_error(what) {}
};

}  // namespace towerlab

#pragma once

#include "hf/numeric.hpp"

#include <optional>
#include <variant>
#include <vector>

namespace hf {

enum class Relation { LessEqual, GreaterEqual, Equal };

struct LinearConstraint {
  RatVector coefficients;
  Relation relation = Relation::LessEqual;
  Rational rhs;
};

/// An exact rational linear program over free variables. Sign restrictions
/// are ordinary constraints.
struct LinearProgram {
  std::size_t variables = 0;
  RatVector objective;  // empty means the zero objective
  bool maximize = true;
  std::vector<LinearConstraint> constraints;

  void add(RatVector coefficients, Relation relation, Rational rhs) {
    constraints.push_back({std::move(coefficients), relation, std::move(rhs)});
  }
};

struct LpOptimal {
  Rational value;
  RatVector point;
};
struct LpUnbounded {};
struct LpInfeasible {};

using LpResult = std::variant<LpOptimal, LpUnbounded, LpInfeasible>;

/// Two-phase dense simplex with Bland's rule. Deterministic; optimal points
/// are re-checked against every constraint before returning.
LpResult lp_optimize(const LinearProgram& program);

/// Phase one only: some point satisfying every constraint, if any.
std::optional<RatVector> lp_feasible_point(const LinearProgram& program);

bool satisfies(const LinearConstraint& c, const RatVector& point);

}  // namespace hf

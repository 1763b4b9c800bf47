// Exact two-phase simplex over the rationals.
#pragma once

#include <cstddef>
#include <vector>

#include "fbh/rational.hpp"

namespace fbh {

enum class Relation { LessEqual, Equal, GreaterEqual };
enum class Sense { Maximize, Minimize, Feasibility };

struct LinearConstraint {
  std::vector<Rational> coefficients;
  Relation relation = Relation::LessEqual;
  Rational rhs;
};

/// All variables are implicitly nonnegative.
struct LPProblem {
  std::size_t variables = 0;
  std::vector<LinearConstraint> constraints;
  std::vector<Rational> objective;  // ignored for Feasibility
  Sense sense = Sense::Feasibility;

  explicit LPProblem(std::size_t n = 0, Sense s = Sense::Feasibility)
      : variables(n), objective(n), sense(s) {}

  void add(std::vector<Rational> coefficients, Relation relation, Rational rhs) {
    constraints.push_back({std::move(coefficients), relation, std::move(rhs)});
  }
};

enum class LPStatus { Optimal, Infeasible, Unbounded };

struct LPResult {
  LPStatus status = LPStatus::Infeasible;
  Rational value;               // objective value when Optimal (0 for Feasibility)
  std::vector<Rational> point;  // when Optimal
};

/// Bland's rule on both phases, so the solver terminates on degenerate
/// problems. Throws std::invalid_argument on malformed input.
LPResult lp_solve(const LPProblem& problem);

}  // namespace fbh

#pragma once

#include <vector>

#include "mvz/numeric.hpp"

namespace mvz::lp {

enum class Relation { LessEqual, Equal, GreaterEqual };

struct Constraint {
  RationalVector coeffs;
  Relation relation;
  Rational rhs;
};

/// Linear program over x >= 0. Minimizes unless maximize is set.
struct Problem {
  std::size_t num_vars = 0;
  RationalVector objective;  ///< empty means the zero objective
  bool maximize = false;
  std::vector<Constraint> constraints;

  void add(RationalVector coeffs, Relation relation, Rational rhs);
};

enum class Status { Optimal, Infeasible, Unbounded };

struct Solution {
  Status status = Status::Infeasible;
  Rational value;
  RationalVector x;
};

/// Dense two-phase simplex over exact rationals with Bland's rule.
Solution solve(const Problem& problem);

bool feasible(const Problem& problem);

}  // namespace mvz::lp

#include "mvz/lp.hpp"

#include "mvz/errors.hpp"

namespace mvz::lp {

void Problem::add(RationalVector coeffs, Relation relation, Rational rhs) {
  constraints.push_back({std::move(coeffs), relation, std::move(rhs)});
}

namespace {

class Tableau {
 public:
  // rows[i] has cols + 1 entries; the last is the right-hand side.
  std::vector<RationalVector> rows;
  RationalVector cost;  // reduced costs, last entry = -objective value
  std::vector<std::size_t> basis;
  std::size_t cols = 0;

  void pivot(std::size_t r, std::size_t c) {
    Rational inv = 1 / rows[r][c];
    for (auto& v : rows[r]) v *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      eliminate(rows[i], rows[r], c);
    }
    if (cost[c] != 0) eliminate(cost, rows[r], c);
    basis[r] = c;
  }

  void price(const RationalVector& c) {
    cost.assign(cols + 1, Rational(0));
    for (std::size_t j = 0; j < c.size(); ++j) cost[j] = c[j];
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (cost[basis[i]] != 0) eliminate(cost, rows[i], basis[i]);
    }
  }

  /// Minimizes over columns allowed[j]; false if unbounded.
  bool optimize(const std::vector<bool>& allowed) {
    for (;;) {
      std::size_t enter = cols;
      for (std::size_t j = 0; j < cols; ++j) {
        if (allowed[j] && cost[j] < 0) {
          enter = j;
          break;
        }
      }
      if (enter == cols) return true;
      std::size_t leave = rows.size();
      Rational best;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i][enter] <= 0) continue;
        Rational ratio = rows[i][cols] / rows[i][enter];
        if (leave == rows.size() || ratio < best || (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == rows.size()) return false;
      pivot(leave, enter);
    }
  }

 private:
  static void eliminate(RationalVector& target, const RationalVector& src, std::size_t c) {
    Rational f = target[c];
    for (std::size_t j = 0; j < target.size(); ++j) {
      if (src[j] != 0) target[j] -= f * src[j];
    }
  }
};

}  // namespace

Solution solve(const Problem& problem) {
  const std::size_t n = problem.num_vars;
  std::size_t slacks = 0, artificials = 0;
  std::vector<Constraint> cons = problem.constraints;
  for (auto& c : cons) {
    if (c.coeffs.size() != n) throw DimensionMismatch("lp: constraint has wrong length");
    if (c.rhs < 0) {
      for (auto& v : c.coeffs) v = -v;
      c.rhs = -c.rhs;
      if (c.relation == Relation::LessEqual) {
        c.relation = Relation::GreaterEqual;
      } else if (c.relation == Relation::GreaterEqual) {
        c.relation = Relation::LessEqual;
      }
    }
    if (c.relation != Relation::Equal) ++slacks;
    if (c.relation != Relation::LessEqual) ++artificials;
  }

  Tableau t;
  t.cols = n + slacks + artificials;
  const std::size_t first_artificial = n + slacks;
  std::size_t next_slack = n, next_artificial = first_artificial;
  for (const auto& c : cons) {
    RationalVector row(t.cols + 1, Rational(0));
    for (std::size_t j = 0; j < n; ++j) row[j] = c.coeffs[j];
    row[t.cols] = c.rhs;
    if (c.relation == Relation::LessEqual) {
      row[next_slack] = 1;
      t.basis.push_back(next_slack++);
    } else {
      if (c.relation == Relation::GreaterEqual) row[next_slack++] = -1;
      row[next_artificial] = 1;
      t.basis.push_back(next_artificial++);
    }
    t.rows.push_back(std::move(row));
  }

  std::vector<bool> allowed(t.cols, true);
  if (artificials > 0) {
    RationalVector phase1(t.cols, Rational(0));
    for (std::size_t j = first_artificial; j < t.cols; ++j) phase1[j] = 1;
    t.price(phase1);
    t.optimize(allowed);
    if (t.cost[t.cols] != 0) return {Status::Infeasible, 0, {}};
    // Drive zero-level artificials out of the basis; drop redundant rows.
    for (std::size_t i = 0; i < t.rows.size();) {
      if (t.basis[i] < first_artificial) {
        ++i;
        continue;
      }
      std::size_t col = first_artificial;
      for (std::size_t j = 0; j < first_artificial; ++j) {
        if (t.rows[i][j] != 0) {
          col = j;
          break;
        }
      }
      if (col == first_artificial) {
        t.rows.erase(t.rows.begin() + static_cast<std::ptrdiff_t>(i));
        t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(i));
      } else {
        t.pivot(i, col);
        ++i;
      }
    }
    for (std::size_t j = first_artificial; j < t.cols; ++j) allowed[j] = false;
  }

  RationalVector phase2(t.cols, Rational(0));
  for (std::size_t j = 0; j < problem.objective.size() && j < n; ++j) {
    phase2[j] = problem.maximize ? Rational(-problem.objective[j]) : problem.objective[j];
  }
  t.price(phase2);
  if (!t.optimize(allowed)) return {Status::Unbounded, 0, {}};

  Solution s;
  s.status = Status::Optimal;
  s.x.assign(n, Rational(0));
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    if (t.basis[i] < n) s.x[t.basis[i]] = t.rows[i][t.cols];
  }
  s.value = 0;
  for (std::size_t j = 0; j < problem.objective.size() && j < n; ++j) s.value += problem.objective[j] * s.x[j];
  return s;
}

bool feasible(const Problem& problem) {
  Problem p = problem;
  p.objective.clear();
  return solve(p).status != Status::Infeasible;
}

}  // namespace mvz::lp

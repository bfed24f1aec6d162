#include "hf/lp.hpp"

#include <stdexcept>

namespace hf {

namespace {

Rational dot(const RatVector& a, const RatVector& x) {
  Rational acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero()) acc += a[i] * x[i];
  return acc;
}

struct Tableau {
  std::vector<RatVector> rows;
  RatVector rhs;
  std::vector<std::size_t> basis;
  std::size_t columns = 0;

  void pivot(std::size_t r, std::size_t c) {
    const Rational p = rows[r][c];
    for (auto& v : rows[r]) v /= p;
    rhs[r] /= p;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      const Rational f = rows[i][c];
      for (std::size_t j = 0; j < columns; ++j)
        if (!rows[r][j].is_zero()) rows[i][j] -= f * rows[r][j];
      rhs[i] -= f * rhs[r];
    }
    basis[r] = c;
  }

  void drop_row(std::size_t r) {
    rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(r));
    rhs.erase(rhs.begin() + static_cast<std::ptrdiff_t>(r));
    basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(r));
  }
};

enum class SimplexStatus { Optimal, Unbounded };

// Maximizes cost . z over the tableau's feasible set, entering only columns
// below `allowed`. Bland's rule on both the entering and leaving choice.
SimplexStatus run_simplex(Tableau& t, const RatVector& cost, std::size_t allowed) {
  std::vector<bool> is_basic(t.columns, false);
  for (;;) {
    std::fill(is_basic.begin(), is_basic.end(), false);
    for (auto b : t.basis) is_basic[b] = true;

    std::size_t entering = t.columns;
    for (std::size_t j = 0; j < allowed; ++j) {
      if (is_basic[j]) continue;
      Rational reduced = cost[j];
      for (std::size_t i = 0; i < t.rows.size(); ++i)
        if (!t.rows[i][j].is_zero() && !cost[t.basis[i]].is_zero()) reduced -= cost[t.basis[i]] * t.rows[i][j];
      if (reduced > 0) {
        entering = j;
        break;
      }
    }
    if (entering == t.columns) return SimplexStatus::Optimal;

    std::size_t leaving = t.rows.size();
    Rational best_ratio;
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
      if (t.rows[i][entering] <= 0) continue;
      Rational ratio = t.rhs[i] / t.rows[i][entering];
      if (leaving == t.rows.size() || ratio < best_ratio ||
          (ratio == best_ratio && t.basis[i] < t.basis[leaving])) {
        leaving = i;
        best_ratio = ratio;
      }
    }
    if (leaving == t.rows.size()) return SimplexStatus::Unbounded;
    t.pivot(leaving, entering);
  }
}

struct StandardForm {
  Tableau tableau;
  std::size_t structural = 0;  // 2 * variables (positive and negative parts)
  std::size_t artificial_begin = 0;
};

StandardForm to_standard_form(const LinearProgram& lp) {
  const std::size_t n = lp.variables;
  std::size_t slacks = 0;
  for (const auto& c : lp.constraints) {
    if (c.coefficients.size() != n) throw std::invalid_argument("lp: constraint width mismatch");
    if (c.relation != Relation::Equal) ++slacks;
  }
  const std::size_t m = lp.constraints.size();
  StandardForm sf;
  sf.structural = 2 * n;
  sf.artificial_begin = 2 * n + slacks;
  Tableau& t = sf.tableau;
  t.columns = sf.artificial_begin + m;
  t.rows.assign(m, RatVector(t.columns));
  t.rhs.assign(m, Rational(0));
  t.basis.assign(m, 0);

  std::size_t slack = 2 * n;
  for (std::size_t i = 0; i < m; ++i) {
    const auto& c = lp.constraints[i];
    const bool flip = c.rhs < 0;
    const Rational sign = flip ? -1 : 1;
    for (std::size_t j = 0; j < n; ++j) {
      t.rows[i][j] = sign * c.coefficients[j];
      t.rows[i][n + j] = -sign * c.coefficients[j];
    }
    if (c.relation == Relation::LessEqual) t.rows[i][slack++] = sign;
    if (c.relation == Relation::GreaterEqual) t.rows[i][slack++] = -sign;
    t.rhs[i] = sign * c.rhs;
    // Every row gets an artificial; phase one removes them all.
    t.rows[i][sf.artificial_begin + i] = 1;
    t.basis[i] = sf.artificial_begin + i;
  }
  return sf;
}

// Returns false when infeasible. On success no artificial remains basic.
bool phase_one(StandardForm& sf) {
  Tableau& t = sf.tableau;
  RatVector cost(t.columns);
  for (std::size_t j = sf.artificial_begin; j < t.columns; ++j) cost[j] = -1;
  run_simplex(t, cost, t.columns);
  Rational value = 0;
  for (std::size_t i = 0; i < t.rows.size(); ++i) value += cost[t.basis[i]] * t.rhs[i];
  if (value < 0) return false;

  for (std::size_t i = 0; i < t.rows.size();) {
    if (t.basis[i] < sf.artificial_begin) {
      ++i;
      continue;
    }
    std::size_t col = sf.artificial_begin;
    for (std::size_t j = 0; j < sf.artificial_begin; ++j)
      if (!t.rows[i][j].is_zero()) {
        col = j;
        break;
      }
    if (col == sf.artificial_begin) {
      t.drop_row(i);  // redundant equality
    } else {
      t.pivot(i, col);
      ++i;
    }
  }
  return true;
}

RatVector extract_point(const StandardForm& sf, std::size_t n) {
  RatVector x(n);
  const Tableau& t = sf.tableau;
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    const std::size_t b = t.basis[i];
    if (b < n) x[b] += t.rhs[i];
    else if (b < 2 * n) x[b - n] -= t.rhs[i];
  }
  return x;
}

}  // namespace

bool satisfies(const LinearConstraint& c, const RatVector& point) {
  const Rational lhs = dot(c.coefficients, point);
  switch (c.relation) {
    case Relation::LessEqual: return lhs <= c.rhs;
    case Relation::GreaterEqual: return lhs >= c.rhs;
    case Relation::Equal: return lhs == c.rhs;
  }
  return false;
}

std::optional<RatVector> lp_feasible_point(const LinearProgram& program) {
  StandardForm sf = to_standard_form(program);
  if (!phase_one(sf)) return std::nullopt;
  RatVector x = extract_point(sf, program.variables);
  for (const auto& c : program.constraints)
    if (!satisfies(c, x)) throw std::logic_error("lp: phase one point violates a constraint");
  return x;
}

LpResult lp_optimize(const LinearProgram& program) {
  const std::size_t n = program.variables;
  if (!program.objective.empty() && program.objective.size() != n)
    throw std::invalid_argument("lp: objective width mismatch");
  StandardForm sf = to_standard_form(program);
  if (!phase_one(sf)) return LpInfeasible{};

  RatVector cost(sf.tableau.columns);
  if (!program.objective.empty()) {
    const Rational sign = program.maximize ? 1 : -1;
    for (std::size_t j = 0; j < n; ++j) {
      cost[j] = sign * program.objective[j];
      cost[n + j] = -cost[j];
    }
  }
  if (run_simplex(sf.tableau, cost, sf.artificial_begin) == SimplexStatus::Unbounded) return LpUnbounded{};

  LpOptimal out;
  out.point = extract_point(sf, n);
  out.value = program.objective.empty() ? Rational(0) : dot(program.objective, out.point);
  for (const auto& c : program.constraints)
    if (!satisfies(c, out.point)) throw std::logic_error("lp: optimal point violates a constraint");
  return out;
}

}  // namespace hf

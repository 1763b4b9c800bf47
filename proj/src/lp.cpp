#include "fbh/lp.hpp"

#include <optional>
#include <stdexcept>

namespace fbh {

namespace {

class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols)
      : cols_(cols), a_(rows, std::vector<Rational>(cols)), b_(rows), basis_(rows), cost_(cols) {}

  std::size_t rows() const { return a_.size(); }
  std::size_t cols() const { return cols_; }
  Rational& at(std::size_t r, std::size_t c) { return a_[r][c]; }
  Rational& rhs(std::size_t r) { return b_[r]; }
  std::size_t& basic(std::size_t r) { return basis_[r]; }

  // Installs the objective (maximize c.x) and computes reduced costs c_j - z_j.
  void set_objective(const std::vector<Rational>& c) {
    for (std::size_t j = 0; j < cols_; ++j) {
      Rational z = 0;
      for (std::size_t i = 0; i < rows(); ++i) z += c[basis_[i]] * a_[i][j];
      cost_[j] = c[j] - z;
    }
    value_ = 0;
    for (std::size_t i = 0; i < rows(); ++i) value_ += c[basis_[i]] * b_[i];
  }

  const Rational& value() const { return value_; }

  void pivot(std::size_t r, std::size_t c) {
    const Rational inv = 1 / a_[r][c];
    for (auto& x : a_[r]) x *= inv;
    b_[r] *= inv;
    for (std::size_t i = 0; i < rows(); ++i) {
      if (i == r || a_[i][c] == 0) continue;
      const Rational f = a_[i][c];
      for (std::size_t j = 0; j < cols_; ++j)
        if (a_[r][j] != 0) a_[i][j] -= f * a_[r][j];
      b_[i] -= f * b_[r];
    }
    if (cost_[c] != 0) {
      const Rational f = cost_[c];
      for (std::size_t j = 0; j < cols_; ++j)
        if (a_[r][j] != 0) cost_[j] -= f * a_[r][j];
      value_ += f * b_[r];
    }
    basis_[r] = c;
  }

  // Runs Bland's rule to optimality. Columns with allowed[j] == false never enter.
  // Returns false when unbounded.
  bool optimize(const std::vector<bool>& allowed) {
    for (;;) {
      std::optional<std::size_t> enter;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (allowed[j] && cost_[j] > 0) {
          enter = j;
          break;
        }
      }
      if (!enter) return true;
      std::optional<std::size_t> leave;
      Rational best_ratio;
      for (std::size_t i = 0; i < rows(); ++i) {
        if (a_[i][*enter] <= 0) continue;
        const Rational ratio = b_[i] / a_[i][*enter];
        if (!leave || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[*leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (!leave) return false;
      pivot(*leave, *enter);
    }
  }

  void drop_row(std::size_t r) {
    a_.erase(a_.begin() + static_cast<std::ptrdiff_t>(r));
    b_.erase(b_.begin() + static_cast<std::ptrdiff_t>(r));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
  }

 private:
  std::size_t cols_;
  std::vector<std::vector<Rational>> a_;
  std::vector<Rational> b_;
  std::vector<std::size_t> basis_;
  std::vector<Rational> cost_;
  Rational value_;
};

}  // namespace

LPResult lp_solve(const LPProblem& problem) {
  const std::size_t n = problem.variables;
  if (problem.sense != Sense::Feasibility && problem.objective.size() != n)
    throw std::invalid_argument("objective length does not match variable count");
  for (const auto& c : problem.constraints)
    if (c.coefficients.size() != n)
      throw std::invalid_argument("constraint length does not match variable count");

  const std::size_t m = problem.constraints.size();

  // Normalize every row to a nonnegative right-hand side.
  struct Row {
    std::vector<Rational> a;
    Relation rel;
    Rational b;
  };
  std::vector<Row> rows;
  rows.reserve(m);
  std::size_t slack_count = 0;
  std::size_t artificial_count = 0;
  for (const auto& c : problem.constraints) {
    Row row{c.coefficients, c.relation, c.rhs};
    if (row.b < 0) {
      for (auto& x : row.a) x = -x;
      row.b = -row.b;
      if (row.rel == Relation::LessEqual)
        row.rel = Relation::GreaterEqual;
      else if (row.rel == Relation::GreaterEqual)
        row.rel = Relation::LessEqual;
    }
    if (row.rel != Relation::Equal) ++slack_count;
    if (row.rel != Relation::LessEqual) ++artificial_count;
    rows.push_back(std::move(row));
  }

  const std::size_t first_slack = n;
  const std::size_t first_artificial = n + slack_count;
  const std::size_t cols = first_artificial + artificial_count;
  Tableau t(m, cols);
  std::size_t next_slack = first_slack;
  std::size_t next_artificial = first_artificial;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) t.at(i, j) = rows[i].a[j];
    t.rhs(i) = rows[i].b;
    switch (rows[i].rel) {
      case Relation::LessEqual:
        t.at(i, next_slack) = 1;
        t.basic(i) = next_slack++;
        break;
      case Relation::GreaterEqual:
        t.at(i, next_slack++) = -1;
        t.at(i, next_artificial) = 1;
        t.basic(i) = next_artificial++;
        break;
      case Relation::Equal:
        t.at(i, next_artificial) = 1;
        t.basic(i) = next_artificial++;
        break;
    }
  }

  std::vector<bool> allowed(cols, true);
  if (artificial_count > 0) {
    std::vector<Rational> phase1(cols);
    for (std::size_t j = first_artificial; j < cols; ++j) phase1[j] = -1;
    t.set_objective(phase1);
    t.optimize(allowed);  // bounded above by 0
    if (t.value() < 0) return {LPStatus::Infeasible, 0, {}};
    // Drive zero-valued artificials out of the basis; rows that cannot be
    // pivoted on a structural column are redundant.
    for (std::size_t i = 0; i < t.rows();) {
      if (t.basic(i) < first_artificial) {
        ++i;
        continue;
      }
      std::optional<std::size_t> col;
      for (std::size_t j = 0; j < first_artificial; ++j) {
        if (t.at(i, j) != 0) {
          col = j;
          break;
        }
      }
      if (col) {
        t.pivot(i, *col);
        ++i;
      } else {
        t.drop_row(i);
      }
    }
    for (std::size_t j = first_artificial; j < cols; ++j) allowed[j] = false;
  }

  Rational value = 0;
  if (problem.sense != Sense::Feasibility) {
    std::vector<Rational> c(cols);
    for (std::size_t j = 0; j < n; ++j)
      c[j] = problem.sense == Sense::Maximize ? problem.objective[j] : Rational(-problem.objective[j]);
    t.set_objective(c);
    if (!t.optimize(allowed)) return {LPStatus::Unbounded, 0, {}};
    value = problem.sense == Sense::Maximize ? t.value() : Rational(-t.value());
  }

  std::vector<Rational> point(n);
  for (std::size_t i = 0; i < t.rows(); ++i)
    if (t.basic(i) < n) point[t.basic(i)] = t.rhs(i);
  return {LPStatus::Optimal, value, std::move(point)};
}

}  // namespace fbh

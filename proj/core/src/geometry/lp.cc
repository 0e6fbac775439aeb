#include "petruska/geometry/lp.h"

#include <limits>
#include <optional>

#include "petruska/error.h"

namespace petruska::geom {
namespace {

// Dictionary form: basic_[i] = beta_[i] + sum_j coef_[i][j] * x(nonbasic_[j]).
// Variable ids: [0, n) original free variables, [n, n + m) slacks,
// n + m the phase-one auxiliary variable.
class Dictionary {
 public:
  Dictionary(std::span<const LinearConstraint> rows, std::size_t n,
             std::span<const Rat> objective)
      : n_(n), m_(rows.size()) {
    nonbasic_.resize(n);
    col_free_.assign(n, true);
    for (std::size_t j = 0; j < n; ++j) nonbasic_[j] = static_cast<int>(j);
    basic_.resize(m_);
    row_free_.assign(m_, false);
    beta_.resize(m_);
    coef_.assign(m_, std::vector<Rat>(n));
    for (std::size_t i = 0; i < m_; ++i) {
      if (rows[i].coeffs.size() != n) {
        throw Error("constraint arity does not match variable count");
      }
      basic_[i] = static_cast<int>(n + i);
      beta_[i] = rows[i].rhs;
      for (std::size_t j = 0; j < n; ++j) coef_[i][j] = -rows[i].coeffs[j];
    }
    obj_.assign(n, Rat(0));
    if (!objective.empty()) {
      if (objective.size() != n) throw Error("objective arity mismatch");
      for (std::size_t j = 0; j < n; ++j) obj_[j] = objective[j];
    }
    aux_.assign(n, Rat(0));
  }

  LpSolution solve(bool has_objective) {
    pivot_free_variables_into_basis();
    if (!phase_one()) return LpSolution{LpStatus::kInfeasible, {}, Rat(0)};
    LpSolution out;
    out.status = LpStatus::kOptimal;
    if (has_objective) {
      for (std::size_t j = 0; j < nonbasic_.size(); ++j) {
        if (col_free_[j] && sgn(obj_[j]) != 0) {
          out.status = LpStatus::kUnbounded;
        }
      }
      if (out.status == LpStatus::kOptimal && !optimize(obj_)) {
        out.status = LpStatus::kUnbounded;
      }
    }
    out.point.assign(n_, Rat(0));
    for (std::size_t i = 0; i < basic_.size(); ++i) {
      if (basic_[i] < static_cast<int>(n_)) out.point[basic_[i]] = beta_[i];
    }
    out.value = out.status == LpStatus::kOptimal ? obj0_ : Rat(0);
    return out;
  }

 private:
  void pivot(std::size_t r, std::size_t e) {
    const Rat a = coef_[r][e];
    const std::size_t cols = nonbasic_.size();
    // Solve row r for the entering variable.
    Rat inv = 1 / a;
    beta_[r] = -beta_[r] * inv;
    for (std::size_t j = 0; j < cols; ++j) {
      if (j == e) continue;
      coef_[r][j] = -coef_[r][j] * inv;
    }
    coef_[r][e] = inv;
    auto substitute = [&](Rat& constant, std::vector<Rat>& row) {
      if (sgn(row[e]) == 0) return;
      const Rat f = row[e];
      constant += f * beta_[r];
      for (std::size_t j = 0; j < cols; ++j) {
        if (j == e) continue;
        if (sgn(coef_[r][j]) != 0) row[j] += f * coef_[r][j];
      }
      row[e] = f * coef_[r][e];
    };
    for (std::size_t i = 0; i < basic_.size(); ++i) {
      if (i != r) substitute(beta_[i], coef_[i]);
    }
    substitute(obj0_, obj_);
    substitute(aux0_, aux_);
    std::swap(basic_[r], nonbasic_[e]);
  }

  void pivot_free_variables_into_basis() {
    for (std::size_t e = 0; e < nonbasic_.size(); ++e) {
      if (!col_free_[e]) continue;
      std::optional<std::size_t> row;
      for (std::size_t i = 0; i < basic_.size(); ++i) {
        if (!row_free_[i] && sgn(coef_[i][e]) != 0) {
          row = i;
          break;
        }
      }
      // A column with no constrained entry is a free direction; it stays
      // nonbasic at zero and never re-enters.
      if (!row) continue;
      pivot(*row, e);
      row_free_[*row] = true;
      col_free_[e] = false;
    }
  }

  // Bland's rule ascent on `row`; false when unbounded.
  bool optimize(const std::vector<Rat>& row) {
    for (;;) {
      std::optional<std::size_t> enter;
      for (std::size_t j = 0; j < nonbasic_.size(); ++j) {
        if (col_free_[j] || sgn(row[j]) <= 0) continue;
        if (!enter || nonbasic_[j] < nonbasic_[*enter]) enter = j;
      }
      if (!enter) return true;
      const std::size_t e = *enter;
      std::optional<std::size_t> leave;
      Rat best;
      for (std::size_t i = 0; i < basic_.size(); ++i) {
        if (row_free_[i] || sgn(coef_[i][e]) >= 0) continue;
        Rat ratio = beta_[i] / -coef_[i][e];
        if (!leave || ratio < best ||
            (ratio == best && basic_[i] < basic_[*leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (!leave) return false;
      pivot(*leave, e);
    }
  }

  bool phase_one() {
    std::optional<std::size_t> worst;
    for (std::size_t i = 0; i < basic_.size(); ++i) {
      if (row_free_[i] || sgn(beta_[i]) >= 0) continue;
      if (!worst || beta_[i] < beta_[*worst] ||
          (beta_[i] == beta_[*worst] && basic_[i] < basic_[*worst])) {
        worst = i;
      }
    }
    if (!worst) return true;

    const int aux_id = static_cast<int>(n_ + m_);
    const std::size_t aux_col = nonbasic_.size();
    nonbasic_.push_back(aux_id);
    col_free_.push_back(false);
    for (std::size_t i = 0; i < basic_.size(); ++i) {
      coef_[i].push_back(row_free_[i] ? Rat(0) : Rat(1));
    }
    obj_.push_back(Rat(0));
    aux0_ = 0;
    aux_.push_back(Rat(-1));

    pivot(*worst, aux_col);
    if (!optimize(aux_)) {
      throw InvariantError("phase-one objective unbounded");
    }
    if (sgn(aux0_) < 0) return false;

    // Drive the auxiliary variable out of the basis if it stayed there at 0.
    for (std::size_t i = 0; i < basic_.size(); ++i) {
      if (basic_[i] != aux_id) continue;
      std::optional<std::size_t> enter;
      for (std::size_t j = 0; j < nonbasic_.size(); ++j) {
        if (col_free_[j] || sgn(coef_[i][j]) == 0) continue;
        if (!enter || nonbasic_[j] < nonbasic_[*enter]) enter = j;
      }
      if (enter) {
        pivot(i, *enter);
      } else {
        basic_.erase(basic_.begin() + static_cast<long>(i));
        beta_.erase(beta_.begin() + static_cast<long>(i));
        coef_.erase(coef_.begin() + static_cast<long>(i));
        row_free_.erase(row_free_.begin() + static_cast<long>(i));
      }
      break;
    }
    std::size_t col = 0;
    while (nonbasic_[col] != aux_id) ++col;
    auto drop = [col](auto& v) { v.erase(v.begin() + static_cast<long>(col)); };
    drop(nonbasic_);
    drop(col_free_);
    for (auto& row : coef_) drop(row);
    drop(obj_);
    drop(aux_);
    return true;
  }

  std::size_t n_;
  std::size_t m_;
  std::vector<int> basic_;
  std::vector<int> nonbasic_;
  std::vector<bool> row_free_;
  std::vector<bool> col_free_;
  std::vector<Rat> beta_;
  std::vector<std::vector<Rat>> coef_;
  Rat obj0_{0};
  std::vector<Rat> obj_;
  Rat aux0_{0};
  std::vector<Rat> aux_;
};

}  // namespace

LpSolution solve_lp(std::span<const LinearConstraint> constraints,
                    std::size_t num_vars, std::span<const Rat> objective) {
  Dictionary dict(constraints, num_vars, objective);
  return dict.solve(!objective.empty());
}

}  // namespace petruska::geom

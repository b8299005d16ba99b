#include "d2dprice/lp.hpp"

#include <cmath>
#include <stdexcept>

namespace d2d::lp {

namespace {

void check_matrix(const std::vector<std::vector<double>>& a, const std::vector<double>& b,
                  std::size_t n, const char* name) {
  if (a.size() != b.size()) throw std::invalid_argument(std::string(name) + " row count mismatch");
  for (const auto& row : a) {
    if (row.size() != n) throw std::invalid_argument(std::string(name) + " column count mismatch");
    for (double v : row) {
      if (!std::isfinite(v)) throw std::invalid_argument(std::string(name) + " has non-finite entry");
    }
  }
  for (double v : b) {
    if (!std::isfinite(v)) throw std::invalid_argument(std::string(name) + " rhs has non-finite entry");
  }
}

}  // namespace

void LpProblem::validate() const {
  if (c.empty()) throw std::invalid_argument("objective must have at least one variable");
  for (double v : c) {
    if (!std::isfinite(v)) throw std::invalid_argument("objective has non-finite entry");
  }
  check_matrix(a_ub, b_ub, c.size(), "a_ub");
  check_matrix(a_eq, b_eq, c.size(), "a_eq");
}

const char* to_string(LpStatus s) {
  switch (s) {
    case LpStatus::optimal: return "optimal";
    case LpStatus::infeasible: return "infeasible";
    case LpStatus::unbounded: return "unbounded";
  }
  return "unknown";
}

namespace {

// Simplex tableau kept with basic columns reduced to identity. zrow holds
// z_j - d_j for the current phase cost d.
struct Tableau {
  std::size_t ncols = 0;
  std::vector<std::vector<double>> rows;
  std::vector<double> rhs;
  std::vector<std::size_t> basis;
  std::vector<double> zrow;
  int pivots = 0;

  void pivot(std::size_t r, std::size_t j) {
    double piv = rows[r][j];
    for (double& v : rows[r]) v /= piv;
    rhs[r] /= piv;
    rows[r][j] = 1.0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r) continue;
      double f = rows[i][j];
      if (f == 0.0) continue;
      for (std::size_t k = 0; k < ncols; ++k) rows[i][k] -= f * rows[r][k];
      rows[i][j] = 0.0;
      rhs[i] -= f * rhs[r];
    }
    double f = zrow[j];
    if (f != 0.0) {
      for (std::size_t k = 0; k < ncols; ++k) zrow[k] -= f * rows[r][k];
      zrow[j] = 0.0;
    }
    basis[r] = j;
    ++pivots;
  }

  void load_costs(const std::vector<double>& d) {
    zrow.assign(ncols, 0.0);
    for (std::size_t j = 0; j < ncols; ++j) {
      double z = 0.0;
      for (std::size_t i = 0; i < rows.size(); ++i) z += d[basis[i]] * rows[i][j];
      zrow[j] = z - d[j];
    }
  }

  // Runs simplex to optimality for the loaded costs. Columns j with
  // allowed[j] == 0 are never entered. Returns false when an improving
  // column has no positive pivot entry (unbounded direction).
  bool optimize(const std::vector<char>& allowed, double tol, int max_pivots) {
    while (true) {
      std::size_t enter = ncols;
      for (std::size_t j = 0; j < ncols; ++j) {
        if (allowed[j] && zrow[j] < -tol) {
          enter = j;
          break;
        }
      }
      if (enter == ncols) return true;
      std::size_t leave = rows.size();
      double best_ratio = 0.0;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i][enter] > tol) {
          double ratio = rhs[i] / rows[i][enter];
          if (leave == rows.size() || ratio < best_ratio - tol ||
              (ratio < best_ratio + tol && basis[i] < basis[leave])) {
            leave = i;
            best_ratio = ratio;
          }
        }
      }
      if (leave == rows.size()) return false;
      pivot(leave, enter);
      if (pivots > max_pivots) throw std::runtime_error("simplex did not terminate");
    }
  }
};

}  // namespace

LpSolution solve_lp(const LpProblem& prob, double tol) {
  prob.validate();
  if (!(tol > 0.0)) throw std::invalid_argument("tol must be > 0");

  const std::size_t n = prob.num_vars();
  const std::size_t mu = prob.a_ub.size();
  const std::size_t me = prob.a_eq.size();
  const std::size_t m = mu + me;

  // Columns: structural | slack (one per inequality) | artificial.
  Tableau t;
  t.rows.assign(m, {});
  t.rhs.assign(m, 0.0);
  t.basis.assign(m, 0);
  std::vector<std::size_t> artificial_rows;
  for (std::size_t r = 0; r < m; ++r) {
    const bool is_ub = r < mu;
    const auto& a = is_ub ? prob.a_ub[r] : prob.a_eq[r - mu];
    double b = is_ub ? prob.b_ub[r] : prob.b_eq[r - mu];
    double sign = b < 0.0 ? -1.0 : 1.0;
    auto& row = t.rows[r];
    row.assign(n + mu, 0.0);
    for (std::size_t j = 0; j < n; ++j) row[j] = sign * a[j];
    if (is_ub) row[n + r] = sign;
    t.rhs[r] = sign * b;
    if (is_ub && sign > 0.0) {
      t.basis[r] = n + r;
    } else {
      artificial_rows.push_back(r);
    }
  }
  const std::size_t na = artificial_rows.size();
  t.ncols = n + mu + na;
  for (auto& row : t.rows) row.resize(t.ncols, 0.0);
  for (std::size_t k = 0; k < na; ++k) {
    std::size_t r = artificial_rows[k];
    t.rows[r][n + mu + k] = 1.0;
    t.basis[r] = n + mu + k;
  }

  const int max_pivots = 10000 + 200 * static_cast<int>(m + t.ncols);
  std::vector<char> allowed(t.ncols, 1);

  if (na > 0) {
    std::vector<double> d(t.ncols, 0.0);
    for (std::size_t k = 0; k < na; ++k) d[n + mu + k] = -1.0;
    t.load_costs(d);
    t.optimize(allowed, tol, max_pivots);
    double infeas = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      if (t.basis[i] >= n + mu) infeas += t.rhs[i];
    }
    if (infeas > tol) return {LpStatus::infeasible, {}, 0.0, t.pivots};
    // Drive artificials that are still basic (at zero) out of the basis.
    for (std::size_t i = 0; i < m; ++i) {
      if (t.basis[i] < n + mu) continue;
      std::size_t j = n + mu;
      for (std::size_t k = 0; k < n + mu; ++k) {
        if (std::fabs(t.rows[i][k]) > tol) {
          j = k;
          break;
        }
      }
      if (j < n + mu) t.pivot(i, j);
      // Otherwise the row is redundant; the artificial stays basic at zero
      // and its row can never be selected as a pivot row again.
    }
  }

  for (std::size_t k = 0; k < na; ++k) allowed[n + mu + k] = 0;
  std::vector<double> d(t.ncols, 0.0);
  for (std::size_t j = 0; j < n; ++j) d[j] = prob.c[j];
  t.load_costs(d);
  if (!t.optimize(allowed, tol, max_pivots)) return {LpStatus::unbounded, {}, 0.0, t.pivots};

  std::vector<double> x(n, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    if (t.basis[i] < n) x[t.basis[i]] = t.rhs[i];
  }
  double obj = 0.0;
  for (std::size_t j = 0; j < n; ++j) obj += prob.c[j] * x[j];
  return {LpStatus::optimal, std::move(x), obj, t.pivots};
}

}  // namespace d2d::lp

#include "gsearch/lp_solver.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include <Eigen/Dense>

#include "gsearch/errors.hpp"

namespace gsearch {

int LinearProgram::add_variable(std::string name, double cost, double upper_bound) {
  names.push_back(std::move(name));
  objective.push_back(cost);
  upper.push_back(upper_bound);
  return static_cast<int>(names.size()) - 1;
}

void LinearProgram::add_row(std::string name, std::vector<std::pair<int, double>> terms, double rhs) {
  rows.push_back({std::move(name), std::move(terms), rhs});
}

namespace {

constexpr double kPivotTol = 1e-11;
constexpr double kFeasTol = 1e-9;
constexpr int kBlandAfter = 20000;
constexpr int kMaxIterations = 500000;

std::string term_text(double coef, const std::string& name, bool first) {
  std::ostringstream out;
  if (coef < 0) out << (first ? "- " : " - ");
  else if (!first) out << " + ";
  const double mag = std::fabs(coef);
  if (mag != 1.0) out << mag << ' ';
  out << name;
  return out.str();
}

[[noreturn]] void fail(const LinearProgram& lp, const std::string& why) {
  throw std::runtime_error("LP solver failure: " + why + "\n" + to_lp_format(lp));
}

}  // namespace

std::string to_lp_format(const LinearProgram& lp) {
  std::ostringstream out;
  out.precision(17);
  out << "Minimize\n obj:";
  bool first = true;
  for (int j = 0; j < lp.variable_count(); ++j) {
    if (lp.objective[static_cast<std::size_t>(j)] == 0) continue;
    out << ' ' << term_text(lp.objective[static_cast<std::size_t>(j)], lp.names[static_cast<std::size_t>(j)], first);
    first = false;
  }
  if (first) out << " 0 " << (lp.names.empty() ? "dummy" : lp.names.front());
  out << "\nSubject To\n";
  for (const auto& row : lp.rows) {
    out << ' ' << row.name << ':';
    bool head = true;
    for (auto [j, a] : row.terms) {
      out << ' ' << term_text(a, lp.names[static_cast<std::size_t>(j)], head);
      head = false;
    }
    out << " >= " << row.rhs << '\n';
  }
  out << "Bounds\n";
  for (int j = 0; j < lp.variable_count(); ++j) {
    const auto J = static_cast<std::size_t>(j);
    if (std::isinf(lp.upper[J])) out << ' ' << lp.names[J] << " >= 0\n";
    else out << " 0 <= " << lp.names[J] << " <= " << lp.upper[J] << '\n';
  }
  out << "End\n";
  return out.str();
}

LpSolution solve_lp(const LinearProgram& lp) {
  const int n = lp.variable_count();
  const int m = static_cast<int>(lp.rows.size());
  for (double c : lp.objective)
    if (c < 0) throw PreconditionError("solve_lp needs nonnegative objective coefficients");
  if (static_cast<double>(m) * (n + m) > 6e7) throw LimitError("LP too large for the dense tableau");

  // Row i of the tableau starts as  -a_i z + s_i = -b_i  with s_i basic.
  using Tableau = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  const int cols = n + m;
  Tableau t = Tableau::Zero(m, cols);
  Eigen::VectorXd beta(m);
  Eigen::VectorXd d = Eigen::VectorXd::Zero(cols);
  std::vector<int> basis(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    for (auto [j, a] : lp.rows[static_cast<std::size_t>(i)].terms) t(i, j) -= a;
    t(i, n + i) = 1;
    beta(i) = -lp.rows[static_cast<std::size_t>(i)].rhs;
    basis[static_cast<std::size_t>(i)] = n + i;
  }
  for (int j = 0; j < n; ++j) d(j) = lp.objective[static_cast<std::size_t>(j)];

  LpSolution sol;
  for (;; ++sol.iterations) {
    if (sol.iterations > kMaxIterations) fail(lp, "iteration limit");
    int r = -1;
    if (sol.iterations < kBlandAfter) {
      double worst = -kFeasTol;
      for (int i = 0; i < m; ++i)
        if (beta(i) < worst) {
          worst = beta(i);
          r = i;
        }
    } else {
      for (int i = 0; i < m; ++i)
        if (beta(i) < -kFeasTol && (r < 0 || basis[static_cast<std::size_t>(i)] < basis[static_cast<std::size_t>(r)])) r = i;
    }
    if (r < 0) break;
    int q = -1;
    double best = 0;
    for (int j = 0; j < cols; ++j) {
      const double a = t(r, j);
      if (a >= -kPivotTol) continue;
      const double ratio = std::max(d(j), 0.0) / -a;
      if (q < 0 || ratio < best - 1e-12) {
        q = j;
        best = ratio;
      }
    }
    if (q < 0) fail(lp, "infeasible program (row " + lp.rows[static_cast<std::size_t>(r)].name + ")");

    const double pivot = t(r, q);
    t.row(r) /= pivot;
    beta(r) /= pivot;
    t(r, q) = 1;
    for (int i = 0; i < m; ++i) {
      if (i == r) continue;
      const double f = t(i, q);
      if (f == 0) continue;
      t.row(i) -= f * t.row(r);
      beta(i) -= f * beta(r);
      t(i, q) = 0;
    }
    const double f = d(q);
    if (f != 0) {
      d -= f * t.row(r).transpose();
      d(q) = 0;
    }
    basis[static_cast<std::size_t>(r)] = q;
  }

  std::vector<double> z(static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < m; ++i)
    if (basis[static_cast<std::size_t>(i)] < n) z[static_cast<std::size_t>(basis[static_cast<std::size_t>(i)])] = beta(i);
  // Reduced cost of slack i equals the dual price of row i.
  sol.duals.resize(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) sol.duals[static_cast<std::size_t>(i)] = d(n + i);

  // Certificate: primal feasibility, dual feasibility, equal objectives.
  double primal = 0, dual = 0;
  for (int j = 0; j < n; ++j) primal += lp.objective[static_cast<std::size_t>(j)] * z[static_cast<std::size_t>(j)];
  std::vector<double> reduced(lp.objective);
  for (int i = 0; i < m; ++i) {
    const auto& row = lp.rows[static_cast<std::size_t>(i)];
    const double y = sol.duals[static_cast<std::size_t>(i)];
    if (y < -1e-7) fail(lp, "negative dual price on row " + row.name);
    double lhs = 0;
    for (auto [j, a] : row.terms) {
      lhs += a * z[static_cast<std::size_t>(j)];
      reduced[static_cast<std::size_t>(j)] -= a * y;
    }
    if (lhs < row.rhs - 1e-7 * std::max(1.0, std::fabs(row.rhs))) fail(lp, "row " + row.name + " violated");
    dual += row.rhs * y;
  }
  for (int j = 0; j < n; ++j) {
    if (z[static_cast<std::size_t>(j)] < -1e-7) fail(lp, "negative value for " + lp.names[static_cast<std::size_t>(j)]);
    if (reduced[static_cast<std::size_t>(j)] < -1e-7 * std::max(1.0, lp.objective[static_cast<std::size_t>(j)]))
      fail(lp, "dual infeasible at " + lp.names[static_cast<std::size_t>(j)]);
  }
  if (std::fabs(primal - dual) > 1e-6 * std::max(1.0, std::fabs(primal))) fail(lp, "duality gap too large");

  sol.objective = primal;
  sol.values.resize(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j)
    sol.values[static_cast<std::size_t>(j)] = std::clamp(z[static_cast<std::size_t>(j)], 0.0, lp.upper[static_cast<std::size_t>(j)]);
  return sol;
}

}  // namespace gsearch

#pragma once

#include <string>
#include <utility>
#include <vector>

namespace gsearch {

/// min c^T z  subject to  rows (sum a_j z_j >= rhs),  0 <= z <= upper.
///
/// The solver needs c >= 0 and ignores the upper bounds during pivoting; the
/// optimum is clipped into the box afterwards. That is only sound for
/// programs where lowering an over-bound value to its bound keeps every row
/// satisfied, which holds for the search LPs built in monotone_lp.
struct LinearProgram {
  struct Row {
    std::string name;
    std::vector<std::pair<int, double>> terms;
    double rhs = 0;
  };

  std::vector<std::string> names;
  std::vector<double> objective;
  std::vector<double> upper;
  std::vector<Row> rows;

  int add_variable(std::string name, double cost, double upper_bound);
  void add_row(std::string name, std::vector<std::pair<int, double>> terms, double rhs);
  int variable_count() const { return static_cast<int>(names.size()); }
};

struct LpSolution {
  double objective = 0;
  std::vector<double> values;  // clipped into [0, upper]
  std::vector<double> duals;   // one per row, >= 0
  int iterations = 0;
};

/// Dense dual simplex starting from the all-slack basis. Verifies primal and
/// dual feasibility and the duality gap (1e-6 relative) before returning;
/// failures throw std::runtime_error whose message ends with the program in
/// LP text format.
LpSolution solve_lp(const LinearProgram& lp);

/// CPLEX LP text format.
std::string to_lp_format(const LinearProgram& lp);

}  // namespace gsearch

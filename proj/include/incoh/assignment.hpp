#pragma once

// Exact rectangular linear assignment: maximize the sum of one score per row
// over injective row -> column maps. Requires rows <= cols.

#include <Eigen/Dense>

#include <utility>
#include <vector>

namespace incoh {

struct Assignment {
  double value = 0.0;
  std::vector<int> column_of_row;
};

Assignment max_assignment(const Eigen::MatrixXd& score);

}  // namespace incoh

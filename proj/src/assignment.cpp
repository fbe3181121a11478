#include "incoh/assignment.hpp"

#include <limits>
#include <stdexcept>

namespace incoh {

// Hungarian method with row/column potentials and shortest augmenting paths
// (Jonker-Volgenant style), O(rows^2 * cols). Internally minimizes the
// negated scores; potentials keep reduced costs nonnegative so the augmenting
// search is a plain Dijkstra sweep.
Assignment max_assignment(const Eigen::MatrixXd& score) {
  const auto n = static_cast<int>(score.rows());
  const auto m = static_cast<int>(score.cols());
  if (n == 0) return {};
  if (n > m)
    throw std::invalid_argument("max_assignment: more rows than columns");

  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> u(static_cast<std::size_t>(n) + 1, 0.0);
  std::vector<double> v(static_cast<std::size_t>(m) + 1, 0.0);
  std::vector<int> matched_row(static_cast<std::size_t>(m) + 1, 0);
  std::vector<int> way(static_cast<std::size_t>(m) + 1, 0);

  for (int i = 1; i <= n; ++i) {
    matched_row[0] = i;
    int j0 = 0;
    std::vector<double> min_reduced(static_cast<std::size_t>(m) + 1, inf);
    std::vector<bool> used(static_cast<std::size_t>(m) + 1, false);
    do {
      used[static_cast<std::size_t>(j0)] = true;
      const int i0 = matched_row[static_cast<std::size_t>(j0)];
      int j1 = -1;
      double delta = inf;
      for (int j = 1; j <= m; ++j) {
        if (used[static_cast<std::size_t>(j)]) continue;
        const double cur = -score(i0 - 1, j - 1) - u[static_cast<std::size_t>(i0)] -
                           v[static_cast<std::size_t>(j)];
        if (cur < min_reduced[static_cast<std::size_t>(j)]) {
          min_reduced[static_cast<std::size_t>(j)] = cur;
          way[static_cast<std::size_t>(j)] = j0;
        }
        if (min_reduced[static_cast<std::size_t>(j)] < delta) {
          delta = min_reduced[static_cast<std::size_t>(j)];
          j1 = j;
        }
      }
      for (int j = 0; j <= m; ++j) {
        if (used[static_cast<std::size_t>(j)]) {
          u[static_cast<std::size_t>(matched_row[static_cast<std::size_t>(j)])] += delta;
          v[static_cast<std::size_t>(j)] -= delta;
        } else {
          min_reduced[static_cast<std::size_t>(j)] -= delta;
        }
      }
      j0 = j1;
    } while (matched_row[static_cast<std::size_t>(j0)] != 0);
    do {
      const int j1 = way[static_cast<std::size_t>(j0)];
      matched_row[static_cast<std::size_t>(j0)] = matched_row[static_cast<std::size_t>(j1)];
      j0 = j1;
    } while (j0 != 0);
  }

  Assignment out;
  out.column_of_row.assign(static_cast<std::size_t>(n), -1);
  for (int j = 1; j <= m; ++j) {
    const int i = matched_row[static_cast<std::size_t>(j)];
    if (i > 0) out.column_of_row[static_cast<std::size_t>(i) - 1] = j - 1;
  }
  for (int i = 0; i < n; ++i)
    out.value += score(i, out.column_of_row[static_cast<std::size_t>(i)]);
  return out;
}

}  // namespace incoh

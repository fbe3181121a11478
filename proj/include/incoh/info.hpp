#pragma once

// Entropic quantities, all in bits (base-2 logarithms): von Neumann entropy,
// mutual information, conditional mutual information, and the relative
// entropy of coherence. Entropies are computed from eigenvalues only.

#include "incoh/linalg.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace incoh {

// Eigenvalues in [-1e-9, 0) are treated as exact zeros; anything below that
// means an invalid state leaked through and is an error, not a clamp.
inline double entropy_bits(const Eigen::VectorXd& eigenvalues) {
  double s = 0.0;
  for (Eigen::Index k = 0; k < eigenvalues.size(); ++k) {
    double w = eigenvalues[k];
    if (w < -validity_tol)
      throw std::domain_error("entropy_bits: eigenvalue below -1e-9, state is not PSD");
    if (w <= 0.0) continue;
    if (w > 1.0) w = 1.0;
    s -= w * std::log2(w);
  }
  return s;
}

inline double von_neumann_entropy(const Eigen::MatrixXcd& rho) {
  return entropy_bits(hermitian_eigenvalues(rho));
}

namespace detail {

inline void check_bipartition(const Dims& dims, const std::vector<int>& group_a,
                              const char* who) {
  check_subsystems(group_a, dims.size(), who);
  if (group_a.empty() || group_a.size() == dims.size())
    throw std::invalid_argument(std::string(who) + ": cut must leave both groups nonempty");
}

}  // namespace detail

// I(A:B) = S(A) + S(B) - S(AB) across the cut group_a | rest.
inline double mutual_information(const Eigen::MatrixXcd& rho, const Dims& dims,
                                 const std::vector<int>& group_a) {
  detail::check_bipartition(dims, group_a, "mutual_information");
  const std::vector<int> group_b = complement_group(dims.size(), group_a);
  return von_neumann_entropy(partial_trace(rho, dims, group_a)) +
         von_neumann_entropy(partial_trace(rho, dims, group_b)) -
         von_neumann_entropy(rho);
}

// I(A:B|C) = S(AC) + S(BC) - S(ABC) - S(C); the three groups must partition
// the subsystems, C may be empty (reduces to mutual information).
inline double conditional_mutual_information(const Eigen::MatrixXcd& rho, const Dims& dims,
                                             const std::vector<int>& group_a,
                                             const std::vector<int>& group_b,
                                             const std::vector<int>& group_c) {
  std::vector<int> all = group_a;
  all.insert(all.end(), group_b.begin(), group_b.end());
  all.insert(all.end(), group_c.begin(), group_c.end());
  detail::check_subsystems(all, dims.size(), "conditional_mutual_information");
  if (group_a.empty() || group_b.empty() || all.size() != dims.size())
    throw std::invalid_argument(
        "conditional_mutual_information: groups must partition the subsystems with A, B nonempty");

  std::vector<int> ac = group_a, bc = group_b;
  ac.insert(ac.end(), group_c.begin(), group_c.end());
  bc.insert(bc.end(), group_c.begin(), group_c.end());

  const double s_abc = von_neumann_entropy(rho);
  const double s_ac = von_neumann_entropy(partial_trace(rho, dims, ac));
  const double s_bc = von_neumann_entropy(partial_trace(rho, dims, bc));
  const double s_c =
      group_c.empty() ? 0.0 : von_neumann_entropy(partial_trace(rho, dims, group_c));
  return s_ac + s_bc - s_abc - s_c;
}

// C_r(rho) = S(dephased rho) - S(rho) on the targeted subsystems.
inline double rel_entropy_coherence(const Eigen::MatrixXcd& rho, const Dims& dims,
                                    const std::vector<int>& targets) {
  return von_neumann_entropy(dephase(rho, dims, targets)) - von_neumann_entropy(rho);
}

inline double rel_entropy_coherence(const Eigen::MatrixXcd& rho) {
  return rel_entropy_coherence(rho, Dims{rho.rows()}, {0});
}

}  // namespace incoh

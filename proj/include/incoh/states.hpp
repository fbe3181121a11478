#pragma once

// Validated density matrices, the catalog of reference states, the
// constructive zero-discord family, and seeded random sampling
// (Hilbert-Schmidt states, Haar unitaries).

#include "incoh/linalg.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace incoh {

struct DensityMatrix {
  Eigen::MatrixXcd rho;
  Dims dims;

  Eigen::Index dim() const { return rho.rows(); }
};

enum class StateDefect { none, dim_mismatch, not_hermitian, not_psd, trace_not_one };

struct StateCheck {
  StateDefect defect = StateDefect::none;
  double magnitude = 0.0;  // size of the violation (e.g. most negative eigenvalue)

  bool ok() const { return defect == StateDefect::none; }
  std::string describe() const;
};

StateCheck check_density(const Eigen::MatrixXcd& m, const Dims& dims,
                         double tol = validity_tol);

// Returns the validated state or throws std::invalid_argument naming the
// violated invariant.
DensityMatrix make_density(Eigen::MatrixXcd m, Dims dims, double tol = validity_tol);

DensityMatrix pure_state(const Eigen::VectorXcd& psi, Dims dims);

// Catalog: "max_ent_pm", "ghz", "w", "activation", "prop2_witness" (the
// dimension-3 default of prop2_witness_state).
DensityMatrix named_state(const std::string& name);
const std::vector<std::string>& named_state_catalog();

// (1/d) sum_j |j><j| (x) |phi_j><phi_j| (x) |j><j| on dims [d,d,d]. The
// default vectors are the normalized prefix sums of the incoherent basis,
// which are linearly independent but share diagonal support.
DensityMatrix prop2_witness_state(const std::vector<Eigen::VectorXcd>& phis);
DensityMatrix prop2_witness_state(Eigen::Index d);

struct ZeroQdiComponent {
  Eigen::MatrixXcd rho_a;
  Eigen::MatrixXcd rho_b;
  double weight = 0.0;
};

// Mixture sum_j w_j rho_A^j (x) rho_B^j on dims [dA, dB]. Requires the
// weights to form a distribution and the diagonal supports of the rho_A^j
// (entries > 1e-9) to be pairwise disjoint, which makes the components
// perfectly distinguishable by the incoherent projective measurement and
// forces vanishing discord downstream.
DensityMatrix build_zero_qdi_state(const std::vector<ZeroQdiComponent>& components,
                                   double tol = validity_tol);

// Deterministic seed derivation for independent sampling streams.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);
std::mt19937_64 seeded_rng(std::uint64_t seed);

Eigen::MatrixXcd random_ginibre(Eigen::Index rows, Eigen::Index cols, std::mt19937_64& rng);

// Haar unitary: QR of a Ginibre matrix with the R diagonal phases fixed.
Eigen::MatrixXcd random_unitary(Eigen::Index d, std::mt19937_64& rng);
Eigen::MatrixXcd random_unitary(Eigen::Index d, std::uint64_t seed);

// Hilbert-Schmidt sample G G^dag / tr(G G^dag).
DensityMatrix random_density(const Dims& dims, std::mt19937_64& rng);
DensityMatrix random_density(Eigen::Index d, std::uint64_t seed);

// Permutation (with optional random phases) unitaries; the incoherent
// unitaries are exactly these.
std::vector<int> random_permutation(Eigen::Index d, std::mt19937_64& rng);
Eigen::MatrixXcd permutation_matrix(const std::vector<int>& sigma);
Eigen::MatrixXcd random_incoherent_unitary(Eigen::Index d, std::mt19937_64& rng);

}  // namespace incoh

#pragma once

// POVM modeling, incoherence detection, parent-measurement construction for
// incoherent POVMs, and the basis witness with its optimizer. A measurement
// is incoherent (coherence-non-activating) exactly when every element is
// diagonal in the incoherent basis; for coherent measurements the witness
//   sum_a <phi_a| M_{assign(a)} |phi_a>  >  sum_i max_a |<phi_a|i>|^2
// over an orthonormal basis {|phi_a>} certifies that.

#include "incoh/linalg.hpp"
#include "incoh/states.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace incoh {

struct Povm {
  std::vector<Eigen::MatrixXcd> elements;

  Eigen::Index dim() const { return elements.empty() ? 0 : elements.front().rows(); }
  Eigen::Index outcomes() const { return static_cast<Eigen::Index>(elements.size()); }
};

struct PovmCheck {
  bool ok = true;
  std::string reason;
};

PovmCheck check_povm(const Povm& m, double tol = validity_tol);
Povm make_povm(std::vector<Eigen::MatrixXcd> elements, double tol = validity_tol);

// Outcome probabilities tr(rho M_j); tiny negatives are clamped to zero.
Eigen::VectorXd measure(const Eigen::MatrixXcd& rho, const Povm& m);

struct IncoherenceReport {
  bool incoherent = false;
  double worst_offdiag = 0.0;
};

IncoherenceReport is_incoherent(const Povm& m, double tol = validity_tol);

// Parent measurement of an incoherent POVM: the incoherent projectors
// {|k><k|} with classical post-processing kernels. kernel_for_child(j,k) is
// the probability of child outcome j given parent outcome k (the diagonal of
// M_j); kernel_for_projectors is the identity. Both kernels are
// column-stochastic and reconstruct their child exactly.
struct ParentMeasurement {
  Povm parent;
  Eigen::MatrixXd kernel_for_child;
  Eigen::MatrixXd kernel_for_projectors;
};

ParentMeasurement parent_measurement(const Povm& m, double tol = validity_tol);

struct OrthonormalBasis {
  Eigen::MatrixXcd u;  // columns are the basis vectors

  Eigen::Index dim() const { return u.rows(); }

  static OrthonormalBasis standard(Eigen::Index d);
  // Fourier basis u(i,a) = exp(2*pi*i*a*i/d)/sqrt(d); mutually unbiased with
  // the incoherent basis in every dimension.
  static OrthonormalBasis fourier(Eigen::Index d);
  static OrthonormalBasis from_columns(Eigen::MatrixXcd columns, double tol = validity_tol);
  static OrthonormalBasis random(Eigen::Index d, std::mt19937_64& rng);
};

// A witness report certifies coherence only above certified_violation_tol,
// well clear of the 1e-9 numeric noise floor.
inline constexpr double certified_violation_tol = 1e-6;

struct WitnessReport {
  double lhs = 0.0;
  double rhs = 0.0;
  double violation = 0.0;  // lhs - rhs
  OrthonormalBasis basis;
  std::vector<int> assignment;  // outcome per basis vector; -1 marks zero padding

  bool certified() const { return violation > certified_violation_tol; }
};

// Witness at a fixed basis with the outcome assignment solved exactly as a
// rectangular linear assignment (outcomes are zero-padded when fewer than d).
WitnessReport witness_value(const Povm& m, const OrthonormalBasis& basis);

// Witness at a fixed basis and caller-provided injective assignment; entries
// of -1 select the zero padding.
WitnessReport witness_value(const Povm& m, const OrthonormalBasis& basis,
                            const std::vector<int>& assignment);

struct WitnessSearchOptions {
  int restarts = 20;       // restart 0 is always the Fourier basis
  int steps = 200;         // hill-climbing steps per restart
  double step_init = 0.3;  // geometric step-size schedule over the unitary group
  double step_final = 1e-4;
  std::uint64_t seed = 0;
};

// Maximizes the violation over bases (seeded random-restart local search,
// Fourier seed included) with the assignment solved exactly per candidate.
// Never certifies an incoherent POVM: the witness bound caps its violation
// at zero for every basis.
WitnessReport optimize_witness(const Povm& m, const WitnessSearchOptions& options = {});

// Projective measurement onto the basis mixed with white noise:
// lambda |phi_a><phi_a| + (1-lambda)/d * identity.
Povm noisy_projective(const OrthonormalBasis& basis, double lambda);

// Conditional states of the complement group after measuring the POVM on the
// subsystems in group_a: p = tr((M (x) 1) rho), state = tr_A((M (x) 1) rho)/p.
// Outcomes with p < 1e-12 carry null_state and must be skipped in averages.
struct Conditional {
  double p = 0.0;
  DensityMatrix state;
  bool null_state = false;
};

std::vector<Conditional> conditional_states(const DensityMatrix& rho,
                                            const std::vector<int>& group_a, const Povm& m);

// Incoherent projective measurement on a d-dimensional system.
Povm incoherent_projectors(Eigen::Index d);

// Random incoherent POVM: a column-stochastic kernel over the incoherent
// projectors, M_j = sum_k q(j|k) |k><k|.
Povm random_incoherent_povm(Eigen::Index d, Eigen::Index n_outcomes, std::mt19937_64& rng);

}  // namespace incoh

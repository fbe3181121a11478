#pragma once

// Basis-dependent discord with respect to incoherent measurements (QDI), the
// incoherent correlation J^I, the three-way cross-checked QDI engine, the
// monogamy gap with its conditional-mutual-information identity, and a
// brute-force optimality oracle over random incoherent POVMs.

#include "incoh/measurement.hpp"
#include "incoh/states.hpp"

#include <cstdint>
#include <vector>

namespace incoh {

// The three QDI formulas exercise different numerical paths (conditional
// decomposition, dephased mutual information, coherence differences); they
// must agree within qdi_consistency_tol or the engine raises an internal
// error rather than returning a number.
inline constexpr double qdi_consistency_tol = 1e-8;

struct QdiReport {
  double qdi_projective = 0.0;  // sum_i p_i S(rho_B|i) + S(rho_A) - S(rho_AB)
  double qdi_mutinf = 0.0;      // I(rho_AB) - I(rho with A dephased)
  double qdi_coherence = 0.0;   // C_r(rho_AB) - C_r(rho dephased on A) - C_r(rho_A)
  double j_incoherent = 0.0;    // S(rho_B) - sum_i p_i S(rho_B|i)
  double max_discrepancy = 0.0;

  double value() const { return qdi_mutinf; }
};

// J^I: information gain about the complement group from the incoherent
// projective measurement on group_a (which attains the optimum over all
// incoherent measurements).
double incoherent_correlation(const DensityMatrix& rho, const std::vector<int>& group_a);

QdiReport qdi(const DensityMatrix& rho, const std::vector<int>& group_a);

struct MonogamyReport {
  double d_b_a = 0.0;
  double d_b2_a = 0.0;
  double d_bb2_a = 0.0;
  double gap = 0.0;      // d_b_a + d_b2_a - d_bb2_a
  double gap_cmi = 0.0;  // I(B:B'|A dephased) - I(B:B'|A), an exact identity
};

// The two routes are asserted to agree within qdi_consistency_tol.
MonogamyReport monogamy_gap(const DensityMatrix& rho, const std::vector<int>& group_a,
                            const std::vector<int>& group_b, const std::vector<int>& group_b2);

// sum_mu p_mu S(rho_B|mu) for an arbitrary POVM on group_a; null outcomes
// contribute zero (the p -> 0 limit of p*S).
double average_conditional_entropy(const DensityMatrix& rho, const std::vector<int>& group_a,
                                   const Povm& m);

// Minimum average conditional entropy over sampled random incoherent POVMs
// (outcome counts 2..2d). Never beats the incoherent projective value: the
// projectors are optimal among incoherent measurements.
double qdi_povm_oracle(const DensityMatrix& rho, const std::vector<int>& group_a, int samples,
                       std::uint64_t seed);

}  // namespace incoh

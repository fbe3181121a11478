#pragma once

// Kraus channels: application (also on a single subsystem), the adjoint map,
// and the classification predicates used throughout: trace preservation,
// coherence-non-activating, MIO (no coherence from incoherent inputs), GIO
// (fixes every incoherent state), and completely-QDI-non-generating (images
// of the incoherent projectors form a permuted copy of them). Includes the
// catalog channels and the activation demonstration.

#include "incoh/states.hpp"

#include <optional>
#include <string>
#include <vector>

namespace incoh {

struct KrausChannel {
  std::vector<Eigen::MatrixXcd> kraus;
  Eigen::Index dim_in = 0;
  Eigen::Index dim_out = 0;
};

struct ChannelCheck {
  bool ok = true;
  std::string reason;
};

// Trace preservation: sum_l K_l^dag K_l = identity within tol.
ChannelCheck check_channel(const KrausChannel& ch, double tol = validity_tol);
KrausChannel make_channel(std::vector<Eigen::MatrixXcd> kraus, double tol = validity_tol);

// By-value parameters keep unqualified calls with rvalue arguments from
// resolving to std::apply, which ADL finds through std::complex.
Eigen::MatrixXcd apply(KrausChannel ch, Eigen::MatrixXcd rho);
DensityMatrix apply(KrausChannel ch, DensityMatrix rho);

// Lifts the channel with identity factors onto one subsystem; requires a
// square channel matching that subsystem's dimension.
DensityMatrix apply_on_subsystem(const KrausChannel& ch, const DensityMatrix& rho, int target);

// Heisenberg-picture adjoint sum_l K_l^dag X K_l; unital for trace-preserving
// channels and trace-dual to apply.
Eigen::MatrixXcd adjoint_apply(const KrausChannel& ch, const Eigen::MatrixXcd& x);

struct PredicateReport {
  bool value = false;
  double worst_deviation = 0.0;
};

// Dephase-after equals dephase-after-dephase-before, checked on all matrix
// units E_jk (a complete operator basis, so linearity settles every input).
PredicateReport is_coherence_non_activating(const KrausChannel& ch, double tol = validity_tol);

// MIO: images of the incoherent projectors are diagonal.
PredicateReport is_mio(const KrausChannel& ch, double tol = validity_tol);

// GIO: the incoherent projectors are fixed points.
PredicateReport is_gio(const KrausChannel& ch, double tol = validity_tol);

struct QdiNonGeneratingReport {
  bool value = false;
  double worst_deviation = 0.0;
  std::optional<std::vector<int>> permutation;
};

// True exactly when every image of an incoherent projector is an incoherent
// projector and the induced map j -> sigma(j) is a permutation; the channel
// conjugated by that permutation is then verified to fix the projectors.
QdiNonGeneratingReport is_completely_qdi_nongenerating(const KrausChannel& ch,
                                                       double tol = validity_tol);

KrausChannel identity_channel(Eigen::Index d);
KrausChannel unitary_channel(const Eigen::MatrixXcd& u);

// Composition f after g.
KrausChannel compose(const KrausChannel& f, const KrausChannel& g);

// p*rho + (1-p)*identity/d through the generalized-Pauli (Weyl) Kraus set.
KrausChannel depolarizing_channel(Eigen::Index d, double p);

// The completely dephasing map as Kraus projectors {|j><j|}.
KrausChannel dephasing_channel(Eigen::Index d);

// Qutrit channel that is trace-preserving and in MIO but not GIO, destroys
// all input coherences, and leaves every output free of discord with respect
// to incoherent measurements on it. Its coherence-annihilating Kraus set
// {|-><0|/sqrt2, |1><1|/sqrt2, |+><0|/sqrt2, |0><1|/sqrt2, |2><2|} realizes
// the one MIO-not-GIO catalog channel whose outputs never carry QDI.
KrausChannel mio_not_io_qutrit_channel();

// Catalog lookup: "depolarizing" (params d, p), "dephasing" (param d),
// "mio_not_io_qutrit".
KrausChannel library_channel(const std::string& name, const std::vector<double>& params = {});
const std::vector<std::string>& library_channel_catalog();

// Random CPTP channel from a Haar isometry split into n_kraus blocks.
KrausChannel random_channel(Eigen::Index d, int n_kraus, std::mt19937_64& rng);

// Random GIO channel: random diagonal Kraus operators, right-normalized by
// (sum K^dag K)^(-1/2), which keeps them diagonal.
KrausChannel random_gio_channel(Eigen::Index d, int n_kraus, std::mt19937_64& rng);

// Random coherence-non-activating channel: a GIO channel, an incoherent
// unitary, or an arbitrary channel precomposed with full dephasing.
KrausChannel random_cna_channel(Eigen::Index d, std::mt19937_64& rng);

struct ActivationReport {
  double qdi_before = 0.0;
  double qdi_after = 0.0;
};

// Parallel-ancilla activation: the catalog state on A A' B has no discord on
// the AA' cut, yet depolarizing only A creates it for 0 < p < 1. The
// post-channel state is cross-checked against its closed form within 1e-12.
ActivationReport activation_demo(double p);

}  // namespace incoh

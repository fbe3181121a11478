#include "incoh/repro.hpp"

#include <cmath>

#include "incoh/channels.hpp"
#include "incoh/discord.hpp"
#include "incoh/info.hpp"
#include "incoh/measurement.hpp"
#include "incoh/states.hpp"

namespace incoh {
namespace {

ReproRow make_row(std::string id, std::string claim, RowKind kind, double expected,
                  double computed, double tolerance) {
  ReproRow row;
  row.id = std::move(id);
  row.claim = std::move(claim);
  row.kind = kind;
  row.expected = expected;
  row.computed = computed;
  row.tolerance = tolerance;
  row.pass = row_passes(kind, expected, computed, tolerance);
  return row;
}

// QDI created across the given cut by a channel acting on the first
// subsystem alone; the rest of the A group rides along untouched.
double qdi_creation(const KrausChannel& ch, const DensityMatrix& rho,
                    const std::vector<int>& group_a) {
  const double before = qdi(rho, group_a).value();
  const double after = qdi(apply_on_subsystem(ch, rho, 0), group_a).value();
  return after - before;
}

}  // namespace

bool row_passes(RowKind kind, double expected, double computed, double tolerance) {
  switch (kind) {
    case RowKind::equal:
      return std::abs(expected - computed) <= tolerance;
    case RowKind::at_most:
      return computed <= expected + tolerance;
    case RowKind::at_least:
      return computed >= expected - tolerance;
  }
  return false;
}

std::vector<ReproRow> run_reproduction(std::uint64_t seed) {
  std::vector<ReproRow> rows;
  const double log2_3 = std::log2(3.0);

  // Maximally entangled +/- state: one bit of discord, two bits of mutual
  // information, and full agreement across the three evaluation routes.
  {
    const DensityMatrix psi = named_state("max_ent_pm");
    const QdiReport report = qdi(psi, {0});
    rows.push_back(make_row("qdi-maxent", "discord of the max-entangled +/- state is one bit",
                            RowKind::equal, 1.0, report.value(), 1e-9));
    rows.push_back(make_row("qdi-maxent-spread",
                            "the three discord formulas agree on the max-entangled state",
                            RowKind::at_most, 0.0, report.max_discrepancy, 1e-9));
    rows.push_back(make_row("jinc-maxent",
                            "incoherent correlation of the max-entangled state is one bit",
                            RowKind::equal, 1.0, report.j_incoherent, 1e-9));
    rows.push_back(make_row("mutinf-maxent",
                            "mutual information of the max-entangled state is two bits",
                            RowKind::equal, 2.0,
                            mutual_information(psi.rho, psi.dims, {0}), 1e-9));

    const DensityMatrix b_dephased{dephase(psi.rho, psi.dims, {1}), psi.dims};
    rows.push_back(make_row("qdi-maxent-b-dephased",
                            "dephasing B leaves the discord of the max-entangled state at one bit",
                            RowKind::equal, 1.0, qdi(b_dephased, {0}).value(), 1e-9));

    const DensityMatrix a_dephased{dephase(psi.rho, psi.dims, {0}), psi.dims};
    rows.push_back(make_row("cr-maxent-dephase-a",
                            "coherence left after dephasing A of the max-entangled state is one bit",
                            RowKind::equal, 1.0,
                            rel_entropy_coherence(a_dephased.rho, a_dephased.dims, {0, 1}), 1e-9));
    rows.push_back(make_row("qdi-incoherent-a",
                            "a state already incoherent on A has zero discord",
                            RowKind::equal, 0.0, qdi(a_dephased, {0}).value(), 1e-9));
  }

  // Product mixtures over distinguishable incoherent A-blocks carry no discord.
  {
    std::mt19937_64 rng = seeded_rng(mix_seed(seed, 1));
    Eigen::MatrixXcd rho_a1 = Eigen::MatrixXcd::Zero(3, 3);
    rho_a1.topLeftCorner(2, 2) = random_density(Dims{2}, rng).rho;
    Eigen::MatrixXcd rho_a2 = Eigen::MatrixXcd::Zero(3, 3);
    rho_a2(2, 2) = 1.0;
    const DensityMatrix zero_qdi = build_zero_qdi_state(
        {{rho_a1, random_density(Dims{2}, rng).rho, 0.6},
         {rho_a2, random_density(Dims{2}, rng).rho, 0.4}});
    rows.push_back(make_row("zero-qdi-family",
                            "block-distinguishable product mixtures have zero discord",
                            RowKind::equal, 0.0, qdi(zero_qdi, {0}).value(), 1e-9));
  }

  // Monogamy gaps: the GHZ state violates additivity, the W state satisfies it.
  {
    const MonogamyReport ghz = monogamy_gap(named_state("ghz"), {0}, {1}, {2});
    rows.push_back(make_row("monogamy-ghz", "GHZ monogamy gap is minus one bit", RowKind::equal,
                            -1.0, ghz.gap, 1e-9));
    const MonogamyReport w = monogamy_gap(named_state("w"), {0}, {1}, {2});
    rows.push_back(make_row("monogamy-w", "W monogamy gap is 2 - log2(3)", RowKind::equal,
                            2.0 - log2_3, w.gap, 1e-9));
    const DensityMatrix g = named_state("ghz");
    rows.push_back(make_row("cmi-ghz",
                            "conditional mutual information I(B:B'|A) of GHZ is one bit",
                            RowKind::equal, 1.0,
                            conditional_mutual_information(g.rho, g.dims, {1}, {2}, {0}), 1e-9));
  }

  // Witness inequality: noisy projectors onto the Fourier basis violate the
  // incoherence bound by (d-1)*lambda; at lambda=0 the measurement is incoherent.
  {
    const OrthonormalBasis f3 = OrthonormalBasis::fourier(3);
    const WitnessReport noisy = witness_value(noisy_projective(f3, 0.3), f3);
    rows.push_back(make_row("witness-fourier-noisy",
                            "noisy Fourier projectors at lambda=0.3, d=3 violate by 0.6",
                            RowKind::equal, 0.6, noisy.violation, 1e-9));

    Eigen::MatrixXcd pm(2, 2);
    const double s2 = 1.0 / std::sqrt(2.0);
    pm << s2, s2, s2, -s2;
    const OrthonormalBasis pm_basis = OrthonormalBasis::from_columns(pm);
    const WitnessReport sharp = witness_value(noisy_projective(pm_basis, 1.0), pm_basis);
    rows.push_back(make_row("witness-qubit-pm",
                            "the sharp |+>/|-> measurement violates by one",
                            RowKind::equal, 1.0, sharp.violation, 1e-9));

    const IncoherenceReport flat = is_incoherent(noisy_projective(f3, 0.0));
    rows.push_back(make_row("witness-lambda-zero",
                            "at lambda=0 the noisy projective measurement is incoherent",
                            RowKind::at_most, 0.0, flat.worst_offdiag, 1e-12));
  }

  // Activation: discord-free state on AA', discord appears under partial
  // depolarizing of A and vanishes again at full depolarizing.
  {
    rows.push_back(make_row("activation-before",
                            "the activation state has zero discord across the AA' cut",
                            RowKind::at_most, 0.0, activation_demo(0.0).qdi_after, 1e-9));
    rows.push_back(make_row("activation-p50",
                            "depolarizing A at p=0.5 activates discord (frozen regression value)",
                            RowKind::equal, 0.034556569265067, activation_demo(0.5).qdi_after,
                            1e-6));
    rows.push_back(make_row("activation-p100",
                            "full depolarizing of A leaves the activation state discord-free",
                            RowKind::at_most, 0.0, activation_demo(1.0).qdi_after, 1e-9));
  }

  // Qutrit channel panel: maximally incoherent but not genuinely incoherent,
  // not discord-non-generating, and it destroys discord on every sampled input.
  {
    const KrausChannel ch = mio_not_io_qutrit_channel();
    rows.push_back(make_row("channel-qutrit-mio", "the qutrit example channel is MIO",
                            RowKind::equal, 1.0, is_mio(ch).value ? 1.0 : 0.0, 0.0));
    rows.push_back(make_row("channel-qutrit-not-gio", "the qutrit example channel is not GIO",
                            RowKind::equal, 0.0, is_gio(ch).value ? 1.0 : 0.0, 0.0));
    rows.push_back(make_row("channel-qutrit-not-cqng",
                            "the qutrit example channel can generate discord",
                            RowKind::equal, 0.0,
                            is_completely_qdi_nongenerating(ch).value ? 1.0 : 0.0, 0.0));

    double worst_after = 0.0;
    for (int k = 0; k < 25; ++k) {
      std::mt19937_64 rng = seeded_rng(mix_seed(seed, 100 + static_cast<std::uint64_t>(k)));
      const DensityMatrix rho = random_density(Dims{3, 2}, rng);
      const double after = qdi(apply_on_subsystem(ch, rho, 0), {0}).value();
      worst_after = std::max(worst_after, after);
    }
    rows.push_back(make_row("channel-qutrit-breaks-qdi",
                            "the qutrit example channel erases discord on sampled qutrit-qubit states",
                            RowKind::at_most, 0.0, worst_after, 1e-8));
  }

  // Permuted genuinely incoherent channels pass the non-generating predicate;
  // depolarizing and the qutrit channel create discord on the witness states.
  {
    std::mt19937_64 rng = seeded_rng(mix_seed(seed, 2));
    const KrausChannel gio = random_gio_channel(3, 3, rng);
    const KrausChannel perm = unitary_channel(random_incoherent_unitary(3, rng));
    const QdiNonGeneratingReport verdict = is_completely_qdi_nongenerating(compose(perm, gio));
    rows.push_back(make_row("prop2-gio-true",
                            "a permuted genuinely incoherent channel is discord-non-generating",
                            RowKind::equal, 1.0, verdict.value ? 1.0 : 0.0, 0.0));

    rows.push_back(make_row("prop2-creation-qutrit",
                            "the qutrit example channel creates discord on the d=3 witness state",
                            RowKind::equal, 0.19306527482248192,
                            qdi_creation(mio_not_io_qutrit_channel(), prop2_witness_state(3),
                                         {0, 1}),
                            1e-9));
    rows.push_back(make_row("prop2-creation-depol",
                            "depolarizing(2, 0.5) creates discord on the d=2 witness state",
                            RowKind::equal, 0.23476772114,
                            qdi_creation(depolarizing_channel(2, 0.5), prop2_witness_state(2),
                                         {0, 1}),
                            1e-9));
  }

  // Any incoherent measurement splits into the incoherent projective
  // measurement followed by classical post-processing.
  {
    std::mt19937_64 rng = seeded_rng(mix_seed(seed, 3));
    const Povm m = random_incoherent_povm(3, 5, rng);
    const ParentMeasurement parent = parent_measurement(m);
    double worst = 0.0;
    for (Eigen::Index j = 0; j < m.outcomes(); ++j) {
      Eigen::MatrixXcd rebuilt = Eigen::MatrixXcd::Zero(3, 3);
      for (Eigen::Index i = 0; i < 3; ++i)
        rebuilt += parent.kernel_for_child(j, i) * parent.parent.elements[static_cast<std::size_t>(i)];
      worst = std::max(worst, max_abs(rebuilt - m.elements[static_cast<std::size_t>(j)]));
    }
    rows.push_back(make_row("parent-reconstruction",
                            "incoherent measurements reconstruct from the projective parent",
                            RowKind::at_most, 0.0, worst, 1e-12));
  }

  return rows;
}

}  // namespace incoh

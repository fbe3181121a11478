#include <doctest.h>

#include <cmath>

#include "incoh/channels.hpp"
#include "incoh/discord.hpp"
#include "incoh/states.hpp"

using namespace incoh;

TEST_CASE("make_channel enforces trace preservation") {
  std::vector<Eigen::MatrixXcd> bad = {0.5 * Eigen::MatrixXcd::Identity(2, 2)};
  CHECK_THROWS_AS(make_channel(bad), std::invalid_argument);
  CHECK(check_channel(identity_channel(3)).ok);
  CHECK_THROWS_AS(make_channel({}), std::invalid_argument);
}

TEST_CASE("depolarizing matches its closed form") {
  std::mt19937_64 rng = seeded_rng(71);
  for (Eigen::Index d : {2, 3}) {
    for (double p : {0.0, 0.3, 1.0}) {
      const KrausChannel ch = depolarizing_channel(d, p);
      CHECK(check_channel(ch).ok);
      const Eigen::MatrixXcd rho = random_density(Dims{d}, rng).rho;
      const Eigen::MatrixXcd expected =
          p * rho + (1.0 - p) * Eigen::MatrixXcd::Identity(d, d) / static_cast<double>(d);
      CHECK(approx_equal(apply(ch, rho), expected, 1e-12));
    }
  }
}

TEST_CASE("dephasing channel equals the dephasing map") {
  std::mt19937_64 rng = seeded_rng(73);
  const Eigen::MatrixXcd rho = random_density(Dims{3}, rng).rho;
  CHECK(approx_equal(apply(dephasing_channel(3), rho), dephase(rho), 1e-14));
}

TEST_CASE("adjoint_apply is trace-dual to apply and unital") {
  std::mt19937_64 rng = seeded_rng(75);
  const KrausChannel ch = random_channel(3, 4, rng);
  const Eigen::MatrixXcd rho = random_density(Dims{3}, rng).rho;
  const Eigen::MatrixXcd x = random_ginibre(3, 3, rng);
  const cxd lhs = (apply(ch, rho) * x).trace();
  const cxd rhs = (rho * adjoint_apply(ch, x)).trace();
  CHECK(std::abs(lhs - rhs) < 1e-12);
  CHECK(is_identity(adjoint_apply(ch, Eigen::MatrixXcd::Identity(3, 3)), 1e-12));
}

TEST_CASE("apply_on_subsystem lifts with identity factors") {
  std::mt19937_64 rng = seeded_rng(77);
  const DensityMatrix rho = random_density(Dims{2, 3, 2}, rng);
  const DensityMatrix dephased_mid = apply_on_subsystem(dephasing_channel(3), rho, 1);
  CHECK(approx_equal(dephased_mid.rho, dephase(rho.rho, rho.dims, {1}), 1e-13));
  // acting on B commutes with tracing A out
  const KrausChannel ch = random_channel(2, 3, rng);
  const DensityMatrix lifted = apply_on_subsystem(ch, rho, 2);
  CHECK(approx_equal(partial_trace(lifted.rho, rho.dims, {2}),
                     apply(ch, partial_trace(rho.rho, rho.dims, {2})), 1e-12));
  CHECK_THROWS_AS(apply_on_subsystem(ch, rho, 1), std::invalid_argument);
}

TEST_CASE("identity and composition behave") {
  std::mt19937_64 rng = seeded_rng(79);
  const Eigen::MatrixXcd u = random_unitary(3, rng);
  const Eigen::MatrixXcd v = random_unitary(3, rng);
  const Eigen::MatrixXcd rho = random_density(Dims{3}, rng).rho;
  const KrausChannel uv = compose(unitary_channel(u), unitary_channel(v));
  CHECK(approx_equal(apply(uv, rho), (u * v) * rho * (u * v).adjoint(), 1e-12));
  CHECK(approx_equal(apply(identity_channel(3), rho), rho, 0.0));
}

TEST_CASE("coherence non-activating: identity yes, Hadamard no, depolarizing yes") {
  CHECK(is_coherence_non_activating(identity_channel(3)).value);
  CHECK(is_coherence_non_activating(dephasing_channel(3)).value);
  CHECK(is_coherence_non_activating(depolarizing_channel(2, 0.7)).value);

  Eigen::MatrixXcd h(2, 2);
  const double s2 = 1.0 / std::sqrt(2.0);
  h << s2, s2, s2, -s2;
  const PredicateReport r = is_coherence_non_activating(unitary_channel(h));
  CHECK_FALSE(r.value);
  CHECK(r.worst_deviation > 0.1);
}

TEST_CASE("random GIO channels are GIO, MIO, non-activating, and non-generating") {
  for (int trial = 0; trial < 20; ++trial) {
    std::mt19937_64 rng = seeded_rng(mix_seed(81, static_cast<std::uint64_t>(trial)));
    const KrausChannel gio = random_gio_channel(3, 2 + trial % 3, rng);
    CHECK(check_channel(gio).ok);
    CHECK(is_gio(gio).value);
    CHECK(is_mio(gio).value);
    CHECK(is_coherence_non_activating(gio).value);
    const QdiNonGeneratingReport r = is_completely_qdi_nongenerating(gio);
    CHECK(r.value);
    REQUIRE(r.permutation.has_value());
    CHECK(*r.permutation == std::vector<int>{0, 1, 2});  // GIO fixes, so identity permutation
  }
}

TEST_CASE("permuted GIO channels report their permutation") {
  std::mt19937_64 rng = seeded_rng(83);
  const KrausChannel gio = random_gio_channel(3, 3, rng);
  const std::vector<int> sigma = {2, 0, 1};
  const KrausChannel ch = compose(unitary_channel(permutation_matrix(sigma)), gio);
  const QdiNonGeneratingReport r = is_completely_qdi_nongenerating(ch);
  CHECK(r.value);
  REQUIRE(r.permutation.has_value());
  CHECK(*r.permutation == sigma);
}

TEST_CASE("depolarizing is MIO but neither GIO nor QDI-non-generating") {
  const KrausChannel dep = depolarizing_channel(2, 0.5);
  CHECK(is_mio(dep).value);
  CHECK_FALSE(is_gio(dep).value);
  CHECK_FALSE(is_completely_qdi_nongenerating(dep).value);
}

TEST_CASE("random coherence-non-activating samples pass the predicate") {
  for (int trial = 0; trial < 20; ++trial) {
    std::mt19937_64 rng = seeded_rng(mix_seed(85, static_cast<std::uint64_t>(trial)));
    const KrausChannel ch = random_cna_channel(3, rng);
    CHECK(check_channel(ch).ok);
    CHECK(is_coherence_non_activating(ch).value);
  }
}

TEST_CASE("qutrit catalog channel: MIO, not GIO, coherence-annihilating") {
  const KrausChannel ch = mio_not_io_qutrit_channel();
  CHECK(check_channel(ch).ok);
  CHECK(is_mio(ch).value);
  CHECK(is_coherence_non_activating(ch).value);
  CHECK_FALSE(is_gio(ch).value);
  CHECK_FALSE(is_completely_qdi_nongenerating(ch).value);

  // |0><0| splits evenly across |0>,|1>; |2><2| is fixed
  Eigen::MatrixXcd e00 = Eigen::MatrixXcd::Zero(3, 3);
  e00(0, 0) = 1.0;
  Eigen::MatrixXcd expected = Eigen::MatrixXcd::Zero(3, 3);
  expected(0, 0) = 0.5;
  expected(1, 1) = 0.5;
  CHECK(approx_equal(apply(ch, e00), expected, 1e-12));

  // every output is diagonal, so downstream discord on the output side dies
  std::mt19937_64 rng = seeded_rng(87);
  for (int trial = 0; trial < 10; ++trial) {
    const Eigen::MatrixXcd rho = random_density(Dims{3}, rng).rho;
    CHECK(is_diagonal(apply(ch, rho), 1e-12));
  }
}

TEST_CASE("qutrit catalog channel erases discord on bipartite inputs") {
  std::mt19937_64 rng = seeded_rng(89);
  const KrausChannel ch = mio_not_io_qutrit_channel();
  for (int trial = 0; trial < 15; ++trial) {
    const DensityMatrix rho = random_density(Dims{3, 2}, rng);
    const DensityMatrix out = apply_on_subsystem(ch, rho, 0);
    CHECK(qdi(out, {0}).value() <= 1e-8);
  }
}

TEST_CASE("library_channel parses its catalog") {
  CHECK(library_channel("dephasing", {3}).kraus.size() == 3);
  CHECK(library_channel("depolarizing", {2, 0.5}).dim_in == 2);
  CHECK(library_channel("mio_not_io_qutrit").dim_in == 3);
  CHECK_THROWS_AS(library_channel("depolarizing", {2.5, 0.5}), std::invalid_argument);
  CHECK_THROWS_AS(library_channel("depolarizing", {2}), std::invalid_argument);
  CHECK_THROWS_AS(library_channel("unknown"), std::invalid_argument);
}

TEST_CASE("activation demo: flat before, active in the middle, dead at p=1") {
  const ActivationReport off = activation_demo(0.0);
  CHECK(off.qdi_before <= 1e-9);
  CHECK(off.qdi_after <= 1e-9);  // p=0 sends A to the maximally mixed state

  const ActivationReport mid = activation_demo(0.5);
  CHECK(mid.qdi_after > 1e-6);
  CHECK(mid.qdi_after == doctest::Approx(0.034556569265067).epsilon(1e-6));

  const ActivationReport full = activation_demo(1.0);
  CHECK(full.qdi_after <= 1e-9);

  CHECK_THROWS_AS(activation_demo(1.5), std::invalid_argument);
}

#include <doctest.h>

#include <cmath>

#include "incoh/channels.hpp"
#include "incoh/discord.hpp"
#include "incoh/info.hpp"
#include "incoh/measurement.hpp"
#include "incoh/states.hpp"

using namespace incoh;

TEST_CASE("qdi of the max-entangled +/- state is one bit by every route") {
  const QdiReport r = qdi(named_state("max_ent_pm"), {0});
  CHECK(r.qdi_projective == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(r.qdi_mutinf == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(r.qdi_coherence == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(r.j_incoherent == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(r.max_discrepancy <= 1e-9);
}

TEST_CASE("the three qdi formulas agree on random states") {
  for (int trial = 0; trial < 120; ++trial) {
    std::mt19937_64 rng = seeded_rng(mix_seed(51, static_cast<std::uint64_t>(trial)));
    const Dims dims = (trial % 3 == 0) ? Dims{2, 2} : (trial % 3 == 1 ? Dims{3, 2} : Dims{2, 3});
    const QdiReport r = qdi(random_density(dims, rng), {0});
    CHECK(r.max_discrepancy <= qdi_consistency_tol);
    CHECK(r.value() >= -1e-9);  // discord is nonnegative
  }
}

TEST_CASE("product and classical-on-A states carry no qdi") {
  std::mt19937_64 rng = seeded_rng(53);
  const Eigen::MatrixXcd prod =
      tensor_product(random_density(Dims{2}, rng).rho, random_density(Dims{3}, rng).rho);
  CHECK(qdi(DensityMatrix{prod, Dims{2, 3}}, {0}).value() == doctest::Approx(0.0).epsilon(1e-9));

  const DensityMatrix joint = random_density(Dims{2, 2}, rng);
  const DensityMatrix cq{dephase(joint.rho, joint.dims, {0}), joint.dims};
  CHECK(qdi(cq, {0}).value() == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("qdi is invariant under incoherent unitaries on A and any unitary on B") {
  for (int trial = 0; trial < 30; ++trial) {
    std::mt19937_64 rng = seeded_rng(mix_seed(55, static_cast<std::uint64_t>(trial)));
    const DensityMatrix rho = random_density(Dims{3, 2}, rng);
    const Eigen::MatrixXcd u = tensor_product(random_incoherent_unitary(3, rng),
                                              random_unitary(2, rng));
    const DensityMatrix rotated{u * rho.rho * u.adjoint(), rho.dims};
    CHECK(qdi(rotated, {0}).value() == doctest::Approx(qdi(rho, {0}).value()).epsilon(1e-9));
  }
}

TEST_CASE("qdi never increases under dephasing B (remaining-coherence corollary)") {
  for (int trial = 0; trial < 30; ++trial) {
    std::mt19937_64 rng = seeded_rng(mix_seed(57, static_cast<std::uint64_t>(trial)));
    const DensityMatrix rho = random_density(Dims{2, 2}, rng);
    const DensityMatrix b_dephased{dephase(rho.rho, rho.dims, {1}), rho.dims};
    CHECK(qdi(b_dephased, {0}).value() <= qdi(rho, {0}).value() + 1e-8);
  }
}

TEST_CASE("incoherent projectors are optimal among sampled incoherent POVMs") {
  for (int trial = 0; trial < 20; ++trial) {
    std::mt19937_64 rng = seeded_rng(mix_seed(59, static_cast<std::uint64_t>(trial)));
    const DensityMatrix rho = random_density(Dims{2, 2}, rng);
    const double projective = average_conditional_entropy(rho, {0}, incoherent_projectors(2));
    const double sampled = qdi_povm_oracle(rho, {0}, 40, mix_seed(59, 1000 + trial));
    CHECK(sampled >= projective - 1e-9);
  }
}

TEST_CASE("monogamy gaps of GHZ and W match their closed forms") {
  const MonogamyReport ghz = monogamy_gap(named_state("ghz"), {0}, {1}, {2});
  CHECK(ghz.gap == doctest::Approx(-1.0).epsilon(1e-9));
  CHECK(ghz.gap_cmi == doctest::Approx(-1.0).epsilon(1e-9));

  const MonogamyReport w = monogamy_gap(named_state("w"), {0}, {1}, {2});
  const double expected = 2.0 - std::log2(3.0);
  CHECK(w.gap == doctest::Approx(expected).epsilon(1e-9));
  CHECK(w.gap_cmi == doctest::Approx(expected).epsilon(1e-9));
}

TEST_CASE("both monogamy routes agree on random tripartite states") {
  for (int trial = 0; trial < 15; ++trial) {
    std::mt19937_64 rng = seeded_rng(mix_seed(61, static_cast<std::uint64_t>(trial)));
    const MonogamyReport r = monogamy_gap(random_density(Dims{2, 2, 2}, rng), {0}, {1}, {2});
    CHECK(std::abs(r.gap - r.gap_cmi) <= 1e-8);
  }
}

TEST_CASE("monogamy validates its partition") {
  const DensityMatrix ghz = named_state("ghz");
  CHECK_THROWS_AS(monogamy_gap(ghz, {0}, {1}, {1}), std::invalid_argument);
  CHECK_THROWS_AS(monogamy_gap(ghz, {0}, {1}, {}), std::invalid_argument);
}

TEST_CASE("joint-vs-single monogamy identity on random states") {
  // D(BB'|A) - D(B|A) = I_{AB:B'}(rho) - I_{AB:B'}(rho with A dephased)
  for (int trial = 0; trial < 15; ++trial) {
    std::mt19937_64 rng = seeded_rng(mix_seed(63, static_cast<std::uint64_t>(trial)));
    const DensityMatrix rho = random_density(Dims{2, 2, 2}, rng);
    const double joint = qdi(rho, {0}).value();  // D(BB'|A): measure A, rest is BB'

    // D(B|A): trace out B' (subsystem 2)
    const DensityMatrix ab{partial_trace(rho.rho, rho.dims, {0, 1}), Dims{2, 2}};
    const double single = qdi(ab, {0}).value();

    const double mi = mutual_information(rho.rho, rho.dims, {0, 1});
    const Eigen::MatrixXcd a_deph = dephase(rho.rho, rho.dims, {0});
    const double mi_deph = mutual_information(a_deph, rho.dims, {0, 1});
    CHECK(joint - single == doctest::Approx(mi - mi_deph).epsilon(1e-8));
  }
}

TEST_CASE("zero-qdi construction yields zero qdi, including with coherent blocks") {
  std::mt19937_64 rng = seeded_rng(65);
  Eigen::MatrixXcd a0 = Eigen::MatrixXcd::Zero(3, 3);
  a0.topLeftCorner(2, 2) = random_density(Dims{2}, rng).rho;  // coherent inside its block
  Eigen::MatrixXcd a1 = Eigen::MatrixXcd::Zero(3, 3);
  a1(2, 2) = 1.0;
  const DensityMatrix rho = build_zero_qdi_state(
      {{a0, random_density(Dims{2}, rng).rho, 0.35}, {a1, random_density(Dims{2}, rng).rho, 0.65}});
  CHECK(qdi(rho, {0}).value() == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("average conditional entropy skips null outcomes") {
  std::mt19937_64 rng = seeded_rng(67);
  Eigen::MatrixXcd zero = Eigen::MatrixXcd::Zero(2, 2);
  zero(0, 0) = 1.0;
  const DensityMatrix prod{tensor_product(zero, random_density(Dims{2}, rng).rho), Dims{2, 2}};
  const double avg = average_conditional_entropy(prod, {0}, incoherent_projectors(2));
  const double direct = von_neumann_entropy(partial_trace(prod.rho, prod.dims, {1}));
  CHECK(avg == doctest::Approx(direct).epsilon(1e-12));
}

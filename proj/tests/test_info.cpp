#include <doctest.h>

#include <cmath>

#include "incoh/info.hpp"
#include "incoh/states.hpp"

using namespace incoh;

TEST_CASE("entropy_bits handles clamping and rejects real negativity") {
  Eigen::VectorXd w(3);
  w << 0.5, 0.5, 0.0;
  CHECK(entropy_bits(w) == doctest::Approx(1.0).epsilon(1e-12));

  w << 1.0, -5e-10, 0.0;  // tiny negative from roundoff is treated as zero
  CHECK(entropy_bits(w) == doctest::Approx(0.0).epsilon(1e-12));

  w << 1.0, -1e-3, 0.0;
  CHECK_THROWS_AS(entropy_bits(w), std::domain_error);
}

TEST_CASE("von Neumann entropy on reference states") {
  CHECK(von_neumann_entropy(Eigen::MatrixXcd::Identity(4, 4) / 4.0) ==
        doctest::Approx(2.0).epsilon(1e-12));
  const DensityMatrix psi = named_state("max_ent_pm");
  CHECK(von_neumann_entropy(psi.rho) == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(von_neumann_entropy(partial_trace(psi.rho, psi.dims, {0})) ==
        doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("mutual information: product states carry none, max_ent_pm carries two bits") {
  std::mt19937_64 rng = seeded_rng(2);
  const Eigen::MatrixXcd prod =
      tensor_product(random_density(Dims{2}, rng).rho, random_density(Dims{3}, rng).rho);
  CHECK(mutual_information(prod, Dims{2, 3}, {0}) == doctest::Approx(0.0).epsilon(1e-9));

  const DensityMatrix psi = named_state("max_ent_pm");
  CHECK(mutual_information(psi.rho, psi.dims, {0}) == doctest::Approx(2.0).epsilon(1e-9));
  CHECK_THROWS_AS(mutual_information(psi.rho, psi.dims, {0, 1}), std::invalid_argument);
}

TEST_CASE("conditional mutual information: GHZ gives one bit, empty C reduces to MI") {
  const DensityMatrix ghz = named_state("ghz");
  CHECK(conditional_mutual_information(ghz.rho, ghz.dims, {1}, {2}, {0}) ==
        doctest::Approx(1.0).epsilon(1e-9));
  const DensityMatrix psi = named_state("max_ent_pm");
  CHECK(conditional_mutual_information(psi.rho, psi.dims, {0}, {1}, {}) ==
        doctest::Approx(mutual_information(psi.rho, psi.dims, {0})).epsilon(1e-12));
  CHECK_THROWS_AS(conditional_mutual_information(ghz.rho, ghz.dims, {0}, {1}, {}),
                  std::invalid_argument);
}

TEST_CASE("strong subadditivity holds on random tripartite states") {
  for (int trial = 0; trial < 50; ++trial) {
    std::mt19937_64 rng = seeded_rng(mix_seed(17, static_cast<std::uint64_t>(trial)));
    const DensityMatrix rho = random_density(Dims{2, 2, 2}, rng);
    CHECK(conditional_mutual_information(rho.rho, rho.dims, {0}, {1}, {2}) >= -1e-9);
  }
}

TEST_CASE("relative entropy of coherence") {
  Eigen::VectorXcd plus(2);
  plus << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  const Eigen::MatrixXcd rho = plus * plus.adjoint();
  CHECK(rel_entropy_coherence(rho) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(rel_entropy_coherence(dephase(rho)) == doctest::Approx(0.0).epsilon(1e-12));

  // dephasing A of the max-entangled state leaves exactly one bit of coherence
  const DensityMatrix psi = named_state("max_ent_pm");
  const Eigen::MatrixXcd a_dephased = dephase(psi.rho, psi.dims, {0});
  CHECK(rel_entropy_coherence(a_dephased, psi.dims, {0, 1}) ==
        doctest::Approx(1.0).epsilon(1e-9));
}

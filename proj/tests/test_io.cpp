#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <string>

#include "incoh/io.hpp"
#include "incoh/states.hpp"

using namespace incoh;

TEST_CASE("matrix json round trip is exact") {
  std::mt19937_64 rng = seeded_rng(91);
  const Eigen::MatrixXcd m = random_ginibre(3, 4, rng);
  const Eigen::MatrixXcd back = matrix_from_json(matrix_to_json(m));
  CHECK(m == back);  // shortest round-trip doubles survive serialization
}

TEST_CASE("real-only matrices may omit the imaginary grid") {
  const std::string text =
      R"({"rows": 2, "cols": 2, "re": [[1.0, 0.0], [0.0, 0.0]]})";
  const Eigen::MatrixXcd m = matrix_from_json(text);
  CHECK(m(0, 0) == cxd(1, 0));
  CHECK(m(1, 1) == cxd(0, 0));
}

TEST_CASE("malformed matrices raise io_error") {
  CHECK_THROWS_AS(matrix_from_json("not json at all {"), io_error);
  CHECK_THROWS_AS(matrix_from_json(R"({"rows": 2, "cols": 2})"), io_error);
  CHECK_THROWS_AS(matrix_from_json(R"({"rows": 2, "cols": 2, "re": [[1, 0]]})"), io_error);
  CHECK_THROWS_AS(matrix_from_json(R"({"rows": 0, "cols": 2, "re": []})"), io_error);
  CHECK_THROWS_AS(matrix_from_json(R"({"rows": 2, "cols": 2, "re": [[1, "x"], [0, 0]]})"),
                  io_error);
}

TEST_CASE("state round trip keeps dims and validation applies") {
  const DensityMatrix psi = named_state("ghz");
  const DensityMatrix back = state_from_json(state_to_json(psi));
  CHECK(psi.rho == back.rho);
  CHECK(psi.dims == back.dims);

  // parses fine but fails the density-matrix contract: not an io_error
  const std::string trace2 =
      R"({"rows": 2, "cols": 2, "re": [[1.0, 0.0], [0.0, 1.0]]})";
  CHECK_THROWS_AS(state_from_json(trace2), std::invalid_argument);
  // dims that do not factor the matrix are an interchange error
  const std::string bad_dims =
      R"({"rows": 2, "cols": 2, "re": [[0.5, 0.0], [0.0, 0.5]], "dims": [3]})";
  CHECK_THROWS_AS(state_from_json(bad_dims), io_error);
}

TEST_CASE("povm and channel round trips") {
  std::mt19937_64 rng = seeded_rng(93);
  const Povm m = random_incoherent_povm(3, 4, rng);
  const Povm m2 = povm_from_json(povm_to_json(m));
  REQUIRE(m2.outcomes() == m.outcomes());
  for (std::size_t j = 0; j < m.elements.size(); ++j) CHECK(m.elements[j] == m2.elements[j]);

  const KrausChannel ch = library_channel("mio_not_io_qutrit");
  const KrausChannel ch2 = channel_from_json(channel_to_json(ch));
  REQUIRE(ch2.kraus.size() == ch.kraus.size());
  CHECK(ch2.dim_in == 3);
  for (std::size_t l = 0; l < ch.kraus.size(); ++l) CHECK(ch.kraus[l] == ch2.kraus[l]);

  // a non-trace-preserving Kraus list is rejected as an io_error by the loader
  const std::string half =
      R"({"kraus": [{"rows": 2, "cols": 2, "re": [[0.5, 0.0], [0.0, 0.5]]}]})";
  CHECK_THROWS_AS(channel_from_json(half), io_error);
}

TEST_CASE("file helpers and the catalog-or-file loaders") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "incoh_io_test";
  fs::create_directories(dir);
  const std::string path = (dir / "state.json").string();

  write_file(path, state_to_json(named_state("w")));
  const DensityMatrix from_file = load_state(path);
  CHECK(from_file.dims == Dims{2, 2, 2});

  const DensityMatrix from_name = load_state("max_ent_pm");
  CHECK(from_name.dims == Dims{2, 2});

  CHECK_THROWS_AS(load_state((dir / "missing.json").string()), io_error);
  CHECK_THROWS_AS(read_file((dir / "missing.json").string()), io_error);

  CHECK(load_channel("mio_not_io_qutrit").dim_in == 3);
  fs::remove_all(dir);
}

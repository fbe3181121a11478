// Subprocess tests for the command-line tool. The binary path arrives via the
// INCOH_CLI environment variable so the suite works from any build layout.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "incoh/discord.hpp"
#include "incoh/io.hpp"
#include "incoh/measurement.hpp"
#include "incoh/states.hpp"

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct RunResult {
  int exit_code = -1;
  std::string out;
};

std::string cli_path() {
  const char* env = std::getenv("INCOH_CLI");
  REQUIRE_MESSAGE(env != nullptr, "INCOH_CLI must point at the command-line binary");
  return env;
}

RunResult run_cli(const std::string& args) {
  const std::string cmd = "'" + cli_path() + "' " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

// Scratch directory shared by the cases; contents are regenerated per run.
fs::path scratch() {
  const fs::path dir = fs::temp_directory_path() / "incoh_cli_test";
  fs::create_directories(dir);
  return dir;
}

std::string write_pm_povm() {
  Eigen::MatrixXcd u(2, 2);
  const double s2 = 1.0 / std::sqrt(2.0);
  u << s2, s2, s2, -s2;
  const incoh::Povm pm = incoh::noisy_projective(incoh::OrthonormalBasis::from_columns(u), 1.0);
  const std::string path = (scratch() / "pm_povm.json").string();
  incoh::write_file(path, incoh::povm_to_json(pm));
  return path;
}

}  // namespace

TEST_CASE("reproduce passes and reports every row") {
  const RunResult r = run_cli("--format json reproduce");
  CHECK(r.exit_code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc["failures"] == 0);
  CHECK(doc["rows"].size() >= 20);
  for (const auto& row : doc["rows"]) CHECK(row["pass"] == true);
}

TEST_CASE("qdi on the catalog state matches the library bit for bit") {
  const RunResult r = run_cli("--format json qdi max_ent_pm --cut 1");
  CHECK(r.exit_code == 0);
  const json doc = json::parse(r.out);
  const incoh::QdiReport direct = incoh::qdi(incoh::named_state("max_ent_pm"), {0});
  CHECK(doc["qdi"].get<double>() == direct.value());
  CHECK(doc["j_incoherent"].get<double>() == direct.j_incoherent);
}

TEST_CASE("global flags are accepted after the subcommand too") {
  const RunResult r = run_cli("qdi max_ent_pm --cut 1 --format json");
  CHECK(r.exit_code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc["qdi"].get<double>() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("check-povm certifies the pm measurement with exit 2") {
  const std::string path = write_pm_povm();
  const RunResult r = run_cli("check-povm '" + path + "'");
  CHECK(r.exit_code == 2);
  CHECK(r.out.find("NOT incoherent") != std::string::npos);
  CHECK(r.out.find("0.5") != std::string::npos);
}

TEST_CASE("check-povm accepts an incoherent POVM with exit 0") {
  std::mt19937_64 rng = incoh::seeded_rng(5);
  const incoh::Povm m = incoh::random_incoherent_povm(3, 4, rng);
  const std::string path = (scratch() / "flat_povm.json").string();
  incoh::write_file(path, incoh::povm_to_json(m));
  const RunResult r = run_cli("check-povm '" + path + "'");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("incoherent") != std::string::npos);
}

TEST_CASE("witness on the built-in noisy projective reports (d-1)*lambda") {
  const RunResult r =
      run_cli("--format json witness --noise-lambda 0.3 --basis fourier --dim 3");
  CHECK(r.exit_code == 2);  // 0.6 > certification threshold
  const json doc = json::parse(r.out);
  CHECK(doc["certified"] == true);
  CHECK(std::abs(doc["violation"].get<double>() - 0.6) < 1e-9);

  const RunResult flat = run_cli("witness --noise-lambda 0 --basis fourier --dim 3");
  CHECK(flat.exit_code == 0);
}

TEST_CASE("witness --optimize is deterministic under a fixed seed") {
  const std::string path = write_pm_povm();
  const std::string args =
      "--seed 7 --format json witness '" + path + "' --optimize --restarts 4 --steps 50";
  const RunResult a = run_cli(args);
  const RunResult b = run_cli(args);
  CHECK(a.exit_code == 2);
  CHECK(a.out == b.out);
}

TEST_CASE("monogamy subcommand matches the library") {
  const RunResult r = run_cli("--format json monogamy ghz --a 0 --b 1 --b2 2");
  CHECK(r.exit_code == 0);
  const json doc = json::parse(r.out);
  const incoh::MonogamyReport direct =
      incoh::monogamy_gap(incoh::named_state("ghz"), {0}, {1}, {2});
  CHECK(doc["gap"].get<double>() == direct.gap);
  CHECK(std::abs(doc["gap"].get<double>() + 1.0) < 1e-9);
}

TEST_CASE("channel-check classifies catalog channels") {
  const RunResult r = run_cli("--format json channel-check mio_not_io_qutrit");
  CHECK(r.exit_code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc["cptp"] == true);
  CHECK(doc["mio"] == true);
  CHECK(doc["gio"] == false);
  CHECK(doc["completely_qdi_nongenerating"] == false);

  const RunResult dep = run_cli("--format json channel-check depolarizing --param 2 --param 0.5");
  CHECK(dep.exit_code == 0);
  CHECK(json::parse(dep.out)["mio"] == true);
}

TEST_CASE("entropy and mutinf agree with direct evaluation") {
  const RunResult e = run_cli("--format json entropy max_ent_pm");
  CHECK(e.exit_code == 0);
  CHECK(std::abs(json::parse(e.out)["entropy"].get<double>()) < 1e-9);

  const RunResult mi = run_cli("--format json mutinf max_ent_pm --cut 1");
  CHECK(mi.exit_code == 0);
  CHECK(std::abs(json::parse(mi.out)["mutual_information"].get<double>() - 2.0) < 1e-9);
}

TEST_CASE("parse failures exit 64, validation failures exit 65") {
  const std::string garbled = (scratch() / "garbled.json").string();
  incoh::write_file(garbled, "this is { not json");
  CHECK(run_cli("qdi '" + garbled + "'").exit_code == 64);
  CHECK(run_cli("check-povm '" + garbled + "'").exit_code == 64);

  const std::string trace2 = (scratch() / "trace2.json").string();
  incoh::write_file(trace2, R"({"rows": 2, "cols": 2, "re": [[1.0, 0.0], [0.0, 1.0]]})");
  CHECK(run_cli("qdi '" + trace2 + "'").exit_code == 65);

  // a single-subsystem state cannot be cut
  const std::string single = (scratch() / "single.json").string();
  incoh::write_file(single, R"({"rows": 2, "cols": 2, "re": [[0.5, 0.0], [0.0, 0.5]]})");
  CHECK(run_cli("qdi '" + single + "'").exit_code == 65);

  CHECK(run_cli("qdi max_ent_pm --no-such-flag").exit_code == 64);
  CHECK(run_cli("").exit_code == 64);  // a subcommand is required
}

// Command-line front end. Thin adapter over the library: every number printed
// here comes from the same calls the tests make.
//
// Exit codes: 0 success, 2 a coherent (non-incoherent) measurement was
// certified, 64 input could not be parsed, 65 input parsed but failed
// validation, 70 internal cross-check failure.

#include <cstdint>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "incoh/channels.hpp"
#include "incoh/discord.hpp"
#include "incoh/info.hpp"
#include "incoh/io.hpp"
#include "incoh/measurement.hpp"
#include "incoh/repro.hpp"
#include "incoh/states.hpp"

namespace {

using incoh::DensityMatrix;
using nlohmann::json;

constexpr int exit_ok = 0;
constexpr int exit_certified = 2;
constexpr int exit_parse = 64;
constexpr int exit_validation = 65;
constexpr int exit_internal = 70;

struct GlobalOpts {
  double tol = incoh::validity_tol;
  std::uint64_t seed = 0;
  std::string format = "text";
};

void emit(const GlobalOpts& opts, const json& doc, const std::string& text) {
  if (opts.format == "json")
    std::cout << doc.dump(2) << "\n";
  else
    std::cout << text;
}

std::vector<int> parse_group(const GlobalOpts&, const std::string& csv) {
  std::vector<int> group;
  std::stringstream ss(csv);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      group.push_back(std::stoi(part));
    } catch (const std::exception&) {
      throw incoh::io_error("invalid subsystem index '" + part + "'");
    }
  }
  if (group.empty()) throw incoh::io_error("empty subsystem group");
  return group;
}

std::vector<int> cut_group(int cut) {
  std::vector<int> group;
  for (int i = 0; i < cut; ++i) group.push_back(i);
  return group;
}

int cmd_check_povm(const GlobalOpts& opts, const std::string& file) {
  const incoh::Povm m = incoh::load_povm(file, opts.tol);
  const incoh::IncoherenceReport report = incoh::is_incoherent(m, opts.tol);
  std::ostringstream text;
  if (report.incoherent)
    text << "incoherent (worst off-diagonal " << report.worst_offdiag << ")\n";
  else
    text << "NOT incoherent, worst off-diagonal " << report.worst_offdiag << "\n";
  emit(opts,
       json{{"incoherent", report.incoherent}, {"worst_offdiag", report.worst_offdiag}},
       text.str());
  return report.incoherent ? exit_ok : exit_certified;
}

int cmd_witness(const GlobalOpts& opts, const std::string& file, double noise_lambda,
                const std::string& basis_name, int dim, bool optimize, int restarts, int steps) {
  incoh::Povm m;
  incoh::OrthonormalBasis basis = incoh::OrthonormalBasis::standard(2);
  const auto pick_basis = [&](Eigen::Index d) {
    if (basis_name == "fourier") return incoh::OrthonormalBasis::fourier(d);
    if (basis_name == "standard") return incoh::OrthonormalBasis::standard(d);
    if (basis_name == "random") {
      std::mt19937_64 rng = incoh::seeded_rng(opts.seed);
      return incoh::OrthonormalBasis::random(d, rng);
    }
    throw incoh::io_error("unknown basis '" + basis_name + "'");
  };

  if (!file.empty()) {
    m = incoh::load_povm(file, opts.tol);
    basis = pick_basis(m.dim());
  } else {
    if (dim < 2) throw incoh::io_error("need --dim >= 2 when no measurement file is given");
    basis = pick_basis(dim);
    m = incoh::noisy_projective(basis, noise_lambda);
  }

  incoh::WitnessReport report;
  if (optimize) {
    incoh::WitnessSearchOptions options;
    options.seed = opts.seed;
    options.restarts = restarts;
    options.steps = steps;
    report = incoh::optimize_witness(m, options);
  } else {
    report = incoh::witness_value(m, basis);
  }

  std::ostringstream text;
  text << "lhs       " << report.lhs << "\n"
       << "rhs       " << report.rhs << "\n"
       << "violation " << report.violation << "\n"
       << (report.certified() ? "certified coherent\n" : "no violation certified\n");
  json doc{{"lhs", report.lhs},
           {"rhs", report.rhs},
           {"violation", report.violation},
           {"certified", report.certified()},
           {"assignment", report.assignment}};
  doc["basis"] = json::parse(incoh::matrix_to_json(report.basis.u));
  emit(opts, doc, text.str());
  return report.certified() ? exit_certified : exit_ok;
}

int cmd_qdi(const GlobalOpts& opts, const std::string& spec, int cut, const std::string& group_csv) {
  const DensityMatrix rho = incoh::load_state(spec, opts.tol);
  const std::vector<int> group = group_csv.empty() ? cut_group(cut) : parse_group(opts, group_csv);
  const incoh::QdiReport report = incoh::qdi(rho, group);
  std::ostringstream text;
  text << "qdi             " << report.value() << "\n"
       << "j_incoherent    " << report.j_incoherent << "\n"
       << "cross-check spread " << report.max_discrepancy << "\n";
  emit(opts,
       json{{"qdi", report.value()},
            {"qdi_projective", report.qdi_projective},
            {"qdi_mutinf", report.qdi_mutinf},
            {"qdi_coherence", report.qdi_coherence},
            {"j_incoherent", report.j_incoherent},
            {"max_discrepancy", report.max_discrepancy}},
       text.str());
  return exit_ok;
}

int cmd_monogamy(const GlobalOpts& opts, const std::string& spec, const std::string& a,
                 const std::string& b, const std::string& b2) {
  const DensityMatrix rho = incoh::load_state(spec, opts.tol);
  const incoh::MonogamyReport report =
      incoh::monogamy_gap(rho, parse_group(opts, a), parse_group(opts, b), parse_group(opts, b2));
  std::ostringstream text;
  text << "D(B|A)      " << report.d_b_a << "\n"
       << "D(B'|A)     " << report.d_b2_a << "\n"
       << "D(BB'|A)    " << report.d_bb2_a << "\n"
       << "gap         " << report.gap << "\n"
       << "gap via CMI " << report.gap_cmi << "\n";
  emit(opts,
       json{{"d_b_a", report.d_b_a},
            {"d_b2_a", report.d_b2_a},
            {"d_bb2_a", report.d_bb2_a},
            {"gap", report.gap},
            {"gap_cmi", report.gap_cmi}},
       text.str());
  return exit_ok;
}

int cmd_channel_check(const GlobalOpts& opts, const std::string& spec,
                      const std::vector<double>& params) {
  incoh::KrausChannel ch;
  const auto& catalog = incoh::library_channel_catalog();
  if (std::find(catalog.begin(), catalog.end(), spec) != catalog.end())
    ch = incoh::library_channel(spec, params);
  else
    ch = incoh::channel_from_json(incoh::read_file(spec), opts.tol);

  const incoh::ChannelCheck cptp = incoh::check_channel(ch, opts.tol);
  const incoh::PredicateReport cna = incoh::is_coherence_non_activating(ch, opts.tol);
  const incoh::PredicateReport mio = incoh::is_mio(ch, opts.tol);
  const incoh::PredicateReport gio = incoh::is_gio(ch, opts.tol);
  const incoh::QdiNonGeneratingReport cqng = incoh::is_completely_qdi_nongenerating(ch, opts.tol);

  const auto mark = [](bool v) { return v ? "yes" : "no"; };
  std::ostringstream text;
  text << "trace preserving           " << mark(cptp.ok) << "\n"
       << "coherence non-activating   " << mark(cna.value) << "\n"
       << "MIO                        " << mark(mio.value) << "\n"
       << "GIO                        " << mark(gio.value) << "\n"
       << "completely QDI non-generating " << mark(cqng.value) << "\n";
  json doc{{"cptp", cptp.ok},
           {"coherence_non_activating", cna.value},
           {"mio", mio.value},
           {"gio", gio.value},
           {"completely_qdi_nongenerating", cqng.value}};
  if (cqng.permutation) doc["permutation"] = *cqng.permutation;
  emit(opts, doc, text.str());
  return exit_ok;
}

int cmd_entropy(const GlobalOpts& opts, const std::string& spec) {
  const DensityMatrix rho = incoh::load_state(spec, opts.tol);
  const double s = incoh::von_neumann_entropy(rho.rho);
  std::ostringstream text;
  text << "entropy " << s << "\n";
  emit(opts, json{{"entropy", s}}, text.str());
  return exit_ok;
}

int cmd_mutinf(const GlobalOpts& opts, const std::string& spec, int cut,
               const std::string& group_csv) {
  const DensityMatrix rho = incoh::load_state(spec, opts.tol);
  const std::vector<int> group = group_csv.empty() ? cut_group(cut) : parse_group(opts, group_csv);
  const double mi = incoh::mutual_information(rho.rho, rho.dims, group);
  std::ostringstream text;
  text << "mutual information " << mi << "\n";
  emit(opts, json{{"mutual_information", mi}}, text.str());
  return exit_ok;
}

int cmd_reproduce(const GlobalOpts& opts) {
  const std::vector<incoh::ReproRow> rows = incoh::run_reproduction(opts.seed);
  int failures = 0;
  std::ostringstream text;
  text << std::left << std::setw(28) << "id" << std::right << std::setw(18) << "expected"
       << std::setw(18) << "computed" << std::setw(10) << "tol"
       << "  result  claim\n";
  json arr = json::array();
  for (const incoh::ReproRow& row : rows) {
    if (!row.pass) ++failures;
    text << std::left << std::setw(28) << row.id << std::right << std::setw(18)
         << std::setprecision(10) << row.expected << std::setw(18) << row.computed
         << std::setw(10) << std::setprecision(1) << std::scientific << row.tolerance
         << std::defaultfloat << "  " << (row.pass ? "PASS" : "FAIL") << "    " << row.claim
         << "\n";
    const char* kind = row.kind == incoh::RowKind::equal
                           ? "equal"
                           : (row.kind == incoh::RowKind::at_most ? "at_most" : "at_least");
    arr.push_back(json{{"id", row.id},
                       {"claim", row.claim},
                       {"kind", kind},
                       {"expected", row.expected},
                       {"computed", row.computed},
                       {"tolerance", row.tolerance},
                       {"pass", row.pass}});
  }
  text << (failures == 0 ? "all rows pass\n"
                         : std::to_string(failures) + " row(s) FAILED\n");
  emit(opts, json{{"rows", std::move(arr)}, {"failures", failures}}, text.str());
  return failures == 0 ? exit_ok : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical toolkit for incoherent measurements, the coherence witness, "
               "and measurement-based discord"};
  app.require_subcommand(1);

  GlobalOpts opts;
  app.add_option("--tol", opts.tol, "validation tolerance")->capture_default_str();
  app.add_option("--seed", opts.seed, "seed for all randomized paths")->capture_default_str();
  app.add_option("--format", opts.format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  std::string povm_file;
  CLI::App* check_povm = app.add_subcommand("check-povm", "validate a POVM and test incoherence");
  check_povm->add_option("file", povm_file, "POVM JSON file")->required();

  std::string witness_file;
  double noise_lambda = 1.0;
  std::string basis_name = "fourier";
  int dim = 0;
  bool optimize = false;
  int restarts = 20;
  int steps = 200;
  CLI::App* witness = app.add_subcommand("witness", "evaluate or optimize the coherence witness");
  witness->add_option("file", witness_file, "POVM JSON file (omit to build a noisy projective)");
  witness->add_option("--noise-lambda", noise_lambda, "sharpness of the built-in noisy projective");
  witness->add_option("--basis", basis_name, "witness basis: fourier, standard, random")
      ->capture_default_str();
  witness->add_option("--dim", dim, "dimension for the built-in noisy projective");
  witness->add_flag("--optimize", optimize, "search over bases instead of using --basis");
  witness->add_option("--restarts", restarts, "optimizer restarts")->capture_default_str();
  witness->add_option("--steps", steps, "optimizer steps per restart")->capture_default_str();

  std::string qdi_spec;
  int qdi_cut = 1;
  std::string qdi_group;
  CLI::App* qdi_cmd = app.add_subcommand("qdi", "discord based on incoherent measurements");
  qdi_cmd->add_option("state", qdi_spec, "catalog name or state JSON file")->required();
  qdi_cmd->add_option("--cut", qdi_cut, "measure the first N subsystems")->capture_default_str();
  qdi_cmd->add_option("--group", qdi_group, "comma-separated measured subsystems (overrides --cut)");

  std::string mono_spec, mono_a = "0", mono_b = "1", mono_b2 = "2";
  CLI::App* monogamy = app.add_subcommand("monogamy", "monogamy gap D(B|A)+D(B'|A)-D(BB'|A)");
  monogamy->add_option("state", mono_spec, "catalog name or state JSON file")->required();
  monogamy->add_option("--a", mono_a, "measured group A (comma-separated)")->capture_default_str();
  monogamy->add_option("--b", mono_b, "group B")->capture_default_str();
  monogamy->add_option("--b2", mono_b2, "group B'")->capture_default_str();

  std::string channel_spec;
  std::vector<double> channel_params;
  CLI::App* channel_check = app.add_subcommand("channel-check", "classify a Kraus channel");
  channel_check->add_option("channel", channel_spec, "catalog name or channel JSON file")
      ->required();
  channel_check->add_option("--param", channel_params, "parameters for catalog channels");

  std::string entropy_spec;
  CLI::App* entropy_cmd = app.add_subcommand("entropy", "von Neumann entropy of a state");
  entropy_cmd->add_option("state", entropy_spec, "catalog name or state JSON file")->required();

  std::string mutinf_spec;
  int mutinf_cut = 1;
  std::string mutinf_group;
  CLI::App* mutinf_cmd = app.add_subcommand("mutinf", "mutual information across a cut");
  mutinf_cmd->add_option("state", mutinf_spec, "catalog name or state JSON file")->required();
  mutinf_cmd->add_option("--cut", mutinf_cut, "first N subsystems form side A")
      ->capture_default_str();
  mutinf_cmd->add_option("--group", mutinf_group, "comma-separated side-A subsystems");

  CLI::App* reproduce = app.add_subcommand("reproduce", "run the full reproduction table");

  // global flags are accepted before or after the subcommand
  for (CLI::App* sub : {check_povm, witness, qdi_cmd, monogamy, channel_check, entropy_cmd,
                        mutinf_cmd, reproduce})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : exit_parse;
  }

  try {
    if (check_povm->parsed()) return cmd_check_povm(opts, povm_file);
    if (witness->parsed())
      return cmd_witness(opts, witness_file, noise_lambda, basis_name, dim, optimize, restarts,
                         steps);
    if (qdi_cmd->parsed()) return cmd_qdi(opts, qdi_spec, qdi_cut, qdi_group);
    if (monogamy->parsed()) return cmd_monogamy(opts, mono_spec, mono_a, mono_b, mono_b2);
    if (channel_check->parsed()) return cmd_channel_check(opts, channel_spec, channel_params);
    if (entropy_cmd->parsed()) return cmd_entropy(opts, entropy_spec);
    if (mutinf_cmd->parsed()) return cmd_mutinf(opts, mutinf_spec, mutinf_cut, mutinf_group);
    if (reproduce->parsed()) return cmd_reproduce(opts);
  } catch (const incoh::io_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return exit_parse;
  } catch (const std::invalid_argument& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return exit_validation;
  } catch (const std::domain_error& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return exit_validation;
  } catch (const std::logic_error& e) {
    std::cerr << "internal cross-check failure: " << e.what() << "\n";
    return exit_internal;
  }
  return exit_ok;
}

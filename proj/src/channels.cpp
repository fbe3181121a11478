#include "incoh/channels.hpp"

#include "incoh/discord.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace incoh {

ChannelCheck check_channel(const KrausChannel& ch, double tol) {
  if (ch.kraus.empty()) return {false, "no Kraus operators"};
  for (const auto& k : ch.kraus)
    if (k.rows() != ch.dim_out || k.cols() != ch.dim_in)
      return {false, "Kraus operator shape does not match channel dimensions"};
  Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(ch.dim_in, ch.dim_in);
  for (const auto& k : ch.kraus) sum += k.adjoint() * k;
  if (!is_identity(sum, tol))
    return {false, "Kraus operators are not trace-preserving (sum K^dag K != identity)"};
  return {};
}

KrausChannel make_channel(std::vector<Eigen::MatrixXcd> kraus, double tol) {
  if (kraus.empty()) throw std::invalid_argument("make_channel: no Kraus operators");
  KrausChannel ch;
  ch.dim_in = kraus.front().cols();
  ch.dim_out = kraus.front().rows();
  ch.kraus = std::move(kraus);
  const ChannelCheck check = check_channel(ch, tol);
  if (!check.ok) throw std::invalid_argument("make_channel: " + check.reason);
  return ch;
}

Eigen::MatrixXcd apply(KrausChannel ch, Eigen::MatrixXcd rho) {
  if (rho.rows() != ch.dim_in || rho.cols() != ch.dim_in)
    throw std::invalid_argument("apply: state does not match channel input dimension");
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(ch.dim_out, ch.dim_out);
  for (const auto& k : ch.kraus) out += k * rho * k.adjoint();
  return out;
}

DensityMatrix apply(KrausChannel ch, DensityMatrix rho) {
  if (total_dim(rho.dims) != ch.dim_in)
    throw std::invalid_argument("apply: state does not match channel input dimension");
  const Eigen::Index dim_out = ch.dim_out;
  return make_density(apply(std::move(ch), std::move(rho.rho)), Dims{dim_out});
}

DensityMatrix apply_on_subsystem(const KrausChannel& ch, const DensityMatrix& rho,
                                 int target) {
  detail::check_subsystems({target}, rho.dims.size(), "apply_on_subsystem");
  if (ch.dim_in != ch.dim_out)
    throw std::invalid_argument("apply_on_subsystem: channel must preserve the dimension");
  if (rho.dims[static_cast<std::size_t>(target)] != ch.dim_in)
    throw std::invalid_argument("apply_on_subsystem: channel does not fit the subsystem");

  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(rho.dim(), rho.dim());
  for (const auto& k : ch.kraus) {
    Eigen::MatrixXcd lifted = Eigen::MatrixXcd::Ones(1, 1);
    for (std::size_t s = 0; s < rho.dims.size(); ++s) {
      if (static_cast<int>(s) == target)
        lifted = tensor_product(lifted, k);
      else
        lifted = tensor_product(
            lifted, Eigen::MatrixXcd::Identity(rho.dims[s], rho.dims[s]).eval());
    }
    out += lifted * rho.rho * lifted.adjoint();
  }
  return make_density(std::move(out), rho.dims);
}

Eigen::MatrixXcd adjoint_apply(const KrausChannel& ch, const Eigen::MatrixXcd& x) {
  if (x.rows() != ch.dim_out || x.cols() != ch.dim_out)
    throw std::invalid_argument("adjoint_apply: observable does not match output dimension");
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(ch.dim_in, ch.dim_in);
  for (const auto& k : ch.kraus) out += k.adjoint() * x * k;
  return out;
}

namespace {

Eigen::MatrixXcd matrix_unit(Eigen::Index d, Eigen::Index j, Eigen::Index k) {
  Eigen::MatrixXcd e = Eigen::MatrixXcd::Zero(d, d);
  e(j, k) = 1.0;
  return e;
}

void require_square(const KrausChannel& ch, const char* who) {
  if (ch.dim_in != ch.dim_out)
    throw std::invalid_argument(std::string(who) + ": channel must preserve the dimension");
}

}  // namespace

PredicateReport is_coherence_non_activating(const KrausChannel& ch, double tol) {
  require_square(ch, "is_coherence_non_activating");
  const Eigen::Index d = ch.dim_in;
  PredicateReport report;
  for (Eigen::Index j = 0; j < d; ++j) {
    for (Eigen::Index k = 0; k < d; ++k) {
      const Eigen::MatrixXcd unit = matrix_unit(d, j, k);
      const Eigen::VectorXcd lhs = apply(ch, unit).diagonal();
      const Eigen::VectorXcd rhs =
          apply(ch, dephase(unit, Dims{d}, {0})).diagonal();
      report.worst_deviation =
          std::max(report.worst_deviation, max_abs(lhs - rhs));
    }
  }
  report.value = report.worst_deviation <= tol;
  return report;
}

PredicateReport is_mio(const KrausChannel& ch, double tol) {
  require_square(ch, "is_mio");
  PredicateReport report;
  for (Eigen::Index j = 0; j < ch.dim_in; ++j) {
    const Eigen::MatrixXcd image = apply(ch, matrix_unit(ch.dim_in, j, j));
    report.worst_deviation = std::max(report.worst_deviation, max_offdiag_abs(image));
  }
  report.value = report.worst_deviation <= tol;
  return report;
}

PredicateReport is_gio(const KrausChannel& ch, double tol) {
  require_square(ch, "is_gio");
  PredicateReport report;
  for (Eigen::Index j = 0; j < ch.dim_in; ++j) {
    const Eigen::MatrixXcd unit = matrix_unit(ch.dim_in, j, j);
    report.worst_deviation =
        std::max(report.worst_deviation, max_abs(apply(ch, unit) - unit));
  }
  report.value = report.worst_deviation <= tol;
  return report;
}

QdiNonGeneratingReport is_completely_qdi_nongenerating(const KrausChannel& ch, double tol) {
  require_square(ch, "is_completely_qdi_nongenerating");
  const Eigen::Index d = ch.dim_in;

  // Each image must be an incoherent projector; the target index is read off
  // the dominant diagonal entry.
  QdiNonGeneratingReport report;
  std::vector<int> sigma(static_cast<std::size_t>(d), -1);
  std::vector<bool> hit(static_cast<std::size_t>(d), false);
  bool bijective = true;
  for (Eigen::Index j = 0; j < d; ++j) {
    const Eigen::MatrixXcd image = apply(ch, matrix_unit(d, j, j));
    Eigen::Index target = 0;
    image.diagonal().real().maxCoeff(&target);
    report.worst_deviation =
        std::max(report.worst_deviation, max_abs(image - matrix_unit(d, target, target)));
    sigma[static_cast<std::size_t>(j)] = static_cast<int>(target);
    if (hit[static_cast<std::size_t>(target)]) bijective = false;
    hit[static_cast<std::size_t>(target)] = true;
  }
  if (!bijective || report.worst_deviation > tol) return report;

  // Undo the permutation and require a genuine fixed-point channel.
  const Eigen::MatrixXcd p = permutation_matrix(sigma);
  KrausChannel conjugated = ch;
  for (auto& k : conjugated.kraus) k = p.adjoint() * k;
  const PredicateReport gio = is_gio(conjugated, tol);
  report.worst_deviation = std::max(report.worst_deviation, gio.worst_deviation);
  if (!gio.value) return report;

  report.value = true;
  report.permutation = sigma;
  return report;
}

KrausChannel identity_channel(Eigen::Index d) {
  return make_channel({Eigen::MatrixXcd::Identity(d, d)});
}

KrausChannel unitary_channel(const Eigen::MatrixXcd& u) {
  if (!is_unitary(u))
    throw std::invalid_argument("unitary_channel: matrix is not unitary");
  return make_channel({u});
}

KrausChannel compose(const KrausChannel& f, const KrausChannel& g) {
  if (g.dim_out != f.dim_in)
    throw std::invalid_argument("compose: inner dimensions do not match");
  std::vector<Eigen::MatrixXcd> kraus;
  for (const auto& kf : f.kraus)
    for (const auto& kg : g.kraus) kraus.push_back(kf * kg);
  return make_channel(std::move(kraus));
}

KrausChannel depolarizing_channel(Eigen::Index d, double p) {
  if (p < 0.0 || p > 1.0)
    throw std::invalid_argument("depolarizing_channel: p must lie in [0,1]");

  // Weyl operators X^a Z^b; averaging over all d^2 of them is the full twirl
  // to identity/d, so reweighting the identity term realizes
  // p*rho + (1-p)*identity/d.
  Eigen::MatrixXcd shift = Eigen::MatrixXcd::Zero(d, d);
  for (Eigen::Index m = 0; m < d; ++m) shift((m + 1) % d, m) = 1.0;
  Eigen::MatrixXcd clock = Eigen::MatrixXcd::Zero(d, d);
  for (Eigen::Index m = 0; m < d; ++m)
    clock(m, m) = std::exp(cxd(0.0, 2.0 * std::numbers::pi * static_cast<double>(m) /
                                    static_cast<double>(d)));

  const double off_weight = (1.0 - p) / static_cast<double>(d * d);
  std::vector<Eigen::MatrixXcd> kraus;
  Eigen::MatrixXcd xa = Eigen::MatrixXcd::Identity(d, d);
  for (Eigen::Index a = 0; a < d; ++a) {
    Eigen::MatrixXcd w = xa;
    for (Eigen::Index b = 0; b < d; ++b) {
      const double weight = (a == 0 && b == 0) ? p + off_weight : off_weight;
      kraus.push_back(std::sqrt(weight) * w);
      w = w * clock;
    }
    xa = shift * xa;
  }
  return make_channel(std::move(kraus));
}

KrausChannel dephasing_channel(Eigen::Index d) {
  std::vector<Eigen::MatrixXcd> kraus;
  for (Eigen::Index j = 0; j < d; ++j) kraus.push_back(matrix_unit(d, j, j));
  return make_channel(std::move(kraus));
}

KrausChannel mio_not_io_qutrit_channel() {
  const double s2 = 1.0 / std::sqrt(2.0);
  Eigen::VectorXcd e0 = Eigen::VectorXcd::Zero(3), e1 = e0, e2 = e0;
  e0[0] = 1.0;
  e1[1] = 1.0;
  e2[2] = 1.0;
  const Eigen::VectorXcd minus = s2 * (e0 - e1);
  const Eigen::VectorXcd plus = s2 * (e0 + e1);
  return make_channel({s2 * (minus * e0.adjoint()), s2 * (e1 * e1.adjoint()),
                       s2 * (plus * e0.adjoint()), s2 * (e0 * e1.adjoint()),
                       e2 * e2.adjoint()});
}

KrausChannel library_channel(const std::string& name, const std::vector<double>& params) {
  if (name == "depolarizing") {
    if (params.size() != 2)
      throw std::invalid_argument("library_channel: depolarizing needs params (d, p)");
    const auto d = static_cast<Eigen::Index>(params[0]);
    if (d < 2 || params[0] != static_cast<double>(d))
      throw std::invalid_argument("library_channel: depolarizing dimension must be an integer >= 2");
    return depolarizing_channel(d, params[1]);
  }
  if (name == "dephasing") {
    if (params.size() != 1)
      throw std::invalid_argument("library_channel: dephasing needs param (d)");
    const auto d = static_cast<Eigen::Index>(params[0]);
    if (d < 2 || params[0] != static_cast<double>(d))
      throw std::invalid_argument("library_channel: dephasing dimension must be an integer >= 2");
    return dephasing_channel(d);
  }
  if (name == "mio_not_io_qutrit") {
    if (!params.empty())
      throw std::invalid_argument("library_channel: mio_not_io_qutrit takes no params");
    return mio_not_io_qutrit_channel();
  }
  throw std::invalid_argument("library_channel: unknown name '" + name + "'");
}

const std::vector<std::string>& library_channel_catalog() {
  static const std::vector<std::string> names = {"depolarizing", "dephasing", "mio_not_io_qutrit"};
  return names;
}

KrausChannel random_channel(Eigen::Index d, int n_kraus, std::mt19937_64& rng) {
  if (n_kraus < 1) throw std::invalid_argument("random_channel: need at least one Kraus term");
  // A Haar-random isometry V : C^d -> C^(n*d) sliced into blocks gives a
  // uniformly sampled Kraus decomposition.
  const Eigen::MatrixXcd g = random_ginibre(static_cast<Eigen::Index>(n_kraus) * d, d, rng);
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ() * Eigen::MatrixXcd::Identity(
                                               static_cast<Eigen::Index>(n_kraus) * d, d);
  const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index k = 0; k < d; ++k) {
    const cxd rkk = r(k, k);
    const double mag = std::abs(rkk);
    q.col(k) *= (mag > 0.0) ? rkk / mag : cxd(1.0, 0.0);
  }
  std::vector<Eigen::MatrixXcd> kraus;
  for (int l = 0; l < n_kraus; ++l)
    kraus.push_back(q.middleRows(static_cast<Eigen::Index>(l) * d, d));
  return make_channel(std::move(kraus));
}

KrausChannel random_gio_channel(Eigen::Index d, int n_kraus, std::mt19937_64& rng) {
  if (n_kraus < 1)
    throw std::invalid_argument("random_gio_channel: need at least one Kraus term");
  std::vector<Eigen::VectorXcd> diags;
  Eigen::VectorXd norm = Eigen::VectorXd::Zero(d);
  std::normal_distribution<double> normal(0.0, 1.0);
  for (int l = 0; l < n_kraus; ++l) {
    Eigen::VectorXcd v(d);
    for (Eigen::Index i = 0; i < d; ++i) {
      v[i] = cxd(normal(rng), normal(rng));
      norm[i] += std::norm(v[i]);
    }
    diags.push_back(std::move(v));
  }
  std::vector<Eigen::MatrixXcd> kraus;
  for (auto& v : diags) {
    for (Eigen::Index i = 0; i < d; ++i) v[i] /= std::sqrt(norm[i]);
    kraus.push_back(Eigen::MatrixXcd(v.asDiagonal()));
  }
  return make_channel(std::move(kraus));
}

KrausChannel random_cna_channel(Eigen::Index d, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> which(0, 2);
  switch (which(rng)) {
    case 0:
      return random_gio_channel(d, 3, rng);
    case 1:
      return unitary_channel(random_incoherent_unitary(d, rng));
    default:
      // A channel preceded by full dephasing never sees off-diagonal input,
      // so dephasing the input beforehand changes nothing.
      return compose(random_channel(d, 2, rng), dephasing_channel(d));
  }
}

ActivationReport activation_demo(double p) {
  if (p < 0.0 || p > 1.0)
    throw std::invalid_argument("activation_demo: p must lie in [0,1]");

  const DensityMatrix before = named_state("activation");
  ActivationReport report;
  report.qdi_before = qdi(before, {0, 1}).value();
  if (std::abs(report.qdi_before) > validity_tol)
    throw std::logic_error("activation_demo: initial state has nonzero discord");

  const DensityMatrix after = apply_on_subsystem(depolarizing_channel(2, p), before, 0);

  // Closed form of the post-channel state, used as an independent check:
  // 1/2 [p|00><00| + (1-p)(1/2)(x)|0><0|] (x) |0><0|
  //   + 1/4 [p(|01>+|10>)(<01|+<10|) + (1-p)(1/2) 1 (x) 1] (x) |1><1|.
  Eigen::MatrixXcd e0 = Eigen::MatrixXcd::Zero(2, 2), e1 = Eigen::MatrixXcd::Zero(2, 2);
  e0(0, 0) = 1.0;
  e1(1, 1) = 1.0;
  const Eigen::MatrixXcd eye2 = Eigen::MatrixXcd::Identity(2, 2);
  Eigen::VectorXcd bell = Eigen::VectorXcd::Zero(4);
  bell[1] = 1.0;  // |01>
  bell[2] = 1.0;  // |10>
  const Eigen::MatrixXcd term0 =
      0.5 * tensor_product((p * tensor_product(e0, e0) + (1.0 - p) * 0.5 * tensor_product(eye2, e0)).eval(), e0);
  const Eigen::MatrixXcd term1 =
      0.25 * tensor_product((p * (bell * bell.adjoint()) +
                             (1.0 - p) * 0.5 * tensor_product(eye2, eye2))
                                .eval(),
                            e1);
  if (max_abs(after.rho - (term0 + term1)) > solver_tol)
    throw std::logic_error("activation_demo: post-channel state deviates from its closed form");

  report.qdi_after = qdi(after, {0, 1}).value();
  return report;
}

}  // namespace incoh

#include "incoh/states.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace incoh {

std::string StateCheck::describe() const {
  switch (defect) {
    case StateDefect::none:
      return "valid density matrix";
    case StateDefect::dim_mismatch:
      return "DimMismatch: dims product does not match matrix size";
    case StateDefect::not_hermitian:
      return "NotHermitian: worst deviation " + std::to_string(magnitude);
    case StateDefect::not_psd:
      return "NotPSD: most negative eigenvalue " + std::to_string(magnitude);
    case StateDefect::trace_not_one:
      return "TraceNotOne: trace deviation " + std::to_string(magnitude);
  }
  return "unknown defect";
}

StateCheck check_density(const Eigen::MatrixXcd& m, const Dims& dims, double tol) {
  StateCheck out;
  if (m.rows() != m.cols() || m.rows() != total_dim(dims)) {
    out.defect = StateDefect::dim_mismatch;
    out.magnitude = static_cast<double>(m.rows());
    return out;
  }
  const double herm_dev = max_abs(m - m.adjoint().eval());
  if (herm_dev > tol) {
    out.defect = StateDefect::not_hermitian;
    out.magnitude = herm_dev;
    return out;
  }
  const Eigen::VectorXd w = hermitian_eigenvalues(m, tol);
  if (w.minCoeff() < -tol) {
    out.defect = StateDefect::not_psd;
    out.magnitude = w.minCoeff();
    return out;
  }
  const double trace_dev = std::abs(m.trace() - cxd(1.0, 0.0));
  if (trace_dev > tol) {
    out.defect = StateDefect::trace_not_one;
    out.magnitude = trace_dev;
    return out;
  }
  return out;
}

DensityMatrix make_density(Eigen::MatrixXcd m, Dims dims, double tol) {
  const StateCheck check = check_density(m, dims, tol);
  if (!check.ok()) throw std::invalid_argument("make_density: " + check.describe());
  return DensityMatrix{std::move(m), std::move(dims)};
}

DensityMatrix pure_state(const Eigen::VectorXcd& psi, Dims dims) {
  const double norm = psi.norm();
  if (std::abs(norm - 1.0) > validity_tol)
    throw std::invalid_argument("pure_state: vector is not normalized");
  return make_density(psi * psi.adjoint(), std::move(dims));
}

namespace {

Eigen::VectorXcd basis_ket(Eigen::Index d, Eigen::Index i) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(d);
  v[i] = 1.0;
  return v;
}

}  // namespace

DensityMatrix named_state(const std::string& name) {
  const double s2 = 1.0 / std::sqrt(2.0);
  if (name == "max_ent_pm") {
    // (|+0> + |-1>)/sqrt(2) = (|00> + |10> + |01> - |11>)/2
    Eigen::VectorXcd psi(4);
    psi << 0.5, 0.5, 0.5, -0.5;
    return pure_state(psi, {2, 2});
  }
  if (name == "ghz") {
    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(8);
    psi[0] = s2;
    psi[7] = s2;
    return pure_state(psi, {2, 2, 2});
  }
  if (name == "w") {
    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(8);
    const double s3 = 1.0 / std::sqrt(3.0);
    psi[1] = s3;  // |001>
    psi[2] = s3;  // |010>
    psi[4] = s3;  // |100>
    return pure_state(psi, {2, 2, 2});
  }
  if (name == "activation") {
    // 1/2 |000><000| + 1/4 (|01>+|10>)(<01|+<10|) (x) |1><1| on A A' B
    Eigen::VectorXcd v000 = Eigen::VectorXcd::Zero(8);
    v000[0] = 1.0;
    Eigen::VectorXcd v011 = Eigen::VectorXcd::Zero(8);
    v011[3] = 1.0;
    Eigen::VectorXcd v101 = Eigen::VectorXcd::Zero(8);
    v101[5] = 1.0;
    const Eigen::VectorXcd bell = v011 + v101;
    Eigen::MatrixXcd rho =
        0.5 * v000 * v000.adjoint() + 0.25 * bell * bell.adjoint();
    return make_density(std::move(rho), {2, 2, 2});
  }
  if (name == "prop2_witness") return prop2_witness_state(3);
  throw std::invalid_argument("named_state: unknown name '" + name + "'");
}

const std::vector<std::string>& named_state_catalog() {
  static const std::vector<std::string> names = {"max_ent_pm", "ghz", "w", "activation",
                                                 "prop2_witness"};
  return names;
}

DensityMatrix prop2_witness_state(const std::vector<Eigen::VectorXcd>& phis) {
  const auto d = static_cast<Eigen::Index>(phis.size());
  if (d < 2) throw std::invalid_argument("prop2_witness_state: need at least two vectors");
  for (const auto& phi : phis) {
    if (phi.size() != d)
      throw std::invalid_argument("prop2_witness_state: vectors must have length d");
    if (std::abs(phi.norm() - 1.0) > validity_tol)
      throw std::invalid_argument("prop2_witness_state: vectors must be normalized");
  }
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(d * d * d, d * d * d);
  for (Eigen::Index j = 0; j < d; ++j) {
    const Eigen::MatrixXcd pj = basis_ket(d, j) * basis_ket(d, j).adjoint();
    const Eigen::MatrixXcd phij = phis[static_cast<std::size_t>(j)] *
                                  phis[static_cast<std::size_t>(j)].adjoint();
    rho += tensor_product(pj, phij, pj) / static_cast<double>(d);
  }
  return make_density(std::move(rho), {d, d, d});
}

DensityMatrix prop2_witness_state(Eigen::Index d) {
  std::vector<Eigen::VectorXcd> phis;
  for (Eigen::Index j = 0; j < d; ++j) {
    Eigen::VectorXcd phi = Eigen::VectorXcd::Zero(d);
    phi.head(j + 1).setConstant(1.0 / std::sqrt(static_cast<double>(j + 1)));
    phis.push_back(phi);
  }
  return prop2_witness_state(phis);
}

DensityMatrix build_zero_qdi_state(const std::vector<ZeroQdiComponent>& components,
                                   double tol) {
  if (components.empty())
    throw std::invalid_argument("build_zero_qdi_state: no components");

  const Eigen::Index da = components.front().rho_a.rows();
  const Eigen::Index db = components.front().rho_b.rows();
  double weight_sum = 0.0;
  std::vector<std::vector<bool>> supports;
  for (const auto& c : components) {
    if (c.weight < -tol)
      throw std::invalid_argument("build_zero_qdi_state: negative weight");
    weight_sum += c.weight;
    const StateCheck ca = check_density(c.rho_a, Dims{da}, tol);
    if (!ca.ok())
      throw std::invalid_argument("build_zero_qdi_state: A component: " + ca.describe());
    const StateCheck cb = check_density(c.rho_b, Dims{db}, tol);
    if (!cb.ok())
      throw std::invalid_argument("build_zero_qdi_state: B component: " + cb.describe());

    std::vector<bool> support(static_cast<std::size_t>(da));
    for (Eigen::Index i = 0; i < da; ++i)
      support[static_cast<std::size_t>(i)] = c.rho_a(i, i).real() > validity_tol;
    supports.push_back(std::move(support));
  }
  if (std::abs(weight_sum - 1.0) > tol)
    throw std::invalid_argument("build_zero_qdi_state: weights are not a distribution");

  for (std::size_t j = 0; j < supports.size(); ++j)
    for (std::size_t k = j + 1; k < supports.size(); ++k)
      for (Eigen::Index i = 0; i < da; ++i)
        if (supports[j][static_cast<std::size_t>(i)] &&
            supports[k][static_cast<std::size_t>(i)])
          throw std::invalid_argument(
              "build_zero_qdi_state: overlapping diagonal supports; components are not "
              "distinguishable by the incoherent measurement");

  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(da * db, da * db);
  for (const auto& c : components) rho += c.weight * tensor_product(c.rho_a, c.rho_b);
  return make_density(std::move(rho), {da, db});
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  // splitmix64 over the combined words; decorrelates per-stream generators.
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::mt19937_64 seeded_rng(std::uint64_t seed) { return std::mt19937_64(seed); }

Eigen::MatrixXcd random_ginibre(Eigen::Index rows, Eigen::Index cols, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::MatrixXcd g(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r)
    for (Eigen::Index c = 0; c < cols; ++c) g(r, c) = cxd(normal(rng), normal(rng));
  return g;
}

Eigen::MatrixXcd random_unitary(Eigen::Index d, std::mt19937_64& rng) {
  const Eigen::MatrixXcd g = random_ginibre(d, d, rng);
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index k = 0; k < d; ++k) {
    const cxd rkk = r(k, k);
    const double mag = std::abs(rkk);
    q.col(k) *= (mag > 0.0) ? rkk / mag : cxd(1.0, 0.0);
  }
  return q;
}

Eigen::MatrixXcd random_unitary(Eigen::Index d, std::uint64_t seed) {
  auto rng = seeded_rng(seed);
  return random_unitary(d, rng);
}

DensityMatrix random_density(const Dims& dims, std::mt19937_64& rng) {
  const Eigen::Index d = total_dim(dims);
  const Eigen::MatrixXcd g = random_ginibre(d, d, rng);
  Eigen::MatrixXcd rho = g * g.adjoint();
  rho /= rho.trace().real();
  return DensityMatrix{std::move(rho), dims};
}

DensityMatrix random_density(Eigen::Index d, std::uint64_t seed) {
  auto rng = seeded_rng(seed);
  return random_density(Dims{d}, rng);
}

std::vector<int> random_permutation(Eigen::Index d, std::mt19937_64& rng) {
  std::vector<int> sigma(static_cast<std::size_t>(d));
  for (Eigen::Index i = 0; i < d; ++i) sigma[static_cast<std::size_t>(i)] = static_cast<int>(i);
  std::shuffle(sigma.begin(), sigma.end(), rng);
  return sigma;
}

Eigen::MatrixXcd permutation_matrix(const std::vector<int>& sigma) {
  const auto d = static_cast<Eigen::Index>(sigma.size());
  detail::check_subsystems(sigma, sigma.size(), "permutation_matrix");
  Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(d, d);
  for (Eigen::Index j = 0; j < d; ++j) p(sigma[static_cast<std::size_t>(j)], j) = 1.0;
  return p;
}

Eigen::MatrixXcd random_incoherent_unitary(Eigen::Index d, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  Eigen::MatrixXcd u = permutation_matrix(random_permutation(d, rng));
  for (Eigen::Index c = 0; c < d; ++c) u.col(c) *= std::exp(cxd(0.0, angle(rng)));
  return u;
}

}  // namespace incoh

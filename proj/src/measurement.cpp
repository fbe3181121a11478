#include "incoh/measurement.hpp"

#include "incoh/assignment.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace incoh {

PovmCheck check_povm(const Povm& m, double tol) {
  if (m.elements.empty()) return {false, "no elements"};
  const Eigen::Index d = m.dim();
  Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(d, d);
  for (std::size_t j = 0; j < m.elements.size(); ++j) {
    const auto& e = m.elements[j];
    if (e.rows() != d || e.cols() != d)
      return {false, "element " + std::to_string(j) + " has mismatched dimensions"};
    if (!is_hermitian(e, tol))
      return {false, "element " + std::to_string(j) + " is not Hermitian"};
    if (hermitian_eigenvalues(e, tol).minCoeff() < -tol)
      return {false, "element " + std::to_string(j) + " is not positive semidefinite"};
    sum += e;
  }
  if (!is_identity(sum, tol)) return {false, "elements do not sum to the identity"};
  return {};
}

Povm make_povm(std::vector<Eigen::MatrixXcd> elements, double tol) {
  Povm m{std::move(elements)};
  const PovmCheck check = check_povm(m, tol);
  if (!check.ok) throw std::invalid_argument("make_povm: " + check.reason);
  return m;
}

Eigen::VectorXd measure(const Eigen::MatrixXcd& rho, const Povm& m) {
  if (rho.rows() != m.dim() || rho.cols() != m.dim())
    throw std::invalid_argument("measure: state and POVM dimensions differ");
  Eigen::VectorXd p(m.outcomes());
  for (Eigen::Index j = 0; j < m.outcomes(); ++j) {
    const double pj = (rho * m.elements[static_cast<std::size_t>(j)]).trace().real();
    p[j] = pj < 0.0 ? 0.0 : pj;
  }
  return p;
}

IncoherenceReport is_incoherent(const Povm& m, double tol) {
  IncoherenceReport out;
  for (const auto& e : m.elements)
    out.worst_offdiag = std::max(out.worst_offdiag, max_offdiag_abs(e));
  out.incoherent = out.worst_offdiag <= tol;
  return out;
}

ParentMeasurement parent_measurement(const Povm& m, double tol) {
  const IncoherenceReport report = is_incoherent(m, tol);
  if (!report.incoherent)
    throw std::invalid_argument(
        "parent_measurement: NotIncoherent (worst off-diagonal " +
        std::to_string(report.worst_offdiag) + "); no parent measurement exists");

  const Eigen::Index d = m.dim();
  ParentMeasurement out;
  out.parent = incoherent_projectors(d);
  out.kernel_for_child.resize(m.outcomes(), d);
  for (Eigen::Index j = 0; j < m.outcomes(); ++j)
    for (Eigen::Index k = 0; k < d; ++k)
      out.kernel_for_child(j, k) = m.elements[static_cast<std::size_t>(j)](k, k).real();
  out.kernel_for_projectors = Eigen::MatrixXd::Identity(d, d);

  // Post-processing the parent through each kernel must land back on the
  // children; the reconstruction is linear in the kernel so any failure here
  // is an internal error.
  for (Eigen::Index j = 0; j < m.outcomes(); ++j) {
    Eigen::MatrixXcd rebuilt = Eigen::MatrixXcd::Zero(d, d);
    for (Eigen::Index k = 0; k < d; ++k)
      rebuilt += out.kernel_for_child(j, k) * out.parent.elements[static_cast<std::size_t>(k)];
    const Eigen::MatrixXcd diag_child =
        m.elements[static_cast<std::size_t>(j)].diagonal().asDiagonal();
    if (max_abs(rebuilt - diag_child) > solver_tol)
      throw std::logic_error("parent_measurement: reconstruction failed");
  }
  return out;
}

OrthonormalBasis OrthonormalBasis::standard(Eigen::Index d) {
  return {Eigen::MatrixXcd::Identity(d, d)};
}

OrthonormalBasis OrthonormalBasis::fourier(Eigen::Index d) {
  Eigen::MatrixXcd u(d, d);
  const double norm = 1.0 / std::sqrt(static_cast<double>(d));
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index a = 0; a < d; ++a)
      u(i, a) = norm * std::exp(cxd(0.0, 2.0 * std::numbers::pi * static_cast<double>(i * a) /
                                         static_cast<double>(d)));
  return {u};
}

OrthonormalBasis OrthonormalBasis::from_columns(Eigen::MatrixXcd columns, double tol) {
  if (!is_unitary(columns, tol))
    throw std::invalid_argument("OrthonormalBasis: columns are not orthonormal");
  return {std::move(columns)};
}

OrthonormalBasis OrthonormalBasis::random(Eigen::Index d, std::mt19937_64& rng) {
  return {random_unitary(d, rng)};
}

namespace {

// Scores s(a,j) = <phi_a|M_j|phi_a>, zero-padded to at least d columns so the
// assignment stays injective when the POVM has fewer outcomes than d.
Eigen::MatrixXd witness_scores(const Povm& m, const OrthonormalBasis& basis) {
  const Eigen::Index d = basis.dim();
  const Eigen::Index n = m.outcomes();
  Eigen::MatrixXd s = Eigen::MatrixXd::Zero(d, std::max(d, n));
  for (Eigen::Index a = 0; a < d; ++a) {
    const Eigen::VectorXcd phi = basis.u.col(a);
    for (Eigen::Index j = 0; j < n; ++j)
      s(a, j) = (phi.adjoint() * m.elements[static_cast<std::size_t>(j)] * phi)(0).real();
  }
  return s;
}

// rhs = sum_i max_a |<phi_a|i>|^2; row i of the basis matrix holds the
// overlaps of the incoherent ket |i> with every basis vector.
double witness_rhs(const OrthonormalBasis& basis) {
  double rhs = 0.0;
  for (Eigen::Index i = 0; i < basis.dim(); ++i)
    rhs += basis.u.row(i).cwiseAbs2().maxCoeff();
  return rhs;
}

}  // namespace

WitnessReport witness_value(const Povm& m, const OrthonormalBasis& basis) {
  if (m.dim() != basis.dim())
    throw std::invalid_argument("witness_value: POVM and basis dimensions differ");
  const Eigen::Index n = m.outcomes();
  const Assignment best = max_assignment(witness_scores(m, basis));

  WitnessReport report;
  report.basis = basis;
  report.lhs = best.value;
  report.rhs = witness_rhs(basis);
  report.violation = report.lhs - report.rhs;
  report.assignment = best.column_of_row;
  for (int& a : report.assignment)
    if (a >= n) a = -1;  // padded outcome
  return report;
}

WitnessReport witness_value(const Povm& m, const OrthonormalBasis& basis,
                            const std::vector<int>& assignment) {
  if (m.dim() != basis.dim())
    throw std::invalid_argument("witness_value: POVM and basis dimensions differ");
  if (static_cast<Eigen::Index>(assignment.size()) != basis.dim())
    throw std::invalid_argument("witness_value: assignment must cover every basis vector");
  std::vector<bool> used(static_cast<std::size_t>(m.outcomes()), false);
  for (int a : assignment) {
    if (a == -1) continue;  // zero padding
    if (a < 0 || a >= m.outcomes())
      throw std::invalid_argument("witness_value: assignment outcome out of range");
    if (used[static_cast<std::size_t>(a)])
      throw std::invalid_argument("witness_value: assignment is not injective");
    used[static_cast<std::size_t>(a)] = true;
  }

  WitnessReport report;
  report.basis = basis;
  report.assignment = assignment;
  const Eigen::MatrixXd s = witness_scores(m, basis);
  for (Eigen::Index a = 0; a < basis.dim(); ++a) {
    const int j = assignment[static_cast<std::size_t>(a)];
    if (j >= 0) report.lhs += s(a, j);
  }
  report.rhs = witness_rhs(basis);
  report.violation = report.lhs - report.rhs;
  return report;
}

WitnessReport optimize_witness(const Povm& m, const WitnessSearchOptions& options) {
  const Eigen::Index d = m.dim();
  WitnessReport best;
  bool have_best = false;

  for (int restart = 0; restart < std::max(1, options.restarts); ++restart) {
    auto rng = seeded_rng(mix_seed(options.seed, static_cast<std::uint64_t>(restart)));
    Eigen::MatrixXcd u =
        restart == 0 ? OrthonormalBasis::fourier(d).u : random_unitary(d, rng);
    WitnessReport current = witness_value(m, OrthonormalBasis{u});

    const int steps = std::max(1, options.steps);
    for (int step = 0; step < steps; ++step) {
      const double frac = steps == 1 ? 1.0 : static_cast<double>(step) / (steps - 1);
      const double eps =
          options.step_init * std::pow(options.step_final / options.step_init, frac);
      Eigen::MatrixXcd g = random_ginibre(d, d, rng);
      Eigen::MatrixXcd h = 0.5 * (g + g.adjoint().eval());
      h /= std::max(h.norm(), 1e-300);
      const Eigen::MatrixXcd candidate_u = u * exp_ih(h, eps);
      const WitnessReport candidate = witness_value(m, OrthonormalBasis{candidate_u});
      if (candidate.violation > current.violation) {
        current = candidate;
        u = candidate_u;
      }
    }

    if (!have_best || current.violation > best.violation) {
      best = current;
      have_best = true;
    }
  }
  return best;
}

Povm noisy_projective(const OrthonormalBasis& basis, double lambda) {
  if (lambda < 0.0 || lambda > 1.0)
    throw std::invalid_argument("noisy_projective: lambda must lie in [0,1]");
  const Eigen::Index d = basis.dim();
  std::vector<Eigen::MatrixXcd> elements;
  for (Eigen::Index a = 0; a < d; ++a) {
    const Eigen::VectorXcd phi = basis.u.col(a);
    elements.push_back(lambda * (phi * phi.adjoint()) +
                       ((1.0 - lambda) / static_cast<double>(d)) *
                           Eigen::MatrixXcd::Identity(d, d));
  }
  return make_povm(std::move(elements));
}

std::vector<Conditional> conditional_states(const DensityMatrix& rho,
                                            const std::vector<int>& group_a, const Povm& m) {
  detail::check_subsystems(group_a, rho.dims.size(), "conditional_states");
  if (group_a.empty() || group_a.size() == rho.dims.size())
    throw std::invalid_argument("conditional_states: cut must leave both groups nonempty");

  // Bring the measured group to the front so the POVM lifts as M (x) 1.
  std::vector<int> order = group_a;
  const std::vector<int> group_b = complement_group(rho.dims.size(), group_a);
  order.insert(order.end(), group_b.begin(), group_b.end());
  const Eigen::MatrixXcd perm = permute_subsystems(rho.rho, rho.dims, order);

  Dims a_dims, b_dims;
  for (int s : group_a) a_dims.push_back(rho.dims[static_cast<std::size_t>(s)]);
  for (int s : group_b) b_dims.push_back(rho.dims[static_cast<std::size_t>(s)]);
  const Eigen::Index da = total_dim(a_dims);
  const Eigen::Index db = total_dim(b_dims);
  if (m.dim() != da)
    throw std::invalid_argument("conditional_states: POVM does not match the measured group");

  std::vector<Conditional> out;
  const Eigen::MatrixXcd eye_b = Eigen::MatrixXcd::Identity(db, db);
  for (const auto& element : m.elements) {
    const Eigen::MatrixXcd weighted = tensor_product(element, eye_b) * perm;
    Eigen::MatrixXcd reduced = partial_trace(weighted, Dims{da, db}, std::vector<int>{1});
    const double p = reduced.trace().real();
    Conditional c;
    c.p = p < 0.0 ? 0.0 : p;
    if (c.p < 1e-12) {
      c.null_state = true;
      c.state = DensityMatrix{Eigen::MatrixXcd::Zero(db, db), b_dims};
    } else {
      // tr_A((M (x) 1) rho) is Hermitian up to roundoff for Hermitian M.
      reduced = 0.5 * (reduced + reduced.adjoint().eval());
      c.state = DensityMatrix{reduced / c.p, b_dims};
    }
    out.push_back(std::move(c));
  }
  return out;
}

Povm incoherent_projectors(Eigen::Index d) {
  std::vector<Eigen::MatrixXcd> elements;
  for (Eigen::Index k = 0; k < d; ++k) {
    Eigen::MatrixXcd e = Eigen::MatrixXcd::Zero(d, d);
    e(k, k) = 1.0;
    elements.push_back(std::move(e));
  }
  return Povm{std::move(elements)};
}

Povm random_incoherent_povm(Eigen::Index d, Eigen::Index n_outcomes, std::mt19937_64& rng) {
  if (n_outcomes < 1)
    throw std::invalid_argument("random_incoherent_povm: need at least one outcome");
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Eigen::MatrixXd kernel(n_outcomes, d);
  for (Eigen::Index k = 0; k < d; ++k) {
    double column_sum = 0.0;
    for (Eigen::Index j = 0; j < n_outcomes; ++j) {
      kernel(j, k) = unit(rng) + 1e-12;
      column_sum += kernel(j, k);
    }
    kernel.col(k) /= column_sum;
  }
  std::vector<Eigen::MatrixXcd> elements;
  for (Eigen::Index j = 0; j < n_outcomes; ++j) {
    Eigen::MatrixXcd e = Eigen::MatrixXcd::Zero(d, d);
    for (Eigen::Index k = 0; k < d; ++k) e(k, k) = kernel(j, k);
    elements.push_back(std::move(e));
  }
  return Povm{std::move(elements)};
}

}  // namespace incoh

#pragma once

// Dense complex linear algebra on Eigen types: Kronecker products, partial
// trace, subsystem permutation, the completely dephasing map, and Hermitian
// eigendecomposition with descending eigenvalues.
//
// Conventions: subsystem 0 is the leftmost tensor factor; composite indices
// are row-major (leftmost factor most significant); all tolerances are
// absolute on entry magnitudes unless stated otherwise.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace incoh {

using cxd = std::complex<double>;
using Dims = std::vector<Eigen::Index>;

// Validity predicates use validity_tol; reconstruction checks use solver_tol.
inline constexpr double validity_tol = 1e-9;
inline constexpr double solver_tol = 1e-12;

inline Eigen::Index total_dim(const Dims& dims) {
  Eigen::Index n = 1;
  for (Eigen::Index d : dims) {
    if (d < 2) throw std::invalid_argument("subsystem dimensions must be >= 2");
    n *= d;
  }
  return n;
}

// Digits of a composite index, leftmost subsystem first.
inline void unravel_index(Eigen::Index x, const Dims& dims, std::vector<Eigen::Index>& out) {
  out.resize(dims.size());
  for (std::size_t k = dims.size(); k-- > 0;) {
    out[k] = x % dims[k];
    x /= dims[k];
  }
}

inline Eigen::Index ravel_index(const std::vector<Eigen::Index>& digits, const Dims& dims) {
  Eigen::Index x = 0;
  for (std::size_t k = 0; k < dims.size(); ++k) x = x * dims[k] + digits[k];
  return x;
}

namespace detail {

inline void check_square(Eigen::Index rows, Eigen::Index cols, const char* who) {
  if (rows != cols) throw std::invalid_argument(std::string(who) + ": matrix must be square");
}

inline void check_dims_match(Eigen::Index n, const Dims& dims, const char* who) {
  if (n != total_dim(dims))
    throw std::invalid_argument(std::string(who) + ": dims product does not match matrix size");
}

inline void check_subsystems(const std::vector<int>& subs, std::size_t n, const char* who) {
  std::vector<bool> seen(n, false);
  for (int s : subs) {
    if (s < 0 || static_cast<std::size_t>(s) >= n)
      throw std::invalid_argument(std::string(who) + ": subsystem index out of range");
    if (seen[static_cast<std::size_t>(s)])
      throw std::invalid_argument(std::string(who) + ": repeated subsystem index");
    seen[static_cast<std::size_t>(s)] = true;
  }
}

}  // namespace detail

// Kronecker product; dimensions multiply, row-major block layout.
template <typename DA, typename DB>
auto tensor_product(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
  using Scalar = decltype(typename DA::Scalar{} * typename DB::Scalar{});
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> out(a.rows() * b.rows(),
                                                            a.cols() * b.cols());
  for (Eigen::Index r = 0; r < a.rows(); ++r)
    for (Eigen::Index c = 0; c < a.cols(); ++c)
      out.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) = a(r, c) * b.derived();
  return out;
}

template <typename DA, typename DB, typename... Rest>
auto tensor_product(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b,
                    const Rest&... rest) {
  return tensor_product(tensor_product(a, b), rest...);
}

// Reduced matrix on the kept subsystems (original left-to-right order).
template <typename Derived>
auto partial_trace(const Eigen::MatrixBase<Derived>& m, const Dims& dims,
                   std::vector<int> keep) {
  detail::check_square(m.rows(), m.cols(), "partial_trace");
  detail::check_dims_match(m.rows(), dims, "partial_trace");
  detail::check_subsystems(keep, dims.size(), "partial_trace");
  if (keep.empty()) throw std::invalid_argument("partial_trace: keep set must be nonempty");
  std::sort(keep.begin(), keep.end());

  std::vector<int> traced;
  for (std::size_t k = 0; k < dims.size(); ++k)
    if (std::find(keep.begin(), keep.end(), static_cast<int>(k)) == keep.end())
      traced.push_back(static_cast<int>(k));

  // Strides of each subsystem inside the composite index.
  std::vector<Eigen::Index> stride(dims.size(), 1);
  for (std::size_t k = dims.size() - 1; k-- > 0;) stride[k] = stride[k + 1] * dims[k + 1];

  auto enumerate_offsets = [&](const std::vector<int>& subs) {
    Dims sub_dims;
    for (int s : subs) sub_dims.push_back(dims[static_cast<std::size_t>(s)]);
    Eigen::Index count = sub_dims.empty() ? 1 : total_dim(sub_dims);
    std::vector<Eigen::Index> offsets(static_cast<std::size_t>(count), 0);
    std::vector<Eigen::Index> digits;
    for (Eigen::Index i = 0; i < count; ++i) {
      if (!sub_dims.empty()) unravel_index(i, sub_dims, digits);
      Eigen::Index off = 0;
      for (std::size_t k = 0; k < subs.size(); ++k)
        off += digits[k] * stride[static_cast<std::size_t>(subs[k])];
      offsets[static_cast<std::size_t>(i)] = off;
    }
    return offsets;
  };

  const auto kept_off = enumerate_offsets(keep);
  const auto traced_off = enumerate_offsets(traced);
  const auto dk = static_cast<Eigen::Index>(kept_off.size());

  Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> out =
      Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic>::Zero(dk, dk);
  for (Eigen::Index r = 0; r < dk; ++r)
    for (Eigen::Index c = 0; c < dk; ++c)
      for (Eigen::Index t : traced_off)
        out(r, c) += m(kept_off[static_cast<std::size_t>(r)] + t,
                       kept_off[static_cast<std::size_t>(c)] + t);
  return out;
}

// Completely dephasing map on the targeted subsystems: zeroes every entry
// whose targeted row digit differs from its column digit. Idempotent and
// trace-preserving; full-target dephase leaves a diagonal matrix.
template <typename Derived>
auto dephase(const Eigen::MatrixBase<Derived>& m, const Dims& dims,
             const std::vector<int>& targets) {
  detail::check_square(m.rows(), m.cols(), "dephase");
  detail::check_dims_match(m.rows(), dims, "dephase");
  detail::check_subsystems(targets, dims.size(), "dephase");

  Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> out = m.derived();
  std::vector<Eigen::Index> rd, cd;
  for (Eigen::Index r = 0; r < out.rows(); ++r) {
    unravel_index(r, dims, rd);
    for (Eigen::Index c = 0; c < out.cols(); ++c) {
      unravel_index(c, dims, cd);
      for (int t : targets) {
        if (rd[static_cast<std::size_t>(t)] != cd[static_cast<std::size_t>(t)]) {
          out(r, c) = typename Derived::Scalar{0};
          break;
        }
      }
    }
  }
  return out;
}

// Single-system shorthand: dephase everything.
template <typename Derived>
auto dephase(const Eigen::MatrixBase<Derived>& m) {
  return dephase(m, Dims{m.rows()}, {0});
}

// Reorders tensor factors: order lists original subsystem indices in their
// new left-to-right positions. Returns the matrix on the reordered dims.
template <typename Derived>
auto permute_subsystems(const Eigen::MatrixBase<Derived>& m, const Dims& dims,
                        const std::vector<int>& order) {
  detail::check_square(m.rows(), m.cols(), "permute_subsystems");
  detail::check_dims_match(m.rows(), dims, "permute_subsystems");
  detail::check_subsystems(order, dims.size(), "permute_subsystems");
  if (order.size() != dims.size())
    throw std::invalid_argument("permute_subsystems: order must list every subsystem");

  Dims new_dims(dims.size());
  for (std::size_t k = 0; k < order.size(); ++k)
    new_dims[k] = dims[static_cast<std::size_t>(order[k])];

  const Eigen::Index n = m.rows();
  std::vector<Eigen::Index> map(static_cast<std::size_t>(n));
  std::vector<Eigen::Index> digits, new_digits(dims.size());
  for (Eigen::Index x = 0; x < n; ++x) {
    unravel_index(x, dims, digits);
    for (std::size_t k = 0; k < order.size(); ++k)
      new_digits[k] = digits[static_cast<std::size_t>(order[k])];
    map[static_cast<std::size_t>(x)] = ravel_index(new_digits, new_dims);
  }

  Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> out(n, n);
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index c = 0; c < n; ++c)
      out(map[static_cast<std::size_t>(r)], map[static_cast<std::size_t>(c)]) = m(r, c);
  return out;
}

template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

template <typename Derived>
double max_offdiag_abs(const Eigen::MatrixBase<Derived>& m) {
  double worst = 0.0;
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      if (r != c) worst = std::max(worst, std::abs(m(r, c)));
  return worst;
}

template <typename DA, typename DB>
bool approx_equal(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b,
                  double tol = validity_tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return max_abs(a.derived() - b.derived()) <= tol;
}

template <typename Derived>
bool is_hermitian(const Eigen::MatrixBase<Derived>& m, double tol = validity_tol) {
  if (m.rows() != m.cols()) return false;
  return max_abs(m.derived() - m.derived().adjoint().eval()) <= tol;
}

template <typename Derived>
bool is_identity(const Eigen::MatrixBase<Derived>& m, double tol = validity_tol) {
  if (m.rows() != m.cols()) return false;
  using Mat = Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  return max_abs(m.derived() - Mat::Identity(m.rows(), m.cols())) <= tol;
}

template <typename Derived>
bool is_unitary(const Eigen::MatrixBase<Derived>& m, double tol = validity_tol) {
  if (m.rows() != m.cols()) return false;
  return is_identity((m.derived().adjoint() * m.derived()).eval(), tol);
}

template <typename Derived>
bool is_diagonal(const Eigen::MatrixBase<Derived>& m, double tol = validity_tol) {
  return max_offdiag_abs(m) <= tol;
}

// Eigendecomposition of a Hermitian matrix, eigenvalues descending, columns
// of vectors forming the matching orthonormal eigenbasis.
struct Eig {
  Eigen::VectorXd values;
  Eigen::MatrixXcd vectors;
};

inline Eig hermitian_eig(const Eigen::MatrixXcd& h, double tol = validity_tol) {
  if (!is_hermitian(h, tol))
    throw std::invalid_argument("hermitian_eig: input is not Hermitian within tolerance");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(0.5 * (h + h.adjoint().eval()));
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("hermitian_eig: eigensolver failed to converge");
  Eig out;
  out.values = solver.eigenvalues().reverse();
  out.vectors = solver.eigenvectors().rowwise().reverse();
  return out;
}

inline Eigen::VectorXd hermitian_eigenvalues(const Eigen::MatrixXcd& h,
                                             double tol = validity_tol) {
  if (!is_hermitian(h, tol))
    throw std::invalid_argument("hermitian_eigenvalues: input is not Hermitian within tolerance");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(0.5 * (h + h.adjoint().eval()));
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("hermitian_eigenvalues: eigensolver failed to converge");
  return solver.eigenvalues().reverse();
}

template <typename Derived>
bool is_psd(const Eigen::MatrixBase<Derived>& m, double tol = validity_tol) {
  if (!is_hermitian(m, tol)) return false;
  Eigen::MatrixXcd h = m.template cast<cxd>();
  return hermitian_eigenvalues(h, tol).minCoeff() >= -tol;
}

// Unitary exp(i t H) for Hermitian H, via eigendecomposition.
inline Eigen::MatrixXcd exp_ih(const Eigen::MatrixXcd& h, double t) {
  const Eig e = hermitian_eig(h);
  const Eigen::VectorXcd phases =
      (cxd(0, 1) * t * e.values.cast<cxd>()).array().exp().matrix();
  return e.vectors * phases.asDiagonal() * e.vectors.adjoint();
}

inline std::vector<int> complement_group(std::size_t n_subsystems, const std::vector<int>& group) {
  detail::check_subsystems(group, n_subsystems, "complement_group");
  std::vector<bool> in(n_subsystems, false);
  for (int g : group) in[static_cast<std::size_t>(g)] = true;
  std::vector<int> out;
  for (std::size_t k = 0; k < n_subsystems; ++k)
    if (!in[k]) out.push_back(static_cast<int>(k));
  return out;
}

}  // namespace incoh

#include "incoh/discord.hpp"

#include "incoh/info.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace incoh {

namespace {

Eigen::Index group_dim(const Dims& dims, const std::vector<int>& group) {
  Eigen::Index d = 1;
  for (int s : group) d *= dims[static_cast<std::size_t>(s)];
  return d;
}

// Reduces rho to the union of the listed groups and remaps the group indices
// into the reduced state's subsystem numbering.
struct Reduction {
  DensityMatrix state;
  std::vector<std::vector<int>> groups;
};

Reduction reduce_to(const DensityMatrix& rho, const std::vector<std::vector<int>>& groups) {
  std::vector<int> keep;
  for (const auto& g : groups) keep.insert(keep.end(), g.begin(), g.end());
  detail::check_subsystems(keep, rho.dims.size(), "reduce_to");
  std::sort(keep.begin(), keep.end());

  Reduction out;
  Dims kept_dims;
  for (int s : keep) kept_dims.push_back(rho.dims[static_cast<std::size_t>(s)]);
  out.state = DensityMatrix{partial_trace(rho.rho, rho.dims, keep), kept_dims};
  for (const auto& g : groups) {
    std::vector<int> remapped;
    for (int s : g) {
      const auto it = std::lower_bound(keep.begin(), keep.end(), s);
      remapped.push_back(static_cast<int>(it - keep.begin()));
    }
    out.groups.push_back(std::move(remapped));
  }
  return out;
}

}  // namespace

double average_conditional_entropy(const DensityMatrix& rho, const std::vector<int>& group_a,
                                   const Povm& m) {
  double avg = 0.0;
  for (const Conditional& c : conditional_states(rho, group_a, m)) {
    if (c.null_state) continue;
    avg += c.p * von_neumann_entropy(c.state.rho);
  }
  return avg;
}

double incoherent_correlation(const DensityMatrix& rho, const std::vector<int>& group_a) {
  const std::vector<int> group_b = complement_group(rho.dims.size(), group_a);
  const double s_b = von_neumann_entropy(partial_trace(rho.rho, rho.dims, group_b));
  const Povm projectors = incoherent_projectors(group_dim(rho.dims, group_a));
  return s_b - average_conditional_entropy(rho, group_a, projectors);
}

QdiReport qdi(const DensityMatrix& rho, const std::vector<int>& group_a) {
  detail::check_bipartition(rho.dims, group_a, "qdi");
  const std::vector<int> group_b = complement_group(rho.dims.size(), group_a);

  const Eigen::MatrixXcd rho_a = partial_trace(rho.rho, rho.dims, group_a);
  const Eigen::MatrixXcd rho_b = partial_trace(rho.rho, rho.dims, group_b);
  const Eigen::MatrixXcd dephased = dephase(rho.rho, rho.dims, group_a);

  const double s_a = von_neumann_entropy(rho_a);
  const double s_b = von_neumann_entropy(rho_b);
  const double s_ab = von_neumann_entropy(rho.rho);

  QdiReport report;

  // Conditional-decomposition form.
  const Povm projectors = incoherent_projectors(group_dim(rho.dims, group_a));
  const double avg_cond = average_conditional_entropy(rho, group_a, projectors);
  report.qdi_projective = avg_cond + s_a - s_ab;
  report.j_incoherent = s_b - avg_cond;

  // Dephased-mutual-information form.
  report.qdi_mutinf = mutual_information(rho.rho, rho.dims, group_a) -
                      mutual_information(dephased, rho.dims, group_a);

  // Coherence-difference form; every subsystem is dephased in C_r.
  std::vector<int> all(rho.dims.size());
  for (std::size_t k = 0; k < rho.dims.size(); ++k) all[k] = static_cast<int>(k);
  std::vector<int> all_a(group_a.size());
  for (std::size_t k = 0; k < group_a.size(); ++k) all_a[k] = static_cast<int>(k);
  Dims a_dims;
  for (int s : group_a) a_dims.push_back(rho.dims[static_cast<std::size_t>(s)]);
  report.qdi_coherence = rel_entropy_coherence(rho.rho, rho.dims, all) -
                         rel_entropy_coherence(dephased, rho.dims, all) -
                         rel_entropy_coherence(rho_a, a_dims, all_a);

  report.max_discrepancy =
      std::max({std::abs(report.qdi_projective - report.qdi_mutinf),
                std::abs(report.qdi_projective - report.qdi_coherence),
                std::abs(report.qdi_mutinf - report.qdi_coherence)});
  if (report.max_discrepancy > qdi_consistency_tol)
    throw std::logic_error(
        "qdi: the three formulas disagree beyond 1e-8; internal numerics bug");
  return report;
}

MonogamyReport monogamy_gap(const DensityMatrix& rho, const std::vector<int>& group_a,
                            const std::vector<int>& group_b,
                            const std::vector<int>& group_b2) {
  std::vector<int> all = group_a;
  all.insert(all.end(), group_b.begin(), group_b.end());
  all.insert(all.end(), group_b2.begin(), group_b2.end());
  detail::check_subsystems(all, rho.dims.size(), "monogamy_gap");
  if (group_a.empty() || group_b.empty() || group_b2.empty() || all.size() != rho.dims.size())
    throw std::invalid_argument(
        "monogamy_gap: A, B, B' must be nonempty and partition the subsystems");

  MonogamyReport report;
  {
    const Reduction r = reduce_to(rho, {group_a, group_b});
    report.d_b_a = qdi(r.state, r.groups[0]).value();
  }
  {
    const Reduction r = reduce_to(rho, {group_a, group_b2});
    report.d_b2_a = qdi(r.state, r.groups[0]).value();
  }
  report.d_bb2_a = qdi(rho, group_a).value();
  report.gap = report.d_b_a + report.d_b2_a - report.d_bb2_a;

  const Eigen::MatrixXcd dephased = dephase(rho.rho, rho.dims, group_a);
  report.gap_cmi =
      conditional_mutual_information(dephased, rho.dims, group_b, group_b2, group_a) -
      conditional_mutual_information(rho.rho, rho.dims, group_b, group_b2, group_a);

  if (std::abs(report.gap - report.gap_cmi) > qdi_consistency_tol)
    throw std::logic_error(
        "monogamy_gap: direct and conditional-mutual-information routes disagree");
  return report;
}

double qdi_povm_oracle(const DensityMatrix& rho, const std::vector<int>& group_a, int samples,
                       std::uint64_t seed) {
  detail::check_bipartition(rho.dims, group_a, "qdi_povm_oracle");
  if (samples < 1) throw std::invalid_argument("qdi_povm_oracle: need at least one sample");
  const Eigen::Index da = group_dim(rho.dims, group_a);

  double best = std::numeric_limits<double>::infinity();
  for (int s = 0; s < samples; ++s) {
    auto rng = seeded_rng(mix_seed(seed, static_cast<std::uint64_t>(s)));
    std::uniform_int_distribution<Eigen::Index> outcome_count(2, 2 * da);
    const Povm m = random_incoherent_povm(da, outcome_count(rng), rng);
    best = std::min(best, average_conditional_entropy(rho, group_a, m));
  }
  return best;
}

}  // namespace incoh

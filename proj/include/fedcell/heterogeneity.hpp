#pragma once

#include <cstdint>
#include <vector>

#include "fedcell/rng.hpp"

namespace fedcell {

// Normalized category-proportion vector; entries sum to 1 within 1e-12.
struct LabelDistribution {
  std::vector<double> proportions;
  std::size_t size() const { return proportions.size(); }
  double operator[](std::size_t z) const { return proportions[z]; }
};

// Integer label bookkeeping of a data partition: counts[k][z] = number of
// category-z samples held by client k. Conserves the global counts exactly.
struct PartitionSpec {
  std::vector<std::vector<std::int64_t>> counts;
  int num_categories = 0;
  std::int64_t client_size(std::size_t k) const {
    std::int64_t s = 0;
    for (auto c : counts[k]) s += c;
    return s;
  }
};

// Local/global distribution estimates; clients with empty datasets are
// excluded and listed in `excluded`.
struct DistributionEstimate {
  std::vector<LabelDistribution> local;  // p_hat_k (empty for excluded)
  LabelDistribution global;              // p_hat_g
  std::vector<int> excluded;
  std::vector<double> divergence;  // D_kl(p_g || p_k); +inf when undefined
};

// Hybrid split: floor(iid_fraction*K) clients receive near-equal per-category
// counts; the rest receive counts proportional to per-category
// Dirichlet(alpha) weights. Every sample is assigned to exactly one client.
PartitionSpec partition_hybrid(const std::vector<std::int64_t>& category_counts,
                               int num_clients, double iid_fraction,
                               double dirichlet_alpha, rng::Stream& rng);

// p_hat_{z,k} = d_{z,k}/d_k and p_hat_g = sum_k (d_k/d) p_hat_k. Populates
// divergences against the global estimate (with optional additive smoothing
// of local counts; smoothing = 0 disables it).
DistributionEstimate estimate_distributions(const PartitionSpec& spec,
                                            double smoothing = 0.0);

// sum_z p_z ln(p_z/q_z) in nats, with 0*ln(0/q) = 0. Throws SupportError when
// q_z = 0 but p_z > 0.
double kl_divergence(const LabelDistribution& p, const LabelDistribution& q);

// Eligible set {k : D_kl(p_g || p_k) <= e1_max}; undefined divergences are
// treated as +inf (never eligible). Throws InfeasibleError when empty.
std::vector<int> kl_filter(const DistributionEstimate& est, double e1_max);

}  // namespace fedcell

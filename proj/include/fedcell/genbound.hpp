#pragma once

#include <vector>

#include "fedcell/heterogeneity.hpp"

namespace fedcell {

// Inputs of the per-round generalization-error bound.
struct BoundParams {
  int round_t = 0;
  std::vector<double> learning_rates;    // eta_0 .. eta_{t-1}
  std::vector<double> optimality_gaps;   // Delta_0 .. Delta_{t-1}
  double smoothness = 0.0;               // lambda
  double lipschitz = 0.0;                // L
  double grad_variance = 0.0;            // sigma^2
  int epochs = 1;                        // E
  double loss_bound = 0.0;               // c
  double confidence = 0.5;               // delta in (0,1)
  double stability = 0.0;                // beta
  std::vector<double> client_sizes;      // d_k
  std::vector<double> kl_terms;          // D_kl(p_g || p_k)
};

// Additive decomposition of the bound; total is the exact sum of the five
// terms.
struct BoundBreakdown {
  double drift_term = 0.0;      // accumulated BGD loss-estimation drift
  double sample_term = 0.0;     // sqrt(c^2 ln(4/delta) / 2) * sigma_d^2
  double kl_term = 0.0;         // sum_k D_kl
  double size_term = 0.0;       // c^2 / (8 d)
  double stability_term = 0.0;  // (2 beta + c/d) sqrt(d ln(2/delta))
  double sigma_d2 = 0.0;        // sum_k sqrt(d_k) / d
  double total = 0.0;
};

BoundBreakdown evaluate_bound(const BoundParams& params);

// Variational-inequality gap
//   D_kl(p_g||p_k) - (E_{p_g}[q] - ln E_{p_k}[exp(q)]),
// nonnegative for any bounded q by the Donsker-Varadhan formula.
double dv_gap(const LabelDistribution& p_g, const LabelDistribution& p_k,
              const std::vector<double>& q);

}  // namespace fedcell

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fedcell {

// Closed sampling interval [lo, hi].
struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

// Cell-level parameters. Power quantities are configured in dBm / dBm/Hz and
// converted to SI once at ingestion; everything downstream is W, Hz, s, J.
struct SystemConfig {
  int num_clients = 80;
  double total_bandwidth_hz = 2.0e6;
  double noise_dbm_per_hz = -174.0;
  double noise_w_per_hz = 0.0;  // derived
  double carrier_freq_hz = 2.4e9;
  double path_loss_exponent = 2.7;
  double capacitance = 1e-27;
  double alpha1 = 1.0;
  double alpha2 = 1.0;
  double kl_threshold_nats = 0.2;    // e1_max
  double data_budget_samples = 2000; // e2_max
  int local_epochs = 10;
  double learning_rate = 0.005;
  std::vector<double> learning_rate_schedule;  // optional per-round override
  int batch_size = 32;
  std::uint64_t rng_seed = 1;
  int threads = 0;  // 0 => serial reference kernels
  // Accepted per the parameter table but referenced by no formula; stored,
  // never used.
  Interval max_acceptable_energy_j{2.0, 9.0};
  double system_mu = 1.7e-6;

  double learning_rate_at(int round) const {
    if (!learning_rate_schedule.empty()) {
      const auto idx = static_cast<std::size_t>(round);
      return idx < learning_rate_schedule.size() ? learning_rate_schedule[idx]
                                                 : learning_rate_schedule.back();
    }
    return learning_rate;
  }
};

// Per-field sampling intervals for synthetic client populations.
struct ClientRanges {
  Interval distance_m{200.0, 250.0};
  Interval transmit_power_dbm{20.0, 33.0};
  Interval max_frequency_hz{2.0e6, 5.0e6};
  Interval cycles_per_bit{1.0, 10.0};
  Interval dataset_size{400, 1200};
  Interval model_bits{1.0e6, 1.0e6};
  int categories = 10;
  double label_dirichlet_alpha = 0.5;
};

// Joint solver knobs: penalty DC outer loop, barrier inner solver, rounding,
// and dual subgradient frequency step.
struct SolverParams {
  double rho = 0.0;  // 0 => auto: 10x initial objective magnitude
  double rho_growth = 2.0;
  double b_min = 1e-4;
  int dc_max_iters = 50;
  double dc_rel_tol = 1e-6;
  double kkt_tol = 1e-8;
  double rounding_threshold = 0.5;
  int sg_max_iters = 500;
  double sg_step_scale = 0.01;
  int oracle_max_clients = 8;
};

// Generalization-bound inputs that are not per-experiment state (the loss
// model constants); schedules and KL terms are filled in by the caller.
struct BoundModel {
  bool enabled = false;
  double smoothness = 1.0;     // lambda
  double lipschitz = 1.0;      // L
  double grad_variance = 1.0;  // sigma^2
  double loss_bound = 2.5;     // c
  double confidence = 0.1;     // delta
  double stability = 0.01;     // beta
};

// Federated training loop parameters (desk-scale synthetic task).
struct FlConfig {
  int rounds = 100;
  int feature_dim = 32;
  int num_classes = 10;
  int train_samples = 16000;
  int test_samples = 4000;
  double class_mean_radius = 3.0;
  double noise_sigma = 1.0;
  double iid_fraction = 0.1;
  double dirichlet_alpha = 0.5;
  int bits_per_param = 32;
  double loss_floor = 0.0;
  double selection_fraction = 0.25;
  double smoothing = 0.0;  // additive label-count smoothing, default off
  std::string method = "csra";
  BoundModel bound;
};

struct BaselineParams {
  std::vector<std::string> methods{"csra", "cs_greedy", "ga_greedy", "cs_random"};
  int ga_population = 50;
  int ga_generations = 200;
  double ga_mutation_rate = 0.02;
  int ga_tournament = 3;
  int ga_elitism = 1;
  double penalty_m = 1e6;
  double bandwidth_quantum = 0.01;
  int selection_count = 0;  // 0 => CSRA-paired count, else 25% fallback
  bool paper_literal_fitness = false;
  bool greedy_signed_gain = false;
};

// Standalone bound-evaluation document for the `bound` subcommand.
struct BoundDocument {
  int round_t = 0;
  std::vector<double> learning_rates;
  std::vector<double> optimality_gaps;
  double smoothness = 1.0;
  double lipschitz = 1.0;
  double grad_variance = 1.0;
  int epochs = 1;
  double loss_bound = 1.0;
  double confidence = 0.1;
  double stability = 0.01;
  std::vector<double> client_sizes;
  std::vector<double> kl_terms;
};

struct Config {
  SystemConfig system;
  ClientRanges client_ranges;
  SolverParams optimizer;
  FlConfig fl;
  BaselineParams baselines;
  std::optional<BoundDocument> bound;
};

double dbm_to_watt(double dbm);

// Parses and validates a config document. Unknown keys anywhere in the
// document are rejected. Defaults (above) apply to absent keys.
Config load_config_json(const std::string& json_text);
Config load_config_file(const std::string& path);

// Canonical serialization (sorted keys) and its FNV-1a 64-bit hash; the hash
// is stable across platforms and goes into the run manifest.
std::string canonical_config_json(const Config& cfg);
std::uint64_t config_hash(const Config& cfg);

}  // namespace fedcell

#pragma once

#include <cstdint>
#include <vector>

#include "fedcell/config.hpp"

namespace fedcell {

// Static per-client physical and data parameters. All SI units.
struct ClientProfile {
  double dataset_size = 0.0;     // d_k, samples
  double cycles_per_bit = 0.0;   // s_k
  double transmit_power_w = 0.0; // P_k
  double max_frequency = 0.0;    // f_k^max, cycles/s
  double model_bits = 0.0;       // C_k
  double distance_m = 0.0;
  double path_loss = 0.0;        // theta_k, derived from distance
  std::vector<double> label_counts;  // d_{z,k}, sums to dataset_size
};

// Immutable simulated environment: client population plus deterministic
// per-round fading draws. Safe to share across threads after construction.
class Scenario {
 public:
  Scenario(SystemConfig system, std::vector<ClientProfile> profiles)
      : system_(std::move(system)), profiles_(std::move(profiles)) {}

  const SystemConfig& system() const { return system_; }
  const std::vector<ClientProfile>& profiles() const { return profiles_; }
  const ClientProfile& profile(int k) const {
    return profiles_[static_cast<std::size_t>(k)];
  }
  int num_clients() const { return static_cast<int>(profiles_.size()); }

  // Unit-mean exponential fading power |h_{k,t}|^2, derived on demand from
  // the (seed, client, round) stream key: order of evaluation cannot affect
  // the draw.
  double fading_power(int client, int round) const;

  // Full-band uplink rate B*log2(1 + theta*|h|^2*P/(B*N0)), bit/s.
  double full_band_rate(int client, int round) const;

 private:
  SystemConfig system_;
  std::vector<ClientProfile> profiles_;
};

// Draws K client profiles with each field uniform in its configured closed
// interval. Identical seed => bit-identical scenario.
Scenario sample_scenario(const SystemConfig& system, const ClientRanges& ranges,
                         std::uint64_t seed);

}  // namespace fedcell

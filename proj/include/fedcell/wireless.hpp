#pragma once

#include <vector>

#include "fedcell/scenario.hpp"

namespace fedcell {

struct RoundDecision;  // csra.hpp

// Per-client cost components for one round.
struct ClientCost {
  double comp_latency = 0.0;  // s
  double comp_energy = 0.0;   // J
  double up_latency = 0.0;    // s
  double up_energy = 0.0;     // J
  double total_latency() const { return comp_latency + up_latency; }
  double total_energy() const { return comp_energy + up_energy; }
};

// Aggregate round cost; invariants: round_latency = max over selected of
// per-client total latency, round_energy = sum, utility = a1*T + a2*E.
struct CostReport {
  std::vector<ClientCost> per_client;  // zero entries for unselected clients
  double round_latency = 0.0;  // T_t
  double round_energy = 0.0;   // E_t
  double utility = 0.0;        // Y_t
};

// Large-scale path loss power gain: (c0 / (4 pi fc))^2 * dist^-gamma.
double path_loss(double distance_m, double carrier_freq_hz, double exponent);

// Uplink rate for a bandwidth fraction b of total bandwidth B:
// b * B * log2(1 + theta*h2*P / (B*N0)).
double uplink_rate(double bandwidth_fraction, double total_bandwidth_hz,
                   double gain, double fading_power, double power_w,
                   double noise_w_per_hz);

// Latency/energy of one selected client given its CPU frequency and achieved
// uplink rate. Throws InfeasibleError when f or rate is zero with work to do.
ClientCost client_round_cost(const ClientProfile& profile, double frequency,
                             double rate, int epochs);

// Aggregates per-client costs over a decision's selected set.
CostReport round_cost(const RoundDecision& decision, const Scenario& scenario,
                      int round, double alpha1, double alpha2);

}  // namespace fedcell

#pragma once

namespace bosonic {

// Single-mode pure-loss bosonic channel: the output mode is
// b = sqrt(eta) a + sqrt(1 - eta) e with the environment e in vacuum.
// Transmissivity eta must lie in (0, 1]; anything else throws
// std::domain_error at construction.
struct ChannelSpec {
  double eta;
  explicit ChannelSpec(double transmissivity);
};

// Mean photon-number budget per channel use at the transmitter (n_s >= 0).
struct PowerBudget {
  double ns;
  explicit PowerBudget(double mean_photons);
};

// Classical capacity under the photon budget: g(eta * ns) bits per use.
double classical_capacity(ChannelSpec ch, PowerBudget p);

// Quantum capacity under the photon budget:
// max(0, g(eta * ns) - g((1 - eta) * ns)) qubits per use; identically zero
// for eta <= 1/2.
double quantum_capacity(ChannelSpec ch, PowerBudget p);

// Unconstrained (infinite-budget) quantum capacity. For 1/2 < eta < 1 the
// value is log2(eta / (1 - eta)) qubits per use; for eta <= 1/2 it is zero;
// for eta = 1 it is unbounded, reported through the flag rather than as a
// floating-point infinity.
struct CapacityLimit {
  double value = 0.0;
  bool unbounded = false;
};
CapacityLimit quantum_capacity_limit(ChannelSpec ch);

// Entanglement-assisted classical capacity point: the rate
// g(ns) + g(eta * ns) - g((1 - eta) * ns) bits per use, together with the
// entanglement consumption g(ns) ebits per use needed to reach it.
struct EAPoint {
  double rate_bits = 0.0;
  double ebits_consumed = 0.0;
};
EAPoint ea_classical_capacity(ChannelSpec ch, PowerBudget p);

}  // namespace bosonic

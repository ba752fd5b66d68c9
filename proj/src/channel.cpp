#include "bosonic/channel.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "bosonic/entropy.hpp"

namespace bosonic {

ChannelSpec::ChannelSpec(double transmissivity) : eta(transmissivity) {
  if (!std::isfinite(transmissivity) || transmissivity <= 0.0 ||
      transmissivity > 1.0) {
    throw std::domain_error(
        "ChannelSpec: transmissivity must lie in (0, 1], got " +
        std::to_string(transmissivity));
  }
}

PowerBudget::PowerBudget(double mean_photons) : ns(mean_photons) {
  if (!std::isfinite(mean_photons) || mean_photons < 0.0) {
    throw std::domain_error(
        "PowerBudget: mean photon number must be finite and nonnegative, "
        "got " +
        std::to_string(mean_photons));
  }
}

double classical_capacity(ChannelSpec ch, PowerBudget p) {
  return g_entropy(ch.eta * p.ns);
}

double quantum_capacity(ChannelSpec ch, PowerBudget p) {
  if (ch.eta <= 0.5) {
    return 0.0;
  }
  const double q = g_entropy(ch.eta * p.ns) - g_entropy((1.0 - ch.eta) * p.ns);
  return q > 0.0 ? q : 0.0;
}

CapacityLimit quantum_capacity_limit(ChannelSpec ch) {
  if (ch.eta == 1.0) {
    return {0.0, true};
  }
  if (ch.eta <= 0.5) {
    return {0.0, false};
  }
  return {std::log2(ch.eta / (1.0 - ch.eta)), false};
}

EAPoint ea_classical_capacity(ChannelSpec ch, PowerBudget p) {
  const double cost = g_entropy(p.ns);
  const double rate =
      cost + g_entropy(ch.eta * p.ns) - g_entropy((1.0 - ch.eta) * p.ns);
  return {rate, cost};
}

}  // namespace bosonic

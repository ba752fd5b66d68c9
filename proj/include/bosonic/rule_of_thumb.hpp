#pragma once

#include "bosonic/channel.hpp"
#include "bosonic/regions.hpp"

namespace bosonic {

// Second-order lower bound on the qubit rate at sharing parameter lambda,
// valid for 1/2 < eta < 1:
//
//   Q(lambda) >= log2(eta / (1 - eta)) - 1 / (eta * (1 - eta) * lambda * ns * ln 2)
//
// The result may be negative for small lambda * ns (the bound is then vacuous
// but still correct). Throws std::domain_error when eta is outside (1/2, 1)
// or when lambda * ns == 0.
double taylor_lower_bound(ChannelSpec ch, PowerBudget p, ShareParam s);

// Photon-allocation rule of thumb: the sharing parameter
//
//   lambda_star = min(1, 1 / (eta * (1 - eta) * eps * ns * ln 2))
//
// beyond which the qubit rate is within 2 * eps qubits of its
// infinite-budget limit. No lower clamp is applied: for very large budgets
// the rule returns a small share. Throws std::domain_error when eta is
// outside (1/2, 1), eps <= 0, or ns == 0.
double lambda_star(ChannelSpec ch, PowerBudget p, double eps);

}  // namespace bosonic

#include "bosonic/rule_of_thumb.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace bosonic {

namespace {

void require_open_interval_eta(double eta, const char* who) {
  if (!(eta > 0.5) || !(eta < 1.0)) {
    throw std::domain_error(std::string(who) +
                            ": transmissivity must lie strictly between 1/2 "
                            "and 1, got " +
                            std::to_string(eta));
  }
}

}  // namespace

double taylor_lower_bound(ChannelSpec ch, PowerBudget p, ShareParam s) {
  require_open_interval_eta(ch.eta, "taylor_lower_bound");
  const double lam_ns = s.lambda * p.ns;
  if (lam_ns == 0.0) {
    throw std::domain_error(
        "taylor_lower_bound: the expansion needs a positive photon number "
        "lambda * ns");
  }
  return std::log2(ch.eta / (1.0 - ch.eta)) -
         1.0 / (ch.eta * (1.0 - ch.eta) * lam_ns * std::numbers::ln2);
}

double lambda_star(ChannelSpec ch, PowerBudget p, double eps) {
  require_open_interval_eta(ch.eta, "lambda_star");
  if (!std::isfinite(eps) || eps <= 0.0) {
    throw std::domain_error(
        "lambda_star: the rate-gap tolerance must be positive, got " +
        std::to_string(eps));
  }
  if (p.ns == 0.0) {
    throw std::domain_error(
        "lambda_star: the allocation rule needs a positive photon budget");
  }
  const double raw =
      1.0 / (ch.eta * (1.0 - ch.eta) * eps * p.ns * std::numbers::ln2);
  return std::min(1.0, raw);
}

}  // namespace bosonic

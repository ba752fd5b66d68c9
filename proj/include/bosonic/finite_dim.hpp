#pragma once

#include <vector>

#include <Eigen/Dense>

#include "bosonic/regions.hpp"

namespace bosonic::fd {

using Matrix = Eigen::MatrixXcd;

// Von Neumann entropy in bits of a Hermitian positive-semidefinite matrix.
// Eigenvalues in [-1e-10, 0] are clamped to zero; anything below that
// tolerance throws std::domain_error.
double entropy_bits(const Matrix& rho);

// Finite-dimensional channel in Kraus form. Construction validates that the
// operators are non-empty, share one shape, and satisfy the completeness
// relation sum_k E_k^dag E_k = I to an entrywise tolerance of 1e-10.
struct FDChannel {
  std::vector<Matrix> kraus;

  explicit FDChannel(std::vector<Matrix> ops);

  Eigen::Index dim_in() const { return kraus.front().cols(); }
  Eigen::Index dim_out() const { return kraus.front().rows(); }
  // The environment dimension equals the number of Kraus operators, even
  // when a smaller environment would suffice.
  Eigen::Index env_dim() const { return static_cast<Eigen::Index>(kraus.size()); }

  // Channel output sum_k E_k rho E_k^dag.
  Matrix apply(const Matrix& rho) const;

  // Environment output of the Stinespring dilation defined by this Kraus
  // decomposition: entry (k, l) equals Tr(E_l^dag E_k rho).
  Matrix complementary_output(const Matrix& rho) const;
};

// Weighted ensemble of input density matrices. Construction validates that
// weights are nonnegative and sum to 1 within 1e-12, and that every state is
// square, Hermitian within 1e-10, and unit-trace within 1e-10.
struct EnsembleEntry {
  double weight = 0.0;
  Matrix rho;
};

struct FDEnsemble {
  std::vector<EnsembleEntry> entries;

  explicit FDEnsemble(std::vector<EnsembleEntry> e);

  Matrix average() const;
};

// Achievable-rate formulas for a classical/quantum/entanglement trade-off
// code built on the ensemble {p_x, rho_x}:
//   bits           = H(N(rho_avg)) - sum_x p_x H(rho_x)
//   qubits         = sum_x p_x [H(rho_x) + H(N(rho_x)) - H(N_c(rho_x))] / 2
//   ebits_consumed = sum_x p_x [H(rho_x) + H(N_c(rho_x)) - H(N(rho_x))] / 2
// where N is the channel and N_c its complementary channel.
struct RateFormulas {
  double bits = 0.0;
  double qubits = 0.0;
  double ebits_consumed = 0.0;
};
RateFormulas hsieh_wilde_rates(const FDChannel& ch, const FDEnsemble& ens);

// Outer-bound triple of the (C, Q, E) region evaluated on the ensemble:
//   b1 = H(N(rho_avg)) + sum_x p_x [H(rho_x) - H(N_c(rho_x))]
//   b2 = sum_x p_x [H(N(rho_x)) - H(N_c(rho_x))]
//   b3 = H(N(rho_avg)) - sum_x p_x H(N_c(rho_x))
// The rate formulas satisfy qubits - ebits_consumed = b2 identically.
BoundTriple cqe_region_bounds_fd(const FDChannel& ch, const FDEnsemble& ens);

}  // namespace bosonic::fd

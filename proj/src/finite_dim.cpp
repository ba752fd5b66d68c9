#include "bosonic/finite_dim.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace bosonic::fd {

namespace {

constexpr double kPsdTolerance = 1e-10;
constexpr double kCompletenessTolerance = 1e-10;
constexpr double kStateTolerance = 1e-10;
constexpr double kWeightSumTolerance = 1e-12;

void require_density_matrix(const Matrix& rho, const char* who) {
  if (rho.rows() != rho.cols()) {
    throw std::invalid_argument(std::string(who) +
                                ": density matrix must be square");
  }
  if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > kStateTolerance) {
    throw std::invalid_argument(std::string(who) +
                                ": density matrix is not Hermitian within "
                                "tolerance");
  }
  if (std::abs(rho.trace() - std::complex<double>(1.0, 0.0)) >
      kStateTolerance) {
    throw std::invalid_argument(std::string(who) +
                                ": density matrix trace differs from 1 "
                                "beyond tolerance");
  }
}

}  // namespace

double entropy_bits(const Matrix& rho) {
  if (rho.rows() != rho.cols()) {
    throw std::invalid_argument("entropy_bits: matrix must be square");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(rho, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) {
    throw std::runtime_error("entropy_bits: eigenvalue solver failed");
  }
  double h = 0.0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    const double ev = es.eigenvalues()(i);
    if (ev < -kPsdTolerance) {
      throw std::domain_error(
          "entropy_bits: matrix is not positive semidefinite (eigenvalue " +
          std::to_string(ev) + ")");
    }
    if (ev > 0.0) {
      h -= ev * std::log2(ev);
    }
  }
  return h;
}

FDChannel::FDChannel(std::vector<Matrix> ops) : kraus(std::move(ops)) {
  if (kraus.empty()) {
    throw std::invalid_argument(
        "FDChannel: at least one Kraus operator is required");
  }
  const Eigen::Index rows = kraus.front().rows();
  const Eigen::Index cols = kraus.front().cols();
  if (rows < 1 || cols < 1) {
    throw std::invalid_argument("FDChannel: Kraus operators must be nonempty");
  }
  for (const Matrix& k : kraus) {
    if (k.rows() != rows || k.cols() != cols) {
      throw std::invalid_argument(
          "FDChannel: Kraus operators must share one shape");
    }
  }
  Matrix acc = Matrix::Zero(cols, cols);
  for (const Matrix& k : kraus) {
    acc += k.adjoint() * k;
  }
  const double defect =
      (acc - Matrix::Identity(cols, cols)).cwiseAbs().maxCoeff();
  if (defect > kCompletenessTolerance) {
    throw std::invalid_argument(
        "FDChannel: Kraus completeness relation violated (max entry defect " +
        std::to_string(defect) + ")");
  }
}

Matrix FDChannel::apply(const Matrix& rho) const {
  if (rho.rows() != dim_in() || rho.cols() != dim_in()) {
    throw std::invalid_argument(
        "FDChannel::apply: state dimension does not match the channel input");
  }
  Matrix out = Matrix::Zero(dim_out(), dim_out());
  for (const Matrix& k : kraus) {
    out += k * rho * k.adjoint();
  }
  return out;
}

Matrix FDChannel::complementary_output(const Matrix& rho) const {
  if (rho.rows() != dim_in() || rho.cols() != dim_in()) {
    throw std::invalid_argument(
        "FDChannel::complementary_output: state dimension does not match "
        "the channel input");
  }
  require_density_matrix(rho, "FDChannel::complementary_output");
  const Eigen::Index ne = env_dim();
  Matrix env(ne, ne);
  for (Eigen::Index k = 0; k < ne; ++k) {
    for (Eigen::Index l = 0; l < ne; ++l) {
      env(k, l) = (kraus[static_cast<std::size_t>(l)].adjoint() *
                   kraus[static_cast<std::size_t>(k)] * rho)
                      .trace();
    }
  }
  return env;
}

FDEnsemble::FDEnsemble(std::vector<EnsembleEntry> e) : entries(std::move(e)) {
  if (entries.empty()) {
    throw std::invalid_argument("FDEnsemble: at least one entry is required");
  }
  const Eigen::Index dim = entries.front().rho.rows();
  double total = 0.0;
  for (const EnsembleEntry& entry : entries) {
    if (!std::isfinite(entry.weight) || entry.weight < 0.0) {
      throw std::invalid_argument(
          "FDEnsemble: weights must be finite and nonnegative");
    }
    total += entry.weight;
    if (entry.rho.rows() != dim || entry.rho.cols() != dim) {
      throw std::invalid_argument(
          "FDEnsemble: all states must share one dimension");
    }
    require_density_matrix(entry.rho, "FDEnsemble");
  }
  if (std::abs(total - 1.0) > kWeightSumTolerance) {
    throw std::invalid_argument(
        "FDEnsemble: weights must sum to 1 (got " + std::to_string(total) +
        ")");
  }
}

Matrix FDEnsemble::average() const {
  const Eigen::Index dim = entries.front().rho.rows();
  Matrix avg = Matrix::Zero(dim, dim);
  for (const EnsembleEntry& entry : entries) {
    avg += entry.weight * entry.rho;
  }
  return avg;
}

namespace {

// Entropies shared by the rate formulas and the bound triple.
struct EnsembleEntropies {
  double h_avg_out = 0.0;
  double mean_h_in = 0.0;
  double mean_h_out = 0.0;
  double mean_h_env = 0.0;
};

EnsembleEntropies tabulate(const FDChannel& ch, const FDEnsemble& ens) {
  if (ens.entries.front().rho.rows() != ch.dim_in()) {
    throw std::invalid_argument(
        "ensemble dimension does not match the channel input");
  }
  EnsembleEntropies t;
  t.h_avg_out = entropy_bits(ch.apply(ens.average()));
  for (const EnsembleEntry& entry : ens.entries) {
    t.mean_h_in += entry.weight * entropy_bits(entry.rho);
    t.mean_h_out += entry.weight * entropy_bits(ch.apply(entry.rho));
    t.mean_h_env +=
        entry.weight * entropy_bits(ch.complementary_output(entry.rho));
  }
  return t;
}

}  // namespace

RateFormulas hsieh_wilde_rates(const FDChannel& ch, const FDEnsemble& ens) {
  const EnsembleEntropies t = tabulate(ch, ens);
  return {t.h_avg_out - t.mean_h_in,
          0.5 * (t.mean_h_in + t.mean_h_out - t.mean_h_env),
          0.5 * (t.mean_h_in + t.mean_h_env - t.mean_h_out)};
}

BoundTriple cqe_region_bounds_fd(const FDChannel& ch, const FDEnsemble& ens) {
  const EnsembleEntropies t = tabulate(ch, ens);
  return {t.h_avg_out + t.mean_h_in - t.mean_h_env,
          t.mean_h_out - t.mean_h_env, t.h_avg_out - t.mean_h_env};
}

}  // namespace bosonic::fd

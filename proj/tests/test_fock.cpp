#include "bosonic/fock.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "bosonic/entropy.hpp"

using namespace bosonic;
using fock::BeamsplitterUnitary;
using fock::TruncatedState;

namespace {

// Closed-form entropy remainder of the truncated geometric photon-number
// distribution: sum_{n > cutoff} p_n log2(1/p_n) with p_n = q^n / (nbar + 1).
double geometric_entropy_tail(double nbar, int cutoff) {
  const double q = nbar / (nbar + 1.0);
  const double a = std::log2((nbar + 1.0) / nbar);
  const double b = std::log2(nbar + 1.0);
  const double tail_mass = std::pow(q, cutoff + 1);
  const double tail_first_moment =
      tail_mass * ((cutoff + 1) + q / (1.0 - q));
  return a * tail_first_moment + b * tail_mass;
}

}  // namespace

TEST_CASE("truncated two-mode squeezed vacuum") {
  const TruncatedState vac = fock::tmsv_state(0.0, 10);
  CHECK(vac.amplitudes(0) == std::complex<double>(1.0, 0.0));
  CHECK(vac.tail_mass == 0.0);
  CHECK_FALSE(vac.tail_warning);

  const TruncatedState st = fock::tmsv_state(1.0, 40);
  const int d = 41;
  // Schmidt probabilities 2^-(n+1) on the diagonal.
  for (int n = 0; n < 5; ++n) {
    const double p = std::norm(st.amplitudes(n * d + n));
    CHECK(std::abs(p - std::pow(0.5, n + 1)) <= 1e-15);
  }
  // Off-diagonal entries vanish.
  CHECK(st.amplitudes(1) == std::complex<double>(0.0, 0.0));
  CHECK(std::abs(st.tail_mass - 4.5474735088646411896e-13) <= 1e-26);
  CHECK_FALSE(st.tail_warning);
  CHECK(std::abs(st.amplitudes.squaredNorm() - (1.0 - st.tail_mass)) <= 1e-14);

  const TruncatedState coarse = fock::tmsv_state(1.0, 10);
  CHECK(coarse.tail_warning);  // tail 2^-11 ~ 4.9e-4

  CHECK_THROWS_AS(fock::tmsv_state(-1.0, 10), std::domain_error);
  CHECK_THROWS_AS(fock::tmsv_state(1.0, 0), std::invalid_argument);
}

TEST_CASE("truncated squeezed vacuum: entropy matches g up to the analytic tail") {
  // The truncated reduced state's entropy differs from g(nbar) by exactly
  // the closed-form remainder of the geometric distribution.
  const double nbar = 1.0;
  for (const int cutoff : {20, 40, 80}) {
    const TruncatedState st = fock::tmsv_state(nbar, cutoff);
    const int d = cutoff + 1;
    std::vector<double> probs;
    for (int n = 0; n < d; ++n) {
      probs.push_back(std::norm(st.amplitudes(n * d + n)));
    }
    const double h_truncated = fock::entropy_of_probabilities(probs);
    const double remainder = geometric_entropy_tail(nbar, cutoff);
    CHECK(std::abs(g_entropy(nbar) - h_truncated - remainder) <= 1e-12);
  }
}

TEST_CASE("beamsplitter blocks: unitarity and limiting cases") {
  const BeamsplitterUnitary u = fock::beamsplitter(0.6, 60);
  REQUIRE(u.blocks.size() == 61);
  for (const Eigen::MatrixXcd& block : u.blocks) {
    const Eigen::MatrixXcd defect =
        block.adjoint() * block -
        Eigen::MatrixXcd::Identity(block.rows(), block.cols());
    CHECK(defect.cwiseAbs().maxCoeff() <= 1e-10);
  }

  const BeamsplitterUnitary pass = fock::beamsplitter(1.0, 20);
  for (const Eigen::MatrixXcd& block : pass.blocks) {
    const Eigen::MatrixXcd defect =
        block - Eigen::MatrixXcd::Identity(block.rows(), block.cols());
    CHECK(defect.cwiseAbs().maxCoeff() <= 1e-12);
  }

  // Full reflection maps |m, n-m> to |n-m, m> up to phase.
  const BeamsplitterUnitary swap = fock::beamsplitter(0.0, 12);
  for (int n = 0; n <= 12; ++n) {
    const Eigen::MatrixXcd& block = swap.blocks[static_cast<std::size_t>(n)];
    for (int m = 0; m <= n; ++m) {
      for (int k = 0; k <= n; ++k) {
        const double expected = k == n - m ? 1.0 : 0.0;
        CHECK(std::abs(std::abs(block(k, m)) - expected) <= 1e-12);
      }
    }
  }

  // Balanced splitter on one photon: equal weights.
  const BeamsplitterUnitary half = fock::beamsplitter(0.5, 4);
  CHECK(std::abs(std::norm(half.blocks[1](0, 1)) - 0.5) <= 1e-12);
  CHECK(std::abs(std::norm(half.blocks[1](1, 1)) - 0.5) <= 1e-12);

  CHECK_THROWS_AS(fock::beamsplitter(1.2, 10), std::domain_error);
  CHECK_THROWS_AS(fock::beamsplitter(-0.1, 10), std::domain_error);
}

TEST_CASE("single-photon transmission probability is eta") {
  for (const double eta : {0.3, 0.6, 0.75, 0.9}) {
    const BeamsplitterUnitary u = fock::beamsplitter(eta, 6);
    // |1, 0> keeps the photon in the transmitted mode with probability eta.
    CHECK(std::abs(std::norm(u.blocks[1](1, 1)) - eta) <= 1e-12);
    CHECK(std::abs(std::norm(u.blocks[1](0, 1)) - (1.0 - eta)) <= 1e-12);
  }
}

TEST_CASE("verification run: pinned small case") {
  const fock::VerificationReport rep =
      fock::verify_cqe_entropies(0.6, 1.0, 1.0, 60, 1e-8);
  CHECK(rep.passed);
  CHECK(rep.max_deviation < 1e-8);
  REQUIRE(rep.checks.size() == 5);
  // H(B) approaches g(0.6) and H(E) approaches g(0.4).
  CHECK(std::abs(rep.checks[0].expected - g_entropy(0.6)) <= 1e-15);
  CHECK(std::abs(rep.checks[0].observed - g_entropy(0.6)) <= 1e-9);
  CHECK(std::abs(rep.checks[1].observed - g_entropy(0.4)) <= 1e-9);
}

TEST_CASE("verification run: lossless channel") {
  const fock::VerificationReport rep =
      fock::verify_cqe_entropies(1.0, 1.0, 1.0, 40, 1e-8);
  CHECK(rep.passed);
  // Everything reaches the receiver: H(B) = g(1) = 2, environment empty.
  CHECK(std::abs(rep.checks[0].observed - 2.0) <= 1e-9);
  CHECK(std::abs(rep.checks[1].observed) <= 1e-10);
}

TEST_CASE("verification run: idle share") {
  // The thermal-input check still runs the full budget (ns = 2), so the
  // cutoff must be chosen for ns, not for lambda * ns = 0.
  const fock::VerificationReport rep =
      fock::verify_cqe_entropies(0.75, 2.0, 0.0, 60, 1e-8);
  CHECK(rep.passed);
  // lambda = 0 sends vacuum: the TMSV checks are all zero, while the
  // thermal check still exercises the full budget.
  CHECK(std::abs(rep.checks[0].observed) <= 1e-12);
  CHECK(std::abs(rep.checks[4].expected - g_entropy(1.5)) <= 1e-15);
}

TEST_CASE("verification run: purity consistency of the joint marginal") {
  const fock::VerificationReport rep =
      fock::verify_cqe_entropies(0.7, 1.5, 0.8, 70, 1e-7);
  CHECK(rep.passed);
  // |H(AB) - H(E)| is itself one of the checks; it should sit far below
  // the closed-form deviations.
  CHECK(rep.checks[3].observed <= 1e-10);
}

TEST_CASE("verification run: cutoff convergence is monotone") {
  double prev = 1e300;
  for (const int cutoff : {20, 40, 80}) {
    const fock::VerificationReport rep =
        fock::verify_cqe_entropies(0.6, 1.0, 1.0, cutoff, 1.0);
    CHECK(rep.max_deviation <= prev + 1e-12);
    prev = rep.max_deviation;
  }
  CHECK(prev < 1e-9);
}

TEST_CASE("verification run: parameter validation") {
  CHECK_THROWS_AS(fock::verify_cqe_entropies(0.0, 1.0, 1.0, 20, 1e-8),
                  std::domain_error);
  CHECK_THROWS_AS(fock::verify_cqe_entropies(0.6, -1.0, 1.0, 20, 1e-8),
                  std::domain_error);
  CHECK_THROWS_AS(fock::verify_cqe_entropies(0.6, 1.0, 1.5, 20, 1e-8),
                  std::domain_error);
  CHECK_THROWS_AS(fock::verify_cqe_entropies(0.6, 1.0, 1.0, 0, 1e-8),
                  std::invalid_argument);
  CHECK_THROWS_AS(fock::verify_cqe_entropies(0.6, 1.0, 1.0, 20, 0.0),
                  std::domain_error);
}

TEST_CASE("three-mode entropies are displacement invariant") {
  const double nbar = 1.0;
  const double eta = 0.6;
  const int cutoff = 50;
  const int d = cutoff + 1;

  const TruncatedState st = fock::tmsv_state(nbar, cutoff);
  Eigen::MatrixXcd psi = Eigen::MatrixXcd::Zero(d, d);
  for (int n = 0; n < d; ++n) {
    psi(n, n) = st.amplitudes(n * d + n);
  }
  const fock::ThreeModeEntropies plain = fock::three_mode_entropies(psi, eta);

  // Displace the transmitted arm: |psi'> = (I (x) D) |psi>, so the amplitude
  // matrix becomes psi'(n, m) = sum_j psi(n, j) D(m, j) = (D psi^T)^T.
  const Eigen::MatrixXcd disp =
      fock::displacement_operator({0.3, 0.2}, cutoff);
  const Eigen::MatrixXcd psi_disp = (disp * psi.transpose()).transpose();
  const fock::ThreeModeEntropies shifted =
      fock::three_mode_entropies(psi_disp, eta);

  CHECK(std::abs(plain.h_b - shifted.h_b) <= 1e-8);
  CHECK(std::abs(plain.h_e - shifted.h_e) <= 1e-8);
  CHECK(std::abs(plain.h_ab - shifted.h_ab) <= 1e-8);

  // The displacement operator is unitary on the occupied corner of the
  // truncated space.
  const Eigen::MatrixXcd defect =
      disp.adjoint() * disp - Eigen::MatrixXcd::Identity(d, d);
  CHECK(defect.topLeftCorner(20, 20).cwiseAbs().maxCoeff() <= 1e-10);
}

TEST_CASE("entropy of probabilities: clamping") {
  CHECK(fock::entropy_of_probabilities({1.0}) == 0.0);
  CHECK(fock::entropy_of_probabilities({0.5, 0.5}) == 1.0);
  // Values at or below the floor contribute nothing, including small
  // negative eigenvalue noise.
  CHECK(fock::entropy_of_probabilities({1.0, 1e-15, -1e-15}) == 0.0);
}

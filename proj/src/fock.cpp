#include "bosonic/fock.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "bosonic/entropy.hpp"

namespace bosonic::fock {

namespace {

constexpr double kProbabilityFloor = 1e-14;
constexpr double kTailWarningLevel = 1e-8;

// exp(-i * theta * H) for Hermitian H, through its eigendecomposition.
Eigen::MatrixXcd hermitian_phase_exponential(const Eigen::MatrixXcd& h,
                                             double theta) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
  if (es.info() != Eigen::Success) {
    throw std::runtime_error("hermitian exponential: eigensolver failed");
  }
  const Eigen::Index dim = h.rows();
  Eigen::VectorXcd phases(dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    phases(i) = std::exp(std::complex<double>(0.0, -theta * es.eigenvalues()(i)));
  }
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

double entropy_of_hermitian(const Eigen::MatrixXcd& rho) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho,
                                                     Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) {
    throw std::runtime_error("marginal entropy: eigensolver failed");
  }
  std::vector<double> evs(es.eigenvalues().data(),
                          es.eigenvalues().data() + es.eigenvalues().size());
  return entropy_of_probabilities(evs);
}

}  // namespace

double entropy_of_probabilities(const std::vector<double>& p) {
  double h = 0.0;
  for (const double v : p) {
    if (v < kProbabilityFloor) {
      continue;  // clamped to zero (also absorbs tiny negative eigenvalues)
    }
    h -= v * std::log2(v);
  }
  return h;
}

TruncatedState tmsv_state(double nbar, int cutoff) {
  if (!std::isfinite(nbar) || nbar < 0.0) {
    throw std::domain_error(
        "tmsv_state: mean photon number must be finite and nonnegative");
  }
  if (cutoff < 1) {
    throw std::invalid_argument("tmsv_state: cutoff must be at least 1");
  }
  const int d = cutoff + 1;
  TruncatedState st;
  st.cutoff = cutoff;
  st.amplitudes = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(d) * d);
  if (nbar == 0.0) {
    st.amplitudes(0) = 1.0;
    st.tail_mass = 0.0;
  } else {
    const double q = nbar / (nbar + 1.0);
    double pn = 1.0 / (nbar + 1.0);  // p_n = q^n / (nbar + 1)
    for (int n = 0; n < d; ++n) {
      st.amplitudes(static_cast<Eigen::Index>(n) * d + n) = std::sqrt(pn);
      pn *= q;
    }
    st.tail_mass = std::pow(q, cutoff + 1);
  }
  st.tail_warning = st.tail_mass > kTailWarningLevel;
  return st;
}

BeamsplitterUnitary beamsplitter(double eta, int cutoff) {
  if (!std::isfinite(eta) || eta < 0.0 || eta > 1.0) {
    throw std::domain_error(
        "beamsplitter: transmissivity must lie in [0, 1], got " +
        std::to_string(eta));
  }
  if (cutoff < 1) {
    throw std::invalid_argument("beamsplitter: cutoff must be at least 1");
  }
  const double theta = std::atan2(std::sqrt(1.0 - eta), std::sqrt(eta));
  BeamsplitterUnitary u;
  u.eta = eta;
  u.cutoff = cutoff;
  u.blocks.reserve(static_cast<std::size_t>(cutoff) + 1);
  for (int n = 0; n <= cutoff; ++n) {
    const int dim = n + 1;
    // Hermitian generator h = i (a^dag e - a e^dag) restricted to the total-
    // photon-number-n block, in the basis |m, n-m>, m = 0..n.
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim, dim);
    for (int m = 0; m < n; ++m) {
      const double c =
          std::sqrt(static_cast<double>(m + 1) * static_cast<double>(n - m));
      h(m + 1, m) = std::complex<double>(0.0, c);
      h(m, m + 1) = std::complex<double>(0.0, -c);
    }
    u.blocks.push_back(hermitian_phase_exponential(h, theta));
  }
  return u;
}

Eigen::MatrixXcd displacement_operator(std::complex<double> alpha,
                                       int cutoff) {
  if (cutoff < 1) {
    throw std::invalid_argument(
        "displacement_operator: cutoff must be at least 1");
  }
  const int d = cutoff + 1;
  // Hermitian h = i (alpha a^dag - conj(alpha) a); D = exp(-i * 1 * h).
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(d, d);
  const std::complex<double> i_unit(0.0, 1.0);
  for (int n = 0; n + 1 < d; ++n) {
    const double root = std::sqrt(static_cast<double>(n + 1));
    h(n + 1, n) = i_unit * alpha * root;
    h(n, n + 1) = -i_unit * std::conj(alpha) * root;
  }
  return hermitian_phase_exponential(h, 1.0);
}

ThreeModeEntropies three_mode_entropies(const Eigen::MatrixXcd& psi,
                                        double eta) {
  const Eigen::Index d = psi.rows();
  if (psi.cols() != d || d < 2) {
    throw std::invalid_argument(
        "three_mode_entropies: amplitude matrix must be square with at "
        "least two Fock levels");
  }
  const int cutoff = static_cast<int>(d) - 1;
  const BeamsplitterUnitary bs = beamsplitter(eta, cutoff);

  // Joint amplitudes after the splitter: the |m>_A' |0>_E component scatters
  // into sum_k U^(m)(k, m) |k>_B |m-k>_E, so
  //   T(n, k, e) = psi(n, k + e) * U^(k+e)(k, k+e).
  // Stored as w with rows (n, k) and columns e; the nonzero spectrum of the
  // (A, B) marginal equals that of the d x d Gram matrix w^dag w.
  Eigen::MatrixXcd w = Eigen::MatrixXcd::Zero(d * d, d);
  for (int m = 0; m <= cutoff; ++m) {
    const auto scattered = bs.blocks[static_cast<std::size_t>(m)].col(m);
    for (int k = 0; k <= m; ++k) {
      const int e = m - k;
      const std::complex<double> amp_b = scattered(k);
      if (amp_b == std::complex<double>(0.0, 0.0)) {
        continue;
      }
      for (Eigen::Index n = 0; n < d; ++n) {
        const std::complex<double> a = psi(n, m);
        if (a != std::complex<double>(0.0, 0.0)) {
          w(n * d + k, e) = a * amp_b;
        }
      }
    }
  }

  // Receiver marginal rho_B(k, k') = sum_{n,e} T(n,k,e) conj(T(n,k',e)).
  Eigen::MatrixXcd vb = Eigen::MatrixXcd::Zero(d, d * d);
  Eigen::MatrixXcd ve = Eigen::MatrixXcd::Zero(d, d * d);
  for (Eigen::Index n = 0; n < d; ++n) {
    for (Eigen::Index k = 0; k < d; ++k) {
      for (Eigen::Index e = 0; e < d; ++e) {
        const std::complex<double> t = w(n * d + k, e);
        if (t != std::complex<double>(0.0, 0.0)) {
          vb(k, n * d + e) = t;
          ve(e, n * d + k) = t;
        }
      }
    }
  }

  ThreeModeEntropies ent;
  ent.h_b = entropy_of_hermitian(vb * vb.adjoint());
  ent.h_e = entropy_of_hermitian(ve * ve.adjoint());
  ent.h_ab = entropy_of_hermitian(w.adjoint() * w);
  return ent;
}

double lossy_thermal_output_entropy(double eta, double nbar, int cutoff) {
  if (!std::isfinite(nbar) || nbar < 0.0) {
    throw std::domain_error(
        "lossy_thermal_output_entropy: mean photon number must be finite "
        "and nonnegative");
  }
  const BeamsplitterUnitary bs = beamsplitter(eta, cutoff);
  const int d = cutoff + 1;
  std::vector<double> p_out(static_cast<std::size_t>(d), 0.0);
  const double q = nbar > 0.0 ? nbar / (nbar + 1.0) : 0.0;
  double pn = nbar > 0.0 ? 1.0 / (nbar + 1.0) : 1.0;
  for (int n = 0; n < d; ++n) {
    const auto scattered = bs.blocks[static_cast<std::size_t>(n)].col(n);
    for (int k = 0; k <= n; ++k) {
      p_out[static_cast<std::size_t>(k)] += pn * std::norm(scattered(k));
    }
    pn *= q;
    if (nbar == 0.0) {
      break;  // vacuum input occupies only the n = 0 block
    }
  }
  return entropy_of_probabilities(p_out);
}

VerificationReport verify_cqe_entropies(double eta, double ns, double lambda,
                                        int cutoff, double tolerance) {
  if (!std::isfinite(eta) || eta <= 0.0 || eta > 1.0) {
    throw std::domain_error(
        "verify_cqe_entropies: transmissivity must lie in (0, 1]");
  }
  if (!std::isfinite(ns) || ns < 0.0) {
    throw std::domain_error(
        "verify_cqe_entropies: photon budget must be finite and nonnegative");
  }
  if (!std::isfinite(lambda) || lambda < 0.0 || lambda > 1.0) {
    throw std::domain_error(
        "verify_cqe_entropies: sharing parameter must lie in [0, 1]");
  }
  if (cutoff < 1) {
    throw std::invalid_argument(
        "verify_cqe_entropies: cutoff must be at least 1");
  }
  if (!std::isfinite(tolerance) || tolerance <= 0.0) {
    throw std::domain_error(
        "verify_cqe_entropies: tolerance must be positive");
  }

  const double lam_ns = lambda * ns;
  const TruncatedState tm = tmsv_state(lam_ns, cutoff);
  const int d = cutoff + 1;
  Eigen::MatrixXcd psi = Eigen::MatrixXcd::Zero(d, d);
  for (int n = 0; n < d; ++n) {
    psi(n, n) = tm.amplitudes(static_cast<Eigen::Index>(n) * d + n);
  }
  const ThreeModeEntropies ent = three_mode_entropies(psi, eta);

  VerificationReport rep;
  rep.eta = eta;
  rep.ns = ns;
  rep.lambda = lambda;
  rep.cutoff = cutoff;
  rep.tolerance = tolerance;
  rep.tail_mass = tm.tail_mass;
  rep.tail_warning = tm.tail_warning;

  const auto add = [&rep](const std::string& name, double expected,
                          double observed) {
    rep.checks.push_back(
        {name, expected, observed, std::abs(observed - expected)});
  };
  add("H(B) vs g(eta*lambda*ns)", g_entropy(eta * lam_ns), ent.h_b);
  add("H(E) vs g((1-eta)*lambda*ns)", g_entropy((1.0 - eta) * lam_ns),
      ent.h_e);
  add("H(AB) vs g((1-eta)*lambda*ns)", g_entropy((1.0 - eta) * lam_ns),
      ent.h_ab);
  add("purity |H(AB) - H(E)|", 0.0, std::abs(ent.h_ab - ent.h_e));
  add("thermal-input H(B) vs g(eta*ns)", g_entropy(eta * ns),
      lossy_thermal_output_entropy(eta, ns, cutoff));

  rep.max_deviation = 0.0;
  for (const QuantityCheck& c : rep.checks) {
    rep.max_deviation = std::max(rep.max_deviation, c.deviation);
  }
  rep.passed = rep.max_deviation <= tolerance;
  return rep;
}

}  // namespace bosonic::fock

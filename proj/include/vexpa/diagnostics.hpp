#ifndef VEXPA_DIAGNOSTICS_HPP
#define VEXPA_DIAGNOSTICS_HPP

#include <vector>

#include "vexpa/signal.hpp"

#include <Eigen/Core>

namespace vexpa {

struct DisposednessEntry {
    cplx lambda;          // aliased node exp(mu_i * u * delta)
    double rho = 0.0;     // sensitivity upper bound
    double lagrange_norm = 0.0;
};

struct DisposednessReport {
    std::vector<DisposednessEntry> entries;
    double h1_norm = 0.0;  // ||H(s=1, stride u)||_2
    double h0_norm = 0.0;  // ||H(s=0, stride u)||_2
    int u = 1;
};

struct CrlbReport {
    std::vector<double> var_beta, var_gamma, var_psi, var_omega;
    double rms_omega = 0.0;  // sqrt(mean of omega variances)
    int sample_count = 0;
    double delta = 0.0;
    double sigma2 = 0.0;
    double condition = 0.0;  // Fisher matrix condition estimate
};

/// Monomial coefficients (ascending degree, length n+1) of the Lagrange
/// basis polynomial with roots at every node except nodes[i], normalized
/// so it evaluates to 1 at nodes[i]. i is 0-based.
Eigen::VectorXcd lagrange_coefficients(const std::vector<cplx>& nodes, int i);

/// Per-eigenvalue sensitivity bound
///   rho_i <= (|l_i|+1)/|a_i| * ||ell_i||_2^2 * (||H1||_2 + ||H0||_2)
/// evaluated at stride u from noisefree synthesized samples.
DisposednessReport disposedness(const SignalModel& model, double delta, int u);

/// Fisher information for white circular Gaussian noise of total complex
/// variance sigma2: F = (2/sigma2) * Re(J^H J), J the Jacobian of the
/// stacked samples with respect to (beta_i, gamma_i, psi_i, omega_i).
Eigen::MatrixXd fisher_matrix(const SignalModel& model, const SamplingGrid& grid,
                              double sigma2);

CrlbReport crlb(const SignalModel& model, const SamplingGrid& grid, double sigma2,
                bool allow_pseudo_inverse = false);

}  // namespace vexpa

#endif

#ifndef VEXPA_PRONY_HPP
#define VEXPA_PRONY_HPP

#include <span>
#include <vector>

#include "vexpa/signal.hpp"

#include <Eigen/Core>

namespace vexpa {

/// Square Hankel matrix selector: entry (p,q) reads sample s + (p+q)*u.
struct HankelSpec {
    int shift = 0;         // s >= 0
    int undersampling = 1; // u >= 1
    int order = 1;         // n >= 1
};

enum class EigenKind { UAliased, SAliased, Plain };

struct EigenEstimate {
    cplx value;
    EigenKind kind = EigenKind::Plain;
    int term_index = 0;
    int decimation_index = -1;  // -1 for plain estimates
    cplx amplitude;
};

Eigen::MatrixXcd build_hankel(const SampleSet& samples, const HankelSpec& spec);

/// Generalized eigenvalues of the pencil (H(s=u), H(s=0)) at stride u.
/// For noisefree data of exact order n these are exp(mu_i * u * delta).
std::vector<EigenEstimate> solve_gevp(const SampleSet& samples, int u, int n);

/// LS-ESPRIT on the decimated series values[offset + u*j]. Builds a near
/// square rectangular Hankel, truncates the SVD to rank min(nu, numerical
/// rank), and solves the shift-invariance system in least squares.
/// n <= 0 requests the over-modeled mode (rank nu).
std::vector<EigenEstimate> esprit_estimate(const SampleSet& samples, int u,
                                           int offset, int n, int nu);

struct SolveFlags {
    bool ill_conditioned = false;
    double min_node_gap = 0.0;
};

/// Least squares Vandermonde solve of phi_{offset+u*j} = sum_i a_i l_i^j
/// over every in-range j. Column-scaled QR.
std::vector<cplx> solve_amplitudes(const SampleSet& samples, int u, int offset,
                                   const std::vector<cplx>& eigenvalues,
                                   SolveFlags* flags = nullptr);

/// Count of singular values of the square Hankel H(s=0,u=1,n=nu_max)
/// above rel_tol times the largest one.
int estimate_order_svd(const SampleSet& samples, int nu_max, double rel_tol);

namespace detail {

/// ESPRIT eigenvalues of a raw series; rank capped at the numerical rank.
std::vector<cplx> esprit_eigenvalues(std::span<const cplx> series, int rank);

std::vector<cplx> vandermonde_lsq(std::span<const cplx> series,
                                  std::span<const cplx> nodes,
                                  SolveFlags* flags = nullptr);

}  // namespace detail

}  // namespace vexpa

#endif

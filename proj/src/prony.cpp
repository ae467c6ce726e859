#include "vexpa/prony.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace vexpa {

Eigen::MatrixXcd build_hankel(const SampleSet& samples, const HankelSpec& spec) {
    const int s = spec.shift, u = spec.undersampling, n = spec.order;
    if (s < 0 || u < 1 || n < 1)
        throw std::invalid_argument("invalid Hankel spec");
    const int max_index = s + (2 * n - 2) * u;
    if (max_index >= samples.size())
        throw std::invalid_argument("insufficient samples for Hankel matrix");
    Eigen::MatrixXcd H(n, n);
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q)
            H(p, q) = samples.values[s + (p + q) * u];
    return H;
}

namespace detail {

std::vector<cplx> esprit_eigenvalues(std::span<const cplx> series, int rank) {
    const int len = static_cast<int>(series.size());
    if (rank < 1) throw std::invalid_argument("esprit rank must be >= 1");
    if (len < rank + 1)
        throw std::invalid_argument("series too short for requested rank");

    // near-square split; keep at least rank columns and rank+1 rows
    int cols = std::clamp((len + 1) / 2, rank, len - rank);
    int rows = len - cols + 1;

    Eigen::MatrixXcd Y(rows, cols);
    for (int p = 0; p < rows; ++p)
        for (int q = 0; q < cols; ++q)
            Y(p, q) = series[p + q];

    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(Y, Eigen::ComputeThinU);
    const auto& sv = svd.singularValues();
    int eff = 0;
    const double tol = sv(0) * 1e-11;
    for (int i = 0; i < sv.size() && i < rank; ++i)
        if (sv(i) > tol) ++eff;
    if (eff == 0) return {};

    Eigen::MatrixXcd W = svd.matrixU().leftCols(eff);
    Eigen::MatrixXcd Wup = W.topRows(rows - 1);
    Eigen::MatrixXcd Wdn = W.bottomRows(rows - 1);
    // shift-invariance: Wup * F ~= Wdn, eigenvalues of F are the nodes
    Eigen::MatrixXcd F = Wup.colPivHouseholderQr().solve(Wdn);
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(F, false);
    std::vector<cplx> out(es.eigenvalues().data(),
                          es.eigenvalues().data() + es.eigenvalues().size());
    return out;
}

std::vector<cplx> vandermonde_lsq(std::span<const cplx> series,
                                  std::span<const cplx> nodes,
                                  SolveFlags* flags) {
    const int rows = static_cast<int>(series.size());
    const int n = static_cast<int>(nodes.size());
    if (n == 0) return {};
    if (rows < n)
        throw std::invalid_argument("underdetermined Vandermonde system");

    double min_gap = std::numeric_limits<double>::infinity();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            min_gap = std::min(min_gap, std::abs(nodes[a] - nodes[b]));
    if (flags) {
        flags->min_node_gap = (n > 1) ? min_gap : 0.0;
        if (n > 1 && min_gap < 1e-8) flags->ill_conditioned = true;
    }

    Eigen::MatrixXcd A(rows, n);
    for (int i = 0; i < n; ++i) {
        cplx p = 1.0;
        for (int j = 0; j < rows; ++j) {
            A(j, i) = p;
            p *= nodes[i];
        }
    }
    Eigen::VectorXd scale(n);
    for (int i = 0; i < n; ++i) {
        double nrm = A.col(i).norm();
        scale(i) = (nrm > 0.0) ? 1.0 / nrm : 1.0;
        A.col(i) *= scale(i);
    }
    Eigen::VectorXcd b = Eigen::Map<const Eigen::VectorXcd>(series.data(), rows);
    Eigen::VectorXcd x = A.colPivHouseholderQr().solve(b);
    std::vector<cplx> out(n);
    for (int i = 0; i < n; ++i) out[i] = x(i) * scale(i);
    return out;
}

}  // namespace detail

namespace {

std::vector<cplx> extract_series(const SampleSet& samples, int u, int offset) {
    if (u < 1 || offset < 0)
        throw std::invalid_argument("invalid decimation parameters");
    std::vector<cplx> series;
    for (int j = offset; j < samples.size(); j += u)
        series.push_back(samples.values[j]);
    return series;
}

std::vector<EigenEstimate> attach_amplitudes(std::vector<cplx> values,
                                             const std::vector<cplx>& series,
                                             EigenKind kind) {
    std::vector<cplx> amps;
    if (!values.empty() && static_cast<int>(series.size()) >= static_cast<int>(values.size()))
        amps = detail::vandermonde_lsq(series, values);
    else
        amps.assign(values.size(), cplx(0.0));
    std::vector<EigenEstimate> out(values.size());
    for (std::size_t i = 0; i < values.size(); ++i)
        out[i] = {values[i], kind, 0, -1, amps[i]};
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return std::abs(a.amplitude) > std::abs(b.amplitude);
    });
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i].term_index = static_cast<int>(i);
    return out;
}

}  // namespace

std::vector<EigenEstimate> solve_gevp(const SampleSet& samples, int u, int n) {
    if (n < 1) throw std::invalid_argument("model order must be >= 1");
    if (2 * n * u > samples.size())
        throw std::invalid_argument("not enough samples for the GEVP pencil");
    Eigen::MatrixXcd H1 = build_hankel(samples, {u, u, n});
    Eigen::MatrixXcd H0 = build_hankel(samples, {0, u, n});

    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(H0);
    const auto& sv = svd.singularValues();
    const double cond = sv(0) / sv(sv.size() - 1);
    if (!(sv(sv.size() - 1) > 0.0) || cond > 1e14)
        throw std::runtime_error("singular pencil: cond(H0) ~ " + std::to_string(cond));

    Eigen::MatrixXcd G = H0.colPivHouseholderQr().solve(H1);
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(G, false);
    std::vector<cplx> values(es.eigenvalues().data(),
                             es.eigenvalues().data() + n);
    return attach_amplitudes(std::move(values), extract_series(samples, u, 0),
                             EigenKind::UAliased);
}

std::vector<EigenEstimate> esprit_estimate(const SampleSet& samples, int u,
                                           int offset, int n, int nu) {
    if (nu < 1) throw std::invalid_argument("nu must be >= 1");
    if (n > nu) throw std::invalid_argument("nu must be >= n");
    auto series = extract_series(samples, u, offset);
    auto values = detail::esprit_eigenvalues(series, nu);
    if (n > 0 && static_cast<int>(values.size()) < n)
        throw std::runtime_error("rank deficient below requested order " +
                                 std::to_string(n));
    return attach_amplitudes(std::move(values), series, EigenKind::UAliased);
}

std::vector<cplx> solve_amplitudes(const SampleSet& samples, int u, int offset,
                                   const std::vector<cplx>& eigenvalues,
                                   SolveFlags* flags) {
    return detail::vandermonde_lsq(extract_series(samples, u, offset),
                                   eigenvalues, flags);
}

int estimate_order_svd(const SampleSet& samples, int nu_max, double rel_tol) {
    if (2 * nu_max > samples.size())
        throw std::invalid_argument("nu_max too large for sample count");
    Eigen::MatrixXcd H = build_hankel(samples, {0, 1, nu_max});
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(H);
    const auto& sv = svd.singularValues();
    int count = 0;
    for (int i = 0; i < sv.size(); ++i)
        if (sv(i) > rel_tol * sv(0)) ++count;
    return count;
}

}  // namespace vexpa

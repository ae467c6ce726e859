#include "vexpa/diagnostics.hpp"

#include <cmath>
#include <stdexcept>

#include "vexpa/prony.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

namespace vexpa {

Eigen::VectorXcd lagrange_coefficients(const std::vector<cplx>& nodes, int i) {
    const int n = static_cast<int>(nodes.size());
    if (i < 0 || i >= n) throw std::invalid_argument("node index out of range");
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (nodes[a] == nodes[b])
                throw std::invalid_argument("coincident Lagrange nodes");

    // expand prod_{j != i} (x - nodes[j]), ascending coefficients
    Eigen::VectorXcd coeff = Eigen::VectorXcd::Zero(n + 1);
    coeff(0) = 1.0;
    int deg = 0;
    cplx denom = 1.0;
    for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        for (int d = deg + 1; d >= 1; --d)
            coeff(d) = coeff(d - 1) - nodes[j] * coeff(d);
        coeff(0) *= -nodes[j];
        ++deg;
        denom *= nodes[i] - nodes[j];
    }
    coeff /= denom;
    return coeff;
}

namespace {

double spectral_norm(const Eigen::MatrixXcd& M) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(M);
    return svd.singularValues()(0);
}

}  // namespace

DisposednessReport disposedness(const SignalModel& model, double delta, int u) {
    const int n = model.order();
    if (n < 1) throw std::invalid_argument("empty model");
    if (u < 1 || delta <= 0.0) throw std::invalid_argument("invalid delta or u");

    std::vector<cplx> nodes(n);
    for (int i = 0; i < n; ++i)
        nodes[i] = std::exp(model.terms[i].mu() * (u * delta));
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (std::abs(nodes[a] - nodes[b]) < 1e-12)
                throw std::runtime_error("aliased node collision at stride " +
                                         std::to_string(u));

    SamplingGrid grid{delta, 1 + (2 * n - 1) * u};
    SampleSet samples = sample(model, grid);
    DisposednessReport rep;
    rep.u = u;
    rep.h1_norm = spectral_norm(build_hankel(samples, {1, u, n}));
    rep.h0_norm = spectral_norm(build_hankel(samples, {0, u, n}));

    for (int i = 0; i < n; ++i) {
        DisposednessEntry e;
        e.lambda = nodes[i];
        e.lagrange_norm = lagrange_coefficients(nodes, i).norm();
        const double a = std::abs(model.terms[i].alpha());
        e.rho = (std::abs(nodes[i]) + 1.0) / a * e.lagrange_norm * e.lagrange_norm *
                (rep.h1_norm + rep.h0_norm);
        rep.entries.push_back(e);
    }
    return rep;
}

Eigen::MatrixXd fisher_matrix(const SignalModel& model, const SamplingGrid& grid,
                              double sigma2) {
    if (sigma2 <= 0.0) throw std::invalid_argument("sigma2 must be positive");
    const int n = model.order();
    const int N = grid.count;
    Eigen::MatrixXcd J(N, 4 * n);
    for (int j = 0; j < N; ++j) {
        const double t = j * grid.delta;
        for (int i = 0; i < n; ++i) {
            const auto& term = model.terms[i];
            const cplx e = std::exp(cplx(0.0, term.gamma) + term.mu() * t);
            const cplx f = term.beta * e;
            J(j, 4 * i + 0) = e;                  // d/d beta
            J(j, 4 * i + 1) = cplx(0.0, 1.0) * f; // d/d gamma
            J(j, 4 * i + 2) = t * f;              // d/d psi
            J(j, 4 * i + 3) = cplx(0.0, t) * f;   // d/d omega
        }
    }
    return (2.0 / sigma2) * (J.adjoint() * J).real();
}

CrlbReport crlb(const SignalModel& model, const SamplingGrid& grid, double sigma2,
                bool allow_pseudo_inverse) {
    const int n = model.order();
    Eigen::MatrixXd F = fisher_matrix(model, grid, sigma2);

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(F);
    const auto& ev = es.eigenvalues();
    const double eps = ev(ev.size() - 1) * 1e-12;

    CrlbReport rep;
    rep.sample_count = grid.count;
    rep.delta = grid.delta;
    rep.sigma2 = sigma2;
    rep.condition = ev(ev.size() - 1) / std::max(ev(0), 1e-300);

    Eigen::MatrixXd Finv;
    if (ev(0) > eps) {
        Finv = F.llt().solve(Eigen::MatrixXd::Identity(4 * n, 4 * n));
    } else if (allow_pseudo_inverse) {
        Eigen::VectorXd inv = ev.unaryExpr(
            [eps](double v) { return v > eps ? 1.0 / v : 0.0; });
        Finv = es.eigenvectors() * inv.asDiagonal() * es.eigenvectors().transpose();
    } else {
        throw std::runtime_error(
            "singular Fisher matrix: model not identifiable at this rate");
    }

    double acc = 0.0;
    for (int i = 0; i < n; ++i) {
        rep.var_beta.push_back(Finv(4 * i + 0, 4 * i + 0));
        rep.var_gamma.push_back(Finv(4 * i + 1, 4 * i + 1));
        rep.var_psi.push_back(Finv(4 * i + 2, 4 * i + 2));
        rep.var_omega.push_back(Finv(4 * i + 3, 4 * i + 3));
        acc += rep.var_omega.back();
    }
    rep.rms_omega = std::sqrt(acc / n);
    return rep;
}

}  // namespace vexpa

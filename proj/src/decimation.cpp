#include "vexpa/decimation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "vexpa/prony.hpp"

namespace vexpa {

std::vector<DecimationSet> decimate(const SampleSet& samples, int u) {
    const int N = samples.size();
    if (u < 1) throw std::invalid_argument("undersampling factor must be >= 1");
    if (2 * u > N) throw std::invalid_argument("u too large for sample count");
    std::vector<DecimationSet> out;
    out.reserve(u);
    for (int k = 0; k < u; ++k) {
        DecimationSet d;
        d.k = k;
        d.u = u;
        const int len = std::min(N / u, (N - k) / u);
        for (int j = 0; j < len; ++j) {
            d.indices.push_back(u * j + k);
            d.values.push_back(samples.values[u * j + k]);
        }
        out.push_back(std::move(d));
    }
    return out;
}

std::vector<ShiftSequence> shifted_amplitudes(const SampleSet& samples, int k,
                                              int u, int s, int M,
                                              const std::vector<cplx>& eigenvalues) {
    if (std::gcd(u, s) != 1)
        throw std::invalid_argument("u and s must be coprime");
    if (M < 2) throw std::invalid_argument("need at least two shifts");
    const int n = static_cast<int>(eigenvalues.size());
    const int N = samples.size();

    std::vector<ShiftSequence> out(n);
    for (int i = 0; i < n; ++i)
        out[i] = {i, k, s, M, std::vector<cplx>(M)};

    for (int m = 0; m < M; ++m) {
        const int base = k + m * s;
        const int rows = (base <= N - 1) ? (N - 1 - base) / u + 1 : 0;
        if (rows < n)
            throw std::invalid_argument("insufficient in-range shifted samples");
        std::vector<cplx> rhs(rows);
        for (int j = 0; j < rows; ++j) rhs[j] = samples.values[base + u * j];
        auto sol = detail::vandermonde_lsq(rhs, eigenvalues);
        for (int i = 0; i < n; ++i) out[i].values[m] = sol[i];
    }
    return out;
}

std::vector<std::pair<cplx, cplx>> recover_shift_eigenvalues(
    const ShiftSequence& seq, int collision_order) {
    if (2 * collision_order > seq.M)
        throw std::invalid_argument("collision order too large for shift count");
    double peak = 0.0;
    for (const auto& v : seq.values) peak = std::max(peak, std::abs(v));
    if (peak < 1e-300) return {};  // degenerate sequence

    auto lambdas = detail::esprit_eigenvalues(seq.values, collision_order);
    if (lambdas.empty()) return {};
    auto amps = detail::vandermonde_lsq(seq.values, lambdas);

    std::vector<std::pair<cplx, cplx>> out(lambdas.size());
    for (std::size_t i = 0; i < lambdas.size(); ++i)
        out[i] = {lambdas[i], amps[i]};
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return std::abs(a.second) > std::abs(b.second);
    });
    return out;
}

namespace {

std::vector<cplx> roots_of(cplx value, int p) {
    const double r = std::pow(std::abs(value), 1.0 / p);
    const double theta = std::arg(value);
    std::vector<cplx> out(p);
    for (int l = 0; l < p; ++l)
        out[l] = std::polar(r, (theta + 2.0 * M_PI * l) / p);
    return out;
}

}  // namespace

CandidateSets candidate_sets(cplx u_lambda, cplx s_lambda, int u, int s) {
    if (u < 1 || s < 1) throw std::invalid_argument("invalid root counts");
    if (u_lambda == cplx(0.0) || s_lambda == cplx(0.0))
        throw std::invalid_argument("zero eigenvalue has no roots on a circle");
    CandidateSets cs;
    cs.u_candidates = roots_of(u_lambda, u);
    cs.s_candidates = roots_of(s_lambda, s);

    double best = std::numeric_limits<double>::infinity();
    double second = best;
    for (const auto& a : cs.u_candidates) {
        for (const auto& b : cs.s_candidates) {
            const double d = std::abs(a - b);
            if (d < best) {
                second = best;
                best = d;
                cs.matched = a;
            } else if (d < second) {
                second = d;
            }
        }
    }
    cs.low_confidence = (second < 2.0 * best);
    return cs;
}

std::pair<long, long> bezout_pair(int u, int s) {
    if (std::gcd(u, s) != 1)
        throw std::invalid_argument("u and s must be coprime");
    // extended Euclid, then shift along the solution line to minimize |w|+|r|
    long w = 1, r = 0, w1 = 0, r1 = 1, a = u, b = s;
    while (b != 0) {
        const long q = a / b;
        std::tie(a, b) = std::make_pair(b, a - q * b);
        std::tie(w, w1) = std::make_pair(w1, w - q * w1);
        std::tie(r, r1) = std::make_pair(r1, r - q * r1);
    }
    auto cost = [&](long t) { return std::labs(w + t * s) + std::labs(r - t * u); };
    long best_t = 0;
    for (long t = -2 * std::max(u, s); t <= 2 * std::max(u, s); ++t)
        if (cost(t) < cost(best_t)) best_t = t;
    return {w + best_t * s, r - best_t * u};
}

namespace {

cplx int_pow(cplx z, long e) {
    if (e < 0) return 1.0 / int_pow(z, -e);
    cplx acc = 1.0;
    while (e > 0) {
        if (e & 1) acc *= z;
        z *= z;
        e >>= 1;
    }
    return acc;
}

}  // namespace

cplx euclid_recover(cplx u_lambda, cplx s_lambda, int u, int s) {
    auto [w, r] = bezout_pair(u, s);
    return int_pow(u_lambda, w) * int_pow(s_lambda, r);
}

std::vector<RecoveredTerm> recover_term(
    cplx u_lambda, const std::vector<std::pair<cplx, cplx>>& shift_results,
    int u, int s, RecoveryStrategy strategy, double dominance_threshold) {
    double peak = 0.0;
    for (const auto& [l, a] : shift_results) peak = std::max(peak, std::abs(a));

    std::vector<RecoveredTerm> out;
    for (const auto& [s_lambda, amp] : shift_results) {
        if (std::abs(amp) < dominance_threshold * peak) continue;
        RecoveredTerm t;
        t.amplitude = amp;
        if (strategy == RecoveryStrategy::Euclid) {
            t.lambda = euclid_recover(u_lambda, s_lambda, u, s);
        } else {
            auto cs = candidate_sets(u_lambda, s_lambda, u, s);
            t.lambda = cs.matched;
            t.low_confidence = cs.low_confidence;
        }
        out.push_back(t);
    }
    return out;
}

}  // namespace vexpa

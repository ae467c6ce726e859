#include "vexpa/signal.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace vexpa {

ExponentialTerm ExponentialTerm::from_alpha_mu(cplx alpha, cplx mu) {
    ExponentialTerm t;
    t.beta = std::abs(alpha);
    t.gamma = std::arg(alpha);
    t.psi = mu.real();
    t.omega = mu.imag();
    return t;
}

cplx evaluate(const SignalModel& model, double t) {
    cplx acc = 0.0;
    for (const auto& term : model.terms)
        acc += term.alpha() * std::exp(term.mu() * t);
    return acc;
}

SampleSet sample(const SignalModel& model, const SamplingGrid& grid) {
    if (grid.delta <= 0.0)
        throw std::invalid_argument("sampling interval must be positive");
    if (grid.count < 2)
        throw std::invalid_argument("need at least two samples");
    SampleSet out;
    out.grid = grid;
    out.values.resize(grid.count);
    for (int j = 0; j < grid.count; ++j)
        out.values[j] = evaluate(model, j * grid.delta);
    return out;
}

double signal_power(const SampleSet& samples) {
    double p = 0.0;
    for (const auto& v : samples.values) p += std::norm(v);
    return p / static_cast<double>(samples.values.size());
}

SampleSet add_noise(const SampleSet& samples, double snr_db, std::uint64_t seed) {
    if (!std::isfinite(snr_db))
        throw std::invalid_argument("snr_db must be finite");
    const double sigma2 = signal_power(samples) / std::pow(10.0, snr_db / 10.0);
    const double comp_sd = std::sqrt(sigma2 / 2.0);

    SampleSet out = samples;
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (auto& v : out.values) {
        // real draw first, then imaginary; the order is part of the format
        double re = gauss(rng);
        double im = gauss(rng);
        v += cplx(comp_sd * re, comp_sd * im);
    }
    out.noise_snr_db = snr_db;
    return out;
}

SampleSet inject_outlier(const SampleSet& samples, int index, cplx offset) {
    if (index < 0 || index >= samples.size())
        throw std::out_of_range("outlier index out of range");
    SampleSet out = samples;
    out.values[index] += offset;
    out.outliers.push_back({index, offset});
    return out;
}

}  // namespace vexpa

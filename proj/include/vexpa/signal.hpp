#ifndef VEXPA_SIGNAL_HPP
#define VEXPA_SIGNAL_HPP

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

namespace vexpa {

using cplx = std::complex<double>;

/// One component of the multi-exponential model:
/// beta * exp(i*gamma) * exp((psi + i*omega) * t).
struct ExponentialTerm {
    double beta = 1.0;   // amplitude, > 0
    double gamma = 0.0;  // phase, (-pi, pi]
    double psi = 0.0;    // damping, 1/time
    double omega = 0.0;  // angular frequency, rad/time

    cplx alpha() const { return std::polar(beta, gamma); }
    cplx mu() const { return {psi, omega}; }

    static ExponentialTerm from_alpha_mu(cplx alpha, cplx mu);
};

struct SignalModel {
    std::vector<ExponentialTerm> terms;

    int order() const { return static_cast<int>(terms.size()); }
};

/// Uniform grid t_j = j * delta, j = 0..count-1. rate() = 1/delta.
struct SamplingGrid {
    double delta = 1.0;
    int count = 0;

    double rate() const { return 1.0 / delta; }
};

struct Outlier {
    int index = 0;
    cplx offset;
};

struct SampleSet {
    SamplingGrid grid;
    std::vector<cplx> values;
    std::optional<double> noise_snr_db;
    std::vector<Outlier> outliers;

    int size() const { return static_cast<int>(values.size()); }
};

cplx evaluate(const SignalModel& model, double t);

SampleSet sample(const SignalModel& model, const SamplingGrid& grid);

/// Adds i.i.d. white circular Gaussian noise with total complex variance
/// sigma^2 = mean|phi_j|^2 / 10^(snr_db/10). Deterministic for fixed seed.
SampleSet add_noise(const SampleSet& samples, double snr_db, std::uint64_t seed);

SampleSet inject_outlier(const SampleSet& samples, int index, cplx offset);

/// Mean of |values[j]|^2.
double signal_power(const SampleSet& samples);

}  // namespace vexpa

#endif

#ifndef VEXPA_PIPELINE_HPP
#define VEXPA_PIPELINE_HPP

#include <set>
#include <string>
#include <vector>

#include "vexpa/cluster.hpp"
#include "vexpa/decimation.hpp"
#include "vexpa/prony.hpp"
#include "vexpa/signal.hpp"

namespace vexpa {

enum class BaseMethod { Esprit, Gevp };

struct VexpaConfig {
    int u = 7;
    int s = 11;
    int M = 8;           // shift count, even
    int nu = 0;          // per-decimation over-model order; 0 = auto
    int nu_cap = 20;
    double delta_u = 0.0;   // DBSCAN radius on the u side; 0 = data driven
    int m_delta_u = 0;      // 0 = default u - 1
    double delta_s = 0.0;   // 0 = same as the u side
    int m_delta_s = 0;      // 0 = default max(2, m_delta_u - 2)
    BaseMethod base_method = BaseMethod::Esprit;
    RecoveryStrategy strategy = RecoveryStrategy::Stabilized;
    double dominance_threshold = 0.1;
    bool parallel = false;

    void validate(int sample_count) const;
};

struct DecimationFailure {
    int k = 0;
    std::string message;
};

struct VexpaResult {
    std::vector<ExponentialTerm> terms;
    std::vector<ValidationRecord> records;  // aligned with terms
    int model_order = 0;
    PointSet points;
    std::vector<Cluster> u_clusters;
    int u_noise_count = 0;
    int unvalidated_u_clusters = 0;
    std::set<int> excluded_decimations;
    std::vector<DecimationFailure> failures;
    double dbscan_delta_u = 0.0;
    double dbscan_delta_s = 0.0;
    int m_delta_u = 0;
    int m_delta_s = 0;
    int nu_used = 0;
};

VexpaResult run_vexpa(const SampleSet& samples, const VexpaConfig& config);

/// Full-rate Vandermonde least squares for the final coefficients, skipping
/// every sample index that belongs to an excluded decimation.
std::vector<cplx> final_amplitudes(const SampleSet& samples,
                                   const std::vector<cplx>& lambdas,
                                   const std::set<int>& excluded_decimations,
                                   int u);

/// Stand-alone full-rate analysis with the model order supplied.
std::vector<ExponentialTerm> run_baseline(const SampleSet& samples, int n,
                                          BaseMethod method = BaseMethod::Esprit);

/// Principal-branch conversion lambda -> model term parameters (without
/// amplitude): mu = Log(lambda) / delta.
cplx lambda_to_mu(cplx lambda, double delta);

}  // namespace vexpa

#endif

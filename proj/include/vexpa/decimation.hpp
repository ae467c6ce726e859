#ifndef VEXPA_DECIMATION_HPP
#define VEXPA_DECIMATION_HPP

#include <utility>
#include <vector>

#include "vexpa/signal.hpp"

namespace vexpa {

/// Decimated sub-signal Phi_k = { phi_{uj+k} }.
struct DecimationSet {
    int k = 0;
    int u = 1;
    std::vector<int> indices;
    std::vector<cplx> values;

    int size() const { return static_cast<int>(values.size()); }
};

/// Sequence of shifted-system coefficients for one term of one decimation:
/// values[m] solves the m-th shifted Vandermonde system.
struct ShiftSequence {
    int term_index = 0;
    int decimation_index = 0;
    int s = 1;
    int M = 2;
    std::vector<cplx> values;
};

struct CandidateSets {
    std::vector<cplx> u_candidates;  // u-th roots of the u-aliased eigenvalue
    std::vector<cplx> s_candidates;  // s-th roots of the shift eigenvalue
    cplx matched;                    // closest-pair value, taken from the U side
    bool low_confidence = false;     // runner-up pair within 2x of the best
};

enum class RecoveryStrategy { Distance, Euclid, Stabilized };

struct RecoveredTerm {
    cplx lambda;
    cplx amplitude;
    bool low_confidence = false;
};

std::vector<DecimationSet> decimate(const SampleSet& samples, int u);

/// Solves, for m = 0..M-1, the least squares systems
///   phi_{k + ms + uj} = sum_i values_m[i] * eigenvalues[i]^j
/// over every in-range j and regroups the solutions per term.
std::vector<ShiftSequence> shifted_amplitudes(const SampleSet& samples, int k,
                                              int u, int s, int M,
                                              const std::vector<cplx>& eigenvalues);

/// Prony analysis of a shift sequence; returns (shift eigenvalue, amplitude)
/// pairs sorted by descending amplitude magnitude. Empty when the sequence
/// is degenerate (all entries ~ 0).
std::vector<std::pair<cplx, cplx>> recover_shift_eigenvalues(
    const ShiftSequence& seq, int collision_order);

CandidateSets candidate_sets(cplx u_lambda, cplx s_lambda, int u, int s);

/// Bezout recovery: with w*u + r*s = 1 (|w|+|r| minimal),
/// u_lambda^w * s_lambda^r equals the de-aliased eigenvalue.
cplx euclid_recover(cplx u_lambda, cplx s_lambda, int u, int s);

/// Extended Euclid pair with minimal |w| + |r|.
std::pair<long, long> bezout_pair(int u, int s);

/// De-aliases every dominant shift eigenvalue against u_lambda.
/// dominance_threshold filters shift_results by amplitude magnitude
/// relative to the largest one.
std::vector<RecoveredTerm> recover_term(
    cplx u_lambda, const std::vector<std::pair<cplx, cplx>>& shift_results,
    int u, int s, RecoveryStrategy strategy, double dominance_threshold = 0.1);

}  // namespace vexpa

#endif

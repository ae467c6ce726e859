#ifndef VEXPA_CLUSTER_HPP
#define VEXPA_CLUSTER_HPP

#include <set>
#include <vector>

#include "vexpa/signal.hpp"

namespace vexpa {

enum class Side { U, S };

/// Pooled eigenvalue with provenance; s-side points link to their u-side
/// originator through (k, i).
struct LabeledPoint {
    cplx value;
    int k = 0;     // decimation index
    int i = 0;     // term index within the decimation
    Side side = Side::U;
};

struct PointSet {
    std::vector<LabeledPoint> u_points;
    std::vector<LabeledPoint> s_points;
};

struct Cluster {
    std::vector<int> members;  // indices into the clustered point list
    cplx centroid;
    double radius = 0.0;
    int cardinality() const { return static_cast<int>(members.size()); }
};

struct DbscanResult {
    std::vector<Cluster> clusters;
    std::vector<int> noise;
    std::vector<int> labels;  // cluster id per point, -1 for noise
};

struct LinkedCluster {
    Cluster u_cluster;
    std::vector<LabeledPoint> u_members;
    std::vector<LabeledPoint> s_points;   // linked s-side points
    DbscanResult s_clustering;
};

enum class Scenario { Standard, Outlier, Collision };

struct ValidationRecord {
    cplx lambda;               // de-aliased full-rate eigenvalue
    cplx u_centroid, s_centroid;
    int u_cluster_count = 0;
    int s_cluster_count = 0;
    double u_radius = 0.0;
    double s_radius = 0.0;
    Scenario scenario = Scenario::Standard;
    std::set<int> contributing;  // decimation indices in the u-cluster
    bool low_confidence = false;
};

/// Standard DBSCAN in the complex plane; a core point has >= m_delta
/// neighbours (itself included) within delta. Border points go to the
/// first cluster reaching them, in input order.
DbscanResult dbscan(const std::vector<cplx>& points, double delta, int m_delta);

std::vector<LinkedCluster> link_clusters(const DbscanResult& u_result,
                                         const PointSet& points,
                                         double delta_s, int m_delta_s);

/// Converts linked clusters into validated terms: one record per s-side
/// cluster (collisions yield several records per u-cluster). u-clusters
/// with no s-cluster are dropped as unvalidated.
std::vector<ValidationRecord> classify_and_validate(
    const std::vector<LinkedCluster>& linked, int u, int s);

}  // namespace vexpa

#endif

#include "vexpa/cluster.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <stdexcept>

#include "vexpa/decimation.hpp"

namespace vexpa {

namespace {

void finalize_cluster(const std::vector<cplx>& points, Cluster& c) {
    cplx sum = 0.0;
    for (int idx : c.members) sum += points[idx];
    c.centroid = sum / static_cast<double>(c.members.size());
    c.radius = 0.0;
    for (int idx : c.members)
        c.radius = std::max(c.radius, std::abs(points[idx] - c.centroid));
}

}  // namespace

DbscanResult dbscan(const std::vector<cplx>& points, double delta, int m_delta) {
    if (delta <= 0.0) throw std::invalid_argument("delta must be positive");
    if (m_delta < 1) throw std::invalid_argument("m_delta must be >= 1");
    const int n = static_cast<int>(points.size());

    std::vector<std::vector<int>> nbrs(n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (std::abs(points[a] - points[b]) <= delta) nbrs[a].push_back(b);

    DbscanResult res;
    res.labels.assign(n, -2);  // -2 unvisited, -1 noise
    for (int p = 0; p < n; ++p) {
        if (res.labels[p] != -2) continue;
        if (static_cast<int>(nbrs[p].size()) < m_delta) {
            res.labels[p] = -1;
            continue;
        }
        const int cid = static_cast<int>(res.clusters.size());
        res.labels[p] = cid;
        std::deque<int> seeds(nbrs[p].begin(), nbrs[p].end());
        while (!seeds.empty()) {
            const int q = seeds.front();
            seeds.pop_front();
            if (res.labels[q] == -1) res.labels[q] = cid;  // border point
            if (res.labels[q] != -2) continue;
            res.labels[q] = cid;
            if (static_cast<int>(nbrs[q].size()) >= m_delta)
                seeds.insert(seeds.end(), nbrs[q].begin(), nbrs[q].end());
        }
        Cluster c;
        for (int q = 0; q < n; ++q)
            if (res.labels[q] == cid) c.members.push_back(q);
        finalize_cluster(points, c);
        res.clusters.push_back(std::move(c));
    }
    for (int p = 0; p < n; ++p)
        if (res.labels[p] == -1) res.noise.push_back(p);
    return res;
}

std::vector<LinkedCluster> link_clusters(const DbscanResult& u_result,
                                         const PointSet& points,
                                         double delta_s, int m_delta_s) {
    std::vector<LinkedCluster> out;
    for (const auto& uc : u_result.clusters) {
        LinkedCluster lc;
        lc.u_cluster = uc;
        for (int idx : uc.members) lc.u_members.push_back(points.u_points[idx]);
        for (const auto& sp : points.s_points) {
            const bool linked = std::any_of(
                lc.u_members.begin(), lc.u_members.end(),
                [&](const LabeledPoint& up) { return up.k == sp.k && up.i == sp.i; });
            if (linked) lc.s_points.push_back(sp);
        }
        std::vector<cplx> vals;
        vals.reserve(lc.s_points.size());
        for (const auto& sp : lc.s_points) vals.push_back(sp.value);
        lc.s_clustering = dbscan(vals, delta_s, m_delta_s);
        out.push_back(std::move(lc));
    }
    return out;
}

std::vector<ValidationRecord> classify_and_validate(
    const std::vector<LinkedCluster>& linked, int u, int s) {
    std::vector<ValidationRecord> out;
    for (const auto& lc : linked) {
        const auto& sres = lc.s_clustering;
        if (sres.clusters.empty()) continue;  // unvalidated

        Scenario scenario = Scenario::Standard;
        if (sres.clusters.size() > 1)
            scenario = Scenario::Collision;
        else if (!sres.noise.empty() ||
                 sres.clusters[0].cardinality() != lc.u_cluster.cardinality())
            scenario = Scenario::Outlier;

        for (const auto& sc : sres.clusters) {
            ValidationRecord rec;
            rec.u_centroid = lc.u_cluster.centroid;
            rec.s_centroid = sc.centroid;
            rec.u_cluster_count = lc.u_cluster.cardinality();
            rec.s_cluster_count = sc.cardinality();
            rec.u_radius = lc.u_cluster.radius;
            rec.s_radius = sc.radius;
            rec.scenario = scenario;
            for (const auto& up : lc.u_members) rec.contributing.insert(up.k);
            auto cs = candidate_sets(rec.u_centroid, rec.s_centroid, u, s);
            rec.lambda = cs.matched;
            rec.low_confidence = cs.low_confidence;
            out.push_back(std::move(rec));
        }
    }
    return out;
}

}  // namespace vexpa

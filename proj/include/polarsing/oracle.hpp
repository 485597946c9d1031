#pragma once

#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "polarsing/cluster.hpp"

namespace polarsing {

// Multiplicity cluster of the singular points of a curve.
class CurveCluster {
public:
    static CurveCluster from(WeightedCluster k);
    // Reasons k is not a valid singular-point cluster; empty when it is.
    static std::vector<std::string> violations(const WeightedCluster& k);

    const WeightedCluster& cluster() const { return cluster_; }
    const ArenaTree& tree() const { return cluster_.tree(); }

private:
    explicit CurveCluster(WeightedCluster k) : cluster_(std::move(k)) {}
    WeightedCluster cluster_;
};

BigInt free_count_first_neighbourhood(const CurveCluster& curve, PointId p);
std::set<PointId> rupture_points(const CurveCluster& curve);

struct InvariantQuotient {
    Rational value;
    bool partial = false;  // some point of K(p) had no multiplicity and counted as zero
};

// [xi.K(p)] / nu_O(K(p)) for any multiplicity cluster.
InvariantQuotient invariant_quotient(const WeightedCluster& curve, PointId p);
inline InvariantQuotient invariant_quotient(const CurveCluster& curve, PointId p) {
    return invariant_quotient(curve.cluster(), p);
}

std::set<Rational> polar_invariants(const CurveCluster& curve);
std::set<Rational> polar_invariants_local(const CurveCluster& curve, PointId p);

struct GrowthSample {
    PointId p;   // free, not the origin
    PointId q1;  // p-satellite
    PointId q2;  // p or a p-satellite, q1 < q2
};

struct GrowthViolation {
    GrowthSample sample;
    std::string what;
};

// `curve` must weight every point of the arena lying on the curve (singular or not).
// Branch clusters, when given, enable the second equality criterion.
std::vector<GrowthViolation> check_growth(const WeightedCluster& curve,
                                          const std::vector<GrowthSample>& samples,
                                          const std::vector<WeightedCluster>& branches = {});

struct RandomCurve {
    std::unique_ptr<ArenaTree> tree;
    WeightedCluster full;                   // every arena point on the curve
    CurveCluster curve;                     // singular points only
    std::vector<WeightedCluster> branches;  // multiplicity clusters K(a) of each branch
};

RandomCurve random_curve(std::uint64_t seed, std::size_t max_points, std::uint32_t max_multiplicity);

}  // namespace polarsing

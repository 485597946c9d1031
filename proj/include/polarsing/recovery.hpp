#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "polarsing/polar_morphism.hpp"

namespace polarsing {

struct DicriticalAssociation {
    PointId dicritical;
    Rational invariant;     // I_d
    PointId base_free_point;  // p_d
    PointId rupture_point;    // q_d
    friend bool operator==(const DicriticalAssociation&, const DicriticalAssociation&) = default;
};

enum class WalkDecision { First, Second, Stop };

struct WalkStep {
    PointId dicritical;
    PointId point;
    BigInt m;
    BigInt n;
    WalkDecision decision;
};

// "p3 12/1 >I→first"
std::string format_walk_step(const std::string& name, const WalkStep& step);
std::string format_walk_step(const ArenaTree& tree, const WalkStep& step);

struct RecoveryResult {
    std::set<PointId> rupture;
    std::set<PointId> singular;
    WeightedCluster values;
    WeightedCluster multiplicities;
    std::vector<DicriticalAssociation> association;  // ordered by dicritical
    std::set<PointId> created;
    std::map<PointId, HeightPair> heights;  // n, m on the singular points
    std::vector<std::string> warnings;
};

// Carries the associations computed before the failure.
class RecoveryError : public Error {
public:
    RecoveryError(const Error& cause, std::vector<DicriticalAssociation> partial);
    const std::vector<DicriticalAssociation>& partial() const { return partial_; }

private:
    std::vector<DicriticalAssociation> partial_;
};

enum class Algorithm { Basic, Grouped };

struct Topology {
    std::set<PointId> rupture;
    std::set<PointId> singular;
    std::vector<DicriticalAssociation> association;
    std::vector<std::string> warnings;
};

Rational dicritical_invariant(const WeightedCluster& bp, MorphismInvariants& inv, PointId d);
std::pair<PointId, PointId> base_free_point(const WeightedCluster& bp, MorphismInvariants& inv,
                                            PointId d, const Rational& invariant);
PointId satellite_walk(ArenaTree& tree, MorphismInvariants& inv, PointId p, const Rational& invariant,
                       std::vector<WalkStep>* trace = nullptr, PointId dicritical = PointId{});

Topology recover_topology(ArenaTree& tree, const WeightedCluster& bp, MorphismInvariants& inv,
                          Algorithm algorithm = Algorithm::Basic,
                          std::vector<WalkStep>* trace = nullptr);
WeightedCluster recover_values(const ArenaTree& tree, MorphismInvariants& inv,
                               const std::set<PointId>& rupture, const std::set<PointId>& singular);

// bp must live in `tree`; recovery may append satellite points to it.
RecoveryResult recover(ArenaTree& tree, const WeightedCluster& bp,
                       std::vector<WalkStep>* trace = nullptr);
RecoveryResult recover_grouped(ArenaTree& tree, const WeightedCluster& bp,
                               std::vector<WalkStep>* trace = nullptr);
RecoveryResult recover_with(Algorithm algorithm, ArenaTree& tree, const WeightedCluster& bp,
                            std::vector<WalkStep>* trace = nullptr);

// Free points of S: true when some branch passes the point and is non-singular right after.
std::map<PointId, bool> classify_free_points(const ArenaTree& tree, const RecoveryResult& result);

}  // namespace polarsing

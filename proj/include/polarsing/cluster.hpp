#pragma once

#include <map>
#include <set>
#include <string_view>
#include <vector>

#include "polarsing/arena.hpp"
#include "polarsing/numeric.hpp"

namespace polarsing {

enum class WeightKind { Virtual, Multiplicity, Value };

std::string_view to_string(WeightKind kind);
WeightKind parse_weight_kind(std::string_view text);

// Downward-closed weighted set of points of one arena.
class WeightedCluster {
public:
    // `carriers` may hold weight 0, and only in Virtual clusters.
    WeightedCluster(const ArenaTree& tree, WeightKind kind, std::map<PointId, BigInt> weights,
                    std::set<PointId> carriers = {});

    const ArenaTree& tree() const { return *tree_; }
    WeightKind kind() const { return kind_; }
    bool contains(PointId p) const { return weights_.count(p) != 0; }
    const BigInt& weight(PointId p) const;
    // Weight, or zero off the cluster.
    BigInt weight_or_zero(PointId p) const;
    const std::map<PointId, BigInt>& weights() const { return weights_; }
    std::vector<PointId> points() const;
    std::size_t size() const { return weights_.size(); }
    bool empty() const { return weights_.empty(); }

    friend bool operator==(const WeightedCluster& a, const WeightedCluster& b) {
        return a.tree_ == b.tree_ && a.kind_ == b.kind_ && a.weights_ == b.weights_;
    }

private:
    const ArenaTree* tree_;
    WeightKind kind_;
    std::map<PointId, BigInt> weights_;
};

WeightedCluster values_from_multiplicities(const WeightedCluster& k);
WeightedCluster multiplicities_from_values(const WeightedCluster& k);

// rho_p = w_p - sum of w_q over q in K proximate to p.
BigInt excess(const WeightedCluster& k, PointId p);
std::map<PointId, BigInt> excesses(const WeightedCluster& k);
std::set<PointId> dicritical_points(const WeightedCluster& k);
bool is_consistent(const WeightedCluster& k);

// K(p): the irreducible cluster of the points <= p.
WeightedCluster unibranch_chain(const ArenaTree& tree, PointId p);

BigInt noether_pairing(const WeightedCluster& a, const WeightedCluster& b);
BigInt self_intersection(const WeightedCluster& k);

// Pointwise sum of two clusters of one kind over one arena.
WeightedCluster cluster_sum(const WeightedCluster& a, const WeightedCluster& b);
// Same weights, reinterpreted as another kind.
WeightedCluster with_kind(const WeightedCluster& k, WeightKind kind);

}  // namespace polarsing

#include "polarsing/cluster.hpp"

#include <string>

namespace polarsing {

std::string_view to_string(WeightKind kind) {
    switch (kind) {
        case WeightKind::Virtual: return "virtual";
        case WeightKind::Multiplicity: return "multiplicity";
        case WeightKind::Value: return "value";
    }
    return "virtual";
}

WeightKind parse_weight_kind(std::string_view text) {
    if (text == "virtual") return WeightKind::Virtual;
    if (text == "multiplicity") return WeightKind::Multiplicity;
    if (text == "value") return WeightKind::Value;
    throw Error(ErrorCode::WrongKind, "unknown weight kind '" + std::string(text) + "'");
}

WeightedCluster::WeightedCluster(const ArenaTree& tree, WeightKind kind,
                                 std::map<PointId, BigInt> weights, std::set<PointId> carriers)
    : tree_(&tree), kind_(kind), weights_(std::move(weights)) {
    if (!carriers.empty() && kind != WeightKind::Virtual)
        throw Error(ErrorCode::InvalidWeight, "carrier points exist only in virtual clusters");
    for (const auto& [p, w] : weights_) {
        if (!tree.contains(p)) throw Error(ErrorCode::UnknownPoint, "#" + std::to_string(p.value));
        const BigInt floor = carriers.count(p) ? 0 : 1;
        if (w < floor)
            throw Error(ErrorCode::InvalidWeight,
                        tree.name(p) + " has weight " + w.str() + " in a " +
                            std::string(to_string(kind)) + " cluster");
        auto parent = tree.parent(p);
        if (parent && !weights_.count(*parent))
            throw Error(ErrorCode::NotDownwardClosed,
                        tree.name(p) + " is weighted but its parent " + tree.name(*parent) +
                            " is not");
    }
}

const BigInt& WeightedCluster::weight(PointId p) const {
    auto it = weights_.find(p);
    if (it == weights_.end())
        throw Error(ErrorCode::PointNotInCluster,
                    tree_->contains(p) ? tree_->name(p) : "#" + std::to_string(p.value));
    return it->second;
}

BigInt WeightedCluster::weight_or_zero(PointId p) const {
    auto it = weights_.find(p);
    return it == weights_.end() ? BigInt(0) : it->second;
}

std::vector<PointId> WeightedCluster::points() const {
    std::vector<PointId> out;
    out.reserve(weights_.size());
    for (const auto& kv : weights_) out.push_back(kv.first);
    return out;
}

WeightedCluster values_from_multiplicities(const WeightedCluster& k) {
    if (k.kind() != WeightKind::Multiplicity)
        throw Error(ErrorCode::WrongKind, "values_from_multiplicities needs multiplicities");
    std::map<PointId, BigInt> v;
    // Map iteration is in id order, which is topological.
    for (const auto& [p, e] : k.weights()) {
        BigInt total = e;
        for (auto q : k.tree().proximities(p)) total += v.at(q);
        v.emplace(p, std::move(total));
    }
    return WeightedCluster(k.tree(), WeightKind::Value, std::move(v));
}

WeightedCluster multiplicities_from_values(const WeightedCluster& k) {
    if (k.kind() != WeightKind::Value)
        throw Error(ErrorCode::WrongKind, "multiplicities_from_values needs values");
    std::map<PointId, BigInt> e;
    for (const auto& [p, v] : k.weights()) {
        BigInt rest = v;
        for (auto q : k.tree().proximities(p)) rest -= k.weight(q);
        if (rest < 1)
            throw Error(ErrorCode::NonPositiveMultiplicity,
                        k.tree().name(p) + " gets multiplicity " + rest.str());
        e.emplace(p, std::move(rest));
    }
    return WeightedCluster(k.tree(), WeightKind::Multiplicity, std::move(e));
}

std::map<PointId, BigInt> excesses(const WeightedCluster& k) {
    std::map<PointId, BigInt> rho = k.weights();
    for (const auto& [q, w] : k.weights())
        for (auto p : k.tree().proximities(q)) rho.at(p) -= w;
    return rho;
}

BigInt excess(const WeightedCluster& k, PointId p) {
    BigInt rho = k.weight(p);
    for (const auto& [q, w] : k.weights())
        if (k.tree().is_proximate(q, p)) rho -= w;
    return rho;
}

std::set<PointId> dicritical_points(const WeightedCluster& k) {
    std::set<PointId> out;
    for (const auto& [p, rho] : excesses(k))
        if (rho > 0) out.insert(p);
    return out;
}

bool is_consistent(const WeightedCluster& k) {
    for (const auto& kv : excesses(k))
        if (kv.second < 0) return false;
    return true;
}

WeightedCluster unibranch_chain(const ArenaTree& tree, PointId p) {
    const auto chain = tree.ancestors(p);
    std::map<PointId, BigInt> acc;
    std::map<PointId, BigInt> nu;
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
        BigInt w = acc[*it];
        if (*it == p) w += 1;
        for (auto q : tree.proximities(*it)) acc[q] += w;
        nu.emplace(*it, std::move(w));
    }
    return WeightedCluster(tree, WeightKind::Virtual, std::move(nu));
}

namespace {

void require_same_arena(const WeightedCluster& a, const WeightedCluster& b) {
    if (&a.tree() != &b.tree())
        throw Error(ErrorCode::ArenaMismatch, "clusters live in different arenas");
}

}  // namespace

BigInt noether_pairing(const WeightedCluster& a, const WeightedCluster& b) {
    require_same_arena(a, b);
    if (a.kind() == WeightKind::Value || b.kind() == WeightKind::Value)
        throw Error(ErrorCode::WrongKind, "values do not enter the Noether pairing");
    const auto& small = a.size() <= b.size() ? a : b;
    const auto& large = a.size() <= b.size() ? b : a;
    BigInt total = 0;
    for (const auto& [p, w] : small.weights()) {
        auto it = large.weights().find(p);
        if (it != large.weights().end()) total += w * it->second;
    }
    return total;
}

BigInt self_intersection(const WeightedCluster& k) { return noether_pairing(k, k); }

WeightedCluster cluster_sum(const WeightedCluster& a, const WeightedCluster& b) {
    require_same_arena(a, b);
    if (a.kind() != b.kind()) throw Error(ErrorCode::WrongKind, "cannot add clusters of distinct kinds");
    auto w = a.weights();
    for (const auto& [p, x] : b.weights()) w[p] += x;
    return WeightedCluster(a.tree(), a.kind(), std::move(w));
}

WeightedCluster with_kind(const WeightedCluster& k, WeightKind kind) {
    return WeightedCluster(k.tree(), kind, k.weights());
}

}  // namespace polarsing

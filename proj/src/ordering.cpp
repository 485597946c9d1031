#include "polarsing/ordering.hpp"

#include <string>

namespace polarsing {

std::string_view to_string(PrecComparison c) {
    switch (c) {
        case PrecComparison::Less: return "Less";
        case PrecComparison::Equal: return "Equal";
        case PrecComparison::Greater: return "Greater";
        case PrecComparison::Incomparable: return "Incomparable";
    }
    return "Incomparable";
}

PointId defining_free_point(const ArenaTree& tree, PointId q) {
    PointId cur = q;
    while (tree.is_satellite(cur)) cur = *tree.parent(cur);
    return cur;
}

bool is_satellite_of(const ArenaTree& tree, PointId q, PointId p) {
    return tree.is_satellite(q) && defining_free_point(tree, q) == p;
}

Rational fraction_at(const ArenaTree& tree, PointId q, PointId p) {
    if (!tree.precedes(p, q)) return Rational(0);
    auto k = unibranch_chain(tree, q);
    return make_rational(k.weight(p), k.weight(*tree.origin()));
}

SatelliteQuotient satellite_quotient(const ArenaTree& tree, PointId q) {
    PointId p = defining_free_point(tree, q);
    return SatelliteQuotient{p, fraction_at(tree, q, p)};
}

namespace {

bool not_greater(const ArenaTree& tree, PointId pa, const Rational& fa, PointId b) {
    return tree.precedes(pa, defining_free_point(tree, b)) && fa <= fraction_at(tree, b, pa);
}

}  // namespace

PrecComparison prec_compare(const ArenaTree& tree, PointId q1, PointId q2) {
    tree.record(q1);
    tree.record(q2);
    if (q1 == q2) return PrecComparison::Equal;
    const auto s1 = satellite_quotient(tree, q1);
    const auto s2 = satellite_quotient(tree, q2);
    const bool less = not_greater(tree, s1.defining_free_point, s1.fraction, q2);
    const bool greater = not_greater(tree, s2.defining_free_point, s2.fraction, q1);
    if (less && greater)
        throw Error(ErrorCode::NotComparable, "distinct points " + tree.name(q1) + ", " +
                                                  tree.name(q2) + " share a satellite quotient");
    if (less) return PrecComparison::Less;
    if (greater) return PrecComparison::Greater;
    return PrecComparison::Incomparable;
}

namespace {

// Proximities of a satellite point as (smaller, larger) under the order.
std::pair<PointId, PointId> ordered_proximities(const ArenaTree& tree, PointId q) {
    PointId a = *tree.parent(q);
    PointId b = *tree.second_proximity(q);
    switch (prec_compare(tree, a, b)) {
        case PrecComparison::Less: return {a, b};
        case PrecComparison::Greater: return {b, a};
        default:
            throw Error(ErrorCode::NotComparable,
                        "proximities of " + tree.name(q) + " are not comparable");
    }
}

PointId find_or_create(ArenaTree& tree, PointId parent, PointId second) {
    if (auto found = tree.find_satellite_child(parent, second)) return *found;
    return tree.add_point(parent, second);
}

}  // namespace

PointId first_satellite(ArenaTree& tree, PointId q) {
    if (tree.is_origin(q))
        throw Error(ErrorCode::OriginHasNoSatellite, "the origin has no satellite points");
    if (tree.is_free(q)) return find_or_create(tree, q, *tree.parent(q));
    return find_or_create(tree, q, ordered_proximities(tree, q).first);
}

PointId second_satellite(ArenaTree& tree, PointId q) {
    if (tree.is_free(q))
        throw Error(ErrorCode::SecondSatelliteOfFreePoint,
                    tree.name(q) + " is free and has no second satellite");
    return find_or_create(tree, q, ordered_proximities(tree, q).second);
}

PointId max_under_prec(const ArenaTree& tree, const std::set<PointId>& points) {
    if (points.empty()) throw Error(ErrorCode::EmptySet, "no points to compare");
    PointId best = *points.begin();
    for (auto p : points) {
        switch (prec_compare(tree, best, p)) {
            case PrecComparison::Less: best = p; break;
            case PrecComparison::Incomparable:
                throw Error(ErrorCode::NotComparable,
                            tree.name(best) + " and " + tree.name(p) + " are not comparable");
            default: break;
        }
    }
    return best;
}

bool compare_point_to_branch(const ArenaTree& tree, PointId q, const WeightedCluster& branch) {
    if (&branch.tree() != &tree) throw Error(ErrorCode::ArenaMismatch, "branch lives elsewhere");
    for (auto p : branch.points()) {
        int in_branch = 0;
        for (auto c : tree.children(p)) in_branch += branch.contains(c);
        if (in_branch > 1)
            throw Error(ErrorCode::NotUnibranch, tree.name(p) + " has two successors in the branch");
    }
    const PointId p = defining_free_point(tree, q);
    if (!branch.contains(p)) return false;
    const auto o = *tree.origin();
    return fraction_at(tree, q, p) < make_rational(branch.weight(p), branch.weight(o));
}

}  // namespace polarsing

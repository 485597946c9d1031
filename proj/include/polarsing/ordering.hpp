#pragma once

#include <set>

#include "polarsing/cluster.hpp"

namespace polarsing {

struct SatelliteQuotient {
    PointId defining_free_point;
    Rational fraction;  // nu_p(K(q)) / nu_O(K(q))
    friend bool operator==(const SatelliteQuotient&, const SatelliteQuotient&) = default;
};

enum class PrecComparison { Less, Equal, Greater, Incomparable };

std::string_view to_string(PrecComparison c);

// Last free point <= q.
PointId defining_free_point(const ArenaTree& tree, PointId q);
bool is_satellite_of(const ArenaTree& tree, PointId q, PointId p);
SatelliteQuotient satellite_quotient(const ArenaTree& tree, PointId q);
// nu_p(K(q)) / nu_O(K(q)); zero when p is not <= q.
Rational fraction_at(const ArenaTree& tree, PointId q, PointId p);

PrecComparison prec_compare(const ArenaTree& tree, PointId q1, PointId q2);
inline bool prec_less(const ArenaTree& tree, PointId a, PointId b) {
    return prec_compare(tree, a, b) == PrecComparison::Less;
}

// Find-or-create navigation; may append to the arena.
PointId first_satellite(ArenaTree& tree, PointId q);
PointId second_satellite(ArenaTree& tree, PointId q);

PointId max_under_prec(const ArenaTree& tree, const std::set<PointId>& points);

// q smaller than the branch: the defining free point p of q lies on the branch and
// nu_p(K(q))/nu_O(K(q)) < e_p/e_O.
bool compare_point_to_branch(const ArenaTree& tree, PointId q, const WeightedCluster& branch);

}  // namespace polarsing

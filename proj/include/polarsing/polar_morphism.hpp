#pragma once

#include <optional>
#include <vector>

#include "polarsing/cluster.hpp"

namespace polarsing {

struct HeightPair {
    BigInt n;  // multiplicity of the composite morphism
    BigInt m;  // height
    friend bool operator==(const HeightPair&, const HeightPair&) = default;
};

// n_p and m_p over the base-point cluster, extended lazily to points outside it.
class MorphismInvariants {
public:
    static MorphismInvariants compute(const WeightedCluster& bp);

    const WeightedCluster& bp() const { return *bp_; }
    const ArenaTree& tree() const { return bp_->tree(); }

    const HeightPair& extend_to(PointId p);
    Rational height_quotient(PointId p);
    bool contains(PointId p) const;
    // Requires p in the domain.
    const HeightPair& at(PointId p) const;
    BigInt jacobian_multiplicity_check(PointId p) const;
    // e_p of the generic polar: nu_p(BP) on BP, zero elsewhere.
    BigInt polar_multiplicity(PointId p) const { return bp_->weight_or_zero(p); }

private:
    explicit MorphismInvariants(const WeightedCluster& bp) : bp_(&bp) {}
    const HeightPair& fill(PointId p);

    const WeightedCluster* bp_;
    std::vector<std::optional<HeightPair>> table_;
};

}  // namespace polarsing

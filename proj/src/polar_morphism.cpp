#include "polarsing/polar_morphism.hpp"

#include <string>

namespace polarsing {

MorphismInvariants MorphismInvariants::compute(const WeightedCluster& bp) {
    if (bp.kind() != WeightKind::Virtual)
        throw Error(ErrorCode::WrongKind, "base points carry virtual multiplicities");
    const auto o = bp.tree().origin();
    if (!o || !bp.contains(*o) || bp.weight(*o) < 1)
        throw Error(ErrorCode::InvalidWeight, "the base-point cluster needs nu_O >= 1");
    if (!is_consistent(bp)) throw Error(ErrorCode::InconsistentCluster, "base points are not consistent");
    MorphismInvariants inv(bp);
    for (auto p : bp.points()) inv.fill(p);
    return inv;
}

bool MorphismInvariants::contains(PointId p) const {
    return p.value < table_.size() && table_[p.value].has_value();
}

const HeightPair& MorphismInvariants::at(PointId p) const {
    if (!contains(p)) throw Error(ErrorCode::UnknownPoint, "no heights for #" + std::to_string(p.value));
    return *table_[p.value];
}

const HeightPair& MorphismInvariants::fill(PointId p) {
    if (contains(p)) return *table_[p.value];
    const auto& t = tree();
    const BigInt e = polar_multiplicity(p);
    HeightPair h;
    if (t.is_origin(p)) {
        h = {1, e + 1};
    } else if (t.is_free(p)) {
        const auto& prev = at(*t.parent(p));
        h = {prev.n, prev.m + e + 1};
    } else {
        const auto& a = at(*t.parent(p));
        const auto& b = at(*t.second_proximity(p));
        h = {a.n + b.n, a.m + b.m + e};
    }
    if (table_.size() <= p.value) table_.resize(t.size());
    table_[p.value] = std::move(h);
    return *table_[p.value];
}

const HeightPair& MorphismInvariants::extend_to(PointId p) {
    for (auto q : tree().ancestors(p)) fill(q);
    return at(p);
}

Rational MorphismInvariants::height_quotient(PointId p) {
    const auto& h = extend_to(p);
    return make_rational(h.m, h.n);
}

BigInt MorphismInvariants::jacobian_multiplicity_check(PointId p) const {
    const auto& t = tree();
    const auto& h = at(p);
    if (t.is_origin(p)) return h.m + h.n - 2;
    const auto& a = at(*t.parent(p));
    if (t.is_free(p)) return h.m + h.n - a.m - a.n - 1;
    const auto& b = at(*t.second_proximity(p));
    return h.m + h.n - a.m - a.n - b.m - b.n;
}

}  // namespace polarsing

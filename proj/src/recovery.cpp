#include "polarsing/recovery.hpp"

#include <algorithm>

#include "polarsing/ordering.hpp"

namespace polarsing {

std::string format_walk_step(const std::string& name, const WalkStep& step) {
    std::string out = name + " " + step.m.str() + "/" + step.n.str() + " ";
    switch (step.decision) {
        case WalkDecision::First: return out + ">I→first";
        case WalkDecision::Second: return out + "<I→second";
        case WalkDecision::Stop: return out + "=I stop";
    }
    return out;
}

std::string format_walk_step(const ArenaTree& tree, const WalkStep& step) {
    return format_walk_step(tree.name(step.point), step);
}

RecoveryError::RecoveryError(const Error& cause, std::vector<DicriticalAssociation> partial)
    : Error(cause.code(), std::string(cause.what()).substr(to_string(cause.code()).size() + 2)),
      partial_(std::move(partial)) {}

Rational dicritical_invariant(const WeightedCluster& bp, MorphismInvariants& inv, PointId d) {
    if (!bp.contains(d) || excess(bp, d) <= 0)
        throw Error(ErrorCode::NotDicritical,
                    (bp.tree().contains(d) ? bp.tree().name(d) : "#" + std::to_string(d.value)) +
                        " is not dicritical");
    const auto k = unibranch_chain(bp.tree(), d);
    return make_rational(noether_pairing(bp, k), inv.extend_to(d).n) + 1;
}

std::pair<PointId, PointId> base_free_point(const WeightedCluster& bp, MorphismInvariants& inv,
                                            PointId d, const Rational& invariant) {
    const auto& tree = bp.tree();
    const auto chain = tree.ancestors(d);
    std::optional<std::pair<PointId, PointId>> best;
    for (std::size_t i = 1; i < chain.size(); ++i)
        if (tree.is_free(chain[i]) && inv.height_quotient(chain[i - 1]) < invariant)
            best = std::make_pair(chain[i - 1], chain[i]);
    if (!best)
        throw Error(ErrorCode::NoQualifyingPair,
                    "no free point of K(" + tree.name(d) + ") follows a point with m/n < " +
                        format_rational(invariant));
    return *best;
}

PointId satellite_walk(ArenaTree& tree, MorphismInvariants& inv, PointId p, const Rational& invariant,
                       std::vector<WalkStep>* trace, PointId dicritical) {
    if (&inv.tree() != &tree) throw Error(ErrorCode::ArenaMismatch, "invariants belong to another arena");
    const BigInt cap = numerator_of(invariant) + denominator_of(invariant);
    BigInt steps = 0;
    PointId q = p;
    for (;;) {
        const HeightPair h = inv.extend_to(q);
        const Rational r = make_rational(h.m, h.n);
        WalkDecision decision = r == invariant  ? WalkDecision::Stop
                                : r > invariant ? WalkDecision::First
                                                : WalkDecision::Second;
        if (trace) trace->push_back({dicritical, q, h.m, h.n, decision});
        if (decision == WalkDecision::Stop) return q;
        if (steps >= cap)
            throw Error(ErrorCode::WalkDiverged, "no point with m/n = " + format_rational(invariant) +
                                                     " within " + cap.str() + " steps of " +
                                                     tree.name(p));
        ++steps;
        q = decision == WalkDecision::First ? first_satellite(tree, q) : second_satellite(tree, q);
    }
}

namespace {

std::set<PointId> downward_closure(const ArenaTree& tree, const std::set<PointId>& points) {
    std::set<PointId> out;
    for (auto p : points)
        for (auto a : tree.ancestors(p)) out.insert(a);
    return out;
}

// Last point of K(d) that is a p-satellite.
std::optional<PointId> last_satellite_in_chain(const ArenaTree& tree, PointId d, PointId p) {
    const auto chain = tree.ancestors(d);
    for (auto it = chain.rbegin(); it != chain.rend(); ++it)
        if (is_satellite_of(tree, *it, p)) return *it;
    return std::nullopt;
}

struct Pending {
    PointId dicritical;
    Rational invariant;
};

}  // namespace

Topology recover_topology(ArenaTree& tree, const WeightedCluster& bp, MorphismInvariants& inv,
                          Algorithm algorithm, std::vector<WalkStep>* trace) {
    if (&bp.tree() != &tree) throw Error(ErrorCode::ArenaMismatch, "base points live in another arena");
    Topology topo;
    try {
        const PointId o = *tree.origin();
        std::vector<Pending> pending;
        for (auto d : dicritical_points(bp)) {
            const Rational inv_d = dicritical_invariant(bp, inv, d);
            if (d == o) {
                topo.rupture.insert(o);
                topo.association.push_back({o, inv_d, o, o});
            } else {
                pending.push_back({d, inv_d});
            }
        }
        if (algorithm == Algorithm::Basic) {
            for (const auto& [d, inv_d] : pending) {
                const auto [prev, p] = base_free_point(bp, inv, d, inv_d);
                (void)prev;
                const PointId q = satellite_walk(tree, inv, p, inv_d, trace, d);
                topo.rupture.insert(q);
                topo.association.push_back({d, inv_d, p, q});
            }
        } else {
            std::stable_sort(pending.begin(), pending.end(),
                             [](const Pending& a, const Pending& b) { return a.invariant > b.invariant; });
            std::map<PointId, std::vector<std::pair<Rational, PointId>>> seen;
            for (const auto& [d, inv_d] : pending) {
                const auto [prev, p] = base_free_point(bp, inv, d, inv_d);
                (void)prev;
                auto& earlier = seen[p];
                std::optional<PointId> q;
                for (const auto& [i, r] : earlier)
                    if (i == inv_d) q = r;
                const bool greater_seen =
                    std::any_of(earlier.begin(), earlier.end(),
                                [&](const auto& e) { return e.first > inv_d; });
                if (!q && greater_seen) {
                    auto last = last_satellite_in_chain(tree, d, p);
                    if (last && inv.height_quotient(*last) == inv_d) {
                        q = last;
                    } else {
                        topo.warnings.push_back(
                            std::string(to_string(ErrorCode::ShortcutAssertionFailed)) + ": " +
                            tree.name(d) + " falls back to the satellite walk");
                    }
                }
                if (!q) q = satellite_walk(tree, inv, p, inv_d, trace, d);
                earlier.emplace_back(inv_d, *q);
                topo.rupture.insert(*q);
                topo.association.push_back({d, inv_d, p, *q});
            }
            std::sort(topo.association.begin(), topo.association.end(),
                      [](const auto& a, const auto& b) { return a.dicritical < b.dicritical; });
        }
        topo.singular = downward_closure(tree, topo.rupture);
    } catch (const RecoveryError&) {
        throw;
    } catch (const Error& e) {
        throw RecoveryError(e, topo.association);
    }
    return topo;
}

WeightedCluster recover_values(const ArenaTree& tree, MorphismInvariants& inv,
                               const std::set<PointId>& rupture, const std::set<PointId>& singular) {
    std::map<PointId, BigInt> v;
    for (auto p : rupture) v[p] = inv.extend_to(p).m;

    auto biggest_rupture_at = [&](PointId free_point) -> std::optional<PointId> {
        std::set<PointId> candidates;
        for (auto r : rupture)
            if (r == free_point || is_satellite_of(tree, r, free_point)) candidates.insert(r);
        if (candidates.empty()) return std::nullopt;
        return max_under_prec(tree, candidates);
    };

    for (auto p : singular) {
        if (rupture.count(p) || !tree.is_free(p)) continue;
        const HeightPair hp = inv.extend_to(p);
        bool free_child = false;
        for (auto c : tree.free_children(p)) free_child = free_child || singular.count(c);
        if (free_child) {
            v[p] = hp.m;
            continue;
        }
        const auto q = biggest_rupture_at(p);
        if (!q)
            throw Error(ErrorCode::EmptyRuptureSet,
                        "no rupture point equal to or satellite of " + tree.name(p));
        const HeightPair hq = inv.extend_to(*q);
        v[p] = ceil_div(hp.n * hq.m, hq.n);
    }

    for (auto p : singular) {
        if (rupture.count(p) || tree.is_free(p)) continue;
        const HeightPair hp = inv.extend_to(p);
        const PointId base = defining_free_point(tree, p);
        const HeightPair hb = inv.extend_to(base);
        const BigInt vb = v.at(base);
        const auto q = biggest_rupture_at(base);
        bool proportional = false;
        if (q && prec_compare(tree, *q, p) == PrecComparison::Less) {
            const HeightPair hq = inv.extend_to(*q);
            proportional = vb * hq.n == hb.n * hq.m;
        }
        if (proportional) {
            const BigInt num = hp.n * vb;
            if (num % hb.n != 0)
                throw Error(ErrorCode::NonIntegralValue,
                            tree.name(p) + ": " + num.str() + "/" + hb.n.str() + " is not an integer");
            v[p] = num / hb.n;
        } else {
            v[p] = hp.m;
        }
    }
    return WeightedCluster(tree, WeightKind::Value, std::move(v));
}

RecoveryResult recover_with(Algorithm algorithm, ArenaTree& tree, const WeightedCluster& bp,
                            std::vector<WalkStep>* trace) {
    if (&bp.tree() != &tree) throw Error(ErrorCode::ArenaMismatch, "base points live in another arena");
    const std::size_t original_size = tree.size();
    auto inv = MorphismInvariants::compute(bp);
    Topology topo = recover_topology(tree, bp, inv, algorithm, trace);
    try {
        auto values = recover_values(tree, inv, topo.rupture, topo.singular);
        auto mult = multiplicities_from_values(values);
        if (!is_consistent(mult))
            throw Error(ErrorCode::InconsistentResult, "recovered multiplicities are not consistent");
        for (const auto& a : topo.association)
            if (inv.height_quotient(a.rupture_point) != a.invariant)
                throw Error(ErrorCode::InconsistentResult,
                            tree.name(a.rupture_point) + " does not carry m/n = " +
                                format_rational(a.invariant));
        std::set<PointId> created;
        for (std::size_t i = original_size; i < tree.size(); ++i)
            created.insert(PointId{static_cast<std::uint32_t>(i)});
        std::map<PointId, HeightPair> heights;
        for (auto p : topo.singular) heights.emplace(p, inv.at(p));
        return RecoveryResult{std::move(topo.rupture), std::move(topo.singular), std::move(values),
                              std::move(mult),         std::move(topo.association), std::move(created),
                              std::move(heights),      std::move(topo.warnings)};
    } catch (const Error& e) {
        throw RecoveryError(e, topo.association);
    }
}

RecoveryResult recover(ArenaTree& tree, const WeightedCluster& bp, std::vector<WalkStep>* trace) {
    return recover_with(Algorithm::Basic, tree, bp, trace);
}

RecoveryResult recover_grouped(ArenaTree& tree, const WeightedCluster& bp, std::vector<WalkStep>* trace) {
    return recover_with(Algorithm::Grouped, tree, bp, trace);
}

std::map<PointId, bool> classify_free_points(const ArenaTree& tree, const RecoveryResult& result) {
    std::map<PointId, bool> out;
    for (auto p : result.singular) {
        if (!tree.is_free(p)) continue;
        if (result.rupture.count(p)) {
            out[p] = true;
            continue;
        }
        std::set<PointId> candidates;
        for (auto r : result.rupture)
            if (is_satellite_of(tree, r, p)) candidates.insert(r);
        if (candidates.empty()) {
            // No satellite chain to compare against: count the multiplicity left to free branches.
            BigInt residual = result.multiplicities.weight(p);
            for (auto q : result.singular)
                if (tree.is_proximate(q, p)) residual -= result.multiplicities.weight(q);
            out[p] = residual > 0;
            continue;
        }
        const PointId q = max_under_prec(tree, candidates);
        const auto& hp = result.heights.at(p);
        const auto& hq = result.heights.at(q);
        out[p] = result.values.weight(p) * hq.n != hp.n * hq.m;
    }
    return out;
}

}  // namespace polarsing

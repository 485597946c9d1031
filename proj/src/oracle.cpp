#include "polarsing/oracle.hpp"

#include <random>

#include "polarsing/ordering.hpp"

namespace polarsing {

std::vector<std::string> CurveCluster::violations(const WeightedCluster& k) {
    std::vector<std::string> out;
    const auto& tree = k.tree();
    if (k.kind() != WeightKind::Multiplicity) out.push_back("weights are not multiplicities");
    if (k.empty()) {
        out.push_back("the cluster is empty");
        return out;
    }
    for (const auto& [p, rho] : excesses(k))
        if (rho < 0) out.push_back(tree.name(p) + " has negative excess " + rho.str());
    bool singular = false;
    std::set<PointId> before_satellite;
    for (auto p : k.points()) {
        if (!tree.is_satellite(p)) continue;
        singular = true;
        for (auto a : tree.ancestors(p)) before_satellite.insert(a);
    }
    for (const auto& [p, e] : k.weights()) {
        if (e >= 2) singular = true;
        if (e < 2 && !tree.is_satellite(p) && !before_satellite.count(p))
            out.push_back(tree.name(p) + " is not a singular point");
    }
    if (!singular) out.push_back("the curve is smooth");
    return out;
}

CurveCluster CurveCluster::from(WeightedCluster k) {
    auto problems = violations(k);
    if (!problems.empty()) throw Error(ErrorCode::InvalidCurve, problems.front());
    return CurveCluster(std::move(k));
}

BigInt free_count_first_neighbourhood(const CurveCluster& curve, PointId p) {
    const auto& k = curve.cluster();
    const BigInt rho = excess(k, p);
    if (rho < 0) throw Error(ErrorCode::NegativeResidual, curve.tree().name(p));
    BigInt count = rho;
    for (auto c : curve.tree().free_children(p))
        if (k.contains(c)) ++count;
    return count;
}

std::set<PointId> rupture_points(const CurveCluster& curve) {
    std::set<PointId> out;
    for (auto p : curve.cluster().points()) {
        const BigInt f = free_count_first_neighbourhood(curve, p);
        if (f >= 2 || (curve.tree().is_satellite(p) && f >= 1)) out.insert(p);
    }
    return out;
}

InvariantQuotient invariant_quotient(const WeightedCluster& curve, PointId p) {
    if (curve.kind() != WeightKind::Multiplicity)
        throw Error(ErrorCode::WrongKind, "invariant quotients need multiplicities");
    const auto k = unibranch_chain(curve.tree(), p);
    InvariantQuotient out;
    for (auto q : k.points()) out.partial = out.partial || !curve.contains(q);
    out.value = make_rational(noether_pairing(curve, k), k.weight(*curve.tree().origin()));
    return out;
}

std::set<Rational> polar_invariants(const CurveCluster& curve) {
    std::set<Rational> out;
    for (auto q : rupture_points(curve)) out.insert(invariant_quotient(curve, q).value);
    return out;
}

std::set<Rational> polar_invariants_local(const CurveCluster& curve, PointId p) {
    const auto& tree = curve.tree();
    if (!tree.is_free(p)) throw Error(ErrorCode::InvalidCurve, tree.name(p) + " is not free");
    std::set<Rational> out;
    for (auto q : rupture_points(curve))
        if (q == p || is_satellite_of(tree, q, p)) out.insert(invariant_quotient(curve, q).value);
    return out;
}

std::vector<GrowthViolation> check_growth(const WeightedCluster& curve,
                                          const std::vector<GrowthSample>& samples,
                                          const std::vector<WeightedCluster>& branches) {
    std::vector<GrowthViolation> out;
    const auto& tree = curve.tree();
    for (const auto& s : samples) {
        auto fail = [&](std::string what) { out.push_back({s, std::move(what)}); };
        if (tree.is_origin(s.p) || !tree.is_free(s.p) || !is_satellite_of(tree, s.q1, s.p) ||
            !(s.q2 == s.p || is_satellite_of(tree, s.q2, s.p)) || !prec_less(tree, s.q1, s.q2)) {
            fail("sample does not satisfy the hypotheses");
            continue;
        }
        const PointId before = *tree.parent(s.p);
        const Rational i0 = invariant_quotient(curve, before).value;
        const Rational i1 = invariant_quotient(curve, s.q1).value;
        const Rational i2 = invariant_quotient(curve, s.q2).value;
        if (i0 > i1) fail("I(p') > I(q1)");
        if (i1 > i2) fail("I(q1) > I(q2)");
        const bool on_curve = curve.contains(s.p);
        if ((i0 == i1) == on_curve) fail("equality in (a) disagrees with membership of p");
        if (!branches.empty()) {
            bool bigger_branch = false;
            for (const auto& b : branches) bigger_branch = bigger_branch || compare_point_to_branch(tree, s.q1, b);
            if ((i1 == i2) == bigger_branch) fail("equality in (b) disagrees with the branches");
        }
    }
    return out;
}

namespace {

std::vector<PointId> missing_satellites(const ArenaTree& tree, PointId x) {
    std::vector<PointId> out;
    if (tree.is_origin(x)) return out;
    for (auto r : tree.proximities(x))
        if (!tree.find_satellite_child(x, r)) out.push_back(r);
    return out;
}

}  // namespace

RandomCurve random_curve(std::uint64_t seed, std::size_t max_points, std::uint32_t max_multiplicity) {
    std::mt19937_64 rng(seed);
    const std::size_t limit = std::max<std::size_t>(max_points, 2);
    const std::uint32_t cap = std::max<std::uint32_t>(max_multiplicity, 2);
    auto pick = [&](std::size_t lo, std::size_t hi) {
        return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
    };

    for (int attempt = 0; attempt < 64; ++attempt) {
        auto tree = std::make_unique<ArenaTree>();
        tree->add_point(std::nullopt, std::nullopt, "O");
        const std::size_t target = pick(2, std::max<std::size_t>(2, limit - attempt * limit / 64));
        while (tree->size() < target) {
            const PointId x{static_cast<std::uint32_t>(pick(0, tree->size() - 1))};
            const auto sats = missing_satellites(*tree, x);
            std::optional<PointId> second;
            if (!sats.empty() && pick(0, 99) < 55) second = sats[pick(0, sats.size() - 1)];
            tree->add_point(x, second, "p" + std::to_string(tree->size()));
        }

        const std::size_t nbranches = pick(1, 3);
        std::vector<WeightedCluster> branches;
        std::map<PointId, BigInt> full_w;
        for (std::size_t i = 0; i < nbranches; ++i) {
            const PointId a{static_cast<std::uint32_t>(pick(0, tree->size() - 1))};
            auto k = with_kind(unibranch_chain(*tree, a), WeightKind::Multiplicity);
            for (const auto& [p, w] : k.weights()) full_w[p] += w;
            branches.push_back(std::move(k));
        }
        WeightedCluster full(*tree, WeightKind::Multiplicity, full_w);

        std::set<PointId> keep;
        for (const auto& [p, e] : full_w) {
            if (e >= 2) keep.insert(p);
            if (tree->is_satellite(p))
                for (auto a : tree->ancestors(p)) keep.insert(a);
        }
        if (keep.empty() || full_w.at(*tree->origin()) > cap) continue;
        std::map<PointId, BigInt> s_w;
        for (auto p : keep) s_w.emplace(p, full_w.at(p));
        auto curve = CurveCluster::from(WeightedCluster(*tree, WeightKind::Multiplicity, s_w));
        return RandomCurve{std::move(tree), std::move(full), std::move(curve), std::move(branches)};
    }

    // Two smooth transversal branches: the smallest singular curve.
    auto tree = std::make_unique<ArenaTree>();
    const PointId o = tree->add_point(std::nullopt, std::nullopt, "O");
    auto k = with_kind(unibranch_chain(*tree, o), WeightKind::Multiplicity);
    std::vector<WeightedCluster> branches{k, k};
    WeightedCluster full(*tree, WeightKind::Multiplicity, {{o, BigInt(2)}});
    auto curve = CurveCluster::from(full);
    return RandomCurve{std::move(tree), std::move(full), std::move(curve), std::move(branches)};
}

}  // namespace polarsing

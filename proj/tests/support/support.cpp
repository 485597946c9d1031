#include "support.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "polarsing/ordering.hpp"

#ifndef POLARSING_FIXTURE_DIR
#error "POLARSING_FIXTURE_DIR must be defined"
#endif

namespace polarsing::testing {

std::string fixture_path(const std::string& name) {
    return std::string(POLARSING_FIXTURE_DIR) + "/" + name + ".json";
}

LoadedCluster load_fixture(const std::string& name) { return load_file(fixture_path(name)); }

PointId pt(const ArenaTree& tree, const std::string& label) {
    auto p = tree.find_label(label);
    if (!p) throw std::out_of_range("no point labelled " + label);
    return *p;
}

std::set<PointId> pts(const ArenaTree& tree, const std::vector<std::string>& labels) {
    std::set<PointId> out;
    for (const auto& l : labels) out.insert(pt(tree, l));
    return out;
}

std::vector<std::string> names_of(const ArenaTree& tree, const std::set<PointId>& points) {
    const auto names = document_names(tree);
    std::vector<std::string> out;
    for (auto p : points) out.push_back(names.at(p));
    return out;
}

std::vector<BigInt> weights_of(const WeightedCluster& k, const std::vector<std::string>& labels) {
    std::vector<BigInt> out;
    for (const auto& l : labels) out.push_back(k.weight(pt(k.tree(), l)));
    return out;
}

LoadedCluster clone(const LoadedCluster& src) {
    auto tree = std::make_unique<ArenaTree>(*src.tree);
    WeightedCluster k(*tree, src.cluster.kind(), src.cluster.weights());
    return LoadedCluster{std::move(tree), std::move(k)};
}

LoadedCluster shuffled_copy(const LoadedCluster& src, std::mt19937_64& rng) {
    const auto& old = *src.tree;
    std::vector<PointId> order;
    std::vector<PointId> ready{*old.origin()};
    while (!ready.empty()) {
        std::uniform_int_distribution<std::size_t> pick(0, ready.size() - 1);
        const std::size_t i = pick(rng);
        const PointId p = ready[i];
        ready.erase(ready.begin() + static_cast<std::ptrdiff_t>(i));
        order.push_back(p);
        for (auto c : old.children(p)) ready.push_back(c);
    }
    std::vector<std::uint32_t> tags(order.size());
    std::iota(tags.begin(), tags.end(), 0u);
    std::shuffle(tags.begin(), tags.end(), rng);

    auto tree = std::make_unique<ArenaTree>();
    std::map<PointId, PointId> map;
    for (std::size_t i = 0; i < order.size(); ++i) {
        const auto& r = old.record(order[i]);
        std::optional<PointId> parent, second;
        if (r.parent) parent = map.at(*r.parent);
        if (r.second_proximity) second = map.at(*r.second_proximity);
        map[order[i]] = tree->add_point(parent, second, "r" + std::to_string(tags[i]));
    }
    std::map<PointId, BigInt> w;
    for (const auto& [p, x] : src.cluster.weights()) w.emplace(map.at(p), x);
    WeightedCluster k(*tree, src.cluster.kind(), std::move(w));
    return LoadedCluster{std::move(tree), std::move(k)};
}

LoadedCluster perturbed_copy(const LoadedCluster& src, std::mt19937_64& rng) {
    auto tree = std::make_unique<ArenaTree>(*src.tree);
    auto w = src.cluster.weights();
    const auto points = src.cluster.points();
    std::uniform_int_distribution<std::size_t> pick(0, points.size() - 1);
    const int edits = std::uniform_int_distribution<int>(1, 3)(rng);
    for (int e = 0; e < edits; ++e) {
        const PointId p = points[pick(rng)];
        const bool lower = std::uniform_int_distribution<int>(0, 2)(rng) == 0;
        if (lower && w[p] > 1) {
            auto trial = w;
            trial[p] -= 1;
            if (is_consistent(WeightedCluster(*tree, WeightKind::Virtual, trial))) w = std::move(trial);
            continue;
        }
        // Raising w_p lowers the excess of its proximities; lift them until consistent.
        w[p] += 1;
        for (;;) {
            WeightedCluster k(*tree, WeightKind::Virtual, w);
            bool fixed = true;
            for (const auto& [q, rho] : excesses(k)) {
                if (rho < 0) {
                    w[q] -= rho;
                    fixed = false;
                }
            }
            if (fixed) break;
        }
    }
    WeightedCluster k(*tree, src.cluster.kind(), std::move(w));
    return LoadedCluster{std::move(tree), std::move(k)};
}

std::string result_signature(const ArenaTree& tree, std::size_t original_size, const RecoveryResult& r) {
    std::function<std::string(PointId)> key = [&](PointId p) -> std::string {
        if (p.value < original_size) return "#" + std::to_string(p.value);
        return "(" + key(*tree.parent(p)) + "," + key(*tree.second_proximity(p)) + ")";
    };
    auto set_text = [&](const std::set<PointId>& s) {
        std::vector<std::string> keys;
        for (auto p : s) keys.push_back(key(p));
        std::sort(keys.begin(), keys.end());
        std::string out;
        for (const auto& k : keys) out += k + " ";
        return out;
    };
    auto cluster_text = [&](const WeightedCluster& k) {
        std::vector<std::string> items;
        for (const auto& [p, w] : k.weights()) items.push_back(key(p) + "=" + w.str());
        std::sort(items.begin(), items.end());
        std::string out;
        for (const auto& s : items) out += s + " ";
        return out;
    };
    std::string out = "R: " + set_text(r.rupture) + "\nS: " + set_text(r.singular) +
                      "\nv: " + cluster_text(r.values) + "\ne: " + cluster_text(r.multiplicities) +
                      "\ncreated: " + set_text(r.created) + "\nassoc:";
    for (const auto& a : r.association)
        out += " " + key(a.dicritical) + ":" + format_rational(a.invariant) + ":" + key(a.base_free_point) +
               ":" + key(a.rupture_point);
    return out + "\n";
}

std::vector<std::uint32_t> euclid_multiplicities(std::uint32_t a, std::uint32_t b) {
    std::vector<std::uint32_t> seq;
    std::uint32_t x = b, y = a;
    while (y > 0) {
        for (std::uint32_t i = 0; i < x / y; ++i) seq.push_back(y);
        const std::uint32_t r = x % y;
        x = y;
        y = r;
    }
    return seq;
}

namespace {

// Points of the branch y^a = x^b; free points are taken on the axis chain.
std::vector<PointId> branch_points(ArenaTree& tree, std::vector<PointId>& axis, std::uint32_t a,
                                   std::uint32_t b) {
    const auto seq = euclid_multiplicities(a, b);
    const std::size_t free_count = (a == 1) ? seq.size() : b / a + 1;
    // Greedy proximity runs, padded with the free tail of multiplicity one.
    std::vector<std::uint32_t> ext = seq;
    ext.resize(seq.size() + b + 2, 1);
    std::vector<std::optional<std::size_t>> second(seq.size());
    for (std::size_t i = 0; i < seq.size(); ++i) {
        std::uint32_t sum = 0;
        for (std::size_t j = i + 1; sum < ext[i]; ++j) {
            sum += ext[j];
            if (j > i + 1 && j < seq.size()) second[j] = i;
        }
    }
    std::vector<PointId> out;
    for (std::size_t j = 0; j < seq.size(); ++j) {
        if (j < free_count) {
            while (axis.size() <= j) axis.push_back(tree.add_point(axis.back(), std::nullopt, "L" + std::to_string(axis.size())));
            out.push_back(axis[j]);
            continue;
        }
        const PointId parent = out[j - 1];
        const PointId s = out[*second[j]];
        auto found = tree.find_satellite_child(parent, s);
        out.push_back(found ? *found : tree.add_point(parent, s, "s" + std::to_string(tree.size())));
    }
    return out;
}

}  // namespace

QuasiHomogeneous quasi_homogeneous(std::uint32_t n, std::uint32_t m) {
    if (n < 2 || m < n) throw std::invalid_argument("need 2 <= n <= m");
    auto tree = std::make_unique<ArenaTree>();
    std::vector<PointId> axis{tree->add_point(std::nullopt, std::nullopt, "O")};

    const std::uint32_t g = std::gcd(n, m);
    const auto curve_pts = branch_points(*tree, axis, n / g, m / g);
    const auto curve_seq = euclid_multiplicities(n / g, m / g);
    std::map<PointId, BigInt> e;
    for (std::size_t i = 0; i < curve_pts.size(); ++i) e[curve_pts[i]] = BigInt(curve_seq[i]) * g;

    const std::uint32_t g2 = std::gcd(n - 1, m - 1);
    const auto polar_pts = branch_points(*tree, axis, (n - 1) / g2, (m - 1) / g2);
    const auto chain = unibranch_chain(*tree, polar_pts.back());
    std::map<PointId, BigInt> nu;
    for (const auto& [p, w] : chain.weights()) nu[p] = w * g2;

    WeightedCluster bp(*tree, WeightKind::Virtual, std::move(nu));
    WeightedCluster curve(*tree, WeightKind::Multiplicity, std::move(e));
    return QuasiHomogeneous{std::move(tree), std::move(bp), std::move(curve)};
}

}  // namespace polarsing::testing

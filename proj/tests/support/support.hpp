#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "polarsing/io.hpp"
#include "polarsing/oracle.hpp"
#include "polarsing/recovery.hpp"

namespace polarsing::testing {

std::string fixture_path(const std::string& name);
LoadedCluster load_fixture(const std::string& name);

// Looks a point up by label; fails loudly when missing.
PointId pt(const ArenaTree& tree, const std::string& label);
std::set<PointId> pts(const ArenaTree& tree, const std::vector<std::string>& labels);
std::vector<std::string> names_of(const ArenaTree& tree, const std::set<PointId>& points);
// Weights listed in the given label order.
std::vector<BigInt> weights_of(const WeightedCluster& k, const std::vector<std::string>& labels);

// Independent copy of a loaded cluster (own arena, same ids).
LoadedCluster clone(const LoadedCluster& src);

// Same cluster over a randomly reordered, relabeled arena.
LoadedCluster shuffled_copy(const LoadedCluster& src, std::mt19937_64& rng);

// Adds or removes one unit of weight somewhere and repairs consistency upward.
LoadedCluster perturbed_copy(const LoadedCluster& src, std::mt19937_64& rng);

// Arena-independent description of a recovery run, for comparing runs on copies.
std::string result_signature(const ArenaTree& tree, std::size_t original_size, const RecoveryResult& r);

// Base points and singular points of y^n - x^m (2 <= n <= m) over one arena.
struct QuasiHomogeneous {
    std::unique_ptr<ArenaTree> tree;
    WeightedCluster bp;
    WeightedCluster curve;  // multiplicities
};
QuasiHomogeneous quasi_homogeneous(std::uint32_t n, std::uint32_t m);

// Euclid multiplicity sequence of the branch y^a = x^b, a <= b coprime.
std::vector<std::uint32_t> euclid_multiplicities(std::uint32_t a, std::uint32_t b);

}  // namespace polarsing::testing

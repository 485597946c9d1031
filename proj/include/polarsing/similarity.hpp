#pragma once

#include <compare>
#include <string>

#include "polarsing/cluster.hpp"
#include "polarsing/oracle.hpp"

namespace polarsing {

// Label- and order-independent encoding of a weighted cluster.
struct CanonicalForm {
    std::string bytes;

    std::string hex_digest() const;  // sha-256 of bytes
    friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

CanonicalForm canonical_form(const WeightedCluster& k);
bool are_similar(const WeightedCluster& a, const WeightedCluster& b);
bool are_equisingular(const CurveCluster& a, const CurveCluster& b);

}  // namespace polarsing

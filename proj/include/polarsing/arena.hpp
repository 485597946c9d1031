#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polarsing/error.hpp"

namespace polarsing {

struct PointId {
    std::uint32_t value = 0;
    friend auto operator<=>(const PointId&, const PointId&) = default;
};

struct PointRecord {
    PointId id;
    std::optional<std::string> label;
    std::optional<PointId> parent;
    std::optional<PointId> second_proximity;
};

struct Diagnostic {
    ErrorCode code;
    std::optional<PointId> point;
    std::string message;
};

std::string format_diagnostic(const Diagnostic& d);

// Append-only tree of infinitely near points. Ids are arena indices.
class ArenaTree {
public:
    ArenaTree() = default;

    // Unchecked bulk construction for parsers; run validate() afterwards.
    // Record ids are reassigned to their positions.
    static ArenaTree from_records(std::vector<PointRecord> records);

    PointId add_point(std::optional<PointId> parent, std::optional<PointId> second_proximity,
                      std::optional<std::string> label = std::nullopt);

    std::size_t size() const { return records_.size(); }
    bool contains(PointId p) const { return p.value < records_.size(); }
    const PointRecord& record(PointId p) const;
    const std::vector<PointRecord>& records() const { return records_; }
    std::vector<PointId> points() const;

    std::optional<PointId> origin() const;
    bool is_origin(PointId p) const { return !record(p).parent.has_value(); }
    std::optional<PointId> parent(PointId p) const { return record(p).parent; }
    std::optional<PointId> second_proximity(PointId p) const { return record(p).second_proximity; }
    bool is_free(PointId p) const { return !record(p).second_proximity.has_value(); }
    bool is_satellite(PointId p) const { return record(p).second_proximity.has_value(); }

    // Root first, ending at p.
    std::vector<PointId> ancestors(PointId p) const;
    // p <= q in the tree order.
    bool precedes(PointId p, PointId q) const;

    std::vector<PointId> proximities(PointId q) const;
    bool is_proximate(PointId q, PointId p) const;
    const std::vector<PointId>& children(PointId p) const;
    std::vector<PointId> satellite_children(PointId p) const;
    std::vector<PointId> free_children(PointId p) const;

    // Child of `parent` whose second proximity is `second` (nullopt matches nothing:
    // free children are not unique).
    std::optional<PointId> find_satellite_child(PointId parent, PointId second) const;

    std::optional<std::string> label(PointId p) const { return record(p).label; }
    std::optional<PointId> find_label(const std::string& label) const;
    // Label, or "#<index>" for unlabeled points.
    std::string name(PointId p) const;

private:
    void require(PointId p) const;

    std::vector<PointRecord> records_;
    std::vector<std::vector<PointId>> children_;
};

std::vector<Diagnostic> validate(const ArenaTree& tree);

}  // namespace polarsing

#include "polarsing/arena.hpp"

#include <algorithm>
#include <map>

namespace polarsing {

std::string format_diagnostic(const Diagnostic& d) {
    std::string out(to_string(d.code));
    if (d.point) out += " at #" + std::to_string(d.point->value);
    if (!d.message.empty()) out += ": " + d.message;
    return out;
}

ArenaTree ArenaTree::from_records(std::vector<PointRecord> records) {
    ArenaTree tree;
    tree.children_.resize(records.size());
    for (std::size_t i = 0; i < records.size(); ++i) {
        records[i].id = PointId{static_cast<std::uint32_t>(i)};
        const auto& parent = records[i].parent;
        if (parent && parent->value < i) tree.children_[parent->value].push_back(records[i].id);
    }
    tree.records_ = std::move(records);
    return tree;
}

PointId ArenaTree::add_point(std::optional<PointId> parent, std::optional<PointId> second_proximity,
                             std::optional<std::string> label) {
    PointId id{static_cast<std::uint32_t>(records_.size())};
    if (!parent) {
        if (origin()) throw Error(ErrorCode::DuplicateOrigin, "arena already has an origin");
        if (second_proximity)
            throw Error(ErrorCode::IllegalProximity, "the origin cannot be proximate to a point");
    } else {
        if (*parent == id) throw Error(ErrorCode::SelfReference, "point cannot be its own parent");
        if (!contains(*parent))
            throw Error(ErrorCode::UnknownParent, "parent #" + std::to_string(parent->value));
        if (second_proximity) {
            if (*second_proximity == id)
                throw Error(ErrorCode::SelfReference, "point cannot be proximate to itself");
            if (!contains(*second_proximity) || !is_proximate(*parent, *second_proximity))
                throw Error(ErrorCode::IllegalProximity,
                            "#" + std::to_string(second_proximity->value) +
                                " is not a proximity of the parent #" +
                                std::to_string(parent->value));
            if (find_satellite_child(*parent, *second_proximity))
                throw Error(ErrorCode::DuplicateSatellite, "satellite already exists");
        }
    }
    records_.push_back(PointRecord{id, std::move(label), parent, second_proximity});
    children_.emplace_back();
    if (parent) children_[parent->value].push_back(id);
    return id;
}

void ArenaTree::require(PointId p) const {
    if (!contains(p)) throw Error(ErrorCode::UnknownPoint, "#" + std::to_string(p.value));
}

const PointRecord& ArenaTree::record(PointId p) const {
    require(p);
    return records_[p.value];
}

std::vector<PointId> ArenaTree::points() const {
    std::vector<PointId> out;
    out.reserve(records_.size());
    for (const auto& r : records_) out.push_back(r.id);
    return out;
}

std::optional<PointId> ArenaTree::origin() const {
    for (const auto& r : records_)
        if (!r.parent) return r.id;
    return std::nullopt;
}

std::vector<PointId> ArenaTree::ancestors(PointId p) const {
    require(p);
    std::vector<PointId> chain{p};
    auto cur = records_[p.value].parent;
    while (cur) {
        if (cur->value >= chain.back().value)
            throw Error(ErrorCode::UnknownParent, "parent link is not topologically sorted");
        chain.push_back(*cur);
        cur = records_[cur->value].parent;
    }
    std::reverse(chain.begin(), chain.end());
    return chain;
}

bool ArenaTree::precedes(PointId p, PointId q) const {
    require(p);
    require(q);
    std::optional<PointId> cur = q;
    while (cur && cur->value >= p.value) {
        if (*cur == p) return true;
        cur = records_[cur->value].parent;
    }
    return false;
}

std::vector<PointId> ArenaTree::proximities(PointId q) const {
    const auto& r = record(q);
    std::vector<PointId> out;
    if (r.parent) out.push_back(*r.parent);
    if (r.second_proximity) out.push_back(*r.second_proximity);
    return out;
}

bool ArenaTree::is_proximate(PointId q, PointId p) const {
    const auto& r = record(q);
    require(p);
    return r.parent == p || r.second_proximity == p;
}

const std::vector<PointId>& ArenaTree::children(PointId p) const {
    require(p);
    return children_[p.value];
}

std::vector<PointId> ArenaTree::satellite_children(PointId p) const {
    std::vector<PointId> out;
    for (auto c : children(p))
        if (is_satellite(c)) out.push_back(c);
    return out;
}

std::vector<PointId> ArenaTree::free_children(PointId p) const {
    std::vector<PointId> out;
    for (auto c : children(p))
        if (is_free(c)) out.push_back(c);
    return out;
}

std::optional<PointId> ArenaTree::find_satellite_child(PointId parent, PointId second) const {
    for (auto c : children(parent))
        if (records_[c.value].second_proximity == second) return c;
    return std::nullopt;
}

std::optional<PointId> ArenaTree::find_label(const std::string& label) const {
    for (const auto& r : records_)
        if (r.label == label) return r.id;
    return std::nullopt;
}

std::string ArenaTree::name(PointId p) const {
    const auto& r = record(p);
    return r.label ? *r.label : "#" + std::to_string(p.value);
}

std::vector<Diagnostic> validate(const ArenaTree& tree) {
    std::vector<Diagnostic> out;
    const auto& recs = tree.records();
    bool seen_origin = false;
    std::map<std::pair<std::uint32_t, std::uint32_t>, PointId> satellites;

    auto parent_is_sound = [&](const PointRecord& r) {
        return r.parent && r.parent->value < r.id.value;
    };
    auto proximate = [&](PointId q, PointId p) {
        const auto& rq = recs[q.value];
        return rq.parent == p || rq.second_proximity == p;
    };

    if (recs.empty()) {
        out.push_back({ErrorCode::MissingOrigin, std::nullopt, "arena is empty"});
        return out;
    }
    for (const auto& r : recs) {
        const std::string who = tree.name(r.id);
        if (!r.parent) {
            if (seen_origin)
                out.push_back({ErrorCode::DuplicateOrigin, r.id, who + " is a second parentless point"});
            seen_origin = true;
            if (r.second_proximity)
                out.push_back({ErrorCode::IllegalProximity, r.id, "the origin has a second proximity"});
            continue;
        }
        if (*r.parent == r.id) {
            out.push_back({ErrorCode::SelfReference, r.id, who + " is its own parent"});
            continue;
        }
        if (!parent_is_sound(r)) {
            out.push_back({ErrorCode::UnknownParent, r.id,
                           who + " refers to a parent that does not precede it"});
            continue;
        }
        if (!r.second_proximity) continue;
        const PointId s = *r.second_proximity;
        if (s == r.id) {
            out.push_back({ErrorCode::SelfReference, r.id, who + " is proximate to itself"});
            continue;
        }
        if (s.value >= r.id.value || !proximate(*r.parent, s)) {
            out.push_back({ErrorCode::IllegalProximity, r.id,
                           who + ": second proximity is not a proximity of " +
                               tree.name(*r.parent)});
            continue;
        }
        auto key = std::make_pair(r.parent->value, s.value);
        auto [it, inserted] = satellites.emplace(key, r.id);
        if (!inserted)
            out.push_back({ErrorCode::DuplicateSatellite, r.id,
                           who + " duplicates " + tree.name(it->second)});
    }
    if (!seen_origin) out.push_back({ErrorCode::MissingOrigin, std::nullopt, "no parentless point"});
    return out;
}

}  // namespace polarsing

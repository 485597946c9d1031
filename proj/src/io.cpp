#include "polarsing/io.hpp"

#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "json.hpp"

namespace polarsing {

using Json = nlohmann::ordered_json;

namespace {

[[noreturn]] void syntax(const std::string& where, const std::string& what) {
    throw DocumentError(ErrorCode::SyntaxError, where + ": " + what);
}

std::optional<std::string> optional_string(const Json& obj, const char* key, const std::string& where) {
    auto it = obj.find(key);
    if (it == obj.end() || it->is_null()) return std::nullopt;
    if (!it->is_string()) syntax(where, std::string("'") + key + "' must be a string");
    return it->get<std::string>();
}

BigInt parse_weight(const Json& w, const std::string& where) {
    if (w.is_number_integer()) {
        if (w.is_number_unsigned()) return BigInt(w.get<std::uint64_t>());
        return BigInt(w.get<std::int64_t>());
    }
    if (w.is_string()) {
        const auto s = w.get<std::string>();
        const std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
        if (s.size() > start && s.find_first_not_of("0123456789", start) == std::string::npos)
            return BigInt(s);
    }
    syntax(where, "'weight' must be an integer");
}

std::string quote(const std::string& s) { return Json(s).dump(); }

std::string weight_text(const BigInt& w) {
    if (w >= std::numeric_limits<std::int64_t>::min() && w <= std::numeric_limits<std::int64_t>::max())
        return w.str();
    return quote(w.str());
}

}  // namespace

ClusterDocument parse_document(std::string_view text) {
    Json root;
    try {
        root = Json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        throw DocumentError(ErrorCode::SyntaxError, "byte " + std::to_string(e.byte) + ": " + e.what());
    }
    if (!root.is_object()) syntax("document", "top level must be an object");
    for (auto it = root.begin(); it != root.end(); ++it)
        if (it.key() != "format_version" && it.key() != "weight_kind" && it.key() != "points")
            syntax("document", "unknown field '" + it.key() + "'");

    ClusterDocument doc;
    const auto version = root.find("format_version");
    if (version == root.end() || !version->is_number_integer())
        syntax("document", "'format_version' must be an integer");
    doc.format_version = version->get<int>();
    if (doc.format_version != kFormatVersion)
        throw DocumentError(ErrorCode::ValidationError,
                            "unsupported format_version " + std::to_string(doc.format_version));

    const auto kind = root.find("weight_kind");
    if (kind == root.end() || !kind->is_string()) syntax("document", "'weight_kind' must be a string");
    try {
        doc.kind = parse_weight_kind(kind->get<std::string>());
    } catch (const Error&) {
        syntax("document", "unknown weight_kind '" + kind->get<std::string>() + "'");
    }

    const auto points = root.find("points");
    if (points == root.end() || !points->is_array()) syntax("document", "'points' must be an array");
    for (std::size_t i = 0; i < points->size(); ++i) {
        const auto& obj = (*points)[i];
        const std::string where = "points[" + std::to_string(i) + "]";
        if (!obj.is_object()) syntax(where, "must be an object");
        for (auto it = obj.begin(); it != obj.end(); ++it) {
            const auto& k = it.key();
            if (k != "id" && k != "parent" && k != "second_proximity" && k != "weight" && k != "label")
                syntax(where, "unknown field '" + k + "'");
        }
        DocumentPoint pt;
        auto id = optional_string(obj, "id", where);
        if (!id) syntax(where, "missing 'id'");
        pt.id = *id;
        pt.parent = optional_string(obj, "parent", where);
        pt.second_proximity = optional_string(obj, "second_proximity", where);
        pt.label = optional_string(obj, "label", where);
        auto w = obj.find("weight");
        if (w == obj.end()) syntax(where, "missing 'weight'");
        pt.weight = parse_weight(*w, where);
        doc.points.push_back(std::move(pt));
    }
    return doc;
}

std::string serialize_document(const ClusterDocument& doc) {
    std::ostringstream out;
    out << "{\n  \"format_version\": " << doc.format_version << ",\n";
    out << "  \"weight_kind\": " << quote(std::string(to_string(doc.kind))) << ",\n";
    if (doc.points.empty()) {
        out << "  \"points\": []\n}\n";
        return out.str();
    }
    out << "  \"points\": [\n";
    for (std::size_t i = 0; i < doc.points.size(); ++i) {
        const auto& p = doc.points[i];
        out << "    {\"id\": " << quote(p.id);
        if (p.parent) out << ", \"parent\": " << quote(*p.parent);
        if (p.second_proximity) out << ", \"second_proximity\": " << quote(*p.second_proximity);
        out << ", \"weight\": " << weight_text(p.weight);
        if (p.label) out << ", \"label\": " << quote(*p.label);
        out << "}" << (i + 1 < doc.points.size() ? "," : "") << "\n";
    }
    out << "  ]\n}\n";
    return out.str();
}

std::vector<Diagnostic> document_diagnostics(const ClusterDocument& doc) {
    std::vector<Diagnostic> out;
    std::map<std::string, std::uint32_t> index;
    std::vector<PointRecord> records;
    bool references_ok = true;
    for (std::uint32_t i = 0; i < doc.points.size(); ++i) {
        const auto& p = doc.points[i];
        const PointId self{i};
        if (!index.emplace(p.id, i).second) {
            out.push_back({ErrorCode::DuplicateId, self, "id '" + p.id + "' is used twice"});
            references_ok = false;
            continue;
        }
        PointRecord r{self, p.id, std::nullopt, std::nullopt};
        auto resolve = [&](const std::string& ref, ErrorCode missing) -> std::optional<PointId> {
            if (ref == p.id) {
                out.push_back({ErrorCode::SelfReference, self, "'" + p.id + "' refers to itself"});
                return std::nullopt;
            }
            auto it = index.find(ref);
            if (it == index.end()) {
                out.push_back({missing, self, "'" + p.id + "' refers to '" + ref +
                                                  "', which is not an earlier point"});
                return std::nullopt;
            }
            return PointId{it->second};
        };
        if (p.parent) {
            r.parent = resolve(*p.parent, ErrorCode::UnknownParent);
            if (!r.parent) references_ok = false;
        }
        if (p.second_proximity) {
            if (!p.parent) {
                out.push_back({ErrorCode::IllegalProximity, self,
                               "'" + p.id + "' has a second proximity but no parent"});
                references_ok = false;
            }
            r.second_proximity = resolve(*p.second_proximity, ErrorCode::IllegalProximity);
            if (!r.second_proximity) references_ok = false;
        }
        if (p.weight < 0)
            out.push_back({ErrorCode::InvalidWeight, self, "'" + p.id + "' has negative weight"});
        records.push_back(std::move(r));
    }
    if (!references_ok) {
        // The arena cannot be built; still report the root problems validate() would find.
        std::vector<std::uint32_t> roots;
        for (std::uint32_t i = 0; i < doc.points.size(); ++i)
            if (!doc.points[i].parent) roots.push_back(i);
        if (roots.empty()) out.push_back({ErrorCode::MissingOrigin, std::nullopt, "no point without a parent"});
        for (std::size_t k = 1; k < roots.size(); ++k)
            out.push_back({ErrorCode::DuplicateOrigin, PointId{roots[k]},
                           "'" + doc.points[roots[k]].id + "' is a second origin"});
        return out;
    }

    const auto tree = ArenaTree::from_records(records);
    for (auto& d : validate(tree)) out.push_back(std::move(d));
    for (std::uint32_t i = 0; i < doc.points.size(); ++i) {
        const auto& p = doc.points[i];
        if (p.weight > 0 && p.parent && doc.points[records[i].parent->value].weight <= 0)
            out.push_back({ErrorCode::NotDownwardClosed, PointId{i},
                           "'" + p.id + "' is weighted but its parent '" + *p.parent + "' is not"});
    }
    return out;
}

LoadedCluster load_document(const ClusterDocument& doc) {
    auto diagnostics = document_diagnostics(doc);
    if (!diagnostics.empty()) {
        const std::string first = format_diagnostic(diagnostics.front());
        throw DocumentError(ErrorCode::ValidationError, first, std::move(diagnostics));
    }
    std::vector<PointRecord> records;
    std::map<std::string, PointId> index;
    std::map<PointId, BigInt> weights;
    for (std::uint32_t i = 0; i < doc.points.size(); ++i) {
        const auto& p = doc.points[i];
        PointRecord r{PointId{i}, p.id, std::nullopt, std::nullopt};
        if (p.parent) r.parent = index.at(*p.parent);
        if (p.second_proximity) r.second_proximity = index.at(*p.second_proximity);
        index.emplace(p.id, PointId{i});
        if (p.weight > 0) weights.emplace(PointId{i}, p.weight);
        records.push_back(std::move(r));
    }
    auto tree = std::make_unique<ArenaTree>(ArenaTree::from_records(std::move(records)));
    WeightedCluster cluster(*tree, doc.kind, std::move(weights));
    return LoadedCluster{std::move(tree), std::move(cluster)};
}

LoadedCluster parse(std::string_view text) { return load_document(parse_document(text)); }

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DocumentError(ErrorCode::SyntaxError, "cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

LoadedCluster load_file(const std::string& path) { return parse(read_text_file(path)); }

std::map<PointId, std::string> document_names(const ArenaTree& tree) {
    std::map<PointId, std::string> names;
    int created = 0;
    for (const auto& r : tree.records())
        names.emplace(r.id, r.label ? *r.label : "q#" + std::to_string(++created));
    return names;
}

namespace {

ClusterDocument make_document(const WeightedCluster& k, bool whole_arena) {
    const auto& tree = k.tree();
    const auto names = document_names(tree);
    ClusterDocument doc;
    doc.kind = k.kind();
    for (const auto& r : tree.records()) {
        if (!whole_arena && !k.contains(r.id)) continue;
        DocumentPoint p;
        p.id = names.at(r.id);
        if (r.parent) p.parent = names.at(*r.parent);
        if (r.second_proximity) p.second_proximity = names.at(*r.second_proximity);
        p.weight = k.weight_or_zero(r.id);
        doc.points.push_back(std::move(p));
    }
    return doc;
}

}  // namespace

ClusterDocument to_document(const WeightedCluster& k) { return make_document(k, true); }
ClusterDocument cluster_only_document(const WeightedCluster& k) { return make_document(k, false); }

std::string serialize(const ArenaTree& tree, const WeightedCluster& k) {
    if (&tree != &k.tree()) throw Error(ErrorCode::ArenaMismatch, "cluster lives in another arena");
    return serialize_document(to_document(k));
}

namespace {

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

std::string node(PointId p) { return "n" + std::to_string(p.value); }

}  // namespace

std::string render_dot(const ArenaTree& tree, const std::vector<DotOverlay>& overlays,
                       DotAnnotation annotation, const std::map<PointId, HeightPair>& heights) {
    const auto names = document_names(tree);
    const WeightedCluster* curve = nullptr;
    for (const auto& o : overlays)
        if (o.cluster->kind() != WeightKind::Virtual) curve = o.cluster;
    if (!curve && !overlays.empty()) curve = overlays.front().cluster;

    std::ostringstream out;
    out << "digraph enriques {\n";
    out << "  node [shape=circle, fontname=\"Helvetica\", fontsize=10];\n";
    out << "  edge [arrowhead=none];\n";
    for (const auto& r : tree.records()) {
        std::string label = dot_escape(names.at(r.id));
        if (annotation == DotAnnotation::Weights) {
            for (const auto& o : overlays)
                if (o.cluster->contains(r.id))
                    label += "\\n" + dot_escape(o.name) + "=" + o.cluster->weight(r.id).str();
        } else if (annotation == DotAnnotation::HeightQuotients) {
            auto it = heights.find(r.id);
            if (it != heights.end()) label += "\\n" + it->second.m.str() + "/" + it->second.n.str();
        }
        out << "  " << node(r.id) << " [label=\"" << label << "\"";
        if (curve && curve->contains(r.id)) out << ", style=filled, fillcolor=black, fontcolor=white";
        out << "];\n";
    }
    for (const auto& r : tree.records()) {
        if (!r.parent) continue;
        out << "  " << node(*r.parent) << " -> " << node(r.id)
            << (r.second_proximity ? " [style=bold];\n" : " [style=solid];\n");
        if (r.second_proximity)
            out << "  " << node(r.id) << " -> " << node(*r.second_proximity)
                << " [style=dotted, constraint=false];\n";
    }
    for (std::size_t i = 0; i < overlays.size(); ++i) {
        const auto& o = overlays[i];
        if (o.cluster->empty()) continue;
        out << "  subgraph overlay_" << i << " {\n    graph [label=\"" << dot_escape(o.name) << "\"];\n   ";
        for (auto p : o.cluster->points()) out << " " << node(p) << ";";
        out << "\n  }\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace polarsing

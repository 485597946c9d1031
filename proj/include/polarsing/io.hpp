#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "polarsing/cluster.hpp"
#include "polarsing/recovery.hpp"

namespace polarsing {

inline constexpr int kFormatVersion = 1;

struct DocumentPoint {
    std::string id;
    std::optional<std::string> parent;
    std::optional<std::string> second_proximity;
    BigInt weight;
    std::optional<std::string> label;
    friend bool operator==(const DocumentPoint&, const DocumentPoint&) = default;
};

struct ClusterDocument {
    int format_version = kFormatVersion;
    WeightKind kind = WeightKind::Virtual;
    std::vector<DocumentPoint> points;
    friend bool operator==(const ClusterDocument&, const ClusterDocument&) = default;
};

class DocumentError : public Error {
public:
    DocumentError(ErrorCode code, const std::string& message, std::vector<Diagnostic> diagnostics = {})
        : Error(code, message), diagnostics_(std::move(diagnostics)) {}
    const std::vector<Diagnostic>& diagnostics() const { return diagnostics_; }

private:
    std::vector<Diagnostic> diagnostics_;
};

// Text <-> document. Weights are JSON integers, or decimal strings beyond 64 bits.
ClusterDocument parse_document(std::string_view text);
std::string serialize_document(const ClusterDocument& doc);

struct LoadedCluster {
    std::unique_ptr<ArenaTree> tree;  // point labels are the document ids
    WeightedCluster cluster;          // points of weight 0 stay in the arena only
};

// Every structural problem, aggregated; empty when the document loads.
std::vector<Diagnostic> document_diagnostics(const ClusterDocument& doc);
LoadedCluster load_document(const ClusterDocument& doc);
LoadedCluster parse(std::string_view text);
LoadedCluster load_file(const std::string& path);

// Unlabeled points are named "q#1", "q#2", ... in arena order.
std::map<PointId, std::string> document_names(const ArenaTree& tree);
// Whole arena, with weight 0 off the cluster.
ClusterDocument to_document(const WeightedCluster& k);
// Only the cluster's points.
ClusterDocument cluster_only_document(const WeightedCluster& k);
std::string serialize(const ArenaTree& tree, const WeightedCluster& k);

struct DotOverlay {
    std::string name;
    const WeightedCluster* cluster;
};

enum class DotAnnotation { None, Weights, HeightQuotients };

// Heights are needed only for DotAnnotation::HeightQuotients.
std::string render_dot(const ArenaTree& tree, const std::vector<DotOverlay>& overlays,
                       DotAnnotation annotation,
                       const std::map<PointId, HeightPair>& heights = {});

std::string read_text_file(const std::string& path);

}  // namespace polarsing

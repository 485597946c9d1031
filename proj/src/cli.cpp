#include "polarsing/cli.hpp"

#include <filesystem>
#include <fstream>

#include "CLI11.hpp"
#include "polarsing/io.hpp"
#include "polarsing/oracle.hpp"
#include "polarsing/ordering.hpp"
#include "polarsing/recovery.hpp"
#include "polarsing/similarity.hpp"

namespace polarsing {

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kInvalid = 2;

struct InvalidInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string describe(const ClusterDocument& doc, const Diagnostic& d) {
    std::string out(to_string(d.code));
    if (d.point && d.point->value < doc.points.size()) out += "\t" + doc.points[d.point->value].id;
    return out + "\t" + d.message;
}

int cmd_validate(const std::string& file, std::ostream& out) {
    const auto doc = parse_document(read_text_file(file));
    const auto diags = document_diagnostics(doc);
    for (const auto& d : diags) out << describe(doc, d) << "\n";
    if (!diags.empty()) return kInvalid;
    out << "ok\t" << doc.points.size() << " points\n";
    return kOk;
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw InvalidInput("cannot write '" + path + "'");
    f << text;
}

void print_association(const ArenaTree& tree, const std::vector<DicriticalAssociation>& rows,
                       std::ostream& out) {
    out << "d\tI_d\tp_d\tq_d\n";
    const auto names = document_names(tree);
    for (const auto& a : rows)
        out << names.at(a.dicritical) << "\t" << format_rational(a.invariant) << "\t"
            << names.at(a.base_free_point) << "\t" << names.at(a.rupture_point) << "\n";
}

int cmd_recover(const std::string& file, const std::string& algorithm, const std::string& out_path,
                const std::string& emit, bool trace, std::ostream& out, std::ostream& err) {
    auto loaded = load_file(file);
    if (loaded.cluster.kind() != WeightKind::Virtual)
        throw InvalidInput("recover expects a virtual (base point) cluster");
    std::vector<WalkStep> steps;
    const auto algo = algorithm == "grouped" ? Algorithm::Grouped : Algorithm::Basic;
    auto& tree = *loaded.tree;
    auto print_trace = [&] {
        if (!trace) return;
        const auto names = document_names(tree);
        std::optional<PointId> current;
        for (const auto& s : steps) {
            if (current != s.dicritical) {
                out << "walk " << names.at(s.dicritical) << "\n";
                current = s.dicritical;
            }
            out << format_walk_step(names.at(s.point), s) << "\n";
        }
    };
    try {
        const auto result = recover_with(algo, tree, loaded.cluster, trace ? &steps : nullptr);
        print_trace();
        print_association(tree, result.association, out);
        for (const auto& w : result.warnings) err << "warning: " << w << "\n";

        std::vector<std::pair<std::string, const WeightedCluster*>> docs;
        if (emit == "values" || emit == "both") docs.emplace_back("values", &result.values);
        if (emit == "multiplicities" || emit == "both")
            docs.emplace_back("multiplicities", &result.multiplicities);
        for (const auto& [tag, k] : docs) {
            const auto text = serialize_document(cluster_only_document(*k));
            if (out_path.empty()) {
                out << "\n" << text;
            } else if (docs.size() == 1) {
                write_text(out_path, text);
            } else {
                std::filesystem::path p(out_path);
                auto stem = p.extension() == ".json" ? p.stem().string() : p.filename().string();
                write_text((p.parent_path() / (stem + "." + tag + ".json")).string(), text);
            }
        }
        return kOk;
    } catch (const RecoveryError& e) {
        print_trace();
        err << e.what() << "\n";
        if (!e.partial().empty()) {
            err << "partial association:\n";
            print_association(tree, e.partial(), err);
        }
        return kNegative;
    }
}

CurveCluster load_curve(LoadedCluster& loaded) {
    auto k = loaded.cluster;
    if (k.kind() == WeightKind::Virtual) throw InvalidInput("invariants expects multiplicities or values");
    if (k.kind() == WeightKind::Value) k = multiplicities_from_values(k);
    auto problems = CurveCluster::violations(k);
    if (!problems.empty()) throw InvalidInput("not a singular-point cluster: " + problems.front());
    return CurveCluster::from(std::move(k));
}

int cmd_invariants(const std::string& file, const std::string& local, std::ostream& out) {
    auto loaded = load_file(file);
    const auto curve = load_curve(loaded);
    const auto& tree = *loaded.tree;
    std::optional<PointId> base;
    if (!local.empty()) {
        base = tree.find_label(local);
        if (!base || !curve.cluster().contains(*base) || !tree.is_free(*base))
            throw InvalidInput("'" + local + "' is not a free point of the curve");
    }
    out << "rupture\tI\n";
    std::set<Rational> invariants;
    for (auto q : rupture_points(curve)) {
        if (base && !(q == *base || is_satellite_of(tree, q, *base))) continue;
        const auto value = invariant_quotient(curve, q).value;
        invariants.insert(value);
        out << tree.name(q) << "\t" << format_rational(value) << "\n";
    }
    out << "polar_invariants";
    for (const auto& r : invariants) out << "\t" << format_rational(r);
    out << "\n";
    return kOk;
}

int cmd_compare(const std::string& a, const std::string& b, const std::string& mode, std::ostream& out) {
    auto ka = load_file(a);
    auto kb = load_file(b);
    const auto fa = canonical_form(ka.cluster);
    const auto fb = canonical_form(kb.cluster);
    out << a << "\t" << fa.hex_digest() << "\n";
    out << b << "\t" << fb.hex_digest() << "\n";
    bool related;
    if (mode == "equal")
        related = to_document(ka.cluster) == to_document(kb.cluster);
    else
        related = fa == fb;
    out << (related ? mode : "not " + mode) << "\n";
    return related ? kOk : kNegative;
}

// Adds the points of `doc` to `tree`, matching ids against existing labels.
WeightedCluster merge_overlay(ArenaTree& tree, const ClusterDocument& doc) {
    const auto diags = document_diagnostics(doc);
    if (!diags.empty()) throw InvalidInput("overlay: " + describe(doc, diags.front()));
    std::map<PointId, BigInt> weights;
    for (const auto& p : doc.points) {
        std::optional<PointId> parent, second;
        if (p.parent) parent = tree.find_label(*p.parent);
        if (p.second_proximity) second = tree.find_label(*p.second_proximity);
        PointId id;
        if (auto existing = tree.find_label(p.id)) {
            id = *existing;
            if (tree.parent(id) != parent || tree.second_proximity(id) != second)
                throw InvalidInput("overlay point '" + p.id + "' disagrees with the arena");
        } else {
            id = tree.add_point(parent, second, p.id);
        }
        if (p.weight > 0) weights.emplace(id, p.weight);
    }
    return WeightedCluster(tree, doc.kind, std::move(weights));
}

int cmd_render(const std::string& file, const std::vector<std::string>& overlay_files,
               const std::string& annotate, std::ostream& out) {
    auto loaded = load_file(file);
    auto& tree = *loaded.tree;
    std::vector<WeightedCluster> extra;
    for (const auto& f : overlay_files) extra.push_back(merge_overlay(tree, parse_document(read_text_file(f))));
    std::vector<DotOverlay> overlays{{std::filesystem::path(file).stem().string(), &loaded.cluster}};
    for (std::size_t i = 0; i < extra.size(); ++i)
        overlays.push_back({std::filesystem::path(overlay_files[i]).stem().string(), &extra[i]});

    DotAnnotation mode = DotAnnotation::None;
    std::map<PointId, HeightPair> heights;
    if (annotate == "weights") mode = DotAnnotation::Weights;
    if (annotate == "mn") {
        mode = DotAnnotation::HeightQuotients;
        const WeightedCluster* bp = nullptr;
        for (const auto& o : overlays)
            if (!bp && o.cluster->kind() == WeightKind::Virtual) bp = o.cluster;
        if (!bp) throw InvalidInput("m/n annotation needs a virtual (base point) cluster");
        auto inv = MorphismInvariants::compute(*bp);
        for (auto p : tree.points()) heights.emplace(p, inv.extend_to(p));
    }
    out << render_dot(tree, overlays, mode, heights);
    return kOk;
}

}  // namespace

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Recover the singular points of a plane curve from the base points of its polars"};
    app.name("polarsing");
    app.require_subcommand(1);

    std::string file, file_b, algorithm = "basic", out_path, emit = "values", local, mode = "similar",
                                annotate = "none";
    std::vector<std::string> overlays;
    bool trace = false;

    auto* validate = app.add_subcommand("validate", "Check a cluster document");
    validate->add_option("file", file, "cluster document")->required();

    auto* recover = app.add_subcommand("recover", "Recover S from a base point cluster");
    recover->add_option("file", file, "base point cluster (virtual)")->required();
    recover->add_option("--algorithm", algorithm)->check(CLI::IsMember({"basic", "grouped"}));
    recover->add_option("--out", out_path, "write the recovered cluster(s) here");
    recover->add_option("--emit", emit)->check(CLI::IsMember({"values", "multiplicities", "both"}));
    recover->add_flag("--trace", trace, "print every walk step");

    auto* invariants = app.add_subcommand("invariants", "Rupture points and polar invariants");
    invariants->add_option("file", file, "curve cluster (multiplicities or values)")->required();
    invariants->add_option("--local", local, "restrict to one free point and its satellites");

    auto* compare = app.add_subcommand("compare", "Compare two clusters");
    compare->add_option("a", file)->required();
    compare->add_option("b", file_b)->required();
    compare->add_option("--mode", mode)->check(CLI::IsMember({"equal", "similar"}));

    auto* render = app.add_subcommand("render", "Enriques diagram as DOT");
    render->add_option("file", file)->required();
    render->add_option("--overlay", overlays, "further clusters over the same points");
    render->add_option("--annotate", annotate)->check(CLI::IsMember({"mn", "weights", "none"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInvalid;
    }

    try {
        if (*validate) return cmd_validate(file, out);
        if (*recover) return cmd_recover(file, algorithm, out_path, emit, trace, out, err);
        if (*invariants) return cmd_invariants(file, local, out);
        if (*compare) return cmd_compare(file, file_b, mode, out);
        if (*render) return cmd_render(file, overlays, annotate, out);
    } catch (const DocumentError& e) {
        err << e.what() << "\n";
        for (std::size_t i = 1; i < e.diagnostics().size(); ++i)
            err << format_diagnostic(e.diagnostics()[i]) << "\n";
        return kInvalid;
    } catch (const InvalidInput& e) {
        err << e.what() << "\n";
        return kInvalid;
    } catch (const Error& e) {
        err << e.what() << "\n";
        return kNegative;
    }
    return kInvalid;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<std::string> storage{"polarsing"};
    storage.insert(storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : storage) argv.push_back(s.data());
    return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace polarsing

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "polarsing/io.hpp"
#include "polarsing/ordering.hpp"
#include "polarsing/recovery.hpp"
#include "polarsing/similarity.hpp"

namespace py = pybind11;
using namespace polarsing;

namespace {

py::object to_int(const BigInt& x) {
    const std::string s = x.str();
    return py::reinterpret_steal<py::object>(PyLong_FromString(s.c_str(), nullptr, 10));
}

py::object to_fraction(const Rational& r) {
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(to_int(numerator_of(r)), to_int(denominator_of(r)));
}

py::dict weights_dict(const WeightedCluster& k, const std::map<PointId, std::string>& names) {
    py::dict out;
    for (const auto& [p, w] : k.weights()) out[py::str(names.at(p))] = to_int(w);
    return out;
}

py::list name_list(const std::set<PointId>& points, const std::map<PointId, std::string>& names) {
    py::list out;
    for (auto p : points) out.append(names.at(p));
    return out;
}

py::dict recover_py(const std::string& text, const std::string& algorithm) {
    if (algorithm != "basic" && algorithm != "grouped")
        throw py::value_error("algorithm must be 'basic' or 'grouped'");
    auto loaded = parse(text);
    auto& tree = *loaded.tree;
    const auto r = recover_with(algorithm == "grouped" ? Algorithm::Grouped : Algorithm::Basic, tree,
                                loaded.cluster);
    const auto names = document_names(tree);
    py::list association;
    for (const auto& a : r.association) {
        py::dict row;
        row["dicritical"] = names.at(a.dicritical);
        row["invariant"] = to_fraction(a.invariant);
        row["base_free_point"] = names.at(a.base_free_point);
        row["rupture_point"] = names.at(a.rupture_point);
        association.append(row);
    }
    py::dict out;
    out["rupture"] = name_list(r.rupture, names);
    out["singular"] = name_list(r.singular, names);
    out["created"] = name_list(r.created, names);
    out["values"] = weights_dict(r.values, names);
    out["multiplicities"] = weights_dict(r.multiplicities, names);
    out["association"] = association;
    out["values_document"] = serialize_document(cluster_only_document(r.values));
    out["multiplicities_document"] = serialize_document(cluster_only_document(r.multiplicities));
    out["warnings"] = r.warnings;
    return out;
}

CurveCluster curve_from(const WeightedCluster& k) {
    if (k.kind() == WeightKind::Virtual) throw Error(ErrorCode::WrongKind, "expected multiplicities or values");
    return CurveCluster::from(k.kind() == WeightKind::Value ? multiplicities_from_values(k) : k);
}

py::dict invariants_py(const std::string& text, std::optional<std::string> local) {
    auto loaded = parse(text);
    const auto curve = curve_from(loaded.cluster);
    const auto& tree = *loaded.tree;
    std::optional<PointId> base;
    if (local) {
        base = tree.find_label(*local);
        if (!base) throw py::key_error(*local);
    }
    const auto invariants = base ? polar_invariants_local(curve, *base) : polar_invariants(curve);
    py::dict rupture;
    for (auto q : rupture_points(curve))
        if (!base || q == *base || is_satellite_of(tree, q, *base))
            rupture[py::str(tree.name(q))] = to_fraction(invariant_quotient(curve, q).value);
    py::list polar;
    for (const auto& i : invariants) polar.append(to_fraction(i));
    py::dict out;
    out["rupture"] = rupture;
    out["polar_invariants"] = polar;
    return out;
}

py::list validate_py(const std::string& text) {
    const auto doc = parse_document(text);
    py::list out;
    for (const auto& d : document_diagnostics(doc)) {
        py::object id = py::none();
        if (d.point && d.point->value < doc.points.size()) id = py::str(doc.points[d.point->value].id);
        out.append(py::make_tuple(std::string(to_string(d.code)), id, d.message));
    }
    return out;
}

std::string render_py(const std::string& text, const std::string& annotate) {
    auto loaded = parse(text);
    DotAnnotation mode = DotAnnotation::None;
    std::map<PointId, HeightPair> heights;
    if (annotate == "weights") {
        mode = DotAnnotation::Weights;
    } else if (annotate == "mn") {
        mode = DotAnnotation::HeightQuotients;
        auto inv = MorphismInvariants::compute(loaded.cluster);
        for (auto p : loaded.tree->points()) heights.emplace(p, inv.extend_to(p));
    } else if (annotate != "none") {
        throw py::value_error("annotate must be 'mn', 'weights' or 'none'");
    }
    return render_dot(*loaded.tree, {{"cluster", &loaded.cluster}}, mode, heights);
}

std::string convert(const std::string& text, bool to_values) {
    auto loaded = parse(text);
    const auto k = to_values ? values_from_multiplicities(loaded.cluster) : multiplicities_from_values(loaded.cluster);
    return serialize_document(cluster_only_document(k));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "polar base points to singular points of plane curves";

    static py::exception<Error> error(m, "PolarsingError");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::object exc = py::handle(error.ptr())(e.what());
            exc.attr("code") = std::string(to_string(e.code()));
            PyErr_SetObject(error.ptr(), exc.ptr());
        }
    });

    m.def("recover", &recover_py, py::arg("document"), py::arg("algorithm") = "basic",
          "Recover the singular points, values and multiplicities from a base point cluster.");
    m.def("invariants", &invariants_py, py::arg("document"), py::arg("local") = py::none(),
          "Rupture points and polar invariants of a curve cluster.");
    m.def("validate", &validate_py, py::arg("document"),
          "List of (code, point id, message); empty when the document is valid.");
    m.def(
        "canonical_digest", [](const std::string& text) { return canonical_form(parse(text).cluster).hex_digest(); },
        py::arg("document"));
    m.def(
        "are_similar",
        [](const std::string& a, const std::string& b) { return are_similar(parse(a).cluster, parse(b).cluster); },
        py::arg("a"), py::arg("b"));
    m.def("render_dot", &render_py, py::arg("document"), py::arg("annotate") = "none");
    m.def(
        "values_from_multiplicities", [](const std::string& t) { return convert(t, true); }, py::arg("document"));
    m.def(
        "multiplicities_from_values", [](const std::string& t) { return convert(t, false); }, py::arg("document"));
}

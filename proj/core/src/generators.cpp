#include "relcoh/generators.hpp"

#include "relcoh/errors.hpp"
#include "relcoh/transport.hpp"

#include <algorithm>
#include <string>

namespace relcoh {

namespace {

std::array<FaceId, 2> interior_faces(const SurfaceComplex& complex, EdgeId e)
{
    const auto faces = complex.edge_faces(e);
    if (faces.size() != 2) {
        throw ConsistencyError(ConsistencyErrorKind::CountMismatch,
                               "critical edge " + std::to_string(e) + " is a boundary edge");
    }
    return {faces[0], faces[1]};
}

Cochain1 transport_between(const SurfaceComplex& complex, const DualGraph& dual, const TreeCotree& trees,
                           FaceId from, FaceId to, EdgeId start, EdgeId end)
{
    const auto path = tree_path(trees.dual.tree, dual.face_node(from), dual.face_node(to));
    auto result = transport(complex, dual, path, start, end);
    if (!result.consistent) {
        throw ConsistencyError(ConsistencyErrorKind::CountMismatch,
                               "transport from edge " + std::to_string(start) + " to " + std::to_string(end)
                                   + " is inconsistent");
    }
    return std::move(result.cochain);
}

EdgeId min_edge(const ContactComponent& component)
{
    return *std::min_element(component.edges.begin(), component.edges.end());
}

void expect_count(const char* what, std::size_t actual, std::int64_t expected)
{
    if (static_cast<std::int64_t>(actual) != expected) {
        throw ConsistencyError(ConsistencyErrorKind::CountMismatch,
                               std::string(what) + ": " + std::to_string(actual) + " generators, expected "
                                   + std::to_string(expected));
    }
}

Cochain1 to_global(const Cochain1& local, const std::vector<EdgeId>* edge_map)
{
    if (edge_map == nullptr) {
        return local;
    }
    std::vector<Cochain1::Entry> entries;
    entries.reserve(local.support_size());
    for (const auto& [e, value] : local.entries()) {
        entries.emplace_back((*edge_map)[static_cast<std::size_t>(e)], value);
    }
    return Cochain1::from_entries(std::move(entries));
}

} // namespace

std::string_view to_string(GeneratorClass kind) noexcept
{
    switch (kind) {
    case GeneratorClass::Handle: return "ha";
    case GeneratorClass::Hole: return "ho";
    case GeneratorClass::Contact: return "co";
    }
    return "??";
}

std::optional<GeneratorClass> generator_class_from_string(std::string_view tag) noexcept
{
    if (tag == "ha") {
        return GeneratorClass::Handle;
    }
    if (tag == "ho") {
        return GeneratorClass::Hole;
    }
    if (tag == "co") {
        return GeneratorClass::Contact;
    }
    return std::nullopt;
}

std::vector<Generator> GeneratorSet::all() const
{
    std::vector<Generator> out;
    out.reserve(size());
    out.insert(out.end(), handles.begin(), handles.end());
    out.insert(out.end(), holes.begin(), holes.end());
    out.insert(out.end(), contacts.begin(), contacts.end());
    return out;
}

HandleResult handle_generators(const SurfaceComplex& complex, const DualGraph& dual, const TreeCotree& trees)
{
    HandleResult out;
    std::vector<std::pair<EdgeId, Cochain1>> built;
    for (EdgeId e : trees.critical_edges) {
        const auto [f1, f2] = interior_faces(complex, e);
        const auto path = tree_path(trees.dual.tree, dual.face_node(f1), dual.face_node(f2));
        auto result = transport(complex, dual, path, e, e);
        if (result.consistent) {
            built.emplace_back(e, std::move(result.cochain));
        } else {
            out.twisted_edges.push_back(e);
        }
    }

    if (!out.twisted_edges.empty()) {
        const EdgeId pivot = out.twisted_edges.front();
        out.twisted_pivot = pivot;
        const auto [p1, p2] = interior_faces(complex, pivot);
        for (std::size_t i = 1; i < out.twisted_edges.size(); ++i) {
            const EdgeId e = out.twisted_edges[i];
            const auto [f1, f2] = interior_faces(complex, e);
            const auto first = transport_between(complex, dual, trees, f1, p1, e, pivot);
            const auto second = transport_between(complex, dual, trees, f2, p2, e, pivot);
            auto combined = (first + second).with_value(e, first[e]).with_value(pivot, first[pivot]);
            built.emplace_back(e, std::move(combined));
        }
        std::sort(built.begin(), built.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    }

    for (auto& [e, g] : built) {
        out.defining_edges.push_back(e);
        out.generators.push_back(std::move(g));
    }
    return out;
}

std::vector<Cochain1> hole_generators(const SurfaceComplex& complex, const BoundaryPartition& bp)
{
    std::vector<Cochain1> out;
    for (std::size_t h = 0; h + 1 < bp.holes.size(); ++h) {
        std::vector<Cochain0::Entry> indicator;
        for (VertexId v : bp.holes[h].vertices) {
            indicator.emplace_back(v, 1);
        }
        out.push_back(coboundary0(complex, Cochain0::from_entries(std::move(indicator))));
    }
    return out;
}

std::vector<Cochain1> contact_generators(const SurfaceComplex& complex, const DualGraph& dual, const TreeCotree& trees,
                                         const BoundaryPartition& bp, const HandleResult& handles)
{
    std::vector<Cochain1> out;
    if (bp.contacts.empty()) {
        return out;
    }
    const EdgeId anchor = min_edge(bp.contacts.back());
    const FaceId anchor_face = complex.edge_faces(anchor).front();
    for (std::size_t j = 0; j + 1 < bp.contacts.size(); ++j) {
        const EdgeId e = min_edge(bp.contacts[j]);
        out.push_back(transport_between(complex, dual, trees, complex.edge_faces(e).front(), anchor_face, e, anchor));
    }
    if (handles.twisted_pivot) {
        const EdgeId pivot = *handles.twisted_pivot;
        const auto [p1, p2] = interior_faces(complex, pivot);
        const auto first = transport_between(complex, dual, trees, anchor_face, p1, anchor, pivot);
        const auto second = transport_between(complex, dual, trees, anchor_face, p2, anchor, pivot);
        out.push_back((first + second).with_value(pivot, first[pivot]));
    }
    return out;
}

ComponentGenerators compute_component(const SurfaceComplex& complex, const BoundaryPartition& bp)
{
    ComponentGenerators out;
    const auto dual = build_dual(complex);
    out.trees = build_tree_cotree(complex, dual, bp.holes);
    out.handles = handle_generators(complex, dual, out.trees);
    if (!bp.holes.empty()) {
        out.holes = hole_generators(complex, bp);
    }
    if (!bp.contacts.empty()) {
        out.contacts = contact_generators(complex, dual, out.trees, bp, out.handles);
    }

    const bool twisted = !out.handles.twisted_edges.empty();
    const auto n_critical = static_cast<std::int64_t>(out.trees.critical_edges.size());
    const auto n_holes = static_cast<std::int64_t>(bp.holes.size());
    const auto n_contacts = static_cast<std::int64_t>(bp.contacts.size());
    expect_count("handle class", out.handles.generators.size(), n_critical - (twisted ? 1 : 0));
    expect_count("hole class", out.holes.size(), std::max<std::int64_t>(n_holes - 1, 0));
    expect_count("contact class", out.contacts.size(),
                 n_contacts == 0 ? 0 : (twisted ? n_contacts : n_contacts - 1));
    return out;
}

GeneratorSet compute_all(const SurfaceComplex& complex, std::span<const EdgeId> contact_edges)
{
    const auto global_bp = classify_boundary(complex, contact_edges);
    GeneratorSet out;
    out.warnings = global_bp.warnings;

    const auto component_count = label_components(complex).count;
    if (component_count == 0) {
        return out;
    }
    // A connected complex is processed in place. Otherwise every piece gets
    // its own numbering and results are mapped back through edge_map.
    std::vector<ComplexComponent> parts;
    std::vector<std::uint8_t> is_contact;
    if (component_count > 1) {
        parts = connected_components(complex);
        is_contact.assign(static_cast<std::size_t>(complex.edge_count()), 0);
        for (EdgeId e : contact_edges) {
            is_contact[static_cast<std::size_t>(e)] = 1;
        }
    }

    for (std::int32_t c = 0; c < component_count; ++c) {
        const bool whole = parts.empty();
        const auto& local = whole ? complex : parts[static_cast<std::size_t>(c)].complex;
        const std::vector<EdgeId>* edge_map = whole ? nullptr : &parts[static_cast<std::size_t>(c)].edge_map;
        BoundaryPartition local_bp;
        if (!whole) {
            std::vector<EdgeId> local_contacts;
            for (std::size_t i = 0; i < edge_map->size(); ++i) {
                if (is_contact[static_cast<std::size_t>((*edge_map)[i])]) {
                    local_contacts.push_back(static_cast<EdgeId>(i));
                }
            }
            local_bp = classify_boundary(local, local_contacts);
        }
        const auto& bp = whole ? global_bp : local_bp;
        const auto result = compute_component(local, bp);
        const auto id = c;

        for (const auto& g : result.handles.generators) {
            out.handles.push_back({GeneratorClass::Handle, id, to_global(g, edge_map)});
        }
        for (const auto& g : result.holes) {
            out.holes.push_back({GeneratorClass::Hole, id, to_global(g, edge_map)});
        }
        for (const auto& g : result.contacts) {
            out.contacts.push_back({GeneratorClass::Contact, id, to_global(g, edge_map)});
        }

        ComponentSummary s;
        s.component_id = id;
        s.vertex_count = local.vertex_count();
        s.edge_count = local.edge_count();
        s.face_count = local.face_count();
        s.euler_characteristic = euler_characteristic(local);
        s.hole_count = bp.hole_count();
        s.contact_count = bp.contact_count();
        const auto map_edge = [&](EdgeId e) { return edge_map ? (*edge_map)[static_cast<std::size_t>(e)] : e; };
        for (EdgeId e : result.trees.critical_edges) {
            s.critical_edges.push_back(map_edge(e));
        }
        for (EdgeId e : result.handles.twisted_edges) {
            s.twisted_edges.push_back(map_edge(e));
        }
        if (result.handles.twisted_pivot) {
            s.twisted_pivot = map_edge(*result.handles.twisted_pivot);
        }
        if (s.hole_count > 0) {
            s.fixed_hole = s.hole_count - 1;
        }
        if (s.contact_count > 0) {
            s.fixed_contact = s.contact_count - 1;
        }
        s.orientable = s.twisted_edges.empty();
        s.handle_count = static_cast<std::int32_t>(result.handles.generators.size());
        s.hole_generator_count = static_cast<std::int32_t>(result.holes.size());
        s.contact_generator_count = static_cast<std::int32_t>(result.contacts.size());
        out.components.push_back(std::move(s));
    }
    return out;
}

} // namespace relcoh

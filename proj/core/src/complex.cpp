#include "relcoh/complex.hpp"

#include "relcoh/errors.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace relcoh {

namespace {

std::string face_name(FaceId f, const Triangle& t)
{
    return "face " + std::to_string(f) + " (" + std::to_string(t[0]) + ", " + std::to_string(t[1]) + ", " +
           std::to_string(t[2]) + ")";
}

Triangle sorted(Triangle t)
{
    std::sort(t.begin(), t.end());
    return t;
}

struct EdgeSlot {
    VertexId high;
    FaceId face;
    std::uint8_t slot;
    std::int8_t sign;
};

} // namespace

SurfaceComplex SurfaceComplex::build(const MeshData& mesh)
{
    return build(mesh.vertex_count, mesh.faces, mesh.coordinates);
}

SurfaceComplex SurfaceComplex::build(std::int32_t vertex_count, std::span<const Triangle> faces,
                                     std::vector<Point3> coordinates)
{
    if (vertex_count < 0) {
        throw TopologyError(TopologyErrorKind::VertexOutOfRange, "negative vertex count");
    }
    if (!coordinates.empty() && coordinates.size() != static_cast<std::size_t>(vertex_count)) {
        throw TopologyError(TopologyErrorKind::VertexOutOfRange,
                            "coordinate count does not match vertex count");
    }

    SurfaceComplex k;
    k.vertex_count_ = vertex_count;
    k.faces_.assign(faces.begin(), faces.end());
    k.coordinates_ = std::move(coordinates);

    const auto face_count = static_cast<std::int32_t>(faces.size());
    for (FaceId f = 0; f < face_count; ++f) {
        const auto& t = k.faces_[static_cast<std::size_t>(f)];
        for (VertexId v : t) {
            if (v < 0 || v >= vertex_count) {
                throw TopologyError(TopologyErrorKind::VertexOutOfRange,
                                    face_name(f, t) + " references vertex " + std::to_string(v));
            }
        }
        if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2]) {
            throw TopologyError(TopologyErrorKind::DegenerateFace, face_name(f, t) + " repeats a vertex");
        }
    }

    // Counting sort of the 3F face sides by their lower vertex, then by the
    // higher vertex inside each bucket. Buckets have vertex-degree size.
    std::vector<std::int32_t> bucket(static_cast<std::size_t>(vertex_count) + 1, 0);
    for (const auto& t : k.faces_) {
        for (int s = 0; s < 3; ++s) {
            ++bucket[static_cast<std::size_t>(std::min(t[s], t[(s + 1) % 3])) + 1];
        }
    }
    std::partial_sum(bucket.begin(), bucket.end(), bucket.begin());
    std::vector<EdgeSlot> slots(static_cast<std::size_t>(3 * face_count));
    {
        std::vector<std::int32_t> cursor(bucket.begin(), bucket.end() - 1);
        for (FaceId f = 0; f < face_count; ++f) {
            const auto& t = k.faces_[static_cast<std::size_t>(f)];
            for (int s = 0; s < 3; ++s) {
                const VertexId a = t[s];
                const VertexId b = t[(s + 1) % 3];
                const VertexId lo = std::min(a, b);
                slots[static_cast<std::size_t>(cursor[static_cast<std::size_t>(lo)]++)] =
                    EdgeSlot{std::max(a, b), f, static_cast<std::uint8_t>(s), static_cast<std::int8_t>(a < b ? 1 : -1)};
            }
        }
    }

    k.face_edges_.resize(static_cast<std::size_t>(face_count));
    // 2E = 3F + B and B <= V on a manifold.
    const auto edge_bound = (3 * static_cast<std::size_t>(face_count) + static_cast<std::size_t>(vertex_count)) / 2 + 1;
    k.edges_.reserve(edge_bound);
    k.edge_faces_.reserve(edge_bound);
    k.edge_face_count_.reserve(edge_bound);
    for (VertexId lo = 0; lo < vertex_count; ++lo) {
        const auto first = slots.begin() + bucket[static_cast<std::size_t>(lo)];
        const auto last = slots.begin() + bucket[static_cast<std::size_t>(lo) + 1];
        std::sort(first, last, [](const EdgeSlot& x, const EdgeSlot& y) {
            return x.high != y.high ? x.high < y.high : x.face < y.face;
        });
        for (auto it = first; it != last; ++it) {
            if (it == first || std::prev(it)->high != it->high) {
                k.edges_.push_back(Edge{lo, it->high});
                k.edge_faces_.push_back({kNone, kNone});
                k.edge_face_count_.push_back(0);
            }
            const auto e = static_cast<EdgeId>(k.edges_.size() - 1);
            auto& count = k.edge_face_count_.back();
            auto& incident = k.edge_faces_.back();
            if (count == 2) {
                throw TopologyError(TopologyErrorKind::NonManifoldEdge,
                                    "edge (" + std::to_string(lo) + ", " + std::to_string(it->high) +
                                        ") lies on three or more faces");
            }
            if (count == 1) {
                const FaceId other = incident[0];
                if (sorted(k.faces_[static_cast<std::size_t>(other)]) ==
                    sorted(k.faces_[static_cast<std::size_t>(it->face)])) {
                    throw TopologyError(TopologyErrorKind::DuplicateFace,
                                        face_name(it->face, k.faces_[static_cast<std::size_t>(it->face)]) +
                                            " duplicates face " + std::to_string(other));
                }
            }
            incident[count++] = it->face;
            k.face_edges_[static_cast<std::size_t>(it->face)][it->slot] = FaceEdge{e, it->sign};
        }
    }

    for (auto c : k.edge_face_count_) {
        if (c == 1) {
            ++k.boundary_edge_count_;
        }
    }

    // Vertex adjacency. Iterating edges in id order appends neighbors in
    // increasing vertex id for every vertex.
    k.neighbor_offsets_.assign(static_cast<std::size_t>(vertex_count) + 1, 0);
    for (const auto& e : k.edges_) {
        ++k.neighbor_offsets_[static_cast<std::size_t>(e.tail) + 1];
        ++k.neighbor_offsets_[static_cast<std::size_t>(e.head) + 1];
    }
    std::partial_sum(k.neighbor_offsets_.begin(), k.neighbor_offsets_.end(), k.neighbor_offsets_.begin());
    k.neighbors_.resize(k.edges_.size() * 2);
    {
        std::vector<std::int32_t> cursor(k.neighbor_offsets_.begin(), k.neighbor_offsets_.end() - 1);
        for (EdgeId e = 0; e < k.edge_count(); ++e) {
            const auto& edge = k.edges_[static_cast<std::size_t>(e)];
            k.neighbors_[static_cast<std::size_t>(cursor[static_cast<std::size_t>(edge.tail)]++)] =
                Neighbor{edge.head, e};
            k.neighbors_[static_cast<std::size_t>(cursor[static_cast<std::size_t>(edge.head)]++)] =
                Neighbor{edge.tail, e};
        }
    }

    // Every vertex must carry a single fan of faces.
    std::vector<std::int32_t> vertex_faces_offset(static_cast<std::size_t>(vertex_count) + 1, 0);
    for (const auto& t : k.faces_) {
        for (VertexId v : t) {
            ++vertex_faces_offset[static_cast<std::size_t>(v) + 1];
        }
    }
    std::partial_sum(vertex_faces_offset.begin(), vertex_faces_offset.end(), vertex_faces_offset.begin());
    std::vector<std::int32_t> stamp(static_cast<std::size_t>(face_count), kNone);
    std::vector<FaceId> stack;
    for (VertexId v = 0; v < vertex_count; ++v) {
        const auto incident = vertex_faces_offset[static_cast<std::size_t>(v) + 1] -
                              vertex_faces_offset[static_cast<std::size_t>(v)];
        if (incident == 0) {
            throw TopologyError(TopologyErrorKind::IsolatedVertex,
                                "vertex " + std::to_string(v) + " lies on no face");
        }
        const auto around = k.neighbors(v);
        // Seed with any face at v: the face of the first incident edge.
        const FaceId seed = k.edge_faces(around.front().edge).front();
        std::int32_t reached = 0;
        stack.assign(1, seed);
        stamp[static_cast<std::size_t>(seed)] = v;
        while (!stack.empty()) {
            const FaceId f = stack.back();
            stack.pop_back();
            ++reached;
            for (const auto& fe : k.face_edges_[static_cast<std::size_t>(f)]) {
                const auto& edge = k.edges_[static_cast<std::size_t>(fe.edge)];
                if (edge.tail != v && edge.head != v) {
                    continue;
                }
                for (FaceId g : k.edge_faces(fe.edge)) {
                    if (stamp[static_cast<std::size_t>(g)] != v) {
                        stamp[static_cast<std::size_t>(g)] = v;
                        stack.push_back(g);
                    }
                }
            }
        }
        if (reached != incident) {
            throw TopologyError(TopologyErrorKind::NonManifoldVertex,
                                "vertex " + std::to_string(v) + " joins several face fans");
        }
    }

    return k;
}

std::span<const FaceId> SurfaceComplex::edge_faces(EdgeId e) const
{
    const auto i = static_cast<std::size_t>(e);
    return {edge_faces_.at(i).data(), edge_face_count_[i]};
}

int SurfaceComplex::incidence(FaceId f, EdgeId e) const
{
    for (const auto& fe : face_edges(f)) {
        if (fe.edge == e) {
            return fe.sign;
        }
    }
    return 0;
}

int SurfaceComplex::vertex_incidence(EdgeId e, VertexId v) const
{
    const auto& ed = edge(e);
    if (ed.head == v) {
        return 1;
    }
    if (ed.tail == v) {
        return -1;
    }
    return 0;
}

std::span<const Neighbor> SurfaceComplex::neighbors(VertexId v) const
{
    const auto i = static_cast<std::size_t>(v);
    const auto first = neighbor_offsets_.at(i);
    const auto last = neighbor_offsets_.at(i + 1);
    return {neighbors_.data() + first, static_cast<std::size_t>(last - first)};
}

std::optional<EdgeId> SurfaceComplex::find_edge(VertexId a, VertexId b) const
{
    if (a < 0 || a >= vertex_count_ || b < 0 || b >= vertex_count_) {
        return std::nullopt;
    }
    const auto around = neighbors(a);
    const auto it = std::lower_bound(around.begin(), around.end(), b,
                                     [](const Neighbor& n, VertexId x) { return n.vertex < x; });
    if (it != around.end() && it->vertex == b) {
        return it->edge;
    }
    return std::nullopt;
}

MeshData SurfaceComplex::mesh_data() const
{
    return MeshData{vertex_count_, faces_, coordinates_};
}

std::int64_t euler_characteristic(const SurfaceComplex& complex)
{
    return std::int64_t{complex.vertex_count()} - complex.edge_count() + complex.face_count();
}

VertexId BoundaryCycle::min_vertex() const
{
    return vertices.empty() ? kNone : *std::min_element(vertices.begin(), vertices.end());
}

std::vector<BoundaryCycle> boundary_components(const SurfaceComplex& complex)
{
    std::vector<BoundaryCycle> cycles;
    if (complex.boundary_edge_count() == 0) {
        return cycles;
    }
    std::vector<std::uint8_t> visited(static_cast<std::size_t>(complex.vertex_count()), 0);
    auto boundary_edges_at = [&](VertexId v) {
        std::array<EdgeId, 2> out{kNone, kNone};
        int n = 0;
        for (const auto& nb : complex.neighbors(v)) {
            // Manifold vertices carry zero or two boundary edges.
            if (complex.is_boundary(nb.edge) && n < 2) {
                out[static_cast<std::size_t>(n++)] = nb.edge;
            }
        }
        if (n > 0 && out[0] > out[1]) {
            std::swap(out[0], out[1]);
        }
        return out;
    };

    for (VertexId start = 0; start < complex.vertex_count(); ++start) {
        if (visited[static_cast<std::size_t>(start)]) {
            continue;
        }
        const EdgeId first = boundary_edges_at(start)[0];
        if (first == kNone) {
            continue;
        }
        BoundaryCycle cycle;
        VertexId v = start;
        EdgeId e = first;
        while (true) {
            visited[static_cast<std::size_t>(v)] = 1;
            cycle.vertices.push_back(v);
            cycle.edges.push_back(e);
            const auto& ed = complex.edge(e);
            const VertexId next = ed.tail == v ? ed.head : ed.tail;
            if (next == start) {
                break;
            }
            const auto around = boundary_edges_at(next);
            e = around[0] == e ? around[1] : around[0];
            v = next;
        }
        cycles.push_back(std::move(cycle));
    }
    return cycles;
}

std::vector<EdgeId> BoundaryPartition::contact_edges() const
{
    std::vector<EdgeId> out;
    for (const auto& c : contacts) {
        out.insert(out.end(), c.edges.begin(), c.edges.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

BoundaryPartition classify_boundary(const SurfaceComplex& complex, std::span<const EdgeId> contact_edges)
{
    BoundaryPartition bp;
    bp.holes = boundary_components(complex);
    bp.insulated_edge.assign(static_cast<std::size_t>(complex.edge_count()), 0);
    bp.insulated_vertex.assign(static_cast<std::size_t>(complex.vertex_count()), 0);
    bp.hole_of_vertex.assign(static_cast<std::size_t>(complex.vertex_count()), kNone);

    std::vector<std::uint8_t> is_contact(static_cast<std::size_t>(complex.edge_count()), 0);
    for (EdgeId e : contact_edges) {
        if (e < 0 || e >= complex.edge_count()) {
            throw TopologyError(TopologyErrorKind::UnknownEdgeId, "contact edge id " + std::to_string(e));
        }
        if (!complex.is_boundary(e)) {
            const auto& ed = complex.edge(e);
            throw TopologyError(TopologyErrorKind::NotABoundaryEdge,
                                "contact edge (" + std::to_string(ed.tail) + ", " + std::to_string(ed.head) +
                                    ") is interior");
        }
        is_contact[static_cast<std::size_t>(e)] = 1;
    }

    for (std::int32_t h = 0; h < bp.hole_count(); ++h) {
        const auto& cycle = bp.holes[static_cast<std::size_t>(h)];
        const auto n = cycle.edges.size();
        for (VertexId v : cycle.vertices) {
            bp.hole_of_vertex[static_cast<std::size_t>(v)] = h;
        }
        for (std::size_t i = 0; i < n; ++i) {
            const EdgeId e = cycle.edges[i];
            if (!is_contact[static_cast<std::size_t>(e)]) {
                bp.insulated_edge[static_cast<std::size_t>(e)] = 1;
                bp.insulated_vertex[static_cast<std::size_t>(cycle.vertices[i])] = 1;
                bp.insulated_vertex[static_cast<std::size_t>(cycle.vertices[(i + 1) % n])] = 1;
            }
        }

        // Maximal runs of contact edges along the cycle, started right after
        // an insulated edge so that no run wraps around.
        std::size_t offset = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (!is_contact[static_cast<std::size_t>(cycle.edges[i])]) {
                offset = (i + 1) % n;
                break;
            }
        }
        ContactComponent run;
        auto flush = [&] {
            if (!run.edges.empty()) {
                run.hole = h;
                bp.contacts.push_back(std::move(run));
                run = ContactComponent{};
            }
        };
        for (std::size_t k = 0; k < n; ++k) {
            const std::size_t i = (offset + k) % n;
            const EdgeId e = cycle.edges[i];
            if (is_contact[static_cast<std::size_t>(e)]) {
                run.edges.push_back(e);
                const auto& ed = complex.edge(e);
                const VertexId lo = std::min(ed.tail, ed.head);
                run.min_vertex = run.min_vertex == kNone ? lo : std::min(run.min_vertex, lo);
            } else {
                flush();
            }
        }
        flush();
    }

    std::sort(bp.contacts.begin(), bp.contacts.end(),
              [](const ContactComponent& a, const ContactComponent& b) { return a.min_vertex < b.min_vertex; });
    for (const auto& c : bp.contacts) {
        if (c.edges.size() == 1) {
            const auto& ed = complex.edge(c.edges.front());
            bp.warnings.push_back("contact component at edge (" + std::to_string(ed.tail) + ", " +
                                  std::to_string(ed.head) + ") consists of a single edge");
        }
    }
    return bp;
}

ComponentLabels label_components(const SurfaceComplex& complex)
{
    ComponentLabels labels;
    labels.face_label.assign(static_cast<std::size_t>(complex.face_count()), kNone);
    std::vector<FaceId> stack;
    for (FaceId seed = 0; seed < complex.face_count(); ++seed) {
        if (labels.face_label[static_cast<std::size_t>(seed)] != kNone) {
            continue;
        }
        const std::int32_t label = labels.count++;
        labels.face_label[static_cast<std::size_t>(seed)] = label;
        stack.assign(1, seed);
        while (!stack.empty()) {
            const FaceId f = stack.back();
            stack.pop_back();
            for (const auto& fe : complex.face_edges(f)) {
                for (FaceId g : complex.edge_faces(fe.edge)) {
                    if (labels.face_label[static_cast<std::size_t>(g)] == kNone) {
                        labels.face_label[static_cast<std::size_t>(g)] = label;
                        stack.push_back(g);
                    }
                }
            }
        }
    }
    return labels;
}

std::vector<ComplexComponent> connected_components(const SurfaceComplex& complex)
{
    const auto labels = label_components(complex);
    std::vector<ComplexComponent> parts(static_cast<std::size_t>(labels.count));
    if (labels.count == 1) {
        auto& only = parts.front();
        only.complex = complex;
        only.vertex_map.resize(static_cast<std::size_t>(complex.vertex_count()));
        only.edge_map.resize(static_cast<std::size_t>(complex.edge_count()));
        only.face_map.resize(static_cast<std::size_t>(complex.face_count()));
        std::iota(only.vertex_map.begin(), only.vertex_map.end(), 0);
        std::iota(only.edge_map.begin(), only.edge_map.end(), 0);
        std::iota(only.face_map.begin(), only.face_map.end(), 0);
        return parts;
    }

    for (FaceId f = 0; f < complex.face_count(); ++f) {
        parts[static_cast<std::size_t>(labels.face_label[static_cast<std::size_t>(f)])].face_map.push_back(f);
    }
    // Vertices follow the label of any incident face; iterate in global
    // order so each component's vertex map is increasing.
    std::vector<std::int32_t> vertex_label(static_cast<std::size_t>(complex.vertex_count()), kNone);
    for (FaceId f = 0; f < complex.face_count(); ++f) {
        for (VertexId v : complex.face(f)) {
            vertex_label[static_cast<std::size_t>(v)] = labels.face_label[static_cast<std::size_t>(f)];
        }
    }
    std::vector<VertexId> local_id(static_cast<std::size_t>(complex.vertex_count()), kNone);
    for (VertexId v = 0; v < complex.vertex_count(); ++v) {
        auto& part = parts[static_cast<std::size_t>(vertex_label[static_cast<std::size_t>(v)])];
        local_id[static_cast<std::size_t>(v)] = static_cast<VertexId>(part.vertex_map.size());
        part.vertex_map.push_back(v);
    }

    const auto coords = complex.coordinates();
    for (auto& part : parts) {
        std::vector<Triangle> faces;
        faces.reserve(part.face_map.size());
        for (FaceId f : part.face_map) {
            const auto& t = complex.face(f);
            faces.push_back({local_id[static_cast<std::size_t>(t[0])], local_id[static_cast<std::size_t>(t[1])],
                             local_id[static_cast<std::size_t>(t[2])]});
        }
        std::vector<Point3> local_coords;
        if (!coords.empty()) {
            for (VertexId v : part.vertex_map) {
                local_coords.push_back(coords[static_cast<std::size_t>(v)]);
            }
        }
        part.complex = SurfaceComplex::build(static_cast<std::int32_t>(part.vertex_map.size()), faces,
                                             std::move(local_coords));
        part.edge_map.reserve(static_cast<std::size_t>(part.complex.edge_count()));
        for (const auto& e : part.complex.edges()) {
            part.edge_map.push_back(*complex.find_edge(part.vertex_map[static_cast<std::size_t>(e.tail)],
                                                       part.vertex_map[static_cast<std::size_t>(e.head)]));
        }
    }
    return parts;
}

ClosedComplex build_closed_complex(const SurfaceComplex& complex)
{
    const auto holes = boundary_components(complex);
    std::vector<VertexId> vertex_map(static_cast<std::size_t>(complex.vertex_count()), kNone);
    for (std::size_t h = 0; h < holes.size(); ++h) {
        for (VertexId v : holes[h].vertices) {
            vertex_map[static_cast<std::size_t>(v)] = -2 - static_cast<VertexId>(h);
        }
    }
    ClosedComplex closed;
    for (VertexId v = 0; v < complex.vertex_count(); ++v) {
        if (vertex_map[static_cast<std::size_t>(v)] == kNone) {
            vertex_map[static_cast<std::size_t>(v)] = closed.vertex_count++;
        }
    }
    const VertexId first_collapsed = closed.vertex_count;
    closed.vertex_count += static_cast<std::int32_t>(holes.size());
    for (auto& id : vertex_map) {
        if (id <= -2) {
            id = first_collapsed + (-2 - id);
        }
    }

    std::vector<EdgeId> edge_map(static_cast<std::size_t>(complex.edge_count()), kNone);
    for (EdgeId e = 0; e < complex.edge_count(); ++e) {
        if (complex.is_boundary(e)) {
            continue;
        }
        const auto& ed = complex.edge(e);
        edge_map[static_cast<std::size_t>(e)] = closed.edge_count();
        closed.edge_ends.push_back(
            {vertex_map[static_cast<std::size_t>(ed.tail)], vertex_map[static_cast<std::size_t>(ed.head)]});
        closed.edge_origin.push_back(e);
    }
    closed.face_boundary.resize(static_cast<std::size_t>(complex.face_count()));
    for (FaceId f = 0; f < complex.face_count(); ++f) {
        for (const auto& fe : complex.face_edges(f)) {
            const EdgeId mapped = edge_map[static_cast<std::size_t>(fe.edge)];
            if (mapped != kNone) {
                closed.face_boundary[static_cast<std::size_t>(f)].push_back(FaceEdge{mapped, fe.sign});
            }
        }
    }
    return closed;
}

} // namespace relcoh

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace relcoh {

using VertexId = std::int32_t;
using EdgeId = std::int32_t;
using FaceId = std::int32_t;

inline constexpr std::int32_t kNone = -1;

struct Point3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

/// Vertex triple of a face. The cyclic order is the face orientation.
using Triangle = std::array<VertexId, 3>;

/// Indexed triangle soup as read from disk, before any validation.
struct MeshData {
    std::int32_t vertex_count = 0;
    std::vector<Triangle> faces;
    std::vector<Point3> coordinates; // empty, or one per vertex
};

/// Oriented edge; always tail < head.
struct Edge {
    VertexId tail = kNone;
    VertexId head = kNone;
};

/// One entry of a face boundary: the edge and the incidence number +-1.
struct FaceEdge {
    EdgeId edge = kNone;
    int sign = 0;
};

struct Neighbor {
    VertexId vertex = kNone;
    EdgeId edge = kNone;
};

/**
 * Validated, immutable triangulated surface (V, E, F).
 *
 * Edges are derived from the faces and numbered in lexicographic order of
 * their (lower id, higher id) vertex pair; each edge is oriented from the
 * lower to the higher vertex id. Faces keep the orientation given by the
 * input triple. Construction rejects anything that is not a 2-manifold with
 * boundary: edges in three or more faces, pinched vertices, isolated
 * vertices, degenerate and duplicate faces.
 */
class SurfaceComplex {
public:
    SurfaceComplex() = default;

    static SurfaceComplex build(std::int32_t vertex_count, std::span<const Triangle> faces,
                                std::vector<Point3> coordinates = {});
    static SurfaceComplex build(const MeshData& mesh);

    std::int32_t vertex_count() const noexcept { return vertex_count_; }
    std::int32_t edge_count() const noexcept { return static_cast<std::int32_t>(edges_.size()); }
    std::int32_t face_count() const noexcept { return static_cast<std::int32_t>(faces_.size()); }
    std::int32_t boundary_edge_count() const noexcept { return boundary_edge_count_; }

    const Edge& edge(EdgeId e) const { return edges_.at(static_cast<std::size_t>(e)); }
    const Triangle& face(FaceId f) const { return faces_.at(static_cast<std::size_t>(f)); }
    const std::array<FaceEdge, 3>& face_edges(FaceId f) const
    {
        return face_edges_.at(static_cast<std::size_t>(f));
    }

    /// The one or two faces incident on `e`, in increasing face id.
    std::span<const FaceId> edge_faces(EdgeId e) const;
    bool is_boundary(EdgeId e) const { return edge_face_count_.at(static_cast<std::size_t>(e)) == 1; }

    /// Incidence number iota(f, e): +-1 if e lies on f, 0 otherwise.
    int incidence(FaceId f, EdgeId e) const;
    /// Incidence number iota(e, v): +1 at the head, -1 at the tail, 0 otherwise.
    int vertex_incidence(EdgeId e, VertexId v) const;

    /// Adjacent vertices of `v` with the connecting edge, sorted by vertex id.
    std::span<const Neighbor> neighbors(VertexId v) const;
    std::optional<EdgeId> find_edge(VertexId a, VertexId b) const;

    std::span<const Triangle> faces() const noexcept { return faces_; }
    std::span<const Edge> edges() const noexcept { return edges_; }
    std::span<const Point3> coordinates() const noexcept { return coordinates_; }
    MeshData mesh_data() const;

private:
    std::int32_t vertex_count_ = 0;
    std::int32_t boundary_edge_count_ = 0;
    std::vector<Edge> edges_;
    std::vector<Triangle> faces_;
    std::vector<std::array<FaceEdge, 3>> face_edges_;
    std::vector<std::array<FaceId, 2>> edge_faces_;
    std::vector<std::uint8_t> edge_face_count_;
    std::vector<std::int32_t> neighbor_offsets_;
    std::vector<Neighbor> neighbors_;
    std::vector<Point3> coordinates_;
};

std::int64_t euler_characteristic(const SurfaceComplex& complex);

/// One connected component of the boundary: a simple cycle. `edges[i]`
/// joins `vertices[i]` and `vertices[(i + 1) % n]`.
struct BoundaryCycle {
    std::vector<VertexId> vertices;
    std::vector<EdgeId> edges;

    VertexId min_vertex() const;
};

/// Boundary cycles ordered by their smallest vertex id. Each walk starts at
/// that vertex and leaves along its lower-numbered boundary edge.
std::vector<BoundaryCycle> boundary_components(const SurfaceComplex& complex);

struct ContactComponent {
    std::vector<EdgeId> edges; // along the boundary cycle
    std::int32_t hole = kNone; // index into BoundaryPartition::holes
    VertexId min_vertex = kNone;
};

/**
 * Split of the boundary into holes (boundary cycles), contact components and
 * the insulated closed subcomplex. Vertices where contact meets insulation
 * belong to the insulated part.
 */
struct BoundaryPartition {
    std::vector<BoundaryCycle> holes;
    std::vector<ContactComponent> contacts; // ordered by min_vertex
    std::vector<std::uint8_t> insulated_edge; // per edge
    std::vector<std::uint8_t> insulated_vertex; // per vertex
    std::vector<std::int32_t> hole_of_vertex; // kNone for interior vertices
    std::vector<std::string> warnings;

    std::int32_t hole_count() const noexcept { return static_cast<std::int32_t>(holes.size()); }
    std::int32_t contact_count() const noexcept { return static_cast<std::int32_t>(contacts.size()); }
    bool is_insulated_edge(EdgeId e) const { return insulated_edge.at(static_cast<std::size_t>(e)) != 0; }
    bool is_insulated_vertex(VertexId v) const
    {
        return insulated_vertex.at(static_cast<std::size_t>(v)) != 0;
    }
    std::vector<EdgeId> contact_edges() const;
};

BoundaryPartition classify_boundary(const SurfaceComplex& complex, std::span<const EdgeId> contact_edges);

/// Face-connectivity labels: faces sharing an edge get the same label.
/// Labels are numbered in order of each component's smallest face id.
struct ComponentLabels {
    std::int32_t count = 0;
    std::vector<std::int32_t> face_label;
};

ComponentLabels label_components(const SurfaceComplex& complex);

/// A connected piece with local-to-global index maps. Local vertex ids keep
/// the global relative order, so edge ids and orientations embed monotonically.
struct ComplexComponent {
    SurfaceComplex complex;
    std::vector<VertexId> vertex_map;
    std::vector<EdgeId> edge_map;
    std::vector<FaceId> face_map;
};

std::vector<ComplexComponent> connected_components(const SurfaceComplex& complex);

/**
 * CW complex obtained by collapsing each boundary cycle to a single 0-cell
 * and deleting the boundary edges. Vertices of K that are not on the
 * boundary come first (in their original order), followed by one vertex per
 * boundary cycle.
 */
struct ClosedComplex {
    std::int32_t vertex_count = 0;
    std::vector<std::array<VertexId, 2>> edge_ends; // (tail, head); equal ends for a loop
    std::vector<EdgeId> edge_origin; // edge id in K
    std::vector<std::vector<FaceEdge>> face_boundary; // edge ids refer to the closed complex

    std::int32_t edge_count() const noexcept { return static_cast<std::int32_t>(edge_ends.size()); }
    std::int32_t face_count() const noexcept { return static_cast<std::int32_t>(face_boundary.size()); }
    std::int64_t euler_characteristic() const noexcept
    {
        return std::int64_t{vertex_count} - edge_count() + face_count();
    }
};

ClosedComplex build_closed_complex(const SurfaceComplex& complex);

} // namespace relcoh

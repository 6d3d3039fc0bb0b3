#pragma once

#include "relcoh/complex.hpp"

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace relcoh {

using DualNodeId = std::int32_t;

enum class DualNodeKind { Face, Boundary };

/// What a dual node stands for: a face, or a boundary edge.
struct DualNodeRef {
    DualNodeKind kind;
    std::int32_t primal;
};

struct DualArc {
    DualNodeId node = kNone;
    EdgeId edge = kNone;
};

/**
 * Dual graph of a triangulation. Node ids 0..F-1 are the faces (in face
 * order); F..F+B-1 are leaf nodes standing for the B boundary edges, in edge
 * order. Dual edges reuse the primal edge ids: interior edge e joins the
 * nodes of its two faces, boundary edge e joins its face to its leaf.
 */
class DualGraph {
public:
    DualGraph() = default;
    static DualGraph build(const SurfaceComplex& complex);

    std::int32_t node_count() const noexcept { return static_cast<std::int32_t>(node_ref_.size()); }
    std::int32_t face_node_count() const noexcept { return face_count_; }
    std::int32_t boundary_node_count() const noexcept { return node_count() - face_count_; }
    std::int32_t edge_count() const noexcept { return static_cast<std::int32_t>(edge_nodes_.size()); }

    DualNodeId face_node(FaceId f) const { return f; }
    /// kNone for interior edges.
    DualNodeId boundary_node(EdgeId e) const { return boundary_node_.at(static_cast<std::size_t>(e)); }
    const std::array<DualNodeId, 2>& edge_nodes(EdgeId e) const
    {
        return edge_nodes_.at(static_cast<std::size_t>(e));
    }
    bool is_face_node(DualNodeId n) const noexcept { return n >= 0 && n < face_count_; }
    const DualNodeRef& node_ref(DualNodeId n) const { return node_ref_.at(static_cast<std::size_t>(n)); }

    /// Incident dual edges of `n`, sorted by the node at the other end.
    std::span<const DualArc> arcs(DualNodeId n) const;

private:
    std::int32_t face_count_ = 0;
    std::vector<DualNodeRef> node_ref_;
    std::vector<DualNodeId> boundary_node_;
    std::vector<std::array<DualNodeId, 2>> edge_nodes_;
    std::vector<std::int32_t> arc_offsets_;
    std::vector<DualArc> arcs_;
};

inline DualGraph build_dual(const SurfaceComplex& complex) { return DualGraph::build(complex); }

} // namespace relcoh

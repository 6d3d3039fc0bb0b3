#include "relcoh/dual.hpp"

#include <algorithm>
#include <numeric>

namespace relcoh {

DualGraph DualGraph::build(const SurfaceComplex& complex)
{
    DualGraph g;
    g.face_count_ = complex.face_count();
    g.node_ref_.reserve(static_cast<std::size_t>(complex.face_count() + complex.boundary_edge_count()));
    for (FaceId f = 0; f < complex.face_count(); ++f) {
        g.node_ref_.push_back(DualNodeRef{DualNodeKind::Face, f});
    }
    g.boundary_node_.assign(static_cast<std::size_t>(complex.edge_count()), kNone);
    g.edge_nodes_.resize(static_cast<std::size_t>(complex.edge_count()));
    for (EdgeId e = 0; e < complex.edge_count(); ++e) {
        const auto faces = complex.edge_faces(e);
        if (faces.size() == 2) {
            g.edge_nodes_[static_cast<std::size_t>(e)] = {faces[0], faces[1]};
        } else {
            const auto leaf = static_cast<DualNodeId>(g.node_ref_.size());
            g.node_ref_.push_back(DualNodeRef{DualNodeKind::Boundary, e});
            g.boundary_node_[static_cast<std::size_t>(e)] = leaf;
            g.edge_nodes_[static_cast<std::size_t>(e)] = {faces[0], leaf};
        }
    }

    g.arc_offsets_.assign(g.node_ref_.size() + 1, 0);
    for (const auto& [a, b] : g.edge_nodes_) {
        ++g.arc_offsets_[static_cast<std::size_t>(a) + 1];
        ++g.arc_offsets_[static_cast<std::size_t>(b) + 1];
    }
    std::partial_sum(g.arc_offsets_.begin(), g.arc_offsets_.end(), g.arc_offsets_.begin());
    g.arcs_.resize(g.edge_nodes_.size() * 2);
    std::vector<std::int32_t> cursor(g.arc_offsets_.begin(), g.arc_offsets_.end() - 1);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const auto [a, b] = g.edge_nodes_[static_cast<std::size_t>(e)];
        g.arcs_[static_cast<std::size_t>(cursor[static_cast<std::size_t>(a)]++)] = DualArc{b, e};
        g.arcs_[static_cast<std::size_t>(cursor[static_cast<std::size_t>(b)]++)] = DualArc{a, e};
    }
    for (std::size_t n = 0; n + 1 < g.arc_offsets_.size(); ++n) {
        // Degree is at most 3, so this is a constant-size sort.
        std::sort(g.arcs_.begin() + g.arc_offsets_[n], g.arcs_.begin() + g.arc_offsets_[n + 1],
                  [](const DualArc& x, const DualArc& y) { return x.node < y.node; });
    }
    return g;
}

std::span<const DualArc> DualGraph::arcs(DualNodeId n) const
{
    const auto i = static_cast<std::size_t>(n);
    const auto first = arc_offsets_.at(i);
    const auto last = arc_offsets_.at(i + 1);
    return {arcs_.data() + first, static_cast<std::size_t>(last - first)};
}

} // namespace relcoh

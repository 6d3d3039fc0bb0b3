#pragma once

#include "relcoh/cochain.hpp"
#include "relcoh/complex.hpp"
#include "relcoh/dual.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace relcoh {

/// Parent-pointer tree over nodes 0..n-1. Nodes with depth -1 are not in the tree.
struct RootedTree {
    std::int32_t root = kNone;
    std::vector<std::int32_t> parent;
    std::vector<std::int32_t> parent_edge; // edge joining a node to its parent
    std::vector<std::int32_t> depth;

    std::int32_t node_count() const noexcept { return static_cast<std::int32_t>(parent.size()); }
    bool contains(std::int32_t n) const noexcept
    {
        return n >= 0 && n < node_count() && depth[static_cast<std::size_t>(n)] >= 0;
    }
};

/// nodes[0] = a, nodes.back() = b, edges[i] joins nodes[i] and nodes[i + 1].
struct TreePath {
    std::vector<std::int32_t> nodes;
    std::vector<std::int32_t> edges;
};

/// Unique path between two tree nodes, found by climbing from the deeper
/// end until both sides meet. Throws ConsistencyError(NodeNotInTree).
TreePath tree_path(const RootedTree& tree, std::int32_t a, std::int32_t b);

struct PrimalTree {
    RootedTree tree; // over vertices
    std::vector<std::uint8_t> in_tree; // per edge
    std::vector<EdgeId> leftover_boundary; // one per boundary cycle, same order as the cycles
    std::int32_t edge_count = 0;
};

/**
 * Spanning tree of the 1-skeleton that restricts to a spanning path on every
 * boundary cycle. Each cycle is first covered by a breadth-first search from
 * its smallest vertex; the global breadth-first search then absorbs a whole
 * cycle as soon as it touches one of its vertices.
 *
 * Throws TopologyError(DisconnectedComplex) if the vertices are not connected.
 */
PrimalTree build_primal_tree(const SurfaceComplex& complex, std::span<const BoundaryCycle> holes);

struct DualTree {
    RootedTree tree; // over dual nodes, rooted at face 0
    std::vector<std::uint8_t> in_tree; // per edge (dual edge ids equal primal ids)
    std::int32_t edge_count = 0;
    std::int32_t edge_count_before_augmentation = 0;
};

/**
 * Breadth-first spanning tree of the face nodes over interior dual edges whose
 * primal edge is not in the primal tree, then extended by one leaf per
 * leftover boundary edge. Throws ConsistencyError(DualDisconnected).
 */
DualTree build_dual_tree(const DualGraph& dual, const PrimalTree& primal);

struct TreeCotree {
    PrimalTree primal;
    DualTree dual;
    std::vector<EdgeId> critical_edges; // in neither tree, ascending
};

/// Edges in neither tree, ascending.
std::vector<EdgeId> compute_critical_edges(const PrimalTree& primal, const DualTree& dual);

/**
 * Both trees plus the critical edges of a connected complex. Checks that the
 * number of critical edges is 2 - chi - (number of boundary cycles) and
 * throws ConsistencyError(CountMismatch) otherwise.
 */
TreeCotree build_tree_cotree(const SurfaceComplex& complex, const DualGraph& dual,
                             std::span<const BoundaryCycle> holes);

/// The cycle e + (tree path from head(e) back to tail(e)) for an edge outside the tree.
Chain1 fundamental_cycle(const SurfaceComplex& complex, const PrimalTree& primal, EdgeId e);

} // namespace relcoh

#include "relcoh/forest.hpp"

#include "relcoh/errors.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace relcoh {

namespace {

RootedTree empty_tree(std::int32_t n)
{
    RootedTree t;
    t.parent.assign(static_cast<std::size_t>(n), kNone);
    t.parent_edge.assign(static_cast<std::size_t>(n), kNone);
    t.depth.assign(static_cast<std::size_t>(n), -1);
    return t;
}

void attach(RootedTree& t, std::int32_t child, std::int32_t parent, std::int32_t edge)
{
    const auto c = static_cast<std::size_t>(child);
    t.parent[c] = parent;
    t.parent_edge[c] = edge;
    t.depth[c] = t.depth[static_cast<std::size_t>(parent)] + 1;
}

} // namespace

TreePath tree_path(const RootedTree& tree, std::int32_t a, std::int32_t b)
{
    if (!tree.contains(a) || !tree.contains(b)) {
        throw ConsistencyError(ConsistencyErrorKind::NodeNotInTree,
                               "path endpoints " + std::to_string(a) + ", " + std::to_string(b));
    }
    TreePath up;
    TreePath down;
    up.nodes.push_back(a);
    down.nodes.push_back(b);
    auto x = a;
    auto y = b;
    const auto depth = [&](std::int32_t n) { return tree.depth[static_cast<std::size_t>(n)]; };
    const auto step = [&](TreePath& side, std::int32_t& n) {
        side.edges.push_back(tree.parent_edge[static_cast<std::size_t>(n)]);
        n = tree.parent[static_cast<std::size_t>(n)];
        side.nodes.push_back(n);
    };
    while (depth(x) > depth(y)) {
        step(up, x);
    }
    while (depth(y) > depth(x)) {
        step(down, y);
    }
    while (x != y) {
        step(up, x);
        step(down, y);
    }
    up.nodes.insert(up.nodes.end(), down.nodes.rbegin() + 1, down.nodes.rend());
    up.edges.insert(up.edges.end(), down.edges.rbegin(), down.edges.rend());
    return up;
}

PrimalTree build_primal_tree(const SurfaceComplex& complex, std::span<const BoundaryCycle> holes)
{
    const auto nv = complex.vertex_count();
    PrimalTree out;
    out.in_tree.assign(static_cast<std::size_t>(complex.edge_count()), 0);
    if (nv == 0) {
        out.tree = empty_tree(0);
        return out;
    }

    std::vector<std::int32_t> hole_of(static_cast<std::size_t>(nv), kNone);
    for (std::size_t h = 0; h < holes.size(); ++h) {
        for (VertexId v : holes[h].vertices) {
            hole_of[static_cast<std::size_t>(v)] = static_cast<std::int32_t>(h);
        }
    }

    // Spanning path of every boundary cycle. `cycle_order` records the visit
    // order so that absorbing a cycle later enqueues its vertices the same way.
    std::vector<std::uint8_t> seen(static_cast<std::size_t>(nv), 0);
    std::vector<std::vector<VertexId>> cycle_order(holes.size());
    for (std::size_t h = 0; h < holes.size(); ++h) {
        const VertexId start = holes[h].min_vertex();
        auto& order = cycle_order[h];
        order.push_back(start);
        seen[static_cast<std::size_t>(start)] = 1;
        for (std::size_t head = 0; head < order.size(); ++head) {
            for (const auto& nb : complex.neighbors(order[head])) {
                if (!complex.is_boundary(nb.edge) || seen[static_cast<std::size_t>(nb.vertex)]) {
                    continue;
                }
                seen[static_cast<std::size_t>(nb.vertex)] = 1;
                out.in_tree[static_cast<std::size_t>(nb.edge)] = 1;
                order.push_back(nb.vertex);
            }
        }
    }

    std::vector<std::uint8_t> visited(static_cast<std::size_t>(nv), 0);
    std::queue<VertexId> queue;
    const auto absorb = [&](std::int32_t h) {
        for (VertexId v : cycle_order[static_cast<std::size_t>(h)]) {
            visited[static_cast<std::size_t>(v)] = 1;
            queue.push(v);
        }
    };
    const VertexId root = holes.empty() ? VertexId{0} : holes.front().min_vertex();
    if (holes.empty()) {
        visited[0] = 1;
        queue.push(0);
    } else {
        absorb(0);
    }
    std::int32_t reached = 0;
    while (!queue.empty()) {
        const VertexId v = queue.front();
        queue.pop();
        ++reached;
        for (const auto& nb : complex.neighbors(v)) {
            const auto u = static_cast<std::size_t>(nb.vertex);
            if (visited[u]) {
                continue;
            }
            out.in_tree[static_cast<std::size_t>(nb.edge)] = 1;
            if (hole_of[u] != kNone) {
                absorb(hole_of[u]);
            } else {
                visited[u] = 1;
                queue.push(nb.vertex);
            }
        }
    }
    if (reached != nv) {
        throw TopologyError(TopologyErrorKind::DisconnectedComplex,
                            std::to_string(nv - reached) + " vertices unreachable from vertex " + std::to_string(root));
    }

    out.tree = empty_tree(nv);
    out.tree.root = root;
    out.tree.depth[static_cast<std::size_t>(root)] = 0;
    std::vector<VertexId> order{root};
    order.reserve(static_cast<std::size_t>(nv));
    for (std::size_t head = 0; head < order.size(); ++head) {
        const VertexId v = order[head];
        for (const auto& nb : complex.neighbors(v)) {
            if (out.in_tree[static_cast<std::size_t>(nb.edge)] && out.tree.depth[static_cast<std::size_t>(nb.vertex)] < 0) {
                attach(out.tree, nb.vertex, v, nb.edge);
                order.push_back(nb.vertex);
            }
        }
    }
    out.edge_count = nv - 1;

    for (const auto& cycle : holes) {
        EdgeId leftover = kNone;
        std::int32_t count = 0;
        for (EdgeId e : cycle.edges) {
            if (!out.in_tree[static_cast<std::size_t>(e)]) {
                leftover = e;
                ++count;
            }
        }
        if (count != 1) {
            throw ConsistencyError(ConsistencyErrorKind::CountMismatch,
                                   "boundary cycle has " + std::to_string(count) + " edges outside the primal tree");
        }
        out.leftover_boundary.push_back(leftover);
    }
    return out;
}

DualTree build_dual_tree(const DualGraph& dual, const PrimalTree& primal)
{
    DualTree out;
    out.tree = empty_tree(dual.node_count());
    out.in_tree.assign(static_cast<std::size_t>(dual.edge_count()), 0);
    const auto nf = dual.face_node_count();
    if (nf == 0) {
        return out;
    }

    out.tree.root = 0;
    out.tree.depth[0] = 0;
    std::vector<DualNodeId> order{0};
    order.reserve(static_cast<std::size_t>(nf));
    for (std::size_t head = 0; head < order.size(); ++head) {
        const DualNodeId n = order[head];
        for (const auto& arc : dual.arcs(n)) {
            if (!dual.is_face_node(arc.node) || primal.in_tree[static_cast<std::size_t>(arc.edge)]
                || out.tree.depth[static_cast<std::size_t>(arc.node)] >= 0) {
                continue;
            }
            attach(out.tree, arc.node, n, arc.edge);
            out.in_tree[static_cast<std::size_t>(arc.edge)] = 1;
            order.push_back(arc.node);
        }
    }
    if (static_cast<std::int32_t>(order.size()) != nf) {
        throw ConsistencyError(ConsistencyErrorKind::DualDisconnected,
                               "dual tree reaches " + std::to_string(order.size()) + " of " + std::to_string(nf)
                                   + " faces");
    }
    out.edge_count_before_augmentation = nf - 1;

    for (EdgeId e : primal.leftover_boundary) {
        const auto& [face, leaf] = dual.edge_nodes(e);
        attach(out.tree, leaf, face, e);
        out.in_tree[static_cast<std::size_t>(e)] = 1;
    }
    out.edge_count = out.edge_count_before_augmentation + static_cast<std::int32_t>(primal.leftover_boundary.size());
    return out;
}

std::vector<EdgeId> compute_critical_edges(const PrimalTree& primal, const DualTree& dual)
{
    std::vector<EdgeId> out;
    for (std::size_t e = 0; e < primal.in_tree.size(); ++e) {
        if (!primal.in_tree[e] && !dual.in_tree[e]) {
            out.push_back(static_cast<EdgeId>(e));
        }
    }
    return out;
}

TreeCotree build_tree_cotree(const SurfaceComplex& complex, const DualGraph& dual, std::span<const BoundaryCycle> holes)
{
    TreeCotree tc;
    tc.primal = build_primal_tree(complex, holes);
    tc.dual = build_dual_tree(dual, tc.primal);
    tc.critical_edges = compute_critical_edges(tc.primal, tc.dual);
    const auto expected = 2 - euler_characteristic(complex) - static_cast<std::int64_t>(holes.size());
    if (static_cast<std::int64_t>(tc.critical_edges.size()) != expected) {
        throw ConsistencyError(ConsistencyErrorKind::CountMismatch,
                               std::to_string(tc.critical_edges.size()) + " critical edges, expected "
                                   + std::to_string(expected));
    }
    return tc;
}

Chain1 fundamental_cycle(const SurfaceComplex& complex, const PrimalTree& primal, EdgeId e)
{
    const auto& edge = complex.edge(e);
    const auto path = tree_path(primal.tree, edge.head, edge.tail);
    std::vector<Chain1::Entry> entries{{e, 1}};
    for (std::size_t i = 0; i < path.edges.size(); ++i) {
        const auto pe = path.edges[i];
        entries.emplace_back(pe, complex.edge(pe).tail == path.nodes[i] ? 1 : -1);
    }
    return Chain1::from_entries(std::move(entries));
}

} // namespace relcoh

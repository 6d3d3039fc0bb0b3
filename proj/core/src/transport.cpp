#include "relcoh/transport.hpp"

#include "relcoh/errors.hpp"

#include <string>

namespace relcoh {

namespace {

FaceId face_at(const DualGraph& dual, std::int32_t node)
{
    if (!dual.is_face_node(node)) {
        throw ConsistencyError(ConsistencyErrorKind::EdgeNotOnFace,
                               "dual node " + std::to_string(node) + " is not a face");
    }
    return dual.node_ref(node).primal;
}

int sign_on(const SurfaceComplex& complex, FaceId f, EdgeId e)
{
    const int s = complex.incidence(f, e);
    if (s == 0) {
        throw ConsistencyError(ConsistencyErrorKind::EdgeNotOnFace,
                               "edge " + std::to_string(e) + " is not on face " + std::to_string(f));
    }
    return s;
}

} // namespace

TransportResult transport(const SurfaceComplex& complex, const DualGraph& dual, const TreePath& path, EdgeId start,
                          EdgeId end)
{
    if (path.nodes.empty() || path.edges.size() + 1 != path.nodes.size()) {
        throw ConsistencyError(ConsistencyErrorKind::EdgeNotOnFace, "malformed dual path");
    }
    std::vector<Cochain1::Entry> values;
    values.reserve(path.edges.size() + 2);
    values.emplace_back(start, 1);

    EdgeId previous = start;
    Coefficient carried = 1;
    for (std::size_t i = 0; i < path.edges.size(); ++i) {
        const FaceId f = face_at(dual, path.nodes[i]);
        const EdgeId next = path.edges[i];
        if (next == end || next == start) {
            throw ConsistencyError(ConsistencyErrorKind::PathConflict,
                                   "edge " + std::to_string(next) + " is both an endpoint and a path edge");
        }
        carried = -sign_on(complex, f, next) * sign_on(complex, f, previous) * carried;
        values.emplace_back(next, carried);
        previous = next;
    }
    const FaceId last = face_at(dual, path.nodes.back());
    const Coefficient arriving = -sign_on(complex, last, end) * sign_on(complex, last, previous) * carried;

    TransportResult result;
    if (end == start) {
        if (arriving != 1) {
            return result;
        }
    } else {
        values.emplace_back(end, arriving);
    }
    result.cochain = Cochain1::from_entries(std::move(values));
    result.consistent = true;
    return result;
}

} // namespace relcoh

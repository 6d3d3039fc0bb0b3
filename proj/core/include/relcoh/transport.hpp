#pragma once

#include "relcoh/cochain.hpp"
#include "relcoh/complex.hpp"
#include "relcoh/dual.hpp"
#include "relcoh/forest.hpp"

namespace relcoh {

struct TransportResult {
    Cochain1 cochain; // zero when inconsistent
    bool consistent = false;
};

/**
 * Carries the value 1 on `start` across the faces of a dual path and onto
 * `end`, choosing each path edge's value so that the cochain sums to zero on
 * every face it passes through.
 *
 * `start` must lie on the first face and `end` on the last. When `end` is
 * `start` the walk closes up, and the result is consistent only if the value
 * arriving back at `start` is again 1; otherwise the zero cochain is returned.
 *
 * Throws ConsistencyError: EdgeNotOnFace for a bad endpoint or a non-face
 * path node, PathConflict if `end` is itself one of the path edges.
 */
TransportResult transport(const SurfaceComplex& complex, const DualGraph& dual, const TreePath& path, EdgeId start,
                          EdgeId end);

} // namespace relcoh

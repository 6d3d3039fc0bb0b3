#pragma once

#include "relcoh/complex.hpp"
#include "relcoh/generators.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace relcoh {

/**
 * Raw input for the brute-force checks: the face list and the contact edges
 * as vertex pairs. Everything the oracle needs is rebuilt from this, without
 * going through SurfaceComplex or the tree-cotree code.
 */
struct OracleInput {
    std::int32_t vertex_count = 0;
    std::vector<std::array<std::int32_t, 3>> faces;
    std::vector<std::pair<std::int32_t, std::int32_t>> contacts;
};

OracleInput oracle_input(const SurfaceComplex& complex, const BoundaryPartition& bp);

struct OracleOptions {
    std::int32_t max_edges = 5000;
};

/// A cochain as (v_a, v_b, coefficient) triples, coefficient read along v_a -> v_b.
struct OracleCochain {
    std::vector<std::tuple<std::int32_t, std::int32_t, std::int64_t>> values;
};

OracleCochain oracle_cochain(const SurfaceComplex& complex, const Cochain1& g);

/// Dimension of the first cohomology relative to the insulated boundary, by
/// exact ranks of the relative coboundary matrices. Throws OracleLimitError.
std::int64_t betti1_relative(const OracleInput& input, const OracleOptions& options = {});

/// Coherent-orientation search per face-connected component, components
/// numbered by smallest face id.
std::vector<bool> orientability_by_component(const OracleInput& input);
bool is_orientable(const OracleInput& input);

/// Collapses every boundary cycle to a point, built directly from the face list.
ClosedComplex oracle_closed_complex(const OracleInput& input);

struct HomologyResult {
    std::int64_t betti1 = 0;
    std::vector<std::int64_t> torsion; // invariant factors > 1 of the first homology
};

/// First integral homology through Smith normal forms. Throws OracleLimitError.
HomologyResult homology_snf(const ClosedComplex& closed, const OracleOptions& options = {});

/// Per relative cocycle check done with the oracle's own incidence data.
struct GeneratorCheck {
    GeneratorClass kind = GeneratorClass::Handle;
    std::int32_t component = 0;
    bool cocycle_ok = false;
    std::string detail;
};

struct ComponentCheck {
    std::int32_t component = 0;
    std::int32_t hole_count = 0;
    std::int32_t contact_count = 0;
    bool orientable = true;
    std::int64_t betti1_relative = 0;
    std::int64_t betti1_closed = 0; // first Betti number with every boundary cycle collapsed
    std::vector<std::int64_t> torsion;
    std::int64_t handle_count = 0;
    std::int64_t hole_count_generated = 0;
    std::int64_t contact_count_generated = 0;
    bool independent = false;
    bool count_ok = false;
    bool orientation_ok = false;
    bool torsion_ok = false;
    bool dimension_formula_ok = false;
};

struct VerificationReport {
    std::int64_t betti1_relative = 0;
    std::int64_t generator_count = 0;
    std::vector<GeneratorCheck> generators;
    bool independence_ok = false;
    bool orientable = true;
    std::vector<std::int64_t> torsion;
    bool dimension_formula_ok = false;
    std::vector<ComponentCheck> components;
    std::vector<std::string> failures;

    bool passed() const noexcept { return failures.empty(); }
};

/**
 * Checks a generator set against the oracle: every generator is a relative
 * cocycle, the count equals the relative Betti number, the generators are
 * independent modulo relative coboundaries, twisted critical edges occur
 * exactly on non-orientable components (which are exactly those with 2-torsion
 * after collapsing the boundary), and the class sizes follow the dimension
 * formulas. Throws OracleLimitError above the edge cap.
 */
VerificationReport verify(const SurfaceComplex& complex, const BoundaryPartition& bp, const GeneratorSet& gens,
                          const OracleOptions& options = {});

} // namespace relcoh

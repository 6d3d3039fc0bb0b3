#pragma once

#include "relcoh/cochain.hpp"
#include "relcoh/complex.hpp"
#include "relcoh/dual.hpp"
#include "relcoh/forest.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace relcoh {

enum class GeneratorClass { Handle, Hole, Contact };

/// Short tags used in reports: "ha", "ho", "co".
std::string_view to_string(GeneratorClass kind) noexcept;
std::optional<GeneratorClass> generator_class_from_string(std::string_view tag) noexcept;

struct Generator {
    GeneratorClass kind = GeneratorClass::Handle;
    std::int32_t component = 0;
    Cochain1 cochain;

    friend bool operator==(const Generator&, const Generator&) = default;
};

/// Per connected component bookkeeping. Edge and vertex ids are global.
struct ComponentSummary {
    std::int32_t component_id = 0;
    std::int32_t vertex_count = 0;
    std::int32_t edge_count = 0;
    std::int32_t face_count = 0;
    std::int64_t euler_characteristic = 0;
    std::int32_t hole_count = 0;
    std::int32_t contact_count = 0;
    std::vector<EdgeId> critical_edges;
    std::vector<EdgeId> twisted_edges; // critical edges whose self-transport is inconsistent
    std::optional<EdgeId> twisted_pivot;
    std::optional<std::int32_t> fixed_hole; // index among this component's holes
    std::optional<std::int32_t> fixed_contact; // index among this component's contacts
    bool orientable = true;
    std::int32_t handle_count = 0;
    std::int32_t hole_generator_count = 0;
    std::int32_t contact_generator_count = 0;

    std::int32_t betti1() const noexcept { return handle_count + hole_generator_count + contact_generator_count; }

    friend bool operator==(const ComponentSummary&, const ComponentSummary&) = default;
};

struct GeneratorSet {
    std::vector<Generator> handles;
    std::vector<Generator> holes;
    std::vector<Generator> contacts;
    std::vector<ComponentSummary> components;
    std::vector<std::string> warnings;

    std::size_t size() const noexcept { return handles.size() + holes.size() + contacts.size(); }
    /// Handles, then holes, then contacts.
    std::vector<Generator> all() const;

    friend bool operator==(const GeneratorSet&, const GeneratorSet&) = default;
};

struct HandleResult {
    std::vector<Cochain1> generators; // ordered by defining critical edge
    std::vector<EdgeId> defining_edges; // the critical edge each generator is built on
    std::vector<EdgeId> twisted_edges;
    std::optional<EdgeId> twisted_pivot;
};

/// Handle class of a connected complex.
HandleResult handle_generators(const SurfaceComplex& complex, const DualGraph& dual, const TreeCotree& trees);

/// Hole class: coboundary of the vertex indicator of every boundary cycle but the last.
std::vector<Cochain1> hole_generators(const SurfaceComplex& complex, const BoundaryPartition& bp);

/// Contact class of a connected complex with at least one contact component.
std::vector<Cochain1> contact_generators(const SurfaceComplex& complex, const DualGraph& dual, const TreeCotree& trees,
                                         const BoundaryPartition& bp, const HandleResult& handles);

struct ComponentGenerators {
    HandleResult handles;
    std::vector<Cochain1> holes;
    std::vector<Cochain1> contacts;
    TreeCotree trees;
};

/// All three classes for one connected complex, with the class sizes checked.
ComponentGenerators compute_component(const SurfaceComplex& complex, const BoundaryPartition& bp);

/**
 * Generators of the first cohomology relative to the insulated boundary (all
 * boundary edges not listed in `contact_edges`). Each connected component is
 * handled separately; components are numbered by their smallest face id and
 * results are reported in global ids.
 */
GeneratorSet compute_all(const SurfaceComplex& complex, std::span<const EdgeId> contact_edges);

} // namespace relcoh

#pragma once

#include "relcoh/complex.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace relcoh::samples {

/**
 * Random triangulated disk grown from one triangle by two moves: glue a new
 * triangle with a fresh vertex onto a boundary edge, or close a boundary
 * corner whose two neighbours are not yet adjacent. Vertex labels are then
 * shuffled and each face gets a random rotation and orientation.
 */
MeshData random_disk(std::uint64_t seed, int faces);

/// A random disk with one interior face removed.
MeshData random_annulus(std::uint64_t seed, int faces);

/// Contact edges as vertex pairs, for building a corpus entry once its complex exists.
using VertexPairs = std::vector<std::pair<VertexId, VertexId>>;

struct CorpusEntry {
    std::string name;
    MeshData mesh;
    VertexPairs contacts;
};

/// Named surfaces used across the suites: disk, annulus, pair of pants,
/// torus with a hole, Moebius strip with and without contacts, Klein bottle
/// minus a disk, plus closed torus, genus 2 and projective plane.
std::vector<CorpusEntry> corpus();

std::vector<EdgeId> edges_of(const SurfaceComplex& complex, const VertexPairs& pairs);

/// Contact pairs covering `count` consecutive edges of boundary cycle
/// `cycle`, starting at position `start` of the cycle walk.
VertexPairs boundary_arc(const SurfaceComplex& complex, int cycle, int start, int count);

} // namespace relcoh::samples

#pragma once

#include "relcoh/complex.hpp"

#include <span>

namespace relcoh::meshgen {

/// Polar grid: a centre vertex and `rings` rings of `sectors` vertices.
MeshData make_disk(int rings = 2, int sectors = 8);
/// `radial` bands of `around` quads each, split along one diagonal.
/// V = around (radial + 1), E = around (3 radial + 1), F = 2 around radial.
MeshData make_annulus(int around = 8, int radial = 2);
/// Periodic `around` x `along` grid; both must be at least 3.
MeshData make_torus(int around = 4, int along = 4);
/// The seven-vertex torus: faces {i, i+1, i+3} and {i, i+2, i+3} mod 7.
MeshData make_minimal_torus();
/// Strip of `around` x `width` quads whose ends are glued with a half twist.
MeshData make_moebius(int around = 6, int width = 1);
/// Periodic grid with one of the two identifications reversed.
MeshData make_klein_bottle(int around = 6, int along = 6);
/// Six-vertex projective plane.
MeshData make_projective_plane();
MeshData make_octahedron();

/// Removes one face from each surface and glues along the two triangle
/// boundaries, reversing the second so orientations stay compatible.
MeshData connected_sum(const MeshData& a, FaceId face_a, const MeshData& b, FaceId face_b);
/// Deletes faces and any vertices left without a face. Vertex order is kept.
MeshData remove_faces(const MeshData& mesh, std::span<const FaceId> faces);
MeshData disjoint_union(const MeshData& a, const MeshData& b);
/// 1 -> 4 subdivision. Edge e gets the new vertex V + e (edge ids of SurfaceComplex).
MeshData refine_midpoint(const MeshData& mesh);
MeshData refine_midpoint(const MeshData& mesh, int levels);

/// Greedy choice of `count` pairwise vertex-disjoint faces, smallest ids first.
std::vector<FaceId> vertex_disjoint_faces(const MeshData& mesh, int count);

/// Sphere with `holes` disjoint triangular holes (octahedron refined as needed).
MeshData make_sphere_with_holes(int holes);
/// Closed orientable surface of the given genus (0 gives the octahedron).
MeshData make_closed_surface(int genus);

} // namespace relcoh::meshgen

#pragma once

#include "relcoh/complex.hpp"
#include "relcoh/generators.hpp"

#include <iosfwd>

namespace relcoh {

/**
 * Legacy ASCII VTK polydata with one line cell per (generator, support edge).
 * Cell data: "generator" (index into GeneratorSet::all()), "class" (0 = ha,
 * 1 = ho, 2 = co) and "coefficient". Meshes without coordinates get all points
 * at the origin.
 */
void write_vtk_overlay(std::ostream& out, const SurfaceComplex& complex, const GeneratorSet& gens);

} // namespace relcoh

#include "relcoh/scaling.hpp"

#include "relcoh/generators.hpp"
#include "relcoh/meshgen.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace relcoh {

std::vector<ScalingSample> measure_scaling(const MeshData& base, int max_level, int repetitions)
{
    std::vector<MeshData> meshes{base};
    for (int level = 1; level <= max_level; ++level) {
        meshes.push_back(meshgen::refine_midpoint(meshes.back()));
    }
    std::vector<ScalingSample> out(meshes.size());
    for (std::size_t level = 0; level < out.size(); ++level) {
        out[level].level = static_cast<int>(level);
        out[level].seconds = std::numeric_limits<double>::infinity();
    }
    // Repetitions go round-robin over the levels so that a burst of machine
    // load does not land on a single level.
    for (int r = 0; r < std::max(repetitions, 1); ++r) {
        for (std::size_t level = 0; level < meshes.size(); ++level) {
            auto& s = out[level];
            const auto start = std::chrono::steady_clock::now();
            const auto complex = SurfaceComplex::build(meshes[level]);
            const auto gens = compute_all(complex, {});
            const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
            s.seconds = std::min(s.seconds, elapsed.count());
            s.vertices = complex.vertex_count();
            s.edges = complex.edge_count();
            s.faces = complex.face_count();
            s.generators = gens.size();
        }
    }
    return out;
}

double fit_loglog_exponent(std::span<const ScalingSample> samples, int min_level)
{
    double n = 0;
    double sx = 0;
    double sy = 0;
    double sxx = 0;
    double sxy = 0;
    for (const auto& s : samples) {
        if (s.level < min_level) {
            continue;
        }
        const double x = std::log(static_cast<double>(s.edges));
        const double y = std::log(s.seconds);
        n += 1;
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double denom = n * sxx - sx * sx;
    if (n < 2 || denom <= 0) {
        throw std::invalid_argument("need at least two distinct sizes to fit an exponent");
    }
    return (n * sxy - sx * sy) / denom;
}

} // namespace relcoh

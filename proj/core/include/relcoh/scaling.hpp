#pragma once

#include "relcoh/complex.hpp"

#include <span>
#include <vector>

namespace relcoh {

struct ScalingSample {
    int level = 0;
    std::int32_t vertices = 0;
    std::int32_t edges = 0;
    std::int32_t faces = 0;
    double seconds = 0.0; // best of the repetitions
    std::size_t generators = 0;
};

/**
 * Times build + compute_all (no contacts) on `base` refined 0..max_level
 * times. Each level is run `repetitions` times and the fastest run is kept.
 */
std::vector<ScalingSample> measure_scaling(const MeshData& base, int max_level, int repetitions = 3);

/// Least-squares slope of log(seconds) against log(edges) over samples with level >= min_level.
double fit_loglog_exponent(std::span<const ScalingSample> samples, int min_level = 0);

} // namespace relcoh

#pragma once

#include "relcoh/complex.hpp"

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace relcoh {

/// Reads a triangle-only OFF file. Comments start with '#'. The counts may
/// follow "OFF" on the header line or sit on the next line. Throws ParseError
/// with the offending line number.
MeshData read_off(std::istream& in, const std::string& source = "<stream>");
MeshData read_off_file(const std::filesystem::path& path);

void write_off(std::ostream& out, const MeshData& mesh);

/**
 * Reads contact edges, one "i j" vertex pair per line. Blank lines and '#'
 * comments are skipped. Returns ascending, duplicate-free edge ids. Throws
 * ParseError for malformed lines and TopologyError(NotABoundaryEdge) for
 * pairs that are not boundary edges of `complex`.
 */
std::vector<EdgeId> read_contacts(std::istream& in, const SurfaceComplex& complex,
                                  const std::string& source = "<stream>");
std::vector<EdgeId> read_contacts_file(const std::filesystem::path& path, const SurfaceComplex& complex);

void write_contacts(std::ostream& out, const SurfaceComplex& complex, std::span<const EdgeId> edges);

} // namespace relcoh

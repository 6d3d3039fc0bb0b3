#pragma once

#include "relcoh/complex.hpp"
#include "relcoh/generators.hpp"
#include "relcoh/oracle.hpp"

#include <iosfwd>
#include <string>

namespace relcoh {

inline constexpr const char* kReportFormat = "relcoh-generators";
inline constexpr int kReportVersion = 1;

/**
 * JSON report of a generator set. Keys appear in a fixed order and edges are
 * written as vertex pairs (v_a < v_b) with the coefficient read along
 * v_a -> v_b, so identical input produces identical bytes.
 */
std::string format_report(const SurfaceComplex& complex, const GeneratorSet& gens,
                          const VerificationReport* verification = nullptr);
void write_report(std::ostream& out, const SurfaceComplex& complex, const GeneratorSet& gens,
                  const VerificationReport* verification = nullptr);

/// Rebuilds the generator set from a report written for `complex`. Throws ParseError.
GeneratorSet parse_report(const std::string& text, const SurfaceComplex& complex,
                          const std::string& source = "<report>");

} // namespace relcoh

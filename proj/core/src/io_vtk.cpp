#include "relcoh/io_vtk.hpp"

#include <ostream>
#include <sstream>

namespace relcoh {

void write_vtk_overlay(std::ostream& out, const SurfaceComplex& complex, const GeneratorSet& gens)
{
    const auto all = gens.all();
    std::size_t cells = 0;
    for (const auto& g : all) {
        cells += g.cochain.support_size();
    }

    std::ostringstream s;
    s.precision(17);
    s << "# vtk DataFile Version 3.0\n"
      << "relcoh generator supports\n"
      << "ASCII\n"
      << "DATASET POLYDATA\n"
      << "POINTS " << complex.vertex_count() << " double\n";
    const auto coords = complex.coordinates();
    for (std::int32_t v = 0; v < complex.vertex_count(); ++v) {
        if (coords.empty()) {
            s << "0 0 0\n";
        } else {
            const auto& p = coords[static_cast<std::size_t>(v)];
            s << p.x << ' ' << p.y << ' ' << p.z << '\n';
        }
    }
    s << "LINES " << cells << ' ' << 3 * cells << '\n';
    for (const auto& g : all) {
        for (const auto& [e, value] : g.cochain.entries()) {
            s << "2 " << complex.edge(e).tail << ' ' << complex.edge(e).head << '\n';
        }
    }
    s << "CELL_DATA " << cells << '\n';
    const auto field = [&](const char* name, auto&& value_of) {
        s << "SCALARS " << name << " int 1\nLOOKUP_TABLE default\n";
        for (std::size_t i = 0; i < all.size(); ++i) {
            for (const auto& entry : all[i].cochain.entries()) {
                s << value_of(i, entry) << '\n';
            }
        }
    };
    field("generator", [](std::size_t i, const auto&) { return static_cast<long long>(i); });
    field("class", [&](std::size_t i, const auto&) { return static_cast<long long>(all[i].kind); });
    field("coefficient", [](std::size_t, const auto& entry) { return static_cast<long long>(entry.second); });
    out << s.str();
}

} // namespace relcoh

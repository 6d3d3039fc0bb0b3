#include "relcoh/errors.hpp"
#include "relcoh/io_off.hpp"
#include "relcoh/io_report.hpp"
#include "relcoh/io_vtk.hpp"
#include "relcoh/meshgen.hpp"
#include "test_meshes.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace relcoh;

namespace {

std::size_t parse_error_line(const std::string& text)
{
    std::istringstream in(text);
    try {
        read_off(in, "test.off");
    } catch (const ParseError& ex) {
        return ex.line();
    }
    ADD_FAILURE() << "expected a ParseError for:\n" << text;
    return 0;
}

} // namespace

TEST(OffFormat, RoundTrip)
{
    const auto mesh = meshgen::make_annulus(5, 2);
    std::ostringstream out;
    write_off(out, mesh);
    std::istringstream in(out.str());
    const auto back = read_off(in);
    EXPECT_EQ(back.vertex_count, mesh.vertex_count);
    EXPECT_EQ(back.faces, mesh.faces);
    ASSERT_EQ(back.coordinates.size(), mesh.coordinates.size());
    for (std::size_t i = 0; i < mesh.coordinates.size(); ++i) {
        EXPECT_DOUBLE_EQ(back.coordinates[i].x, mesh.coordinates[i].x);
        EXPECT_DOUBLE_EQ(back.coordinates[i].z, mesh.coordinates[i].z);
    }
}

TEST(OffFormat, CommentsAndCountsOnHeaderLine)
{
    std::istringstream in("# a triangle\nOFF 3 1 0\n0 0 0\n1 0 0 # x\n\n0 1 0\n3 0 1 2\n");
    const auto mesh = read_off(in);
    EXPECT_EQ(mesh.vertex_count, 3);
    ASSERT_EQ(mesh.faces.size(), 1u);
    EXPECT_EQ(mesh.faces[0], (Triangle{0, 1, 2}));
}

TEST(OffFormat, ErrorsCarryLineNumbers)
{
    EXPECT_EQ(parse_error_line("OFX\n3 1 0\n"), 1u);
    EXPECT_EQ(parse_error_line("OFF\n3\n"), 2u);
    EXPECT_EQ(parse_error_line("OFF\n3 1 0\n0 0 0\n1 0\n0 1 0\n3 0 1 2\n"), 4u);
    EXPECT_EQ(parse_error_line("OFF\n3 1 0\n0 0 0\n1 0 0\n0 1 0\n4 0 1 2 0\n"), 6u);
    EXPECT_EQ(parse_error_line("OFF\n3 1 0\n0 0 0\n1 0 0\n0 1 0\n3 0 1 7\n"), 6u);
    EXPECT_EQ(parse_error_line("OFF\n3 1 0\n0 0 0\n1 0 0\n0 1 zero\n3 0 1 2\n"), 5u);
    EXPECT_EQ(parse_error_line("OFF\n3 1 0\n0 0 0\n1 0 0\n0 1 0\n3 0 1 2\n3 0 1 2\n"), 7u);
    EXPECT_EQ(parse_error_line(""), 0u);
}

TEST(OffFormat, MissingFile)
{
    EXPECT_THROW(read_off_file("/nonexistent/mesh.off"), ParseError);
}

TEST(ContactsFormat, ReadAndWrite)
{
    const auto k = SurfaceComplex::build(meshgen::make_disk(1, 6));
    const auto arc = samples::boundary_arc(k, 0, 2, 3);
    std::ostringstream text;
    text << "# contacts\n\n";
    for (const auto& [a, b] : arc) {
        text << b << ' ' << a << '\n';
    }
    text << arc[0].first << ' ' << arc[0].second << '\n';
    std::istringstream in(text.str());
    const auto edges = read_contacts(in, k);
    EXPECT_EQ(edges, samples::edges_of(k, arc));

    std::ostringstream out;
    write_contacts(out, k, edges);
    std::istringstream again(out.str());
    EXPECT_EQ(read_contacts(again, k), edges);
}

TEST(ContactsFormat, Errors)
{
    const auto k = SurfaceComplex::build(meshgen::make_disk(2, 6));
    const auto [a, b] = samples::boundary_arc(k, 0, 0, 1).front();
    std::istringstream malformed(std::to_string(a) + " " + std::to_string(b) + "\n3\n");
    try {
        read_contacts(malformed, k);
        FAIL() << "expected ParseError";
    } catch (const ParseError& ex) {
        EXPECT_EQ(ex.line(), 2u);
    }
    // Centre to first ring is interior; 1 and 4 are not adjacent at all.
    std::istringstream interior("0 1\n");
    EXPECT_THROW(read_contacts(interior, k), TopologyError);
    std::istringstream missing("1 4\n");
    EXPECT_THROW(read_contacts(missing, k), TopologyError);
}

TEST(Report, RoundTrip)
{
    for (const auto& entry : samples::corpus()) {
        const auto k = SurfaceComplex::build(entry.mesh);
        const auto gens = compute_all(k, samples::edges_of(k, entry.contacts));
        const auto text = format_report(k, gens);
        EXPECT_EQ(parse_report(text, k), gens) << entry.name;
        EXPECT_EQ(format_report(k, parse_report(text, k)), text) << entry.name;
    }
}

TEST(Report, Layout)
{
    const auto k = SurfaceComplex::build(meshgen::make_annulus(4, 1));
    const auto gens = compute_all(k, {});
    const auto text = format_report(k, gens);
    EXPECT_EQ(text.rfind("{\n  \"format\": \"relcoh-generators\",\n  \"version\": 1,", 0), 0u);
    EXPECT_NE(text.find("\"class\": \"ho\""), std::string::npos);
    EXPECT_EQ(text.find("verification"), std::string::npos);
    EXPECT_EQ(text.back(), '\n');

    const auto bp = classify_boundary(k, {});
    const auto report = verify(k, bp, gens);
    EXPECT_NE(format_report(k, gens, &report).find("\"verification\""), std::string::npos);
}

TEST(Report, RejectsGarbage)
{
    const auto k = SurfaceComplex::build(meshgen::make_annulus(4, 1));
    EXPECT_THROW(parse_report("not json", k), ParseError);
    EXPECT_THROW(parse_report("{\"format\": \"other\"}", k), ParseError);
    EXPECT_THROW(parse_report("{\"format\": \"relcoh-generators\"}", k), ParseError);
}

TEST(Vtk, OneLinePerSupportEdge)
{
    const auto k = SurfaceComplex::build(meshgen::make_torus(4, 4));
    const auto gens = compute_all(k, {});
    std::size_t support = 0;
    for (const auto& g : gens.all()) {
        support += g.cochain.support_size();
    }
    std::ostringstream out;
    write_vtk_overlay(out, k, gens);
    const auto text = out.str();
    EXPECT_EQ(text.rfind("# vtk DataFile Version", 0), 0u);
    EXPECT_NE(text.find("LINES " + std::to_string(support) + " " + std::to_string(3 * support)), std::string::npos);
    EXPECT_NE(text.find("CELL_DATA " + std::to_string(support)), std::string::npos);
    EXPECT_NE(text.find("SCALARS coefficient"), std::string::npos);
}

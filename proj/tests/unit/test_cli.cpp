#include "cli.hpp"

#include "relcoh/io_off.hpp"
#include "relcoh/io_report.hpp"
#include "relcoh/meshgen.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace relcoh;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run_cli(std::vector<std::string> args)
{
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
protected:
    void SetUp() override
    {
        dir_ = fs::temp_directory_path() /
               ("relcoh_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string write(const std::string& name, const std::string& text)
    {
        const auto path = dir_ / name;
        std::ofstream(path) << text;
        return path.string();
    }
    std::string write_mesh(const std::string& name, const MeshData& mesh)
    {
        std::ostringstream s;
        write_off(s, mesh);
        return write(name, s.str());
    }
    std::string path(const std::string& name) const { return (dir_ / name).string(); }

private:
    fs::path dir_;
};

std::string data(const std::string& name) { return std::string(RELCOH_DATA_DIR) + "/" + name; }

} // namespace

TEST_F(CliTest, InfoOnOctahedron)
{
    const auto r = run_cli({"info", data("octahedron.off")});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "V=6 E=12 F=8 χ=2 boundary components=0 orientable=yes\nconnected components=1\n");
}

TEST_F(CliTest, InfoOnMoebius)
{
    const auto r = run_cli({"info", data("moebius.off")});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("χ=0 boundary components=1 orientable=no"), std::string::npos);
}

TEST_F(CliTest, ComputeWritesReport)
{
    const auto out = path("annulus.json");
    const auto r = run_cli({"compute", data("annulus.off"), "-o", out, "--verify"});
    ASSERT_EQ(r.code, 0) << r.err;
    std::ifstream in(out);
    std::stringstream text;
    text << in.rdbuf();
    const auto k = SurfaceComplex::build(read_off_file(data("annulus.off")));
    const auto gens = parse_report(text.str(), k);
    EXPECT_EQ(gens.holes.size(), 1u);
    EXPECT_NE(text.str().find("\"verification\""), std::string::npos);
}

TEST_F(CliTest, ComputeWithContacts)
{
    const auto r = run_cli({"compute", data("moebius.off"), "--contacts", data("moebius_contacts.txt")});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("\"class\": \"co\""), std::string::npos);
}

TEST_F(CliTest, ReportsAreByteIdentical)
{
    const auto a = run_cli({"compute", data("torus.off")});
    const auto b = run_cli({"compute", data("torus.off")});
    ASSERT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
}

TEST_F(CliTest, VtkOverlay)
{
    const auto vtk = path("torus.vtk");
    ASSERT_EQ(run_cli({"compute", data("torus.off"), "-o", path("t.json"), "--vtk", vtk}).code, 0);
    EXPECT_TRUE(fs::exists(vtk));
    EXPECT_GT(fs::file_size(vtk), 0u);
}

TEST_F(CliTest, ExitCodes)
{
    EXPECT_EQ(run_cli({}).code, cli::kParseFailure);
    EXPECT_EQ(run_cli({"compute"}).code, cli::kParseFailure);
    EXPECT_EQ(run_cli({"compute", "--bogus", data("torus.off")}).code, cli::kParseFailure);
    EXPECT_EQ(run_cli({"compute", path("missing.off")}).code, cli::kParseFailure);
    EXPECT_EQ(run_cli({"compute", write("bad.off", "OFF\n3 1 0\n0 0 0\n")}).code, cli::kParseFailure);

    // Three triangles on one edge.
    const auto fan = write("fan.off", "OFF\n5 3 0\n0 0 0\n1 0 0\n0 1 0\n0 0 1\n1 1 1\n3 0 1 2\n3 1 0 3\n3 0 1 4\n");
    const auto r = run_cli({"compute", fan});
    EXPECT_EQ(r.code, cli::kTopologyFailure);
    EXPECT_NE(r.err.find("NonManifoldEdge"), std::string::npos);

    const auto interior = write("interior.txt", "0 1\n");
    const auto disk = write_mesh("disk.off", meshgen::make_disk(2, 6));
    EXPECT_EQ(run_cli({"compute", disk, "-c", interior}).code, cli::kTopologyFailure);

    const auto capped = run_cli({"compute", data("torus.off"), "--verify", "--oracle-cap", "5"});
    EXPECT_EQ(capped.code, cli::kVerificationFailure);

    EXPECT_EQ(run_cli({"compute", data("torus.off"), "--verify"}).code, cli::kOk);
    EXPECT_EQ(run_cli({"--help"}).code, cli::kOk);
}

TEST_F(CliTest, Bench)
{
    const auto mesh = write_mesh("small.off", meshgen::make_annulus(6, 1));
    const auto r = run_cli({"bench", mesh, "-l", "2", "-r", "1", "--fit-from", "1"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("fitted exponent"), std::string::npos);
}

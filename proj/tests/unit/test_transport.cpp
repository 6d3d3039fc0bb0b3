#include "relcoh/errors.hpp"
#include "relcoh/meshgen.hpp"
#include "relcoh/transport.hpp"
#include "test_meshes.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace relcoh;

namespace {

ConsistencyErrorKind transport_error(const SurfaceComplex& k, const DualGraph& d, const TreePath& p, EdgeId a,
                                     EdgeId b)
{
    try {
        transport(k, d, p, a, b);
    } catch (const ConsistencyError& ex) {
        return ex.kind();
    }
    ADD_FAILURE() << "expected a ConsistencyError";
    return ConsistencyErrorKind::CountMismatch;
}

std::vector<EdgeId> boundary_edges(const SurfaceComplex& k)
{
    std::vector<EdgeId> out;
    for (EdgeId e = 0; e < k.edge_count(); ++e) {
        if (k.is_boundary(e)) {
            out.push_back(e);
        }
    }
    return out;
}

// Self transport of every critical edge across the dual tree.
std::vector<bool> loop_consistency(const MeshData& mesh)
{
    const auto k = SurfaceComplex::build(mesh);
    const auto d = build_dual(k);
    const auto tc = build_tree_cotree(k, d, boundary_components(k));
    std::vector<bool> out;
    for (EdgeId e : tc.critical_edges) {
        const auto ends = d.edge_nodes(e);
        const auto path = tree_path(tc.dual.tree, ends[0], ends[1]);
        out.push_back(transport(k, d, path, e, e).consistent);
    }
    return out;
}

} // namespace

TEST(Transport, SingleFace)
{
    const std::vector<Triangle> faces{{0, 2, 1}};
    const auto k = SurfaceComplex::build(3, faces);
    const auto d = build_dual(k);
    const TreePath path{{0}, {}};
    for (EdgeId a = 0; a < 3; ++a) {
        for (EdgeId b = 0; b < 3; ++b) {
            if (a == b) {
                continue;
            }
            const auto r = transport(k, d, path, a, b);
            EXPECT_TRUE(r.consistent);
            EXPECT_EQ(r.cochain.support_size(), 2u);
            EXPECT_EQ(r.cochain[a], 1);
            EXPECT_EQ(r.cochain[b], -k.incidence(0, a) * k.incidence(0, b));
            EXPECT_TRUE(coboundary1(k, r.cochain).is_zero());
        }
    }
}

TEST(Transport, AcrossARandomDiskIsAFaceCocycle)
{
    std::mt19937_64 rng(5);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto k = SurfaceComplex::build(samples::random_disk(seed, 80));
        const auto d = build_dual(k);
        const auto tc = build_tree_cotree(k, d, boundary_components(k));
        const auto bnd = boundary_edges(k);
        std::uniform_int_distribution<std::size_t> pick(0, bnd.size() - 1);
        for (int trial = 0; trial < 10; ++trial) {
            const EdgeId a = bnd[pick(rng)];
            const EdgeId b = bnd[pick(rng)];
            if (a == b) {
                continue;
            }
            const auto path = tree_path(tc.dual.tree, d.edge_nodes(a)[0], d.edge_nodes(b)[0]);
            const auto r = transport(k, d, path, a, b);
            ASSERT_TRUE(r.consistent);
            EXPECT_TRUE(coboundary1(k, r.cochain).is_zero());
            EXPECT_EQ(r.cochain.support_size(), path.edges.size() + 2);
            EXPECT_EQ(r.cochain.max_abs(), 1);
            EXPECT_EQ(r.cochain[a], 1);
        }
    }
}

TEST(Transport, IndependentOfFaceOrientation)
{
    std::mt19937_64 rng(9);
    std::bernoulli_distribution flip(0.5);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto mesh = samples::random_annulus(seed, 70);
        auto flipped = mesh;
        for (auto& t : flipped.faces) {
            if (flip(rng)) {
                std::swap(t[0], t[1]);
            }
        }
        const auto k = SurfaceComplex::build(mesh);
        const auto k2 = SurfaceComplex::build(flipped);
        const auto d = build_dual(k);
        const auto d2 = build_dual(k2);
        const auto tc = build_tree_cotree(k, d, boundary_components(k));
        const auto bnd = boundary_edges(k);
        for (std::size_t i = 0; i + 1 < bnd.size(); i += 3) {
            const EdgeId a = bnd[i];
            const EdgeId b = bnd[i + 1];
            const auto path = tree_path(tc.dual.tree, d.edge_nodes(a)[0], d.edge_nodes(b)[0]);
            EXPECT_EQ(transport(k, d, path, a, b).cochain, transport(k2, d2, path, a, b).cochain);
        }
    }
}

TEST(Transport, ClosedLoopsDetectTwisting)
{
    const auto torus = loop_consistency(meshgen::make_torus(5, 4));
    ASSERT_EQ(torus.size(), 2u);
    EXPECT_TRUE(torus[0] && torus[1]);

    const auto moebius = loop_consistency(meshgen::make_moebius(7, 1));
    ASSERT_EQ(moebius.size(), 1u);
    EXPECT_FALSE(moebius[0]);

    const auto rp2 = loop_consistency(meshgen::make_projective_plane());
    ASSERT_EQ(rp2.size(), 1u);
    EXPECT_FALSE(rp2[0]);
}

TEST(Transport, InconsistentLoopGivesZeroCochain)
{
    const auto k = SurfaceComplex::build(meshgen::make_moebius(5, 1));
    const auto d = build_dual(k);
    const auto tc = build_tree_cotree(k, d, boundary_components(k));
    ASSERT_EQ(tc.critical_edges.size(), 1u);
    const EdgeId e = tc.critical_edges[0];
    const auto path = tree_path(tc.dual.tree, d.edge_nodes(e)[0], d.edge_nodes(e)[1]);
    const auto r = transport(k, d, path, e, e);
    EXPECT_FALSE(r.consistent);
    EXPECT_TRUE(r.cochain.is_zero());
}

TEST(Transport, RejectsBadInput)
{
    const std::vector<Triangle> faces{{0, 1, 2}, {0, 2, 3}};
    const auto k = SurfaceComplex::build(4, faces);
    const auto d = build_dual(k);
    const EdgeId e01 = *k.find_edge(0, 1);
    const EdgeId e02 = *k.find_edge(0, 2);
    const EdgeId e03 = *k.find_edge(0, 3);
    const EdgeId e23 = *k.find_edge(2, 3);

    const TreePath across{{0, 1}, {e02}};
    EXPECT_TRUE(transport(k, d, across, e01, e23).consistent);
    EXPECT_EQ(transport_error(k, d, across, e03, e23), ConsistencyErrorKind::EdgeNotOnFace);
    EXPECT_EQ(transport_error(k, d, across, e01, e01), ConsistencyErrorKind::EdgeNotOnFace);
    EXPECT_EQ(transport_error(k, d, across, e01, e02), ConsistencyErrorKind::PathConflict);

    const TreePath to_leaf{{0, d.boundary_node(e01)}, {e01}};
    EXPECT_EQ(transport_error(k, d, to_leaf, e02, *k.find_edge(1, 2)), ConsistencyErrorKind::EdgeNotOnFace);
}

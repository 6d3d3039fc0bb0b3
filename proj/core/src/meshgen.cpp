#include "relcoh/meshgen.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace relcoh::meshgen {

namespace {

void require(bool ok, const char* what)
{
    if (!ok) {
        throw std::invalid_argument(what);
    }
}

void add_quad(MeshData& m, VertexId a, VertexId b, VertexId c, VertexId d)
{
    m.faces.push_back({a, b, c});
    m.faces.push_back({a, c, d});
}

Point3 polar(double radius, double angle, double z = 0.0)
{
    return {radius * std::cos(angle), radius * std::sin(angle), z};
}

constexpr double kTau = 2.0 * std::numbers::pi;

} // namespace

MeshData make_disk(int rings, int sectors)
{
    require(rings >= 1 && sectors >= 3, "disk needs rings >= 1 and sectors >= 3");
    MeshData m;
    m.vertex_count = 1 + rings * sectors;
    m.coordinates.push_back({0.0, 0.0, 0.0});
    for (int r = 1; r <= rings; ++r) {
        for (int s = 0; s < sectors; ++s) {
            m.coordinates.push_back(polar(r, kTau * s / sectors));
        }
    }
    const auto at = [&](int r, int s) { return r == 0 ? 0 : 1 + (r - 1) * sectors + (s % sectors); };
    for (int s = 0; s < sectors; ++s) {
        m.faces.push_back({0, at(1, s), at(1, s + 1)});
    }
    for (int r = 1; r < rings; ++r) {
        for (int s = 0; s < sectors; ++s) {
            add_quad(m, at(r, s), at(r + 1, s), at(r + 1, s + 1), at(r, s + 1));
        }
    }
    return m;
}

MeshData make_annulus(int around, int radial)
{
    require(around >= 3 && radial >= 1, "annulus needs around >= 3 and radial >= 1");
    MeshData m;
    m.vertex_count = around * (radial + 1);
    for (int j = 0; j <= radial; ++j) {
        for (int i = 0; i < around; ++i) {
            m.coordinates.push_back(polar(1.0 + j, kTau * i / around));
        }
    }
    const auto at = [&](int j, int i) { return j * around + (i % around); };
    for (int j = 0; j < radial; ++j) {
        for (int i = 0; i < around; ++i) {
            add_quad(m, at(j, i), at(j, i + 1), at(j + 1, i + 1), at(j + 1, i));
        }
    }
    return m;
}

MeshData make_torus(int around, int along)
{
    require(around >= 3 && along >= 3, "torus needs a grid of at least 3 x 3");
    MeshData m;
    m.vertex_count = around * along;
    for (int j = 0; j < along; ++j) {
        for (int i = 0; i < around; ++i) {
            const double u = kTau * i / around;
            const double v = kTau * j / along;
            m.coordinates.push_back({(2.0 + std::cos(v)) * std::cos(u), (2.0 + std::cos(v)) * std::sin(u), std::sin(v)});
        }
    }
    const auto at = [&](int j, int i) { return (j % along) * around + (i % around); };
    for (int j = 0; j < along; ++j) {
        for (int i = 0; i < around; ++i) {
            add_quad(m, at(j, i), at(j, i + 1), at(j + 1, i + 1), at(j + 1, i));
        }
    }
    return m;
}

MeshData make_minimal_torus()
{
    MeshData m;
    m.vertex_count = 7;
    for (int i = 0; i < 7; ++i) {
        m.coordinates.push_back(polar(1.0, kTau * i / 7));
    }
    for (int i = 0; i < 7; ++i) {
        m.faces.push_back({i, (i + 1) % 7, (i + 3) % 7});
        m.faces.push_back({i, (i + 2) % 7, (i + 3) % 7});
    }
    return m;
}

MeshData make_moebius(int around, int width)
{
    require(around >= 3 && width >= 1, "Moebius strip needs around >= 3 and width >= 1");
    MeshData m;
    const int rows = width + 1;
    m.vertex_count = around * rows;
    for (int j = 0; j < rows; ++j) {
        for (int i = 0; i < around; ++i) {
            // Half twist over one turn; coordinates are for display only.
            const double u = kTau * i / around;
            const double t = (static_cast<double>(j) / width - 0.5);
            m.coordinates.push_back({(2.0 + t * std::cos(u / 2)) * std::cos(u), (2.0 + t * std::cos(u / 2)) * std::sin(u),
                                     t * std::sin(u / 2)});
        }
    }
    const auto at = [&](int j, int i) { return i < around ? j * around + i : (width - j) * around; };
    for (int j = 0; j < width; ++j) {
        for (int i = 0; i < around; ++i) {
            add_quad(m, at(j, i), at(j, i + 1), at(j + 1, i + 1), at(j + 1, i));
        }
    }
    return m;
}

MeshData make_klein_bottle(int around, int along)
{
    require(around >= 3 && along >= 3, "Klein bottle needs a grid of at least 3 x 3");
    MeshData m;
    m.vertex_count = around * along;
    m.coordinates.assign(static_cast<std::size_t>(m.vertex_count), Point3{});
    for (int j = 0; j < along; ++j) {
        for (int i = 0; i < around; ++i) {
            m.coordinates[static_cast<std::size_t>(j * around + i)] = {static_cast<double>(i), static_cast<double>(j), 0.0};
        }
    }
    const auto at = [&](int j, int i) {
        if (i == around) {
            return ((along - j % along) % along) * around;
        }
        return (j % along) * around + i;
    };
    for (int j = 0; j < along; ++j) {
        for (int i = 0; i < around; ++i) {
            add_quad(m, at(j, i), at(j, i + 1), at(j + 1, i + 1), at(j + 1, i));
        }
    }
    return m;
}

MeshData make_projective_plane()
{
    MeshData m;
    m.vertex_count = 6;
    m.coordinates.push_back({0.0, 0.0, 1.0});
    for (int i = 0; i < 5; ++i) {
        m.coordinates.push_back(polar(1.0, kTau * i / 5));
    }
    m.faces = {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 5, 1},
               {1, 2, 4}, {2, 3, 5}, {3, 4, 1}, {4, 5, 2}, {5, 1, 3}};
    return m;
}

MeshData make_octahedron()
{
    MeshData m;
    m.vertex_count = 6;
    m.coordinates = {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
    m.faces = {{0, 2, 4}, {2, 1, 4}, {1, 3, 4}, {3, 0, 4}, {2, 0, 5}, {1, 2, 5}, {3, 1, 5}, {0, 3, 5}};
    return m;
}

MeshData connected_sum(const MeshData& a, FaceId face_a, const MeshData& b, FaceId face_b)
{
    const auto& ta = a.faces.at(static_cast<std::size_t>(face_a));
    const auto& tb = b.faces.at(static_cast<std::size_t>(face_b));
    std::vector<VertexId> image(static_cast<std::size_t>(b.vertex_count), kNone);
    image[static_cast<std::size_t>(tb[0])] = ta[0];
    image[static_cast<std::size_t>(tb[1])] = ta[2];
    image[static_cast<std::size_t>(tb[2])] = ta[1];

    MeshData out;
    out.vertex_count = a.vertex_count;
    out.coordinates = a.coordinates;
    const bool coords = !a.coordinates.empty() && !b.coordinates.empty();
    if (!coords) {
        out.coordinates.clear();
    }
    for (VertexId v = 0; v < b.vertex_count; ++v) {
        if (image[static_cast<std::size_t>(v)] == kNone) {
            image[static_cast<std::size_t>(v)] = out.vertex_count++;
            if (coords) {
                auto p = b.coordinates[static_cast<std::size_t>(v)];
                p.x += 10.0;
                out.coordinates.push_back(p);
            }
        }
    }
    for (std::size_t f = 0; f < a.faces.size(); ++f) {
        if (static_cast<FaceId>(f) != face_a) {
            out.faces.push_back(a.faces[f]);
        }
    }
    for (std::size_t f = 0; f < b.faces.size(); ++f) {
        if (static_cast<FaceId>(f) != face_b) {
            const auto& t = b.faces[f];
            out.faces.push_back({image[static_cast<std::size_t>(t[0])], image[static_cast<std::size_t>(t[1])],
                                 image[static_cast<std::size_t>(t[2])]});
        }
    }
    return out;
}

MeshData remove_faces(const MeshData& mesh, std::span<const FaceId> faces)
{
    std::vector<std::uint8_t> drop(mesh.faces.size(), 0);
    for (FaceId f : faces) {
        drop.at(static_cast<std::size_t>(f)) = 1;
    }
    std::vector<VertexId> image(static_cast<std::size_t>(mesh.vertex_count), kNone);
    for (std::size_t f = 0; f < mesh.faces.size(); ++f) {
        if (!drop[f]) {
            for (VertexId v : mesh.faces[f]) {
                image[static_cast<std::size_t>(v)] = 0;
            }
        }
    }
    MeshData out;
    for (VertexId v = 0; v < mesh.vertex_count; ++v) {
        if (image[static_cast<std::size_t>(v)] != kNone) {
            image[static_cast<std::size_t>(v)] = out.vertex_count++;
            if (!mesh.coordinates.empty()) {
                out.coordinates.push_back(mesh.coordinates[static_cast<std::size_t>(v)]);
            }
        }
    }
    for (std::size_t f = 0; f < mesh.faces.size(); ++f) {
        if (!drop[f]) {
            const auto& t = mesh.faces[f];
            out.faces.push_back({image[static_cast<std::size_t>(t[0])], image[static_cast<std::size_t>(t[1])],
                                 image[static_cast<std::size_t>(t[2])]});
        }
    }
    return out;
}

MeshData disjoint_union(const MeshData& a, const MeshData& b)
{
    MeshData out = a;
    const bool coords = !a.coordinates.empty() && !b.coordinates.empty();
    if (coords) {
        for (auto p : b.coordinates) {
            p.x += 10.0;
            out.coordinates.push_back(p);
        }
    } else {
        out.coordinates.clear();
    }
    for (const auto& t : b.faces) {
        out.faces.push_back({t[0] + a.vertex_count, t[1] + a.vertex_count, t[2] + a.vertex_count});
    }
    out.vertex_count = a.vertex_count + b.vertex_count;
    return out;
}

MeshData refine_midpoint(const MeshData& mesh)
{
    const auto complex = SurfaceComplex::build(mesh);
    MeshData out;
    out.vertex_count = complex.vertex_count() + complex.edge_count();
    if (!mesh.coordinates.empty()) {
        out.coordinates = mesh.coordinates;
        for (const auto& e : complex.edges()) {
            const auto& p = mesh.coordinates[static_cast<std::size_t>(e.tail)];
            const auto& q = mesh.coordinates[static_cast<std::size_t>(e.head)];
            out.coordinates.push_back({(p.x + q.x) / 2, (p.y + q.y) / 2, (p.z + q.z) / 2});
        }
    }
    out.faces.reserve(4 * mesh.faces.size());
    const auto nv = complex.vertex_count();
    for (FaceId f = 0; f < complex.face_count(); ++f) {
        const auto& [a, b, c] = complex.face(f);
        const auto mid = [&](VertexId x, VertexId y) { return nv + *complex.find_edge(x, y); };
        const auto ab = mid(a, b);
        const auto bc = mid(b, c);
        const auto ca = mid(c, a);
        out.faces.push_back({a, ab, ca});
        out.faces.push_back({b, bc, ab});
        out.faces.push_back({c, ca, bc});
        out.faces.push_back({ab, bc, ca});
    }
    return out;
}

MeshData refine_midpoint(const MeshData& mesh, int levels)
{
    MeshData out = mesh;
    for (int i = 0; i < levels; ++i) {
        out = refine_midpoint(out);
    }
    return out;
}

std::vector<FaceId> vertex_disjoint_faces(const MeshData& mesh, int count)
{
    std::vector<std::uint8_t> used(static_cast<std::size_t>(mesh.vertex_count), 0);
    std::vector<FaceId> out;
    for (std::size_t f = 0; f < mesh.faces.size() && static_cast<int>(out.size()) < count; ++f) {
        const auto& t = mesh.faces[f];
        if (used[static_cast<std::size_t>(t[0])] || used[static_cast<std::size_t>(t[1])]
            || used[static_cast<std::size_t>(t[2])]) {
            continue;
        }
        for (VertexId v : t) {
            used[static_cast<std::size_t>(v)] = 1;
        }
        out.push_back(static_cast<FaceId>(f));
    }
    return out;
}

MeshData make_sphere_with_holes(int holes)
{
    require(holes >= 0, "hole count must be non-negative");
    MeshData sphere = make_octahedron();
    while (static_cast<int>(vertex_disjoint_faces(sphere, holes).size()) < holes) {
        sphere = refine_midpoint(sphere);
    }
    const auto faces = vertex_disjoint_faces(sphere, holes);
    return remove_faces(sphere, faces);
}

MeshData make_closed_surface(int genus)
{
    require(genus >= 0, "genus must be non-negative");
    if (genus == 0) {
        return make_octahedron();
    }
    MeshData out = make_torus(4, 4);
    for (int g = 1; g < genus; ++g) {
        out = connected_sum(out, 0, make_torus(4, 4), 0);
    }
    return out;
}

} // namespace relcoh::meshgen

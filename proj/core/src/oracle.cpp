#include "relcoh/oracle.hpp"

#include "relcoh/errors.hpp"
#include "relcoh/exact_linalg.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace relcoh {

namespace {

using VertexPair = std::pair<std::int32_t, std::int32_t>;

VertexPair ordered(std::int32_t a, std::int32_t b) { return a < b ? VertexPair{a, b} : VertexPair{b, a}; }

struct DisjointSets {
    std::vector<std::int32_t> parent;

    explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

    std::int32_t find(std::int32_t x)
    {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }

    void unite(std::int32_t a, std::int32_t b)
    {
        a = find(a);
        b = find(b);
        if (a != b) {
            parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
        }
    }
};

/// Incidence data rebuilt from the face list alone. Edges run from the lower
/// to the higher vertex id; a face uses an edge with sign +1 when its cyclic
/// order walks the edge in that direction.
struct Skeleton {
    std::int32_t vertex_count = 0;
    std::map<VertexPair, std::int32_t> edge_index;
    std::vector<VertexPair> edges;
    std::vector<std::array<std::pair<std::int32_t, int>, 3>> face_edges;
    std::vector<std::vector<std::int32_t>> edge_faces;
    std::vector<bool> insulated_edge;
    std::vector<bool> insulated_vertex;
    std::vector<bool> contact_edge;

    explicit Skeleton(const OracleInput& in) : vertex_count(in.vertex_count)
    {
        for (const auto& f : in.faces) {
            for (int k = 0; k < 3; ++k) {
                edge_index.emplace(ordered(f[static_cast<std::size_t>(k)], f[static_cast<std::size_t>((k + 1) % 3)]), 0);
            }
        }
        for (auto& [pair, id] : edge_index) {
            id = static_cast<std::int32_t>(edges.size());
            edges.push_back(pair);
        }
        edge_faces.resize(edges.size());
        for (std::size_t fi = 0; fi < in.faces.size(); ++fi) {
            const auto& f = in.faces[fi];
            std::array<std::pair<std::int32_t, int>, 3> row{};
            for (int k = 0; k < 3; ++k) {
                const auto a = f[static_cast<std::size_t>(k)];
                const auto b = f[static_cast<std::size_t>((k + 1) % 3)];
                const auto id = edge_index.at(ordered(a, b));
                row[static_cast<std::size_t>(k)] = {id, a < b ? 1 : -1};
                edge_faces[static_cast<std::size_t>(id)].push_back(static_cast<std::int32_t>(fi));
            }
            face_edges.push_back(row);
        }
        contact_edge.assign(edges.size(), false);
        for (const auto& [a, b] : in.contacts) {
            const auto it = edge_index.find(ordered(a, b));
            if (it == edge_index.end() || edge_faces[static_cast<std::size_t>(it->second)].size() != 1) {
                throw TopologyError(TopologyErrorKind::NotABoundaryEdge,
                                    "contact " + std::to_string(a) + " " + std::to_string(b));
            }
            contact_edge[static_cast<std::size_t>(it->second)] = true;
        }
        insulated_edge.assign(edges.size(), false);
        insulated_vertex.assign(static_cast<std::size_t>(vertex_count), false);
        for (std::size_t e = 0; e < edges.size(); ++e) {
            if (is_boundary(static_cast<std::int32_t>(e)) && !contact_edge[e]) {
                insulated_edge[e] = true;
                insulated_vertex[static_cast<std::size_t>(edges[e].first)] = true;
                insulated_vertex[static_cast<std::size_t>(edges[e].second)] = true;
            }
        }
    }

    std::int32_t edge_count() const { return static_cast<std::int32_t>(edges.size()); }
    std::int32_t face_count() const { return static_cast<std::int32_t>(face_edges.size()); }
    bool is_boundary(std::int32_t e) const { return edge_faces[static_cast<std::size_t>(e)].size() == 1; }

    void check_cap(const OracleOptions& options) const
    {
        if (edge_count() > options.max_edges) {
            throw OracleLimitError("oracle refuses " + std::to_string(edge_count()) + " edges (cap "
                                   + std::to_string(options.max_edges) + ")");
        }
    }

    /// Relative edges (not insulated) get consecutive column ids; kNone otherwise.
    std::vector<std::int32_t> relative_columns() const
    {
        std::vector<std::int32_t> col(edges.size(), kNone);
        std::int32_t next = 0;
        for (std::size_t e = 0; e < edges.size(); ++e) {
            if (!insulated_edge[e]) {
                col[e] = next++;
            }
        }
        return col;
    }

    SparseIntMatrix relative_coboundary0(const std::vector<std::int32_t>& col, std::int32_t ncols) const
    {
        std::vector<std::vector<SparseIntMatrix::Entry>> rows(static_cast<std::size_t>(vertex_count));
        for (std::size_t e = 0; e < edges.size(); ++e) {
            if (col[e] == kNone) {
                continue;
            }
            rows[static_cast<std::size_t>(edges[e].first)].emplace_back(col[e], -1);
            rows[static_cast<std::size_t>(edges[e].second)].emplace_back(col[e], 1);
        }
        SparseIntMatrix m(ncols);
        for (std::int32_t v = 0; v < vertex_count; ++v) {
            if (!insulated_vertex[static_cast<std::size_t>(v)]) {
                m.add_row(std::move(rows[static_cast<std::size_t>(v)]));
            }
        }
        return m;
    }

    SparseIntMatrix relative_coboundary1(const std::vector<std::int32_t>& col, std::int32_t ncols) const
    {
        SparseIntMatrix m(ncols);
        for (const auto& row : face_edges) {
            std::vector<SparseIntMatrix::Entry> entries;
            for (const auto& [e, s] : row) {
                if (col[static_cast<std::size_t>(e)] != kNone) {
                    entries.emplace_back(col[static_cast<std::size_t>(e)], s);
                }
            }
            m.add_row(std::move(entries));
        }
        return m;
    }
};

/// Faces grouped by shared edges, groups numbered by smallest face id.
std::vector<std::vector<std::int32_t>> face_components(const Skeleton& sk)
{
    DisjointSets sets(static_cast<std::size_t>(sk.face_count()));
    for (const auto& faces : sk.edge_faces) {
        for (std::size_t i = 1; i < faces.size(); ++i) {
            sets.unite(faces[0], faces[i]);
        }
    }
    std::map<std::int32_t, std::size_t> index;
    std::vector<std::vector<std::int32_t>> out;
    for (std::int32_t f = 0; f < sk.face_count(); ++f) {
        const auto root = sets.find(f);
        auto [it, inserted] = index.emplace(root, out.size());
        if (inserted) {
            out.emplace_back();
        }
        out[it->second].push_back(f);
    }
    return out;
}

struct SubInput {
    OracleInput input;
    std::map<std::int32_t, std::int32_t> local_vertex;
};

SubInput restrict_to(const OracleInput& in, const Skeleton& sk, const std::vector<std::int32_t>& faces)
{
    SubInput out;
    for (auto f : faces) {
        for (auto v : in.faces[static_cast<std::size_t>(f)]) {
            out.local_vertex.emplace(v, 0);
        }
    }
    std::int32_t next = 0;
    for (auto& [v, local] : out.local_vertex) {
        local = next++;
    }
    out.input.vertex_count = next;
    for (auto f : faces) {
        const auto& g = in.faces[static_cast<std::size_t>(f)];
        out.input.faces.push_back(
            {out.local_vertex.at(g[0]), out.local_vertex.at(g[1]), out.local_vertex.at(g[2])});
    }
    const std::set<std::int32_t> face_set(faces.begin(), faces.end());
    for (const auto& [a, b] : in.contacts) {
        const auto e = sk.edge_index.at(ordered(a, b));
        if (face_set.contains(sk.edge_faces[static_cast<std::size_t>(e)].front())) {
            out.input.contacts.emplace_back(out.local_vertex.at(a), out.local_vertex.at(b));
        }
    }
    return out;
}

std::int64_t betti1_relative(const Skeleton& sk)
{
    const auto col = sk.relative_columns();
    const auto n1 = static_cast<std::int32_t>(std::count_if(col.begin(), col.end(), [](auto c) { return c != kNone; }));
    return n1 - exact_rank(sk.relative_coboundary1(col, n1)) - exact_rank(sk.relative_coboundary0(col, n1));
}

std::vector<bool> orientability(const Skeleton& sk)
{
    std::vector<bool> out;
    std::vector<int> orientation(static_cast<std::size_t>(sk.face_count()), 0);
    for (const auto& component : face_components(sk)) {
        bool ok = true;
        std::queue<std::int32_t> queue;
        orientation[static_cast<std::size_t>(component.front())] = 1;
        queue.push(component.front());
        while (!queue.empty()) {
            const auto f = queue.front();
            queue.pop();
            for (const auto& [e, s] : sk.face_edges[static_cast<std::size_t>(f)]) {
                for (auto g : sk.edge_faces[static_cast<std::size_t>(e)]) {
                    if (g == f) {
                        continue;
                    }
                    int sg = 0;
                    for (const auto& [e2, s2] : sk.face_edges[static_cast<std::size_t>(g)]) {
                        if (e2 == e) {
                            sg = s2;
                        }
                    }
                    // Coherent neighbours traverse the shared edge in opposite directions.
                    const int wanted = -s * orientation[static_cast<std::size_t>(f)] * sg;
                    auto& og = orientation[static_cast<std::size_t>(g)];
                    if (og == 0) {
                        og = wanted;
                        queue.push(g);
                    } else if (og != wanted) {
                        ok = false;
                    }
                }
            }
        }
        out.push_back(ok);
    }
    return out;
}

ClosedComplex closed_from(const Skeleton& sk)
{
    DisjointSets sets(static_cast<std::size_t>(sk.vertex_count));
    std::vector<bool> on_boundary(static_cast<std::size_t>(sk.vertex_count), false);
    for (std::int32_t e = 0; e < sk.edge_count(); ++e) {
        if (sk.is_boundary(e)) {
            const auto [a, b] = sk.edges[static_cast<std::size_t>(e)];
            sets.unite(a, b);
            on_boundary[static_cast<std::size_t>(a)] = true;
            on_boundary[static_cast<std::size_t>(b)] = true;
        }
    }
    ClosedComplex out;
    std::vector<std::int32_t> image(static_cast<std::size_t>(sk.vertex_count), kNone);
    std::int32_t next = 0;
    for (std::int32_t v = 0; v < sk.vertex_count; ++v) {
        if (!on_boundary[static_cast<std::size_t>(v)]) {
            image[static_cast<std::size_t>(v)] = next++;
        }
    }
    // Union-find roots are the smallest vertex of each cycle, so ascending
    // roots give cycles ordered by their smallest vertex.
    std::map<std::int32_t, std::int32_t> cycle_vertex;
    for (std::int32_t v = 0; v < sk.vertex_count; ++v) {
        if (on_boundary[static_cast<std::size_t>(v)]) {
            const auto root = sets.find(v);
            auto [it, inserted] = cycle_vertex.emplace(root, next);
            if (inserted) {
                ++next;
            }
            image[static_cast<std::size_t>(v)] = it->second;
        }
    }
    out.vertex_count = next;
    std::vector<std::int32_t> closed_edge(sk.edges.size(), kNone);
    for (std::int32_t e = 0; e < sk.edge_count(); ++e) {
        if (sk.is_boundary(e)) {
            continue;
        }
        closed_edge[static_cast<std::size_t>(e)] = out.edge_count();
        const auto [a, b] = sk.edges[static_cast<std::size_t>(e)];
        out.edge_ends.push_back({image[static_cast<std::size_t>(a)], image[static_cast<std::size_t>(b)]});
        out.edge_origin.push_back(e);
    }
    for (const auto& row : sk.face_edges) {
        std::vector<FaceEdge> boundary;
        for (const auto& [e, s] : row) {
            if (closed_edge[static_cast<std::size_t>(e)] != kNone) {
                boundary.push_back(FaceEdge{closed_edge[static_cast<std::size_t>(e)], s});
            }
        }
        out.face_boundary.push_back(std::move(boundary));
    }
    return out;
}

/// Connected components of the edges selected by `keep`, counted by vertex.
template <class Keep>
std::int32_t count_edge_components(const Skeleton& sk, Keep keep)
{
    DisjointSets sets(static_cast<std::size_t>(sk.vertex_count));
    std::set<std::int32_t> touched;
    for (std::int32_t e = 0; e < sk.edge_count(); ++e) {
        if (keep(e)) {
            const auto [a, b] = sk.edges[static_cast<std::size_t>(e)];
            sets.unite(a, b);
            touched.insert(a);
            touched.insert(b);
        }
    }
    std::set<std::int32_t> roots;
    for (auto v : touched) {
        roots.insert(sets.find(v));
    }
    return static_cast<std::int32_t>(roots.size());
}

std::int32_t count_boundary_cycles(const Skeleton& sk)
{
    return count_edge_components(sk, [&](std::int32_t e) { return sk.is_boundary(e); });
}

std::int32_t count_contact_components(const Skeleton& sk)
{
    return count_edge_components(sk, [&](std::int32_t e) { return sk.contact_edge[static_cast<std::size_t>(e)]; });
}

/// Why g fails to be a relative cocycle, or the empty string.
std::string cocycle_problem(const Skeleton& sk, const OracleCochain& g, const std::map<std::int32_t, std::int32_t>* relabel)
{
    std::vector<std::int64_t> value(sk.edges.size(), 0);
    for (const auto& [a0, b0, c] : g.values) {
        auto a = a0;
        auto b = b0;
        if (relabel) {
            if (!relabel->contains(a) || !relabel->contains(b)) {
                return "edge " + std::to_string(a0) + "-" + std::to_string(b0) + " outside the component";
            }
            a = relabel->at(a);
            b = relabel->at(b);
        }
        const auto it = sk.edge_index.find(ordered(a, b));
        if (it == sk.edge_index.end()) {
            return "no edge " + std::to_string(a0) + "-" + std::to_string(b0);
        }
        value[static_cast<std::size_t>(it->second)] += a < b ? c : -c;
    }
    for (std::size_t e = 0; e < value.size(); ++e) {
        if (value[e] != 0 && sk.insulated_edge[e]) {
            return "nonzero on insulated edge " + std::to_string(e);
        }
    }
    for (std::int32_t f = 0; f < sk.face_count(); ++f) {
        std::int64_t sum = 0;
        for (const auto& [e, s] : sk.face_edges[static_cast<std::size_t>(f)]) {
            sum += s * value[static_cast<std::size_t>(e)];
        }
        if (sum != 0) {
            return "coboundary is " + std::to_string(sum) + " on face " + std::to_string(f);
        }
    }
    return {};
}

std::vector<SparseIntMatrix::Entry> as_row(const Skeleton& sk, const std::vector<std::int32_t>& col,
                                           const OracleCochain& g, const std::map<std::int32_t, std::int32_t>& relabel)
{
    std::vector<SparseIntMatrix::Entry> row;
    for (const auto& [a0, b0, c] : g.values) {
        if (!relabel.contains(a0) || !relabel.contains(b0)) {
            continue;
        }
        const auto a = relabel.at(a0);
        const auto b = relabel.at(b0);
        const auto it = sk.edge_index.find(ordered(a, b));
        if (it == sk.edge_index.end() || col[static_cast<std::size_t>(it->second)] == kNone) {
            continue;
        }
        row.emplace_back(col[static_cast<std::size_t>(it->second)], a < b ? c : -c);
    }
    return row;
}

} // namespace

OracleInput oracle_input(const SurfaceComplex& complex, const BoundaryPartition& bp)
{
    OracleInput in;
    in.vertex_count = complex.vertex_count();
    in.faces.assign(complex.faces().begin(), complex.faces().end());
    for (EdgeId e : bp.contact_edges()) {
        in.contacts.emplace_back(complex.edge(e).tail, complex.edge(e).head);
    }
    return in;
}

OracleCochain oracle_cochain(const SurfaceComplex& complex, const Cochain1& g)
{
    OracleCochain out;
    for (const auto& [e, value] : g.entries()) {
        out.values.emplace_back(complex.edge(e).tail, complex.edge(e).head, value);
    }
    return out;
}

std::int64_t betti1_relative(const OracleInput& input, const OracleOptions& options)
{
    const Skeleton sk(input);
    sk.check_cap(options);
    return betti1_relative(sk);
}

std::vector<bool> orientability_by_component(const OracleInput& input) { return orientability(Skeleton(input)); }

bool is_orientable(const OracleInput& input)
{
    const auto flags = orientability_by_component(input);
    return std::all_of(flags.begin(), flags.end(), [](bool b) { return b; });
}

ClosedComplex oracle_closed_complex(const OracleInput& input) { return closed_from(Skeleton(input)); }

HomologyResult homology_snf(const ClosedComplex& closed, const OracleOptions& options)
{
    if (closed.edge_count() > options.max_edges) {
        throw OracleLimitError("oracle refuses " + std::to_string(closed.edge_count()) + " edges (cap "
                               + std::to_string(options.max_edges) + ")");
    }
    SparseIntMatrix d1(closed.vertex_count);
    for (const auto& [tail, head] : closed.edge_ends) {
        d1.add_row({{head, 1}, {tail, -1}});
    }
    SparseIntMatrix d2(closed.edge_count());
    for (const auto& boundary : closed.face_boundary) {
        std::vector<SparseIntMatrix::Entry> row;
        for (const auto& fe : boundary) {
            row.emplace_back(fe.edge, fe.sign);
        }
        d2.add_row(std::move(row));
    }
    const auto snf = smith_form(d2);
    HomologyResult out;
    out.betti1 = closed.edge_count() - exact_rank(d1) - snf.rank;
    out.torsion = snf.torsion;
    return out;
}

VerificationReport verify(const SurfaceComplex& complex, const BoundaryPartition& bp, const GeneratorSet& gens,
                          const OracleOptions& options)
{
    const auto input = oracle_input(complex, bp);
    const Skeleton sk(input);
    sk.check_cap(options);

    VerificationReport report;
    const auto all = gens.all();
    report.generator_count = static_cast<std::int64_t>(all.size());
    std::vector<OracleCochain> raw;
    for (const auto& g : all) {
        raw.push_back(oracle_cochain(complex, g.cochain));
        GeneratorCheck check{g.kind, g.component, false, cocycle_problem(sk, raw.back(), nullptr)};
        check.cocycle_ok = check.detail.empty();
        if (!check.cocycle_ok) {
            report.failures.push_back(std::string(to_string(g.kind)) + " generator " + std::to_string(report.generators.size())
                                      + ": " + check.detail);
        }
        report.generators.push_back(std::move(check));
    }

    const auto components = face_components(sk);
    const auto orientable = orientability(sk);
    if (components.size() != gens.components.size()) {
        report.failures.push_back("generator set has " + std::to_string(gens.components.size())
                                  + " components, oracle finds " + std::to_string(components.size()));
    }
    report.independence_ok = true;
    report.dimension_formula_ok = true;
    for (std::size_t c = 0; c < components.size(); ++c) {
        const auto sub = restrict_to(input, sk, components[c]);
        const Skeleton local(sub.input);
        ComponentCheck cc;
        cc.component = static_cast<std::int32_t>(c);
        cc.orientable = orientable[c];
        cc.betti1_relative = betti1_relative(local);
        OracleInput insulated = sub.input;
        insulated.contacts.clear();
        const auto closed = closed_from(Skeleton(insulated));
        const auto homology = homology_snf(closed, options);
        cc.betti1_closed = homology.betti1;
        cc.torsion = homology.torsion;
        cc.hole_count = count_boundary_cycles(local);
        cc.contact_count = count_contact_components(local);

        const auto col = local.relative_columns();
        const auto n1 = static_cast<std::int32_t>(std::count_if(col.begin(), col.end(), [](auto x) { return x != kNone; }));
        auto stacked = local.relative_coboundary0(col, n1);
        const auto base_rank = exact_rank(stacked);
        std::int64_t k = 0;
        for (std::size_t i = 0; i < all.size(); ++i) {
            if (all[i].component != cc.component) {
                continue;
            }
            ++k;
            switch (all[i].kind) {
            case GeneratorClass::Handle: ++cc.handle_count; break;
            case GeneratorClass::Hole: ++cc.hole_count_generated; break;
            case GeneratorClass::Contact: ++cc.contact_count_generated; break;
            }
            stacked.add_row(as_row(local, col, raw[i], sub.local_vertex));
        }
        cc.independent = exact_rank(stacked) == base_rank + k;
        cc.count_ok = k == cc.betti1_relative;

        const bool twisted = c < gens.components.size() && !gens.components[c].twisted_edges.empty();
        cc.orientation_ok = c < gens.components.size() && twisted == !cc.orientable;
        cc.torsion_ok = cc.orientable ? cc.torsion.empty() : cc.torsion == std::vector<std::int64_t>{2};

        const std::int64_t holes_expected = std::max(cc.hole_count - 1, 0);
        const std::int64_t contacts_expected =
            cc.contact_count == 0 ? 0 : (cc.orientable ? cc.contact_count - 1 : cc.contact_count);
        cc.dimension_formula_ok = cc.handle_count == cc.betti1_closed && cc.hole_count_generated == holes_expected
                                  && cc.contact_count_generated == contacts_expected
                                  && cc.betti1_relative == cc.betti1_closed + holes_expected + contacts_expected;

        const std::string prefix = "component " + std::to_string(c) + ": ";
        if (!cc.independent) {
            report.failures.push_back(prefix + "generators are dependent modulo relative coboundaries");
        }
        if (!cc.count_ok) {
            report.failures.push_back(prefix + std::to_string(k) + " generators, relative Betti number "
                                      + std::to_string(cc.betti1_relative));
        }
        if (!cc.orientation_ok) {
            report.failures.push_back(prefix + "twisted critical edges do not match orientability");
        }
        if (!cc.torsion_ok) {
            report.failures.push_back(prefix + "torsion of the collapsed complex does not match orientability");
        }
        if (!cc.dimension_formula_ok) {
            std::ostringstream msg;
            msg << prefix << "class sizes ha/ho/co = " << cc.handle_count << "/" << cc.hole_count_generated << "/"
                << cc.contact_count_generated << " against " << cc.betti1_closed << "/" << holes_expected << "/"
                << contacts_expected;
            report.failures.push_back(msg.str());
        }

        report.betti1_relative += cc.betti1_relative;
        report.orientable = report.orientable && cc.orientable;
        report.torsion.insert(report.torsion.end(), cc.torsion.begin(), cc.torsion.end());
        report.independence_ok = report.independence_ok && cc.independent;
        report.dimension_formula_ok = report.dimension_formula_ok && cc.dimension_formula_ok;
        report.components.push_back(std::move(cc));
    }
    if (report.generator_count != report.betti1_relative) {
        report.failures.push_back("total of " + std::to_string(report.generator_count)
                                  + " generators, relative Betti number " + std::to_string(report.betti1_relative));
    }
    return report;
}

} // namespace relcoh

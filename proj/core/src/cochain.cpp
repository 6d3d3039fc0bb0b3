#include "relcoh/cochain.hpp"

#include "relcoh/errors.hpp"

#include <string>

namespace relcoh {

namespace {

template <class A, class B>
Coefficient dot(const A& a, const B& b)
{
    Coefficient sum = 0;
    auto i = a.entries().begin();
    auto j = b.entries().begin();
    while (i != a.entries().end() && j != b.entries().end()) {
        if (i->first < j->first) {
            ++i;
        } else if (j->first < i->first) {
            ++j;
        } else {
            sum += i->second * j->second;
            ++i;
            ++j;
        }
    }
    return sum;
}

void check_edge(const SurfaceComplex& complex, std::int32_t e)
{
    if (e < 0 || e >= complex.edge_count()) {
        throw TopologyError(TopologyErrorKind::UnknownEdgeId, "edge id " + std::to_string(e));
    }
}

} // namespace

Coefficient evaluate(const Cochain0& c, const Chain0& z) { return dot(c, z); }
Coefficient evaluate(const Cochain1& c, const Chain1& z) { return dot(c, z); }
Coefficient evaluate(const Cochain2& c, const Chain2& z) { return dot(c, z); }

Chain0 boundary1(const SurfaceComplex& complex, const Chain1& z)
{
    std::vector<Chain0::Entry> out;
    out.reserve(2 * z.support_size());
    for (const auto& [e, value] : z.entries()) {
        check_edge(complex, e);
        const auto& ed = complex.edge(e);
        out.emplace_back(ed.head, value);
        out.emplace_back(ed.tail, -value);
    }
    return Chain0::from_entries(std::move(out));
}

Chain1 boundary2(const SurfaceComplex& complex, const Chain2& z)
{
    std::vector<Chain1::Entry> out;
    out.reserve(3 * z.support_size());
    for (const auto& [f, value] : z.entries()) {
        for (const auto& fe : complex.face_edges(f)) {
            out.emplace_back(fe.edge, fe.sign * value);
        }
    }
    return Chain1::from_entries(std::move(out));
}

Cochain1 coboundary0(const SurfaceComplex& complex, const Cochain0& c)
{
    std::vector<Cochain1::Entry> out;
    for (const auto& [v, value] : c.entries()) {
        for (const auto& nb : complex.neighbors(v)) {
            out.emplace_back(nb.edge, complex.vertex_incidence(nb.edge, v) * value);
        }
    }
    return Cochain1::from_entries(std::move(out));
}

Cochain2 coboundary1(const SurfaceComplex& complex, const Cochain1& g)
{
    std::vector<Cochain2::Entry> out;
    out.reserve(2 * g.support_size());
    for (const auto& [e, value] : g.entries()) {
        check_edge(complex, e);
        for (FaceId f : complex.edge_faces(e)) {
            out.emplace_back(f, complex.incidence(f, e) * value);
        }
    }
    return Cochain2::from_entries(std::move(out));
}

CocycleCheck is_relative_cocycle(const SurfaceComplex& complex, const Cochain1& g, const BoundaryPartition& bp)
{
    CocycleCheck check;
    for (const auto& [e, value] : g.entries()) {
        if (e >= 0 && e < complex.edge_count() && bp.is_insulated_edge(e)) {
            check.ok = false;
            check.first_violation = CocycleViolation{CocycleViolation::Kind::InsulatedEdge, e, value};
            return check;
        }
    }
    const auto d = coboundary1(complex, g);
    if (!d.is_zero()) {
        const auto& [f, value] = d.entries().front();
        check.ok = false;
        check.first_violation = CocycleViolation{CocycleViolation::Kind::FaceSum, f, value};
    }
    return check;
}

} // namespace relcoh

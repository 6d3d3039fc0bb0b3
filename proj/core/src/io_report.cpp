#include "relcoh/io_report.hpp"

#include "relcoh/errors.hpp"

#include <nlohmann/json.hpp>

#include <ostream>

namespace relcoh {

namespace {

using Json = nlohmann::ordered_json;

Json edge_pair(const SurfaceComplex& complex, EdgeId e)
{
    return Json::array({complex.edge(e).tail, complex.edge(e).head});
}

Json edge_list(const SurfaceComplex& complex, const std::vector<EdgeId>& edges)
{
    Json out = Json::array();
    for (EdgeId e : edges) {
        out.push_back(edge_pair(complex, e));
    }
    return out;
}

template <class T>
Json optional_value(const std::optional<T>& v)
{
    return v ? Json(*v) : Json(nullptr);
}

Json component_json(const SurfaceComplex& complex, const ComponentSummary& s)
{
    Json j;
    j["component_id"] = s.component_id;
    j["V"] = s.vertex_count;
    j["E"] = s.edge_count;
    j["F"] = s.face_count;
    j["euler_characteristic"] = s.euler_characteristic;
    j["N_ho"] = s.hole_count;
    j["N_co"] = s.contact_count;
    j["E_M"] = s.critical_edges.size();
    j["E_M_II"] = s.twisted_edges.size();
    j["orientable"] = s.orientable;
    j["betti1"] = s.betti1();
    j["n_ha"] = s.handle_count;
    j["n_ho"] = s.hole_generator_count;
    j["n_co"] = s.contact_generator_count;
    j["fixed_hole"] = optional_value(s.fixed_hole);
    j["fixed_contact"] = optional_value(s.fixed_contact);
    j["twisted_pivot"] = s.twisted_pivot ? edge_pair(complex, *s.twisted_pivot) : Json(nullptr);
    j["critical_edges"] = edge_list(complex, s.critical_edges);
    j["twisted_edges"] = edge_list(complex, s.twisted_edges);
    return j;
}

Json generator_json(const SurfaceComplex& complex, const Generator& g)
{
    Json j;
    j["class"] = std::string(to_string(g.kind));
    j["component"] = g.component;
    Json edges = Json::array();
    for (const auto& [e, value] : g.cochain.entries()) {
        Json entry;
        entry["v_a"] = complex.edge(e).tail;
        entry["v_b"] = complex.edge(e).head;
        entry["coefficient"] = value;
        edges.push_back(std::move(entry));
    }
    j["edges"] = std::move(edges);
    return j;
}

Json verification_json(const VerificationReport& r)
{
    Json j;
    j["passed"] = r.passed();
    j["betti1_relative"] = r.betti1_relative;
    j["generator_count"] = r.generator_count;
    j["independence_ok"] = r.independence_ok;
    j["orientable"] = r.orientable;
    j["torsion"] = r.torsion;
    j["dimension_formula_ok"] = r.dimension_formula_ok;
    Json cocycles = Json::array();
    for (const auto& g : r.generators) {
        cocycles.push_back(g.cocycle_ok);
    }
    j["cocycle_ok"] = std::move(cocycles);
    Json comps = Json::array();
    for (const auto& c : r.components) {
        Json cj;
        cj["component_id"] = c.component;
        cj["N_ho"] = c.hole_count;
        cj["N_co"] = c.contact_count;
        cj["orientable"] = c.orientable;
        cj["betti1_relative"] = c.betti1_relative;
        cj["betti1_collapsed"] = c.betti1_closed;
        cj["torsion"] = c.torsion;
        cj["independent"] = c.independent;
        cj["count_ok"] = c.count_ok;
        cj["orientation_ok"] = c.orientation_ok;
        cj["torsion_ok"] = c.torsion_ok;
        cj["dimension_formula_ok"] = c.dimension_formula_ok;
        comps.push_back(std::move(cj));
    }
    j["components"] = std::move(comps);
    j["failures"] = r.failures;
    return j;
}

EdgeId edge_from_pair(const SurfaceComplex& complex, const Json& a, const Json& b, const std::string& source)
{
    const auto va = a.get<std::int64_t>();
    const auto vb = b.get<std::int64_t>();
    if (va < 0 || vb < 0 || va >= complex.vertex_count() || vb >= complex.vertex_count()) {
        throw ParseError(source, 0, "vertex out of range in edge " + std::to_string(va) + " " + std::to_string(vb));
    }
    const auto e = complex.find_edge(static_cast<VertexId>(va), static_cast<VertexId>(vb));
    if (!e) {
        throw ParseError(source, 0, "no edge " + std::to_string(va) + " " + std::to_string(vb));
    }
    return *e;
}

std::vector<EdgeId> edges_from(const SurfaceComplex& complex, const Json& list, const std::string& source)
{
    std::vector<EdgeId> out;
    for (const auto& pair : list) {
        out.push_back(edge_from_pair(complex, pair.at(0), pair.at(1), source));
    }
    return out;
}

template <class T>
std::optional<T> optional_from(const Json& j)
{
    if (j.is_null()) {
        return std::nullopt;
    }
    return j.get<T>();
}

} // namespace

std::string format_report(const SurfaceComplex& complex, const GeneratorSet& gens, const VerificationReport* verification)
{
    Json root;
    root["format"] = kReportFormat;
    root["version"] = kReportVersion;
    Json mesh;
    mesh["V"] = complex.vertex_count();
    mesh["E"] = complex.edge_count();
    mesh["F"] = complex.face_count();
    mesh["euler_characteristic"] = euler_characteristic(complex);
    mesh["boundary_edges"] = complex.boundary_edge_count();
    mesh["generators"] = gens.size();
    root["mesh"] = std::move(mesh);
    Json comps = Json::array();
    for (const auto& s : gens.components) {
        comps.push_back(component_json(complex, s));
    }
    root["components"] = std::move(comps);
    Json list = Json::array();
    for (const auto& g : gens.all()) {
        list.push_back(generator_json(complex, g));
    }
    root["generators"] = std::move(list);
    root["warnings"] = gens.warnings;
    if (verification) {
        root["verification"] = verification_json(*verification);
    }
    return root.dump(2) + "\n";
}

void write_report(std::ostream& out, const SurfaceComplex& complex, const GeneratorSet& gens,
                  const VerificationReport* verification)
{
    out << format_report(complex, gens, verification);
}

GeneratorSet parse_report(const std::string& text, const SurfaceComplex& complex, const std::string& source)
{
    GeneratorSet out;
    try {
        const auto root = Json::parse(text);
        if (root.at("format").get<std::string>() != kReportFormat) {
            throw ParseError(source, 0, "not a generator report");
        }
        for (const auto& cj : root.at("components")) {
            ComponentSummary s;
            s.component_id = cj.at("component_id").get<std::int32_t>();
            s.vertex_count = cj.at("V").get<std::int32_t>();
            s.edge_count = cj.at("E").get<std::int32_t>();
            s.face_count = cj.at("F").get<std::int32_t>();
            s.euler_characteristic = cj.at("euler_characteristic").get<std::int64_t>();
            s.hole_count = cj.at("N_ho").get<std::int32_t>();
            s.contact_count = cj.at("N_co").get<std::int32_t>();
            s.orientable = cj.at("orientable").get<bool>();
            s.handle_count = cj.at("n_ha").get<std::int32_t>();
            s.hole_generator_count = cj.at("n_ho").get<std::int32_t>();
            s.contact_generator_count = cj.at("n_co").get<std::int32_t>();
            s.fixed_hole = optional_from<std::int32_t>(cj.at("fixed_hole"));
            s.fixed_contact = optional_from<std::int32_t>(cj.at("fixed_contact"));
            const auto& pivot = cj.at("twisted_pivot");
            if (!pivot.is_null()) {
                s.twisted_pivot = edge_from_pair(complex, pivot.at(0), pivot.at(1), source);
            }
            s.critical_edges = edges_from(complex, cj.at("critical_edges"), source);
            s.twisted_edges = edges_from(complex, cj.at("twisted_edges"), source);
            out.components.push_back(std::move(s));
        }
        for (const auto& gj : root.at("generators")) {
            const auto kind = generator_class_from_string(gj.at("class").get<std::string>());
            if (!kind) {
                throw ParseError(source, 0, "unknown generator class " + gj.at("class").dump());
            }
            std::vector<Cochain1::Entry> entries;
            for (const auto& ej : gj.at("edges")) {
                const auto e = edge_from_pair(complex, ej.at("v_a"), ej.at("v_b"), source);
                const auto c = ej.at("coefficient").get<Coefficient>();
                entries.emplace_back(e, complex.edge(e).tail == ej.at("v_a").get<VertexId>() ? c : -c);
            }
            Generator g{*kind, gj.at("component").get<std::int32_t>(), Cochain1::from_entries(std::move(entries))};
            switch (g.kind) {
            case GeneratorClass::Handle: out.handles.push_back(std::move(g)); break;
            case GeneratorClass::Hole: out.holes.push_back(std::move(g)); break;
            case GeneratorClass::Contact: out.contacts.push_back(std::move(g)); break;
            }
        }
        out.warnings = root.at("warnings").get<std::vector<std::string>>();
    } catch (const nlohmann::json::exception& ex) {
        throw ParseError(source, 0, ex.what());
    }
    return out;
}

} // namespace relcoh

#include "relcoh/io_off.hpp"

#include "relcoh/errors.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>

namespace relcoh {

namespace {

/// Non-empty, comment-stripped lines split into whitespace tokens.
class LineReader {
public:
    LineReader(std::istream& in, std::string source) : in_(in), source_(std::move(source)) {}

    bool next(std::vector<std::string_view>& tokens)
    {
        while (std::getline(in_, line_)) {
            ++number_;
            if (const auto hash = line_.find('#'); hash != std::string::npos) {
                line_.erase(hash);
            }
            tokens.clear();
            std::string_view rest(line_);
            while (true) {
                const auto start = rest.find_first_not_of(" \t\r\f\v");
                if (start == std::string_view::npos) {
                    break;
                }
                rest.remove_prefix(start);
                const auto end = std::min(rest.find_first_of(" \t\r\f\v"), rest.size());
                tokens.push_back(rest.substr(0, end));
                rest.remove_prefix(end);
            }
            if (!tokens.empty()) {
                return true;
            }
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& message) const { throw ParseError(source_, number_, message); }

    template <class T>
    T number(std::string_view token) const
    {
        T value{};
        const auto* end = token.data() + token.size();
        const auto [ptr, ec] = std::from_chars(token.data(), end, value);
        if (ec != std::errc{} || ptr != end) {
            fail("expected a number, got '" + std::string(token) + "'");
        }
        return value;
    }

    std::size_t line() const noexcept { return number_; }

private:
    std::istream& in_;
    std::string source_;
    std::string line_;
    std::size_t number_ = 0;
};

} // namespace

MeshData read_off(std::istream& in, const std::string& source)
{
    LineReader reader(in, source);
    std::vector<std::string_view> tokens;
    if (!reader.next(tokens)) {
        throw ParseError(source, 0, "empty file");
    }
    if (tokens.front() != "OFF") {
        reader.fail("missing OFF header");
    }
    tokens.erase(tokens.begin());
    if (tokens.empty() && !reader.next(tokens)) {
        reader.fail("missing vertex/face counts");
    }
    if (tokens.size() < 2) {
        reader.fail("expected vertex and face counts");
    }
    const auto nv = reader.number<std::int64_t>(tokens[0]);
    const auto nf = reader.number<std::int64_t>(tokens[1]);
    if (nv < 0 || nf < 0 || nv > INT32_MAX || nf > INT32_MAX) {
        reader.fail("invalid counts");
    }

    MeshData mesh;
    mesh.vertex_count = static_cast<std::int32_t>(nv);
    mesh.coordinates.reserve(static_cast<std::size_t>(nv));
    for (std::int64_t i = 0; i < nv; ++i) {
        if (!reader.next(tokens)) {
            throw ParseError(source, reader.line(),
                             "expected " + std::to_string(nv) + " vertices, found " + std::to_string(i));
        }
        if (tokens.size() < 3) {
            reader.fail("vertex needs three coordinates");
        }
        mesh.coordinates.push_back(
            {reader.number<double>(tokens[0]), reader.number<double>(tokens[1]), reader.number<double>(tokens[2])});
    }
    mesh.faces.reserve(static_cast<std::size_t>(nf));
    for (std::int64_t i = 0; i < nf; ++i) {
        if (!reader.next(tokens)) {
            throw ParseError(source, reader.line(),
                             "expected " + std::to_string(nf) + " faces, found " + std::to_string(i));
        }
        if (reader.number<std::int64_t>(tokens[0]) != 3) {
            reader.fail("only triangles are supported");
        }
        if (tokens.size() < 4) {
            reader.fail("face needs three vertex indices");
        }
        Triangle t{};
        for (std::size_t k = 0; k < 3; ++k) {
            const auto v = reader.number<std::int64_t>(tokens[k + 1]);
            if (v < 0 || v >= nv) {
                reader.fail("vertex index " + std::to_string(v) + " out of range");
            }
            t[k] = static_cast<VertexId>(v);
        }
        mesh.faces.push_back(t);
    }
    if (reader.next(tokens)) {
        reader.fail("unexpected content after the last face");
    }
    return mesh;
}

MeshData read_off_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw ParseError(path.string(), 0, "cannot open file");
    }
    return read_off(in, path.string());
}

void write_off(std::ostream& out, const MeshData& mesh)
{
    out << "OFF\n" << mesh.vertex_count << ' ' << mesh.faces.size() << " 0\n";
    std::ostringstream coords;
    coords.precision(17);
    for (std::int32_t v = 0; v < mesh.vertex_count; ++v) {
        if (mesh.coordinates.empty()) {
            out << "0 0 0\n";
        } else {
            const auto& p = mesh.coordinates[static_cast<std::size_t>(v)];
            coords.str({});
            coords << p.x << ' ' << p.y << ' ' << p.z;
            out << coords.str() << '\n';
        }
    }
    for (const auto& f : mesh.faces) {
        out << "3 " << f[0] << ' ' << f[1] << ' ' << f[2] << '\n';
    }
}

std::vector<EdgeId> read_contacts(std::istream& in, const SurfaceComplex& complex, const std::string& source)
{
    LineReader reader(in, source);
    std::vector<std::string_view> tokens;
    std::vector<EdgeId> out;
    while (reader.next(tokens)) {
        if (tokens.size() != 2) {
            reader.fail("expected a vertex pair 'i j'");
        }
        const auto a = reader.number<std::int64_t>(tokens[0]);
        const auto b = reader.number<std::int64_t>(tokens[1]);
        const auto where = source + ":" + std::to_string(reader.line());
        if (a < 0 || b < 0 || a >= complex.vertex_count() || b >= complex.vertex_count()) {
            throw TopologyError(TopologyErrorKind::NotABoundaryEdge,
                                where + ": no edge " + std::to_string(a) + " " + std::to_string(b));
        }
        const auto e = complex.find_edge(static_cast<VertexId>(a), static_cast<VertexId>(b));
        if (!e || !complex.is_boundary(*e)) {
            throw TopologyError(TopologyErrorKind::NotABoundaryEdge,
                                where + ": " + std::to_string(a) + " " + std::to_string(b) + " is not a boundary edge");
        }
        out.push_back(*e);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<EdgeId> read_contacts_file(const std::filesystem::path& path, const SurfaceComplex& complex)
{
    std::ifstream in(path);
    if (!in) {
        throw ParseError(path.string(), 0, "cannot open file");
    }
    return read_contacts(in, complex, path.string());
}

void write_contacts(std::ostream& out, const SurfaceComplex& complex, std::span<const EdgeId> edges)
{
    for (EdgeId e : edges) {
        out << complex.edge(e).tail << ' ' << complex.edge(e).head << '\n';
    }
}

} // namespace relcoh

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace relcoh {

/// Problems with the input surface itself. The CLI maps these to exit code 2.
enum class TopologyErrorKind {
    VertexOutOfRange,
    DegenerateFace,
    DuplicateFace,
    NonManifoldEdge,
    NonManifoldVertex,
    IsolatedVertex,
    NotABoundaryEdge,
    UnknownEdgeId,
    DisconnectedComplex,
};

constexpr std::string_view to_string(TopologyErrorKind kind) noexcept
{
    switch (kind) {
    case TopologyErrorKind::VertexOutOfRange: return "VertexOutOfRange";
    case TopologyErrorKind::DegenerateFace: return "DegenerateFace";
    case TopologyErrorKind::DuplicateFace: return "DuplicateFace";
    case TopologyErrorKind::NonManifoldEdge: return "NonManifoldEdge";
    case TopologyErrorKind::NonManifoldVertex: return "NonManifoldVertex";
    case TopologyErrorKind::IsolatedVertex: return "IsolatedVertex";
    case TopologyErrorKind::NotABoundaryEdge: return "NotABoundaryEdge";
    case TopologyErrorKind::UnknownEdgeId: return "UnknownEdgeId";
    case TopologyErrorKind::DisconnectedComplex: return "DisconnectedComplex";
    }
    return "Unknown";
}

class TopologyError : public std::runtime_error {
public:
    TopologyError(TopologyErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind)
    {
    }

    TopologyErrorKind kind() const noexcept { return kind_; }

private:
    TopologyErrorKind kind_;
};

/// Internal invariants of the tree-cotree pipeline. Raising one of these on a
/// valid manifold input is a bug.
enum class ConsistencyErrorKind {
    DualDisconnected,
    CountMismatch,
    EdgeNotOnFace,
    NodeNotInTree,
    PathConflict,
};

constexpr std::string_view to_string(ConsistencyErrorKind kind) noexcept
{
    switch (kind) {
    case ConsistencyErrorKind::DualDisconnected: return "DualDisconnected";
    case ConsistencyErrorKind::CountMismatch: return "CountMismatch";
    case ConsistencyErrorKind::EdgeNotOnFace: return "EdgeNotOnFace";
    case ConsistencyErrorKind::NodeNotInTree: return "NodeNotInTree";
    case ConsistencyErrorKind::PathConflict: return "PathConflict";
    }
    return "Unknown";
}

class ConsistencyError : public std::logic_error {
public:
    ConsistencyError(ConsistencyErrorKind kind, const std::string& message)
        : std::logic_error(std::string(to_string(kind)) + ": " + message), kind_(kind)
    {
    }

    ConsistencyErrorKind kind() const noexcept { return kind_; }

private:
    ConsistencyErrorKind kind_;
};

/// Malformed input files. `line()` is 1-based, 0 when the error is not tied to a line.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& source, std::size_t line, const std::string& message)
        : std::runtime_error(format(source, line, message)), line_(line)
    {
    }

    std::size_t line() const noexcept { return line_; }

private:
    static std::string format(const std::string& source, std::size_t line, const std::string& message)
    {
        if (line == 0) {
            return source + ": " + message;
        }
        return source + ":" + std::to_string(line) + ": " + message;
    }

    std::size_t line_;
};

/// The exact-arithmetic oracle refuses inputs above its size cap.
class OracleLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace relcoh

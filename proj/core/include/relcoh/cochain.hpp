#pragma once

#include "relcoh/complex.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace relcoh {

using Coefficient = std::int64_t;

/**
 * Sparse integer vector indexed by cell id. Entries are kept sorted by id
 * with zeros removed, so equal vectors compare equal and iterate in the same
 * order.
 *
 * The tag only keeps chains and cochains of different degree apart.
 */
template <class Tag>
class SparseVector {
public:
    using Entry = std::pair<std::int32_t, Coefficient>;

    SparseVector() = default;

    /// Duplicated ids are summed.
    static SparseVector from_entries(std::vector<Entry> entries)
    {
        std::sort(entries.begin(), entries.end(),
                  [](const Entry& a, const Entry& b) { return a.first < b.first; });
        SparseVector out;
        out.entries_.reserve(entries.size());
        for (const auto& [id, value] : entries) {
            if (!out.entries_.empty() && out.entries_.back().first == id) {
                out.entries_.back().second += value;
            } else {
                out.entries_.emplace_back(id, value);
            }
        }
        std::erase_if(out.entries_, [](const Entry& e) { return e.second == 0; });
        return out;
    }

    static SparseVector indicator(std::int32_t id, Coefficient value = 1)
    {
        return from_entries({{id, value}});
    }

    Coefficient operator[](std::int32_t id) const
    {
        const auto it = std::lower_bound(entries_.begin(), entries_.end(), id,
                                         [](const Entry& e, std::int32_t x) { return e.first < x; });
        return it != entries_.end() && it->first == id ? it->second : 0;
    }

    /// Copy with the value at `id` replaced.
    SparseVector with_value(std::int32_t id, Coefficient value) const
    {
        auto entries = entries_;
        std::erase_if(entries, [id](const Entry& e) { return e.first == id; });
        entries.emplace_back(id, value);
        return from_entries(std::move(entries));
    }

    std::span<const Entry> entries() const noexcept { return entries_; }
    std::size_t support_size() const noexcept { return entries_.size(); }
    bool is_zero() const noexcept { return entries_.empty(); }

    std::vector<std::int32_t> support() const
    {
        std::vector<std::int32_t> ids;
        ids.reserve(entries_.size());
        for (const auto& e : entries_) {
            ids.push_back(e.first);
        }
        return ids;
    }

    Coefficient max_abs() const noexcept
    {
        Coefficient m = 0;
        for (const auto& e : entries_) {
            m = std::max(m, e.second < 0 ? -e.second : e.second);
        }
        return m;
    }

    friend SparseVector operator+(const SparseVector& a, const SparseVector& b)
    {
        SparseVector out;
        out.entries_.reserve(a.entries_.size() + b.entries_.size());
        auto i = a.entries_.begin();
        auto j = b.entries_.begin();
        while (i != a.entries_.end() || j != b.entries_.end()) {
            if (j == b.entries_.end() || (i != a.entries_.end() && i->first < j->first)) {
                out.entries_.push_back(*i++);
            } else if (i == a.entries_.end() || j->first < i->first) {
                out.entries_.push_back(*j++);
            } else {
                if (const Coefficient s = i->second + j->second; s != 0) {
                    out.entries_.emplace_back(i->first, s);
                }
                ++i;
                ++j;
            }
        }
        return out;
    }

    friend SparseVector operator-(const SparseVector& a)
    {
        SparseVector out = a;
        for (auto& e : out.entries_) {
            e.second = -e.second;
        }
        return out;
    }

    friend SparseVector operator-(const SparseVector& a, const SparseVector& b) { return a + (-b); }

    friend SparseVector operator*(Coefficient s, const SparseVector& a)
    {
        if (s == 0) {
            return {};
        }
        SparseVector out = a;
        for (auto& e : out.entries_) {
            e.second *= s;
        }
        return out;
    }

    friend bool operator==(const SparseVector&, const SparseVector&) = default;

private:
    std::vector<Entry> entries_;
};

using Cochain0 = SparseVector<struct Cochain0Tag>; // on vertices
using Cochain1 = SparseVector<struct Cochain1Tag>; // on edges
using Cochain2 = SparseVector<struct Cochain2Tag>; // on faces
using Chain0 = SparseVector<struct Chain0Tag>;
using Chain1 = SparseVector<struct Chain1Tag>;
using Chain2 = SparseVector<struct Chain2Tag>;

/// Scalar product <c, c'> = sum of a_x b_x.
Coefficient evaluate(const Cochain0& c, const Chain0& z);
Coefficient evaluate(const Cochain1& c, const Chain1& z);
Coefficient evaluate(const Cochain2& c, const Chain2& z);

Chain0 boundary1(const SurfaceComplex& complex, const Chain1& z);
Chain1 boundary2(const SurfaceComplex& complex, const Chain2& z);

/// (delta^0 c)(e) = c(head e) - c(tail e).
Cochain1 coboundary0(const SurfaceComplex& complex, const Cochain0& c);
/// (delta^1 g)(f) = sum over edges of f of iota(f, e) g(e). Throws
/// TopologyError(UnknownEdgeId) for ids outside the complex.
Cochain2 coboundary1(const SurfaceComplex& complex, const Cochain1& g);

struct CocycleViolation {
    enum class Kind { FaceSum, InsulatedEdge } kind;
    std::int32_t cell; // face id or edge id
    Coefficient value;
};

struct CocycleCheck {
    bool ok = true;
    std::optional<CocycleViolation> first_violation;

    explicit operator bool() const noexcept { return ok; }
};

/// True iff delta^1 g = 0 and g vanishes on every insulated boundary edge.
CocycleCheck is_relative_cocycle(const SurfaceComplex& complex, const Cochain1& g, const BoundaryPartition& bp);

} // namespace relcoh

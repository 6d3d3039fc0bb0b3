#include "relcoh/exact_linalg.hpp"

#include "relcoh/errors.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace relcoh {

namespace {

using Dense = std::vector<std::vector<mpz_class>>;

/**
 * Sparse elimination on +-1 pivots. Each pivot contributes an invariant factor
 * of 1 and is removed together with its row and column, which leaves the
 * rank and the remaining invariant factors unchanged. What is left (usually
 * nothing, or a handful of entries) is returned densely.
 */
class UnitReducer {
public:
    explicit UnitReducer(const SparseIntMatrix& m)
        : rows_(m.rows.size()), col_rows_(static_cast<std::size_t>(m.cols))
    {
        for (std::size_t r = 0; r < m.rows.size(); ++r) {
            for (const auto& [c, v] : m.rows[r]) {
                if (c < 0 || c >= m.cols) {
                    throw std::out_of_range("matrix column out of range");
                }
                rows_[r][c] += v;
            }
            std::erase_if(rows_[r], [](const auto& kv) { return kv.second == 0; });
            for (const auto& [c, v] : rows_[r]) {
                col_rows_[static_cast<std::size_t>(c)].insert(static_cast<std::int32_t>(r));
            }
        }
    }

    std::int64_t reduce()
    {
        std::int64_t pivots = 0;
        bool progress = true;
        while (progress) {
            progress = false;
            for (std::size_t r = 0; r < rows_.size(); ++r) {
                std::int32_t best = -1;
                std::size_t best_count = 0;
                for (const auto& [c, v] : rows_[r]) {
                    if (abs(v) != 1) {
                        continue;
                    }
                    const auto count = col_rows_[static_cast<std::size_t>(c)].size();
                    if (best < 0 || count < best_count) {
                        best = c;
                        best_count = count;
                    }
                }
                if (best >= 0) {
                    eliminate(static_cast<std::int32_t>(r), best);
                    ++pivots;
                    progress = true;
                }
            }
        }
        return pivots;
    }

    Dense remainder() const
    {
        std::map<std::int32_t, std::size_t> col_index;
        for (const auto& row : rows_) {
            for (const auto& [c, v] : row) {
                col_index.emplace(c, 0);
            }
        }
        std::size_t k = 0;
        for (auto& [c, idx] : col_index) {
            idx = k++;
        }
        Dense out;
        for (const auto& row : rows_) {
            if (row.empty()) {
                continue;
            }
            std::vector<mpz_class> dense(col_index.size());
            for (const auto& [c, v] : row) {
                dense[col_index.at(c)] = v;
            }
            out.push_back(std::move(dense));
        }
        return out;
    }

private:
    void eliminate(std::int32_t p, std::int32_t c)
    {
        auto& pivot_row = rows_[static_cast<std::size_t>(p)];
        const mpz_class u = pivot_row.at(c);
        const std::vector<std::int32_t> others(col_rows_[static_cast<std::size_t>(c)].begin(),
                                               col_rows_[static_cast<std::size_t>(c)].end());
        for (std::int32_t r : others) {
            if (r == p) {
                continue;
            }
            auto& row = rows_[static_cast<std::size_t>(r)];
            const mpz_class factor = row.at(c) * u; // u = +-1, so this is row[c] / u
            for (const auto& [j, v] : pivot_row) {
                auto& slot = row[j];
                slot -= factor * v;
                if (slot == 0) {
                    row.erase(j);
                    col_rows_[static_cast<std::size_t>(j)].erase(r);
                } else {
                    col_rows_[static_cast<std::size_t>(j)].insert(r);
                }
            }
        }
        for (const auto& [j, v] : pivot_row) {
            col_rows_[static_cast<std::size_t>(j)].erase(p);
        }
        pivot_row.clear();
    }

    std::vector<std::map<std::int32_t, mpz_class>> rows_;
    std::vector<std::set<std::int32_t>> col_rows_;
};

void divide_by_content(std::vector<mpz_class>& row)
{
    mpz_class g = 0;
    for (const auto& v : row) {
        if (v != 0) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        }
    }
    if (g > 1) {
        for (auto& v : row) {
            mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
        }
    }
}

/// Fraction-free row echelon form with content removal after every update.
std::int64_t dense_rank(Dense m)
{
    if (m.empty()) {
        return 0;
    }
    const std::size_t cols = m.front().size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && m[p][c] == 0) {
            ++p;
        }
        if (p == m.size()) {
            continue;
        }
        std::swap(m[r], m[p]);
        for (std::size_t i = r + 1; i < m.size(); ++i) {
            if (m[i][c] == 0) {
                continue;
            }
            const mpz_class a = m[r][c];
            const mpz_class b = m[i][c];
            for (std::size_t j = c; j < cols; ++j) {
                m[i][j] = a * m[i][j] - b * m[r][j];
            }
            divide_by_content(m[i]);
        }
        ++r;
    }
    return static_cast<std::int64_t>(r);
}

std::vector<mpz_class> dense_smith_diagonal(Dense m)
{
    std::vector<mpz_class> diag;
    if (m.empty()) {
        return diag;
    }
    const std::size_t rows = m.size();
    const std::size_t cols = m.front().size();
    const auto row_sub = [&](std::size_t target, std::size_t source, const mpz_class& q) {
        for (std::size_t j = 0; j < cols; ++j) {
            m[target][j] -= q * m[source][j];
        }
    };
    const auto col_sub = [&](std::size_t target, std::size_t source, const mpz_class& q) {
        for (std::size_t i = 0; i < rows; ++i) {
            m[i][target] -= q * m[i][source];
        }
    };
    const auto swap_cols = [&](std::size_t a, std::size_t b) {
        for (auto& row : m) {
            std::swap(row[a], row[b]);
        }
    };
    const auto move_to = [&](std::size_t t, std::size_t i, std::size_t j) {
        std::swap(m[t], m[i]);
        swap_cols(t, j);
    };

    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        // Smallest nonzero entry of the trailing block becomes the pivot.
        bool found = false;
        std::size_t bi = t;
        std::size_t bj = t;
        for (std::size_t i = t; i < rows; ++i) {
            for (std::size_t j = t; j < cols; ++j) {
                if (m[i][j] != 0 && (!found || abs(m[i][j]) < abs(m[bi][bj]))) {
                    found = true;
                    bi = i;
                    bj = j;
                }
            }
        }
        if (!found) {
            break;
        }
        move_to(t, bi, bj);

        while (true) {
            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (m[i][t] != 0) {
                    mpz_class q;
                    mpz_tdiv_q(q.get_mpz_t(), m[i][t].get_mpz_t(), m[t][t].get_mpz_t());
                    row_sub(i, t, q);
                    clean = clean && m[i][t] == 0;
                }
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (m[t][j] != 0) {
                    mpz_class q;
                    mpz_tdiv_q(q.get_mpz_t(), m[t][j].get_mpz_t(), m[t][t].get_mpz_t());
                    col_sub(j, t, q);
                    clean = clean && m[t][j] == 0;
                }
            }
            if (!clean) {
                // A remainder smaller than the pivot is left; promote it.
                std::size_t si = t;
                std::size_t sj = t;
                for (std::size_t i = t + 1; i < rows; ++i) {
                    if (m[i][t] != 0 && abs(m[i][t]) < abs(m[si][sj])) {
                        si = i;
                        sj = t;
                    }
                }
                for (std::size_t j = t + 1; j < cols; ++j) {
                    if (m[t][j] != 0 && abs(m[t][j]) < abs(m[si][sj])) {
                        si = t;
                        sj = j;
                    }
                }
                std::swap(m[t], m[si]);
                swap_cols(t, sj);
                continue;
            }
            std::size_t bad = rows;
            for (std::size_t i = t + 1; i < rows && bad == rows; ++i) {
                for (std::size_t j = t + 1; j < cols; ++j) {
                    if (m[i][j] % m[t][t] != 0) {
                        bad = i;
                        break;
                    }
                }
            }
            if (bad == rows) {
                break;
            }
            row_sub(t, bad, -1);
        }
        diag.push_back(abs(m[t][t]));
    }
    return diag;
}

} // namespace

std::int64_t exact_rank(const SparseIntMatrix& m)
{
    UnitReducer reducer(m);
    const auto pivots = reducer.reduce();
    return pivots + dense_rank(reducer.remainder());
}

SmithForm smith_form(const SparseIntMatrix& m)
{
    UnitReducer reducer(m);
    SmithForm out;
    out.rank = reducer.reduce();
    auto diag = dense_smith_diagonal(reducer.remainder());
    std::sort(diag.begin(), diag.end());
    for (const auto& d : diag) {
        ++out.rank;
        if (d > 1) {
            if (!d.fits_slong_p()) {
                throw OracleLimitError("invariant factor does not fit in 64 bits");
            }
            out.torsion.push_back(d.get_si());
        }
    }
    return out;
}

} // namespace relcoh

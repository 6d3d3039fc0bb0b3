#include "relcoh/exact_linalg.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace relcoh;

namespace {

SparseIntMatrix dense(std::int32_t cols, const std::vector<std::vector<std::int64_t>>& rows)
{
    SparseIntMatrix m(cols);
    for (const auto& r : rows) {
        std::vector<SparseIntMatrix::Entry> entries;
        for (std::int32_t j = 0; j < cols; ++j) {
            if (r[static_cast<std::size_t>(j)] != 0) {
                entries.emplace_back(j, r[static_cast<std::size_t>(j)]);
            }
        }
        m.add_row(std::move(entries));
    }
    return m;
}

} // namespace

TEST(ExactRank, SmallMatrices)
{
    EXPECT_EQ(exact_rank(SparseIntMatrix(4)), 0);
    EXPECT_EQ(exact_rank(dense(3, {{1, 2, 3}, {2, 4, 6}})), 1);
    EXPECT_EQ(exact_rank(dense(3, {{1, 2, 3}, {4, 5, 6}, {7, 8, 9}})), 2);
    EXPECT_EQ(exact_rank(dense(3, {{2, 0, 0}, {0, 3, 0}, {0, 0, 5}})), 3);
    EXPECT_EQ(exact_rank(dense(2, {{0, 0}, {0, 0}})), 0);
}

TEST(ExactRank, RepeatedColumnsAreSummed)
{
    SparseIntMatrix m(2);
    m.add_row({{0, 1}, {0, -1}, {1, 2}});
    m.add_row({{1, 1}});
    EXPECT_EQ(exact_rank(m), 1);
}

TEST(ExactRank, LargeEntriesDoNotOverflow)
{
    // Rows whose elimination would overflow 64-bit arithmetic.
    const std::int64_t big = std::int64_t{1} << 40;
    EXPECT_EQ(exact_rank(dense(3, {{big, big + 1, 3}, {big + 1, big + 2, 5}, {big + 2, big + 3, 7}})), 2);
    EXPECT_EQ(exact_rank(dense(2, {{big, big + 1}, {big - 1, big}})), 2);
}

TEST(ExactRank, IncidenceMatrixOfACycle)
{
    // Signed incidence of an n-cycle has rank n - 1.
    for (std::int32_t n = 3; n < 30; n += 5) {
        SparseIntMatrix m(n);
        for (std::int32_t i = 0; i < n; ++i) {
            m.add_row({{i, -1}, {(i + 1) % n, 1}});
        }
        EXPECT_EQ(exact_rank(m), n - 1);
    }
}

TEST(SmithForm, InvariantFactors)
{
    auto s = smith_form(dense(1, {{2}}));
    EXPECT_EQ(s.rank, 1);
    EXPECT_EQ(s.torsion, (std::vector<std::int64_t>{2}));

    s = smith_form(dense(2, {{2, 0}, {0, 3}}));
    EXPECT_EQ(s.rank, 2);
    EXPECT_EQ(s.torsion, (std::vector<std::int64_t>{6}));

    s = smith_form(dense(2, {{2, 0}, {0, 4}}));
    EXPECT_EQ(s.torsion, (std::vector<std::int64_t>{2, 4}));

    s = smith_form(dense(3, {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}}));
    EXPECT_EQ(s.rank, 3);
    EXPECT_EQ(s.torsion, (std::vector<std::int64_t>{2}));

    s = smith_form(dense(2, {{1, 2}, {3, 4}}));
    EXPECT_EQ(s.rank, 2);
    EXPECT_EQ(s.torsion, (std::vector<std::int64_t>{2}));

    s = smith_form(dense(2, {{1, -1}, {-1, 1}}));
    EXPECT_EQ(s.rank, 1);
    EXPECT_TRUE(s.torsion.empty());
}

TEST(SmithForm, RankAgreesWithExactRank)
{
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> value(-2, 2);
    std::bernoulli_distribution sparse(0.6);
    for (int trial = 0; trial < 50; ++trial) {
        const std::int32_t rows = 2 + trial % 7;
        const std::int32_t cols = 2 + (trial * 3) % 8;
        std::vector<std::vector<std::int64_t>> a(static_cast<std::size_t>(rows),
                                                 std::vector<std::int64_t>(static_cast<std::size_t>(cols)));
        for (auto& r : a) {
            for (auto& x : r) {
                x = sparse(rng) ? 0 : value(rng);
            }
        }
        const auto m = dense(cols, a);
        const auto s = smith_form(m);
        EXPECT_EQ(s.rank, exact_rank(m));
        for (std::size_t i = 1; i < s.torsion.size(); ++i) {
            EXPECT_EQ(s.torsion[i] % s.torsion[i - 1], 0);
        }
    }
}

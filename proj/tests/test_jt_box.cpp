#include <gtest/gtest.h>

#include <set>

#include "hschur/jt_box.hpp"

using namespace hschur;

namespace {

Polynomial s(const std::vector<int> &parts) { return jt_determinant(parts, JTFamily::plain(), 0, Mode::Specialized); }

std::vector<std::vector<RowLabel>> subsets(const std::vector<RowLabel> &all, std::size_t size)
{
    std::vector<std::vector<RowLabel>> out;
    std::vector<RowLabel> cur;
    auto rec = [&](auto &&self, std::size_t from) -> void {
        if (cur.size() == size) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = from; i < all.size(); ++i) {
            cur.push_back(all[i]);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

// Every (m+1)-row minor with a nonzero specialized determinant is a signed
// family determinant of the partition read from its rows.
void check_minors(const BoxMatrix &bm, const JTFamily &fam, const std::string &what)
{
    const auto special = bm.matrix.specialized(Mode::Specialized);
    for (const auto &rows : subsets(bm.matrix.labels(), bm.matrix.cols())) {
        const auto d = determinant(special, rows);
        if (d.is_zero()) {
            continue;
        }
        const auto r = read_minor(bm.matrix, rows);
        ASSERT_FALSE(r.degenerate) << what << " " << labels_str(rows);
        EXPECT_TRUE(r.is_partition) << what << " " << labels_str(rows);
        EXPECT_TRUE(r.matches) << what << " " << labels_str(rows);
        const auto want = jt_determinant(r.parts, fam, r.shift, Mode::Specialized);
        EXPECT_EQ(d, r.sign > 0 ? want : -want) << what << " " << labels_str(rows);
        if (fam.flavor == Flavor::Formal) {
            const auto f = jt_determinant(r.parts, fam, r.shift, Mode::Formal);
            EXPECT_EQ(determinant(bm.matrix, rows), r.sign > 0 ? f : -f) << what << " " << labels_str(rows);
        }
    }
}

} // namespace

TEST(JtMatrix, PlainEntries)
{
    const auto m = jt_matrix({2, 1}, JTFamily::plain());
    EXPECT_EQ(m.entry(RowLabel::row(1), 0), Polynomial::h(2));
    EXPECT_EQ(m.entry(RowLabel::row(1), 1), Polynomial::h(3));
    EXPECT_EQ(m.entry(RowLabel::row(2), 0), Polynomial::h(0));
    EXPECT_EQ(m.entry(RowLabel::row(2), 1), Polynomial::h(1));
    EXPECT_EQ(s({2, 1}), Polynomial::h(2) * Polynomial::h(1) - Polynomial::h(3));
    EXPECT_THROW(jt_matrix({1, 2}, JTFamily::plain()), InvalidPartition);
}

TEST(JtMatrix, QuantumAntiDiagonal)
{
    const std::vector<int> lam{2, 1, 1};
    const auto m = jt_matrix(lam, JTFamily::quantum());
    EXPECT_EQ(m.entry(RowLabel::row(1), 2), Polynomial::t(4, 0));
    EXPECT_EQ(m.entry(RowLabel::row(2), 1), Polynomial::t(1, 1));
    EXPECT_EQ(m.entry(RowLabel::row(3), 0), Polynomial::t(-1, 1));
    EXPECT_EQ(forget_shift(jt_determinant(lam, JTFamily::quantum(), 4, Mode::Specialized)), s(lam));
}

TEST(JtMatrix, SkewEntries)
{
    const auto m = jt_matrix({3, 2}, JTFamily::skew({1}));
    // (h_{λ_i - μ_j - i + j})
    EXPECT_EQ(m.entry(RowLabel::row(1), 0), Polynomial::h(2));
    EXPECT_EQ(m.entry(RowLabel::row(1), 1), Polynomial::h(4));
    EXPECT_EQ(m.entry(RowLabel::row(2), 0), Polynomial::h(0));
    EXPECT_EQ(m.entry(RowLabel::row(2), 1), Polynomial::h(2));
    EXPECT_THROW(jt_matrix({2, 1}, JTFamily::skew({3})), InvalidArgument);
}

TEST(Box, ReadsItsTwoAnchors)
{
    const auto bm = box({{2, 1, 1}, 0}, {{4, 3, 1}, 0}, JTFamily::plain());
    EXPECT_EQ(bm.matrix.row_count(), 8u);
    EXPECT_EQ(bm.matrix.cols(), 4u);
    const auto sp = bm.matrix.specialized(Mode::Specialized);
    EXPECT_EQ(determinant(sp, bm.a_anchor()), s({2, 1, 1}));
    EXPECT_EQ(determinant(sp, bm.b_anchor()), s({4, 3, 1}));
    EXPECT_EQ(read_minor(bm.matrix, bm.a_anchor()).parts, (std::vector<int>{2, 1, 1}));
    EXPECT_EQ(read_minor(bm.matrix, bm.b_anchor()).parts, (std::vector<int>{4, 3, 1}));
}

TEST(Box, QuantumConvention)
{
    const auto bm = box_for_column({3, 2, 1}, 2, JTFamily::quantum());
    // row 1' starts t_3(u-3), row 1 starts t_2(u-2): one class, a + b = 0
    EXPECT_EQ(bm.matrix.entry(RowLabel::primed(1), 0), Polynomial::t(3, -3));
    EXPECT_EQ(bm.matrix.entry(RowLabel::row(1), 0), Polynomial::t(2, -2));
    const auto ra = read_minor(bm.matrix, bm.a_anchor());
    const auto rb = read_minor(bm.matrix, bm.b_anchor());
    EXPECT_EQ(ra.parts, (std::vector<int>{2, 1, 1}));
    EXPECT_EQ(rb.parts, (std::vector<int>{4, 3, 1}));
    EXPECT_EQ(ra.shift, 0);
    EXPECT_EQ(rb.shift, 0);

    const auto b2 = box({{2, 1}, 0}, {{3, 2}, compatible_quantum_shift({2, 1}, 0, {3, 2})}, JTFamily::quantum());
    EXPECT_EQ(read_minor(b2.matrix, b2.b_anchor()).shift, 1);
    EXPECT_THROW(box({{2, 1}, 0}, {{3, 2}, 0}, JTFamily::quantum()), Incompatible);
}

TEST(Box, ForgettingShiftsGivesThePlainBox)
{
    for (const auto &lam : partitions_up_to(7)) {
        for (int ell = 1; ell <= lam.length(); ++ell) {
            if (!has_column_of_height(lam, ell)) {
                continue;
            }
            const auto q = box_for_column(lam, ell, JTFamily::quantum(), 2);
            const auto p = box_for_column(lam, ell, JTFamily::plain());
            for (const auto &l : p.matrix.labels()) {
                for (std::size_t c = 0; c < p.matrix.cols(); ++c) {
                    EXPECT_EQ(forget_shift(q.matrix.entry(l, c)), p.matrix.entry(l, c));
                }
            }
        }
    }
}

TEST(Box, EmptyMembers)
{
    const auto bm = box({{0}, 0}, {{0}, 0}, JTFamily::plain());
    EXPECT_EQ(bm.matrix.row_count(), 4u);
    EXPECT_EQ(bm.matrix.cols(), 2u);
    EXPECT_THROW(box({{1}, 0}, {{1, 0}, 0}, JTFamily::plain()), Incompatible);
}

TEST(Box, MinorsAreFamilyDeterminants)
{
    for (const auto &lam : partitions_up_to(6)) {
        for (int ell = 1; ell <= lam.length(); ++ell) {
            if (!has_column_of_height(lam, ell)) {
                continue;
            }
            for (const auto &fam : {JTFamily::plain(), JTFamily::formal(), JTFamily::quantum()}) {
                check_minors(box_for_column(lam, ell, fam), fam, "(" + lam.str() + ") ell=" + std::to_string(ell) + " "
                                                                     + flavor_name(fam.flavor));
            }
        }
    }
}

TEST(Box, SkewGluing)
{
    const auto fam = JTFamily::skew({1});
    const auto bm = box({{3, 2, 1}, 0}, {{4, 3, 2}, 0}, fam, Partition{1, 1});
    const auto sp = bm.matrix.specialized(Mode::Specialized);
    const auto ra = read_minor(bm.matrix, bm.a_anchor());
    EXPECT_TRUE(ra.matches);
    EXPECT_EQ(ra.parts, (std::vector<int>{3, 2, 1}));
    EXPECT_EQ(determinant(sp, bm.a_anchor()), jt_determinant({3, 2, 1}, fam, 0, Mode::Specialized));
    const auto rb = read_minor(bm.matrix, bm.b_anchor());
    EXPECT_TRUE(rb.matches);
    EXPECT_EQ(rb.inner, (std::vector<int>{1, 1, 0}));
    EXPECT_EQ(determinant(sp, bm.b_anchor()),
              jt_determinant({4, 3, 2}, JTFamily::skew({1, 1}), 0, Mode::Specialized));

    EXPECT_THROW(box({{3, 2, 1}, 0}, {{4, 3, 2}, 0}, fam, Partition{1}), Incompatible);
    EXPECT_THROW(box({{3}, 0}, {{4}, 0}, JTFamily::skew({1}), Partition{1}), Incompatible);
    EXPECT_THROW(box({{3, 2}, 0}, {{4, 3}, 0}, JTFamily::skew({4}), Partition{}), Incompatible);
}

TEST(DuplicateRows, Examples)
{
    auto dups = [](const Partition &lam, int ell) { return duplicate_rows(box_for_column(lam, ell, JTFamily::plain())); };
    const auto sq = dups({2, 2}, 2);
    ASSERT_EQ(sq.size(), 1u);
    EXPECT_EQ(sq[0], std::make_pair(RowLabel::row(1), RowLabel::primed(2)));
    EXPECT_EQ(dups({3, 3, 3}, 3).size(), 2u);
    EXPECT_TRUE(dups({3, 2, 1}, 2).empty());
}

TEST(DuplicateRows, MatchEntrywiseComparison)
{
    for (const auto &lam : partitions_up_to(9)) {
        for (int ell = 1; ell <= lam.length(); ++ell) {
            if (!has_column_of_height(lam, ell)) {
                continue;
            }
            const auto bm = box_for_column(lam, ell, JTFamily::formal());
            std::set<std::pair<RowLabel, RowLabel>> seen;
            for (int i = 1; i <= bm.m; ++i) {
                for (int j = 1; j <= bm.m; ++j) {
                    if (bm.matrix.row(RowLabel::row(i)) == bm.matrix.row(RowLabel::primed(j))) {
                        seen.insert({RowLabel::row(i), RowLabel::primed(j)});
                    }
                }
            }
            const auto got = duplicate_rows(bm);
            EXPECT_EQ(std::set(got.begin(), got.end()), seen) << lam.str() << " ell=" << ell;
        }
    }
}

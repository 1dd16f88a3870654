#include <gtest/gtest.h>

#include <random>

#include "hschur/plucker.hpp"
#include "hschur/sweep.hpp"

using namespace hschur;

namespace {

std::vector<std::string> rhs_strings(const PluckerRelation &rel)
{
    std::vector<std::string> out;
    for (const auto &t : rel.rhs) {
        out.push_back(t.str());
    }
    return out;
}

std::size_t nonzero_terms(const BoxRelation &br)
{
    std::size_t n = br.lhs.coeff != 0;
    for (const auto &f : br.rhs) {
        n += f.coeff != 0;
    }
    return n;
}

} // namespace

TEST(Generate, SevenTermRelation)
{
    const auto rel = generate(4, {1, 2});
    EXPECT_EQ(rel.lhs.str(), "[1 2 3 4][5 6 7 8]");
    EXPECT_EQ(rhs_strings(rel), (std::vector<std::string>{"[5 6 3 4][1 2 7 8]", "[5 7 3 4][1 6 2 8]", "[5 8 3 4][1 6 7 2]",
                                                          "[6 7 3 4][5 1 2 8]", "[6 8 3 4][5 1 7 2]", "[7 8 3 4][5 6 1 2]"}));
}

TEST(Generate, ThreeTermAndFullSwap)
{
    const auto three = generate(2, {1});
    EXPECT_EQ(rhs_strings(three), (std::vector<std::string>{"[3 2][1 4]", "[4 2][3 1]"}));
    const auto full = generate(3, {1, 2, 3});
    ASSERT_EQ(full.rhs.size(), 1u);
    EXPECT_EQ(full.rhs[0].str(), "[4 5 6][1 2 3]");
    EXPECT_THROW(generate(3, {0}), InvalidArgument);
    EXPECT_THROW(generate(3, {2, 2}), InvalidArgument);
}

TEST(Generate, TermCountIsBinomial)
{
    for (int n = 1; n <= 6; ++n) {
        for (int s = 1; s <= n; ++s) {
            std::vector<int> swap;
            for (int r = 1; r <= s; ++r) {
                swap.push_back(r);
            }
            std::size_t binom = 1;
            for (int i = 0; i < s; ++i) {
                binom = binom * static_cast<std::size_t>(n - i) / static_cast<std::size_t>(i + 1);
            }
            EXPECT_EQ(generate(n, swap).rhs.size(), binom);
        }
    }
}

TEST(Verify, RandomIntegerMatrices)
{
    std::mt19937_64 rng(42);
    for (int n = 2; n <= 5; ++n) {
        for (const auto &swap : {std::vector<int>{1}, std::vector<int>{n}, std::vector<int>{1, 2}}) {
            const auto rel = generate(n, swap);
            for (int trial = 0; trial < 10; ++trial) {
                EXPECT_TRUE(verify(rel, random_matrix(n, rng)).ok);
            }
        }
    }
}

TEST(Verify, DetectsBrokenRelations)
{
    std::mt19937_64 rng(1);
    auto rel = generate(3, {1});
    rel.rhs.pop_back();
    bool caught = false;
    for (int trial = 0; trial < 5; ++trial) {
        caught = caught || !verify(rel, random_matrix(3, rng)).ok;
    }
    EXPECT_TRUE(caught);
    EXPECT_THROW(verify(generate(3, {1}), random_matrix(2, rng)), InvalidArgument);
}

TEST(Verify, TransposingFlipsTheValue)
{
    std::mt19937_64 rng(9);
    const auto m = random_matrix(3, rng);
    const auto t = PluckerTerm::make({RowLabel::row(1), RowLabel::row(2), RowLabel::row(3)},
                                     {RowLabel::row(4), RowLabel::row(5), RowLabel::row(6)});
    const auto u = transpose_rows(t, false, 0, 2);
    EXPECT_EQ(u.sign, -t.sign);
    MinorCache cache(m);
    EXPECT_EQ(cache.value(u), -cache.value(t));
    auto direct = determinant(m, u.left) * determinant(m, u.right);
    EXPECT_EQ(cache.value(u), direct);
}

TEST(BoxRelation, StaircaseHasSevenTerms)
{
    const auto br = box_relation({3, 2, 1}, 2, JTFamily::plain());
    EXPECT_EQ(nonzero_terms(br), 7u);
    EXPECT_TRUE(verify(br.relation, br.box.matrix.specialized(Mode::Specialized)).ok);
    const auto &sq = br.rhs[br.square_index];
    EXPECT_EQ(sq.coeff, 1);
    EXPECT_EQ(sq.left.parts, (std::vector<int>{3, 2, 1}));
    EXPECT_EQ(sq.right.parts, (std::vector<int>{3, 2, 1}));
    EXPECT_EQ(br.lhs.left.parts, (std::vector<int>{4, 3, 1}));
    EXPECT_EQ(br.lhs.right.parts, (std::vector<int>{2, 1, 1}));
}

TEST(BoxRelation, RectanglesHaveThreeTerms)
{
    for (int m = 1; m <= 4; ++m) {
        for (int ell = 1; ell <= 4; ++ell) {
            const auto br = box_relation(Partition(std::vector<int>(static_cast<std::size_t>(ell), m)), ell, JTFamily::plain());
            EXPECT_EQ(nonzero_terms(br), 3u) << m << "^" << ell;
        }
    }
}

TEST(BoxRelation, SchurFormsEqualTheirMinors)
{
    for (const auto &lam : partitions_up_to(7)) {
        const auto c = to_corners(lam);
        for (int k = 1; k <= c.count(); ++k) {
            for (const auto &fam : {JTFamily::plain(), JTFamily::quantum()}) {
                const auto br = box_relation(lam, c[k].y, fam);
                const auto sp = br.box.matrix.specialized(Mode::Specialized);
                auto check = [&](const PluckerTerm &t, const SchurForm &f) {
                    const auto direct = determinant(sp, t.left) * determinant(sp, t.right);
                    if (f.coeff == 0) {
                        EXPECT_TRUE(direct.is_zero());
                        return;
                    }
                    const auto a = jt_determinant(f.left.parts, fam, f.left.shift, Mode::Specialized);
                    const auto b = jt_determinant(f.right.parts, fam, f.right.shift, Mode::Specialized);
                    EXPECT_EQ(direct, f.coeff > 0 ? a * b : -(a * b)) << lam.str() << " " << t.str();
                };
                check(br.relation.lhs, br.lhs);
                for (std::size_t i = 0; i < br.rhs.size(); ++i) {
                    check(br.relation.rhs[i], br.rhs[i]);
                }
                EXPECT_TRUE(verify(br.relation, sp).ok);
            }
        }
    }
}

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "hschur/jt_box.hpp"
#include "hschur/polynomial.hpp"
#include "hschur/sym_matrix.hpp"

using namespace hschur;

namespace {

Polynomial h(int k) { return Polynomial::h(k); }

Polynomial random_poly(std::mt19937_64 &rng, int terms = 4)
{
    std::uniform_int_distribution<int> coeff(-5, 5);
    std::uniform_int_distribution<int> deg(0, 3);
    std::uniform_int_distribution<int> idx(1, 4);
    Polynomial p;
    for (int t = 0; t < terms; ++t) {
        Polynomial m(static_cast<long long>(coeff(rng)));
        for (int d = deg(rng); d > 0; --d) {
            m = m * h(idx(rng));
        }
        p += m;
    }
    return p;
}

// Leibniz formula over all permutations.
Polynomial leibniz(const std::vector<std::vector<Polynomial>> &a)
{
    std::vector<int> perm(a.size());
    std::iota(perm.begin(), perm.end(), 0);
    Polynomial total;
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < perm.size(); ++i) {
            for (std::size_t j = i + 1; j < perm.size(); ++j) {
                inversions += perm[i] > perm[j];
            }
        }
        Polynomial term(inversions % 2 ? -1 : 1);
        for (std::size_t i = 0; i < perm.size(); ++i) {
            term = term * a[i][static_cast<std::size_t>(perm[i])];
        }
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

std::vector<std::vector<Polynomial>> random_h_matrix(std::mt19937_64 &rng, std::size_t n)
{
    std::uniform_int_distribution<int> idx(-1, 5);
    std::uniform_int_distribution<int> small(-2, 2);
    std::vector<std::vector<Polynomial>> a(n);
    for (auto &row : a) {
        for (std::size_t j = 0; j < n; ++j) {
            row.push_back(rng() % 3 == 0 ? Polynomial(static_cast<long long>(small(rng))) : h(idx(rng)));
        }
    }
    return a;
}

} // namespace

TEST(Polynomial, Arithmetic)
{
    EXPECT_EQ((h(1) * h(1)).str(), "h1^2");
    EXPECT_EQ((h(2) * h(1) - h(3)) + h(3), h(2) * h(1));
    EXPECT_TRUE((h(2) - h(2)).is_zero());
    EXPECT_EQ(Polynomial(3) * h(1) - h(1) - h(1) - h(1), Polynomial());
    EXPECT_TRUE(Polynomial(7).is_constant());
    EXPECT_EQ(Polynomial(7).constant_value(), 7);
}

TEST(Polynomial, Rendering)
{
    EXPECT_EQ((h(3) * h(1) - h(4)).str(), "h3*h1 - h4");
    EXPECT_EQ(Polynomial::t(3, -1).str(), "t3(u-1)");
    EXPECT_EQ(Polynomial::t(0, 0).str(), "t0(u)");
    EXPECT_EQ(Polynomial::t(2, 2).str(), "t2(u+2)");
    EXPECT_EQ(Polynomial().str(), "0");
    EXPECT_EQ(h(-1).str(), "h{-1}");
}

TEST(Polynomial, RingAxioms)
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const auto a = random_poly(rng);
        const auto b = random_poly(rng);
        const auto c = random_poly(rng);
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_TRUE((a - a).is_zero());
        EXPECT_EQ(-(-a), a);
    }
}

TEST(Polynomial, EvaluationIsAHomomorphism)
{
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> v(-9, 9);
    for (int trial = 0; trial < 100; ++trial) {
        Assignment at;
        for (int k = 1; k <= 4; ++k) {
            at[Symbol::h(k)] = v(rng);
        }
        const auto a = random_poly(rng);
        const auto b = random_poly(rng);
        EXPECT_EQ(eval_numeric(a * b, at), eval_numeric(a, at) * eval_numeric(b, at));
        EXPECT_EQ(eval_numeric(a + b, at), eval_numeric(a, at) + eval_numeric(b, at));
    }
    EXPECT_EQ(eval_numeric(h(1) * h(1), {{Symbol::h(1), 3}}), 9);
    EXPECT_EQ(eval_numeric(h(2) * h(1) - h(3), {{Symbol::h(1), 2}, {Symbol::h(2), 5}, {Symbol::h(3), 7}}), 3);
    EXPECT_THROW(eval_numeric(h(2), {{Symbol::h(1), 1}}), MissingSymbol);
}

TEST(Polynomial, BigCoefficients)
{
    Polynomial p = h(1) + Polynomial(1);
    Polynomial q(1);
    for (int i = 0; i < 70; ++i) {
        q = q * p;
    }
    // coefficient of h1^35 in (h1 + 1)^70 exceeds 64 bits
    Assignment one{{Symbol::h(1), 1}};
    EXPECT_EQ(eval_numeric(q, one), Coefficient(1) << 70);
}

TEST(Polynomial, Specialization)
{
    EXPECT_EQ(specialize(h(0) * h(2), Mode::Specialized), h(2));
    EXPECT_TRUE(specialize(h(-1) * h(5), Mode::Specialized).is_zero());
    EXPECT_EQ(specialize(h(0) * h(2), Mode::Formal), h(0) * h(2));
    EXPECT_EQ(specialize(Polynomial::t(0, 3), Mode::Specialized), Polynomial(1));
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        const auto a = random_poly(rng) * h(0) + h(-2) * h(1);
        const auto once = specialize(a, Mode::Specialized);
        EXPECT_EQ(specialize(once, Mode::Specialized), once);
    }
}

TEST(Polynomial, ShiftsAndForgetting)
{
    EXPECT_EQ(forget_shift(Polynomial::t(3, -1) * Polynomial::t(1, 2)), h(3) * h(1));
    EXPECT_EQ(shift_spectral(Polynomial::t(3, -1), 2), Polynomial::t(3, 1));
    EXPECT_EQ(shift_spectral(h(2), 5), h(2));
}

TEST(Polynomial, ExactDivision)
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        const auto a = random_poly(rng);
        const auto b = random_poly(rng);
        if (b.is_zero()) {
            continue;
        }
        EXPECT_EQ(exact_divide(a * b, b), a);
    }
    EXPECT_THROW(exact_divide(h(1) + Polynomial(1), h(1)), InexactDivision);
    EXPECT_THROW(exact_divide(h(1), Polynomial()), InexactDivision);
    EXPECT_THROW(exact_divide(Polynomial(3), Polynomial(2)), InexactDivision);
}

TEST(Determinant, SmallCases)
{
    SymMatrix m(2);
    m.add_row(RowLabel::left(), {Polynomial(1), Polynomial(0)});
    m.add_row(RowLabel::right(), {Polynomial(0), Polynomial(-1)});
    EXPECT_EQ(determinant(m, {RowLabel::left(), RowLabel::right()}), Polynomial(-1));
    EXPECT_EQ(determinant({{h(2), h(3)}, {h(0), h(1)}}), h(2) * h(1) - h(3) * h(0));
    EXPECT_THROW(determinant(m, {RowLabel::left()}), NonSquareMinor);
    EXPECT_THROW(determinant(m, {RowLabel::left(), RowLabel::row(4)}), UnknownRow);
}

TEST(Determinant, MatchesLeibniz)
{
    std::mt19937_64 rng(17);
    for (std::size_t n = 1; n <= 5; ++n) {
        for (int trial = 0; trial < 10; ++trial) {
            const auto a = random_h_matrix(rng, n);
            EXPECT_EQ(determinant(a), leibniz(a)) << n;
        }
    }
}

TEST(Determinant, Alternating)
{
    std::mt19937_64 rng(19);
    for (std::size_t n = 2; n <= 6; ++n) {
        auto a = random_h_matrix(rng, n);
        SymMatrix m(n);
        std::vector<RowLabel> rows;
        for (std::size_t i = 0; i < n; ++i) {
            rows.push_back(RowLabel::row(static_cast<int>(i) + 1));
            m.add_row(rows.back(), a[i]);
        }
        const auto d = determinant(m, rows);
        auto swapped = rows;
        std::swap(swapped[0], swapped[n - 1]);
        EXPECT_EQ(determinant(m, swapped), -d);
    }
}

TEST(Determinant, ThreeTermRelationOnFourByTwo)
{
    // rows (h3 h4), (h2 h3), (h1 h2), (1 h1)
    SymMatrix m(2);
    m.add_row(RowLabel::row(1), {h(3), h(4)});
    m.add_row(RowLabel::row(2), {h(2), h(3)});
    m.add_row(RowLabel::row(3), {h(1), h(2)});
    m.add_row(RowLabel::row(4), {Polynomial(1), h(1)});
    auto d = [&](int a, int b) { return determinant(m, {RowLabel::row(a), RowLabel::row(b)}); };
    EXPECT_EQ(d(1, 2) * d(3, 4), d(4, 2) * d(3, 1) + d(3, 2) * d(1, 4));
    const auto s = [](std::vector<int> p) { return jt_determinant(p, JTFamily::plain(), 0, Mode::Specialized); };
    // s_(3,3) s_(1,1) = s_(2,1) s_(3,2) - s_(2,2) s_(3,1)
    EXPECT_EQ(d(1, 2), s({3, 3}));
    EXPECT_EQ(d(3, 4), s({1, 1}));
    EXPECT_EQ(d(1, 2) * d(3, 4), s({2, 1}) * s({3, 2}) - s({2, 2}) * s({3, 1}));
}

TEST(Determinant, ZeroPaddingDoesNotChangeSpecializedValue)
{
    for (const auto &p : partitions_up_to(7)) {
        const auto base = jt_determinant(p.parts(), JTFamily::plain(), 0, Mode::Specialized);
        for (int extra = 1; extra <= 2; ++extra) {
            EXPECT_EQ(jt_determinant(p.padded(p.length() + extra), JTFamily::plain(), 0, Mode::Specialized), base);
        }
    }
}

#include <gtest/gtest.h>

#include "hschur/report.hpp"

using namespace hschur;
using nlohmann::json;

TEST(Text, PlainTerms)
{
    const auto text = report::to_text(main_identity({3, 2, 1}, 2));
    EXPECT_NE(text.find("+ s[4,3,1]*s[2,1,1]\n"), std::string::npos);
    EXPECT_NE(text.find("- s[3,3,3,3]*s[]\n"), std::string::npos);
}

TEST(Text, QuantumTerms)
{
    const auto id = quantum_identity({3, 2, 1}, 2);
    const auto text = report::to_text(id);
    EXPECT_NE(text.find("s[3,3,3]^(u-1) * s[1,1,1]^(u+3)"), std::string::npos);
    EXPECT_NE(text.find("s[3,2,2,2]^(u) * s[3,0]^(u)"), std::string::npos);
    EXPECT_EQ(text.substr(0, text.find('\n')), "s[3,2,1]^(u-1) * s[3,2,1]^(u+1) =");
    EXPECT_EQ(report::shift_str(0), "(u)");
    EXPECT_EQ(report::shift_str(-2), "(u-2)");
}

TEST(Json, Envelope)
{
    const auto j = report::to_json(main_identity({2, 1}, 1));
    EXPECT_EQ(j.at("schema"), "hirota-schur/1");
    EXPECT_EQ(j.at("type"), "hirota-identity");
    const auto &t = j.at("rhs").at(0);
    for (const char *key : {"kind", "chain", "alpha", "beta", "sign", "shift_left", "shift_right"}) {
        EXPECT_TRUE(t.contains(key)) << key;
    }
    EXPECT_EQ(report::to_json(ShapeMultiset{}), json::array());
}

TEST(Json, PolynomialRoundTrip)
{
    Polynomial p = Polynomial::t(3, -1) * Polynomial::t(1, 2) - Polynomial(5) * Polynomial::h(2);
    Polynomial big(1);
    for (int i = 0; i < 40; ++i) {
        big = big * (Polynomial::h(1) + Polynomial(3));
    }
    for (const auto &x : {p, big, Polynomial()}) {
        EXPECT_EQ(report::polynomial_from_json(json::parse(report::to_json(x).dump())), x);
    }
}

TEST(Json, IdentityRoundTrip)
{
    for (const auto &lam : partitions_up_to(7)) {
        for (int k = 1; k <= corner_count(lam); ++k) {
            for (const auto &id : {main_identity(lam, k), quantum_identity(lam, k), normalize_zero_parts(quantum_identity(lam, k))}) {
                const auto text = report::to_json(id).dump();
                EXPECT_EQ(report::identity_from_json(json::parse(text)), id);
                EXPECT_EQ(report::to_json(report::identity_from_json(json::parse(text))).dump(), text);
            }
        }
    }
}

TEST(Json, RelationRoundTrip)
{
    const auto rel = generate(4, {1, 3});
    EXPECT_EQ(report::relation_from_json(report::to_json(rel)), rel);
    const auto br = box_relation({3, 2, 1}, 2, JTFamily::quantum());
    const auto j = report::to_json(br.relation, &br);
    EXPECT_EQ(report::relation_from_json(j), br.relation);
    EXPECT_EQ(j.at("lhs").at("schur_form").at("coeff"), 1);
}

TEST(Json, LrRoundTrip)
{
    const auto m = lr_multiply({2, 1}, {2, 1});
    EXPECT_EQ(report::multiset_from_json(report::to_json(m)), m);
    const auto r = conjecture_check({3, 2, 1}, 2);
    EXPECT_EQ(report::conjecture_from_json(json::parse(report::to_json(r).dump())), r);
}

TEST(Json, Deterministic)
{
    const auto a = report::to_json(conjecture_check({3, 2, 1}, 2)).dump(2);
    const auto b = report::to_json(conjecture_check({3, 2, 1}, 2)).dump(2);
    EXPECT_EQ(a, b);
    const auto br1 = box_relation({3, 3, 1}, 2, JTFamily::plain());
    const auto br2 = box_relation({3, 3, 1}, 2, JTFamily::plain());
    EXPECT_EQ(report::to_json(br1.relation, &br1).dump(), report::to_json(br2.relation, &br2).dump());
}

TEST(Json, RejectsBadInput)
{
    auto j = report::to_json(main_identity({2, 1}, 1));
    j["rhs"][0]["kind"] = "sideways";
    EXPECT_THROW(report::identity_from_json(j), std::exception);
    json bad = report::to_json(Polynomial::h(2));
    bad[0]["coeff"] = "x1";
    EXPECT_THROW(report::polynomial_from_json(bad), std::exception);
}

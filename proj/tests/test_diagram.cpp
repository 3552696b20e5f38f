#include <gtest/gtest.h>

#include <set>

#include "cohomone/diagram.hpp"
#include "support/generators.hpp"

using namespace cohomone;

namespace {

GroupDiagram diag(const char* g, const char* km, const char* kp, const char* h)
{
    return GroupDiagram::interval(parse_group(g), parse_group(km), parse_group(kp), parse_group(h));
}

std::set<std::string> rules(const GroupDiagram& d)
{
    std::set<std::string> out;
    for (const auto& v : validate(d).violations)
        out.insert(v.rule);
    return out;
}

} // namespace

TEST(Validate, SO5Line)
{
    const auto d = diag("B2", "D2", "B1+T1", "B1");
    const auto r = validate(d);
    EXPECT_TRUE(r.ok());
    EXPECT_TRUE(r.warnings.empty());
    EXPECT_EQ(sphere_dimension_minus(d), 3);
    EXPECT_EQ(sphere_dimension_plus(d), 1);
    EXPECT_EQ(manifold_dimension(d), 8);
    EXPECT_TRUE(is_even_dimensional(d));
}

TEST(Validate, SevenDimensionalExamplesPass)
{
    EXPECT_TRUE(validate(diag("A2", "A1+T1", "A1+T1", "T2")).ok());
    EXPECT_TRUE(validate(diag("C2", "C1xC1", "C1xC1", "C1+T1")).ok());
    EXPECT_EQ(manifold_dimension(diag("A2", "A1+T1", "A1+T1", "T2")), 7);
    EXPECT_EQ(manifold_dimension(diag("C2", "C1xC1", "C1xC1", "C1+T1")), 7);
}

TEST(Validate, RankRule)
{
    const auto d = diag("A2", "A2", "A2", "1");
    EXPECT_EQ(rules(d), (std::set<std::string>{"rank-rule"}));
    EXPECT_THROW(require_valid(d), Error);
    try {
        manifold_dimension(d);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::Validation);
        EXPECT_NE(std::string(e.what()).find("rank-rule"), std::string::npos);
    }
    // T3/1 = S^3 would need a rank drop of one.
    EXPECT_EQ(rules(diag("T3", "T3", "T1", "1")), (std::set<std::string>{"rank-rule"}));
}

TEST(Validate, OrderRules)
{
    EXPECT_TRUE(rules(diag("A1", "A2", "A1", "T1")).count("rank-order"));
    EXPECT_TRUE(rules(diag("A1", "A2", "A1", "T1")).count("dimension-order"));
    EXPECT_TRUE(rules(diag("T3", "A1+T1", "T3", "T2")).count("dimension-order"));
}

TEST(Validate, WeylDivisibility)
{
    // |W(B2)| = 8 does not divide |W(G2)| = 12.
    EXPECT_TRUE(rules(diag("G2", "B2", "A2", "T2")).count("weyl-divisibility"));
    EXPECT_FALSE(rules(diag("G2", "A2", "A2", "T2")).count("weyl-divisibility"));
}

TEST(Validate, SphereEuler)
{
    // A2/T2 has dimension 6 but is not a sphere: |W(A2)|/|W(T2)| = 6.
    EXPECT_TRUE(rules(diag("A2", "A2", "A1+T1", "T2")).count("sphere-euler"));
}

TEST(Validate, ZeroSphereWarns)
{
    const auto d = diag("A2", "A1+T1", "T2", "T2");
    const auto r = validate(d);
    EXPECT_TRUE(r.ok());
    ASSERT_EQ(r.warnings.size(), 1u);
    EXPECT_NE(r.warnings[0].find("S^0"), std::string::npos);
}

TEST(Validate, ReportsEveryViolation)
{
    const auto d = diag("A1", "B3", "G2", "A2");
    const auto r = validate(d);
    EXPECT_GE(r.violations.size(), 4u);
    EXPECT_TRUE(std::is_sorted(r.violations.begin(), r.violations.end()));
}

TEST(Circle, Basics)
{
    const auto d = GroupDiagram::circle(parse_group("A1"), parse_group("T1"));
    EXPECT_TRUE(validate(d).ok());
    EXPECT_EQ(manifold_dimension(d), 3);
    EXPECT_EQ(rules(GroupDiagram::circle(parse_group("T1"), parse_group("A2"))),
              (std::set<std::string>{"dimension-order", "rank-order"}));
    try {
        sphere_dimension_minus(d);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::WrongOrbitSpace);
    }
}

TEST(Normalize, RankThenDimension)
{
    const auto d = diag("B2", "B1+T1", "D2", "B1");
    const auto n = normalized(d);
    EXPECT_EQ(n.k_minus.to_string(), "D2");
    EXPECT_EQ(n.k_plus.to_string(), "B1+T1");
    EXPECT_EQ(normalized(n), n);
    const auto u = diag("A2+T1", "T3", "A1+T2", "T2");
    EXPECT_EQ(normalized(u).k_minus.to_string(), "A1+T2");
}

TEST(Property, SwapSymmetry)
{
    std::mt19937 rng(3);
    for (int trial = 0; trial < 300; ++trial) {
        const auto d = gen::random_valid_diagram(rng, trial % 2 == 0);
        ASSERT_TRUE(validate(d).ok()) << to_string(d);
        EXPECT_TRUE(validate(d.swapped()).ok());
        EXPECT_EQ(normalized(d), normalized(d.swapped()));
        EXPECT_EQ(manifold_dimension(d), manifold_dimension(d.swapped()));
    }
}

TEST(Property, RandomRuleViolationsAreStable)
{
    // Rules violated by a diagram do not depend on how K- and K+ are labelled.
    const auto pool = gen::group_pool(3);
    std::mt19937 rng(17);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    for (int trial = 0; trial < 500; ++trial) {
        const auto d = GroupDiagram::interval(pool[pick(rng)], pool[pick(rng)], pool[pick(rng)], pool[pick(rng)]);
        EXPECT_EQ(rules(d), rules(d.swapped())) << to_string(d);
    }
}

TEST(Property, FullRankDiagramsAreOddDimensional)
{
    std::mt19937 rng(23);
    for (int trial = 0; trial < 300; ++trial) {
        const auto d = gen::random_valid_diagram(rng, true);
        EXPECT_EQ(manifold_dimension(d) % 2, 1) << to_string(d);
    }
}

#include <gtest/gtest.h>

#include <set>

#include "cohomone/lie_data.hpp"
#include "oracle/oracles.hpp"

using namespace cohomone;

namespace {

oracle::IntMatrix cartan(const std::string& type)
{
    // Row i, column j: <alpha_j, alpha_i^vee>.
    if (type == "A1")
        return {{2}};
    if (type == "A2")
        return {{2, -1}, {-1, 2}};
    if (type == "A3")
        return {{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}};
    if (type == "B2")
        return {{2, -2}, {-1, 2}};
    if (type == "C2")
        return {{2, -1}, {-2, 2}};
    if (type == "B3")
        return {{2, -1, 0}, {-1, 2, -2}, {0, -1, 2}};
    if (type == "C3")
        return {{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}};
    if (type == "D4")
        return {{2, -1, 0, 0}, {-1, 2, -1, -1}, {0, -1, 2, 0}, {0, -1, 0, 2}};
    if (type == "G2")
        return {{2, -1}, {-3, 2}};
    if (type == "F4")
        return {{2, -1, 0, 0}, {-1, 2, -2, 0}, {0, -1, 2, -1}, {0, 0, -1, 2}};
    throw std::invalid_argument(type);
}

std::multiset<int> degrees_of(const std::string& lit)
{
    const auto d = parse_group(lit).invariant_degrees();
    return {d.begin(), d.end()};
}

} // namespace

TEST(Parse, SimpleAndProducts)
{
    const auto g = parse_group("A2+T1");
    EXPECT_EQ(g.rank(), 3);
    EXPECT_EQ(g.dimension(), 9);
    EXPECT_EQ(g.torus_rank(), 1);
    EXPECT_EQ(g.to_string(), "A2+T1");

    const auto c = parse_group("C1xC1");
    EXPECT_EQ(c.rank(), 2);
    EXPECT_EQ(c.dimension(), 6);
    EXPECT_EQ(c.weyl_order(), 4);

    EXPECT_EQ(parse_group(" B2 ").to_string(), "B2");
    EXPECT_EQ(parse_group("T1+T2").to_string(), parse_group("T3").to_string());
}

TEST(Parse, Trivial)
{
    const auto one = parse_group("1");
    EXPECT_TRUE(one.is_trivial());
    EXPECT_EQ(one.rank(), 0);
    EXPECT_EQ(one.dimension(), 0);
    EXPECT_EQ(one.weyl_order(), 1);
    EXPECT_TRUE(one.invariant_degrees().empty());
}

TEST(Parse, ErrorsCarryPositions)
{
    const auto position_of = [](const std::string& text) -> std::size_t {
        try {
            parse_group(text);
        } catch (const Error& e) {
            EXPECT_EQ(e.kind(), ErrorKind::Parse) << text;
            return e.position().value_or(999);
        }
        ADD_FAILURE() << "no error for " << text;
        return 999;
    };
    EXPECT_EQ(position_of("A2+Q1"), 3u);
    EXPECT_EQ(position_of("B"), 1u);
    EXPECT_EQ(position_of("A2*B2"), 2u);
    EXPECT_EQ(position_of(""), 0u);
    EXPECT_EQ(position_of("A2+"), 3u);
}

TEST(Parse, RejectsDisconnectedAndIllegalTypes)
{
    for (const char* lit : {"Z2", "O3", "A2+Z2", "D1", "A0", "E5", "F3", "G3", "1+A1"}) {
        try {
            parse_group(lit);
            ADD_FAILURE() << lit << " accepted";
        } catch (const Error& e) {
            EXPECT_EQ(e.kind(), ErrorKind::Parse) << lit;
        }
    }
    EXPECT_THROW(CompactGroupType::simple(Family::D, 1), Error);
}

TEST(Degrees, Table)
{
    EXPECT_EQ(degrees_of("A2"), (std::multiset<int>{2, 3}));
    EXPECT_EQ(degrees_of("B3"), (std::multiset<int>{2, 4, 6}));
    EXPECT_EQ(degrees_of("C3"), (std::multiset<int>{2, 4, 6}));
    EXPECT_EQ(degrees_of("D4"), (std::multiset<int>{2, 4, 4, 6}));
    EXPECT_EQ(degrees_of("D3"), (std::multiset<int>{2, 3, 4}));
    EXPECT_EQ(degrees_of("E6"), (std::multiset<int>{2, 5, 6, 8, 9, 12}));
    EXPECT_EQ(degrees_of("E7"), (std::multiset<int>{2, 6, 8, 10, 12, 14, 18}));
    EXPECT_EQ(degrees_of("E8"), (std::multiset<int>{2, 8, 12, 14, 18, 20, 24, 30}));
    EXPECT_EQ(degrees_of("F4"), (std::multiset<int>{2, 6, 8, 12}));
    EXPECT_EQ(degrees_of("G2"), (std::multiset<int>{2, 6}));
    EXPECT_EQ(degrees_of("T2"), (std::multiset<int>{1, 1}));
}

TEST(Degrees, MatchBruteForceInvariants)
{
    for (const std::string t : {"A1", "A2", "A3", "B2", "C2", "B3", "C3", "G2"}) {
        const auto gens = oracle::simple_reflections(cartan(t));
        const auto expected = degrees_of(t);
        const int top = *expected.rbegin();
        EXPECT_EQ(oracle::invariant_degrees(gens, top + 1), expected) << t;
    }
}

TEST(Degrees, MatchBruteForceInvariantsLarge)
{
    for (const std::string t : {"D4", "F4"}) {
        const auto gens = oracle::simple_reflections(cartan(t));
        const auto expected = degrees_of(t);
        EXPECT_EQ(oracle::invariant_degrees(gens, *expected.rbegin()), expected) << t;
    }
}

TEST(WeylOrder, ProductOfDegreesMatchesGroupClosure)
{
    for (const std::string t : {"A1", "A2", "A3", "B2", "C2", "B3", "C3", "D4", "G2", "F4"}) {
        const auto gens = oracle::simple_reflections(cartan(t));
        EXPECT_EQ(parse_group(t).weyl_order(), Integer(std::to_string(oracle::group_order(gens)))) << t;
    }
}

TEST(WeylOrder, SignedPermutations)
{
    // W(C2): all signed permutations of two coordinates; W(D2): even sign changes.
    const oracle::IntMatrix swap{{0, 1}, {1, 0}};
    const oracle::IntMatrix flip{{-1, 0}, {0, 1}};
    const oracle::IntMatrix flip_both{{-1, 0}, {0, -1}};
    EXPECT_EQ(oracle::group_order({swap, flip}), 8u);
    EXPECT_EQ(parse_group("C2").weyl_order(), 8);
    EXPECT_EQ(oracle::group_order({swap, flip_both}), 4u);
    EXPECT_EQ(parse_group("D2").weyl_order(), 4);
}

TEST(WeylOrder, Exceptional)
{
    EXPECT_EQ(parse_group("E6").weyl_order(), 51840);
    EXPECT_EQ(parse_group("E7").weyl_order(), 2903040);
    EXPECT_EQ(parse_group("E8").weyl_order(), Integer("696729600"));
    EXPECT_EQ(parse_group("G2").weyl_order(), 12);
}

TEST(Dimension, RankPlusRootCount)
{
    for (const std::string t : {"A1", "A2", "A3", "B2", "C2", "B3", "C3", "D4", "G2", "F4"}) {
        const auto g = parse_group(t);
        EXPECT_EQ(g.dimension(), g.rank() + static_cast<int>(oracle::root_count(cartan(t)))) << t;
    }
    EXPECT_EQ(parse_group("B2").dimension(), 10);
    EXPECT_EQ(parse_group("E8").dimension(), 248);
    EXPECT_EQ(parse_group("E7").dimension(), 133);
    EXPECT_EQ(parse_group("E6").dimension(), 78);
}

TEST(Isogeny, LowRankCoincidences)
{
    EXPECT_EQ(degrees_of("B1"), degrees_of("A1"));
    EXPECT_EQ(degrees_of("C1"), degrees_of("A1"));
    EXPECT_EQ(degrees_of("D2"), degrees_of("A1xA1"));
    EXPECT_EQ(degrees_of("D3"), degrees_of("A3"));
    EXPECT_EQ(degrees_of("B2"), degrees_of("C2"));
    EXPECT_EQ(parse_group("D3").dimension(), parse_group("A3").dimension());
}

TEST(Property, ProductIsAdditiveAndMultiplicative)
{
    const std::vector<std::string> pool{"1", "A1", "A2", "B2", "C3", "D4", "G2", "T1", "T2", "A1+T1", "F4"};
    for (const auto& a : pool)
        for (const auto& b : pool) {
            const auto ga = parse_group(a), gb = parse_group(b);
            const auto p = ga * gb;
            EXPECT_EQ(p.rank(), ga.rank() + gb.rank());
            EXPECT_EQ(p.dimension(), ga.dimension() + gb.dimension());
            EXPECT_EQ(p.weyl_order(), ga.weyl_order() * gb.weyl_order());
            EXPECT_EQ(p.to_string(), (gb * ga).to_string());
            EXPECT_EQ(parse_group(p.to_string()).to_string(), p.to_string());
        }
}

TEST(Property, DimensionFromDegrees)
{
    // dim = sum (2 d_i - 1), |W| = prod d_i
    for (const char* lit : {"A4", "B5", "C4", "D5", "D6", "E6", "E7", "E8", "F4", "G2", "A1+T3"}) {
        const auto g = parse_group(lit);
        int dim = 0;
        Integer w = 1;
        for (int d : g.invariant_degrees()) {
            dim += 2 * d - 1;
            w *= d;
        }
        EXPECT_EQ(g.dimension(), dim) << lit;
        EXPECT_EQ(g.weyl_order(), w) << lit;
        EXPECT_EQ(static_cast<int>(g.invariant_degrees().size()), g.rank()) << lit;
    }
}

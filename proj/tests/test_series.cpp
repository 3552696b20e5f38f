#include <gtest/gtest.h>

#include <random>

#include "cohomone/series.hpp"
#include "oracle/oracles.hpp"

using namespace cohomone;

namespace {

std::vector<Integer> ints(std::initializer_list<long> v)
{
    std::vector<Integer> out;
    for (long x : v)
        out.emplace_back(x);
    return out;
}

IntPoly random_poly(std::mt19937& rng, int max_degree)
{
    std::uniform_int_distribution<int> deg(0, max_degree), coeff(-3, 3);
    IntPoly p;
    const int d = deg(rng);
    for (int i = 0; i <= d; ++i)
        p = p + IntPoly::monomial(coeff(rng), i);
    if (p.is_zero())
        p = IntPoly::constant(1);
    return p;
}

PoincareSeries random_series(std::mt19937& rng)
{
    std::uniform_int_distribution<int> count(0, 3), exp(1, 6);
    std::vector<int> den;
    for (int i = count(rng); i > 0; --i)
        den.push_back(exp(rng));
    return PoincareSeries(random_poly(rng, 5), den);
}

} // namespace

TEST(IntPoly, Arithmetic)
{
    const IntPoly a{1, 0, 1};
    const IntPoly b{1, -1};
    EXPECT_EQ((a * b), (IntPoly{1, -1, 1, -1}));
    EXPECT_EQ((a + b), (IntPoly{2, -1, 1}));
    EXPECT_EQ(IntPoly::one_minus_t_pow(3), (IntPoly{1, 0, 0, -1}));
    EXPECT_EQ(a.value_at_one(), 2);
    EXPECT_TRUE(a.is_palindromic());
    EXPECT_FALSE((IntPoly{1, 2}).is_palindromic());
    EXPECT_TRUE(a.has_nonnegative_coefficients());
    EXPECT_FALSE(b.has_nonnegative_coefficients());
    EXPECT_EQ(*divide_exact(IntPoly::one_minus_t_pow(4), IntPoly::one_minus_t_pow(2)), (IntPoly{1, 0, 1}));
    EXPECT_FALSE(divide_exact(a, b).has_value());
    EXPECT_EQ((IntPoly{1, 0, 1, 0, 2}).to_string(), "1 + t^2 + 2t^4");
    EXPECT_EQ((IntPoly{0, -1, 0, 3}).to_string(), "-t + 3t^3");
}

TEST(Series, ClassifyingB2)
{
    const auto s = classifying_series(parse_group("B2"));
    EXPECT_EQ(s.to_string(), "1 / ((1 - t^4)(1 - t^8))");
    EXPECT_EQ(s.taylor_coefficients(8), ints({1, 0, 0, 0, 1, 0, 0, 0, 2}));
    EXPECT_EQ(s.pole_order_at_one(), 2);
}

TEST(Series, ClassifyingA2T1)
{
    const auto s = classifying_series(parse_group("A2+T1"));
    EXPECT_EQ(s.taylor_coefficients(6), ints({1, 0, 1, 0, 2, 0, 3}));
    EXPECT_EQ(classifying_series(parse_group("1")), PoincareSeries::one());
}

TEST(Series, ClassifyingMatchesMonomialCount)
{
    for (const char* lit : {"A1", "A3", "B3", "C2+T1", "D4", "G2", "F4", "A1xA1xA1", "E6"}) {
        const auto g = parse_group(lit);
        std::vector<int> weights;
        for (int d : g.invariant_degrees())
            weights.push_back(2 * d);
        const auto c = classifying_series(g).taylor_coefficients(30);
        for (int n = 0; n <= 30; ++n)
            EXPECT_EQ(c[static_cast<std::size_t>(n)], oracle::monomials(weights, n).size()) << lit << " t^" << n;
    }
}

TEST(Series, PolynomialArithmetic)
{
    const PoincareSeries a(IntPoly{1, 0, 1});
    const PoincareSeries b(IntPoly{1, 1});
    EXPECT_EQ((a + b).as_polynomial(), (IntPoly{2, 1, 1}));
    EXPECT_EQ((a * b).as_polynomial(), (IntPoly{1, 1, 1, 1}));
}

TEST(Series, QuotientToPolynomial)
{
    // (1 - t^4)(1 - t^8) / ((1 - t^2)(1 - t^4)) = 1 + t^2 + t^4 + t^6
    const PoincareSeries top(IntPoly::constant(1), {2, 4});
    const PoincareSeries bottom(IntPoly::constant(1), {4, 8});
    const auto q = top / bottom;
    ASSERT_TRUE(q.as_polynomial());
    EXPECT_EQ(*q.as_polynomial(), (IntPoly{1, 0, 1, 0, 1, 0, 1}));
}

TEST(Series, DivisionByZero)
{
    try {
        (void)(PoincareSeries::one() / PoincareSeries::zero());
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::DivisionByZero);
    }
}

TEST(Series, Canonicalization)
{
    // (1 + t^2)/(1 - t^4) is 1/(1 - t^2).
    const PoincareSeries s(IntPoly{1, 0, 1}, {4});
    EXPECT_TRUE(s.structurally_equal(PoincareSeries(IntPoly::constant(1), {2})));
    EXPECT_EQ(s.to_string(), "1 / (1 - t^2)");
    // Already reduced: kept as is.
    const PoincareSeries r(IntPoly{1, 0, 1, 0, 1}, {4, 4});
    EXPECT_EQ(r.denominator(), (std::vector<int>{4, 4}));
    EXPECT_EQ(r.to_string(), "(1 + t^2 + t^4) / ((1 - t^4)(1 - t^4))");
}

TEST(Series, PoleOrder)
{
    EXPECT_EQ(PoincareSeries(IntPoly{1, -1}, {2, 2}).pole_order_at_one(), 1);
    EXPECT_EQ(PoincareSeries(IntPoly{1, 0, 1}, {2, 3, 5}).pole_order_at_one(), 3);
    EXPECT_EQ(PoincareSeries(IntPoly{3}).pole_order_at_one(), 0);
    EXPECT_THROW(PoincareSeries::zero().pole_order_at_one(), Error);
}

TEST(Series, EvenGradedDimensions)
{
    EXPECT_EQ(even_graded_dimensions(IntPoly{1, 0, 3, 0, 4, 0, 3, 0, 1}), ints({1, 3, 4, 3, 1}));
}

TEST(Series, Json)
{
    const auto j = PoincareSeries(IntPoly{1, 0, 2}, {4, 6}).to_json();
    EXPECT_EQ(j.dump(), R"({"denominator":[4,6],"numerator":[1,0,2]})");
}

TEST(Property, TaylorIsRingHomomorphism)
{
    std::mt19937 rng(7);
    constexpr int N = 24;
    for (int trial = 0; trial < 200; ++trial) {
        const auto a = random_series(rng), b = random_series(rng);
        const auto ta = a.taylor_coefficients(N), tb = b.taylor_coefficients(N);
        const auto sum = (a + b).taylor_coefficients(N);
        const auto prod = (a * b).taylor_coefficients(N);
        for (int n = 0; n <= N; ++n) {
            const auto i = static_cast<std::size_t>(n);
            EXPECT_EQ(sum[i], ta[i] + tb[i]);
            Integer c = 0;
            for (int k = 0; k <= n; ++k)
                c += ta[static_cast<std::size_t>(k)] * tb[static_cast<std::size_t>(n - k)];
            EXPECT_EQ(prod[i], c);
        }
    }
}

TEST(Property, DivisionInvertsMultiplication)
{
    std::mt19937 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const auto a = random_series(rng);
        // Divisors with cyclotomic numerators are always exact.
        std::vector<int> den{1 + static_cast<int>(rng() % 5)};
        const PoincareSeries b(IntPoly::one_minus_t_pow(1 + static_cast<int>(rng() % 4)), den);
        const auto q = (a * b) / b;
        EXPECT_TRUE(q == a);
        EXPECT_EQ(q.taylor_coefficients(20), a.taylor_coefficients(20));
    }
}

TEST(Property, CanonicalFormIsUnique)
{
    std::mt19937 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const auto a = random_series(rng);
        std::uniform_int_distribution<int> e(1, 5);
        const int d = e(rng);
        // Multiply numerator and denominator by (1 - t^d).
        std::vector<int> den = a.denominator();
        den.push_back(d);
        const PoincareSeries b(a.numerator() * IntPoly::one_minus_t_pow(d), den);
        EXPECT_TRUE(a.structurally_equal(b)) << a.to_string() << " vs " << b.to_string();
    }
}

TEST(Property, ClassifyingSeriesMultiplicative)
{
    const std::vector<std::string> pool{"1", "A1", "A2", "B2", "G2", "T1", "T2", "C3", "D4"};
    for (const auto& a : pool)
        for (const auto& b : pool) {
            const auto ga = parse_group(a), gb = parse_group(b);
            EXPECT_TRUE(classifying_series(ga * gb).structurally_equal(classifying_series(ga) *
                                                                      classifying_series(gb)));
        }
}

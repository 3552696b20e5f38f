#include <gtest/gtest.h>

#include "cohomone/oddcase.hpp"
#include "support/generators.hpp"

using namespace cohomone;

namespace {

GroupDiagram diag(const char* g, const char* km, const char* kp, const char* h)
{
    return GroupDiagram::interval(parse_group(g), parse_group(km), parse_group(kp), parse_group(h));
}

ErrorKind kind_of(const std::function<void()>& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "no error";
    return ErrorKind::Unsupported;
}

const GroupDiagram n7g = diag("A2", "A1+T1", "A1+T1", "T2");
const GroupDiagram n7i = diag("C2", "C1xC1", "C1xC1", "C1+T1");

} // namespace

TEST(OddCase, N7G)
{
    EXPECT_EQ(principal_euler(n7g), 6);
    EXPECT_EQ(dim_from_weyl(n7g, 2), 6);
    EXPECT_FALSE(rational_sphere_predicate(n7g, 2));
    EXPECT_TRUE(rational_sphere_predicate(n7g, 6));
    EXPECT_TRUE(normalizer_consistency(n7g, 2, 6));
    const auto r = analyze_odd_case(n7g, Integer(2), Integer(6));
    EXPECT_EQ(r.chi_gh, 6);
    EXPECT_EQ(r.dim_cohomology, Integer(6));
    EXPECT_EQ(r.rational_sphere, false);
    EXPECT_EQ(r.normalizer_consistent, true);
    EXPECT_TRUE(r.warnings.empty());
}

TEST(OddCase, N7I)
{
    EXPECT_EQ(principal_euler(n7i), 4);
    EXPECT_EQ(dim_from_weyl(n7i, 2), 4);
    EXPECT_EQ(weyl_from_dim(n7i, 4).value, 2);
    EXPECT_TRUE(weyl_from_dim(n7i, 4).warnings.empty());
    EXPECT_TRUE(normalizer_consistency(n7i, 2, 2));
}

TEST(OddCase, RationalSphereForcesNormalizer)
{
    // |W| = chi(G/H) makes W all of N(H)/H.
    EXPECT_TRUE(normalizer_consistency(n7g, 6, 6));
    EXPECT_FALSE(normalizer_consistency(n7g, 6, 12));
}

TEST(OddCase, Inconsistencies)
{
    EXPECT_EQ(kind_of([] { dim_from_weyl(n7g, 5); }), ErrorKind::Inconsistent);
    EXPECT_EQ(kind_of([] { dim_from_weyl(n7g, 0); }), ErrorKind::Inconsistent);
    EXPECT_EQ(kind_of([] { weyl_from_dim(n7g, 5); }), ErrorKind::Inconsistent);
    EXPECT_EQ(kind_of([] { normalizer_consistency(n7g, 4, 2); }), ErrorKind::Inconsistent);
    EXPECT_EQ(kind_of([] { normalizer_consistency(n7g, 4, 6); }), ErrorKind::Inconsistent);
    EXPECT_EQ(kind_of([] { analyze_odd_case(n7g, Integer(5), std::nullopt); }), ErrorKind::Inconsistent);
}

TEST(OddCase, Hypotheses)
{
    const auto so5 = diag("B2", "D2", "B1+T1", "B1");
    EXPECT_EQ(kind_of([&] { principal_euler(so5); }), ErrorKind::Hypothesis);
    const auto circle = GroupDiagram::circle(parse_group("T1"), parse_group("T1"));
    EXPECT_EQ(kind_of([&] { principal_euler(circle); }), ErrorKind::WrongOrbitSpace);
    EXPECT_EQ(kind_of([] { principal_euler(diag("A2", "A2", "A2", "1")); }), ErrorKind::Validation);
}

TEST(OddCase, Warnings)
{
    const auto w = weyl_from_dim(n7g, 12);
    EXPECT_EQ(w.value, 1);
    EXPECT_EQ(w.warnings.size(), 1u);
    const auto r = analyze_odd_case(n7g, Integer(1), std::nullopt);
    EXPECT_EQ(r.dim_cohomology, Integer(12));
    EXPECT_EQ(r.warnings.size(), 1u);
    const auto n = analyze_odd_case(n7g, std::nullopt, Integer(6));
    EXPECT_FALSE(n.dim_cohomology);
    EXPECT_EQ(n.warnings.size(), 1u);
}

TEST(Property, WeylAndDimensionAreInverse)
{
    std::mt19937 rng(31);
    int checked = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const auto d = gen::random_valid_diagram(rng, true);
        const Integer chi = principal_euler(d);
        const Integer twice = 2 * chi;
        for (Integer w = 1; w <= twice && w <= 64; ++w) {
            if (!mpz_divisible_p(twice.get_mpz_t(), w.get_mpz_t())) {
                EXPECT_EQ(kind_of([&] { dim_from_weyl(d, w); }), ErrorKind::Inconsistent);
                continue;
            }
            const Integer dim = dim_from_weyl(d, w);
            EXPECT_EQ(weyl_from_dim(d, dim).value, w);
            EXPECT_EQ(dim * w, twice);
            EXPECT_EQ(rational_sphere_predicate(d, w), dim == 2);
            ++checked;
        }
    }
    EXPECT_GT(checked, 200);
}

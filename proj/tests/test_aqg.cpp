#include <gtest/gtest.h>

#include "support.hpp"

using namespace mha;

TEST(Integrals, FunctionAlgebraSumsValues)
{
    AqgPtr g = make_aqg(function_algebra(cyclic_group(2)));
    EXPECT_EQ(g->phi(Key{0}), Scalar(1));
    EXPECT_EQ(g->phi(Key{1}), Scalar(1));
    Report rep = verify_integral(*g);
    EXPECT_TRUE(rep.ok()) << rep.failures();
    EXPECT_EQ(rep.find("left uniqueness")->detail, "dim 1");
}

TEST(Integrals, GroupAlgebraEvaluatesAtIdentity)
{
    AqgPtr g = make_aqg(group_algebra(cyclic_group(2)));
    EXPECT_EQ(g->phi(Key{0}), Scalar(1));
    EXPECT_EQ(g->phi(Key{1}), Scalar(0));
    EXPECT_TRUE(verify_integral(*g).ok());
}

TEST(Integrals, PointEvaluationIsNotInvariant)
{
    MhaPtr h = function_algebra(cyclic_group(2));
    auto g = std::make_shared<AlgebraicQuantumGroup>(*make_aqg(h));
    g->phi = [](const Key& k) { return Scalar(k == Key{0} ? 1 : 0); };
    EXPECT_FALSE(left_invariant_at(*h, g->phi, Key{0}, Key{1}));
    Report rep = verify_integral(*g);
    EXPECT_EQ(rep.find("left invariance")->status, Status::Fail);
}

TEST(Integrals, FunctionAlgebraOnIntegersUsesOracle)
{
    AqgPtr g = make_aqg(function_algebra(integer_group()));
    Report rep = verify_integral(*g, 4);
    EXPECT_TRUE(rep.ok()) << rep.failures();
    EXPECT_EQ(rep.find("left invariance")->status, Status::SampledPass);
}

TEST(Integrals, GroupAlgebraOnIntegersIsCompact)
{
    MhaPtr h = group_algebra(integer_group());
    Report rep = verify_integral(*make_aqg(h), 4);
    EXPECT_TRUE(rep.ok()) << rep.failures();
    EXPECT_EQ(rep.find("left invariance")->status, Status::SampledPass);
    EXPECT_EQ(classify_type(*h), QuantumType::Compact);
    EXPECT_FALSE(find_cointegral(*h, CointegralSide::Left).has_value());
}

TEST(Integrals, UnknownInfiniteIntegralIsUndecidable)
{
    auto h = std::make_shared<RegularMHA>(*function_algebra(integer_group()));
    h->left_integral_oracle = nullptr;
    EXPECT_THROW(classify_type(*h), Error);
}

TEST(Cointegrals, DiscreteAndCompactTypes)
{
    auto kz2 = function_algebra(cyclic_group(2));
    auto h = find_cointegral(*kz2, CointegralSide::Left);
    ASSERT_TRUE(h);
    EXPECT_EQ(*h, kz2->e(Key{0}));
    auto cs3 = group_algebra(symmetric_group3());
    auto hs = find_cointegral(*cs3, CointegralSide::Right);
    ASSERT_TRUE(hs);
    Element sum(cs3->dom());
    for (int p = 0; p < 6; ++p) sum.add_term(Key{p}, Scalar(1));
    EXPECT_EQ(*hs, sum);
    EXPECT_EQ(classify_type(*cs3), QuantumType::Both);
    EXPECT_EQ(classify_type(*function_algebra(integer_group())), QuantumType::Discrete);
}

TEST(Modular, GroupAlgebrasAreTracial)
{
    AqgPtr g = make_aqg(group_algebra(symmetric_group3()));
    auto sigma = compute_modular_automorphism(*g);
    for (int p = 0; p < 6; ++p) EXPECT_EQ(sigma(Key{p}), g->base->e(Key{p}));
    EXPECT_TRUE(verify_modular_automorphism(*g, sigma).ok());
}

TEST(Dual, DimensionsAndAxioms)
{
    for (const auto& h : {group_algebra(cyclic_group(3)), function_algebra(symmetric_group3())}) {
        AqgPtr d = finite_dual(make_aqg(h));
        EXPECT_EQ(d->base->alg->dim(), h->alg->dim());
        Report rep = verify_mha_axioms(*d->base);
        EXPECT_TRUE(rep.ok()) << rep.failures();
    }
}

TEST(Dual, DualOfGroupAlgebraIsFunctionAlgebra)
{
    // The dual of CS3 is commutative: it is K(S3).
    AqgPtr d = finite_dual(make_aqg(group_algebra(symmetric_group3())));
    auto m = match_by_permutation(*d->base, *function_algebra(symmetric_group3()));
    EXPECT_TRUE(m.has_value());
}

TEST(Dual, DoubleDualMatchesOriginal)
{
    for (const auto& h : {group_algebra(cyclic_group(2)), function_algebra(cyclic_group(2))}) {
        AqgPtr g = make_aqg(h);
        AqgPtr dd = finite_dual(finite_dual(g));
        Report rep = check_mha_isomorphism(*h, *dd->base, canonical_double_dual_map(dd));
        EXPECT_TRUE(rep.ok()) << rep.failures();
    }
}

TEST(Dual, InfiniteInstanceRejected)
{
    EXPECT_THROW(finite_dual(make_aqg(function_algebra(integer_group()))), Error);
}

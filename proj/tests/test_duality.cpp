#include <gtest/gtest.h>

#include "support.hpp"

using namespace mha;

TEST(Duality, TrivialActionOnScalars)
{
    DualityResult d = duality_theorem(trivial_action(group_algebra(cyclic_group(2)), complex_numbers()->alg));
    EXPECT_TRUE(d.certificate.ok()) << d.certificate.failures();
    EXPECT_EQ(d.bismash->alg->dim(), 4u);
    EXPECT_EQ(d.matrices->name, "M(2,C[Z1])");
}

TEST(Duality, TranslationOnFunctions)
{
    DualityResult d = duality_theorem(translation_action(cyclic_group(2)));
    EXPECT_TRUE(d.certificate.ok()) << d.certificate.failures();
    EXPECT_EQ(d.bismash->alg->dim(), 8u);
    Report fp = fixed_point_theorem_check(d.smash, d.pair);
    EXPECT_TRUE(fp.ok()) << fp.failures();
}

TEST(Duality, AgreesWithRankOne)
{
    AqgPtr g = make_aqg(group_algebra(cyclic_group(3)));
    DualityResult d = duality_theorem(trivial_action(g->base, complex_numbers()->alg));
    RankOneRealization ro = rank_one_realization(g);
    Report rep = compare_with_rank_one(d, ro);
    EXPECT_TRUE(rep.ok()) << rep.failures();
}

TEST(Duality, InfiniteRejected)
{
    EXPECT_THROW(duality_theorem(translation_action(integer_group())), Error);
}

TEST(Coaction, DeltaCoactionInducesPairingAction)
{
    PairPtr p = canonical_pair(cyclic_group(2));
    CoactionPtr c = delta_coaction(p->B);
    EXPECT_TRUE(verify_coaction(*c).ok());
    ActionPtr s = coaction_to_action(c, p);
    for (const auto& a : *p->A->alg->basis)
        for (const auto& b : *p->B->alg->basis) EXPECT_EQ(s->act(a, b), act_AonB(*p, a, p->B->e(b)));
}

TEST(Coaction, TrivialCoactionGivesTrivialAction)
{
    PairPtr p = canonical_pair(cyclic_group(3));
    AlgebraPtr R = group_algebra(cyclic_group(2))->alg;
    CoactionPtr c = trivial_coaction(R, p->B);
    EXPECT_TRUE(verify_coaction(*c).ok());
    ActionPtr s = coaction_to_action(c, p);
    for (const auto& a : *p->A->alg->basis)
        for (const auto& x : *R->basis) EXPECT_EQ(s->act(a, x), p->A->counit(a) * R->e(x));
}

TEST(Coaction, DualityForCanonicalPair)
{
    CoactionDuality cd = coaction_duality_check(canonical_pair(cyclic_group(2)));
    EXPECT_TRUE(cd.certificate.ok()) << cd.certificate.failures();
}

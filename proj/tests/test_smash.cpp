#include <gtest/gtest.h>

#include "support.hpp"

using namespace mha;

namespace {

// Smash keys (x, q) against the oracle's "x at q" index x*|G| + q.
std::function<Key(int)> smash_key(int n)
{
    return [n](int i) { return Key{i / n, i % n}; };
}

}  // namespace

TEST(Smash, TranslationMatchesTwistedConvolution)
{
    for (int n : {2, 3}) {
        auto O = oracle::cyclic(n);
        SmashPtr sm = smash(translation_action(cyclic_group(n)));
        auto oracle_alg = oracle::twisted_convolution(O, oracle::function_algebra(O), oracle::translation(O));
        EXPECT_TRUE(testing_support::matches_dense(*sm->alg, oracle_alg, smash_key(n)));
        EXPECT_TRUE(sm->certificate.ok()) << sm->certificate.failures();
    }
}

TEST(Smash, AdjointMatchesTwistedConvolution)
{
    auto O = oracle::s3();
    SmashPtr sm = smash(adjoint_action(group_algebra(symmetric_group3())));
    auto oracle_alg = oracle::twisted_convolution(O, oracle::group_algebra(O), oracle::conjugation(O));
    EXPECT_TRUE(testing_support::matches_dense(*sm->alg, oracle_alg, smash_key(6)));
}

TEST(Smash, CertificateIsExhaustiveWhenSmall)
{
    SmashPtr sm = smash(grading_action(cyclic_group(3)));
    const Check* c = sm->certificate.find("associativity");
    ASSERT_NE(c, nullptr);
    EXPECT_EQ(c->status, Status::Pass);
    EXPECT_EQ(c->detail, "729 cases");
}

TEST(Smash, InfiniteIsSampled)
{
    SmashPtr sm = smash(translation_action(integer_group()));
    EXPECT_EQ(sm->certificate.find("associativity")->status, Status::SampledPass);
    EXPECT_TRUE(sm->certificate.ok());
}

TEST(Smash, BadActionRejected)
{
    MhaPtr h = group_algebra(cyclic_group(2));
    // λ_1 acts by doubling: not an action
    ActionPtr bad = make_action("double", h, h->alg, [h](const Key& a, const Key& x) {
        return a == Key{0} ? h->e(x) : Scalar(2) * h->e(x);
    });
    try {
        smash(bad);
        FAIL() << "expected UnverifiedAction";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::UnverifiedAction);
    }
}

TEST(Pi, RelationsAndSpans)
{
    SmashPtr sm = smash(translation_action(cyclic_group(3)));
    Report rep = verify_pi_relations(sm);
    EXPECT_TRUE(rep.ok()) << rep.failures();
    EXPECT_EQ(rep.find("span pi_R(R) pi_A(A)")->detail, "9/9");
}

TEST(Pi, NonUnitalSmashOverIntegers)
{
    SmashPtr sm = smash(translation_action(integer_group()));
    Report rep = verify_pi_relations(sm);
    EXPECT_TRUE(rep.ok()) << rep.failures();
}

TEST(Universal, IdentityMapsRecoverSmash)
{
    SmashPtr sm = smash(translation_action(cyclic_group(2)));
    AlgebraPtr B = sm->alg;
    MultiplierMap rR = [sm](const Key& x) { return pi_R(sm, sm->s->R->e(x)); };
    MultiplierMap rA = [sm](const Key& a) { return pi_A(sm, sm->s->A->e(a)); };
    UniversalMap u = universal_map(sm, B, rR, rA);
    EXPECT_TRUE(u.certificate.ok()) << u.certificate.failures();
    for (const auto& k : *B->basis) EXPECT_TRUE(multiplier_equal(*B, u.map(k), as_multiplier(B, B->e(k)), *B->basis));
}

TEST(Inner, TrivializationOfAdjointZ3)
{
    MhaPtr h = group_algebra(cyclic_group(3));
    SmashPtr sm = smash(adjoint_action(h));
    SmashIso iso = inner_trivialization(sm, identity_embedding(h));
    EXPECT_TRUE(iso.certificate.ok()) << iso.certificate.failures();
}

TEST(Inner, WrongGammaRejected)
{
    SmashPtr sm = smash(translation_action(cyclic_group(2)));
    EXPECT_THROW(inner_trivialization(sm, counit_embedding(sm->s->A)), Error);
}

TEST(Cocycle, TrivialVersusAdjointOnS3)
{
    MhaPtr h = group_algebra(symmetric_group3());
    SmashPtr triv = smash(trivial_action(h, h->alg));
    SmashPtr adj = smash(adjoint_action(h));
    SmashIso iso = cocycle_isomorphism(triv, adj, CocycleData{identity_embedding(h)});
    EXPECT_TRUE(iso.certificate.ok()) << iso.certificate.failures();
}

TEST(Covariant, RoundTripThroughSmashModules)
{
    ActionPtr s = translation_action(cyclic_group(2));
    SmashPtr sm = smash(s);
    CovariantModule c = regular_covariant(s);
    EXPECT_TRUE(verify_covariant(c).ok());
    AlgModulePtr m = covariant_to_module(sm, c);
    EXPECT_TRUE(verify_alg_module(*m).ok());
    CovariantModule back = module_to_covariant(sm, m);
    for (const auto& x : *s->R->basis)
        for (const auto& v : *c.V->basis) EXPECT_EQ(act_R(back, s->R->e(x), c.V->e(v)), act_R(c, s->R->e(x), c.V->e(v)));
    for (const auto& a : *s->A->alg->basis)
        for (const auto& v : *c.V->basis) EXPECT_EQ(act_A(back, s->A->e(a), c.V->e(v)), act_A(c, s->A->e(a), c.V->e(v)));
}

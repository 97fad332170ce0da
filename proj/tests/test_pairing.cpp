#include <gtest/gtest.h>

#include "support.hpp"

using namespace mha;

TEST(Pairing, CanonicalPairsSatisfyAxioms)
{
    for (const auto& G : {cyclic_group(2), cyclic_group(3)}) {
        PairPtr p = canonical_pair(G);
        Report rep = verify_pairing(p);
        EXPECT_TRUE(rep.ok()) << rep.failures();
        for (const auto& c : rep.checks) EXPECT_EQ(c.status, Status::Pass) << c.name;
    }
}

TEST(Pairing, IntegersSampled)
{
    Report rep = verify_pairing(canonical_pair(integer_group()), 3);
    EXPECT_TRUE(rep.ok()) << rep.failures();
    EXPECT_EQ(rep.find("<a', a>b> = <a'a, b>")->status, Status::SampledPass);
}

TEST(Pairing, ActionsOnBasis)
{
    // λ_q ▷ δ_p = δ_{pq⁻¹} and δ_p ▷ λ_q = [p=q] λ_q
    auto O = oracle::s3();
    PairPtr p = canonical_pair(symmetric_group3());
    for (int q = 0; q < 6; ++q)
        for (int r = 0; r < 6; ++r) {
            EXPECT_EQ(act_AonB(*p, Key{q}, p->B->e(Key{r})), p->B->e(Key{O.mul[r][O.inv[q]]}));
            EXPECT_EQ(act_BonA(*p, Key{r}, p->A->e(Key{q})), q == r ? p->A->e(Key{q}) : Element(p->A->dom()));
        }
}

TEST(Pairing, DegeneratePairRejected)
{
    MhaPtr A = group_algebra(cyclic_group(2)), B = function_algebra(cyclic_group(2));
    try {
        make_dual_pair("bad", A, B, [](const Key&, const Key&) { return Scalar(1); });
        FAIL() << "expected Singular";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::Singular);
    }
}

TEST(Heisenberg, CommutationAndOrderIsomorphisms)
{
    PairPtr p = canonical_pair(cyclic_group(3));
    Report rep = heisenberg_check(p);
    EXPECT_TRUE(rep.ok()) << rep.failures();
    SmashPtr ba = pairing_smash(p, PairOrder::BA);
    SmashPtr ab = pairing_smash(p, PairOrder::AB);
    EXPECT_TRUE(cross_check_pairing_smash(p, ba, PairOrder::BA).ok());
    EXPECT_TRUE(anti_isomorphism(p, ba, ab).certificate.ok());
    EXPECT_TRUE(smash_order_isomorphism(p, ba, ab).certificate.ok());
}

TEST(Heisenberg, FaithfulStandardRepresentation)
{
    PairPtr p = canonical_pair(cyclic_group(3));
    SmashPtr ba = pairing_smash(p, PairOrder::BA);
    AlgModulePtr m = standard_module(p, ba);
    EXPECT_TRUE(verify_alg_module(*m).ok());
    EXPECT_EQ(representation_rank(*m), 9);
}

TEST(FixedPoints, OnlyScalarsInPairing)
{
    EXPECT_EQ(pairing_fixed_points(canonical_pair(cyclic_group(3))).dim(), 1);
}

TEST(RankOne, MatrixUnitsRecovered)
{
    for (int n : {2, 3}) {
        RankOneRealization ro = rank_one_realization(make_aqg(group_algebra(cyclic_group(n))));
        EXPECT_TRUE(ro.certificate.ok()) << ro.certificate.failures();
        EXPECT_EQ(ro.image_dim, n * n);
        EXPECT_TRUE(testing_support::matches_dense(*ro.matrices, oracle::matrix_units(n),
                                                   [n](int i) { return Key{i / n, i % n, 0}; }));
    }
}

TEST(AqgPair, DualPairingOfFunctionAlgebra)
{
    AqgPtr g = make_aqg(function_algebra(cyclic_group(3)));
    PairPtr p = aqg_pair(g, finite_dual(g));
    EXPECT_TRUE(verify_pairing(p).ok());
    EXPECT_THROW(aqg_pair(g, finite_dual(make_aqg(group_algebra(cyclic_group(3))))), Error);
}

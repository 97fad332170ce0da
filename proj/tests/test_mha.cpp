#include <gtest/gtest.h>

#include "support.hpp"

using namespace mha;
using testing_support::k1;

namespace {

void expect_all_exact(const Report& rep)
{
    for (const auto& c : rep.checks) EXPECT_EQ(c.status, Status::Pass) << c.name << " " << c.witness.dump();
}

}  // namespace

TEST(Instances, ProductsMatchBruteForceTables)
{
    for (auto [G, O] : {std::pair{cyclic_group(2), oracle::cyclic(2)}, std::pair{cyclic_group(3), oracle::cyclic(3)},
                        std::pair{symmetric_group3(), oracle::s3()}}) {
        EXPECT_TRUE(testing_support::matches_dense(*group_algebra(G)->alg, oracle::group_algebra(O), k1)) << G->name;
        EXPECT_TRUE(testing_support::matches_dense(*function_algebra(G)->alg, oracle::function_algebra(O), k1)) << G->name;
    }
}

TEST(Instances, CoproductsOnBasis)
{
    auto O = oracle::s3();
    MhaPtr cg = group_algebra(symmetric_group3());
    MhaPtr kg = function_algebra(symmetric_group3());
    for (int p = 0; p < 6; ++p) {
        Tensor expect(cg->dom(), 2);
        expect.add_term({Key{p}, Key{p}}, Scalar(1));
        EXPECT_EQ(full_coproduct(*cg, cg->e(Key{p})), expect);
        Tensor fexpect(kg->dom(), 2);
        for (int q = 0; q < 6; ++q)
            for (int r = 0; r < 6; ++r)
                if (O.mul[q][r] == p) fexpect.add_term({Key{q}, Key{r}}, Scalar(1));
        EXPECT_EQ(full_coproduct(*kg, kg->e(Key{p})), fexpect);
        EXPECT_EQ(antipode(*cg, cg->e(Key{p})), cg->e(Key{O.inv[p]}));
    }
}

TEST(Axioms, FiniteInstancesExact)
{
    for (const auto& h : {function_algebra(cyclic_group(2)), group_algebra(cyclic_group(2)),
                          group_algebra(symmetric_group3()), function_algebra(symmetric_group3())})
        expect_all_exact(verify_mha_axioms(*h));
}

TEST(Axioms, InfiniteInstancesSampled)
{
    for (const auto& h : {function_algebra(integer_group()), group_algebra(integer_group())}) {
        Report rep = verify_mha_axioms(*h, 5);
        EXPECT_TRUE(rep.ok()) << rep.failures();
        for (const auto& c : rep.checks) EXPECT_EQ(c.status, Status::SampledPass) << c.name;
    }
}

TEST(Axioms, ZeroAntipodeFailsAntipodeLaws)
{
    auto bad = std::make_shared<RegularMHA>(*group_algebra(cyclic_group(2)));
    DomainId d = bad->dom();
    bad->antipode = [d](const Key&) { return Element(d); };
    Report rep = verify_mha_axioms(*bad);
    EXPECT_FALSE(rep.ok());
    const Check* c = rep.find("antipode laws");
    ASSERT_NE(c, nullptr);
    EXPECT_EQ(c->status, Status::Fail);
    EXPECT_EQ(c->witness.dump(), R"({"a":[0],"b":[0]})");
    EXPECT_TRUE(rep.passed("coassociativity")) << rep.failures();
}

TEST(Covers, CoveredCounitRecoversProduct)
{
    for (const auto& h : {function_algebra(symmetric_group3()), group_algebra(symmetric_group3())}) {
        const auto& B = *h->alg->basis;
        for (const auto& a : B)
            for (const auto& b : B) {
                Element lhs = counit_leg(*h, h->t1(a, b), 0);
                EXPECT_EQ(lhs, h->alg->product(a, b));
            }
    }
}

TEST(Covers, CoppositeReproducesT3)
{
    MhaPtr h = function_algebra(symmetric_group3());
    MhaPtr c = coopposite(h);
    const auto& B = *h->alg->basis;
    for (const auto& a : B)
        for (const auto& b : B) EXPECT_EQ(c->t1(a, b).flip(0, 1), h->t3(a, b));
    expect_all_exact(verify_mha_axioms(*c));
}

TEST(LocalUnits, FunctionAlgebraOnIntegers)
{
    MhaPtr h = function_algebra(integer_group());
    Element d3 = h->e(Key{3}), dm1 = h->e(Key{-1});
    Element e = find_local_units(*h, {d3, dm1}, Side::Left);
    EXPECT_EQ(e, d3 + dm1);
    Element solved = find_local_units(*h, {d3, dm1}, Side::Left, 3, false);
    EXPECT_TRUE(is_local_unit(*h->alg, solved, {d3, dm1}, Side::Left));
}

TEST(LocalUnits, UnitalInstancesReturnIdentity)
{
    MhaPtr cz2 = group_algebra(cyclic_group(2));
    EXPECT_EQ(find_local_units(*cz2, {cz2->e(Key{1})}, Side::Left), cz2->e(Key{0}));
    MhaPtr kz2 = function_algebra(cyclic_group(2));
    Element one = kz2->e(Key{0}) + kz2->e(Key{1});
    EXPECT_EQ(find_local_units(*kz2, {one}, Side::TwoSided), one);
}

TEST(LocalUnits, TwoSidedNeedsQuantumGroup)
{
    auto h = std::make_shared<RegularMHA>(*function_algebra(integer_group()));
    h->quantum_group = false;
    EXPECT_THROW(find_local_units(*h, {h->e(Key{0})}, Side::TwoSided), Error);
}

TEST(Sweedler, StrategiesAgreeOnRandomExpressions)
{
    std::mt19937_64 rng(7);
    for (const auto& h : {function_algebra(cyclic_group(2)), group_algebra(cyclic_group(2)),
                          group_algebra(symmetric_group3()), function_algebra(integer_group())})
        for (int i = 0; i < 30; ++i) {
            SweedlerExpr e = testing_support::random_expression(*h, rng);
            EXPECT_EQ(sweedler_eval(*h, e, Strategy::LeftFirst), sweedler_eval(*h, e, Strategy::RightFirst)) << h->name;
        }
}

TEST(Sweedler, TwoUncoveredLegsRejected)
{
    MhaPtr h = function_algebra(integer_group());
    SweedlerExpr e{h->e(Key{0}), {leg(), leg()}};
    try {
        sweedler_eval(*h, e);
        FAIL() << "expected UncoveredLeg";
    } catch (const Error& err) {
        EXPECT_EQ(err.kind(), ErrorKind::UncoveredLeg);
    }
}

TEST(Sweedler, AntipodeIdentityCovered)
{
    // m(S⊗ι)(Δ(a)(1⊗b)) = ε(a)b
    MhaPtr h = group_algebra(symmetric_group3());
    for (const auto& a : *h->alg->basis)
        for (const auto& b : *h->alg->basis) {
            Tensor t = sweedler_eval(*h, SweedlerExpr{h->e(a), {leg(LegMap::S), leg(LegMap::Id, std::nullopt, h->e(b))}});
            EXPECT_EQ(multiply_legs(*h->alg, t), h->counit(a) * h->e(b));
        }
}

TEST(TensorInstances, AxiomsHold)
{
    MhaPtr t = tensor_mha(function_algebra(cyclic_group(2)), group_algebra(cyclic_group(2)));
    EXPECT_EQ(t->alg->dim(), 4u);
    expect_all_exact(verify_mha_axioms(*t));
}

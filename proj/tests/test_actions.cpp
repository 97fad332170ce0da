#include <gtest/gtest.h>

#include "support.hpp"

using namespace mha;

TEST(Actions, BuiltinsAreModuleAlgebras)
{
    for (const auto& s : {adjoint_action(group_algebra(symmetric_group3())), translation_action(cyclic_group(3)),
                          grading_action(cyclic_group(3)), trivial_action(group_algebra(cyclic_group(2)), complex_numbers()->alg)}) {
        Report rep = verify_module(*s, module_sample(*s, 3));
        rep.merge(verify_module_algebra(*s, 3));
        EXPECT_TRUE(rep.ok()) << s->name << "\n" << rep.failures();
    }
}

TEST(Actions, InfiniteActionsSampled)
{
    for (const auto& s : {translation_action(integer_group()), grading_action(integer_group())}) {
        Report rep = verify_module_algebra(*s, 3);
        EXPECT_TRUE(rep.ok()) << rep.failures();
        EXPECT_EQ(rep.find("module algebra law")->status, Status::SampledPass);
    }
}

TEST(Actions, AdjointConjugates)
{
    auto O = oracle::s3();
    ActionPtr s = adjoint_action(group_algebra(symmetric_group3()));
    for (int q = 0; q < 6; ++q)
        for (int p = 0; p < 6; ++p) EXPECT_EQ(s->act(Key{q}, Key{p}), s->R->e(Key{O.mul[O.mul[q][p]][O.inv[q]]}));
}

TEST(FixedPoints, ClassFunctionsOfS3)
{
    ActionPtr s = adjoint_action(group_algebra(symmetric_group3()));
    int classes = oracle::conjugacy_classes(oracle::s3());
    EXPECT_EQ(classes, 3);
    FixedPoints in_r = fixed_points(s, FixedWhere::InR);
    FixedPoints in_m = fixed_points(s, FixedWhere::InMR);
    EXPECT_EQ(in_r.dim(), classes);
    EXPECT_EQ(in_m.dim(), classes);
    EXPECT_TRUE(in_m.certificate.ok());
    // closed under products
    std::vector<Element> span = in_r.elements;
    for (const auto& x : in_r.elements)
        for (const auto& y : in_r.elements) EXPECT_TRUE(span_contains(span, {mul(*s->R, x, y)}));
}

TEST(FixedPoints, TranslationFixesConstants)
{
    FixedPoints fp = fixed_points(translation_action(cyclic_group(2)), FixedWhere::InR);
    ASSERT_EQ(fp.dim(), 1);
    EXPECT_EQ(fp.elements[0].coeff(Key{0}), fp.elements[0].coeff(Key{1}));
}

TEST(FixedPoints, MultiplierExtensionAgreesOnR)
{
    ActionPtr s = adjoint_action(group_algebra(symmetric_group3()));
    for (const auto& a : *s->A->alg->basis)
        for (const auto& x : *s->R->basis) {
            Multiplier m = extend_action_to_multipliers(s, s->A->e(a), as_multiplier(s->R, s->R->e(x)));
            EXPECT_TRUE(multiplier_equal(*s->R, m, as_multiplier(s->R, s->act(a, x)), *s->R->basis));
        }
}

TEST(Inner, AdjointIsInnerByIdentity)
{
    MhaPtr h = group_algebra(symmetric_group3());
    ActionPtr s = adjoint_action(h);
    EXPECT_TRUE(is_inner_witness(s, identity_embedding(h)));
    EXPECT_FALSE(is_inner_witness(s, counit_embedding(h)));
}

TEST(Inner, NonHomomorphismRejected)
{
    MhaPtr h = group_algebra(cyclic_group(2));
    MultiplierMap g = [h](const Key&) { return as_multiplier(h->alg, h->e(Key{1})); };
    try {
        inner_action_from(h, h->alg, g);
        FAIL() << "expected NotUnitalHomomorphism";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotUnitalHomomorphism);
    }
}

TEST(Cocycle, TrivialGammaOnEqualActions)
{
    MhaPtr h = group_algebra(cyclic_group(2));
    ActionPtr s = translation_action(cyclic_group(2));
    Report rep = verify_cocycle(CocycleData{counit_embedding(s->A)}, s, s);
    EXPECT_TRUE(rep.ok()) << rep.failures();
}

TEST(Cocycle, RequiresIdentity)
{
    MhaPtr k = function_algebra(integer_group());
    ActionPtr s = trivial_action(k, complex_numbers()->alg);
    EXPECT_THROW(verify_cocycle(CocycleData{counit_embedding(k)}, s, s), Error);
}

TEST(Modules, TensorOfModulesIsAssociative)
{
    MhaPtr h = group_algebra(symmetric_group3());
    ModulePtr m = adjoint_action(h);
    ModulePtr t = tensor_module(m, m);
    Report rep = verify_module(*t, module_sample(*t, 2));
    EXPECT_TRUE(rep.ok()) << rep.failures();
    ModulePtr tt = tensor_module(t, m);
    EXPECT_TRUE(verify_module(*tt, module_sample(*tt, 2)).ok());
}

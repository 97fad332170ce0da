#include <gtest/gtest.h>

#include "support.hpp"

using namespace mha;

TEST(Scalar, GaussianRationalArithmetic)
{
    Scalar i = Scalar::imag_unit();
    EXPECT_EQ(i * i, Scalar(-1));
    Scalar z(mpq_class(1, 2), mpq_class(3, 4));
    EXPECT_EQ(z * z.inverse(), Scalar(1));
    EXPECT_EQ(z / z, Scalar(1));
    EXPECT_EQ(z.conj() + z, Scalar(1));
    EXPECT_TRUE((z - z).is_zero());
    EXPECT_EQ(Scalar::frac(2, 4), Scalar(mpq_class(1, 2)));
}

TEST(Key, LexicographicOrderAndSlices)
{
    Key a{1, 2}, b{1, 3}, c{2};
    EXPECT_LT(a, b);
    EXPECT_LT(b, c);
    Key ab = concat(a, c);
    EXPECT_EQ(ab.size(), 3);
    EXPECT_EQ(ab.slice(0, 2), a);
    EXPECT_EQ(ab.slice(2, 1), c);
}

TEST(Element, SparseTermsCancel)
{
    DomainId d = intern_domain("test-space");
    Element x = Element::basis(d, Key{1}, Scalar(2)) + Element::basis(d, Key{-4}, Scalar(1));
    Element y = x - Element::basis(d, Key{1}, Scalar(2));
    EXPECT_EQ(y.size(), 1u);
    EXPECT_EQ(y.coeff(Key{-4}), Scalar(1));
    EXPECT_TRUE((x - x).is_zero());
}

TEST(Element, JsonRoundTrip)
{
    DomainId d = intern_domain("test-json");
    Element x(d);
    x.add_term(Key{0, 1}, Scalar(mpq_class(-2, 3), mpq_class(5, 7)));
    x.add_term(Key{3}, Scalar(1));
    EXPECT_EQ(element_from_json(to_json(x), d), x);
    EXPECT_EQ(to_json(x).dump(), "[[[0,1],-2,3,5,7],[[3],1,1,0,1]]");
}

TEST(Tensor, FlipAndFlatten)
{
    DomainId d = intern_domain("test-tensor");
    Tensor t = Tensor::outer(Element::basis(d, Key{1}), Element::basis(d, Key{2}));
    Tensor f = t.flip(0, 1);
    EXPECT_EQ(f, Tensor::outer(Element::basis(d, Key{2}), Element::basis(d, Key{1})));
    EXPECT_EQ(t.flatten(d), Element::basis(d, Key{1, 2}));
}

TEST(Linalg, SolveKernelInvert)
{
    DomainId d = intern_domain("test-linalg");
    auto e = [d](int i) { return Element::basis(d, Key{i}); };
    std::vector<Element> gens{e(0) + e(1), e(1) + e(2), e(0) - e(2)};
    EXPECT_EQ(rank_of(gens), 2);
    auto ker = kernel_of(gens);
    ASSERT_EQ(ker.size(), 1u);
    Element combo = combine(ker[0], gens, d);
    EXPECT_TRUE(combo.is_zero());
    auto sol = linear_solve(gens, e(0) + Scalar(2) * e(1) + e(2));
    ASSERT_TRUE(sol);
    EXPECT_EQ(combine(*sol, gens, d), e(0) + Scalar(2) * e(1) + e(2));
    EXPECT_FALSE(linear_solve(gens, e(0)));

    Matrix m{{Scalar(2), Scalar(1)}, {Scalar(1), Scalar(1)}};
    auto mi = invert(m);
    ASSERT_TRUE(mi);
    Matrix id = m * *mi;
    EXPECT_EQ(id[0][0], Scalar(1));
    EXPECT_EQ(id[0][1], Scalar(0));
    EXPECT_FALSE(invert(Matrix{{Scalar(1), Scalar(2)}, {Scalar(2), Scalar(4)}}));
}

TEST(Multiplier, EmbeddingIsMultiplicative)
{
    MhaPtr h = function_algebra(cyclic_group(2));
    const Algebra& A = *h->alg;
    for (const auto& a : *A.basis)
        for (const auto& b : *A.basis) {
            Multiplier lhs = as_multiplier(h->alg, A.product(a, b));
            Multiplier rhs = multiplier_product(as_multiplier(h->alg, A.e(a)), as_multiplier(h->alg, A.e(b)));
            EXPECT_TRUE(multiplier_equal(A, lhs, rhs, *A.basis));
        }
}

TEST(Multiplier, AllOnesFunctionOnIntegers)
{
    MhaPtr h = function_algebra(integer_group());
    AlgebraPtr A = h->alg;
    Multiplier one{[](const Element& x) { return x; }, [](const Element& x) { return x; }};
    EXPECT_FALSE(multiplier_incompatibility(*A, one, A->sample(5)));
    Element delta3 = A->e(Key{3});
    EXPECT_EQ(one.left(delta3), delta3);
}

TEST(Multiplier, IdentityOfGroupAlgebra)
{
    MhaPtr h = group_algebra(cyclic_group(2));
    Multiplier m = as_multiplier(h->alg, h->e(Key{0}));
    EXPECT_TRUE(multiplier_equal(*h->alg, m, identity_multiplier(), *h->alg->basis));
}

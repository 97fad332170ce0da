#pragma once

#include <random>

#include "mha/all.hpp"
#include "oracles.hpp"

namespace testing_support {

using namespace mha;

// A's structure constants equal D's under basis index i ↦ key_of(i).
inline bool matches_dense(const Algebra& A, const oracle::Dense& D, const std::function<Key(int)>& key_of)
{
    if (!A.finite() || static_cast<int>(A.dim()) != D.dim) return false;
    for (int i = 0; i < D.dim; ++i)
        for (int j = 0; j < D.dim; ++j) {
            Element expect(A.dom);
            for (int k = 0; k < D.dim; ++k)
                if (D.c[i][j][k]) expect.add_term(key_of(k), Scalar(D.c[i][j][k]));
            if (A.product(key_of(i), key_of(j)) != expect) return false;
        }
    return true;
}

inline Key k1(int i) { return Key{i}; }

inline Element random_element(const Algebra& A, std::mt19937_64& rng, int r = 2)
{
    auto pool = A.sample(r);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    std::uniform_int_distribution<int> coef(-3, 3), terms(1, 3);
    Element x(A.dom);
    while (x.is_zero()) {
        int t = terms(rng);
        for (int i = 0; i < t; ++i) x.add_term(pool[pick(rng)], Scalar(coef(rng)));
    }
    return x;
}

// 2 or 3 legs with random maps; every leg but at most one gets covers.
inline SweedlerExpr random_expression(const RegularMHA& h, std::mt19937_64& rng)
{
    const Algebra& A = *h.alg;
    std::uniform_int_distribution<int> nlegs(2, 3), map(0, 2), side(0, 2), coin(0, 1);
    int n = nlegs(rng);
    int open = coin(rng) ? std::uniform_int_distribution<int>(0, n - 1)(rng) : -1;
    SweedlerExpr e{random_element(A, rng), {}};
    for (int i = 0; i < n; ++i) {
        LegMap m = static_cast<LegMap>(map(rng));
        if (i == open) {
            e.legs.push_back(leg(m));
            continue;
        }
        int s = side(rng);
        std::optional<Element> l, r;
        if (s != 1) l = random_element(A, rng);
        if (s != 0) r = random_element(A, rng);
        e.legs.push_back(leg(m, l, r));
    }
    return e;
}

}  // namespace testing_support

#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "element.hpp"
#include "linalg.hpp"

namespace mha {

// A vector space with a labelled basis.  Finite spaces list their basis;
// countable ones provide a sample generator (keys whose labels lie in
// [-r, r] or a comparable window).
struct Space {
    std::string name;
    DomainId dom = 0;
    int key_len = 1;
    std::optional<std::vector<Key>> basis;
    std::function<std::vector<Key>(int)> sampler;

    bool finite() const { return basis.has_value(); }
    std::size_t dim() const { return basis ? basis->size() : 0; }
    std::vector<Key> sample(int r) const
    {
        if (basis) return *basis;
        if (!sampler) return {};
        return sampler(r);
    }
    Element e(const Key& k, const Scalar& c = Scalar(1)) const { return Element::basis(dom, k, c); }
    Element zero() const { return Element(dom); }
};

using SpacePtr = std::shared_ptr<const Space>;
using BasisProduct = std::function<Element(const Key&, const Key&)>;
using ItemsMap = std::function<Element(const std::vector<Element>&)>;

struct Algebra : Space {
    BasisProduct product;
    std::optional<Element> identity;
    // Two-sided local unit for the given items, when the instance knows one.
    ItemsMap local_unit_oracle;

    bool unital() const { return identity.has_value(); }
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

// Wraps a basis product with a memo table.  Safe for concurrent callers.
inline BasisProduct memoize(BasisProduct f)
{
    struct Cache {
        std::mutex mu;
        std::map<std::pair<Key, Key>, Element> table;
    };
    auto cache = std::make_shared<Cache>();
    return [f = std::move(f), cache](const Key& a, const Key& b) {
        {
            std::lock_guard<std::mutex> lock(cache->mu);
            auto it = cache->table.find({a, b});
            if (it != cache->table.end()) return it->second;
        }
        Element r = f(a, b);
        std::lock_guard<std::mutex> lock(cache->mu);
        cache->table.emplace(std::make_pair(a, b), r);
        return r;
    };
}

inline Element mul(const Algebra& A, const Element& x, const Element& y)
{
    Element r(A.dom);
    for (const auto& [kx, cx] : x.terms())
        for (const auto& [ky, cy] : y.terms()) r.axpy(cx * cy, A.product(kx, ky));
    return r;
}

inline Element mul(const Algebra& A, const Element& x, const Element& y, const Element& z)
{
    return mul(A, mul(A, x, y), z);
}

// Product of the leg elements of a 2-tensor over A.
inline Element multiply_legs(const Algebra& A, const Tensor& t)
{
    Element r(A.dom);
    for (const auto& [ks, c] : t.terms()) r.axpy(c, A.product(ks[0], ks[1]));
    return r;
}

// Left or right multiplication of one leg of a tensor by u.
inline Tensor leg_mul_left(const Algebra& A, const Tensor& t, int leg, const Element& u)
{
    return t.map_leg(leg, A.dom, [&](const Key& k) { return mul(A, u, A.e(k)); });
}
inline Tensor leg_mul_right(const Algebra& A, const Tensor& t, int leg, const Element& u)
{
    return t.map_leg(leg, A.dom, [&](const Key& k) { return mul(A, A.e(k), u); });
}

using LinMap = std::function<Element(const Element&)>;

inline LinMap linear_map(DomainId out, std::function<Element(const Key&)> f)
{
    return [out, f = std::move(f)](const Element& x) { return extend_linear(x, out, f); };
}

// Element of M(A): the pair x -> m·x, x -> x·m.
struct Multiplier {
    LinMap left;
    LinMap right;
};

inline Multiplier identity_multiplier()
{
    return Multiplier{[](const Element& x) { return x; }, [](const Element& x) { return x; }};
}

inline Multiplier as_multiplier(const AlgebraPtr& A, const Element& a)
{
    return Multiplier{[A, a](const Element& x) { return mul(*A, a, x); },
                      [A, a](const Element& x) { return mul(*A, x, a); }};
}

// (m1 m2)x = m1(m2 x) and x(m1 m2) = (x m1) m2.
inline Multiplier multiplier_product(const Multiplier& m1, const Multiplier& m2)
{
    return Multiplier{[m1, m2](const Element& x) { return m1.left(m2.left(x)); },
                      [m1, m2](const Element& x) { return m2.right(m1.right(x)); }};
}

inline Multiplier multiplier_scale(const Scalar& c, const Multiplier& m)
{
    return Multiplier{[c, m](const Element& x) { return c * m.left(x); },
                      [c, m](const Element& x) { return c * m.right(x); }};
}

inline Multiplier multiplier_sum(const std::vector<std::pair<Scalar, Multiplier>>& terms)
{
    return Multiplier{[terms](const Element& x) {
                          Element r;
                          for (const auto& [c, m] : terms) r.axpy(c, m.left(x));
                          return r;
                      },
                      [terms](const Element& x) {
                          Element r;
                          for (const auto& [c, m] : terms) r.axpy(c, m.right(x));
                          return r;
                      }};
}

// Checks right(x)·y = x·left(y) on the sampled basis; returns the first
// failing pair.
inline std::optional<std::pair<Key, Key>> multiplier_incompatibility(const Algebra& A, const Multiplier& m,
                                                                     const std::vector<Key>& sample)
{
    for (const auto& x : sample)
        for (const auto& y : sample)
            if (mul(A, m.right(A.e(x)), A.e(y)) != mul(A, A.e(x), m.left(A.e(y)))) return std::make_pair(x, y);
    return std::nullopt;
}

inline bool multiplier_equal(const Algebra& A, const Multiplier& m1, const Multiplier& m2,
                             const std::vector<Key>& sample)
{
    for (const auto& x : sample) {
        Element ex = A.e(x);
        if (m1.left(ex) != m2.left(ex) || m1.right(ex) != m2.right(ex)) return false;
    }
    return true;
}

// For unital A every multiplier is multiplication by left(1).
inline Element multiplier_to_element(const Algebra& A, const Multiplier& m)
{
    if (!A.identity) throw Error(ErrorKind::NotFound, "algebra " + A.name + " has no identity");
    return m.left(*A.identity);
}

// Coordinates of a multiplier's left and right maps on a finite sample,
// stacked into one vector (for rank and span computations).
inline Element multiplier_coordinates(const Algebra& A, const Multiplier& m, const std::vector<Key>& sample,
                                      DomainId dom)
{
    Element r(dom);
    for (const auto& x : sample) {
        for (const auto& [k, c] : m.left(A.e(x)).terms()) r.add_term(concat(Key{0}, x, k), c);
        for (const auto& [k, c] : m.right(A.e(x)).terms()) r.add_term(concat(Key{1}, x, k), c);
    }
    return r;
}

// Linear functional given on basis keys.
using Functional = std::function<Scalar(const Key&)>;

inline Scalar eval(const Functional& f, const Element& x)
{
    Scalar s(0);
    for (const auto& [k, c] : x.terms()) s += c * f(k);
    return s;
}

// Flattened matrix of an operator on a finite space: key (in, out).
inline Element operator_coordinates(const Space& V, const LinMap& T, DomainId dom)
{
    Element r(dom);
    for (const auto& k : *V.basis)
        for (const auto& [o, c] : T(V.e(k)).terms()) r.add_term(concat(k, o), c);
    return r;
}

// Left and right radicals of a finite algebra are zero.
inline bool left_radical_zero(const Algebra& A)
{
    // x with x·y = 0 for all y: kernel of x -> (x·y)_y.
    DomainId d = intern_domain(A.name + "|radical");
    std::vector<Element> images;
    for (const auto& x : *A.basis) {
        Element v(d);
        for (const auto& y : *A.basis)
            for (const auto& [k, c] : A.product(x, y).terms()) v.add_term(concat(y, k), c);
        images.push_back(v);
    }
    return kernel_of(images).empty();
}

inline bool right_radical_zero(const Algebra& A)
{
    DomainId d = intern_domain(A.name + "|radical");
    std::vector<Element> images;
    for (const auto& y : *A.basis) {
        Element v(d);
        for (const auto& x : *A.basis)
            for (const auto& [k, c] : A.product(x, y).terms()) v.add_term(concat(x, k), c);
        images.push_back(v);
    }
    return kernel_of(images).empty();
}

// Space of double centralizers (L, R) of a finite algebra, as a basis of
// Multipliers.  Used when the algebra has no identity.
inline std::vector<Multiplier> multiplier_space(const AlgebraPtr& A)
{
    const auto& B = *A->basis;
    const std::size_t n = B.size();
    DomainId d = intern_domain(A->name + "|multipliers");
    // Unknown u < n*n: L maps e_j to e_k (u = j*n + k); u >= n*n: same for R.
    auto unknown_image = [&](std::size_t u) {
        bool isL = u < n * n;
        std::size_t v = isL ? u : u - n * n;
        const Key& src = B[v / n];
        const Key& dst = B[v % n];
        auto apply = [&](const Key& x) { return x == src ? A->e(dst) : A->zero(); };
        Element r(d);
        for (const auto& x : B)
            for (const auto& y : B) {
                Element xy = A->product(x, y);
                if (isL) {
                    // L(xy) - L(x)y
                    Element lhs = extend_linear(xy, A->dom, apply);
                    Element res = lhs - mul(*A, apply(x), A->e(y));
                    for (const auto& [k, c] : res.terms()) r.add_term(concat(Key{0}, concat(x, y), k), c);
                    // x L(y) part of compatibility
                    for (const auto& [k, c] : mul(*A, A->e(x), apply(y)).terms())
                        r.add_term(concat(Key{2}, concat(x, y), k), c);
                } else {
                    // R(xy) - x R(y)
                    Element lhs = extend_linear(xy, A->dom, apply);
                    Element res = lhs - mul(*A, A->e(x), apply(y));
                    for (const auto& [k, c] : res.terms()) r.add_term(concat(Key{1}, concat(x, y), k), c);
                    // - R(x) y part of compatibility
                    for (const auto& [k, c] : mul(*A, apply(x), A->e(y)).terms())
                        r.add_term(concat(Key{2}, concat(x, y), k), -c);
                }
            }
        return r;
    };
    std::vector<Element> images;
    for (std::size_t u = 0; u < 2 * n * n; ++u) images.push_back(unknown_image(u));
    std::vector<Multiplier> out;
    for (const auto& v : kernel_of(images)) {
        std::map<Key, Element> Lm, Rm;
        for (const auto& k : B) {
            Lm[k] = A->zero();
            Rm[k] = A->zero();
        }
        for (std::size_t u = 0; u < 2 * n * n; ++u) {
            if (v[u].is_zero()) continue;
            bool isL = u < n * n;
            std::size_t w = isL ? u : u - n * n;
            (isL ? Lm : Rm)[B[w / n]].add_term(B[w % n], v[u]);
        }
        DomainId dom = A->dom;
        out.push_back(Multiplier{linear_map(dom, [Lm](const Key& k) { return Lm.at(k); }),
                                 linear_map(dom, [Rm](const Key& k) { return Rm.at(k); })});
    }
    return out;
}

}  // namespace mha

#pragma once

#include <set>

#include "group.hpp"
#include "mha.hpp"

namespace mha {

namespace detail {

inline Tensor basis_pair(DomainId d, const Key& x, const Key& y)
{
    Tensor t(d, 2);
    t.add_term({x, y}, Scalar(1));
    return t;
}

inline std::function<std::vector<Key>(int)> group_sampler(const GroupPtr& G)
{
    return [G](int r) { return G->sample(r); };
}

}  // namespace detail

// K(G): finitely supported functions with pointwise product and
// (Δf)(p,q) = f(pq).
inline MhaPtr function_algebra(const GroupPtr& G)
{
    auto A = std::make_shared<Algebra>();
    A->name = "K(" + G->name + ")";
    A->dom = intern_domain(A->name);
    A->key_len = 1;
    if (G->finite()) A->basis = G->elements;
    A->sampler = detail::group_sampler(G);
    DomainId d = A->dom;
    A->product = [d](const Key& p, const Key& q) { return p == q ? Element::basis(d, p) : Element(d); };
    if (G->finite()) {
        Element one(d);
        for (const auto& p : *G->elements) one.add_term(p, Scalar(1));
        A->identity = one;
    }
    A->local_unit_oracle = [d](const std::vector<Element>& items) {
        std::set<Key> supp;
        for (const auto& x : items)
            for (const auto& [k, c] : x.terms()) supp.insert(k);
        Element e(d);
        for (const auto& k : supp) e.add_term(k, Scalar(1));
        return e;
    };

    auto h = std::make_shared<RegularMHA>();
    h->name = A->name;
    h->alg = A;
    // Δ(δ_p) = Σ_{qr=p} δ_q ⊗ δ_r
    h->t1 = [G, d](const Key& p, const Key& r) { return detail::basis_pair(d, G->mul(p, G->inv(r)), r); };
    h->t2 = [G, d](const Key& q, const Key& p) { return detail::basis_pair(d, q, G->mul(G->inv(q), p)); };
    h->t3 = [G, d](const Key& p, const Key& q) { return detail::basis_pair(d, q, G->mul(G->inv(q), p)); };
    h->t4 = [G, d](const Key& p, const Key& r) { return detail::basis_pair(d, G->mul(p, G->inv(r)), r); };
    h->t1_inv = [G, d](const Key& q, const Key& r) { return detail::basis_pair(d, G->mul(q, r), r); };
    h->t2_inv = [G, d](const Key& q, const Key& r) { return detail::basis_pair(d, q, G->mul(q, r)); };
    h->t3_inv = [G, d](const Key& q, const Key& r) { return detail::basis_pair(d, G->mul(q, r), q); };
    h->t4_inv = [G, d](const Key& q, const Key& r) { return detail::basis_pair(d, G->mul(q, r), r); };
    Key e = G->identity;
    h->counit = [e](const Key& p) { return p == e ? Scalar(1) : Scalar(0); };
    h->antipode = [G, d](const Key& p) { return Element::basis(d, G->inv(p)); };
    h->antipode_inv = h->antipode;
    h->quantum_group = true;
    h->left_integral_oracle = [](const Key&) { return Scalar(1); };
    h->left_cointegral_oracle = Element::basis(d, e);
    h->right_cointegral_oracle = Element::basis(d, e);
    h->description = json{{"builtin", h->name}};
    return h;
}

// CG: convolution algebra with group-like λ_p.
inline MhaPtr group_algebra(const GroupPtr& G)
{
    auto A = std::make_shared<Algebra>();
    A->name = "C[" + G->name + "]";
    A->dom = intern_domain(A->name);
    A->key_len = 1;
    if (G->finite()) A->basis = G->elements;
    A->sampler = detail::group_sampler(G);
    DomainId d = A->dom;
    A->product = [G, d](const Key& p, const Key& q) { return Element::basis(d, G->mul(p, q)); };
    A->identity = Element::basis(d, G->identity);

    auto h = std::make_shared<RegularMHA>();
    h->name = A->name;
    h->alg = A;
    h->t1 = [G, d](const Key& p, const Key& q) { return detail::basis_pair(d, p, G->mul(p, q)); };
    h->t2 = [G, d](const Key& q, const Key& p) { return detail::basis_pair(d, G->mul(q, p), p); };
    h->t3 = [G, d](const Key& p, const Key& q) { return detail::basis_pair(d, G->mul(p, q), p); };
    h->t4 = [G, d](const Key& p, const Key& q) { return detail::basis_pair(d, p, G->mul(q, p)); };
    h->t1_inv = [G, d](const Key& p, const Key& s) { return detail::basis_pair(d, p, G->mul(G->inv(p), s)); };
    h->t2_inv = [G, d](const Key& s, const Key& p) { return detail::basis_pair(d, G->mul(s, G->inv(p)), p); };
    h->t3_inv = [G, d](const Key& s, const Key& p) { return detail::basis_pair(d, p, G->mul(G->inv(p), s)); };
    h->t4_inv = [G, d](const Key& p, const Key& s) { return detail::basis_pair(d, p, G->mul(s, G->inv(p))); };
    h->counit = [](const Key&) { return Scalar(1); };
    h->antipode = [G, d](const Key& p) { return Element::basis(d, G->inv(p)); };
    h->antipode_inv = h->antipode;
    h->quantum_group = true;
    if (!G->finite()) {
        // φ(λ_p) = [p = e]; no cointegral exists for infinite G
        Key e = G->identity;
        h->left_integral_oracle = [e](const Key& p) { return p == e ? Scalar(1) : Scalar(0); };
        h->cointegral_absent = true;
    }
    h->description = json{{"builtin", h->name}};
    return h;
}

// The ground field as C[Z1].
inline MhaPtr complex_numbers() { return group_algebra(cyclic_group(1)); }

namespace detail {

inline Key head(const Key& k, int n) { return k.slice(0, n); }
inline Key tail(const Key& k, int n) { return k.slice(n, k.size() - n); }

// x ⊗ y on split keys.
inline Element tensor_elements(DomainId d, const Element& x, const Element& y)
{
    Element r(d);
    for (const auto& [kx, cx] : x.terms())
        for (const auto& [ky, cy] : y.terms()) r.add_term(concat(kx, ky), cx * cy);
    return r;
}

inline std::pair<Element, Element> split_support(const Algebra& R, const Algebra& A, const std::vector<Element>& items)
{
    Element r(R.dom), a(A.dom);
    for (const auto& x : items)
        for (const auto& [k, c] : x.terms()) {
            r.add_term(head(k, R.key_len), Scalar(1));
            a.add_term(tail(k, R.key_len), Scalar(1));
        }
    return {r, a};
}

inline std::optional<Element> factor_unit(const Algebra& R, const std::vector<Key>& keys)
{
    if (R.identity) return R.identity;
    if (!R.local_unit_oracle) return std::nullopt;
    std::vector<Element> items;
    for (const auto& k : keys) items.push_back(R.e(k));
    return R.local_unit_oracle(items);
}

}  // namespace detail

// R ⊗ A with the componentwise product.
inline AlgebraPtr tensor_algebra(const AlgebraPtr& R, const AlgebraPtr& A, const std::string& name = {})
{
    auto T = std::make_shared<Algebra>();
    T->name = name.empty() ? "tensor(" + R->name + "," + A->name + ")" : name;
    T->dom = intern_domain(T->name);
    T->key_len = R->key_len + A->key_len;
    if (R->finite() && A->finite()) {
        std::vector<Key> b;
        for (const auto& x : *R->basis)
            for (const auto& y : *A->basis) b.push_back(concat(x, y));
        T->basis = b;
    }
    T->sampler = [R, A](int r) {
        std::vector<Key> b;
        for (const auto& x : R->sample(r))
            for (const auto& y : A->sample(r)) b.push_back(concat(x, y));
        return b;
    };
    DomainId d = T->dom;
    int n = R->key_len;
    T->product = memoize([R, A, d, n](const Key& u, const Key& v) {
        return detail::tensor_elements(d, R->product(detail::head(u, n), detail::head(v, n)),
                                       A->product(detail::tail(u, n), detail::tail(v, n)));
    });
    if (R->identity && A->identity) T->identity = detail::tensor_elements(d, *R->identity, *A->identity);
    if ((R->identity || R->local_unit_oracle) && (A->identity || A->local_unit_oracle)) {
        T->local_unit_oracle = [R, A, d, n](const std::vector<Element>& items) {
            std::vector<Key> rk, ak;
            for (const auto& x : items)
                for (const auto& [k, c] : x.terms()) {
                    rk.push_back(detail::head(k, n));
                    ak.push_back(detail::tail(k, n));
                }
            return detail::tensor_elements(d, *detail::factor_unit(*R, rk), *detail::factor_unit(*A, ak));
        };
    }
    return T;
}

// Tensor product of two regular MHAs; legs of each cover are paired up.
inline MhaPtr tensor_mha(const MhaPtr& h1, const MhaPtr& h2)
{
    auto h = std::make_shared<RegularMHA>();
    h->name = "tensor(" + h1->name + "," + h2->name + ")";
    h->alg = tensor_algebra(h1->alg, h2->alg, h->name);
    DomainId d = h->alg->dom;
    int n = h1->alg->key_len;
    auto pairmap = [h1, h2, d, n](CoverMap RegularMHA::*f) -> CoverMap {
        if (!((*h1).*f) || !((*h2).*f)) return nullptr;
        return [h1, h2, d, n, f](const Key& u, const Key& v) {
            Tensor a = ((*h1).*f)(detail::head(u, n), detail::head(v, n));
            Tensor b = ((*h2).*f)(detail::tail(u, n), detail::tail(v, n));
            Tensor t(d, 2);
            for (const auto& [ka, ca] : a.terms())
                for (const auto& [kb, cb] : b.terms())
                    t.add_term({concat(ka[0], kb[0]), concat(ka[1], kb[1])}, ca * cb);
            return t;
        };
    };
    h->t1 = pairmap(&RegularMHA::t1);
    h->t2 = pairmap(&RegularMHA::t2);
    h->t3 = pairmap(&RegularMHA::t3);
    h->t4 = pairmap(&RegularMHA::t4);
    h->t1_inv = pairmap(&RegularMHA::t1_inv);
    h->t2_inv = pairmap(&RegularMHA::t2_inv);
    h->t3_inv = pairmap(&RegularMHA::t3_inv);
    h->t4_inv = pairmap(&RegularMHA::t4_inv);
    h->counit = [h1, h2, n](const Key& k) { return h1->counit(detail::head(k, n)) * h2->counit(detail::tail(k, n)); };
    h->antipode = [h1, h2, d, n](const Key& k) {
        return detail::tensor_elements(d, h1->antipode(detail::head(k, n)), h2->antipode(detail::tail(k, n)));
    };
    h->antipode_inv = [h1, h2, d, n](const Key& k) {
        return detail::tensor_elements(d, h1->antipode_inv(detail::head(k, n)),
                                       h2->antipode_inv(detail::tail(k, n)));
    };
    h->quantum_group = h1->quantum_group && h2->quantum_group;
    if (h1->left_integral_oracle && h2->left_integral_oracle)
        h->left_integral_oracle = [h1, h2, n](const Key& k) {
            return h1->left_integral_oracle(detail::head(k, n)) * h2->left_integral_oracle(detail::tail(k, n));
        };
    h->description = json{{"tensor", {h1->description, h2->description}}};
    return h;
}

// M_n(C) ⊗ coeff with keys (i, j, c...); E_ij E_kl = [j=k] E_il.
inline AlgebraPtr matrix_algebra(int n, const AlgebraPtr& C)
{
    auto M = std::make_shared<Algebra>();
    M->name = "M(" + std::to_string(n) + "," + C->name + ")";
    M->dom = intern_domain(M->name);
    M->key_len = 2 + C->key_len;
    auto idx = [n](int r) {
        (void)r;
        std::vector<Key> v;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) v.push_back(Key{i, j});
        return v;
    };
    if (C->finite()) {
        std::vector<Key> b;
        for (const auto& ij : idx(0))
            for (const auto& c : *C->basis) b.push_back(concat(ij, c));
        M->basis = b;
    }
    M->sampler = [idx, C](int r) {
        std::vector<Key> b;
        for (const auto& ij : idx(r))
            for (const auto& c : C->sample(r)) b.push_back(concat(ij, c));
        return b;
    };
    DomainId d = M->dom;
    M->product = [C, d](const Key& u, const Key& v) {
        Element r(d);
        if (u[1] != v[0]) return r;
        Key il{u[0], v[1]};
        for (const auto& [k, c] : C->product(detail::tail(u, 2), detail::tail(v, 2)).terms())
            r.add_term(concat(il, k), c);
        return r;
    };
    if (C->identity) {
        Element one(d);
        for (int i = 0; i < n; ++i)
            for (const auto& [k, c] : C->identity->terms()) one.add_term(concat(Key{i, i}, k), c);
        M->identity = one;
    }
    return M;
}

}  // namespace mha

#pragma once

#include <algorithm>
#include <cstdlib>
#include <memory>
#include <mutex>
#include <set>

#include "algebra.hpp"
#include "report.hpp"

namespace mha {

enum class Cover { T1, T2, T3, T4 };

// Covering maps on basis keys:
//   T1(a,b) = Δ(a)(1⊗b)   T2(a,b) = (a⊗1)Δ(b)
//   T3(a,b) = Δ(a)(b⊗1)   T4(a,b) = (1⊗b)Δ(a)
using CoverMap = std::function<Tensor(const Key&, const Key&)>;

struct RegularMHA {
    std::string name;
    AlgebraPtr alg;
    CoverMap t1, t2, t3, t4;
    // Inverses, evaluated on the basis tensor e_a ⊗ e_b.
    CoverMap t1_inv, t2_inv, t3_inv, t4_inv;
    Functional counit;
    std::function<Element(const Key&)> antipode;
    std::function<Element(const Key&)> antipode_inv;

    // Integrals exist (algebraic quantum group).
    bool quantum_group = false;
    // Oracles for countable instances where no finite solve is possible.
    Functional left_integral_oracle;
    bool cointegral_absent = false;
    std::optional<Element> left_cointegral_oracle;
    std::optional<Element> right_cointegral_oracle;

    json description;

    DomainId dom() const { return alg->dom; }
    bool finite() const { return alg->finite(); }
    bool hopf() const { return alg->unital(); }
    Element e(const Key& k) const { return alg->e(k); }
};

using MhaPtr = std::shared_ptr<const RegularMHA>;

inline const CoverMap& cover_map(const RegularMHA& h, Cover v)
{
    switch (v) {
    case Cover::T1: return h.t1;
    case Cover::T2: return h.t2;
    case Cover::T3: return h.t3;
    default: return h.t4;
    }
}

inline Tensor cover(const RegularMHA& h, Cover v, const Element& a, const Element& b)
{
    const CoverMap& f = cover_map(h, v);
    Tensor t(h.dom(), 2);
    for (const auto& [ka, ca] : a.terms()) {
        if (a.domain() != h.dom() && a.domain() != 0) throw Error(ErrorKind::DomainMismatch, "cover argument");
        for (const auto& [kb, cb] : b.terms()) {
            if (b.domain() != h.dom() && b.domain() != 0) throw Error(ErrorKind::DomainMismatch, "cover argument");
            t.axpy(ca * cb, f(ka, kb));
        }
    }
    return t;
}

inline Tensor apply_pair_map(const RegularMHA& h, const CoverMap& f, const Tensor& t)
{
    Tensor r(h.dom(), 2);
    for (const auto& [ks, c] : t.terms()) r.axpy(c, f(ks[0], ks[1]));
    return r;
}

inline Scalar counit(const RegularMHA& h, const Element& x) { return eval(h.counit, x); }
inline Element antipode(const RegularMHA& h, const Element& x) { return extend_linear(x, h.dom(), h.antipode); }
inline Element antipode_inv(const RegularMHA& h, const Element& x)
{
    return extend_linear(x, h.dom(), h.antipode_inv);
}

// (ε⊗ι) and (ι⊗ε) on a 2-tensor.
inline Element counit_leg(const RegularMHA& h, const Tensor& t, int leg)
{
    Element r(h.dom());
    for (const auto& [ks, c] : t.terms()) r.add_term(ks[1 - leg], c * h.counit(ks[leg]));
    return r;
}

// ---------------------------------------------------------------------------
// Axiom verification

inline json pair_witness(const Key& a, const Key& b) { return json{{"a", to_json(a)}, {"b", to_json(b)}}; }
inline json triple_witness(const Key& a, const Key& b, const Key& c)
{
    return json{{"a", to_json(a)}, {"b", to_json(b)}, {"c", to_json(c)}};
}

inline Report verify_mha_axioms(const RegularMHA& h, const std::vector<Key>& sample)
{
    Report rep;
    rep.instances = {h.name};
    const Algebra& A = *h.alg;
    const bool sampled = !h.finite();
    std::vector<std::pair<Key, Key>> pairs;
    for (const auto& a : sample)
        for (const auto& b : sample) pairs.emplace_back(a, b);
    std::vector<std::tuple<Key, Key, Key>> triples;
    for (const auto& a : sample)
        for (const auto& b : sample)
            for (const auto& c : sample) triples.emplace_back(a, b, c);

    using P = std::pair<Key, Key>;
    using T3 = std::tuple<Key, Key, Key>;
    auto bij = [&](const std::string& nm, const CoverMap& f, const CoverMap& finv) {
        if (!finv) {
            rep.add(Check{nm, Status::Skipped, nullptr, "no inverse registered"});
            return;
        }
        check_all<P>(rep, nm, sampled, pairs, [&](const P& p) -> std::optional<json> {
            Tensor ab = Tensor::outer(h.e(p.first), h.e(p.second));
            if (apply_pair_map(h, finv, f(p.first, p.second)) != ab) return pair_witness(p.first, p.second);
            if (apply_pair_map(h, f, finv(p.first, p.second)) != ab) return pair_witness(p.first, p.second);
            return std::nullopt;
        });
    };
    bij("t1 bijective", h.t1, h.t1_inv);
    bij("t2 bijective", h.t2, h.t2_inv);
    bij("t3 bijective", h.t3, h.t3_inv);
    bij("t4 bijective", h.t4, h.t4_inv);

    // The four covers describe one Δ: compare doubly covered products.
    check_all<T3>(rep, "cover consistency", sampled, triples, [&](const T3& t) -> std::optional<json> {
        const auto& [a, b, c] = t;
        Element eb = h.e(b), ec = h.e(c);
        Tensor t1 = h.t1(a, b);
        if (leg_mul_left(A, t1, 0, ec) != leg_mul_right(A, h.t2(c, a), 1, eb)) return triple_witness(a, b, c);
        if (leg_mul_right(A, t1, 0, ec) != leg_mul_right(A, h.t3(a, c), 1, eb)) return triple_witness(a, b, c);
        if (leg_mul_left(A, t1, 1, ec) != leg_mul_right(A, h.t4(a, c), 1, eb)) return triple_witness(a, b, c);
        if (leg_mul_left(A, h.t4(a, b), 0, ec) != leg_mul_left(A, h.t2(c, a), 1, eb)) return triple_witness(a, b, c);
        return std::nullopt;
    });

    // (a⊗1⊗1)(Δ⊗ι)(Δ(b)(1⊗c)) = (ι⊗Δ)((a⊗1)Δ(b))(1⊗1⊗c)
    check_all<T3>(rep, "coassociativity", sampled, triples, [&](const T3& t) -> std::optional<json> {
        const auto& [a, b, c] = t;
        Tensor lhs(h.dom(), 3), rhs(h.dom(), 3);
        for (const auto& [ks, v] : h.t1(b, c).terms())
            for (const auto& [ks2, v2] : h.t2(a, ks[0]).terms()) lhs.add_term({ks2[0], ks2[1], ks[1]}, v * v2);
        for (const auto& [ks, v] : h.t2(a, b).terms())
            for (const auto& [ks2, v2] : h.t1(ks[1], c).terms()) rhs.add_term({ks[0], ks2[0], ks2[1]}, v * v2);
        if (lhs != rhs) return triple_witness(a, b, c);
        return std::nullopt;
    });

    check_all<P>(rep, "counit laws", sampled, pairs, [&](const P& p) -> std::optional<json> {
        Element ab = A.product(p.first, p.second);
        if (counit_leg(h, h.t1(p.first, p.second), 0) != ab) return pair_witness(p.first, p.second);
        if (counit_leg(h, h.t2(p.first, p.second), 1) != ab) return pair_witness(p.first, p.second);
        return std::nullopt;
    });

    check_all<P>(rep, "antipode laws", sampled, pairs, [&](const P& p) -> std::optional<json> {
        const auto& [a, b] = p;
        Element l(h.dom()), r(h.dom());
        for (const auto& [ks, c] : h.t1(a, b).terms()) l.axpy(c, mul(A, h.antipode(ks[0]), h.e(ks[1])));
        for (const auto& [ks, c] : h.t2(a, b).terms()) r.axpy(c, mul(A, h.e(ks[0]), h.antipode(ks[1])));
        if (l != h.counit(a) * h.e(b)) return pair_witness(a, b);
        if (r != h.counit(b) * h.e(a)) return pair_witness(a, b);
        return std::nullopt;
    });

    check_all<Key>(rep, "antipode invertible", sampled, sample, [&](const Key& a) -> std::optional<json> {
        if (antipode(h, h.antipode_inv(a)) != h.e(a) || antipode_inv(h, h.antipode(a)) != h.e(a))
            return json{{"a", to_json(a)}};
        return std::nullopt;
    });

    check_all<P>(rep, "counit multiplicative", sampled, pairs, [&](const P& p) -> std::optional<json> {
        if (counit(h, A.product(p.first, p.second)) != h.counit(p.first) * h.counit(p.second))
            return pair_witness(p.first, p.second);
        return std::nullopt;
    });

    check_all<P>(rep, "antipode anti-multiplicative", sampled, pairs, [&](const P& p) -> std::optional<json> {
        if (antipode(h, A.product(p.first, p.second)) != mul(A, h.antipode(p.second), h.antipode(p.first)))
            return pair_witness(p.first, p.second);
        return std::nullopt;
    });

    if (h.finite()) {
        rep.add("left radical zero", left_radical_zero(A));
        rep.add("right radical zero", right_radical_zero(A));
    }
    return rep;
}

inline Report verify_mha_axioms(const RegularMHA& h, int sample_range = 5)
{
    return verify_mha_axioms(h, h.alg->sample(sample_range));
}

// The same algebra with the flipped coproduct; a regular MHA again.
inline MhaPtr coopposite(const MhaPtr& h)
{
    auto r = std::make_shared<RegularMHA>(*h);
    r->name = h->name + "^cop";
    auto fl = [](const Tensor& t) { return t.flip(0, 1); };
    r->t1 = [h, fl](const Key& a, const Key& b) { return fl(h->t3(a, b)); };
    r->t2 = [h, fl](const Key& a, const Key& b) { return fl(h->t4(b, a)); };
    r->t3 = [h, fl](const Key& a, const Key& b) { return fl(h->t1(a, b)); };
    r->t4 = [h, fl](const Key& a, const Key& b) { return fl(h->t2(b, a)); };
    // T1'(a,b) = flip(T3(a,b)): inverse sends x⊗y to T3^{-1}(y⊗x).
    auto swap_inv = [h](const CoverMap& inv, bool swap_out) -> CoverMap {
        if (!inv) return nullptr;
        return [h, inv, swap_out](const Key& x, const Key& y) {
            Tensor t = inv(y, x);
            return swap_out ? t.flip(0, 1) : t;
        };
    };
    r->t1_inv = swap_inv(h->t3_inv, false);
    r->t2_inv = swap_inv(h->t4_inv, true);
    r->t3_inv = swap_inv(h->t1_inv, false);
    r->t4_inv = swap_inv(h->t2_inv, true);
    r->antipode = h->antipode_inv;
    r->antipode_inv = h->antipode;
    return r;
}

// ---------------------------------------------------------------------------
// Finite instances from a full coproduct table

namespace detail {
// Inverse of a linear bijection of A⊗A given on basis tensors.
inline CoverMap invert_pair_map(const AlgebraPtr& A, CoverMap f)
{
    struct State {
        std::once_flag once;
        std::map<std::pair<Key, Key>, Tensor> table;
        bool ok = true;
    };
    auto st = std::make_shared<State>();
    return [st, A, f](const Key& x, const Key& y) {
        std::call_once(st->once, [&] {
            const auto& B = *A->basis;
            DomainId fd = intern_domain(A->name + "⊗2");
            Echelon ech;
            std::vector<std::pair<Key, Key>> idx;
            for (const auto& a : B)
                for (const auto& b : B) {
                    ech.insert(f(a, b).flatten(fd));
                    idx.emplace_back(a, b);
                }
            for (const auto& a : B)
                for (const auto& b : B) {
                    Tensor t(A->dom, 2);
                    auto combo = ech.express(Element::basis(fd, concat(a, b)));
                    if (!combo) {
                        st->ok = false;
                    } else {
                        for (const auto& [i, c] : *combo) t.add_term({idx[i].first, idx[i].second}, c);
                    }
                    st->table.emplace(std::make_pair(a, b), t);
                }
        });
        auto it = st->table.find({x, y});
        if (it == st->table.end()) throw Error(ErrorKind::DomainMismatch, "basis tensor outside finite basis");
        return it->second;
    };
}
}  // namespace detail

// Builds a finite-dimensional regular MHA from Δ given on basis keys as a
// full 2-tensor (legal since finite MHAs are unital).
inline MhaPtr make_finite_mha(const std::string& name, const AlgebraPtr& A, std::function<Tensor(const Key&)> delta,
                              Functional eps, std::function<Element(const Key&)> S,
                              std::function<Element(const Key&)> Sinv)
{
    auto h = std::make_shared<RegularMHA>();
    h->name = name;
    h->alg = A;
    struct DeltaCache {
        std::mutex mu;
        std::map<Key, Tensor> m;
    };
    auto cache = std::make_shared<DeltaCache>();
    auto D = [cache, delta](const Key& a) {
        {
            std::lock_guard<std::mutex> lock(cache->mu);
            auto it = cache->m.find(a);
            if (it != cache->m.end()) return it->second;
        }
        Tensor t = delta(a);
        std::lock_guard<std::mutex> lock(cache->mu);
        cache->m.emplace(a, t);
        return t;
    };
    h->t1 = [A, D](const Key& a, const Key& b) { return leg_mul_right(*A, D(a), 1, A->e(b)); };
    h->t2 = [A, D](const Key& a, const Key& b) { return leg_mul_left(*A, D(b), 0, A->e(a)); };
    h->t3 = [A, D](const Key& a, const Key& b) { return leg_mul_right(*A, D(a), 0, A->e(b)); };
    h->t4 = [A, D](const Key& a, const Key& b) { return leg_mul_left(*A, D(a), 1, A->e(b)); };
    h->t1_inv = detail::invert_pair_map(A, h->t1);
    h->t2_inv = detail::invert_pair_map(A, h->t2);
    h->t3_inv = detail::invert_pair_map(A, h->t3);
    h->t4_inv = detail::invert_pair_map(A, h->t4);
    h->counit = std::move(eps);
    h->antipode = std::move(S);
    h->antipode_inv = std::move(Sinv);
    return h;
}

// Full coproduct of a unital instance: Δ(a) = Δ(a)(1⊗1).
inline Tensor full_coproduct(const RegularMHA& h, const Element& a)
{
    if (!h.alg->identity) throw Error(ErrorKind::NotHopf, h.name + " has no identity");
    return cover(h, Cover::T1, a, *h.alg->identity);
}

// ---------------------------------------------------------------------------
// Local units

enum class Side { Left, Right, TwoSided };

inline bool is_local_unit(const Algebra& A, const Element& e, const std::vector<Element>& items, Side side)
{
    for (const auto& x : items) {
        if (side != Side::Right && mul(A, e, x) != x) return false;
        if (side != Side::Left && mul(A, x, e) != x) return false;
    }
    return true;
}

inline int key_radius(const std::vector<Element>& items)
{
    int r = 0;
    for (const auto& x : items)
        for (const auto& [k, c] : x.terms())
            for (int i = 0; i < k.size(); ++i) r = std::max(r, std::abs(k[i]));
    return r;
}

// Adaptive search: solve for e in the span of a growing basis window.
inline std::optional<Element> solve_local_unit(const Algebra& A, const std::vector<Element>& items, Side side,
                                               int rounds)
{
    DomainId sd = intern_domain(A.name + "|unit-system");
    int radius = std::max(1, key_radius(items) + 1);
    for (int round = 0; round < rounds; ++round) {
        std::set<Key> window;
        for (const auto& k : A.sample(radius << round)) window.insert(k);
        for (const auto& x : items)
            for (const auto& [k, c] : x.terms()) window.insert(k);
        std::vector<Key> keys(window.begin(), window.end());
        std::vector<Element> gens;
        for (const auto& b : keys) {
            Element g(sd);
            for (std::size_t i = 0; i < items.size(); ++i) {
                if (side != Side::Right)
                    for (const auto& [k, c] : mul(A, A.e(b), items[i]).terms())
                        g.add_term(concat(Key{0, static_cast<std::int32_t>(i)}, k), c);
                if (side != Side::Left)
                    for (const auto& [k, c] : mul(A, items[i], A.e(b)).terms())
                        g.add_term(concat(Key{1, static_cast<std::int32_t>(i)}, k), c);
            }
            gens.push_back(g);
        }
        Element target(sd);
        for (std::size_t i = 0; i < items.size(); ++i)
            for (const auto& [k, c] : items[i].terms()) {
                if (side != Side::Right) target.add_term(concat(Key{0, static_cast<std::int32_t>(i)}, k), c);
                if (side != Side::Left) target.add_term(concat(Key{1, static_cast<std::int32_t>(i)}, k), c);
            }
        if (auto sol = linear_solve(gens, target)) {
            Element e(A.dom);
            for (std::size_t i = 0; i < keys.size(); ++i) e.add_term(keys[i], (*sol)[i]);
            return e;
        }
        if (A.finite()) break;
    }
    return std::nullopt;
}

inline Element find_local_units(const RegularMHA& h, const std::vector<Element>& items, Side side, int rounds = 3,
                                bool use_oracle = true)
{
    const Algebra& A = *h.alg;
    if (side == Side::TwoSided && !h.quantum_group)
        throw Error(ErrorKind::NotFound, "two-sided local units need an algebraic quantum group: " + h.name);
    if (use_oracle) {
        if (A.local_unit_oracle) {
            Element e = A.local_unit_oracle(items);
            if (is_local_unit(A, e, items, side)) return e;
        }
        if (A.identity) return *A.identity;
    }
    if (auto e = solve_local_unit(A, items, side, rounds)) return *e;
    throw Error(ErrorKind::NotFound, "local unit search exhausted " + std::to_string(rounds) + " rounds in " + h.name);
}

}  // namespace mha

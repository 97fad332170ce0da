#pragma once

#include <random>

#include "actions.hpp"

namespace mha {

// R # A on keys concat(r, a) with
//   (x # a)(x' # a') = Σ x(a_(1)x') # a_(2)a'.
struct Smash {
    std::string name;
    ActionPtr s;
    AlgebraPtr alg;
    // R ⊗ A as a vector space (the domain of W).
    AlgebraPtr RA;
    int rlen = 1;
    Report certificate;

    Key key(const Key& x, const Key& a) const { return concat(x, a); }
    Key r_part(const Key& k) const { return detail::head(k, rlen); }
    Key a_part(const Key& k) const { return detail::tail(k, rlen); }
    Element e(const Key& x, const Key& a) const { return alg->e(key(x, a)); }
};

using SmashPtr = std::shared_ptr<const Smash>;

struct SmashOptions {
    bool full = true;          // exhaustive associativity when affordable
    std::uint64_t seed = 1;
    int samples = 200;         // random triples otherwise
    long exhaustive_budget = 60000;
    bool verify_action = true;
};

namespace detail {

// Σ x(a_(1)x') # a_(2)a' on basis keys.
inline Element smash_basis_product(const Action& s, DomainId d, int n, const Key& u, const Key& v, Strategy st)
{
    const RegularMHA& h = *s.A;
    const Algebra& R = *s.R;
    Key x = head(u, n), a = tail(u, n), x2 = head(v, n), a2 = tail(v, n);
    Element ex2 = R.e(x2);
    Element e = module_unit(s, ex2);
    Tensor t = sweedler_eval(h, SweedlerExpr{h.e(a), {leg(LegMap::Id, std::nullopt, e), leg(LegMap::Id, std::nullopt, h.e(a2))}}, st);
    Element r(d);
    Element ex = R.e(x);
    for (const auto& [ks, c] : t.terms())
        r.axpy(c, tensor_elements(d, mul(R, ex, act(s, ks[0], ex2)), h.e(ks[1])));
    return r;
}

inline std::vector<std::tuple<Key, Key, Key>> random_triples(const std::vector<Key>& pool, int count, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    std::vector<std::tuple<Key, Key, Key>> out;
    for (int i = 0; i < count; ++i) out.emplace_back(pool[pick(rng)], pool[pick(rng)], pool[pick(rng)]);
    return out;
}

}  // namespace detail

inline Report certify_smash(const Smash& sm, const SmashOptions& opt)
{
    Report rep;
    rep.instances = {sm.name};
    const Algebra& B = *sm.alg;
    using T = std::tuple<Key, Key, Key>;
    std::vector<T> triples;
    bool sampled = true;
    if (B.finite()) {
        long n = static_cast<long>(B.dim());
        if (opt.full && n * n * n <= opt.exhaustive_budget) {
            triples = detail::all_triples(*B.basis, *B.basis, *B.basis);
            sampled = false;
        } else {
            triples = detail::random_triples(*B.basis, opt.samples, opt.seed);
        }
    } else {
        triples = detail::random_triples(B.sample(4), opt.samples, opt.seed);
    }
    check_all<T>(rep, "associativity", sampled, triples, [&](const T& t) -> std::optional<json> {
        const auto& [u, v, w] = t;
        if (mul(B, mul(B, B.e(u), B.e(v)), B.e(w)) != mul(B, B.e(u), mul(B, B.e(v), B.e(w))))
            return triple_witness(u, v, w);
        return std::nullopt;
    });
    if (B.finite()) {
        rep.add("left radical zero", left_radical_zero(B));
        rep.add("right radical zero", right_radical_zero(B));
    }
    // The product computed with the other peeling order.
    using P = std::pair<Key, Key>;
    auto pool = B.finite() ? *B.basis : B.sample(2);
    std::vector<P> pairs;
    if (B.finite() && pool.size() * pool.size() <= 5000) {
        pairs = detail::all_pairs(pool, pool);
    } else {
        std::mt19937_64 rng(opt.seed + 1);
        std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
        for (int i = 0; i < opt.samples; ++i) pairs.emplace_back(pool[pick(rng)], pool[pick(rng)]);
    }
    bool psampled = !(B.finite() && pool.size() * pool.size() <= 5000);
    check_all<P>(rep, "strategy independence", psampled, pairs, [&](const P& p) -> std::optional<json> {
        if (B.product(p.first, p.second) !=
            detail::smash_basis_product(*sm.s, B.dom, sm.rlen, p.first, p.second, Strategy::RightFirst))
            return pair_witness(p.first, p.second);
        return std::nullopt;
    });
    return rep;
}

inline SmashPtr smash(const ActionPtr& s, const SmashOptions& opt = {})
{
    if (opt.verify_action) {
        Report r = verify_module_algebra(*s, 3);
        if (!r.ok()) throw Error(ErrorKind::UnverifiedAction, s->name + ": " + r.failures());
    }
    auto sm = std::make_shared<Smash>();
    sm->name = "smash(" + s->name + ")";
    sm->s = s;
    sm->rlen = s->R->key_len;
    sm->RA = tensor_algebra(s->R, s->A->alg, "tensor(" + s->R->name + "," + s->A->name + ")");
    auto B = std::make_shared<Algebra>();
    B->name = sm->name;
    B->dom = intern_domain(B->name);
    B->key_len = sm->RA->key_len;
    B->basis = sm->RA->basis;
    B->sampler = sm->RA->sampler;
    DomainId d = B->dom;
    int n = sm->rlen;
    B->product = memoize([s, d, n](const Key& u, const Key& v) {
        return detail::smash_basis_product(*s, d, n, u, v, Strategy::LeftFirst);
    });
    if (s->R->identity && s->A->alg->identity)
        B->identity = detail::tensor_elements(d, *s->R->identity, *s->A->alg->identity);
    sm->alg = B;
    sm->certificate = certify_smash(*sm, opt);
    return sm;
}

// ---------------------------------------------------------------------------
// W(x ⊗ a) = Σ a_(1)x # a_(2) and its inverse Σ S⁻¹(a_(1))x ⊗ a_(2).

inline Element smash_W(const Smash& sm, const Element& z)
{
    const Action& s = *sm.s;
    const RegularMHA& h = *s.A;
    Element r(sm.alg->dom);
    for (const auto& [k, c] : z.terms()) {
        Element x = s.R->e(sm.r_part(k));
        Element e = module_unit(s, x);
        Tensor t = sweedler_eval(h, SweedlerExpr{h.e(sm.a_part(k)), {leg(LegMap::Id, std::nullopt, e), leg()}});
        for (const auto& [ks, cc] : t.terms())
            r.axpy(c * cc, detail::tensor_elements(sm.alg->dom, act(s, ks[0], x), h.e(ks[1])));
    }
    return r;
}

inline Element smash_W_inv(const Smash& sm, const Element& z)
{
    const Action& s = *sm.s;
    const RegularMHA& h = *s.A;
    Element r(sm.RA->dom);
    for (const auto& [k, c] : z.terms()) {
        Element x = s.R->e(sm.r_part(k));
        Element e = module_unit(s, x);
        Tensor t = sweedler_eval(h, SweedlerExpr{h.e(sm.a_part(k)), {leg(LegMap::SInv, std::nullopt, e), leg()}});
        for (const auto& [ks, cc] : t.terms())
            r.axpy(c * cc, detail::tensor_elements(sm.RA->dom, act(s, ks[0], x), h.e(ks[1])));
    }
    return r;
}

// ---------------------------------------------------------------------------
// Embeddings of A and M(R) into M(R # A)

inline Multiplier pi_A(const SmashPtr& sm, const Element& a)
{
    LinMap left = [sm, a](const Element& z) {
        const Action& s = *sm->s;
        const RegularMHA& h = *s.A;
        Element r(sm->alg->dom);
        for (const auto& [k, c] : z.terms()) {
            Element x = s.R->e(sm->r_part(k));
            Element e = module_unit(s, x);
            for (const auto& [ka, ca] : a.terms()) {
                Tensor t = sweedler_eval(h, SweedlerExpr{h.e(ka), {leg(LegMap::Id, std::nullopt, e),
                                                                   leg(LegMap::Id, std::nullopt, h.e(sm->a_part(k)))}});
                for (const auto& [ks, cc] : t.terms())
                    r.axpy(c * ca * cc, detail::tensor_elements(sm->alg->dom, act(s, ks[0], x), h.e(ks[1])));
            }
        }
        return r;
    };
    LinMap right = [sm, a](const Element& z) {
        const Algebra& A = *sm->s->A->alg;
        Element r(sm->alg->dom);
        for (const auto& [k, c] : z.terms())
            r.axpy(c, detail::tensor_elements(sm->alg->dom, sm->s->R->e(sm->r_part(k)), mul(A, A.e(sm->a_part(k)), a)));
        return r;
    };
    return Multiplier{left, right};
}

inline Multiplier pi_R(const SmashPtr& sm, const Multiplier& m)
{
    LinMap left = [sm, m](const Element& z) {
        Element r(sm->alg->dom);
        for (const auto& [k, c] : z.terms())
            r.axpy(c, detail::tensor_elements(sm->alg->dom, m.left(sm->s->R->e(sm->r_part(k))),
                                              sm->s->A->e(sm->a_part(k))));
        return r;
    };
    LinMap right = [sm, m](const Element& z) {
        Element w = smash_W_inv(*sm, z);
        Element t(sm->RA->dom);
        for (const auto& [k, c] : w.terms())
            t.axpy(c, detail::tensor_elements(sm->RA->dom, m.right(sm->s->R->e(sm->r_part(k))),
                                              sm->s->A->e(sm->a_part(k))));
        return smash_W(*sm, t);
    };
    return Multiplier{left, right};
}

inline Multiplier pi_R(const SmashPtr& sm, const Element& x) { return pi_R(sm, as_multiplier(sm->s->R, x)); }

inline Report verify_pi_relations(const SmashPtr& sm, int r = 2)
{
    Report rep;
    rep.instances = {sm->name};
    const Action& s = *sm->s;
    const RegularMHA& h = *s.A;
    const Algebra& R = *s.R;
    const Algebra& B = *sm->alg;
    auto As = h.alg->sample(r);
    auto Rs = R.sample(r);
    auto Bs = B.sample(r);
    bool sampled = !B.finite();
    using P = std::pair<Key, Key>;
    check_all<P>(rep, "pi_A multiplicative", sampled, detail::all_pairs(As, As), [&](const P& p) -> std::optional<json> {
        if (!multiplier_equal(B, pi_A(sm, h.alg->product(p.first, p.second)),
                              multiplier_product(pi_A(sm, h.e(p.first)), pi_A(sm, h.e(p.second))), Bs))
            return pair_witness(p.first, p.second);
        return std::nullopt;
    });
    check_all<P>(rep, "pi_R multiplicative", sampled, detail::all_pairs(Rs, Rs), [&](const P& p) -> std::optional<json> {
        if (!multiplier_equal(B, pi_R(sm, R.product(p.first, p.second)),
                              multiplier_product(pi_R(sm, R.e(p.first)), pi_R(sm, R.e(p.second))), Bs))
            return pair_witness(p.first, p.second);
        return std::nullopt;
    });
    // pi_A(a) pi_R(x) = Σ pi_R(a_(1)x) pi_A(a_(2))
    check_all<P>(rep, "commutation relation", sampled, detail::all_pairs(As, Rs), [&](const P& p) -> std::optional<json> {
        Element x = R.e(p.second);
        Tensor t = sweedler_eval(h, SweedlerExpr{h.e(p.first), {leg(LegMap::Id, std::nullopt, module_unit(s, x)), leg()}});
        std::vector<std::pair<Scalar, Multiplier>> terms;
        for (const auto& [ks, c] : t.terms())
            terms.emplace_back(c, multiplier_product(pi_R(sm, act(s, ks[0], x)), pi_A(sm, h.e(ks[1]))));
        if (!multiplier_equal(B, multiplier_product(pi_A(sm, h.e(p.first)), pi_R(sm, x)), multiplier_sum(terms), Bs))
            return pair_witness(p.first, p.second);
        return std::nullopt;
    });
    check_all<P>(rep, "pi_R(x) pi_A(a) = x # a", sampled, detail::all_pairs(Rs, As), [&](const P& p) -> std::optional<json> {
        Multiplier m = multiplier_product(pi_R(sm, R.e(p.first)), pi_A(sm, h.e(p.second)));
        if (!multiplier_equal(B, m, as_multiplier(sm->alg, sm->e(p.first, p.second)), Bs))
            return pair_witness(p.first, p.second);
        return std::nullopt;
    });
    if (B.finite()) {
        DomainId d = intern_domain(sm->name + "|multiplier-coords");
        std::vector<Element> rx, ax;
        for (const auto& x : *R.basis)
            for (const auto& a : *h.alg->basis) {
                rx.push_back(multiplier_coordinates(B, multiplier_product(pi_R(sm, R.e(x)), pi_A(sm, h.e(a))), *B.basis, d));
                ax.push_back(multiplier_coordinates(B, multiplier_product(pi_A(sm, h.e(a)), pi_R(sm, R.e(x))), *B.basis, d));
            }
        int n = static_cast<int>(B.dim());
        int r1 = rank_of(rx), r2 = rank_of(ax);
        rep.add("span pi_R(R) pi_A(A)", r1 == n, false, json{{"rank", r1}, {"dim", n}},
                std::to_string(r1) + "/" + std::to_string(n));
        rep.add("span pi_A(A) pi_R(R)", r2 == n, false, json{{"rank", r2}, {"dim", n}},
                std::to_string(r2) + "/" + std::to_string(n));
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Universal property: x # a ↦ ρ_R(x) ρ_A(a) for maps into M(C) satisfying
// the commutation relation.

struct UniversalMap {
    std::function<Multiplier(const Key&)> map;
    Report certificate;
};

inline UniversalMap universal_map(const SmashPtr& sm, const AlgebraPtr& C, const MultiplierMap& rhoR,
                                  const MultiplierMap& rhoA, int r = 2)
{
    const Action& s = *sm->s;
    const RegularMHA& h = *s.A;
    const Algebra& R = *s.R;
    auto Cs = C->sample(r);
    UniversalMap u;
    u.certificate.instances = {sm->name, C->name};
    bool sampled = !sm->alg->finite();
    using P = std::pair<Key, Key>;
    auto As = h.alg->sample(r);
    auto Rs = R.sample(r);
    check_all<P>(u.certificate, "commutation in M(C)", sampled, detail::all_pairs(As, Rs),
                 [&](const P& p) -> std::optional<json> {
                     Element x = R.e(p.second);
                     Tensor t = sweedler_eval(h, SweedlerExpr{h.e(p.first), {leg(LegMap::Id, std::nullopt, module_unit(s, x)), leg()}});
                     std::vector<std::pair<Scalar, Multiplier>> terms;
                     for (const auto& [ks, c] : t.terms())
                         terms.emplace_back(c, multiplier_product(apply_multiplier_map(rhoR, act(s, ks[0], x)), rhoA(ks[1])));
                     if (!multiplier_equal(*C, multiplier_product(rhoA(p.first), rhoR(p.second)), multiplier_sum(terms), Cs))
                         return pair_witness(p.first, p.second);
                     return std::nullopt;
                 });
    if (!u.certificate.ok()) throw Error(ErrorKind::CommutationFailed, u.certificate.failures());
    auto smp = sm;
    u.map = [smp, rhoR, rhoA](const Key& k) { return multiplier_product(rhoR(smp->r_part(k)), rhoA(smp->a_part(k))); };
    auto Bs = sm->alg->sample(r);
    check_all<P>(u.certificate, "homomorphism", sampled, detail::all_pairs(Bs, Bs), [&](const P& p) -> std::optional<json> {
        Multiplier lhs = apply_multiplier_map(u.map, sm->alg->product(p.first, p.second));
        if (!multiplier_equal(*C, lhs, multiplier_product(u.map(p.first), u.map(p.second)), Cs))
            return pair_witness(p.first, p.second);
        return std::nullopt;
    });
    return u;
}

// ---------------------------------------------------------------------------
// Modules over plain algebras and covariant modules

struct AlgModule {
    std::string name;
    AlgebraPtr B;
    SpacePtr V;
    std::function<Element(const Key& b, const Key& v)> act;
};

using AlgModulePtr = std::shared_ptr<const AlgModule>;

inline Element act(const AlgModule& m, const Element& b, const Element& v)
{
    Element r(m.V->dom);
    for (const auto& [kb, cb] : b.terms())
        for (const auto& [kv, cv] : v.terms()) r.axpy(cb * cv, m.act(kb, kv));
    return r;
}

// Associativity, unitality (B·V = V) and non-degeneracy on finite data.
inline Report verify_alg_module(const AlgModule& m, int r = 2)
{
    Report rep;
    rep.instances = {m.name};
    const Algebra& B = *m.B;
    auto Bs = B.sample(r);
    auto Vs = m.V->sample(r);
    bool sampled = !B.finite() || !m.V->finite();
    using T = std::tuple<Key, Key, Key>;
    check_all<T>(rep, "module associativity", sampled, detail::all_triples(Bs, Bs, Vs), [&](const T& t) -> std::optional<json> {
        const auto& [b, c, v] = t;
        if (act(m, B.product(b, c), m.V->e(v)) != act(m, B.e(b), m.act(c, v))) return triple_witness(b, c, v);
        return std::nullopt;
    });
    if (B.finite() && m.V->finite()) {
        std::vector<Element> img;
        for (const auto& b : *B.basis)
            for (const auto& v : *m.V->basis) img.push_back(m.act(b, v));
        int rk = rank_of(img);
        int n = static_cast<int>(m.V->dim());
        rep.add("unital", rk == n, false, json{{"rank", rk}, {"dim", n}});
        DomainId d = intern_domain(m.name + "|nondegeneracy");
        std::vector<Element> images;
        for (const auto& v : *m.V->basis) {
            Element e(d);
            for (const auto& b : *B.basis)
                for (const auto& [k, c] : m.act(b, v).terms()) e.add_term(concat(b, k), c);
            images.push_back(e);
        }
        auto ker = kernel_of(images);
        rep.add("non-degenerate", ker.empty(), false, json{{"kernel_dim", ker.size()}});
    }
    return rep;
}

// V with actions of R and A such that a(xv) = Σ (a_(1)x)(a_(2)v).
struct CovariantModule {
    std::string name;
    ActionPtr s;
    SpacePtr V;
    std::function<Element(const Key& x, const Key& v)> actR;
    std::function<Element(const Key& a, const Key& v)> actA;
};

inline Element act_R(const CovariantModule& m, const Element& x, const Element& v)
{
    Element r(m.V->dom);
    for (const auto& [kx, cx] : x.terms())
        for (const auto& [kv, cv] : v.terms()) r.axpy(cx * cv, m.actR(kx, kv));
    return r;
}

inline Element act_A(const CovariantModule& m, const Element& a, const Element& v)
{
    Element r(m.V->dom);
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kv, cv] : v.terms()) r.axpy(ca * cv, m.actA(ka, kv));
    return r;
}

inline Report verify_covariant(const CovariantModule& m, int r = 2)
{
    Report rep;
    rep.instances = {m.name};
    const Action& s = *m.s;
    const RegularMHA& h = *s.A;
    const Algebra& R = *s.R;
    auto As = h.alg->sample(r);
    auto Rs = R.sample(r);
    auto Vs = m.V->sample(r);
    bool sampled = !h.finite() || !R.finite() || !m.V->finite();
    using T = std::tuple<Key, Key, Key>;
    check_all<T>(rep, "R-module associativity", sampled, detail::all_triples(Rs, Rs, Vs), [&](const T& t) -> std::optional<json> {
        const auto& [x, y, v] = t;
        if (act_R(m, R.product(x, y), m.V->e(v)) != act_R(m, R.e(x), m.actR(y, v))) return triple_witness(x, y, v);
        return std::nullopt;
    });
    check_all<T>(rep, "A-module associativity", sampled, detail::all_triples(As, As, Vs), [&](const T& t) -> std::optional<json> {
        const auto& [a, b, v] = t;
        if (act_A(m, h.alg->product(a, b), m.V->e(v)) != act_A(m, h.e(a), m.actA(b, v))) return triple_witness(a, b, v);
        return std::nullopt;
    });
    check_all<T>(rep, "covariance", sampled, detail::all_triples(As, Rs, Vs), [&](const T& t) -> std::optional<json> {
        const auto& [a, x, v] = t;
        Element ex = R.e(x);
        Element ev = m.V->e(v);
        // a_(2) is covered by a unit for v in the A-action.
        std::optional<Element> f;
        if (h.alg->identity) {
            f = *h.alg->identity;
        } else {
            Module mv{m.name, m.s->A, m.V, m.actA, nullptr, {}};
            f = solve_module_unit(mv, {ev});
        }
        if (!f) return json{{"v", to_json(v)}, {"error", "no unit"}};
        Tensor tt = sweedler_eval(h, SweedlerExpr{h.e(a), {leg(LegMap::Id, std::nullopt, module_unit(s, ex)),
                                                           leg(LegMap::Id, std::nullopt, *f)}});
        Element rhs(m.V->dom);
        for (const auto& [ks, c] : tt.terms()) rhs.axpy(c, act_R(m, act(s, ks[0], ex), act_A(m, h.e(ks[1]), ev)));
        if (act_A(m, h.e(a), m.actR(x, v)) != rhs) return triple_witness(a, x, v);
        return std::nullopt;
    });
    return rep;
}

// (x # a)v = x(av)
inline AlgModulePtr covariant_to_module(const SmashPtr& sm, const CovariantModule& m)
{
    auto out = std::make_shared<AlgModule>();
    out->name = "module(" + m.name + ")";
    out->B = sm->alg;
    out->V = m.V;
    auto cm = std::make_shared<CovariantModule>(m);
    out->act = [sm, cm](const Key& k, const Key& v) {
        return act_R(*cm, cm->s->R->e(sm->r_part(k)), cm->actA(sm->a_part(k), v));
    };
    return out;
}

// xv = (x # 1)v and av = (1 # a)v; needs unital R and A.
inline CovariantModule module_to_covariant(const SmashPtr& sm, const AlgModulePtr& m)
{
    const Action& s = *sm->s;
    if (!s.R->identity || !s.A->alg->identity)
        throw Error(ErrorKind::NotHopf, "module_to_covariant needs unital " + s.R->name + " and " + s.A->name);
    CovariantModule c;
    c.name = "covariant(" + m->name + ")";
    c.s = sm->s;
    c.V = m->V;
    Element oneR = *s.R->identity, oneA = *s.A->alg->identity;
    DomainId d = sm->alg->dom;
    AlgebraPtr R = s.R;
    c.actR = [m, d, oneA, R](const Key& x, const Key& v) {
        return act(*m, detail::tensor_elements(d, R->e(x), oneA), m->V->e(v));
    };
    MhaPtr A = s.A;
    c.actA = [m, d, oneR, A](const Key& a, const Key& v) {
        return act(*m, detail::tensor_elements(d, oneR, A->e(a)), m->V->e(v));
    };
    return c;
}

// The module R with x acting by multiplication and A by the action.
inline CovariantModule regular_covariant(const ActionPtr& s)
{
    CovariantModule c;
    c.name = "regular(" + s->name + ")";
    c.s = s;
    c.V = s->R;
    AlgebraPtr R = s->R;
    c.actR = [R](const Key& x, const Key& v) { return R->product(x, v); };
    c.actA = [s](const Key& a, const Key& v) { return s->act(a, v); };
    return c;
}

// ---------------------------------------------------------------------------
// Inner actions: R # A ≅ R ⊗ A

struct SmashIso {
    LinMap forward;
    LinMap backward;
    Report certificate;
};

namespace detail {

inline Report certify_iso(const Algebra& from, const Algebra& to, const LinMap& f, const LinMap& g, int r, const std::string& tag)
{
    Report rep;
    rep.instances = {from.name, to.name};
    auto Fs = from.sample(r);
    auto Ts = to.sample(r);
    bool sampled = !from.finite();
    using P = std::pair<Key, Key>;
    check_all<P>(rep, tag + " multiplicative", sampled, all_pairs(Fs, Fs), [&](const P& p) -> std::optional<json> {
        if (f(from.product(p.first, p.second)) != mul(to, f(from.e(p.first)), f(from.e(p.second))))
            return pair_witness(p.first, p.second);
        return std::nullopt;
    });
    check_all<Key>(rep, tag + " left inverse", sampled, Fs, [&](const Key& k) -> std::optional<json> {
        if (g(f(from.e(k))) != from.e(k)) return json{{"key", to_json(k)}};
        return std::nullopt;
    });
    check_all<Key>(rep, tag + " right inverse", sampled, Ts, [&](const Key& k) -> std::optional<json> {
        if (f(g(to.e(k))) != to.e(k)) return json{{"key", to_json(k)}};
        return std::nullopt;
    });
    return rep;
}

}  // namespace detail

// x # a ↦ Σ xγ(a_(1)) ⊗ a_(2), inverse x ⊗ a ↦ Σ xγ(S(a_(1))) # a_(2).
inline SmashIso inner_trivialization(const SmashPtr& sm, const MultiplierMap& g, int r = 2)
{
    const ActionPtr& s = sm->s;
    if (!is_inner_witness(s, g, r)) throw Error(ErrorKind::NotInner, s->name + " is not implemented by the given map");
    SmashIso iso;
    auto make = [sm, g](bool fwd) -> LinMap {
        return [sm, g, fwd](const Element& z) {
            const RegularMHA& h = *sm->s->A;
            const Algebra& R = *sm->s->R;
            DomainId out = fwd ? sm->RA->dom : sm->alg->dom;
            Element res(out);
            for (const auto& [k, c] : z.terms()) {
                Element x = R.e(sm->r_part(k));
                Element f = *gamma_unit(h, R, g, {x});
                Tensor t = sweedler_eval(h, SweedlerExpr{h.e(sm->a_part(k)), {leg(fwd ? LegMap::Id : LegMap::S, f), leg()}});
                for (const auto& [ks, cc] : t.terms())
                    res.axpy(c * cc, detail::tensor_elements(out, g(ks[0]).right(x), h.e(ks[1])));
            }
            return res;
        };
    };
    iso.forward = make(true);
    iso.backward = make(false);
    iso.certificate = detail::certify_iso(*sm->alg, *sm->RA, iso.forward, iso.backward, r, "trivialization");
    return iso;
}

// Cocycle-equivalent actions: x #₂ a ↦ Σ xγ(a_(1)) #₁ a_(2), with inverse
// x #₁ a ↦ Σ x(a_(1) ▷₁ γ(S(a_(2)))) #₂ a_(3).
inline SmashIso cocycle_isomorphism(const SmashPtr& sm1, const SmashPtr& sm2, const CocycleData& c, int r = 2)
{
    Report cert = verify_cocycle(c, sm1->s, sm2->s);
    if (!cert.ok()) throw Error(ErrorKind::CocycleInvalid, cert.failures());
    SmashIso iso;
    iso.forward = [sm1, sm2, c](const Element& z) {
        const RegularMHA& h = *sm2->s->A;
        const Algebra& R = *sm2->s->R;
        Element res(sm1->alg->dom);
        for (const auto& [k, cz] : z.terms()) {
            Element x = R.e(sm2->r_part(k));
            for (const auto& [ks, cc] : full_coproduct(h, h.e(sm2->a_part(k))).terms())
                res.axpy(cz * cc, detail::tensor_elements(res.domain(), c.gamma(ks[0]).right(x), h.e(ks[1])));
        }
        return res;
    };
    iso.backward = [sm1, sm2, c](const Element& z) {
        const RegularMHA& h = *sm1->s->A;
        const Algebra& R = *sm1->s->R;
        Element res(sm2->alg->dom);
        for (const auto& [k, cz] : z.terms()) {
            Element x = R.e(sm1->r_part(k));
            Element one = *h.alg->identity;
            Tensor t = sweedler_eval(h, SweedlerExpr{h.e(sm1->a_part(k)), {leg(LegMap::Id, std::nullopt, one),
                                                                           leg(LegMap::S, std::nullopt, one), leg()}});
            for (const auto& [ks, cc] : t.terms()) {
                Multiplier m = extend_action_to_multipliers(sm1->s, h.e(ks[0]), c.gamma(ks[1]));
                res.axpy(cz * cc, detail::tensor_elements(res.domain(), m.right(x), h.e(ks[2])));
            }
        }
        return res;
    };
    iso.certificate = detail::certify_iso(*sm2->alg, *sm1->alg, iso.forward, iso.backward, r, "cocycle isomorphism");
    iso.certificate.merge(cert);
    return iso;
}

}  // namespace mha

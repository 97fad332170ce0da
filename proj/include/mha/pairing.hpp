#pragma once

#include "aqg.hpp"
#include "smash.hpp"

namespace mha {

// Non-degenerate pairing ⟨·,·⟩ : A × B → ℂ between two regular MHAs.
struct DualPair {
    std::string name;
    MhaPtr A;
    MhaPtr B;
    std::function<Scalar(const Key& a, const Key& b)> pair;
    // e in A with ⟨xe, b⟩ = ⟨x, b⟩ and ⟨ex, b⟩ = ⟨x, b⟩ for the given b.
    std::function<Element(const std::vector<Element>& bs)> unit_A;
    // f in B with ⟨a, yf⟩ = ⟨a, y⟩ and ⟨a, fy⟩ = ⟨a, y⟩ for the given a.
    std::function<Element(const std::vector<Element>& as)> unit_B;
};

using PairPtr = std::shared_ptr<const DualPair>;

inline Scalar pairing(const DualPair& p, const Element& a, const Element& b)
{
    Scalar s(0);
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms()) s += ca * cb * p.pair(ka, kb);
    return s;
}

// Gram matrix on the bases (finite pairs).
inline Matrix pairing_gram(const DualPair& p)
{
    const auto& BA = *p.A->alg->basis;
    const auto& BB = *p.B->alg->basis;
    Matrix G = zero_matrix(BA.size(), BB.size());
    for (std::size_t i = 0; i < BA.size(); ++i)
        for (std::size_t j = 0; j < BB.size(); ++j) G[i][j] = p.pair(BA[i], BB[j]);
    return G;
}

inline int pairing_rank(const DualPair& p, const std::vector<Key>& as, const std::vector<Key>& bs)
{
    DomainId d = intern_domain(p.name + "|gram");
    std::vector<Element> rows;
    for (const auto& a : as) {
        Element r(d);
        for (const auto& b : bs) r.add_term(b, p.pair(a, b));
        rows.push_back(r);
    }
    return rank_of(rows);
}

namespace detail {

inline std::function<Element(const std::vector<Element>&)> identity_or_throw(const MhaPtr& h)
{
    return [h](const std::vector<Element>&) {
        if (h->alg->identity) return *h->alg->identity;
        throw Error(ErrorKind::NotFound, "no pairing unit in " + h->name);
    };
}

}  // namespace detail

// Rejects degenerate finite pairings with Singular unless check is false.
inline PairPtr make_dual_pair(std::string name, MhaPtr A, MhaPtr B, std::function<Scalar(const Key&, const Key&)> f,
                              bool check = true)
{
    auto p = std::make_shared<DualPair>();
    p->name = std::move(name);
    p->A = A;
    p->B = B;
    p->pair = std::move(f);
    p->unit_A = detail::identity_or_throw(A);
    p->unit_B = detail::identity_or_throw(B);
    if (check && A->finite() && B->finite()) {
        int r = pairing_rank(*p, *A->alg->basis, *B->alg->basis);
        if (r != static_cast<int>(A->alg->dim()) || r != static_cast<int>(B->alg->dim()))
            throw Error(ErrorKind::Singular, "degenerate pairing " + p->name + " of rank " + std::to_string(r));
    }
    return p;
}

// ⟨λ_p, f⟩ = f(p) between C[G] and K(G).
inline PairPtr canonical_pair(const GroupPtr& G)
{
    MhaPtr A = group_algebra(G), B = function_algebra(G);
    auto p = std::const_pointer_cast<DualPair>(
        make_dual_pair("pair(" + G->name + ")", A, B, [](const Key& a, const Key& b) { return Scalar(a == b ? 1 : 0); }));
    DomainId bd = B->dom();
    p->unit_B = [bd, B](const std::vector<Element>& as) {
        if (B->alg->identity) return *B->alg->identity;
        Element f(bd);
        std::set<Key> supp;
        for (const auto& a : as)
            for (const auto& [k, c] : a.terms()) supp.insert(k);
        for (const auto& k : supp) f.add_term(k, Scalar(1));
        return f;
    };
    return p;
}

// ⟨a, ω⟩ = ω(a) between a finite quantum group and its dual.
inline PairPtr aqg_pair(const AqgPtr& g, const AqgPtr& dual)
{
    if (!dual->dual_origin || dual->dual_origin->of.get() != g.get())
        throw Error(ErrorKind::AlgebraMismatch, dual->base->name + " is not the dual of " + g->base->name);
    const auto& basis = *g->base->alg->basis;
    Matrix G = dual->dual_origin->gram;
    return make_dual_pair("pair(" + g->base->name + ")", g->base, dual->base, [basis, G](const Key& a, const Key& b) {
        return G[detail::key_index(basis, a)][detail::key_index(basis, b)];
    });
}

// ---------------------------------------------------------------------------
// The four actions
//   a ▷ b = Σ⟨a, b_(2)⟩b_(1)     b ▷ a = Σ⟨a_(2), b⟩a_(1)
//   a ◁ b = Σ⟨a_(1), b⟩a_(2)     b ◁ a = Σ⟨a, b_(1)⟩b_(2)

inline Element act_AonB(const DualPair& p, const Key& a, const Element& b, Strategy st = Strategy::LeftFirst)
{
    const RegularMHA& B = *p.B;
    Element f = p.unit_B({p.A->e(a)});
    Tensor t = sweedler_eval(B, SweedlerExpr{b, {leg(), leg(LegMap::Id, std::nullopt, f)}}, st);
    Element r(B.dom());
    for (const auto& [ks, c] : t.terms()) r.add_term(ks[0], c * p.pair(a, ks[1]));
    return r;
}

inline Element act_BonA(const DualPair& p, const Key& b, const Element& a, Strategy st = Strategy::LeftFirst)
{
    const RegularMHA& A = *p.A;
    Element e = p.unit_A({p.B->e(b)});
    Tensor t = sweedler_eval(A, SweedlerExpr{a, {leg(), leg(LegMap::Id, std::nullopt, e)}}, st);
    Element r(A.dom());
    for (const auto& [ks, c] : t.terms()) r.add_term(ks[0], c * p.pair(ks[1], b));
    return r;
}

inline Element ract_AonB(const DualPair& p, const Element& b, const Key& a, Strategy st = Strategy::LeftFirst)
{
    const RegularMHA& B = *p.B;
    Element f = p.unit_B({p.A->e(a)});
    Tensor t = sweedler_eval(B, SweedlerExpr{b, {leg(LegMap::Id, std::nullopt, f), leg()}}, st);
    Element r(B.dom());
    for (const auto& [ks, c] : t.terms()) r.add_term(ks[1], c * p.pair(a, ks[0]));
    return r;
}

inline Element ract_BonA(const DualPair& p, const Element& a, const Key& b, Strategy st = Strategy::LeftFirst)
{
    const RegularMHA& A = *p.A;
    Element e = p.unit_A({p.B->e(b)});
    Tensor t = sweedler_eval(A, SweedlerExpr{a, {leg(LegMap::Id, std::nullopt, e), leg()}}, st);
    Element r(A.dom());
    for (const auto& [ks, c] : t.terms()) r.add_term(ks[1], c * p.pair(ks[0], b));
    return r;
}

// A acting on B by ▷, as a module algebra.
inline ActionPtr pairing_action_AonB(const PairPtr& p)
{
    auto s = std::const_pointer_cast<Action>(make_action(
        "pairing-action(" + p->A->name + "," + p->B->name + ")", p->A, p->B->alg,
        [p](const Key& a, const Key& b) { return act_AonB(*p, a, p->B->e(b)); }));
    s->unit_for = [p](const std::vector<Element>& bs) { return p->unit_A(bs); };
    return s;
}

inline ActionPtr pairing_action_BonA(const PairPtr& p)
{
    auto s = std::const_pointer_cast<Action>(make_action(
        "pairing-action(" + p->B->name + "," + p->A->name + ")", p->B, p->A->alg,
        [p](const Key& b, const Key& a) { return act_BonA(*p, b, p->A->e(a)); }));
    s->unit_for = [p](const std::vector<Element>& as) { return p->unit_B(as); };
    return s;
}

inline Report verify_pairing(const PairPtr& pp, int r = 5)
{
    const DualPair& p = *pp;
    Report rep;
    rep.instances = {p.name};
    const Algebra& A = *p.A->alg;
    const Algebra& B = *p.B->alg;
    auto As = A.sample(r);
    auto Bs = B.sample(r);
    bool sampled = !A.finite() || !B.finite();
    using T = std::tuple<Key, Key, Key>;
    auto ea = [&](const Key& k) { return A.e(k); };
    auto eb = [&](const Key& k) { return B.e(k); };
    // ⟨a ◁ b, b'⟩ = ⟨a, bb'⟩
    check_all<T>(rep, "<a<b, b'> = <a, bb'>", sampled, detail::all_triples(As, Bs, Bs), [&](const T& t) -> std::optional<json> {
        const auto& [a, b, b2] = t;
        if (pairing(p, ract_BonA(p, ea(a), b), eb(b2)) != pairing(p, ea(a), B.product(b, b2))) return triple_witness(a, b, b2);
        return std::nullopt;
    });
    // ⟨b ▷ a, b'⟩ = ⟨a, b'b⟩
    check_all<T>(rep, "<b>a, b'> = <a, b'b>", sampled, detail::all_triples(As, Bs, Bs), [&](const T& t) -> std::optional<json> {
        const auto& [a, b, b2] = t;
        if (pairing(p, act_BonA(p, b, ea(a)), eb(b2)) != pairing(p, ea(a), B.product(b2, b))) return triple_witness(a, b, b2);
        return std::nullopt;
    });
    // ⟨a', b ◁ a⟩ = ⟨aa', b⟩
    check_all<T>(rep, "<a', b<a> = <aa', b>", sampled, detail::all_triples(As, As, Bs), [&](const T& t) -> std::optional<json> {
        const auto& [a2, a, b] = t;
        if (pairing(p, ea(a2), ract_AonB(p, eb(b), a)) != pairing(p, A.product(a, a2), eb(b))) return triple_witness(a2, a, b);
        return std::nullopt;
    });
    // ⟨a', a ▷ b⟩ = ⟨a'a, b⟩
    check_all<T>(rep, "<a', a>b> = <a'a, b>", sampled, detail::all_triples(As, As, Bs), [&](const T& t) -> std::optional<json> {
        const auto& [a2, a, b] = t;
        if (pairing(p, ea(a2), act_AonB(p, a, eb(b))) != pairing(p, A.product(a2, a), eb(b))) return triple_witness(a2, a, b);
        return std::nullopt;
    });
    // Membership: the covered expressions do not depend on how the legs are peeled.
    using P = std::pair<Key, Key>;
    auto ab = detail::all_pairs(As, Bs);
    check_all<P>(rep, "a>b in B", sampled, ab, [&](const P& q) -> std::optional<json> {
        if (act_AonB(p, q.first, eb(q.second)) != act_AonB(p, q.first, eb(q.second), Strategy::RightFirst))
            return pair_witness(q.first, q.second);
        return std::nullopt;
    });
    check_all<P>(rep, "b<a in B", sampled, ab, [&](const P& q) -> std::optional<json> {
        if (ract_AonB(p, eb(q.second), q.first) != ract_AonB(p, eb(q.second), q.first, Strategy::RightFirst))
            return pair_witness(q.first, q.second);
        return std::nullopt;
    });
    check_all<P>(rep, "b>a in A", sampled, ab, [&](const P& q) -> std::optional<json> {
        if (act_BonA(p, q.second, ea(q.first)) != act_BonA(p, q.second, ea(q.first), Strategy::RightFirst))
            return pair_witness(q.first, q.second);
        return std::nullopt;
    });
    check_all<P>(rep, "a<b in A", sampled, ab, [&](const P& q) -> std::optional<json> {
        if (ract_BonA(p, ea(q.first), q.second) != ract_BonA(p, ea(q.first), q.second, Strategy::RightFirst))
            return pair_witness(q.first, q.second);
        return std::nullopt;
    });
    {
        int rk = pairing_rank(p, As, Bs);
        int n = static_cast<int>(std::min(As.size(), Bs.size()));
        rep.add("non-degenerate", rk == n && As.size() == Bs.size(), sampled, json{{"rank", rk}, {"dims", {As.size(), Bs.size()}}},
                "rank " + std::to_string(rk));
    }
    check_all<Key>(rep, "unital modules over A", sampled, Bs, [&](const Key& b) -> std::optional<json> {
        Element e = p.unit_A({eb(b)});
        Element l(B.dom), rr(B.dom);
        for (const auto& [k, c] : e.terms()) {
            l.axpy(c, act_AonB(p, k, eb(b)));
            rr.axpy(c, ract_AonB(p, eb(b), k));
        }
        if (l != eb(b) || rr != eb(b)) return json{{"b", to_json(b)}, {"e", to_json(e)}};
        return std::nullopt;
    });
    check_all<Key>(rep, "unital modules over B", sampled, As, [&](const Key& a) -> std::optional<json> {
        Element f = p.unit_B({ea(a)});
        Element l(A.dom), rr(A.dom);
        for (const auto& [k, c] : f.terms()) {
            l.axpy(c, act_BonA(p, k, ea(a)));
            rr.axpy(c, ract_BonA(p, ea(a), k));
        }
        if (l != ea(a) || rr != ea(a)) return json{{"a", to_json(a)}, {"f", to_json(f)}};
        return std::nullopt;
    });
    int mr = std::min(r, 3);
    Report m1 = verify_module_algebra(*pairing_action_AonB(pp), mr);
    Report m2 = verify_module_algebra(*pairing_action_BonA(pp), mr);
    rep.add("B is an A-module algebra", m1.ok(), sampled, m1.ok() ? json(nullptr) : json(m1.failures()));
    rep.add("A is a B-module algebra", m2.ok(), sampled, m2.ok() ? json(nullptr) : json(m2.failures()));
    return rep;
}

// ---------------------------------------------------------------------------
// Smash products of a pair

enum class PairOrder { BA, AB };

inline SmashPtr pairing_smash(const PairPtr& p, PairOrder order, const SmashOptions& opt = {})
{
    return smash(order == PairOrder::BA ? pairing_action_AonB(p) : pairing_action_BonA(p), opt);
}

// Products from the pairing formulas, independent of the generic smash:
//   (b # a)(b' # a') = Σ⟨a_(1), b'_(2)⟩ bb'_(1) # a_(2)a'
//   (a # b)(a' # b') = Σ⟨a'_(2), b_(1)⟩ aa'_(1) # b_(2)b'
inline Report cross_check_pairing_smash(const PairPtr& pp, const SmashPtr& sm, PairOrder order, int r = 2)
{
    const DualPair& p = *pp;
    Report rep;
    rep.instances = {sm->name};
    const Algebra& S = *sm->alg;
    auto Ss = S.sample(r);
    using P = std::pair<Key, Key>;
    check_all<P>(rep, "pairing product display", !S.finite(), detail::all_pairs(Ss, Ss), [&](const P& q) -> std::optional<json> {
        Element expect(S.dom);
        if (order == PairOrder::BA) {
            Key b = sm->r_part(q.first), a = sm->a_part(q.first), b2 = sm->r_part(q.second), a2 = sm->a_part(q.second);
            Tensor ta = cover(*p.A, Cover::T1, p.A->e(a), p.A->e(a2));
            Tensor tb = cover(*p.B, Cover::T2, p.B->e(b), p.B->e(b2));
            for (const auto& [ka, ca] : ta.terms())
                for (const auto& [kb, cb] : tb.terms())
                    expect.add_term(concat(kb[0], ka[1]), ca * cb * p.pair(ka[0], kb[1]));
        } else {
            Key a = sm->r_part(q.first), b = sm->a_part(q.first), a2 = sm->r_part(q.second), b2 = sm->a_part(q.second);
            Tensor ta = cover(*p.A, Cover::T2, p.A->e(a), p.A->e(a2));
            Tensor tb = cover(*p.B, Cover::T1, p.B->e(b), p.B->e(b2));
            for (const auto& [ka, ca] : ta.terms())
                for (const auto& [kb, cb] : tb.terms())
                    expect.add_term(concat(ka[0], kb[1]), ca * cb * p.pair(ka[1], kb[0]));
        }
        if (S.product(q.first, q.second) != expect) return pair_witness(q.first, q.second);
        return std::nullopt;
    });
    return rep;
}

// Left module B of B # A: (b # a)b' = b(a ▷ b').
inline AlgModulePtr standard_module(const PairPtr& p, const SmashPtr& ba)
{
    auto m = std::make_shared<AlgModule>();
    m->name = "standard(" + ba->name + ")";
    m->B = ba->alg;
    m->V = p->B->alg;
    m->act = [p, ba](const Key& k, const Key& b2) {
        return mul(*p->B->alg, p->B->e(ba->r_part(k)), act_AonB(*p, ba->a_part(k), p->B->e(b2)));
    };
    return m;
}

// Right module A of B # A: a'(b # a) = (a' ◁ b)a.
inline std::function<Element(const Key& a2, const Key& k)> standard_right_module(const PairPtr& p, const SmashPtr& ba)
{
    return [p, ba](const Key& a2, const Key& k) {
        return mul(*p->A->alg, ract_BonA(*p, p->A->e(a2), ba->r_part(k)), p->A->e(ba->a_part(k)));
    };
}

// Rank of z ↦ (operator of z on V) over the basis of the acting algebra.
inline int representation_rank(const AlgModule& m)
{
    DomainId d = intern_domain(m.name + "|operators");
    std::vector<Element> ops;
    for (const auto& z : *m.B->basis) {
        Element o(d);
        for (const auto& v : *m.V->basis)
            for (const auto& [k, c] : m.act(z, v).terms()) o.add_term(concat(v, k), c);
        ops.push_back(o);
    }
    return rank_of(ops);
}

inline int right_representation_rank(const Algebra& acting, const Space& V,
                                     const std::function<Element(const Key&, const Key&)>& ract)
{
    DomainId d = intern_domain(acting.name + "|right-operators");
    std::vector<Element> ops;
    for (const auto& z : *acting.basis) {
        Element o(d);
        for (const auto& v : *V.basis)
            for (const auto& [k, c] : ract(v, z).terms()) o.add_term(concat(v, k), c);
        ops.push_back(o);
    }
    return rank_of(ops);
}

// ---------------------------------------------------------------------------
// Heisenberg commutation rules
//   R(a ⊗ b) = Σ⟨a_(1), b_(2)⟩ a_(2) ⊗ b_(1)
//   R'(a ⊗ b) = Σ⟨S⁻¹a_(1), b_(2)⟩ a_(2) ⊗ b_(1)

inline Element heisenberg_rewrite(const DualPair& p, const Element& ab, bool inverse, DomainId d)
{
    const RegularMHA& A = *p.A;
    int n = A.alg->key_len;
    Element r(d);
    for (const auto& [k, c] : ab.terms()) {
        Key a = detail::head(k, n), b = detail::tail(k, n);
        Element eb = p.B->e(b);
        Element e = p.unit_A({eb});
        Tensor t = sweedler_eval(A, SweedlerExpr{A.e(a), {leg(inverse ? LegMap::SInv : LegMap::Id, std::nullopt, e), leg()}});
        for (const auto& [ks, cc] : t.terms())
            for (const auto& [kb, cb] : act_AonB(p, ks[0], eb).terms()) r.add_term(concat(ks[1], kb), c * cc * cb);
    }
    return r;
}

inline Report heisenberg_check(const PairPtr& pp, int r = 3)
{
    const DualPair& p = *pp;
    Report rep;
    rep.instances = {p.name};
    const Algebra& A = *p.A->alg;
    const Algebra& B = *p.B->alg;
    auto As = A.sample(r);
    auto Bs = B.sample(r);
    bool sampled = !A.finite() || !B.finite();
    DomainId d = intern_domain(p.name + "|AxB");
    using P = std::pair<Key, Key>;
    auto ab = detail::all_pairs(As, Bs);
    check_all<P>(rep, "rewriting maps inverse", sampled, ab, [&](const P& q) -> std::optional<json> {
        Element x = Element::basis(d, concat(q.first, q.second));
        if (heisenberg_rewrite(p, heisenberg_rewrite(p, x, true, d), false, d) != x ||
            heisenberg_rewrite(p, heisenberg_rewrite(p, x, false, d), true, d) != x)
            return pair_witness(q.first, q.second);
        return std::nullopt;
    });
    int n = A.key_len;
    // Operators on B: a ↦ a ▷ ·, b ↦ b·
    auto opA = [&](const Key& a, const Element& v) {
        Element out(B.dom);
        for (const auto& [k, c] : v.terms()) out.axpy(c, act_AonB(p, a, B.e(k)));
        return out;
    };
    auto opB = [&](const Key& b, const Element& v) { return mul(B, B.e(b), v); };
    using T = std::tuple<Key, Key, Key>;
    auto triples = detail::all_triples(As, Bs, Bs);
    check_all<T>(rep, "ab = sum <a1,b2> b1 a2", sampled, triples, [&](const T& t) -> std::optional<json> {
        const auto& [a, b, v] = t;
        Element lhs = opA(a, opB(b, B.e(v)));
        Element rhs(B.dom);
        for (const auto& [k, c] : heisenberg_rewrite(p, Element::basis(d, concat(a, b)), false, d).terms())
            rhs.axpy(c, opB(detail::tail(k, n), opA(detail::head(k, n), B.e(v))));
        if (lhs != rhs) return triple_witness(a, b, v);
        return std::nullopt;
    });
    check_all<T>(rep, "ba = sum <S^-1 a1,b2> a2 b1", sampled, triples, [&](const T& t) -> std::optional<json> {
        const auto& [a, b, v] = t;
        Element lhs = opB(b, opA(a, B.e(v)));
        Element rhs(B.dom);
        for (const auto& [k, c] : heisenberg_rewrite(p, Element::basis(d, concat(a, b)), true, d).terms())
            rhs.axpy(c, opA(detail::head(k, n), opB(detail::tail(k, n), B.e(v))));
        if (lhs != rhs) return triple_witness(a, b, v);
        return std::nullopt;
    });
    return rep;
}

// ---------------------------------------------------------------------------
// B # A → A # B, b # a ↦ S⁻¹a # Sb (anti-multiplicative)

struct AntiIso {
    LinMap map;
    Report certificate;
};

inline AntiIso anti_isomorphism(const PairPtr& p, const SmashPtr& ba, const SmashPtr& ab)
{
    AntiIso out;
    out.map = [p, ba, ab](const Element& z) {
        Element r(ab->alg->dom);
        for (const auto& [k, c] : z.terms())
            r.axpy(c, detail::tensor_elements(ab->alg->dom, antipode_inv(*p->A, p->A->e(ba->a_part(k))),
                                              antipode(*p->B, p->B->e(ba->r_part(k)))));
        return r;
    };
    Report& rep = out.certificate;
    rep.instances = {ba->name, ab->name};
    const Algebra& S1 = *ba->alg;
    const Algebra& S2 = *ab->alg;
    auto Ss = S1.sample(2);
    bool sampled = !S1.finite();
    using P = std::pair<Key, Key>;
    check_all<P>(rep, "anti-multiplicative", sampled, detail::all_pairs(Ss, Ss), [&](const P& q) -> std::optional<json> {
        if (out.map(S1.product(q.first, q.second)) != mul(S2, out.map(S1.e(q.second)), out.map(S1.e(q.first))))
            return pair_witness(q.first, q.second);
        return std::nullopt;
    });
    if (S1.finite()) {
        std::vector<Element> imgs;
        for (const auto& k : *S1.basis) imgs.push_back(out.map(S1.e(k)));
        int rk = rank_of(imgs);
        rep.add("bijective", rk == static_cast<int>(S1.dim()) && S1.dim() == S2.dim(), false,
                json{{"rank", rk}, {"dim", S1.dim()}});
    }
    return out;
}

// A # B → B # A as the anti-isomorphism inverse composed with transposition
// in the faithful representation of A # B on A (finite pairs with
// dim A # B = (dim A)²).
struct SmashIsoResult {
    LinMap map;
    Report certificate;
};

inline SmashIsoResult smash_order_isomorphism(const PairPtr& p, const SmashPtr& ba, const SmashPtr& ab)
{
    const Algebra& SA = *ab->alg;
    const Algebra& SB = *ba->alg;
    if (!SA.finite() || !p->A->finite()) throw Error(ErrorKind::NotFiniteDimensional, ab->name);
    const auto& Abasis = *p->A->alg->basis;
    const std::size_t n = Abasis.size();
    // Matrix coordinates of (a # b) acting on A by (a # b)a' = a(b ▷ a').
    DomainId md = intern_domain(ab->name + "|matrix");
    auto op = [&](const Key& k) {
        Element o(md);
        for (std::size_t j = 0; j < n; ++j) {
            Element img = mul(*p->A->alg, p->A->e(ab->r_part(k)), act_BonA(*p, ab->a_part(k), p->A->e(Abasis[j])));
            for (const auto& [ki, c] : img.terms())
                o.add_term(Key{static_cast<int>(detail::key_index(Abasis, ki)), static_cast<int>(j)}, c);
        }
        return o;
    };
    Echelon ech(true);
    std::vector<Key> keys = *SA.basis;
    for (std::size_t i = 0; i < keys.size(); ++i) ech.insert(op(keys[i]));
    SmashIsoResult out;
    Report& rep = out.certificate;
    rep.instances = {ab->name, ba->name};
    bool full = ech.rank() == static_cast<int>(n * n) && keys.size() == n * n;
    rep.add("faithful and onto End(A)", full, false, json{{"rank", ech.rank()}, {"n", n}});
    if (!full) return out;
    // Transpose in matrix coordinates, then back to A # B, then the inverse anti-isomorphism.
    std::map<Key, Element> table;
    AntiIso anti = anti_isomorphism(p, ba, ab);
    std::vector<Element> anti_imgs;
    for (const auto& k : *SB.basis) anti_imgs.push_back(anti.map(SB.e(k)));
    for (const auto& k : keys) {
        Element o = op(k), t(md);
        for (const auto& [ij, c] : o.terms()) t.add_term(Key{ij[1], ij[0]}, c);
        auto coords = ech.express(t);
        Element in_ab(SA.dom);
        for (const auto& [i, cc] : *coords) in_ab.add_term(keys[i], cc);
        auto pre = linear_solve(anti_imgs, in_ab);
        Element r(SB.dom);
        for (std::size_t i = 0; i < SB.basis->size(); ++i) r.add_term((*SB.basis)[i], (*pre)[i]);
        table.emplace(k, r);
    }
    out.map = linear_map(SB.dom, [table](const Key& k) { return table.at(k); });
    using P = std::pair<Key, Key>;
    check_all<P>(rep, "multiplicative", false, detail::all_pairs(keys, keys), [&](const P& q) -> std::optional<json> {
        if (out.map(SA.product(q.first, q.second)) != mul(SB, table.at(q.first), table.at(q.second)))
            return pair_witness(q.first, q.second);
        return std::nullopt;
    });
    std::vector<Element> imgs;
    for (const auto& [k, v] : table) imgs.push_back(v);
    rep.add("bijective", rank_of(imgs) == static_cast<int>(SB.dim()));
    return out;
}

// ---------------------------------------------------------------------------
// A ◊ B: (a ◊ b)(a' ◊ b') = ⟨a', b⟩ a ◊ b'

inline AlgebraPtr diamond_algebra(const PairPtr& p)
{
    auto D = std::make_shared<Algebra>();
    D->name = "diamond(" + p->A->name + "," + p->B->name + ")";
    D->dom = intern_domain(D->name);
    int n = p->A->alg->key_len;
    D->key_len = n + p->B->alg->key_len;
    if (p->A->finite() && p->B->finite()) {
        std::vector<Key> b;
        for (const auto& x : *p->A->alg->basis)
            for (const auto& y : *p->B->alg->basis) b.push_back(concat(x, y));
        D->basis = b;
    }
    D->sampler = [p](int r) {
        std::vector<Key> b;
        for (const auto& x : p->A->alg->sample(r))
            for (const auto& y : p->B->alg->sample(r)) b.push_back(concat(x, y));
        return b;
    };
    DomainId d = D->dom;
    D->product = [p, n, d](const Key& u, const Key& v) {
        Scalar c = p->pair(detail::head(v, n), detail::tail(u, n));
        if (c.is_zero()) return Element(d);
        return Element::basis(d, concat(detail::head(u, n), detail::tail(v, n)), c);
    };
    return D;
}

// a ◊ b ↦ the matrix of a' ↦ ⟨a', b⟩a in the basis of A, in M(n, ℂ).
inline LinMap diamond_to_matrices(const PairPtr& p, const AlgebraPtr& M)
{
    const auto Abasis = *p->A->alg->basis;
    int n = p->A->alg->key_len;
    return linear_map(M->dom, [p, Abasis, n, M](const Key& k) {
        Key a = detail::head(k, n), b = detail::tail(k, n);
        int i = static_cast<int>(detail::key_index(Abasis, a));
        Element r(M->dom);
        for (std::size_t j = 0; j < Abasis.size(); ++j) r.add_term(Key{i, static_cast<int>(j), 0}, p->pair(Abasis[j], b));
        return r;
    });
}

// γ(a # φ(c·)) = Σ aS(c_(1)) ◊ φ(c_(2)·) for A finite with dual Â.
struct RankOneRealization {
    PairPtr pair;
    SmashPtr smash;      // A # Â
    AlgebraPtr diamond;  // A ◊ Â
    AlgebraPtr matrices; // M(n, ℂ)
    LinMap gamma;
    LinMap to_matrices;
    int image_dim = 0;
    Report certificate;
};

inline RankOneRealization rank_one_realization(const AqgPtr& g)
{
    const RegularMHA& h = *g->base;
    if (!h.finite()) throw Error(ErrorKind::NotFiniteDimensional, h.name);
    RankOneRealization out;
    AqgPtr dual = finite_dual(g);
    out.pair = aqg_pair(g, dual);
    out.smash = pairing_smash(out.pair, PairOrder::AB);
    out.diamond = diamond_algebra(out.pair);
    const auto& basis = *h.alg->basis;
    const std::size_t n = basis.size();
    out.matrices = matrix_algebra(static_cast<int>(n), complex_numbers()->alg);
    Matrix G = dual->dual_origin->gram;
    Matrix Ginv = *invert(G);
    Matrix GT = transpose(G);
    Matrix GinvT = transpose(Ginv);
    // ω_k = φ(· e_k) = φ(c_k ·) with Gᵀ c_k = G e_k.
    std::vector<Element> c(n);
    for (std::size_t k = 0; k < n; ++k) {
        Element ck(h.dom());
        for (std::size_t i = 0; i < n; ++i) {
            Scalar s(0);
            for (std::size_t j = 0; j < n; ++j) s += GinvT[i][j] * G[j][k];
            ck.add_term(basis[i], s);
        }
        c[k] = ck;
    }
    // Coordinates of φ(y ·) in the ω basis: t = G⁻¹ Gᵀ y.
    DomainId dd = dual->base->dom();
    auto phi_left = [&](const Key& y) {
        std::size_t yi = detail::key_index(basis, y);
        Element r(dd);
        for (std::size_t k = 0; k < n; ++k) {
            Scalar s(0);
            for (std::size_t j = 0; j < n; ++j) s += Ginv[k][j] * GT[j][yi];
            r.add_term(basis[k], s);
        }
        return r;
    };
    DomainId D = out.diamond->dom;
    std::map<Key, Element> table;
    const Algebra& A = *h.alg;
    for (std::size_t ai = 0; ai < n; ++ai)
        for (std::size_t k = 0; k < n; ++k) {
            Element r(D);
            for (const auto& [ks, cc] : full_coproduct(h, c[k]).terms())
                r.axpy(cc, detail::tensor_elements(D, mul(A, A.e(basis[ai]), antipode(h, A.e(ks[0]))), phi_left(ks[1])));
            table.emplace(concat(basis[ai], basis[k]), r);
        }
    out.gamma = linear_map(D, [table](const Key& k) { return table.at(k); });
    out.to_matrices = diamond_to_matrices(out.pair, out.matrices);

    Report& rep = out.certificate;
    rep.instances = {h.name};
    const Algebra& S = *out.smash->alg;
    const auto& keys = *S.basis;
    using P = std::pair<Key, Key>;
    auto pairs = detail::all_pairs(keys, keys);
    check_all<P>(rep, "gamma multiplicative", false, pairs, [&](const P& q) -> std::optional<json> {
        if (out.gamma(S.product(q.first, q.second)) != mul(*out.diamond, table.at(q.first), table.at(q.second)))
            return pair_witness(q.first, q.second);
        return std::nullopt;
    });
    std::vector<Element> imgs;
    for (const auto& k : keys) imgs.push_back(table.at(k));
    int rk = rank_of(imgs);
    rep.add("gamma bijective", rk == static_cast<int>(n * n), false, json{{"rank", rk}});
    // The operators of A # Â on A and the rank-one operators agree.
    AlgModule m{"standard(" + S.name + ")", out.smash->alg, h.alg, [&](const Key& k, const Key& a2) {
                    return mul(A, A.e(out.smash->r_part(k)), act_BonA(*out.pair, out.smash->a_part(k), A.e(a2)));
                }};
    out.image_dim = representation_rank(m);
    rep.add("image dimension", out.image_dim == static_cast<int>(n * n), false, json{{"dim", out.image_dim}},
            std::to_string(out.image_dim));
    check_all<Key>(rep, "gamma intertwines the actions on A", false, keys, [&](const Key& k) -> std::optional<json> {
        for (const auto& a2 : basis) {
            Element via(h.dom());
            for (const auto& [dk, dc] : table.at(k).terms())
                via.axpy(dc * out.pair->pair(a2, detail::tail(dk, A.key_len)), A.e(detail::head(dk, A.key_len)));
            if (via != m.act(k, a2)) return json{{"z", to_json(k)}, {"a", to_json(a2)}};
        }
        return std::nullopt;
    });
    const Algebra& Dg = *out.diamond;
    check_all<P>(rep, "diamond to matrices multiplicative", false, detail::all_pairs(*Dg.basis, *Dg.basis),
                 [&](const P& q) -> std::optional<json> {
                     if (out.to_matrices(Dg.product(q.first, q.second)) !=
                         mul(*out.matrices, out.to_matrices(Dg.e(q.first)), out.to_matrices(Dg.e(q.second))))
                         return pair_witness(q.first, q.second);
                     return std::nullopt;
                 });
    std::vector<Element> mimgs;
    for (const auto& k : *Dg.basis) mimgs.push_back(out.to_matrices(Dg.e(k)));
    rep.add("diamond to matrices bijective", rank_of(mimgs) == static_cast<int>(n * n));
    return out;
}

// Fixed points of the A-action on M(B): expected to be the scalars.
inline FixedPoints pairing_fixed_points(const PairPtr& p)
{
    return fixed_points(pairing_action_AonB(p), FixedWhere::InMR);
}

}  // namespace mha

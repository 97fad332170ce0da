#pragma once

#include "instances.hpp"
#include "sweedler.hpp"

namespace mha {

// Left module of a regular MHA on a space with a basis.
struct Module {
    std::string name;
    MhaPtr A;
    SpacePtr V;
    std::function<Element(const Key& a, const Key& v)> act;
    // Some e in A with e·v = v for all items (the module is unital).
    std::function<Element(const std::vector<Element>&)> unit_for;
    json description;
};

// Module algebra: the space is an algebra R.
struct Action : Module {
    AlgebraPtr R;
};

using ModulePtr = std::shared_ptr<const Module>;
using ActionPtr = std::shared_ptr<const Action>;

inline Element act(const Module& m, const Element& a, const Element& x)
{
    Element r(m.V->dom);
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kx, cx] : x.terms()) r.axpy(ca * cx, m.act(ka, kx));
    return r;
}

inline Element act(const Module& m, const Key& a, const Element& x) { return act(m, m.A->e(a), x); }

// e in A with e·v = v, by an adaptive solve over growing windows of A.
inline std::optional<Element> solve_module_unit(const Module& m, const std::vector<Element>& items, int rounds = 3)
{
    const Algebra& A = *m.A->alg;
    DomainId sd = intern_domain(m.name + "|unit-system");
    int radius = std::max(1, key_radius(items) + 1);
    for (int round = 0; round < rounds; ++round) {
        std::vector<Key> keys = A.sample(radius << round);
        std::vector<Element> gens;
        for (const auto& b : keys) {
            Element g(sd);
            for (std::size_t i = 0; i < items.size(); ++i)
                for (const auto& [k, c] : act(m, b, items[i]).terms())
                    g.add_term(concat(Key{static_cast<std::int32_t>(i)}, k), c);
            gens.push_back(g);
        }
        Element target(sd);
        for (std::size_t i = 0; i < items.size(); ++i)
            for (const auto& [k, c] : items[i].terms()) target.add_term(concat(Key{static_cast<std::int32_t>(i)}, k), c);
        if (auto sol = linear_solve(gens, target)) {
            Element e(A.dom);
            for (std::size_t i = 0; i < keys.size(); ++i) e.add_term(keys[i], (*sol)[i]);
            return e;
        }
        if (A.finite()) break;
    }
    return std::nullopt;
}

inline void set_default_unit(Module& m)
{
    if (m.A->alg->identity) {
        Element one = *m.A->alg->identity;
        m.unit_for = [one](const std::vector<Element>&) { return one; };
        return;
    }
    Module shell = m;
    shell.unit_for = nullptr;
    m.unit_for = [shell](const std::vector<Element>& items) {
        if (auto e = solve_module_unit(shell, items)) return *e;
        throw Error(ErrorKind::NotFound, "no unit for the module " + shell.name);
    };
}

inline Element module_unit(const Module& m, const std::vector<Element>& items) { return m.unit_for(items); }
inline Element module_unit(const Module& m, const Element& x) { return m.unit_for({x}); }

// ---------------------------------------------------------------------------
// Verification

namespace detail {

inline std::vector<std::pair<Key, Key>> all_pairs(const std::vector<Key>& a, const std::vector<Key>& b)
{
    std::vector<std::pair<Key, Key>> v;
    for (const auto& x : a)
        for (const auto& y : b) v.emplace_back(x, y);
    return v;
}

inline std::vector<std::tuple<Key, Key, Key>> all_triples(const std::vector<Key>& a, const std::vector<Key>& b,
                                                          const std::vector<Key>& c)
{
    std::vector<std::tuple<Key, Key, Key>> v;
    for (const auto& x : a)
        for (const auto& y : b)
            for (const auto& z : c) v.emplace_back(x, y, z);
    return v;
}

}  // namespace detail

struct ModuleSample {
    std::vector<Key> a;
    std::vector<Key> v;
};

inline ModuleSample module_sample(const Module& m, int r)
{
    return ModuleSample{m.A->alg->sample(r), m.V->sample(r)};
}

inline Report verify_module(const Module& m, const ModuleSample& s)
{
    Report rep;
    rep.instances = {m.name};
    const Algebra& A = *m.A->alg;
    bool sampled = !A.finite() || !m.V->finite();
    using T = std::tuple<Key, Key, Key>;
    check_all<T>(rep, "module associativity", sampled, detail::all_triples(s.a, s.a, s.v),
                 [&](const T& t) -> std::optional<json> {
                     const auto& [a, b, v] = t;
                     if (act(m, A.product(a, b), m.V->e(v)) != act(m, a, m.act(b, v))) return triple_witness(a, b, v);
                     return std::nullopt;
                 });
    check_all<Key>(rep, "unitality witnesses", sampled, s.v, [&](const Key& v) -> std::optional<json> {
        try {
            Element e = module_unit(m, m.V->e(v));
            if (act(m, e, m.V->e(v)) != m.V->e(v)) return json{{"v", to_json(v)}, {"e", to_json(e)}};
        } catch (const Error& err) {
            return json{{"v", to_json(v)}, {"error", err.what()}};
        }
        return std::nullopt;
    });
    if (A.finite() && m.V->finite()) {
        // x with a·x = 0 for all a must vanish.
        DomainId d = intern_domain(m.name + "|nondegeneracy");
        std::vector<Element> images;
        for (const auto& x : *m.V->basis) {
            Element img(d);
            for (const auto& a : *A.basis)
                for (const auto& [k, c] : m.act(a, x).terms()) img.add_term(concat(a, k), c);
            images.push_back(img);
        }
        auto ker = kernel_of(images);
        rep.add("non-degenerate", ker.empty(), false, json{{"kernel_dim", ker.size()}});
    }
    return rep;
}

// a(xy) = Σ (a_(1)x)(a_(2)y) with legs covered by units e1·x = x, e2·y = y.
inline Element module_algebra_rhs(const Action& s, const Key& a, const Element& x, const Element& y,
                                  Strategy st = Strategy::LeftFirst)
{
    const Algebra& R = *s.R;
    Element e1 = module_unit(s, x), e2 = module_unit(s, y);
    Tensor t = sweedler_eval(*s.A, SweedlerExpr{s.A->e(a), {leg(LegMap::Id, std::nullopt, e1), leg(LegMap::Id, std::nullopt, e2)}}, st);
    Element r(R.dom);
    for (const auto& [ks, c] : t.terms()) r.axpy(c, mul(R, act(s, ks[0], x), act(s, ks[1], y)));
    return r;
}

inline Report verify_module_algebra(const Action& s, const ModuleSample& smp)
{
    Report rep = verify_module(s, smp);
    const Algebra& R = *s.R;
    const RegularMHA& h = *s.A;
    bool sampled = !h.finite() || !R.finite();
    using T = std::tuple<Key, Key, Key>;
    auto triples = detail::all_triples(smp.a, smp.v, smp.v);
    check_all<T>(rep, "module algebra law", sampled, triples, [&](const T& t) -> std::optional<json> {
        const auto& [a, x, y] = t;
        if (act(s, a, R.product(x, y)) != module_algebra_rhs(s, a, R.e(x), R.e(y))) return triple_witness(a, x, y);
        return std::nullopt;
    });
    // (ax)x' = Σ a_(1)(x (S(a_(2))x'))
    check_all<T>(rep, "left multiplication identity", sampled, triples, [&](const T& t) -> std::optional<json> {
        const auto& [a, x, x2] = t;
        Element e = module_unit(s, R.e(x2));
        Tensor tt = sweedler_eval(h, SweedlerExpr{h.e(a), {leg(), leg(LegMap::S, std::nullopt, e)}});
        Element rhs(R.dom);
        for (const auto& [ks, c] : tt.terms()) rhs.axpy(c, act(s, ks[0], mul(R, R.e(x), act(s, ks[1], R.e(x2)))));
        if (mul(R, s.act(a, x), R.e(x2)) != rhs) return triple_witness(a, x, x2);
        return std::nullopt;
    });
    // x(ax') = Σ a_(2)((S⁻¹(a_(1))x)x')
    check_all<T>(rep, "right multiplication identity", sampled, triples, [&](const T& t) -> std::optional<json> {
        const auto& [a, x, x2] = t;
        Element e = module_unit(s, R.e(x));
        Tensor tt = sweedler_eval(h, SweedlerExpr{h.e(a), {leg(LegMap::SInv, std::nullopt, e), leg()}});
        Element rhs(R.dom);
        for (const auto& [ks, c] : tt.terms()) rhs.axpy(c, act(s, ks[1], mul(R, act(s, ks[0], R.e(x)), R.e(x2))));
        if (mul(R, R.e(x), s.act(a, x2)) != rhs) return triple_witness(a, x, x2);
        return std::nullopt;
    });
    return rep;
}

inline Report verify_module_algebra(const Action& s, int r = 5) { return verify_module_algebra(s, module_sample(s, r)); }

// ---------------------------------------------------------------------------
// Built-in actions

inline ActionPtr make_action(std::string name, MhaPtr A, AlgebraPtr R, std::function<Element(const Key&, const Key&)> f)
{
    auto s = std::make_shared<Action>();
    s->name = std::move(name);
    s->A = std::move(A);
    s->R = R;
    s->V = R;
    s->act = std::move(f);
    set_default_unit(*s);
    return s;
}

// a·x = ε(a)x
inline ActionPtr trivial_action(const MhaPtr& A, const AlgebraPtr& R)
{
    auto s = make_action("trivial(" + A->name + "," + R->name + ")", A, R,
                         [A, R](const Key& a, const Key& x) { return A->counit(a) * R->e(x); });
    if (!A->alg->identity) {
        // any e with ε(e) = 1 is a unit
        auto sp = std::const_pointer_cast<Action>(s);
        sp->unit_for = [A](const std::vector<Element>&) {
            for (const auto& k : A->alg->sample(3))
                if (!A->counit(k).is_zero()) return A->e(k) * A->counit(k).inverse();
            throw Error(ErrorKind::NotFound, "no element with nonzero counit in " + A->name);
        };
    }
    return s;
}

// a·x = Σ a_(1) x S(a_(2))
inline ActionPtr adjoint_action(const MhaPtr& h)
{
    AlgebraPtr R = h->alg;
    return make_action("adjoint(" + h->name + ")", h, R, [h, R](const Key& a, const Key& x) {
        Tensor t = sweedler_eval(*h, SweedlerExpr{h->e(a), {leg(LegMap::Id, std::nullopt, R->e(x)), leg(LegMap::S)}});
        return multiply_legs(*R, t);
    });
}

// C[G] on K(G): λ_q·δ_p = δ_{qp}
inline ActionPtr translation_action(const GroupPtr& G)
{
    MhaPtr A = group_algebra(G);
    MhaPtr K = function_algebra(G);
    AlgebraPtr R = K->alg;
    DomainId d = R->dom;
    return make_action("translation(" + G->name + ")", A, R,
                       [G, d](const Key& q, const Key& p) { return Element::basis(d, G->mul(q, p)); });
}

// K(G) on C[G]: δ_p·λ_q = [p=q]λ_q
inline ActionPtr grading_action(const GroupPtr& G)
{
    MhaPtr A = function_algebra(G);
    AlgebraPtr R = group_algebra(G)->alg;
    DomainId d = R->dom;
    auto s = make_action("grading(" + G->name + ")", A, R,
                         [d](const Key& p, const Key& q) { return p == q ? Element::basis(d, q) : Element(d); });
    DomainId ad = A->dom();
    std::const_pointer_cast<Action>(s)->unit_for = [ad](const std::vector<Element>& items) {
        Element e(ad);
        std::set<Key> supp;
        for (const auto& x : items)
            for (const auto& [k, c] : x.terms()) supp.insert(k);
        for (const auto& k : supp) e.add_term(k, Scalar(1));
        return e;
    };
    return s;
}

// ---------------------------------------------------------------------------
// Multipliers of R

// (am)x = Σ a_(1)(m(S(a_(2))x)),  x(am) = Σ a_(2)((S⁻¹(a_(1))x)m)
inline Multiplier extend_action_to_multipliers(const ActionPtr& s, const Element& a, const Multiplier& m)
{
    LinMap left = [s, a, m](const Element& x) {
        const RegularMHA& h = *s->A;
        Element e = module_unit(*s, x);
        Element r(s->R->dom);
        for (const auto& [ka, ca] : a.terms()) {
            Tensor t = sweedler_eval(h, SweedlerExpr{h.e(ka), {leg(), leg(LegMap::S, std::nullopt, e)}});
            for (const auto& [ks, c] : t.terms()) r.axpy(ca * c, act(*s, ks[0], m.left(act(*s, ks[1], x))));
        }
        return r;
    };
    LinMap right = [s, a, m](const Element& x) {
        const RegularMHA& h = *s->A;
        Element e = module_unit(*s, x);
        Element r(s->R->dom);
        for (const auto& [ka, ca] : a.terms()) {
            Tensor t = sweedler_eval(h, SweedlerExpr{h.e(ka), {leg(LegMap::SInv, std::nullopt, e), leg()}});
            for (const auto& [ks, c] : t.terms()) r.axpy(ca * c, act(*s, ks[1], m.right(act(*s, ks[0], x))));
        }
        return r;
    };
    return Multiplier{left, right};
}

enum class FixedWhere { InR, InMR };

struct FixedPoints {
    std::vector<Multiplier> basis;
    // Elements of R when the fixed points lie in R (InR, or InMR with R unital).
    std::vector<Element> elements;
    Report certificate;
    int dim() const { return static_cast<int>(basis.size()); }
};

// Candidate basis of M(R) for a finite R: R itself when unital, otherwise
// the double centralizers.
inline std::vector<Multiplier> multiplier_basis(const AlgebraPtr& R)
{
    std::vector<Multiplier> out;
    if (R->identity) {
        for (const auto& k : *R->basis) out.push_back(as_multiplier(R, R->e(k)));
        return out;
    }
    return multiplier_space(R);
}

// a(mx) = m(ax) and a(xm) = (ax)m for fixed m.
inline Report certify_fixed_commutation(const ActionPtr& s, const std::vector<Multiplier>& ms, const std::vector<Key>& A_sample,
                                        const std::vector<Key>& R_sample)
{
    Report rep;
    using P = std::pair<Key, Key>;
    auto pairs = detail::all_pairs(A_sample, R_sample);
    for (std::size_t i = 0; i < ms.size(); ++i) {
        const Multiplier& m = ms[i];
        check_all<P>(rep, "fixed commutation " + std::to_string(i), false, pairs, [&](const P& p) -> std::optional<json> {
            Element x = s->R->e(p.second);
            if (act(*s, p.first, m.left(x)) != m.left(s->act(p.first, p.second))) return pair_witness(p.first, p.second);
            if (act(*s, p.first, m.right(x)) != m.right(s->act(p.first, p.second))) return pair_witness(p.first, p.second);
            return std::nullopt;
        });
    }
    return rep;
}

inline FixedPoints fixed_points(const ActionPtr& s, FixedWhere where)
{
    const AlgebraPtr& R = s->R;
    const RegularMHA& h = *s->A;
    if (!R->finite() || !h.finite())
        throw Error(ErrorKind::InfiniteDimensionalNoOracle, "fixed points of " + s->name + " need finite dimension");
    const auto& RB = *R->basis;
    const auto& AB = *h.alg->basis;
    FixedPoints out;
    DomainId sys = intern_domain(s->name + "|fixed-system");
    if (where == FixedWhere::InR) {
        std::vector<Element> images;
        for (const auto& x : RB) {
            Element img(sys);
            for (const auto& a : AB)
                for (const auto& [k, c] : (s->act(a, x) - h.counit(a) * R->e(x)).terms()) img.add_term(concat(a, k), c);
            images.push_back(img);
        }
        for (const auto& v : kernel_of(images)) {
            Element m(R->dom);
            for (std::size_t i = 0; i < RB.size(); ++i) m.add_term(RB[i], v[i]);
            out.elements.push_back(m);
            out.basis.push_back(as_multiplier(R, m));
        }
    } else {
        std::vector<Multiplier> cand = multiplier_basis(R);
        std::vector<Element> images;
        for (const auto& m : cand) {
            Element img(sys);
            for (const auto& a : AB) {
                Multiplier am = extend_action_to_multipliers(s, h.e(a), m);
                Multiplier diff = multiplier_sum({{Scalar(1), am}, {-h.counit(a), m}});
                for (const auto& [k, c] : multiplier_coordinates(*R, diff, RB, sys).terms())
                    img.add_term(concat(a, k), c);
            }
            images.push_back(img);
        }
        for (const auto& v : kernel_of(images)) {
            std::vector<std::pair<Scalar, Multiplier>> terms;
            for (std::size_t i = 0; i < cand.size(); ++i)
                if (!v[i].is_zero()) terms.emplace_back(v[i], cand[i]);
            Multiplier m = multiplier_sum(terms);
            out.basis.push_back(m);
            if (R->identity) out.elements.push_back(m.left(*R->identity));
        }
    }
    out.certificate = certify_fixed_commutation(s, out.basis, AB, RB);
    out.certificate.instances = {s->name};
    return out;
}

// ---------------------------------------------------------------------------
// Inner actions and cocycles

// Linear map A → M(R) given on basis keys.
using MultiplierMap = std::function<Multiplier(const Key&)>;

inline Multiplier apply_multiplier_map(const MultiplierMap& g, const Element& a)
{
    std::vector<std::pair<Scalar, Multiplier>> terms;
    for (const auto& [k, c] : a.terms()) terms.emplace_back(c, g(k));
    return multiplier_sum(terms);
}

// Scalar embedding a ↦ ε(a)1.
inline MultiplierMap counit_embedding(const MhaPtr& h)
{
    return [h](const Key& a) { return multiplier_scale(h->counit(a), identity_multiplier()); };
}

// The identity embedding of A into M(A).
inline MultiplierMap identity_embedding(const MhaPtr& h)
{
    AlgebraPtr A = h->alg;
    return [A](const Key& a) { return as_multiplier(A, A->e(a)); };
}

// e in A with γ(e)x = x and xγ(e) = x for all items.
inline std::optional<Element> gamma_unit(const RegularMHA& h, const Algebra& R, const MultiplierMap& g,
                                         const std::vector<Element>& items)
{
    if (h.alg->identity) {
        Multiplier one = apply_multiplier_map(g, *h.alg->identity);
        bool ok = true;
        for (const auto& x : items) ok = ok && one.left(x) == x && one.right(x) == x;
        if (ok) return h.alg->identity;
    }
    DomainId sd = intern_domain(R.name + "|gamma-unit");
    std::vector<Key> keys = h.alg->sample(std::max(2, key_radius(items) + 2));
    std::vector<Element> gens;
    for (const auto& b : keys) {
        Element v(sd);
        Multiplier gb = g(b);
        for (std::size_t i = 0; i < items.size(); ++i) {
            for (const auto& [k, c] : gb.left(items[i]).terms()) v.add_term(concat(Key{0, int(i)}, k), c);
            for (const auto& [k, c] : gb.right(items[i]).terms()) v.add_term(concat(Key{1, int(i)}, k), c);
        }
        gens.push_back(v);
    }
    Element target(sd);
    for (std::size_t i = 0; i < items.size(); ++i)
        for (const auto& [k, c] : items[i].terms()) {
            target.add_term(concat(Key{0, int(i)}, k), c);
            target.add_term(concat(Key{1, int(i)}, k), c);
        }
    auto sol = linear_solve(gens, target);
    if (!sol) return std::nullopt;
    Element e(h.dom());
    for (std::size_t i = 0; i < keys.size(); ++i) e.add_term(keys[i], (*sol)[i]);
    return e;
}

inline Report verify_unital_homomorphism(const MhaPtr& h, const AlgebraPtr& R, const MultiplierMap& g, int r = 3)
{
    Report rep;
    auto As = h->alg->sample(r);
    auto Rs = R->sample(r);
    using P = std::pair<Key, Key>;
    check_all<P>(rep, "gamma multiplicative", !h->finite(), detail::all_pairs(As, As),
                 [&](const P& p) -> std::optional<json> {
                     Multiplier lhs = apply_multiplier_map(g, h->alg->product(p.first, p.second));
                     Multiplier rhs = multiplier_product(g(p.first), g(p.second));
                     if (!multiplier_equal(*R, lhs, rhs, Rs)) return pair_witness(p.first, p.second);
                     return std::nullopt;
                 });
    check_all<Key>(rep, "gamma unital", !R->finite(), Rs, [&](const Key& x) -> std::optional<json> {
        if (!gamma_unit(*h, *R, g, {R->e(x)})) return json{{"x", to_json(x)}};
        return std::nullopt;
    });
    return rep;
}

// a·x = Σ γ(a_(1)) x γ(S(a_(2)))
inline ActionPtr inner_action_from(const MhaPtr& h, const AlgebraPtr& R, const MultiplierMap& g)
{
    Report hom = verify_unital_homomorphism(h, R, g);
    if (!hom.ok()) throw Error(ErrorKind::NotUnitalHomomorphism, hom.failures());
    return make_action("inner(" + h->name + "," + R->name + ")", h, R, [h, R, g](const Key& a, const Key& x) {
        Element ex = R->e(x);
        Element e = *gamma_unit(*h, *R, g, {ex});
        Tensor t = sweedler_eval(*h, SweedlerExpr{h->e(a), {leg(LegMap::Id, std::nullopt, e), leg(LegMap::S)}});
        Element r(R->dom);
        for (const auto& [ks, c] : t.terms()) r.axpy(c, g(ks[1]).right(g(ks[0]).left(ex)));
        return r;
    });
}

inline bool is_inner_witness(const ActionPtr& s, const MultiplierMap& g, int r = 3)
{
    ActionPtr inner;
    try {
        inner = inner_action_from(s->A, s->R, g);
    } catch (const Error&) {
        return false;
    }
    for (const auto& a : s->A->alg->sample(r))
        for (const auto& x : s->R->sample(r))
            if (s->act(a, x) != inner->act(a, x)) return false;
    return true;
}

struct CocycleData {
    MultiplierMap gamma;
};

// Conditions of cocycle equivalence between act1 and act2 (A unital).
inline Report verify_cocycle(const CocycleData& c, const ActionPtr& act1, const ActionPtr& act2)
{
    const MhaPtr& h = act1->A;
    if (!h->alg->identity) throw Error(ErrorKind::NotHopf, h->name + " has no identity");
    if (act2->A->name != h->name) throw Error(ErrorKind::AlgebraMismatch, "actions of different algebras");
    const AlgebraPtr& R = act1->R;
    Report rep;
    rep.instances = {act1->name, act2->name};
    auto As = h->alg->sample(3);
    auto Rs = R->sample(3);
    bool sampled = !h->finite() || !R->finite();
    const Element one = *h->alg->identity;
    rep.add("gamma(1) = 1", multiplier_equal(*R, apply_multiplier_map(c.gamma, one), identity_multiplier(), Rs), sampled);
    auto delta = [&](const Key& a) { return full_coproduct(*h, h->e(a)); };
    using P = std::pair<Key, Key>;
    // γ(aa') = Σ γ(a_(1)) (a_(2) ▷₁ γ(a'))
    check_all<P>(rep, "cocycle condition (i)", sampled, detail::all_pairs(As, As), [&](const P& p) -> std::optional<json> {
        Multiplier lhs = apply_multiplier_map(c.gamma, h->alg->product(p.first, p.second));
        std::vector<std::pair<Scalar, Multiplier>> terms;
        for (const auto& [ks, cc] : delta(p.first).terms())
            terms.emplace_back(cc, multiplier_product(c.gamma(ks[0]),
                                                      extend_action_to_multipliers(act1, h->e(ks[1]), c.gamma(p.second))));
        if (!multiplier_equal(*R, lhs, multiplier_sum(terms), Rs)) return pair_witness(p.first, p.second);
        return std::nullopt;
    });
    // Σ (a_(1) ▷₂ x)γ(a_(2)) = Σ γ(a_(1))(a_(2) ▷₁ x)
    check_all<P>(rep, "cocycle condition (ii)", sampled, detail::all_pairs(As, Rs), [&](const P& p) -> std::optional<json> {
        Element l(R->dom), r(R->dom);
        for (const auto& [ks, cc] : delta(p.first).terms()) {
            l.axpy(cc, c.gamma(ks[1]).right(act2->act(ks[0], p.second)));
            r.axpy(cc, c.gamma(ks[0]).left(act1->act(ks[1], p.second)));
        }
        if (l != r) return pair_witness(p.first, p.second);
        return std::nullopt;
    });
    return rep;
}

// ---------------------------------------------------------------------------
// Module constructions

// m·x for a multiplier m of A: (m e)·x with e·x = x.
inline Element extend_module_to_MA(const Module& mod, const Multiplier& m, const Element& x)
{
    Element e = module_unit(mod, x);
    return act(mod, m.left(e), x);
}

// Diagonal action a(x⊗y) = Σ a_(1)x ⊗ a_(2)y on V1 ⊗ V2.
inline ModulePtr tensor_module(const ModulePtr& m1, const ModulePtr& m2)
{
    auto V = std::make_shared<Space>();
    V->name = "tensor(" + m1->V->name + "," + m2->V->name + ")";
    V->dom = intern_domain(V->name);
    int n = m1->V->key_len;
    V->key_len = n + m2->V->key_len;
    if (m1->V->finite() && m2->V->finite()) {
        std::vector<Key> b;
        for (const auto& x : *m1->V->basis)
            for (const auto& y : *m2->V->basis) b.push_back(concat(x, y));
        V->basis = b;
    }
    V->sampler = [m1, m2](int r) {
        std::vector<Key> b;
        for (const auto& x : m1->V->sample(r))
            for (const auto& y : m2->V->sample(r)) b.push_back(concat(x, y));
        return b;
    };
    auto m = std::make_shared<Module>();
    m->name = "tensor(" + m1->name + "," + m2->name + ")";
    m->A = m1->A;
    m->V = V;
    DomainId d = V->dom;
    m->act = [m1, m2, n, d](const Key& a, const Key& v) {
        Element x = m1->V->e(detail::head(v, n));
        Element y = m2->V->e(detail::tail(v, n));
        Element e1 = module_unit(*m1, x), e2 = module_unit(*m2, y);
        const RegularMHA& h = *m1->A;
        Tensor t = sweedler_eval(h, SweedlerExpr{h.e(a), {leg(LegMap::Id, std::nullopt, e1), leg(LegMap::Id, std::nullopt, e2)}});
        Element r(d);
        for (const auto& [ks, c] : t.terms()) r.axpy(c, detail::tensor_elements(d, act(*m1, ks[0], x), act(*m2, ks[1], y)));
        return r;
    };
    set_default_unit(*m);
    return m;
}

// ℂ with a·λ = ε(a)λ.
inline ModulePtr unit_module(const MhaPtr& h)
{
    auto V = std::make_shared<Space>();
    V->name = "C";
    V->dom = intern_domain("C|unit-module");
    V->basis = std::vector<Key>{Key{0}};
    auto m = std::make_shared<Module>();
    m->name = "unit(" + h->name + ")";
    m->A = h;
    m->V = V;
    DomainId d = V->dom;
    m->act = [h, d](const Key& a, const Key& v) { return Element::basis(d, v, h->counit(a)); };
    set_default_unit(*m);
    if (!h->alg->identity)
        m->unit_for = [h](const std::vector<Element>&) {
            for (const auto& k : h->alg->sample(3))
                if (!h->counit(k).is_zero()) return h->e(k) * h->counit(k).inverse();
            throw Error(ErrorKind::NotFound, "no element with nonzero counit");
        };
    return m;
}

}  // namespace mha

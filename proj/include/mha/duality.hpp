#pragma once

#include "pairing.hpp"

namespace mha {

// b(x # a) = x # (b ▷ a) for a pair (A, B) with A acting on R.
inline ActionPtr dual_action(const SmashPtr& sm, const PairPtr& p)
{
    if (sm->s->A->name != p->A->name)
        throw Error(ErrorKind::AlgebraMismatch, sm->name + " is not a smash product over " + p->A->name);
    auto s = std::const_pointer_cast<Action>(make_action(
        "dual-action(" + sm->name + "," + p->B->name + ")", p->B, sm->alg, [sm, p](const Key& b, const Key& z) {
            Element x = sm->s->R->e(sm->r_part(z));
            return detail::tensor_elements(sm->alg->dom, x, act_BonA(*p, b, p->A->e(sm->a_part(z))));
        }));
    s->unit_for = [sm, p](const std::vector<Element>& zs) {
        std::vector<Element> as;
        for (const auto& z : zs)
            for (const auto& [k, c] : z.terms()) as.push_back(p->A->e(sm->a_part(k)));
        return p->unit_B(as);
    };
    return s;
}

inline SmashPtr bismash(const SmashPtr& sm, const PairPtr& p, const SmashOptions& opt = {})
{
    return smash(dual_action(sm, p), opt);
}

// Fixed points of the dual action in M(R # A) against π_R(M(R)).
inline Report fixed_point_theorem_check(const SmashPtr& sm, const PairPtr& p)
{
    Report rep;
    rep.instances = {sm->name, p->name};
    ActionPtr da = dual_action(sm, p);
    FixedPoints fp = fixed_points(da, FixedWhere::InMR);
    rep.merge(fp.certificate);
    const Algebra& B = *sm->alg;
    DomainId d = intern_domain(sm->name + "|fixed-coords");
    std::vector<Element> fixed, embedded;
    for (const auto& m : fp.basis) fixed.push_back(multiplier_coordinates(B, m, *B.basis, d));
    for (const auto& m : multiplier_basis(sm->s->R)) embedded.push_back(multiplier_coordinates(B, pi_R(sm, m), *B.basis, d));
    bool same = same_span(fixed, embedded);
    int rf = rank_of(fixed), re = rank_of(embedded);
    rep.add("fixed points = pi_R(M(R))", same, false, json{{"fixed_dim", rf}, {"embedded_dim", re}},
            std::to_string(rf) + " = " + std::to_string(re));
    return rep;
}

// ((x # a) # b)z = (x # a)(b z) on R # A.
inline AlgModulePtr bismash_standard_module(const SmashPtr& bis, const SmashPtr& sm)
{
    auto m = std::make_shared<AlgModule>();
    m->name = "standard(" + bis->name + ")";
    m->B = bis->alg;
    m->V = sm->alg;
    m->act = [bis, sm](const Key& k, const Key& z) {
        Element bz = act(*bis->s, bis->a_part(k), sm->alg->e(z));
        return mul(*sm->alg, sm->alg->e(bis->r_part(k)), bz);
    };
    return m;
}

// ---------------------------------------------------------------------------
// The bismash product in the W picture
//
// P(z) = W⁻¹ ρ(z) W acts on R ⊗ A.  The target algebra R ⊗ U acts on R ⊗ A
// by (x ⊗ u)(x' ⊗ a') = xx' ⊗ u·a'; P(z) is written in that basis of
// operators, which gives a linear map Ψ: (R # A) # B → R ⊗ U.

struct OperatorIso {
    SmashPtr bis;
    AlgebraPtr target;
    std::map<Key, Element> psi;  // on bismash basis keys
    Report certificate;

    Element operator()(const Element& z) const
    {
        Element r(target->dom);
        for (const auto& [k, c] : z.terms()) r.axpy(c, psi.at(k));
        return r;
    }
};

namespace detail {

inline Element operator_on_RA(const SmashPtr& sm, const std::function<Element(const Element&)>& T, DomainId d)
{
    Element o(d);
    for (const auto& y : *sm->RA->basis)
        for (const auto& [k, c] : T(sm->RA->e(y)).terms()) o.add_term(concat(y, k), c);
    return o;
}

}  // namespace detail

inline OperatorIso operator_isomorphism(const SmashPtr& sm, const SmashPtr& bis, const AlgebraPtr& U,
                                        const std::function<Element(const Key& u, const Key& a)>& actU,
                                        long multiplicative_budget = 50000, std::uint64_t seed = 1)
{
    const Algebra& R = *sm->s->R;
    const RegularMHA& A = *sm->s->A;
    if (!R.finite() || !A.finite() || !bis->alg->finite() || !U->finite())
        throw Error(ErrorKind::NotFiniteDimensional, bis->name);
    OperatorIso out;
    out.bis = bis;
    out.target = tensor_algebra(sm->s->R, U);
    Report& rep = out.certificate;
    rep.instances = {bis->name, out.target->name};
    DomainId od = intern_domain(bis->name + "|operators on R(x)A");
    int rl = R.key_len;

    Echelon ech(true);
    std::vector<Key> tkeys = *out.target->basis;
    for (const auto& t : tkeys) {
        Key x = detail::head(t, rl), u = detail::tail(t, rl);
        auto T = [&](const Element& y) {
            Element r(sm->RA->dom);
            for (const auto& [k, c] : y.terms()) {
                Element xx = R.product(x, sm->r_part(k));
                r.axpy(c, detail::tensor_elements(sm->RA->dom, xx, actU(u, sm->a_part(k))));
            }
            return r;
        };
        ech.insert(detail::operator_on_RA(sm, T, od));
    }
    int qrank = ech.rank();
    rep.add("target acts faithfully", qrank == static_cast<int>(tkeys.size()), false, json{{"rank", qrank}},
            std::to_string(qrank) + "/" + std::to_string(tkeys.size()));

    const Algebra& Bis = *bis->alg;
    bool spanned = true;
    json missing = nullptr;
    std::vector<Element> imgs;
    for (const auto& z : *Bis.basis) {
        auto P = [&](const Element& y) {
            Element w = smash_W(*sm, y);
            Element bw = act(*bis->s, bis->a_part(z), w);
            Element zw = mul(*sm->alg, sm->alg->e(bis->r_part(z)), bw);
            return smash_W_inv(*sm, zw);
        };
        auto coords = ech.express(detail::operator_on_RA(sm, P, od));
        Element img(out.target->dom);
        if (!coords) {
            spanned = false;
            if (missing.is_null()) missing = json{{"z", to_json(z)}};
        } else {
            for (const auto& [i, c] : *coords) img.add_term(tkeys[i], c);
        }
        out.psi.emplace(z, img);
        imgs.push_back(img);
    }
    rep.add("W-conjugates lie in the target", spanned, false, missing);
    if (!spanned) return out;
    int rk = rank_of(imgs);
    int n = static_cast<int>(Bis.dim());
    rep.add("psi bijective", rk == n && out.target->dim() == Bis.dim(), false,
            json{{"rank", rk}, {"dim", n}, {"target_dim", out.target->dim()}});
    using P = std::pair<Key, Key>;
    std::vector<P> pairs;
    bool sampled = static_cast<long>(n) * n > multiplicative_budget;
    if (!sampled) {
        pairs = detail::all_pairs(*Bis.basis, *Bis.basis);
    } else {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<std::size_t> pick(0, Bis.basis->size() - 1);
        for (int i = 0; i < 2000; ++i) pairs.emplace_back((*Bis.basis)[pick(rng)], (*Bis.basis)[pick(rng)]);
    }
    check_all<P>(rep, "psi multiplicative", sampled, pairs, [&](const P& q) -> std::optional<json> {
        if (out(Bis.product(q.first, q.second)) != mul(*out.target, out.psi.at(q.first), out.psi.at(q.second)))
            return pair_witness(q.first, q.second);
        return std::nullopt;
    });
    return out;
}

// Duality for a finite quantum group A acting on a finite R:
// (R # A) # Â ≅ R ⊗ (A ◊ Â) ≅ M_n(R).
struct DualityResult {
    AqgPtr g;
    AqgPtr dual;
    PairPtr pair;
    SmashPtr smash;    // R # A
    SmashPtr bismash;  // (R # A) # Â
    AlgebraPtr diamond;
    OperatorIso psi;
    AlgebraPtr matrices;  // M(n, R)
    LinMap to_matrices;
    Report certificate;
};

inline DualityResult duality_theorem(const ActionPtr& s, const SmashOptions& opt = {})
{
    if (!s->A->finite() || !s->R->finite()) throw Error(ErrorKind::NotFiniteDimensional, s->name);
    DualityResult d;
    d.g = make_aqg(s->A);
    d.dual = finite_dual(d.g);
    d.pair = aqg_pair(d.g, d.dual);
    d.smash = smash(s, opt);
    SmashOptions bopt = opt;
    bopt.exhaustive_budget = std::min(opt.exhaustive_budget, 60000L);
    d.bismash = bismash(d.smash, d.pair, bopt);
    d.diamond = diamond_algebra(d.pair);
    PairPtr p = d.pair;
    int al = s->A->alg->key_len;
    d.psi = operator_isomorphism(d.smash, d.bismash, d.diamond, [p, al](const Key& u, const Key& a2) {
        return p->A->e(detail::head(u, al)) * p->pair(a2, detail::tail(u, al));
    });
    Report& rep = d.certificate;
    rep.instances = {s->name};
    rep.merge(d.smash->certificate, "smash ");
    rep.merge(d.bismash->certificate, "bismash ");
    rep.merge(d.psi.certificate);
    const auto& Ab = *s->A->alg->basis;
    const std::size_t n = Ab.size();
    const Algebra& R = *s->R;
    std::size_t expect = R.dim() * n * n;
    rep.add("dimension dim R * n^2", d.bismash->alg->dim() == expect, false,
            json{{"dim", d.bismash->alg->dim()}, {"expected", expect}},
            std::to_string(d.bismash->alg->dim()) + " = " + std::to_string(R.dim()) + "*" + std::to_string(n) + "^2");

    // x ⊗ (e_i ◊ ω_k) ↦ Σ_j ⟨e_j, ω_k⟩ E_ij ⊗ x in M(n, R).
    d.matrices = matrix_algebra(static_cast<int>(n), s->R);
    int rl = R.key_len;
    AlgebraPtr M = d.matrices;
    d.to_matrices = linear_map(M->dom, [p, Ab, rl, al, M](const Key& t) {
        Key x = detail::head(t, rl), u = detail::tail(t, rl);
        Key a = detail::head(u, al), b = detail::tail(u, al);
        int i = static_cast<int>(detail::key_index(Ab, a));
        Element r(M->dom);
        for (std::size_t j = 0; j < Ab.size(); ++j)
            r.add_term(concat(Key{i, static_cast<int>(j)}, x), p->pair(Ab[j], b));
        return r;
    });
    const Algebra& T = *d.psi.target;
    using P = std::pair<Key, Key>;
    auto tp = detail::all_pairs(*T.basis, *T.basis);
    check_all<P>(rep, "matrix form multiplicative", false, tp, [&](const P& q) -> std::optional<json> {
        if (d.to_matrices(T.product(q.first, q.second)) != mul(*M, d.to_matrices(T.e(q.first)), d.to_matrices(T.e(q.second))))
            return pair_witness(q.first, q.second);
        return std::nullopt;
    });
    std::vector<Element> imgs;
    for (const auto& k : *T.basis) imgs.push_back(d.to_matrices(T.e(k)));
    rep.add("matrix form bijective", rank_of(imgs) == static_cast<int>(M->dim()) && M->dim() == T.dim());
    return d;
}

// With R = ℂ the duality map is the rank-one realization.
inline Report compare_with_rank_one(const DualityResult& d, const RankOneRealization& ro)
{
    Report rep;
    rep.instances = {d.bismash->name};
    const Algebra& R = *d.smash->s->R;
    if (R.dim() != 1) {
        rep.add("rank-one comparison", false, false, json{{"reason", "R is not one-dimensional"}});
        return rep;
    }
    int rl = R.key_len;
    check_all<Key>(rep, "psi agrees with gamma", false, *d.bismash->alg->basis, [&](const Key& k) -> std::optional<json> {
        Element expect = ro.gamma(ro.smash->alg->e(detail::tail(k, rl)));
        Element got(expect.domain());
        for (const auto& [t, c] : d.psi.psi.at(k).terms()) got.add_term(detail::tail(t, rl), c);
        if (got != expect) return json{{"z", to_json(k)}};
        return std::nullopt;
    });
    return rep;
}

// ---------------------------------------------------------------------------
// Coactions of B on R, given through the covered maps
//   x ⊗ b ↦ Γ(x)(1 ⊗ b)   and   x ⊗ b ↦ (1 ⊗ b)Γ(x)
// with results on keys concat(r, b).

struct Coaction {
    std::string name;
    AlgebraPtr R;
    MhaPtr B;
    std::function<Element(const Key& x, const Key& b)> right_cover;
    std::function<Element(const Key& x, const Key& b)> left_cover;
    DomainId dom = 0;  // R ⊗ B
};

using CoactionPtr = std::shared_ptr<const Coaction>;

inline CoactionPtr delta_coaction(const MhaPtr& B)
{
    auto c = std::make_shared<Coaction>();
    c->name = "delta(" + B->name + ")";
    c->R = B->alg;
    c->B = B;
    c->dom = intern_domain(c->name + "|RxB");
    DomainId d = c->dom;
    c->right_cover = [B, d](const Key& x, const Key& b) { return B->t1(x, b).flatten(d); };
    c->left_cover = [B, d](const Key& x, const Key& b) { return B->t4(x, b).flatten(d); };
    return c;
}

// Γ(x) = x ⊗ 1
inline CoactionPtr trivial_coaction(const AlgebraPtr& R, const MhaPtr& B)
{
    auto c = std::make_shared<Coaction>();
    c->name = "trivial(" + R->name + "," + B->name + ")";
    c->R = R;
    c->B = B;
    c->dom = intern_domain(c->name + "|RxB");
    DomainId d = c->dom;
    c->right_cover = [d](const Key& x, const Key& b) { return Element::basis(d, concat(x, b)); };
    c->left_cover = c->right_cover;
    return c;
}

inline Report verify_coaction(const Coaction& c, int r = 3)
{
    Report rep;
    rep.instances = {c.name};
    const Algebra& R = *c.R;
    const RegularMHA& B = *c.B;
    int rl = R.key_len;
    auto Rs = R.sample(r);
    auto Bs = B.alg->sample(r);
    bool sampled = !R.finite() || !B.finite();
    if (!sampled) {
        std::vector<Element> rc, lc;
        for (const auto& x : Rs)
            for (const auto& b : Bs) {
                rc.push_back(c.right_cover(x, b));
                lc.push_back(c.left_cover(x, b));
            }
        int n = static_cast<int>(Rs.size() * Bs.size());
        rep.add("right cover injective", rank_of(rc) == n);
        rep.add("left cover injective", rank_of(lc) == n);
    }
    using T = std::tuple<Key, Key, Key>;
    // Γ(xy)(1⊗b) = Γ(x)(Γ(y)(1⊗b))
    check_all<T>(rep, "homomorphism", sampled, detail::all_triples(Rs, Rs, Bs), [&](const T& t) -> std::optional<json> {
        const auto& [x, y, b] = t;
        Element lhs(c.dom);
        for (const auto& [k, cc] : R.product(x, y).terms()) lhs.axpy(cc, c.right_cover(k, b));
        Element rhs(c.dom);
        for (const auto& [k, cc] : c.right_cover(y, b).terms()) {
            Key y2 = detail::head(k, rl), b2 = detail::tail(k, rl);
            for (const auto& [k2, c2] : c.right_cover(x, b2).terms())
                for (const auto& [k3, c3] : R.product(detail::head(k2, rl), y2).terms())
                    rhs.add_term(concat(k3, detail::tail(k2, rl)), cc * c2 * c3);
        }
        if (lhs != rhs) return triple_witness(x, y, b);
        return std::nullopt;
    });
    if (B.t1_inv) {
        // (Γ⊗ι)(Γ(x)(1⊗b))(1⊗b'⊗1) = (ι⊗Δ)(Γ(x)(1⊗p))(1⊗1⊗q), Σ p⊗q = T1⁻¹(b'⊗b)
        DomainId d3 = intern_domain(c.name + "|RxBxB");
        check_all<T>(rep, "coassociativity", sampled, detail::all_triples(Rs, Bs, Bs), [&](const T& t) -> std::optional<json> {
            const auto& [x, b, b2] = t;
            Element lhs(d3), rhs(d3);
            for (const auto& [k, cc] : c.right_cover(x, b).terms()) {
                Key y = detail::head(k, rl), cb = detail::tail(k, rl);
                for (const auto& [k2, c2] : c.right_cover(y, b2).terms()) lhs.add_term(concat(k2, cb), cc * c2);
            }
            for (const auto& [pq, c1] : B.t1_inv(b2, b).terms())
                for (const auto& [k, c2] : c.right_cover(x, pq[0]).terms())
                    for (const auto& [uv, c3] : B.t1(detail::tail(k, rl), pq[1]).terms())
                        rhs.add_term(concat(detail::head(k, rl), uv[0], uv[1]), c1 * c2 * c3);
            if (lhs != rhs) return triple_witness(x, b, b2);
            return std::nullopt;
        });
    } else {
        rep.add(Check{"coassociativity", Status::Skipped, nullptr, "no inverse of T1 on " + B.name});
    }
    return rep;
}

// ax = (ι ⊗ ⟨a,·⟩)(Γ(x)(1 ⊗ f)) with ⟨a, yf⟩ = ⟨a, y⟩.
inline ActionPtr coaction_to_action(const CoactionPtr& c, const PairPtr& p)
{
    if (c->B->name != p->B->name) throw Error(ErrorKind::AlgebraMismatch, c->name + " is not a coaction of " + p->B->name);
    Report v = verify_coaction(*c);
    if (!v.ok()) throw Error(ErrorKind::CoactionInvalid, v.failures());
    int rl = c->R->key_len;
    return make_action("induced(" + c->name + ")", p->A, c->R, [c, p, rl](const Key& a, const Key& x) {
        Element f = p->unit_B({p->A->e(a)});
        Element r(c->R->dom);
        for (const auto& [kf, cf] : f.terms())
            for (const auto& [k, cc] : c->right_cover(x, kf).terms())
                r.add_term(detail::head(k, rl), cf * cc * p->pair(a, detail::tail(k, rl)));
        return r;
    });
}

// ---------------------------------------------------------------------------
// Right-left condition: each T_b: a' ↦ a' ◁ b multiplies the image of A # B
// in End(A) into itself from both sides.

inline Report rl_condition_check(const PairPtr& p)
{
    Report rep;
    rep.instances = {p->name};
    const Algebra& A = *p->A->alg;
    const Algebra& B = *p->B->alg;
    if (!A.finite() || !B.finite()) throw Error(ErrorKind::NotFiniteDimensional, p->name);
    const auto& Ab = *A.basis;
    DomainId d = intern_domain(p->name + "|End(A)");
    auto coords = [&](const std::function<Element(const Key&)>& T) {
        Element o(d);
        for (const auto& a2 : Ab)
            for (const auto& [k, c] : T(a2).terms()) o.add_term(concat(a2, k), c);
        return o;
    };
    auto apply = [&](const Element& op, const Element& v) {
        Element r(A.dom);
        for (const auto& [k, c] : v.terms())
            for (const auto& [ok, oc] : op.terms())
                if (detail::head(ok, A.key_len) == k) r.add_term(detail::tail(ok, A.key_len), c * oc);
        return r;
    };
    std::vector<Element> image;
    for (const auto& a : Ab)
        for (const auto& b : *B.basis)
            image.push_back(coords([&](const Key& a2) { return mul(A, A.e(a), act_BonA(*p, b, A.e(a2))); }));
    Echelon ech(false);
    for (const auto& v : image) ech.insert(v);
    using P = std::pair<Key, std::size_t>;
    std::vector<P> cases;
    for (const auto& b : *B.basis)
        for (std::size_t i = 0; i < image.size(); ++i) cases.emplace_back(b, i);
    check_all<P>(rep, "T_b X and X T_b in A # B", false, cases, [&](const P& q) -> std::optional<json> {
        const Element& X = image[q.second];
        Element tx = coords([&](const Key& a2) { return ract_BonA(*p, apply(X, A.e(a2)), q.first); });
        Element xt = coords([&](const Key& a2) { return apply(X, ract_BonA(*p, A.e(a2), q.first)); });
        if (!ech.contains(tx) || !ech.contains(xt)) return json{{"b", to_json(q.first)}, {"operator", q.second}};
        return std::nullopt;
    });
    rep.add("image dimension", true, false, nullptr, std::to_string(ech.rank()));
    return rep;
}

// For R = B with the Δ-coaction: (R # A) # B compared with R ⊗ (A # B)
// through the operators of both on R ⊗ A.
struct CoactionDuality {
    SmashPtr smash;
    SmashPtr bismash;
    SmashPtr ab;
    OperatorIso psi;
    Report certificate;
};

inline CoactionDuality coaction_duality_check(const PairPtr& p, const SmashOptions& opt = {})
{
    CoactionDuality out;
    Report& rep = out.certificate;
    rep.instances = {p->name};
    CoactionPtr c = delta_coaction(p->B);
    ActionPtr s = coaction_to_action(c, p);
    // Induced action against the pairing action a ▷ b.
    const Algebra& B = *p->B->alg;
    using P = std::pair<Key, Key>;
    auto Ap = p->A->alg->sample(3);
    auto Bp = B.sample(3);
    check_all<P>(rep, "induced action = pairing action", !B.finite(), detail::all_pairs(Ap, Bp),
                 [&](const P& q) -> std::optional<json> {
                     if (s->act(q.first, q.second) != act_AonB(*p, q.first, B.e(q.second))) return pair_witness(q.first, q.second);
                     return std::nullopt;
                 });
    rep.merge(rl_condition_check(p));
    out.smash = smash(s, opt);
    out.bismash = bismash(out.smash, p, opt);
    out.ab = pairing_smash(p, PairOrder::AB, opt);
    SmashPtr ab = out.ab;
    PairPtr pp = p;
    out.psi = operator_isomorphism(out.smash, out.bismash, ab->alg, [pp, ab](const Key& u, const Key& a2) {
        return mul(*pp->A->alg, pp->A->e(ab->r_part(u)), act_BonA(*pp, ab->a_part(u), pp->A->e(a2)));
    });
    rep.merge(out.psi.certificate);
    std::size_t lhs = out.bismash->alg->dim(), rhs = B.dim() * ab->alg->dim();
    rep.add("dimensions agree", lhs == rhs, false, json{{"bismash", lhs}, {"R(x)(A#B)", rhs}});
    return out;
}

}  // namespace mha

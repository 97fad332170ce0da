#pragma once

#include "mha.hpp"

namespace mha {

struct AlgebraicQuantumGroup;
using AqgPtr = std::shared_ptr<const AlgebraicQuantumGroup>;

// Records that an instance was built as the dual of another; the pairing is
// ⟨e_j, ω_k⟩ = gram[j][k] = φ(e_j e_k) in basis order.
struct DualOrigin {
    AqgPtr of;
    Matrix gram;
};

struct AlgebraicQuantumGroup {
    MhaPtr base;
    Functional phi;  // left integral
    Functional psi;  // right integral
    std::optional<std::function<Element(const Key&)>> sigma;
    std::shared_ptr<const DualOrigin> dual_origin;
    json normalization;

    const Algebra& alg() const { return *base->alg; }
};

namespace detail {

inline std::size_t key_index(const std::vector<Key>& basis, const Key& k)
{
    auto it = std::lower_bound(basis.begin(), basis.end(), k);
    if (it == basis.end() || *it != k) throw Error(ErrorKind::DomainMismatch, "key " + k.str() + " outside basis");
    return static_cast<std::size_t>(it - basis.begin());
}

inline Functional functional_from(const Element& coords)
{
    return [coords](const Key& k) { return coords.coeff(k); };
}

// (ι⊗f) or (f⊗ι) of a 2-tensor.
inline Element contract_leg(DomainId d, const Tensor& t, int leg, const Functional& f)
{
    Element r(d);
    for (const auto& [ks, c] : t.terms()) r.add_term(ks[1 - leg], c * f(ks[leg]));
    return r;
}

inline void require_finite(const RegularMHA& h, ErrorKind kind)
{
    if (!h.finite()) throw Error(kind, h.name + " is not finite-dimensional");
}

}  // namespace detail

// Left invariance (ι⊗φ)((b⊗1)Δ(a)) = φ(a)b, right invariance
// (ψ⊗ι)(Δ(a)(1⊗b)) = ψ(a)b.
inline bool left_invariant_at(const RegularMHA& h, const Functional& phi, const Key& a, const Key& b)
{
    return detail::contract_leg(h.dom(), h.t2(b, a), 1, phi) == phi(a) * h.e(b);
}
inline bool right_invariant_at(const RegularMHA& h, const Functional& psi, const Key& a, const Key& b)
{
    return detail::contract_leg(h.dom(), h.t1(a, b), 0, psi) == psi(a) * h.e(b);
}

// Solution space of the invariance equations, as coordinate vectors
// (domain of A).
inline std::vector<Element> integral_space(const RegularMHA& h, bool left)
{
    detail::require_finite(h, ErrorKind::InfiniteDimensionalNoOracle);
    const auto& B = *h.alg->basis;
    DomainId sys = intern_domain(h.name + "|integral-system");
    std::vector<Element> images;
    for (const auto& u : B) {
        // φ = δ-functional at u
        Functional f = [u](const Key& k) { return k == u ? Scalar(1) : Scalar(0); };
        Element img(sys);
        for (const auto& a : B)
            for (const auto& b : B) {
                Element res = left ? detail::contract_leg(h.dom(), h.t2(b, a), 1, f) - f(a) * h.e(b)
                                   : detail::contract_leg(h.dom(), h.t1(a, b), 0, f) - f(a) * h.e(b);
                for (const auto& [k, c] : res.terms()) img.add_term(concat(a, b, k), c);
            }
        images.push_back(img);
    }
    std::vector<Element> out;
    for (const auto& v : kernel_of(images)) {
        Element e(h.dom());
        for (std::size_t i = 0; i < B.size(); ++i) e.add_term(B[i], v[i]);
        out.push_back(normalize_first(e));
    }
    return out;
}

inline std::optional<Functional> find_integral(const RegularMHA& h, bool left)
{
    if (!h.finite()) {
        if (left && h.left_integral_oracle) return h.left_integral_oracle;
        if (!left && h.left_integral_oracle) {
            auto phi = h.left_integral_oracle;
            auto S = h.antipode;
            return Functional([phi, S](const Key& k) { return eval(phi, S(k)); });
        }
        throw Error(ErrorKind::InfiniteDimensionalNoOracle, h.name + " has no integral oracle");
    }
    auto sp = integral_space(h, left);
    if (sp.empty()) return std::nullopt;
    return detail::functional_from(sp.front());
}

// Faithfulness: (a,b) -> φ(ab) non-degenerate on the basis.
inline Matrix integral_gram(const RegularMHA& h, const Functional& phi)
{
    const auto& B = *h.alg->basis;
    Matrix G = zero_matrix(B.size(), B.size());
    for (std::size_t i = 0; i < B.size(); ++i)
        for (std::size_t j = 0; j < B.size(); ++j) G[i][j] = eval(phi, h.alg->product(B[i], B[j]));
    return G;
}

// Builds the quantum-group record: integrals by solve (finite) or oracle.
inline AqgPtr make_aqg(const MhaPtr& h)
{
    auto g = std::make_shared<AlgebraicQuantumGroup>();
    g->base = h;
    auto phi = find_integral(*h, true);
    if (!phi) throw Error(ErrorKind::NotFound, "no left integral on " + h->name);
    g->phi = *phi;
    auto S = h->antipode;
    Functional p = *phi;
    g->psi = [p, S](const Key& k) { return eval(p, S(k)); };
    g->normalization = json{{"left_integral", "first nonzero basis value = 1"}, {"right_integral", "phi o S"}};
    return g;
}

inline Report verify_integral(const AlgebraicQuantumGroup& g, const std::vector<Key>& sample)
{
    const RegularMHA& h = *g.base;
    Report rep;
    rep.instances = {h.name};
    bool sampled = !h.finite();
    using P = std::pair<Key, Key>;
    std::vector<P> pairs;
    for (const auto& a : sample)
        for (const auto& b : sample) pairs.emplace_back(a, b);
    bool nonzero = false;
    for (const auto& a : sample) nonzero = nonzero || !g.phi(a).is_zero();
    rep.add("left integral nonzero", nonzero, sampled);
    check_all<P>(rep, "left invariance", sampled, pairs, [&](const P& p) -> std::optional<json> {
        if (!left_invariant_at(h, g.phi, p.first, p.second)) return pair_witness(p.first, p.second);
        return std::nullopt;
    });
    check_all<P>(rep, "right invariance", sampled, pairs, [&](const P& p) -> std::optional<json> {
        if (!right_invariant_at(h, g.psi, p.first, p.second)) return pair_witness(p.first, p.second);
        return std::nullopt;
    });
    if (h.finite()) {
        Matrix G = integral_gram(h, g.phi);
        rep.add("faithful", invert(G).has_value(), false, nullptr, "gram " + std::to_string(G.size()));
        auto l = integral_space(h, true);
        auto r = integral_space(h, false);
        rep.add("left uniqueness", l.size() == 1, false, json{{"dim", l.size()}}, "dim " + std::to_string(l.size()));
        rep.add("right uniqueness", r.size() == 1, false, json{{"dim", r.size()}}, "dim " + std::to_string(r.size()));
    } else {
        rep.add(Check{"faithful", Status::Skipped, nullptr, "infinite-dimensional"});
    }
    return rep;
}

inline Report verify_integral(const AlgebraicQuantumGroup& g, int sample_range = 5)
{
    return verify_integral(g, g.base->alg->sample(sample_range));
}

// ---------------------------------------------------------------------------
// Cointegrals and type

enum class CointegralSide { Left, Right };

inline std::vector<Element> cointegral_space(const RegularMHA& h, CointegralSide side)
{
    const auto& B = *h.alg->basis;
    DomainId sys = intern_domain(h.name + "|cointegral-system");
    std::vector<Element> images;
    for (const auto& u : B) {
        Element img(sys);
        for (const auto& a : B) {
            Element res = (side == CointegralSide::Left ? h.alg->product(a, u) : h.alg->product(u, a)) -
                          h.counit(a) * h.e(u);
            for (const auto& [k, c] : res.terms()) img.add_term(concat(a, k), c);
        }
        images.push_back(img);
    }
    std::vector<Element> out;
    for (const auto& v : kernel_of(images)) {
        Element e(h.dom());
        for (std::size_t i = 0; i < B.size(); ++i) e.add_term(B[i], v[i]);
        out.push_back(normalize_first(e));
    }
    return out;
}

// Left: a·h = ε(a)h; right: h·a = ε(a)h.  Normalized to first coordinate 1.
inline std::optional<Element> find_cointegral(const RegularMHA& h, CointegralSide side)
{
    if (!h.finite()) {
        const auto& o = side == CointegralSide::Left ? h.left_cointegral_oracle : h.right_cointegral_oracle;
        if (o) return normalize_first(*o);
        if (h.cointegral_absent) return std::nullopt;
        throw Error(ErrorKind::InfiniteDimensionalNoOracle, h.name + " has no cointegral oracle");
    }
    auto sp = cointegral_space(h, side);
    if (sp.empty()) return std::nullopt;
    return sp.front();
}

enum class QuantumType { Discrete, Compact, Both, Neither };

inline const char* quantum_type_name(QuantumType t)
{
    switch (t) {
    case QuantumType::Discrete: return "discrete";
    case QuantumType::Compact: return "compact";
    case QuantumType::Both: return "both";
    case QuantumType::Neither: return "neither";
    }
    return "?";
}

inline QuantumType classify_type(const RegularMHA& h)
{
    bool discrete, compact;
    if (h.finite()) {
        discrete = find_cointegral(h, CointegralSide::Left).has_value();
        compact = h.alg->unital() && !integral_space(h, true).empty();
    } else {
        if (!h.left_integral_oracle)
            throw Error(ErrorKind::Undecidable, h.name + ": integrals unknown for an infinite instance");
        if (!h.left_cointegral_oracle && !h.cointegral_absent && h.alg->unital())
            throw Error(ErrorKind::Undecidable, h.name + ": cointegrals unknown for an infinite instance");
        discrete = h.left_cointegral_oracle.has_value();
        compact = h.alg->unital();
    }
    if (discrete && compact) return QuantumType::Both;
    if (discrete) return QuantumType::Discrete;
    if (compact) return QuantumType::Compact;
    return QuantumType::Neither;
}

// σ with φ(ab) = φ(bσ(a)).
inline std::function<Element(const Key&)> compute_modular_automorphism(const AlgebraicQuantumGroup& g)
{
    const RegularMHA& h = *g.base;
    detail::require_finite(h, ErrorKind::InfiniteDimensional);
    const auto& B = *h.alg->basis;
    const std::size_t n = B.size();
    Matrix G = integral_gram(h, g.phi);  // G[b][k] = φ(e_b e_k)
    auto Ginv = invert(G);
    if (!Ginv) throw Error(ErrorKind::Singular, "left integral of " + h.name + " is not faithful");
    std::map<Key, Element> table;
    for (std::size_t ai = 0; ai < n; ++ai) {
        // Σ_k G[b][k] s_k = φ(e_a e_b)
        Element s(h.dom());
        for (std::size_t k = 0; k < n; ++k) {
            Scalar v(0);
            for (std::size_t b = 0; b < n; ++b) v += (*Ginv)[k][b] * G[ai][b];
            s.add_term(B[k], v);
        }
        table.emplace(B[ai], s);
    }
    return [table](const Key& k) { return table.at(k); };
}

inline Report verify_modular_automorphism(const AlgebraicQuantumGroup& g, const std::function<Element(const Key&)>& sigma)
{
    const RegularMHA& h = *g.base;
    const Algebra& A = *h.alg;
    Report rep;
    rep.instances = {h.name};
    using P = std::pair<Key, Key>;
    std::vector<P> pairs;
    for (const auto& a : *A.basis)
        for (const auto& b : *A.basis) pairs.emplace_back(a, b);
    check_all<P>(rep, "kms identity", false, pairs, [&](const P& p) -> std::optional<json> {
        if (eval(g.phi, A.product(p.first, p.second)) != eval(g.phi, mul(A, h.e(p.second), sigma(p.first))))
            return pair_witness(p.first, p.second);
        return std::nullopt;
    });
    check_all<P>(rep, "sigma multiplicative", false, pairs, [&](const P& p) -> std::optional<json> {
        if (extend_linear(A.product(p.first, p.second), A.dom, sigma) != mul(A, sigma(p.first), sigma(p.second)))
            return pair_witness(p.first, p.second);
        return std::nullopt;
    });
    std::vector<Element> imgs;
    for (const auto& a : *A.basis) imgs.push_back(sigma(a));
    rep.add("sigma bijective", rank_of(imgs) == static_cast<int>(A.dim()));
    return rep;
}

// ---------------------------------------------------------------------------
// The dual quantum group

// Â spanned by ω_k = φ(· e_k), keys shared with A.
inline AqgPtr finite_dual(const AqgPtr& g)
{
    const RegularMHA& h = *g->base;
    detail::require_finite(h, ErrorKind::InfiniteDimensional);
    const Algebra& A = *h.alg;
    const auto& B = *A.basis;
    const std::size_t n = B.size();
    Matrix G = integral_gram(h, g->phi);
    auto Gi = invert(G);
    if (!Gi) throw Error(ErrorKind::Singular, "left integral of " + h.name + " is not faithful");
    const Matrix Ginv = *Gi;

    auto D = std::make_shared<Algebra>();
    D->name = "dual(" + h.name + ")";
    D->dom = intern_domain(D->name);
    D->key_len = A.key_len;
    D->basis = B;
    DomainId dd = D->dom;

    // Coordinates of the functional with values v_j = f(e_j).
    auto coords = [&](const std::vector<Scalar>& v) {
        Element r(dd);
        for (std::size_t k = 0; k < n; ++k) {
            Scalar c(0);
            for (std::size_t j = 0; j < n; ++j) c += Ginv[k][j] * v[j];
            r.add_term(B[k], c);
        }
        return r;
    };
    std::vector<Tensor> delta(n);
    for (std::size_t x = 0; x < n; ++x) delta[x] = full_coproduct(h, h.e(B[x]));

    std::map<std::pair<Key, Key>, Element> prod;
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
            std::vector<Scalar> v(n);
            for (std::size_t x = 0; x < n; ++x)
                for (const auto& [ks, c] : delta[x].terms())
                    v[x] += c * G[detail::key_index(B, ks[0])][j] * G[detail::key_index(B, ks[1])][k];
            prod.emplace(std::make_pair(B[j], B[k]), coords(v));
        }
    D->product = [prod](const Key& a, const Key& b) { return prod.at({a, b}); };
    {
        std::vector<Scalar> v(n);
        for (std::size_t j = 0; j < n; ++j) v[j] = h.counit(B[j]);
        D->identity = coords(v);  // ε as a functional
    }

    // Δ̂(ω_k) = Σ C_ab ω_a ⊗ ω_b with C = G⁻¹ M G⁻ᵀ, M_ij = φ(e_i e_j e_k).
    std::map<Key, Tensor> cop;
    Matrix GinvT = transpose(Ginv);
    for (std::size_t k = 0; k < n; ++k) {
        Matrix M = zero_matrix(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) M[i][j] = eval(g->phi, mul(A, h.e(B[i]), h.e(B[j]), h.e(B[k])));
        Matrix C = Ginv * M * GinvT;
        Tensor t(dd, 2);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) t.add_term({B[a], B[b]}, C[a][b]);
        cop.emplace(B[k], t);
    }
    // ε̂(ω_k) = ω_k(1) = φ(e_k)
    std::map<Key, Scalar> eps;
    for (std::size_t k = 0; k < n; ++k) eps[B[k]] = g->phi(B[k]);
    // Ŝ(ω) = ω∘S
    auto dual_map = [&](const std::function<Element(const Key&)>& f) {
        std::map<Key, Element> t;
        for (std::size_t k = 0; k < n; ++k) {
            std::vector<Scalar> v(n);
            for (std::size_t j = 0; j < n; ++j) v[j] = eval(g->phi, mul(A, f(B[j]), h.e(B[k])));
            t.emplace(B[k], coords(v));
        }
        return t;
    };
    auto S = dual_map(h.antipode);
    auto Sinv = dual_map(h.antipode_inv);

    AlgebraPtr Dp = D;
    auto hd = make_finite_mha(
        D->name, Dp, [cop](const Key& k) { return cop.at(k); }, [eps](const Key& k) { return eps.at(k); },
        [S](const Key& k) { return S.at(k); }, [Sinv](const Key& k) { return Sinv.at(k); });
    auto hm = std::const_pointer_cast<RegularMHA>(hd);
    hm->quantum_group = true;
    hm->description = json{{"dual_of", h.name}, {"integral_normalization", g->normalization}};

    auto out = std::make_shared<AlgebraicQuantumGroup>(*make_aqg(hd));
    out->dual_origin = std::make_shared<DualOrigin>(DualOrigin{g, G});
    return out;
}

// ---------------------------------------------------------------------------
// Isomorphism certificates between finite instances

// f maps basis keys of h1 to elements of h2.
inline Report check_mha_isomorphism(const RegularMHA& h1, const RegularMHA& h2,
                                    const std::function<Element(const Key&)>& f)
{
    Report rep;
    rep.instances = {h1.name, h2.name};
    const Algebra& A1 = *h1.alg;
    const Algebra& A2 = *h2.alg;
    if (!h1.finite() || !h2.finite() || A1.dim() != A2.dim()) {
        rep.add("dimensions agree", false, false, json{{"dims", {A1.dim(), A2.dim()}}});
        return rep;
    }
    const auto& B = *A1.basis;
    std::vector<Element> imgs;
    for (const auto& a : B) imgs.push_back(f(a));
    rep.add("bijective", rank_of(imgs) == static_cast<int>(B.size()));
    using P = std::pair<Key, Key>;
    std::vector<P> pairs;
    for (const auto& a : B)
        for (const auto& b : B) pairs.emplace_back(a, b);
    auto F = [&](const Element& x) { return extend_linear(x, A2.dom, f); };
    check_all<P>(rep, "product", false, pairs, [&](const P& p) -> std::optional<json> {
        if (F(A1.product(p.first, p.second)) != mul(A2, f(p.first), f(p.second))) return pair_witness(p.first, p.second);
        return std::nullopt;
    });
    check_all<Key>(rep, "coproduct", false, B, [&](const Key& a) -> std::optional<json> {
        Tensor l = full_coproduct(h1, h1.e(a)).map_leg(0, A2.dom, f).map_leg(1, A2.dom, f);
        if (l != full_coproduct(h2, f(a))) return json{{"a", to_json(a)}};
        return std::nullopt;
    });
    check_all<Key>(rep, "counit", false, B, [&](const Key& a) -> std::optional<json> {
        if (h1.counit(a) != counit(h2, f(a))) return json{{"a", to_json(a)}};
        return std::nullopt;
    });
    check_all<Key>(rep, "antipode", false, B, [&](const Key& a) -> std::optional<json> {
        if (F(h1.antipode(a)) != antipode(h2, f(a))) return json{{"a", to_json(a)}};
        return std::nullopt;
    });
    return rep;
}

// Searches for a basis permutation that is a Hopf isomorphism.
inline std::optional<std::map<Key, Key>> match_by_permutation(const RegularMHA& h1, const RegularMHA& h2)
{
    if (!h1.finite() || !h2.finite() || h1.alg->dim() != h2.alg->dim()) return std::nullopt;
    const auto& B1 = *h1.alg->basis;
    const auto& B2 = *h2.alg->basis;
    const std::size_t n = B1.size();
    std::map<Key, Key> m;
    std::vector<bool> used(n);
    DomainId d2 = h2.dom();
    // Partial consistency: products and counits among assigned keys.
    auto consistent = [&](const Key& a) {
        if (h1.counit(a) != h2.counit(m.at(a))) return false;
        for (const auto& [x, fx] : m) {
            for (int side = 0; side < 2; ++side) {
                const Key& u = side ? a : x;
                const Key& v = side ? x : a;
                Element p1 = h1.alg->product(u, v);
                Element p2 = h2.alg->product(m.at(u), m.at(v));
                Element img(d2);
                bool known = true;
                for (const auto& [k, c] : p1.terms()) {
                    auto it = m.find(k);
                    if (it == m.end()) {
                        known = false;
                        break;
                    }
                    img.add_term(it->second, c);
                }
                if (known && img != p2) return false;
            }
        }
        return true;
    };
    std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
        if (i == n) {
            auto f = [&](const Key& k) { return Element::basis(d2, m.at(k)); };
            return check_mha_isomorphism(h1, h2, f).ok();
        }
        for (std::size_t j = 0; j < n; ++j) {
            if (used[j]) continue;
            m[B1[i]] = B2[j];
            used[j] = true;
            if (consistent(B1[i]) && rec(i + 1)) return true;
            used[j] = false;
            m.erase(B1[i]);
        }
        return false;
    };
    if (rec(0)) return m;
    return std::nullopt;
}

// The canonical map A → Â^, a ↦ (ω ↦ ω(a)), expressed in the basis of the
// double dual.
inline std::function<Element(const Key&)> canonical_double_dual_map(const AqgPtr& dd)
{
    if (!dd->dual_origin || !dd->dual_origin->of->dual_origin)
        throw Error(ErrorKind::AlgebraMismatch, "not a double dual");
    const Matrix& G2 = dd->dual_origin->gram;                // ⟨ω_j, ω̂_k⟩
    const Matrix& G1 = dd->dual_origin->of->dual_origin->gram;  // ⟨e_i, ω_j⟩
    const auto& B = *dd->base->alg->basis;
    Matrix G2inv = *invert(G2);
    DomainId d = dd->base->dom();
    std::map<Key, Element> table;
    for (std::size_t i = 0; i < B.size(); ++i) {
        // ev_{e_i} has values G1[i][j] on ω_j; coordinates c with Σ_k G2[j][k] c_k = G1[i][j].
        Element r(d);
        for (std::size_t k = 0; k < B.size(); ++k) {
            Scalar c(0);
            for (std::size_t j = 0; j < B.size(); ++j) c += G2inv[k][j] * G1[i][j];
            r.add_term(B[k], c);
        }
        table.emplace(B[i], r);
    }
    return [table](const Key& k) { return table.at(k); };
}

}  // namespace mha

#pragma once

#include <optional>
#include <vector>

#include "mha.hpp"

namespace mha {

// Covered Sweedler expressions
//
//   Σ M_1(l_1 a_(1) r_1) ⊗ ... ⊗ M_n(l_n a_(n) r_n)   with M_i ∈ {ι, S, S⁻¹}
//
// written in the outer form L_i M_i(a_(i)) R_i.  A leg is covered when it has
// a left or right factor; all legs but one must be covered.

enum class LegMap { Id, S, SInv };

struct Leg {
    LegMap map = LegMap::Id;
    std::optional<Element> left;
    std::optional<Element> right;

    bool covered() const { return left.has_value() || right.has_value(); }
};

struct SweedlerExpr {
    Element a;
    std::vector<Leg> legs;
};

// LeftFirst peels covered legs from the front with T2/T3 and otherwise from
// the back with T1/T4.  RightFirst prefers the back and routes every cover
// through a local unit of its factor, so the two agree only if Δ is
// coassociative and the covers are consistent.
enum class Strategy { LeftFirst, RightFirst };

namespace detail {

struct InnerLeg {
    LegMap map;
    std::optional<Element> il, ir;
    bool covered() const { return il.has_value() || ir.has_value(); }
};

// L·S(x)·R = S(S⁻¹(R)·x·S⁻¹(L)), and symmetrically for S⁻¹.
inline InnerLeg normalize_leg(const RegularMHA& h, const Leg& g)
{
    InnerLeg r{g.map, std::nullopt, std::nullopt};
    switch (g.map) {
    case LegMap::Id:
        r.il = g.left;
        r.ir = g.right;
        break;
    case LegMap::S:
        if (g.right) r.il = antipode_inv(h, *g.right);
        if (g.left) r.ir = antipode_inv(h, *g.left);
        break;
    case LegMap::SInv:
        if (g.right) r.il = antipode(h, *g.right);
        if (g.left) r.ir = antipode(h, *g.left);
        break;
    }
    return r;
}

inline Element left_unit_of(const RegularMHA& h, const Element& x) { return find_local_units(h, {x}, Side::Left); }
inline Element right_unit_of(const RegularMHA& h, const Element& x)
{
    return find_local_units(h, {x}, Side::Right);
}

// Split a into (first leg covered by g) ⊗ (rest).
inline Tensor split_front(const RegularMHA& h, const Element& a, const InnerLeg& g, Strategy st)
{
    const Algebra& A = *h.alg;
    Tensor t;
    if (g.il) {
        if (st == Strategy::LeftFirst) {
            t = cover(h, Cover::T2, *g.il, a);
        } else {
            Element f = right_unit_of(h, *g.il);
            t = leg_mul_left(A, cover(h, Cover::T2, f, a), 0, *g.il);
        }
        if (g.ir) t = leg_mul_right(A, t, 0, *g.ir);
    } else {
        if (st == Strategy::LeftFirst) {
            t = cover(h, Cover::T3, a, *g.ir);
        } else {
            Element e = left_unit_of(h, *g.ir);
            t = leg_mul_right(A, cover(h, Cover::T3, a, e), 0, *g.ir);
        }
    }
    return t;
}

// Split a into (rest) ⊗ (last leg covered by g).
inline Tensor split_back(const RegularMHA& h, const Element& a, const InnerLeg& g, Strategy st)
{
    const Algebra& A = *h.alg;
    Tensor t;
    if (g.ir) {
        if (st == Strategy::LeftFirst) {
            t = cover(h, Cover::T1, a, *g.ir);
        } else {
            Element e = left_unit_of(h, *g.ir);
            t = leg_mul_right(A, cover(h, Cover::T1, a, e), 1, *g.ir);
        }
        if (g.il) t = leg_mul_left(A, t, 1, *g.il);
    } else {
        if (st == Strategy::LeftFirst) {
            t = cover(h, Cover::T4, a, *g.il);
        } else {
            Element f = right_unit_of(h, *g.il);
            t = leg_mul_left(A, cover(h, Cover::T4, a, f), 1, *g.il);
        }
    }
    return t;
}

inline Tensor eval_inner(const RegularMHA& h, const Element& a, const std::vector<InnerLeg>& legs, std::size_t lo,
                         std::size_t hi, Strategy st)
{
    const Algebra& A = *h.alg;
    if (hi - lo == 1) {
        Element x = a;
        if (legs[lo].il) x = mul(A, *legs[lo].il, x);
        if (legs[lo].ir) x = mul(A, x, *legs[lo].ir);
        Tensor t(h.dom(), 1);
        for (const auto& [k, c] : x.terms()) t.add_term({k}, c);
        return t;
    }
    bool front = legs[lo].covered();
    bool back = legs[hi - 1].covered();
    if (!front && !back)
        throw Error(ErrorKind::UncoveredLeg, "legs " + std::to_string(lo) + " and " + std::to_string(hi - 1) +
                                                 " are both uncovered");
    bool take_front = st == Strategy::LeftFirst ? front : !back;
    Tensor out(h.dom(), static_cast<int>(hi - lo));
    if (take_front) {
        Tensor t = split_front(h, a, legs[lo], st);
        std::map<Key, Element> rest_by_first;
        for (const auto& [ks, c] : t.terms()) {
            auto [it, fresh] = rest_by_first.try_emplace(ks[0], Element(h.dom()));
            it->second.add_term(ks[1], c);
        }
        for (const auto& [k0, y] : rest_by_first) {
            Tensor sub = eval_inner(h, y, legs, lo + 1, hi, st);
            for (const auto& [ks, c] : sub.terms()) {
                Tensor::Legs l{k0};
                l.insert(l.end(), ks.begin(), ks.end());
                out.add_term(l, c);
            }
        }
    } else {
        Tensor t = split_back(h, a, legs[hi - 1], st);
        std::map<Key, Element> rest_by_last;
        for (const auto& [ks, c] : t.terms()) {
            auto [it, fresh] = rest_by_last.try_emplace(ks[1], Element(h.dom()));
            it->second.add_term(ks[0], c);
        }
        for (const auto& [kl, y] : rest_by_last) {
            Tensor sub = eval_inner(h, y, legs, lo, hi - 1, st);
            for (const auto& [ks, c] : sub.terms()) {
                Tensor::Legs l = ks;
                l.push_back(kl);
                out.add_term(l, c);
            }
        }
    }
    return out;
}

}  // namespace detail

inline Tensor sweedler_eval(const RegularMHA& h, const SweedlerExpr& expr, Strategy st = Strategy::LeftFirst)
{
    if (expr.legs.empty()) throw Error(ErrorKind::PositionOutOfRange, "expression without legs");
    std::vector<detail::InnerLeg> legs;
    int uncovered = 0;
    for (const auto& g : expr.legs) {
        legs.push_back(detail::normalize_leg(h, g));
        if (!g.covered()) ++uncovered;
    }
    if (expr.legs.size() > 1 && uncovered > 1)
        throw Error(ErrorKind::UncoveredLeg, std::to_string(uncovered) + " uncovered legs");
    Tensor t = detail::eval_inner(h, expr.a, legs, 0, legs.size(), st);
    for (std::size_t i = 0; i < legs.size(); ++i) {
        if (legs[i].map == LegMap::S) t = t.map_leg(static_cast<int>(i), h.dom(), h.antipode);
        if (legs[i].map == LegMap::SInv) t = t.map_leg(static_cast<int>(i), h.dom(), h.antipode_inv);
    }
    return t;
}

// One leg M(a_(i)) with optional outer factors.
inline Leg leg(LegMap m = LegMap::Id, std::optional<Element> left = std::nullopt,
               std::optional<Element> right = std::nullopt)
{
    return Leg{m, std::move(left), std::move(right)};
}

}  // namespace mha

#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "errors.hpp"
#include "key.hpp"
#include "scalar.hpp"

namespace mha {

// Finite-support linear combination of basis keys in one index domain.
// Zero coefficients are never stored.
class Element {
public:
    using Map = std::map<Key, Scalar>;

    Element() = default;
    explicit Element(DomainId dom) : dom_(dom) {}

    static Element basis(DomainId dom, const Key& k, const Scalar& c = Scalar(1))
    {
        Element e(dom);
        e.add_term(k, c);
        return e;
    }

    DomainId domain() const { return dom_; }
    // The rvalue overload keeps `for (... : f(x).terms())` safe.
    const Map& terms() const& { return c_; }
    Map terms() && { return std::move(c_); }
    bool is_zero() const { return c_.empty(); }
    std::size_t size() const { return c_.size(); }

    Scalar coeff(const Key& k) const
    {
        auto it = c_.find(k);
        return it == c_.end() ? Scalar(0) : it->second;
    }

    void add_term(const Key& k, const Scalar& c)
    {
        if (c.is_zero()) return;
        auto [it, fresh] = c_.try_emplace(k, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) c_.erase(it);
        }
    }

    // Adds c * other.
    void axpy(const Scalar& c, const Element& other)
    {
        adopt(other);
        if (c.is_zero()) return;
        for (const auto& [k, v] : other.c_) add_term(k, c * v);
    }

    Element& operator+=(const Element& o)
    {
        adopt(o);
        for (const auto& [k, v] : o.c_) add_term(k, v);
        return *this;
    }
    Element& operator-=(const Element& o)
    {
        adopt(o);
        for (const auto& [k, v] : o.c_) add_term(k, -v);
        return *this;
    }
    Element& operator*=(const Scalar& s)
    {
        if (s.is_zero()) {
            c_.clear();
            return *this;
        }
        for (auto& [k, v] : c_) v *= s;
        return *this;
    }

    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend Element operator*(const Scalar& s, Element a) { return a *= s; }
    friend Element operator*(Element a, const Scalar& s) { return a *= s; }
    Element operator-() const
    {
        Element r = *this;
        r *= Scalar(-1);
        return r;
    }

    // Domains are part of equality except that the unset zero equals any zero.
    friend bool operator==(const Element& a, const Element& b)
    {
        if (a.c_.empty() && b.c_.empty()) return true;
        return a.dom_ == b.dom_ && a.c_ == b.c_;
    }
    friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

    // Same values, different label.
    Element relabel(DomainId dom) const
    {
        Element r = *this;
        r.dom_ = dom;
        return r;
    }

    std::string str() const
    {
        if (c_.empty()) return "0";
        std::string s;
        for (const auto& [k, v] : c_) {
            if (!s.empty()) s += " + ";
            s += "(" + v.str() + ")" + k.str();
        }
        return s;
    }

private:
    void adopt(const Element& o)
    {
        if (o.dom_ == 0 || o.dom_ == dom_) return;
        if (dom_ == 0 && c_.empty()) {
            dom_ = o.dom_;
            return;
        }
        if (dom_ == 0) {
            dom_ = o.dom_;
            return;
        }
        throw Error(ErrorKind::DomainMismatch, domain_name(dom_) + " vs " + domain_name(o.dom_));
    }

    DomainId dom_ = 0;
    Map c_;
};

// Linear extension of a basis-level map.
inline Element extend_linear(const Element& x, DomainId out, const std::function<Element(const Key&)>& f)
{
    Element r(out);
    for (const auto& [k, c] : x.terms()) r.axpy(c, f(k));
    return r;
}

// Finite-support element of an algebraic tensor product V_1 ⊗ ... ⊗ V_n.
class Tensor {
public:
    using Legs = std::vector<Key>;
    using Map = std::map<Legs, Scalar>;

    Tensor() = default;
    explicit Tensor(std::vector<DomainId> doms) : doms_(std::move(doms)) {}
    Tensor(DomainId d, int arity) : doms_(arity, d) {}

    int arity() const { return static_cast<int>(doms_.size()); }
    const std::vector<DomainId>& domains() const { return doms_; }
    const Map& terms() const& { return c_; }
    Map terms() && { return std::move(c_); }
    bool is_zero() const { return c_.empty(); }

    void add_term(const Legs& ks, const Scalar& c)
    {
        if (c.is_zero()) return;
        if (static_cast<int>(ks.size()) != arity()) throw Error(ErrorKind::PositionOutOfRange, "tensor arity");
        auto [it, fresh] = c_.try_emplace(ks, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) c_.erase(it);
        }
    }

    Tensor& operator+=(const Tensor& o)
    {
        check_shape(o);
        for (const auto& [k, v] : o.c_) add_term(k, v);
        return *this;
    }
    Tensor& operator-=(const Tensor& o)
    {
        check_shape(o);
        for (const auto& [k, v] : o.c_) add_term(k, -v);
        return *this;
    }
    Tensor& operator*=(const Scalar& s)
    {
        if (s.is_zero()) {
            c_.clear();
            return *this;
        }
        for (auto& [k, v] : c_) v *= s;
        return *this;
    }
    void axpy(const Scalar& s, const Tensor& o)
    {
        check_shape(o);
        if (s.is_zero()) return;
        for (const auto& [k, v] : o.c_) add_term(k, s * v);
    }
    friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
    friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }

    friend bool operator==(const Tensor& a, const Tensor& b)
    {
        if (a.c_.empty() && b.c_.empty()) return a.arity() == b.arity() || a.arity() == 0 || b.arity() == 0;
        return a.doms_ == b.doms_ && a.c_ == b.c_;
    }
    friend bool operator!=(const Tensor& a, const Tensor& b) { return !(a == b); }

    static Tensor outer(const std::vector<Element>& es)
    {
        std::vector<DomainId> doms;
        for (const auto& e : es) doms.push_back(e.domain());
        Tensor t(doms);
        Legs legs(es.size());
        Scalar one(1);
        rec_outer(t, es, 0, legs, one);
        return t;
    }
    static Tensor outer(const Element& a, const Element& b) { return outer(std::vector<Element>{a, b}); }

    // Element ⊗ tensor and tensor ⊗ element.
    static Tensor prepend(const Element& a, const Tensor& t)
    {
        std::vector<DomainId> doms{a.domain()};
        doms.insert(doms.end(), t.doms_.begin(), t.doms_.end());
        Tensor r(doms);
        for (const auto& [ka, ca] : a.terms())
            for (const auto& [kt, ct] : t.c_) {
                Legs l{ka};
                l.insert(l.end(), kt.begin(), kt.end());
                r.add_term(l, ca * ct);
            }
        return r;
    }
    static Tensor append(const Tensor& t, const Element& a)
    {
        std::vector<DomainId> doms = t.doms_;
        doms.push_back(a.domain());
        Tensor r(doms);
        for (const auto& [kt, ct] : t.c_)
            for (const auto& [ka, ca] : a.terms()) {
                Legs l = kt;
                l.push_back(ka);
                r.add_term(l, ca * ct);
            }
        return r;
    }

    // Applies a linear map (given on basis keys) to one leg.
    Tensor map_leg(int leg, DomainId out, const std::function<Element(const Key&)>& f) const
    {
        if (leg < 0 || leg >= arity()) throw Error(ErrorKind::PositionOutOfRange, "leg " + std::to_string(leg));
        std::vector<DomainId> doms = doms_;
        doms[leg] = out;
        Tensor r(doms);
        std::map<Key, Element> memo;
        for (const auto& [ks, c] : c_) {
            auto it = memo.find(ks[leg]);
            if (it == memo.end()) it = memo.emplace(ks[leg], f(ks[leg])).first;
            for (const auto& [k2, c2] : it->second.terms()) {
                Legs l = ks;
                l[leg] = k2;
                r.add_term(l, c * c2);
            }
        }
        return r;
    }

    Tensor flip(int i, int j) const
    {
        if (i < 0 || j < 0 || i >= arity() || j >= arity())
            throw Error(ErrorKind::PositionOutOfRange, "flip(" + std::to_string(i) + "," + std::to_string(j) + ")");
        std::vector<DomainId> doms = doms_;
        std::swap(doms[i], doms[j]);
        Tensor r(doms);
        for (const auto& [ks, c] : c_) {
            Legs l = ks;
            std::swap(l[i], l[j]);
            r.add_term(l, c);
        }
        return r;
    }

    // Concatenated-key view, used for linear algebra on tensors.
    Element flatten(DomainId dom) const
    {
        Element e(dom);
        for (const auto& [ks, c] : c_) {
            Key k;
            for (const auto& x : ks) k = concat(k, x);
            e.add_term(k, c);
        }
        return e;
    }

    std::string str() const
    {
        if (c_.empty()) return "0";
        std::string s;
        for (const auto& [ks, c] : c_) {
            if (!s.empty()) s += " + ";
            s += "(" + c.str() + ")";
            for (std::size_t i = 0; i < ks.size(); ++i) s += (i ? "⊗" : "") + ks[i].str();
        }
        return s;
    }

private:
    void check_shape(const Tensor& o)
    {
        if (doms_.empty()) {
            doms_ = o.doms_;
            return;
        }
        if (o.doms_.empty()) return;
        if (o.arity() != arity()) throw Error(ErrorKind::PositionOutOfRange, "tensor arity mismatch");
        for (int i = 0; i < arity(); ++i)
            if (doms_[i] != o.doms_[i] && doms_[i] != 0 && o.doms_[i] != 0)
                throw Error(ErrorKind::DomainMismatch, "tensor leg " + std::to_string(i));
    }

    static void rec_outer(Tensor& t, const std::vector<Element>& es, std::size_t i, Legs& legs, const Scalar& c)
    {
        if (i == es.size()) {
            t.add_term(legs, c);
            return;
        }
        for (const auto& [k, v] : es[i].terms()) {
            legs[i] = k;
            rec_outer(t, es, i + 1, legs, c * v);
        }
    }

    std::vector<DomainId> doms_;
    Map c_;
};

inline Tensor flip(const Tensor& t, int i, int j) { return t.flip(i, j); }

}  // namespace mha

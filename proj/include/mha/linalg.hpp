#pragma once

#include <map>
#include <optional>
#include <vector>

#include "element.hpp"

namespace mha {

// Incremental row echelon form over sparse vectors.  The pivot of a row is
// its smallest key, so elimination order is fixed by the key order.  Each
// stored row remembers which combination of inserted vectors produced it.
class Echelon {
public:
    struct Row {
        Element vec;                  // pivot coefficient normalized to 1
        std::map<int, Scalar> combo;  // vec = Σ combo[i] * inserted[i]
    };

    explicit Echelon(bool track = true) : track_(track) {}

    // Inserts v (index = insertion count).  Returns true if v was independent;
    // otherwise, if dependency is non-null, fills it with the relation
    // v = Σ dependency[i] * inserted[i].
    bool insert(const Element& v, std::map<int, Scalar>* dependency = nullptr)
    {
        int idx = count_++;
        std::map<int, Scalar> combo;
        if (track_) combo[idx] = Scalar(1);
        Element r = reduce_leading(v, track_ ? &combo : nullptr);
        if (r.is_zero()) {
            if (dependency && track_) {
                dependency->clear();
                for (const auto& [i, c] : combo)
                    if (i != idx) (*dependency)[i] = -c;
            }
            return false;
        }
        Scalar lead = r.terms().begin()->second;
        Scalar inv = lead.inverse();
        r *= inv;
        if (track_)
            for (auto& [i, c] : combo) c *= inv;
        Key pivot = r.terms().begin()->first;
        rows_.emplace(pivot, Row{std::move(r), std::move(combo)});
        return true;
    }

    // Coefficients over inserted vectors reproducing target, or nullopt.
    std::optional<std::map<int, Scalar>> express(const Element& target) const
    {
        if (!track_) return std::nullopt;
        std::map<int, Scalar> combo;
        Element v = target;
        while (!v.is_zero()) {
            const auto& [k, c] = *v.terms().begin();
            auto it = rows_.find(k);
            if (it == rows_.end()) return std::nullopt;
            Scalar f = c;
            v.axpy(-f, it->second.vec);
            for (const auto& [i, ci] : it->second.combo) add(combo, i, f * ci);
        }
        return combo;
    }

    int rank() const { return static_cast<int>(rows_.size()); }
    int inserted() const { return count_; }
    bool contains(const Element& v) const { return reduce_leading(v, nullptr).is_zero(); }
    const std::map<Key, Row>& rows() const { return rows_; }

private:
    static void add(std::map<int, Scalar>& m, int i, const Scalar& c)
    {
        if (c.is_zero()) return;
        auto [it, fresh] = m.try_emplace(i, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) m.erase(it);
        }
    }

    // Leading-term elimination: the residual is zero iff v is in the span.
    Element reduce_leading(Element v, std::map<int, Scalar>* combo) const
    {
        while (!v.is_zero()) {
            const auto& [k, c] = *v.terms().begin();
            auto it = rows_.find(k);
            if (it == rows_.end()) return v;
            Scalar f = c;
            v.axpy(-f, it->second.vec);
            if (combo)
                for (const auto& [i, ci] : it->second.combo) add(*combo, i, -f * ci);
        }
        return v;
    }

    bool track_;
    int count_ = 0;
    std::map<Key, Row> rows_;
};

// Coefficients c with Σ c_i g_i = target, or nullopt.  All inputs must share
// one index domain.
inline std::optional<std::vector<Scalar>> linear_solve(const std::vector<Element>& gens, const Element& target)
{
    DomainId dom = target.domain();
    for (const auto& g : gens) {
        if (g.is_zero() || g.domain() == 0) continue;
        if (dom == 0) dom = g.domain();
        if (g.domain() != dom) throw Error(ErrorKind::DomainMismatch, "linear_solve generators");
    }
    Echelon ech;
    for (const auto& g : gens) ech.insert(g);
    auto combo = ech.express(target);
    if (!combo) return std::nullopt;
    std::vector<Scalar> out(gens.size());
    for (const auto& [i, c] : *combo) out[i] = c;
    return out;
}

inline int rank_of(const std::vector<Element>& vs)
{
    Echelon ech(false);
    for (const auto& v : vs) ech.insert(v);
    return ech.rank();
}

// Kernel of the linear map sending the i-th unknown to images[i]; returned as
// coefficient vectors over the unknowns.
inline std::vector<std::vector<Scalar>> kernel_of(const std::vector<Element>& images)
{
    Echelon ech;
    std::vector<std::vector<Scalar>> ker;
    for (std::size_t i = 0; i < images.size(); ++i) {
        std::map<int, Scalar> dep;
        if (!ech.insert(images[i], &dep)) {
            std::vector<Scalar> v(images.size());
            v[i] = Scalar(1);
            for (const auto& [j, c] : dep) v[j] = -c;
            ker.push_back(std::move(v));
        }
    }
    return ker;
}

// Span comparison helpers.
inline bool span_contains(const std::vector<Element>& span, const std::vector<Element>& vs)
{
    Echelon ech(false);
    for (const auto& v : span) ech.insert(v);
    for (const auto& v : vs)
        if (!ech.contains(v)) return false;
    return true;
}

inline bool same_span(const std::vector<Element>& a, const std::vector<Element>& b)
{
    return span_contains(a, b) && span_contains(b, a);
}

// Combination Σ c_i basis_i for coefficient vectors from kernel_of.
inline Element combine(const std::vector<Scalar>& coeffs, const std::vector<Element>& basis, DomainId dom)
{
    Element r(dom);
    for (std::size_t i = 0; i < coeffs.size(); ++i) r.axpy(coeffs[i], basis[i]);
    return r;
}

// Normalizes so that the first nonzero coordinate (key order) is 1.
inline Element normalize_first(Element e)
{
    if (e.is_zero()) return e;
    Scalar inv = e.terms().begin()->second.inverse();
    e *= inv;
    return e;
}

// Small dense matrices, used where a basis is fixed and tiny (Gram matrices
// of integrals).
using Matrix = std::vector<std::vector<Scalar>>;

inline Matrix zero_matrix(std::size_t n, std::size_t m) { return Matrix(n, std::vector<Scalar>(m)); }

inline Matrix operator*(const Matrix& a, const Matrix& b)
{
    Matrix r = zero_matrix(a.size(), b.empty() ? 0 : b[0].size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k) {
            if (a[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < r[i].size(); ++j) r[i][j] += a[i][k] * b[k][j];
        }
    return r;
}

inline Matrix transpose(const Matrix& a)
{
    Matrix r = zero_matrix(a.empty() ? 0 : a[0].size(), a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j) r[j][i] = a[i][j];
    return r;
}

// Gauss-Jordan inverse; nullopt if singular.
inline std::optional<Matrix> invert(Matrix a)
{
    const std::size_t n = a.size();
    Matrix inv = zero_matrix(n, n);
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = Scalar(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c].is_zero()) ++p;
        if (p == n) return std::nullopt;
        std::swap(a[p], a[c]);
        std::swap(inv[p], inv[c]);
        Scalar f = a[c][c].inverse();
        for (std::size_t j = 0; j < n; ++j) {
            a[c][j] *= f;
            inv[c][j] *= f;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a[r][c].is_zero()) continue;
            Scalar g = a[r][c];
            for (std::size_t j = 0; j < n; ++j) {
                a[r][j] -= g * a[c][j];
                inv[r][j] -= g * inv[c][j];
            }
        }
    }
    return inv;
}

}  // namespace mha

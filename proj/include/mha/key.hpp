#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <deque>
#include <initializer_list>
#include <mutex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>

namespace mha {

// Basis label: a short tuple of integers.  Composite spaces (tensor, smash,
// matrix algebras) concatenate the keys of their factors.
class Key {
public:
    static constexpr int kCapacity = 10;

    Key() = default;
    Key(std::initializer_list<std::int32_t> il)
    {
        if (il.size() > kCapacity) throw std::length_error("key too long");
        for (auto x : il) v_[n_++] = x;
    }

    int size() const { return n_; }
    std::int32_t operator[](int i) const { return v_[i]; }
    void push(std::int32_t x)
    {
        if (n_ >= kCapacity) throw std::length_error("key too long");
        v_[n_++] = x;
    }

    Key slice(int from, int len) const
    {
        Key k;
        for (int i = 0; i < len; ++i) k.push(v_[from + i]);
        return k;
    }

    friend Key concat(const Key& a, const Key& b)
    {
        Key k = a;
        for (int i = 0; i < b.n_; ++i) k.push(b.v_[i]);
        return k;
    }
    friend Key concat(const Key& a, const Key& b, const Key& c) { return concat(concat(a, b), c); }

    friend bool operator==(const Key& a, const Key& b)
    {
        return a.n_ == b.n_ && std::equal(a.v_.begin(), a.v_.begin() + a.n_, b.v_.begin());
    }
    friend bool operator!=(const Key& a, const Key& b) { return !(a == b); }
    friend bool operator<(const Key& a, const Key& b)
    {
        return std::lexicographical_compare(a.v_.begin(), a.v_.begin() + a.n_, b.v_.begin(),
                                            b.v_.begin() + b.n_);
    }

    std::string str() const
    {
        std::string s = "(";
        for (int i = 0; i < n_; ++i) {
            if (i) s += ",";
            s += std::to_string(v_[i]);
        }
        return s + ")";
    }

    std::size_t hash() const
    {
        std::size_t h = n_;
        for (int i = 0; i < n_; ++i) h = h * 1000003u ^ static_cast<std::uint32_t>(v_[i]);
        return h;
    }

private:
    std::array<std::int32_t, kCapacity> v_{};
    std::uint8_t n_ = 0;
};

struct KeyHash {
    std::size_t operator()(const Key& k) const { return k.hash(); }
};

// Index-domain tags are interned names; id 0 is the unset domain of a
// default-constructed zero.
using DomainId = std::uint32_t;

namespace detail {
struct DomainRegistry {
    std::mutex mu;
    std::deque<std::string> names{"<unset>"};
    std::unordered_map<std::string, DomainId> ids{{"<unset>", 0}};
};
inline DomainRegistry& domain_registry()
{
    static DomainRegistry r;
    return r;
}
}  // namespace detail

inline DomainId intern_domain(std::string_view name)
{
    auto& r = detail::domain_registry();
    std::lock_guard<std::mutex> lock(r.mu);
    auto it = r.ids.find(std::string(name));
    if (it != r.ids.end()) return it->second;
    DomainId id = static_cast<DomainId>(r.names.size());
    r.names.emplace_back(name);
    r.ids.emplace(std::string(name), id);
    return id;
}

inline const std::string& domain_name(DomainId id)
{
    auto& r = detail::domain_registry();
    std::lock_guard<std::mutex> lock(r.mu);
    return r.names.at(id);
}

}  // namespace mha

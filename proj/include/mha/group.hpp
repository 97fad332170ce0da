#pragma once

#include <array>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "key.hpp"

namespace mha {

// A discrete group on one-integer keys.
struct Group {
    std::string name;
    Key identity;
    std::function<Key(const Key&, const Key&)> mul;
    std::function<Key(const Key&)> inv;
    std::optional<std::vector<Key>> elements;
    std::function<std::vector<Key>(int)> sampler;

    bool finite() const { return elements.has_value(); }
    std::size_t order() const { return elements ? elements->size() : 0; }
    std::vector<Key> sample(int r) const { return elements ? *elements : sampler(r); }
};

using GroupPtr = std::shared_ptr<const Group>;

inline GroupPtr cyclic_group(int n)
{
    auto g = std::make_shared<Group>();
    g->name = "Z" + std::to_string(n);
    g->identity = Key{0};
    g->mul = [n](const Key& a, const Key& b) { return Key{(a[0] + b[0]) % n}; };
    g->inv = [n](const Key& a) { return Key{(n - a[0]) % n}; };
    std::vector<Key> els;
    for (int i = 0; i < n; ++i) els.push_back(Key{i});
    g->elements = els;
    return g;
}

inline GroupPtr integer_group()
{
    auto g = std::make_shared<Group>();
    g->name = "Z";
    g->identity = Key{0};
    g->mul = [](const Key& a, const Key& b) { return Key{a[0] + b[0]}; };
    g->inv = [](const Key& a) { return Key{-a[0]}; };
    g->sampler = [](int r) {
        std::vector<Key> v;
        for (int i = -r; i <= r; ++i) v.push_back(Key{i});
        return v;
    };
    return g;
}

// Permutations of {0,1,2} in lexicographic order of their images:
// 0 = id, 1 = (0 2 1), 2 = (1 0 2), 3 = (1 2 0), 4 = (2 0 1), 5 = (2 1 0).
// Product is composition, (pq)(i) = p(q(i)).
inline const std::array<std::array<int, 3>, 6>& s3_perms()
{
    static const std::array<std::array<int, 3>, 6> p{{{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
    return p;
}

inline int s3_index(const std::array<int, 3>& q)
{
    const auto& p = s3_perms();
    for (int i = 0; i < 6; ++i)
        if (p[i] == q) return i;
    throw Error(ErrorKind::DomainMismatch, "not a permutation of 3 letters");
}

inline GroupPtr symmetric_group3()
{
    auto g = std::make_shared<Group>();
    g->name = "S3";
    g->identity = Key{0};
    g->mul = [](const Key& a, const Key& b) {
        const auto& P = s3_perms();
        std::array<int, 3> r{};
        for (int i = 0; i < 3; ++i) r[i] = P[a[0]][P[b[0]][i]];
        return Key{s3_index(r)};
    };
    g->inv = [](const Key& a) {
        const auto& P = s3_perms();
        std::array<int, 3> r{};
        for (int i = 0; i < 3; ++i) r[P[a[0]][i]] = i;
        return Key{s3_index(r)};
    };
    std::vector<Key> els;
    for (int i = 0; i < 6; ++i) els.push_back(Key{i});
    g->elements = els;
    return g;
}

// "Z1", "Z2", "Zn", "Z", "S3".
inline GroupPtr group_by_name(const std::string& s)
{
    if (s == "Z") return integer_group();
    if (s == "S3") return symmetric_group3();
    if (s.size() > 1 && s[0] == 'Z') {
        try {
            std::size_t used = 0;
            int n = std::stoi(s.substr(1), &used);
            if (used == s.size() - 1 && n >= 1 && n <= 64) return cyclic_group(n);
        } catch (const std::exception&) {
        }
    }
    throw Error(ErrorKind::UnknownInstance, "group '" + s + "'");
}

}  // namespace mha

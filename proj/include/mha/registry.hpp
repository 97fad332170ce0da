#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>

#include "duality.hpp"

namespace mha {

// Instance ids:
//   C | K(G) | C[G] | M(n,<id>) | tensor(<id>,<id>) | dual(<id>) | <file>.json
// with G one of Z, Zn, S3.  M(n,<id>) is an algebra only.

namespace detail {

inline std::string trim(const std::string& s)
{
    auto b = s.find_first_not_of(" \t\n");
    if (b == std::string::npos) return {};
    return s.substr(b, s.find_last_not_of(" \t\n") - b + 1);
}

// Splits "x,y" at the first top-level comma.
inline std::optional<std::pair<std::string, std::string>> split_args(const std::string& s)
{
    int depth = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        if (c == '(' || c == '[') ++depth;
        if (c == ')' || c == ']') --depth;
        if (c == ',' && depth == 0) return std::make_pair(trim(s.substr(0, i)), trim(s.substr(i + 1)));
    }
    return std::nullopt;
}

// "head(" ... ")" → inner text.
inline std::optional<std::string> call_args(const std::string& s, const std::string& head, char open = '(',
                                            char close = ')')
{
    std::string pre = head + open;
    if (s.size() < pre.size() + 1 || s.compare(0, pre.size(), pre) != 0 || s.back() != close) return std::nullopt;
    return s.substr(pre.size(), s.size() - pre.size() - 1);
}

inline bool looks_like_file(const std::string& s)
{
    return s.size() > 5 && s.compare(s.size() - 5, 5, ".json") == 0;
}

inline std::string line_col(const std::string& text, std::size_t byte)
{
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

inline json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::UnknownInstance, "cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    std::string text = ss.str();
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::MalformedSpec, path + ": " + line_col(text, e.byte) + ": invalid JSON");
    }
}

// Runs f, prefixing MalformedSpec messages with the field path.
template <typename F>
auto at_field(const std::string& origin, const std::string& field, F&& f) -> decltype(f())
{
    try {
        return f();
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::MalformedSpec) throw;
        std::string msg = e.what();
        msg = msg.substr(msg.find(": ") + 2);
        throw Error(ErrorKind::MalformedSpec, origin + ": field '" + field + "': " + msg);
    } catch (const json::exception& e) {
        throw Error(ErrorKind::MalformedSpec, origin + ": field '" + field + "': " + e.what());
    }
}

inline const json& require(const json& j, const std::string& origin, const std::string& field)
{
    if (!j.is_object()) throw Error(ErrorKind::MalformedSpec, origin + ": top level must be an object");
    if (!j.contains(field)) throw Error(ErrorKind::MalformedSpec, origin + ": missing field '" + field + "'");
    return j.at(field);
}

inline std::string require_string(const json& j, const std::string& origin, const std::string& field)
{
    const json& v = require(j, origin, field);
    if (!v.is_string()) throw Error(ErrorKind::MalformedSpec, origin + ": field '" + field + "' must be a string");
    return v.get<std::string>();
}

// Rows [[k1, k2], re_num, re_den, im_num, im_den].
inline Tensor tensor_from_json(const json& j, DomainId dom)
{
    if (!j.is_array()) throw Error(ErrorKind::MalformedSpec, "tensor must be an array of rows");
    Tensor t(dom, 2);
    for (const auto& row : j) {
        if (!row.is_array() || row.size() != 5 || !row[0].is_array() || row[0].size() != 2)
            throw Error(ErrorKind::MalformedSpec, "tensor row must be [[key, key], re_num, re_den, im_num, im_den]");
        if (integer_from_json(row[2]) == 0 || integer_from_json(row[4]) == 0)
            throw Error(ErrorKind::MalformedSpec, "zero denominator in tensor row");
        mpq_class re(integer_from_json(row[1]), integer_from_json(row[2]));
        mpq_class im(integer_from_json(row[3]), integer_from_json(row[4]));
        t.add_term({key_from_json(row[0][0]), key_from_json(row[0][1])}, Scalar(re, im));
    }
    return t;
}

// Rows [key, value] where value is parsed by f; returns a table on keys.
template <typename V, typename F>
std::map<Key, V> keyed_table(const json& j, F&& f)
{
    if (!j.is_array()) throw Error(ErrorKind::MalformedSpec, "table must be an array of [key, value] rows");
    std::map<Key, V> t;
    std::size_t i = 0;
    for (const auto& row : j) {
        if (!row.is_array() || row.size() != 2)
            throw Error(ErrorKind::MalformedSpec, "row " + std::to_string(i) + " must be [key, value]");
        Key k = key_from_json(row[0]);
        if (!t.emplace(k, f(row[1])).second)
            throw Error(ErrorKind::MalformedSpec, "row " + std::to_string(i) + " repeats a key");
        ++i;
    }
    return t;
}

inline std::function<Element(const Key&)> element_table(const json& j, DomainId dom, const std::vector<Key>* basis)
{
    auto t = keyed_table<Element>(j, [dom](const json& v) { return element_from_json(v, dom); });
    if (basis)
        for (const auto& k : *basis)
            if (!t.count(k)) throw Error(ErrorKind::MalformedSpec, "no row for key " + to_json(k).dump());
    return [t, dom](const Key& k) {
        auto it = t.find(k);
        return it == t.end() ? Element(dom) : it->second;
    };
}

inline Functional scalar_table(const json& j, const std::vector<Key>* basis)
{
    auto t = keyed_table<Scalar>(j, [](const json& v) { return scalar_from_json(v); });
    if (basis)
        for (const auto& k : *basis)
            if (!t.count(k)) throw Error(ErrorKind::MalformedSpec, "no row for key " + to_json(k).dump());
    return [t](const Key& k) {
        auto it = t.find(k);
        return it == t.end() ? Scalar(0) : it->second;
    };
}

// Two-sided identity of a finite algebra, if any.
inline std::optional<Element> solve_identity(const Algebra& A)
{
    DomainId sd = intern_domain(A.name + "|identity-system");
    const auto& B = *A.basis;
    std::vector<Element> gens;
    for (const auto& e : B) {
        Element g(sd);
        for (std::size_t i = 0; i < B.size(); ++i) {
            for (const auto& [k, c] : A.product(e, B[i]).terms()) g.add_term(concat(Key{0, int(i)}, k), c);
            for (const auto& [k, c] : A.product(B[i], e).terms()) g.add_term(concat(Key{1, int(i)}, k), c);
        }
        gens.push_back(g);
    }
    Element target(sd);
    for (std::size_t i = 0; i < B.size(); ++i) {
        target.add_term(concat(Key{0, int(i)}, B[i]), Scalar(1));
        target.add_term(concat(Key{1, int(i)}, B[i]), Scalar(1));
    }
    auto sol = linear_solve(gens, target);
    if (!sol) return std::nullopt;
    return combine(*sol, [&] {
        std::vector<Element> es;
        for (const auto& k : B) es.push_back(A.e(k));
        return es;
    }(), A.dom);
}

// Inverse of a basis map on a finite space, if it is bijective.
inline std::optional<std::function<Element(const Key&)>> invert_basis_map(const Space& V,
                                                                           const std::function<Element(const Key&)>& f)
{
    const auto& B = *V.basis;
    const std::size_t n = B.size();
    Matrix M = zero_matrix(n, n);  // column j = f(e_j)
    for (std::size_t j = 0; j < n; ++j)
        for (const auto& [k, c] : f(B[j]).terms()) M[key_index(B, k)][j] = c;
    auto Mi = invert(M);
    if (!Mi) return std::nullopt;
    std::map<Key, Element> table;
    for (std::size_t j = 0; j < n; ++j) {
        Element r(V.dom);
        for (std::size_t i = 0; i < n; ++i) r.add_term(B[i], (*Mi)[i][j]);
        table.emplace(B[j], r);
    }
    return [table](const Key& k) { return table.at(k); };
}

}  // namespace detail

class Registry {
public:
    GroupPtr group(const std::string& name) { return group_by_name(detail::trim(name)); }

    MhaPtr mha(const std::string& raw)
    {
        std::string id = detail::trim(raw);
        if (auto it = mhas_.find(id); it != mhas_.end()) return it->second;
        MhaPtr h = build_mha(id);
        mhas_.emplace(id, h);
        return h;
    }

    // Any instance id, including matrix algebras.
    AlgebraPtr algebra(const std::string& raw)
    {
        std::string id = detail::trim(raw);
        if (auto args = detail::call_args(id, "M")) {
            auto parts = detail::split_args(*args);
            if (!parts) throw Error(ErrorKind::UnknownInstance, "'" + id + "': expected M(n,<id>)");
            int n = 0;
            try {
                std::size_t used = 0;
                n = std::stoi(parts->first, &used);
                if (used != parts->first.size()) n = 0;
            } catch (const std::exception&) {
            }
            if (n < 1 || n > 16) throw Error(ErrorKind::UnknownInstance, "'" + id + "': bad matrix size");
            return matrix_algebra(n, algebra(parts->second));
        }
        return mha(id)->alg;
    }

    // The quantum-group record; duals are linked to their originals.
    AqgPtr aqg(const std::string& raw)
    {
        std::string id = detail::trim(raw);
        if (auto it = aqgs_.find(id); it != aqgs_.end()) return it->second;
        AqgPtr g;
        if (auto inner = detail::call_args(id, "dual")) {
            g = finite_dual(aqg(*inner));
            mhas_.emplace(id, g->base);
        } else {
            g = make_aqg(mha(id));
        }
        aqgs_.emplace(id, g);
        return g;
    }

    MhaPtr load_instance(const json& spec, const std::string& origin)
    {
        if (!spec.is_object()) throw Error(ErrorKind::MalformedSpec, origin + ": top level must be an object");
        if (spec.contains("base")) return load_with_base(spec, origin);
        return load_tables(spec, origin);
    }

    // Action ids: translation(G), grading(G), adjoint(<id>), trivial(<A>,<R>),
    // or an action description file.
    ActionPtr action(const std::string& raw)
    {
        std::string id = detail::trim(raw);
        if (detail::looks_like_file(id) || std::filesystem::exists(id)) return load_action(detail::read_json_file(id), id);
        if (auto g = detail::call_args(id, "translation")) return translation_action(group(*g));
        if (auto g = detail::call_args(id, "grading")) return grading_action(group(*g));
        if (auto h = detail::call_args(id, "adjoint")) return adjoint_action(mha(*h));
        if (auto args = detail::call_args(id, "trivial")) {
            auto parts = detail::split_args(*args);
            if (!parts) throw Error(ErrorKind::UnknownInstance, "'" + id + "': expected trivial(<A>,<R>)");
            return trivial_action(mha(parts->first), algebra(parts->second));
        }
        throw Error(ErrorKind::UnknownInstance, "action '" + id + "'");
    }

    // {algebra_id, space_id, rule} with rule one of "translation", "grading",
    // "adjoint", "trivial", {"inner": "identity" | "counit" | [[a, x]...]},
    // {"table": [[a, x, element]...]}.
    ActionPtr load_action(const json& spec, const std::string& origin)
    {
        std::string aid = detail::require_string(spec, origin, "algebra_id");
        std::string sid = detail::require_string(spec, origin, "space_id");
        const json& rule = detail::require(spec, origin, "rule");
        MhaPtr A = detail::at_field(origin, "algebra_id", [&] { return mha(aid); });
        AlgebraPtr R = detail::at_field(origin, "space_id", [&] { return algebra(sid); });
        ActionPtr s;
        if (rule.is_string()) {
            std::string r = rule.get<std::string>();
            if (r == "translation" || r == "grading") {
                bool tr = r == "translation";
                auto g = detail::call_args(aid, tr ? "C" : "K", tr ? '[' : '(', tr ? ']' : ')');
                auto gs = detail::call_args(sid, tr ? "K" : "C", tr ? '(' : '[', tr ? ')' : ']');
                if (!g || !gs || *g != *gs)
                    throw Error(ErrorKind::MalformedSpec, origin + ": field 'rule': " + r + " needs " +
                                                              (tr ? "C[G] acting on K(G)" : "K(G) acting on C[G]"));
                s = tr ? translation_action(group(*g)) : grading_action(group(*g));
            } else if (r == "adjoint") {
                if (detail::trim(aid) != detail::trim(sid))
                    throw Error(ErrorKind::MalformedSpec, origin + ": field 'rule': adjoint needs space_id = algebra_id");
                s = adjoint_action(A);
            } else if (r == "trivial") {
                s = trivial_action(A, R);
            } else {
                throw Error(ErrorKind::MalformedSpec, origin + ": field 'rule': unknown rule '" + r + "'");
            }
        } else if (rule.is_object() && rule.contains("inner")) {
            s = detail::at_field(origin, "rule.inner", [&] { return inner_rule(A, R, rule.at("inner")); });
        } else if (rule.is_object() && rule.contains("table")) {
            s = detail::at_field(origin, "rule.table", [&] { return table_rule(A, R, rule.at("table")); });
        } else {
            throw Error(ErrorKind::MalformedSpec, origin + ": field 'rule': expected a rule name, {inner} or {table}");
        }
        if (spec.contains("name")) {
            auto p = std::const_pointer_cast<Action>(s);
            p->name = detail::at_field(origin, "name", [&] { return spec.at("name").get<std::string>(); });
        }
        std::const_pointer_cast<Action>(s)->description = spec;
        return s;
    }

private:
    std::map<std::string, MhaPtr> mhas_;
    std::map<std::string, AqgPtr> aqgs_;

    MhaPtr build_mha(const std::string& id)
    {
        if (id.empty()) throw Error(ErrorKind::UnknownInstance, "empty instance id");
        if (detail::looks_like_file(id) || std::filesystem::exists(id))
            return load_instance(detail::read_json_file(id), id);
        if (id == "C") return complex_numbers();
        if (auto g = detail::call_args(id, "K")) return function_algebra(group(*g));
        if (auto g = detail::call_args(id, "C", '[', ']')) return group_algebra(group(*g));
        if (detail::call_args(id, "dual")) return aqg(id)->base;
        if (auto args = detail::call_args(id, "tensor")) {
            auto parts = detail::split_args(*args);
            if (!parts) throw Error(ErrorKind::UnknownInstance, "'" + id + "': expected tensor(<id>,<id>)");
            return tensor_mha(mha(parts->first), mha(parts->second));
        }
        if (detail::call_args(id, "M"))
            throw Error(ErrorKind::UnknownInstance, "'" + id + "' is an algebra, not a multiplier Hopf algebra");
        throw Error(ErrorKind::UnknownInstance, "'" + id + "'");
    }

    // {base, name?, overrides: {counit?, antipode?, antipode_inv?}}
    MhaPtr load_with_base(const json& spec, const std::string& origin)
    {
        std::string bid = detail::require_string(spec, origin, "base");
        MhaPtr base = detail::at_field(origin, "base", [&] { return mha(bid); });
        auto h = std::make_shared<RegularMHA>(*base);
        h->name = spec.contains("name") ? detail::at_field(origin, "name", [&] { return spec.at("name").get<std::string>(); })
                                        : origin;
        h->description = spec;
        if (!spec.contains("overrides")) return h;
        const json& ov = spec.at("overrides");
        if (!ov.is_object()) throw Error(ErrorKind::MalformedSpec, origin + ": field 'overrides' must be an object");
        DomainId d = h->dom();
        for (const auto& [field, val] : ov.items()) {
            std::string path = "overrides." + field;
            if (field == "counit")
                h->counit = detail::at_field(origin, path, [&] { return detail::scalar_table(val, nullptr); });
            else if (field == "antipode")
                h->antipode = detail::at_field(origin, path, [&] { return detail::element_table(val, d, nullptr); });
            else if (field == "antipode_inv")
                h->antipode_inv = detail::at_field(origin, path, [&] { return detail::element_table(val, d, nullptr); });
            else
                throw Error(ErrorKind::MalformedSpec, origin + ": field '" + path + "': not overridable");
        }
        return h;
    }

    // {domain, basis, product, coproduct, counit, antipode, antipode_inv?}
    MhaPtr load_tables(const json& spec, const std::string& origin)
    {
        std::string name = detail::require_string(spec, origin, "domain");
        auto A = std::make_shared<Algebra>();
        A->name = name;
        A->dom = intern_domain(name);
        std::vector<Key> basis = detail::at_field(origin, "basis", [&] {
            const json& b = detail::require(spec, origin, "basis");
            if (!b.is_array() || b.empty()) throw Error(ErrorKind::MalformedSpec, "must be a nonempty array of keys");
            std::vector<Key> ks;
            for (const auto& k : b) ks.push_back(key_from_json(k));
            std::set<Key> seen(ks.begin(), ks.end());
            if (seen.size() != ks.size()) throw Error(ErrorKind::MalformedSpec, "repeated basis key");
            for (const auto& k : ks)
                if (k.size() != ks[0].size()) throw Error(ErrorKind::MalformedSpec, "basis keys differ in length");
            return ks;
        });
        A->key_len = basis[0].size();
        A->basis = basis;
        std::set<Key> inbasis(basis.begin(), basis.end());
        DomainId d = A->dom;
        auto in_basis = [&](const Key& k) {
            if (!inbasis.count(k)) throw Error(ErrorKind::MalformedSpec, "key " + to_json(k).dump() + " is not in the basis");
        };

        auto products = detail::at_field(origin, "product", [&] {
            const json& t = detail::require(spec, origin, "product");
            if (!t.is_array()) throw Error(ErrorKind::MalformedSpec, "must be an array of [a, b, element] rows");
            std::map<std::pair<Key, Key>, Element> m;
            std::size_t i = 0;
            for (const auto& row : t) {
                if (!row.is_array() || row.size() != 3)
                    throw Error(ErrorKind::MalformedSpec, "row " + std::to_string(i) + " must be [a, b, element]");
                Key a = key_from_json(row[0]), b = key_from_json(row[1]);
                in_basis(a);
                in_basis(b);
                Element e = element_from_json(row[2], d);
                for (const auto& [k, c] : e.terms()) in_basis(k);
                m[{a, b}] = e;
                ++i;
            }
            return m;
        });
        A->product = [products, d](const Key& a, const Key& b) {
            auto it = products.find({a, b});
            return it == products.end() ? Element(d) : it->second;
        };
        A->identity = detail::solve_identity(*A);
        if (!A->identity)
            throw Error(ErrorKind::MalformedSpec, origin + ": field 'product': finite algebra has no identity");

        auto coproducts = detail::at_field(origin, "coproduct", [&] {
            auto t = detail::keyed_table<Tensor>(detail::require(spec, origin, "coproduct"),
                                                 [d](const json& v) { return detail::tensor_from_json(v, d); });
            for (const auto& k : basis)
                if (!t.count(k)) throw Error(ErrorKind::MalformedSpec, "no row for key " + to_json(k).dump());
            return t;
        });
        Functional eps = detail::at_field(origin, "counit",
                                          [&] { return detail::scalar_table(detail::require(spec, origin, "counit"), &basis); });
        auto S = detail::at_field(origin, "antipode", [&] {
            return detail::element_table(detail::require(spec, origin, "antipode"), d, &basis);
        });
        std::function<Element(const Key&)> Sinv;
        if (spec.contains("antipode_inv")) {
            Sinv = detail::at_field(origin, "antipode_inv",
                                    [&] { return detail::element_table(spec.at("antipode_inv"), d, &basis); });
        } else {
            auto inv = detail::invert_basis_map(*A, S);
            if (!inv)
                throw Error(ErrorKind::MalformedSpec,
                            origin + ": field 'antipode_inv': required since the antipode is not invertible");
            Sinv = *inv;
        }
        auto h = std::const_pointer_cast<RegularMHA>(make_finite_mha(
            name, A, [coproducts](const Key& a) { return coproducts.at(a); }, eps, S, Sinv));
        if (spec.contains("quantum_group"))
            h->quantum_group = detail::at_field(origin, "quantum_group", [&] { return spec.at("quantum_group").get<bool>(); });
        h->description = spec;
        return h;
    }

    ActionPtr inner_rule(const MhaPtr& A, const AlgebraPtr& R, const json& g)
    {
        MultiplierMap gamma;
        if (g.is_string() && g.get<std::string>() == "counit") {
            gamma = counit_embedding(A);
        } else if (g.is_string() && g.get<std::string>() == "identity") {
            if (A->alg->dom != R->dom) throw Error(ErrorKind::MalformedSpec, "identity embedding needs space_id = algebra_id");
            gamma = identity_embedding(A);
        } else {
            auto f = detail::element_table(g, R->dom, nullptr);
            gamma = [R, f](const Key& a) { return as_multiplier(R, f(a)); };
        }
        return inner_action_from(A, R, gamma);
    }

    ActionPtr table_rule(const MhaPtr& A, const AlgebraPtr& R, const json& t)
    {
        if (!t.is_array()) throw Error(ErrorKind::MalformedSpec, "must be an array of [a, x, element] rows");
        std::map<std::pair<Key, Key>, Element> m;
        std::size_t i = 0;
        for (const auto& row : t) {
            if (!row.is_array() || row.size() != 3)
                throw Error(ErrorKind::MalformedSpec, "row " + std::to_string(i) + " must be [a, x, element]");
            m[{key_from_json(row[0]), key_from_json(row[1])}] = element_from_json(row[2], R->dom);
            ++i;
        }
        DomainId d = R->dom;
        return make_action("table(" + A->name + "," + R->name + ")", A, R, [m, d](const Key& a, const Key& x) {
            auto it = m.find({a, x});
            return it == m.end() ? Element(d) : it->second;
        });
    }
};

}  // namespace mha

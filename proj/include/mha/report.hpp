#pragma once

#include <json.hpp>

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "element.hpp"

namespace mha {

using json = nlohmann::ordered_json;

enum class Status { Pass, Fail, SampledPass, Skipped };

inline const char* status_name(Status s)
{
    switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::SampledPass: return "sampled-pass";
    case Status::Skipped: return "skipped";
    }
    return "?";
}

struct Check {
    std::string name;
    Status status = Status::Pass;
    json witness;        // failing inputs; null on success
    std::string detail;  // short human-readable note (dimensions, counts)
};

struct Report {
    std::vector<std::string> instances;
    std::vector<Check> checks;

    bool ok() const
    {
        for (const auto& c : checks)
            if (c.status == Status::Fail) return false;
        return true;
    }
    const Check* find(const std::string& name) const
    {
        for (const auto& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }
    bool passed(const std::string& name) const
    {
        const Check* c = find(name);
        return c && (c->status == Status::Pass || c->status == Status::SampledPass);
    }
    void add(Check c) { checks.push_back(std::move(c)); }
    void add(const std::string& name, bool ok, bool sampled = false, json witness = nullptr, std::string detail = {})
    {
        Status s = ok ? (sampled ? Status::SampledPass : Status::Pass) : Status::Fail;
        checks.push_back(Check{name, s, ok ? json(nullptr) : std::move(witness), std::move(detail)});
    }
    void merge(const Report& o, const std::string& prefix = {})
    {
        for (auto c : o.checks) {
            if (!prefix.empty()) c.name = prefix + c.name;
            checks.push_back(std::move(c));
        }
    }
    std::string failures() const
    {
        std::string s;
        for (const auto& c : checks)
            if (c.status == Status::Fail) s += c.name + " " + c.witness.dump() + "\n";
        return s;
    }
};

// Runs pred over all inputs; the first failure becomes the witness.
template <typename T>
void check_all(Report& rep, const std::string& name, bool sampled, const std::vector<T>& inputs,
               const std::function<std::optional<json>(const T&)>& pred, std::string detail = {})
{
    for (const auto& in : inputs) {
        if (auto w = pred(in)) {
            rep.add(Check{name, Status::Fail, *w, detail});
            return;
        }
    }
    if (detail.empty()) detail = std::to_string(inputs.size()) + " cases";
    rep.add(Check{name, sampled ? Status::SampledPass : Status::Pass, nullptr, detail});
}

// JSON form of an element: sorted [key, re_num, re_den, im_num, im_den] rows.
inline json scalar_part(const mpz_class& z)
{
    if (z.fits_slong_p()) return json(z.get_si());
    return json(z.get_str());
}

inline json to_json(const Key& k)
{
    json a = json::array();
    for (int i = 0; i < k.size(); ++i) a.push_back(k[i]);
    return a;
}

inline json to_json(const Element& e)
{
    json a = json::array();
    for (const auto& [k, c] : e.terms())
        a.push_back(json::array({to_json(k), scalar_part(c.re().get_num()), scalar_part(c.re().get_den()),
                                 scalar_part(c.im().get_num()), scalar_part(c.im().get_den())}));
    return a;
}

inline json to_json(const Tensor& t)
{
    json a = json::array();
    for (const auto& [ks, c] : t.terms()) {
        json legs = json::array();
        for (const auto& k : ks) legs.push_back(to_json(k));
        a.push_back(json::array({legs, scalar_part(c.re().get_num()), scalar_part(c.re().get_den()),
                                 scalar_part(c.im().get_num()), scalar_part(c.im().get_den())}));
    }
    return a;
}

inline json to_json(const Scalar& s) { return s.str(); }

inline Key key_from_json(const json& j)
{
    Key k;
    if (j.is_number_integer()) {
        k.push(j.get<std::int32_t>());
        return k;
    }
    if (!j.is_array()) throw Error(ErrorKind::MalformedSpec, "key must be an integer or an array of integers");
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw Error(ErrorKind::MalformedSpec, "key entries must be integers");
        k.push(x.get<std::int32_t>());
    }
    return k;
}

inline mpz_class integer_from_json(const json& j)
{
    if (j.is_number_integer()) return mpz_class(std::to_string(j.get<long long>()));
    if (j.is_string()) return mpz_class(j.get<std::string>());
    throw Error(ErrorKind::MalformedSpec, "expected an integer or an integer string");
}

inline Scalar scalar_from_json(const json& j)
{
    if (j.is_number_integer()) return Scalar(mpq_class(integer_from_json(j)));
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        try {
            return Scalar(mpq_class(s));
        } catch (const std::exception&) {
            throw Error(ErrorKind::MalformedSpec, "bad scalar '" + s + "'");
        }
    }
    if (j.is_array() && j.size() == 2) return Scalar(scalar_from_json(j[0]).re(), scalar_from_json(j[1]).re());
    throw Error(ErrorKind::MalformedSpec, "bad scalar " + j.dump());
}

inline Element element_from_json(const json& j, DomainId dom)
{
    if (!j.is_array()) throw Error(ErrorKind::MalformedSpec, "element must be an array of rows");
    Element e(dom);
    for (const auto& row : j) {
        if (!row.is_array() || row.size() != 5)
            throw Error(ErrorKind::MalformedSpec, "element row must be [key, re_num, re_den, im_num, im_den]");
        if (integer_from_json(row[2]) == 0 || integer_from_json(row[4]) == 0)
            throw Error(ErrorKind::MalformedSpec, "zero denominator in element row");
        mpq_class re(integer_from_json(row[1]), integer_from_json(row[2]));
        mpq_class im(integer_from_json(row[3]), integer_from_json(row[4]));
        e.add_term(key_from_json(row[0]), Scalar(re, im));
    }
    return e;
}

}  // namespace mha

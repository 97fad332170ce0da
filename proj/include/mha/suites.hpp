#pragma once

#include <chrono>
#include <random>

#include "registry.hpp"

namespace mha {

struct SuiteOptions {
    int sample_range = 5;
    bool sampled = false;  // sampled instead of exhaustive smash associativity
    std::uint64_t seed = 1;
    bool recheck = false;  // recompute smash certificates after construction
    bool timing = false;
    std::optional<std::vector<Key>> keys;  // restricts axiom and integral samples
};

// What to run on: instance ids or files, a group, action ids or files, and
// an explicit (R, A) duality pair where R is an action or "trivial".
struct Selection {
    std::vector<std::string> instances;
    std::optional<std::string> group;
    std::vector<std::string> actions;
    std::optional<std::string> R;
    std::optional<std::string> A;
};

struct SuiteLine {
    std::string suite;
    std::vector<std::string> instances;
    Check check;
    std::optional<long> ms;
};

struct SuiteRun {
    std::vector<SuiteLine> lines;

    bool ok() const
    {
        for (const auto& l : lines)
            if (l.check.status == Status::Fail) return false;
        return true;
    }

    json line_json(std::size_t i) const
    {
        const SuiteLine& l = lines[i];
        json j{{"index", i},
               {"suite", l.suite},
               {"instances", l.instances},
               {"check", l.check.name},
               {"status", status_name(l.check.status)},
               {"witness", l.check.witness},
               {"detail", l.check.detail}};
        if (l.ms) j["ms"] = *l.ms;
        return j;
    }

    std::string text_line(std::size_t i) const
    {
        const SuiteLine& l = lines[i];
        std::string who;
        for (const auto& s : l.instances) who += (who.empty() ? "" : " ") + s;
        std::string out = "[" + std::string(status_name(l.check.status)) + "] " + l.suite + " " + who + ": " + l.check.name;
        if (!l.check.detail.empty()) out += " (" + l.check.detail + ")";
        if (!l.check.witness.is_null()) out += " witness " + l.check.witness.dump();
        if (l.ms) out += " " + std::to_string(*l.ms) + "ms";
        return out;
    }
};

inline const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{"axioms", "integrals", "actions", "smash", "pairing", "duality"};
    return names;
}

namespace detail {

class SuiteRunner {
public:
    SuiteRunner(Registry& reg, const Selection& sel, const SuiteOptions& opt) : reg_(reg), sel_(sel), opt_(opt) {}

    SuiteRun run(const std::string& suite)
    {
        if (suite == "all") {
            for (const auto& s : suite_names()) run_one(s);
        } else {
            run_one(suite);
        }
        return std::move(out_);
    }

private:
    Registry& reg_;
    const Selection& sel_;
    const SuiteOptions& opt_;
    SuiteRun out_;

    void run_one(const std::string& suite)
    {
        if (suite == "axioms") return axioms();
        if (suite == "integrals") return integrals();
        if (suite == "actions") return actions();
        if (suite == "smash") return smashes();
        if (suite == "pairing") return pairings();
        if (suite == "duality") return dualities();
        throw Error(ErrorKind::MalformedSpec, "unknown suite '" + suite + "'");
    }

    SmashOptions smash_options() const
    {
        SmashOptions o;
        o.full = !opt_.sampled;
        o.seed = opt_.seed;
        return o;
    }

    // Runs one item; library errors become a failing "error" line.
    void item(const std::string& suite, const std::vector<std::string>& who, const std::function<Report()>& f)
    {
        auto t0 = std::chrono::steady_clock::now();
        Report rep;
        try {
            rep = f();
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::UnknownInstance || e.kind() == ErrorKind::MalformedSpec) throw;
            rep.add(Check{"error", Status::Fail, json{{"error", error_kind_name(e.kind())}}, e.what()});
        }
        long ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
        for (auto& c : rep.checks) {
            SuiteLine l{suite, who, std::move(c), std::nullopt};
            if (opt_.timing) l.ms = ms;
            out_.lines.push_back(std::move(l));
        }
    }

    void skip(const std::string& suite, const std::vector<std::string>& who, const std::string& why)
    {
        out_.lines.push_back(SuiteLine{suite, who, Check{"all", Status::Skipped, nullptr, why}, std::nullopt});
    }

    std::vector<std::string> mha_ids() const
    {
        std::vector<std::string> ids = sel_.instances;
        if (sel_.group) {
            GroupPtr G = group_by_name(*sel_.group);
            ids.push_back("K(" + G->name + ")");
            ids.push_back("C[" + G->name + "]");
            if (G->finite()) {
                ids.push_back("dual(K(" + G->name + "))");
                ids.push_back("dual(C[" + G->name + "])");
            }
        }
        if (sel_.A) ids.push_back(*sel_.A);
        return ids;
    }

    std::vector<std::string> action_ids() const
    {
        std::vector<std::string> ids = sel_.actions;
        if (sel_.group) {
            std::string g = group_by_name(*sel_.group)->name;
            ids.push_back("translation(" + g + ")");
            ids.push_back("grading(" + g + ")");
            ids.push_back("adjoint(C[" + g + "])");
        }
        for (const auto& i : sel_.instances) ids.push_back("adjoint(" + i + ")");
        if (sel_.R) ids.push_back(*sel_.R == "trivial" && sel_.A ? "trivial(" + *sel_.A + ",C)" : *sel_.R);
        return ids;
    }

    std::vector<Key> sample_of(const RegularMHA& h) const
    {
        return opt_.keys ? *opt_.keys : h.alg->sample(opt_.sample_range);
    }

    // Random elements with 1..3 basis terms and small integer coefficients.
    std::vector<std::vector<Element>> random_families(const Algebra& A, int count, std::mt19937_64& rng) const
    {
        auto pool = A.sample(opt_.sample_range);
        std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
        std::uniform_int_distribution<int> coef(1, 3), size(1, 3);
        std::vector<std::vector<Element>> out;
        for (int i = 0; i < count; ++i) {
            std::vector<Element> fam;
            int m = size(rng);
            for (int j = 0; j < m; ++j) {
                Element x(A.dom);
                int t = size(rng);
                for (int k = 0; k < t; ++k) x.add_term(pool[pick(rng)], Scalar(coef(rng)));
                if (!x.is_zero()) fam.push_back(x);
            }
            if (!fam.empty()) out.push_back(fam);
        }
        return out;
    }

    void axioms()
    {
        for (const auto& id : mha_ids()) {
            MhaPtr h = reg_.mha(id);
            item("axioms", {h->name}, [&] {
                Report rep = verify_mha_axioms(*h, sample_of(*h));
                std::mt19937_64 rng(opt_.seed);
                auto fams = random_families(*h->alg, 20, rng);
                std::vector<Side> sides{Side::Left, Side::Right};
                if (h->quantum_group) sides.push_back(Side::TwoSided);
                for (Side side : sides) {
                    std::string nm = side == Side::Left ? "left" : side == Side::Right ? "right" : "two-sided";
                    check_all<std::vector<Element>>(rep, nm + " local units", !h->finite(), fams,
                                                    [&](const std::vector<Element>& fam) -> std::optional<json> {
                                                        Element e = find_local_units(*h, fam, side);
                                                        if (is_local_unit(*h->alg, e, fam, side)) return std::nullopt;
                                                        json w = json::array();
                                                        for (const auto& x : fam) w.push_back(to_json(x));
                                                        return json{{"items", w}};
                                                    });
                }
                return rep;
            });
        }
    }

    void integrals()
    {
        for (const auto& id : mha_ids()) {
            MhaPtr h = reg_.mha(id);
            if (!h->finite() && !h->left_integral_oracle) {
                skip("integrals", {h->name}, "no integral known for this infinite instance");
                continue;
            }
            item("integrals", {h->name}, [&] {
                AqgPtr g = reg_.aqg(id);
                Report rep = verify_integral(*g, sample_of(*h));
                try {
                    rep.add(Check{"type", Status::Pass, nullptr, quantum_type_name(classify_type(*h))});
                } catch (const Error& e) {
                    rep.add(Check{"type", Status::Skipped, nullptr, e.what()});
                }
                if (!h->finite()) return rep;
                rep.merge(verify_modular_automorphism(*g, compute_modular_automorphism(*g)));
                AqgPtr dd = reg_.aqg("dual(dual(" + id + "))");
                rep.merge(check_mha_isomorphism(*h, *dd->base, canonical_double_dual_map(dd)), "double dual ");
                return rep;
            });
        }
    }

    void actions()
    {
        for (const auto& id : action_ids()) {
            ActionPtr s = reg_.action(id);
            item("actions", {s->name}, [&] {
                Report rep = verify_module(*s, module_sample(*s, opt_.sample_range));
                rep.merge(verify_module_algebra(*s, opt_.sample_range));
                if (s->R->finite() && s->A->finite()) {
                    FixedPoints fp = fixed_points(s, FixedWhere::InMR);
                    rep.add(Check{"fixed points", Status::Pass, nullptr, "dim " + std::to_string(fp.dim())});
                    rep.merge(fp.certificate);
                }
                return rep;
            });
        }
    }

    void smashes()
    {
        for (const auto& id : action_ids()) {
            ActionPtr s = reg_.action(id);
            item("smash", {s->name}, [&] {
                SmashPtr sm = smash(s, smash_options());
                Report rep = sm->certificate;
                if (opt_.recheck) rep.merge(certify_smash(*sm, smash_options()), "recheck ");
                rep.merge(verify_pi_relations(sm));
                return rep;
            });
        }
    }

    std::vector<std::pair<std::string, PairPtr>> pairs()
    {
        std::vector<std::pair<std::string, PairPtr>> out;
        if (sel_.group) out.emplace_back("", canonical_pair(group_by_name(*sel_.group)));
        for (const auto& id : sel_.instances) {
            MhaPtr h = reg_.mha(id);
            if (!h->finite()) {
                skip("pairing", {h->name}, "duals are built for finite instances only");
                continue;
            }
            out.emplace_back(id, aqg_pair(reg_.aqg(id), reg_.aqg("dual(" + id + ")")));
        }
        return out;
    }

    void pairings()
    {
        for (const auto& [id, p] : pairs()) {
            item("pairing", {p->name}, [&] {
                Report rep = verify_pairing(p, opt_.sample_range);
                rep.merge(heisenberg_check(p));
                if (!p->A->finite()) return rep;
                SmashPtr ba = pairing_smash(p, PairOrder::BA, smash_options());
                SmashPtr ab = pairing_smash(p, PairOrder::AB, smash_options());
                rep.merge(ba->certificate, "B#A ");
                rep.merge(cross_check_pairing_smash(p, ba, PairOrder::BA), "B#A ");
                rep.merge(anti_isomorphism(p, ba, ab).certificate);
                rep.merge(smash_order_isomorphism(p, ba, ab).certificate);
                FixedPoints fp = pairing_fixed_points(p);
                rep.add("fixed points are scalars", fp.dim() == 1, false, json{{"dim", fp.dim()}},
                        "dim " + std::to_string(fp.dim()));
                AqgPtr g = id.empty() ? make_aqg(p->A) : reg_.aqg(id);
                rep.merge(rank_one_realization(g).certificate, "rank one ");
                return rep;
            });
        }
    }

    void duality_item(const ActionPtr& s)
    {
        if (!s->A->finite() || !s->R->finite()) {
            skip("duality", {s->name}, "duality is built for finite instances only");
            return;
        }
        item("duality", {s->name}, [&] {
            DualityResult d = duality_theorem(s, smash_options());
            Report rep = d.certificate;
            bool ok = rep.passed("matrix form multiplicative") && rep.passed("matrix form bijective");
            rep.add(Check{"matrix-algebra identification", ok ? Status::Pass : Status::Fail,
                          ok ? json(nullptr) : json{{"target", d.matrices->name}},
                          "bismash dim " + std::to_string(d.bismash->alg->dim()) + " = " + d.matrices->name});
            rep.merge(fixed_point_theorem_check(d.smash, d.pair));
            return rep;
        });
    }

    void dualities()
    {
        if (sel_.R) {
            if (!sel_.A && *sel_.R == "trivial") throw Error(ErrorKind::MalformedSpec, "--R trivial needs --A <id>");
            ActionPtr s = *sel_.R == "trivial" ? trivial_action(reg_.mha(*sel_.A), complex_numbers()->alg) : reg_.action(*sel_.R);
            if (sel_.A && s->A->name != reg_.mha(*sel_.A)->name)
                throw Error(ErrorKind::MalformedSpec, "--R acts by " + s->A->name + ", not by --A " + *sel_.A);
            duality_item(s);
        }
        std::vector<std::string> ids;
        if (sel_.group) {
            std::string g = group_by_name(*sel_.group)->name;
            ids.push_back("trivial(C[" + g + "],C)");
            ids.push_back("translation(" + g + ")");
            ids.push_back("adjoint(C[" + g + "])");
        }
        for (const auto& i : sel_.instances) ids.push_back("trivial(" + i + ",C)");
        for (const auto& a : sel_.actions) ids.push_back(a);
        for (const auto& id : ids) duality_item(reg_.action(id));
        if (sel_.group && group_by_name(*sel_.group)->finite()) {
            PairPtr p = canonical_pair(group_by_name(*sel_.group));
            item("duality", {p->name, "coaction"}, [&] {
                CoactionPtr c = delta_coaction(p->B);
                Report rep = verify_coaction(*c);
                rep.merge(coaction_duality_check(p, smash_options()).certificate);
                return rep;
            });
        }
    }
};

}  // namespace detail

// Deterministic: items and checks are emitted in a fixed order.
inline SuiteRun run_suite(const std::string& suite, const Selection& sel, const SuiteOptions& opt = {})
{
    if (suite != "all" && std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end())
        throw Error(ErrorKind::MalformedSpec, "unknown suite '" + suite + "'");
    if (sel.instances.empty() && !sel.group && sel.actions.empty() && !sel.R && !sel.A)
        throw Error(ErrorKind::UnknownInstance, "nothing selected: give --instance, --group, --action or --R/--A");
    Registry reg;
    return detail::SuiteRunner(reg, sel, opt).run(suite);
}

}  // namespace mha

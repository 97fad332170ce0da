#include <CLI11.hpp>

#include <iostream>

#include "mha/all.hpp"

using namespace mha;

namespace {

json report_json(const Report& rep)
{
    json checks = json::array();
    for (const auto& c : rep.checks)
        checks.push_back(json{{"check", c.name}, {"status", status_name(c.status)}, {"witness", c.witness}, {"detail", c.detail}});
    return json{{"instances", rep.instances}, {"ok", rep.ok()}, {"checks", checks}};
}

SmashOptions smash_options(const std::string& verify, std::uint64_t seed)
{
    SmashOptions o;
    o.full = verify != "sampled";
    o.seed = seed;
    return o;
}

std::vector<Key> parse_keys(const std::string& text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error&) {
        throw Error(ErrorKind::MalformedSpec, "--keys: invalid JSON");
    }
    if (!j.is_array()) throw Error(ErrorKind::MalformedSpec, "--keys: expected an array of keys");
    std::vector<Key> ks;
    for (const auto& k : j) ks.push_back(key_from_json(k));
    return ks;
}

// Structure constants of a finite algebra as [u, v, element] rows.
json structure_constants(const Algebra& A)
{
    json rows = json::array();
    for (const auto& u : *A.basis)
        for (const auto& v : *A.basis) {
            Element p = A.product(u, v);
            if (!p.is_zero()) rows.push_back(json::array({to_json(u), to_json(v), to_json(p)}));
        }
    return rows;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Multiplier Hopf algebras: verification suites, smash products, pairings and duality"};
    app.require_subcommand(1);

    std::string verify = "full";
    std::uint64_t seed = 1;
    bool recheck = false;
    auto common = [&](CLI::App* sc, bool verify_mode = true) {
        if (verify_mode)
            sc->add_option("--verify", verify, "full or sampled associativity checks")->check(CLI::IsMember({"full", "sampled"}));
        sc->add_option("--seed", seed, "seed for randomized sampling");
        sc->add_flag("--recheck-certificates", recheck, "recompute construction certificates");
    };

    auto* rs = app.add_subcommand("run_suite", "run a verification suite, one report line per check");
    std::string suite;
    Selection sel;
    std::string group, R, A, keys;
    SuiteOptions opt;
    bool as_json = false;
    rs->add_option("suite", suite, "axioms|integrals|actions|smash|pairing|duality|all")->required();
    rs->add_option("--instance", sel.instances, "instance id or description file (repeatable)");
    rs->add_option("--group", group, "group id: Z, Zn, S3");
    rs->add_option("--action", sel.actions, "action id or description file (repeatable)");
    rs->add_option("--R", R, "acted-on algebra for duality: action id, action file, or trivial");
    rs->add_option("--A", A, "acting quantum group id for duality");
    rs->add_option("--sample-range", opt.sample_range, "support window for infinite instances")->check(CLI::Range(1, 50));
    rs->add_option("--keys", keys, "JSON array of basis keys to check on, e.g. a failure witness");
    rs->add_flag("--json", as_json, "emit JSON lines");
    rs->add_flag("--timing", opt.timing, "add wall-clock milliseconds per item");
    common(rs);

    auto* sm = app.add_subcommand("smash", "build a smash product and print its structure constants");
    std::string action;
    sm->add_option("--action", action, "action id or description file")->required();
    common(sm);

    auto* pr = app.add_subcommand("pair", "build the canonical pair of a group");
    std::string pgroup;
    bool pverify = false;
    pr->add_option("--group", pgroup, "group id")->required();
    pr->add_flag("--verify", pverify, "run the pairing axiom suite");
    common(pr, false);

    auto* du = app.add_subcommand("duality", "build (R#A)#A^ and identify it with M_n(R)");
    std::string dR, dA;
    du->add_option("--R", dR, "action id, action file, or trivial")->required();
    du->add_option("--A", dA, "acting quantum group id")->required();
    common(du);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*rs) {
            if (!group.empty()) sel.group = group;
            if (!R.empty()) sel.R = R;
            if (!A.empty()) sel.A = A;
            if (!keys.empty()) opt.keys = parse_keys(keys);
            opt.sampled = verify == "sampled";
            opt.seed = seed;
            opt.recheck = recheck;
            SuiteRun run = run_suite(suite, sel, opt);
            for (std::size_t i = 0; i < run.lines.size(); ++i)
                std::cout << (as_json ? run.line_json(i).dump() : run.text_line(i)) << "\n";
            return run.ok() ? 0 : 1;
        }

        Registry reg;
        if (*sm) {
            ActionPtr s = reg.action(action);
            SmashPtr p = smash(s, smash_options(verify, seed));
            Report cert = p->certificate;
            if (recheck) cert.merge(certify_smash(*p, smash_options(verify, seed)), "recheck ");
            cert.merge(verify_pi_relations(p));
            json out{{"smash", p->name}, {"action", s->description.is_null() ? json(s->name) : s->description}};
            if (p->alg->finite()) {
                out["dimension"] = p->alg->dim();
                out["structure_constants"] = structure_constants(*p->alg);
            }
            out["certificate"] = report_json(cert);
            std::cout << out.dump(1) << "\n";
            return cert.ok() ? 0 : 1;
        }

        if (*pr) {
            PairPtr p = canonical_pair(reg.group(pgroup));
            json out{{"pair", p->name}, {"A", p->A->name}, {"B", p->B->name}};
            bool ok = true;
            if (p->A->finite()) out["rank"] = pairing_rank(*p, *p->A->alg->basis, *p->B->alg->basis);
            if (pverify) {
                Report rep = verify_pairing(p);
                rep.merge(heisenberg_check(p));
                out["report"] = report_json(rep);
                ok = rep.ok();
            }
            std::cout << out.dump(1) << "\n";
            return ok ? 0 : 1;
        }

        if (*du) {
            MhaPtr h = reg.mha(dA);
            ActionPtr s = dR == "trivial" ? trivial_action(h, complex_numbers()->alg) : reg.action(dR);
            if (s->A->name != h->name) throw Error(ErrorKind::MalformedSpec, "--R acts by " + s->A->name + ", not by " + h->name);
            DualityResult d = duality_theorem(s, smash_options(verify, seed));
            Report cert = d.certificate;
            cert.merge(fixed_point_theorem_check(d.smash, d.pair));
            std::size_t n = s->A->alg->dim();
            json out{{"action", s->name},
                     {"dimensions",
                      {{"R", s->R->dim()}, {"A", n}, {"smash", d.smash->alg->dim()}, {"bismash", d.bismash->alg->dim()}}},
                     {"certificate", report_json(cert)}};
            bool ident = cert.passed("matrix form multiplicative") && cert.passed("matrix form bijective");
            out["matrix_algebra"] = json{{"algebra", d.matrices->name}, {"n", n}, {"holds", ident}};
            std::cout << out.dump(1) << "\n";
            return cert.ok() ? 0 : 1;
        }
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    return 0;
}

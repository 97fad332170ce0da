// Acceptance run: one [PASS]/[FAIL] line per criterion; exit status 1 if any
// criterion fails.

#include <chrono>
#include <iostream>

#include "support.hpp"

using namespace mha;
using testing_support::k1;

namespace {

struct Outcome {
    bool ok = true;
    std::vector<std::string> notes;

    void require(bool cond, const std::string& what)
    {
        if (!cond) {
            ok = false;
            notes.push_back("FAILED " + what);
        }
    }
    void note(const std::string& s) { notes.push_back(s); }
    // Every check passes, exhaustively unless sampled is allowed.
    void report(const Report& rep, const std::string& what, bool allow_sampled = false)
    {
        for (const auto& c : rep.checks) {
            bool good = c.status == Status::Pass || (allow_sampled && c.status == Status::SampledPass);
            require(good, what + ": " + c.name + " [" + status_name(c.status) + "] " + c.witness.dump());
        }
    }
};

std::vector<MhaPtr> finite_instances()
{
    return {function_algebra(cyclic_group(2)), function_algebra(cyclic_group(3)), function_algebra(symmetric_group3()),
            group_algebra(cyclic_group(2)),    group_algebra(cyclic_group(3)),    group_algebra(symmetric_group3())};
}

// 1. Axioms on full bases; sampled on the integers.
Outcome axioms()
{
    Outcome o;
    int n = 0;
    for (const auto& h : finite_instances()) {
        o.report(verify_mha_axioms(*h), h->name);
        AqgPtr d = finite_dual(make_aqg(h));
        o.report(verify_mha_axioms(*d->base), d->base->name);
        n += 2;
    }
    for (auto [G, O] : {std::pair{cyclic_group(2), oracle::cyclic(2)}, std::pair{cyclic_group(3), oracle::cyclic(3)},
                        std::pair{symmetric_group3(), oracle::s3()}}) {
        o.require(testing_support::matches_dense(*group_algebra(G)->alg, oracle::group_algebra(O), k1), "C[" + G->name + "] table");
        o.require(testing_support::matches_dense(*function_algebra(G)->alg, oracle::function_algebra(O), k1),
                  "K(" + G->name + ") table");
    }
    for (const auto& h : {function_algebra(integer_group()), group_algebra(integer_group())}) {
        Report rep = verify_mha_axioms(*h, 5);
        for (const auto& c : rep.checks)
            o.require(c.status == Status::SampledPass, h->name + ": " + c.name + " [" + status_name(c.status) + "]");
        ++n;
    }
    o.note(std::to_string(n) + " instances");
    return o;
}

// 2. Local units for random finite families.
Outcome local_units()
{
    Outcome o;
    std::mt19937_64 rng(2);
    auto all = finite_instances();
    all.push_back(function_algebra(integer_group()));
    all.push_back(group_algebra(integer_group()));
    long families = 0;
    for (const auto& h : all) {
        bool discrete_type = h->name.rfind("K(", 0) == 0;
        for (int i = 0; i < 100; ++i) {
            std::uniform_int_distribution<int> size(1, 4);
            std::vector<Element> items;
            int m = size(rng);
            for (int j = 0; j < m; ++j) items.push_back(testing_support::random_element(*h->alg, rng, 5));
            for (Side side : {Side::Left, Side::Right, Side::TwoSided}) {
                Element e = find_local_units(*h, items, side);
                o.require(is_local_unit(*h->alg, e, items, side), h->name + " local unit");
                if (discrete_type) o.require(mul(*h->alg, e, e) == e, h->name + " idempotent");
            }
            Element solved = find_local_units(*h, items, Side::Left, 3, false);
            o.require(is_local_unit(*h->alg, solved, items, Side::Left), h->name + " solved local unit");
            ++families;
        }
    }
    o.note(std::to_string(families) + " families");
    return o;
}

// 3. Integrals, uniqueness and the double dual.
Outcome integrals()
{
    Outcome o;
    for (const auto& h : finite_instances()) {
        AqgPtr g = make_aqg(h);
        Report rep = verify_integral(*g);
        o.report(rep, h->name);
        o.require(rep.find("left uniqueness")->detail == "dim 1", h->name + " uniqueness");
    }
    // beyond the finite bases: K(Z) sampled, faithfulness undecidable there
    for (const auto& c : verify_integral(*make_aqg(function_algebra(integer_group())), 5).checks)
        o.require(c.status != Status::Fail && c.status != Status::Pass, "K(Z): " + c.name);
    for (const auto& h : {group_algebra(cyclic_group(2)), group_algebra(symmetric_group3()), function_algebra(cyclic_group(2))}) {
        AqgPtr dd = finite_dual(finite_dual(make_aqg(h)));
        o.report(check_mha_isomorphism(*h, *dd->base, canonical_double_dual_map(dd)), "double dual of " + h->name);
    }
    return o;
}

std::vector<ActionPtr> finite_actions()
{
    std::vector<ActionPtr> v;
    for (const auto& G : {cyclic_group(2), cyclic_group(3), symmetric_group3()}) {
        v.push_back(translation_action(G));
        v.push_back(grading_action(G));
        v.push_back(adjoint_action(group_algebra(G)));
    }
    return v;
}

// 4. Smash products: exhaustive associativity, radicals, twisted convolution.
Outcome smash_products()
{
    Outcome o;
    long triples = 0;
    for (const auto& s : finite_actions()) {
        SmashPtr sm = smash(s);
        o.report(sm->certificate, sm->name);
        triples += static_cast<long>(std::pow(sm->alg->dim(), 3));
    }
    for (int n : {2, 3}) {
        auto O = oracle::cyclic(n);
        auto key = [n](int i) { return Key{i / n, i % n}; };
        o.require(testing_support::matches_dense(*smash(translation_action(cyclic_group(n)))->alg,
                                                 oracle::twisted_convolution(O, oracle::function_algebra(O), oracle::translation(O)), key),
                  "translation Z" + std::to_string(n) + " twisted convolution");
        o.require(testing_support::matches_dense(*smash(adjoint_action(group_algebra(cyclic_group(n))))->alg,
                                                 oracle::twisted_convolution(O, oracle::group_algebra(O), oracle::conjugation(O)), key),
                  "adjoint Z" + std::to_string(n) + " twisted convolution");
    }
    o.note(std::to_string(triples) + " associativity triples");
    return o;
}

// 5. π-relations and spanning ranks.
Outcome pi_relations()
{
    Outcome o;
    for (const auto& s : finite_actions()) {
        SmashPtr sm = smash(s);
        Report rep = verify_pi_relations(sm, 10);
        o.report(rep, sm->name);
        std::string full = std::to_string(sm->alg->dim()) + "/" + std::to_string(sm->alg->dim());
        o.require(rep.find("span pi_R(R) pi_A(A)")->detail == full, sm->name + " span rank");
    }
    return o;
}

// 6. Inner trivialization of the CS3 adjoint smash product.
Outcome inner_triviality()
{
    Outcome o;
    MhaPtr h = group_algebra(symmetric_group3());
    SmashPtr sm = smash(adjoint_action(h));
    SmashIso iso = inner_trivialization(sm, identity_embedding(h));
    o.report(iso.certificate, "trivialization");
    const Check* c = iso.certificate.find("trivialization multiplicative");
    o.require(c && c->detail == "1296 cases", "1296 basis pairs");
    // ψ is multiplicative too
    const Algebra& T = *sm->RA;
    long bad = 0;
    for (const auto& u : *T.basis)
        for (const auto& v : *T.basis) {
            Element lhs = iso.backward(T.product(u, v));
            Element rhs = mul(*sm->alg, iso.backward(T.e(u)), iso.backward(T.e(v)));
            if (lhs != rhs) ++bad;
        }
    o.require(bad == 0, "inverse multiplicative");
    o.note("1296 pairs each way");
    return o;
}

// 7. Cocycle isomorphism between trivial and adjoint actions on CS3.
Outcome cocycle()
{
    Outcome o;
    MhaPtr h = group_algebra(symmetric_group3());
    ActionPtr triv = trivial_action(h, h->alg), adj = adjoint_action(h);
    CocycleData c{identity_embedding(h)};
    o.report(verify_cocycle(c, triv, adj), "cocycle");
    SmashIso iso = cocycle_isomorphism(smash(triv), smash(adj), c);
    o.report(iso.certificate, "cocycle isomorphism");
    return o;
}

// 8. Pairing axioms, Heisenberg commutation, anti-isomorphism, fixed points.
Outcome pairings()
{
    Outcome o;
    for (const auto& G : {cyclic_group(2), cyclic_group(3), symmetric_group3()}) {
        PairPtr p = canonical_pair(G);
        o.report(verify_pairing(p), p->name);
        o.report(heisenberg_check(p), p->name);
        SmashPtr ba = pairing_smash(p, PairOrder::BA), ab = pairing_smash(p, PairOrder::AB);
        o.report(anti_isomorphism(p, ba, ab).certificate, p->name);
        o.report(smash_order_isomorphism(p, ba, ab).certificate, p->name);
        int d = pairing_fixed_points(p).dim();
        o.require(d == 1, p->name + " fixed points dim " + std::to_string(d));
    }
    return o;
}

// 9. Rank-one realization A # Â ≅ M_n(ℂ).
Outcome rank_one()
{
    Outcome o;
    for (const auto& h : {group_algebra(cyclic_group(2)), group_algebra(cyclic_group(3)), group_algebra(symmetric_group3())}) {
        int n = static_cast<int>(h->alg->dim());
        RankOneRealization ro = rank_one_realization(make_aqg(h));
        o.report(ro.certificate, h->name);
        o.require(ro.image_dim == n * n, h->name + " image dimension");
        o.require(testing_support::matches_dense(*ro.matrices, oracle::matrix_units(n),
                                                 [n](int i) { return Key{i / n, i % n, 0}; }),
                  h->name + " matrix units");
    }
    return o;
}

std::vector<ActionPtr> duality_cases()
{
    return {trivial_action(group_algebra(cyclic_group(2)), complex_numbers()->alg), translation_action(cyclic_group(2)),
            adjoint_action(group_algebra(symmetric_group3()))};
}

// 10. and 11. share the duality constructions.
std::vector<DualityResult>& duality_results()
{
    static std::vector<DualityResult> results = [] {
        std::vector<DualityResult> v;
        for (const auto& s : duality_cases()) v.push_back(duality_theorem(s));
        return v;
    }();
    return results;
}

Outcome duality()
{
    Outcome o;
    for (const auto& d : duality_results()) {
        const auto& s = d.smash->s;
        // bismash associativity beyond the triple budget is sampled; the
        // isomorphism checks themselves are exhaustive
        o.report(d.certificate, s->name, true);
        for (const char* c : {"psi multiplicative", "psi bijective", "matrix form multiplicative", "matrix form bijective"})
            o.require(d.certificate.find(c) && d.certificate.find(c)->status == Status::Pass, s->name + " " + c);
        std::size_t n = s->A->alg->dim();
        o.require(d.bismash->alg->dim() == s->R->dim() * n * n, s->name + " dimension");
        o.require(d.matrices->name == "M(" + std::to_string(n) + "," + s->R->name + ")", s->name + " M_n(R)");
        o.note(s->name + ": " + std::to_string(d.bismash->alg->dim()));
    }
    return o;
}

Outcome fixed_point_theorem()
{
    Outcome o;
    for (const auto& d : duality_results()) {
        Report rep = fixed_point_theorem_check(d.smash, d.pair);
        o.report(rep, d.smash->name);
        o.note(rep.checks.back().detail);
    }
    return o;
}

// 12. Coactions.
Outcome coactions()
{
    Outcome o;
    PairPtr p = canonical_pair(cyclic_group(2));
    o.report(verify_coaction(*delta_coaction(p->B)), "delta coaction");
    CoactionDuality cd = coaction_duality_check(p);
    o.report(cd.certificate, "coaction duality");
    o.report(rl_condition_check(p), "rl condition");
    return o;
}

// 13. Sweedler confluence.
Outcome confluence()
{
    Outcome o;
    std::mt19937_64 rng(13);
    auto all = finite_instances();
    all.push_back(function_algebra(integer_group()));
    all.push_back(group_algebra(integer_group()));
    all.push_back(finite_dual(make_aqg(group_algebra(symmetric_group3())))->base);
    for (const auto& h : all) {
        int bad = 0;
        for (int i = 0; i < 200; ++i) {
            SweedlerExpr e = testing_support::random_expression(*h, rng);
            if (sweedler_eval(*h, e, Strategy::LeftFirst) != sweedler_eval(*h, e, Strategy::RightFirst)) ++bad;
        }
        o.require(bad == 0, h->name + ": " + std::to_string(bad) + " disagreements");
    }
    o.note(std::to_string(all.size()) + " instances x 200 expressions");
    return o;
}

}  // namespace

int main()
{
    std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"MHA axioms", axioms},
        {"local units", local_units},
        {"integrals and double dual", integrals},
        {"smash product associativity, radicals, twisted convolution", smash_products},
        {"pi-relations and spanning ranks", pi_relations},
        {"inner trivialization of the CS3 adjoint smash product", inner_triviality},
        {"cocycle isomorphism trivial vs inner on CS3", cocycle},
        {"pairing axioms, Heisenberg commutation, anti-isomorphism, fixed points", pairings},
        {"rank-one realization A#A^ = M_n(C)", rank_one},
        {"duality isomorphism and M_n(R) identification", duality},
        {"fixed-point subalgebra equals pi(M(R))", fixed_point_theorem},
        {"coaction consistency", coactions},
        {"Sweedler strategy confluence", confluence},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.ok = false;
            o.notes.push_back(std::string("exception: ") + e.what());
        }
        double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::cout << (o.ok ? "[PASS] " : "[FAIL] ") << i + 1 << " " << criteria[i].first;
        std::string detail;
        for (const auto& n : o.notes)
            if (o.ok || n.rfind("FAILED", 0) == 0 || n.rfind("exception", 0) == 0) detail += (detail.empty() ? "" : "; ") + n;
        if (!detail.empty()) std::cout << " (" << detail << ")";
        std::cout << " [" << std::fixed << std::setprecision(1) << s << "s]" << std::endl;
        if (!o.ok) ++failed;
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
    return failed == 0 ? 0 : 1;
}

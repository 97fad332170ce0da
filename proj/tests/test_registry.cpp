#include <gtest/gtest.h>

#include "support.hpp"

using namespace mha;

namespace {

ErrorKind kind_of(const std::function<void()>& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "no error thrown";
    return ErrorKind::NotFound;
}

std::string data(const std::string& f) { return std::string(MHA_DATA_DIR) + "/" + f; }

}  // namespace

TEST(Registry, BuiltinIds)
{
    Registry reg;
    EXPECT_EQ(reg.mha("K(Z2)")->name, "K(Z2)");
    EXPECT_EQ(reg.mha("C[S3]")->alg->dim(), 6u);
    EXPECT_FALSE(reg.mha("K(Z)")->finite());
    EXPECT_EQ(reg.mha("C")->alg->dim(), 1u);
    EXPECT_EQ(reg.mha("tensor(K(Z2),C[Z3])")->alg->dim(), 6u);
    EXPECT_EQ(reg.mha("dual(C[S3])")->name, "dual(C[S3])");
    EXPECT_EQ(reg.algebra("M(2,C[Z2])")->dim(), 8u);
    EXPECT_EQ(reg.mha("K(Z2)"), reg.mha(" K(Z2) "));
}

TEST(Registry, UnknownIds)
{
    Registry reg;
    EXPECT_EQ(kind_of([&] { reg.mha("K(Q8)"); }), ErrorKind::UnknownInstance);
    EXPECT_EQ(kind_of([&] { reg.mha("M(2,C)"); }), ErrorKind::UnknownInstance);
    EXPECT_EQ(kind_of([&] { reg.mha("nope.json"); }), ErrorKind::UnknownInstance);
    EXPECT_EQ(kind_of([&] { reg.action("rotate(Z2)"); }), ErrorKind::UnknownInstance);
}

TEST(Registry, DualIsLinkedToOriginal)
{
    Registry reg;
    PairPtr p = aqg_pair(reg.aqg("C[Z3]"), reg.aqg("dual(C[Z3])"));
    EXPECT_TRUE(verify_pairing(p).ok());
}

TEST(Registry, InstanceFiles)
{
    Registry reg;
    MhaPtr bad = reg.mha(data("corrupted.json"));
    EXPECT_EQ(bad->name, "corrupted(C[Z2])");
    EXPECT_FALSE(verify_mha_axioms(*bad).ok());
    MhaPtr t = reg.mha(data("table_Z2.json"));
    EXPECT_TRUE(verify_mha_axioms(*t).ok());
    EXPECT_TRUE(match_by_permutation(*t, *group_algebra(cyclic_group(2))).has_value());
}

TEST(Registry, MalformedDiagnostics)
{
    Registry reg;
    try {
        reg.mha(data("malformed.json"));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::MalformedSpec);
        EXPECT_NE(std::string(e.what()).find("line 5"), std::string::npos) << e.what();
    }
    json spec = json::parse(R"({"domain": "x", "basis": [0, 1], "product": [[0, 0, [[[0], 1, 0, 0, 1]]]]})");
    try {
        reg.load_instance(spec, "inline");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::MalformedSpec);
        EXPECT_NE(std::string(e.what()).find("field 'product'"), std::string::npos) << e.what();
    }
    json nobasis = json::parse(R"({"domain": "y"})");
    EXPECT_EQ(kind_of([&] { reg.load_instance(nobasis, "inline"); }), ErrorKind::MalformedSpec);
    json badrule = json::parse(R"j({"algebra_id": "C[Z2]", "space_id": "K(Z3)", "rule": "translation"})j");
    EXPECT_EQ(kind_of([&] { reg.load_action(badrule, "inline"); }), ErrorKind::MalformedSpec);
}

TEST(Registry, ActionFiles)
{
    Registry reg;
    ActionPtr tr = reg.action(data("translation_Z2.json"));
    EXPECT_EQ(tr->A->name, "C[Z2]");
    EXPECT_TRUE(verify_module_algebra(*tr).ok());
    ActionPtr inner = reg.action(data("inner_S3.json"));
    ActionPtr adj = adjoint_action(group_algebra(symmetric_group3()));
    for (const auto& a : *adj->A->alg->basis)
        for (const auto& x : *adj->R->basis) EXPECT_EQ(inner->act(a, x), adj->act(a, x));
    ActionPtr sign = reg.action(data("sign_Z2.json"));
    EXPECT_TRUE(verify_module_algebra(*sign).ok()) << verify_module_algebra(*sign).failures();
    EXPECT_EQ(reg.action("trivial(C[Z2],C)")->R->dim(), 1u);
}

TEST(Suites, ReportsAreByteStable)
{
    Selection sel;
    sel.group = "Z2";
    SuiteRun a = run_suite("all", sel), b = run_suite("all", sel);
    ASSERT_EQ(a.lines.size(), b.lines.size());
    for (std::size_t i = 0; i < a.lines.size(); ++i) EXPECT_EQ(a.line_json(i).dump(), b.line_json(i).dump());
    EXPECT_TRUE(a.ok());
}

TEST(Suites, WitnessReproducesFailure)
{
    Selection sel;
    sel.instances = {data("corrupted.json")};
    SuiteRun run = run_suite("axioms", sel);
    EXPECT_FALSE(run.ok());
    json witness;
    for (const auto& l : run.lines)
        if (l.check.status == Status::Fail && l.check.name == "antipode laws") witness = l.check.witness;
    ASSERT_FALSE(witness.is_null());
    SuiteOptions opt;
    opt.keys = std::vector<Key>{key_from_json(witness["a"]), key_from_json(witness["b"])};
    SuiteRun again = run_suite("axioms", sel, opt);
    bool reproduced = false;
    for (const auto& l : again.lines)
        reproduced = reproduced || (l.check.name == "antipode laws" && l.check.status == Status::Fail);
    EXPECT_TRUE(reproduced);
}

TEST(Suites, InfiniteNeverPlainPass)
{
    Selection sel;
    sel.group = "Z";
    SuiteRun run = run_suite("axioms", sel);
    for (const auto& l : run.lines) EXPECT_NE(l.check.status, Status::Pass) << l.check.name;
}

TEST(Suites, NothingSelected)
{
    EXPECT_EQ(kind_of([] { run_suite("all", Selection{}); }), ErrorKind::UnknownInstance);
    Selection sel;
    sel.group = "Z2";
    EXPECT_EQ(kind_of([&] { run_suite("everything", sel); }), ErrorKind::MalformedSpec);
}

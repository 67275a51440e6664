#include "quiverkit/cli.hpp"
#include "quiverkit/serialize.hpp"

#include "doctest.h"

#include <fstream>
#include <sstream>

using namespace quiverkit;

namespace {

std::string fixture(const std::string& name) {
    std::ifstream in(std::string(QUIVERKIT_SOURCE_DIR) + "/fixtures/" + name);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("empty document gives an empty workspace") {
    auto ws = parse_document("{}");
    CHECK(ws.groups.empty());
    CHECK(ws.quivers.empty());
    CHECK(ws.constructions.empty());
}

TEST_CASE("document with a group and a subgroup") {
    auto ws = parse_document(R"({
        "schema": "quiverkit/1",
        "groups": {"G": {"kind": "binary_octahedral"}},
        "subgroups": {"Z2": {"group": "G", "elements": ["1", "-1"]}}
    })");
    CHECK(ws.groups.size() == 1);
    CHECK(ws.subgroups.size() == 1);
    CHECK(ws.groups.at("G").group->order == 48);
    CHECK(ws.subgroups.at("Z2").subgroup.order() == 2);
    CHECK(ws.groups.at("G").where.path == "/groups/G");
}

TEST_CASE("parse and schema errors") {
    SUBCASE("syntax error reports the position") {
        try {
            parse_document("{\n  \"groups\": {\n", "bad.json");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(std::string(e.what()).find("bad.json:") != std::string::npos);
        }
    }
    SUBCASE("weight 1/0 is a parse error naming the edge") {
        const char* doc = R"({
            "quivers": {"Q": {"vertices": ["v"],
                              "edges": [{"id": "e", "src": "v", "rng": "v", "weight": "1/0"}]}}
        })";
        CHECK_THROWS_AS(parse_document(doc), ParseError);
    }
    SUBCASE("unknown top-level section") {
        CHECK_THROWS_AS(parse_document(R"({"grupos": {}})"), SchemaError);
    }
    SUBCASE("wrong schema version") {
        CHECK_THROWS_AS(parse_document(R"({"schema": "quiverkit/2"})"), SchemaError);
    }
    SUBCASE("dangling reference") {
        CHECK_THROWS_AS(parse_document(R"({"subgroups": {"N": {"group": "nope",
                                        "elements": [0]}}})"),
                        ReferenceError);
    }
    SUBCASE("validator failure is forwarded") {
        // strict quiver with a fiberless vertex
        const char* doc = R"({
            "quivers": {"Q": {"vertices": ["a", "b"],
                              "edges": [{"id": "e", "src": "a", "rng": "b"}],
                              "strict": true}}
        })";
        CHECK_THROWS_AS(parse_document(doc), ValidationError);
        // and an invalid action: weights break orbit invariance
        const char* doc2 = R"({
            "groups": {"Z2": {"kind": "cyclic", "n": 2}},
            "quivers": {"Q": {"vertices": ["v"],
                              "edges": [{"id": "x", "src": "v", "rng": "v", "weight": "1/1"},
                                        {"id": "y", "src": "v", "rng": "v", "weight": "2/1"}]}},
            "actions": {"bad": {"group": "Z2", "quiver": "Q",
                                "vertex_perm": {"1": [0]},
                                "edge_perm": {"1": [1, 0]}}}
        })";
        CHECK_THROWS_AS(parse_document(doc2), ValidationError);
    }
}

TEST_CASE("serialization round-trip is the identity on emitted documents") {
    for (const char* name : {"binary_octahedral.json", "toeplitz.json", "cuntz.json",
                             "relation.json", "dihedral_skew.json", "skew_bundle.json",
                             "double_coset_d3.json", "readme_example.json"}) {
        CAPTURE(name);
        auto ws = parse_document(fixture(name), name);
        auto emitted = emit_document(ws).dump(2);
        auto ws2 = parse_document(emitted, "reparsed");
        CHECK(emit_document(ws2).dump(2) == emitted);

        // the rebuilt objects agree structurally, not just textually
        for (const auto& [gname, wg] : ws.groups)
            CHECK(*wg.group == *ws2.groups.at(gname).group);
        for (const auto& [qname, wq] : ws.quivers)
            CHECK(*wq.quiver == *ws2.quivers.at(qname).quiver);
        for (const auto& [aname, wa] : ws.actions) {
            CHECK(wa.action.vperm == ws2.actions.at(aname).action.vperm);
            CHECK(wa.action.eperm == ws2.actions.at(aname).action.eperm);
        }
    }
}

TEST_CASE("reports are byte-identical across runs") {
    auto ws = parse_document(fixture("binary_octahedral.json"));
    auto r1 = run_command(ws, "report", {});
    auto r2 = run_command(ws, "report", {});
    CHECK(r1.report.dump(2) == r2.report.dump(2));
    CHECK(r1.exit_code == 0);
}

TEST_CASE("command: components on the binary octahedral coset quivers") {
    auto ws = parse_document(fixture("binary_octahedral.json"));
    auto rk = run_command(ws, "components", {"Qk"});
    CHECK(rk.exit_code == 0);
    CHECK(rk.report.at("components") == 12);
    auto rw = run_command(ws, "components", {"Qomega"});
    CHECK(rw.report.at("components") == 8);
}

TEST_CASE("command: verify-action and quotient") {
    auto ws = parse_document(fixture("binary_octahedral.json"));
    auto rv = run_command(ws, "verify-action", {"actZ3"});
    CHECK(rv.exit_code == 0);
    CHECK(rv.report.at("valid") == true);
    CHECK(rv.report.at("freeness").at("vertex_free") == true);
    CHECK(rv.report.at("vertex_orbits") == 8);

    auto rq = run_command(ws, "quotient", {"actZ3"});
    CHECK(rq.exit_code == 0);
    CHECK(rq.report.at("quotient").at("vertices").size() == 8);
}

TEST_CASE("command: roundtrip and classify") {
    auto ws = parse_document(fixture("binary_octahedral.json"));
    auto rt = run_command(ws, "roundtrip", {"actZ3"});
    CHECK(rt.exit_code == 0);
    CHECK(rt.report.at("isomorphic") == true);

    auto cl = run_command(ws, "classify", {"classified"});
    CHECK(cl.exit_code == 0);
    CHECK(cl.report.at("equivariant") == true);
}

TEST_CASE("command: iso distinguishes the 2-loop and 3-loop quivers") {
    auto ws = parse_document(fixture("cuntz.json"));
    auto r = run_command(ws, "iso", {"o2", "o3"});
    CHECK(r.exit_code == 2);
    CHECK(r.report.at("isomorphic") == false);

    auto same = run_command(ws, "iso", {"o2", "o2"});
    CHECK(same.exit_code == 0);
    CHECK(same.report.at("isomorphic") == true);
}

TEST_CASE("command: ktheory anchors") {
    auto ws = parse_document(fixture("cuntz.json"));
    auto r3 = run_command(ws, "ktheory", {"o3"});
    CHECK(r3.report.at("k0").at("rank") == 0);
    CHECK(r3.report.at("k0").at("torsion") == Json::array({2}));
    CHECK(r3.report.at("k1").at("rank") == 0);

    auto wt = parse_document(fixture("toeplitz.json"));
    auto rt = run_command(wt, "ktheory", {"toeplitz"});
    CHECK(rt.report.at("k0").at("rank") == 1);
    CHECK(rt.report.at("k0").at("torsion") == Json::array());
    CHECK(rt.report.at("k1").at("rank") == 0);
}

TEST_CASE("command: presentation") {
    auto ws = parse_document(fixture("cuntz.json"));
    auto r = run_command(ws, "presentation", {"o3"});
    CHECK(r.exit_code == 0);
    CHECK(r.report.at("isometries").size() == 3);
    CHECK(r.report.at("range_relations").size() == 1);
    CHECK(r.human.find("s(0)* s(0) = p([0])") != std::string::npos);
}

TEST_CASE("command: skew, relation, build and report") {
    auto ws = parse_document(fixture("skew_bundle.json"));
    auto sk = run_command(ws, "skew", {"sk"});
    CHECK(sk.exit_code == 0);
    CHECK(sk.report.at("quiver").at("vertices").size() == 4);

    auto wrong = run_command(ws, "build", {"bq"});
    CHECK(wrong.exit_code == 0);  // bundle construction builds fine
    CHECK_THROWS_AS(run_command(ws, "skew", {"bq"}), SchemaError);  // op mismatch

    auto wr = parse_document(fixture("relation.json"));
    auto rel = run_command(wr, "relation", {"rel12"});
    CHECK(rel.report.at("quiver").at("edges").size() == 12);
    CHECK(rel.report.at("empty_fiber_vertices").size() == 6);

    auto rep = run_command(wr, "report", {});
    CHECK(rep.exit_code == 0);
    CHECK(rep.report.at("constructions").contains("relact8"));
}

TEST_CASE("command: semidirect_skew fixture verifies") {
    auto ws = parse_document(fixture("dihedral_skew.json"));
    auto r = run_command(ws, "build", {"semiskew"});
    CHECK(r.exit_code == 0);
    CHECK(r.report.at("verified") == true);
    CHECK(r.report.at("group_order") == 8);
}

TEST_CASE("command: bundle round-trips against the skew product") {
    auto ws = parse_document(fixture("skew_bundle.json"));
    auto bq = run_command(ws, "build", {"bq"});
    CHECK(bq.exit_code == 0);
    // the bundle was chosen to match the skew product sk up to isomorphism
    auto r = run_command(ws, "iso", {"bq", "sk"});
    CHECK(r.exit_code == 0);
    CHECK(r.report.at("isomorphic") == true);
}

TEST_CASE("explicit actions parse and complete via the Cayley table") {
    auto ws = parse_document(fixture("skew_bundle.json"));
    const auto& act = ws.actions.at("swap").action;
    CHECK(act.group->order == 2);
    CHECK(validate_action(act).ok());
    auto r = run_command(ws, "verify-action", {"swap"});
    CHECK(r.exit_code == 0);
}

TEST_CASE("errors from commands") {
    auto ws = parse_document(fixture("cuntz.json"));
    CHECK_THROWS_AS(run_command(ws, "components", {"nope"}), ReferenceError);
    CHECK_THROWS_AS(run_command(ws, "iso", {"o2"}), SchemaError);
    CHECK_THROWS_AS(run_command(ws, "nonsense", {}), SchemaError);
    CHECK_THROWS_AS(run_command(ws, "verify-action", {"o2"}), ReferenceError);
}

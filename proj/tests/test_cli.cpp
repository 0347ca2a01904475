#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "lcaforge/canonical.hpp"
#include "lcaforge/cli.hpp"
#include "lcaforge/dot.hpp"
#include "lcaforge/graph_json.hpp"
#include "lcaforge/problem.hpp"
#include "support.hpp"

using namespace lcaforge;
using namespace testsupport;
using nlohmann::json;

namespace {

std::string temp_file(const std::string& name, const std::string& content) {
  auto path = std::filesystem::temp_directory_path() / ("lcaforge_test_" + name);
  std::ofstream out(path);
  out << content;
  return path.string();
}

}  // namespace

TEST_CASE("parse_problem") {
  SUBCASE("require and forbid lines") {
    Problem p = parse_problem("require: x y < a b\nforbid: x y < a y\n");
    CHECK(p.universe.size() == 4);
    CHECK(p.required == R(p.universe, {{"xy", "ab"}}));
    CHECK(p.forbidden == R(p.universe, {{"xy", "ay"}}));
  }
  SUBCASE("taxa line alone") {
    Problem p = parse_problem("taxa: x\n");
    CHECK(p.universe.size() == 1);
    CHECK(p.required.empty());
    CHECK(p.forbidden.empty());
  }
  SUBCASE("comments, blanks and singleton pairs") {
    Problem p = parse_problem(
        "# a worked instance\n\nrequire: x y < x z\nrequire: y y < y z\n"
        "forbid: y z < x z  # the forbidden drop\n");
    CHECK(p.required == R(p.universe, {{"xy", "xz"}, {"yy", "yz"}}));
    CHECK(p.forbidden == R(p.universe, {{"yz", "xz"}}));
  }
  SUBCASE("errors carry line numbers") {
    CHECK_THROWS_AS(parse_problem("needs: a b < c d\n"), ParseError);
    CHECK_THROWS_AS(parse_problem("require: a b < c\n"), ParseError);
    CHECK_THROWS_AS(parse_problem("taxa: a b\nrequire: a b < c c\n"), ParseError);
    CHECK_THROWS_AS(parse_problem("# nothing\n"), ParseError);
    CHECK_THROWS_AS(parse_problem("taxa: a\ntaxa: b\n"), ParseError);
    try {
      parse_problem("taxa: a b\nrequire: a b < c c\n");
    } catch (const ParseError& e) {
      CHECK(e.line == 2);
    }
  }
  SUBCASE("round trip") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      auto inst = random_instance(seed);
      Problem p{inst.universe, inst.required, inst.forbidden, std::nullopt};
      CHECK(parse_problem(print_problem(p)) == p);
    }
  }
}

TEST_CASE("graph json round trip") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Universe u = U("abcd");
    Dag g = random_dag_sampler(u, 4, seed);
    CHECK(dag_from_json(dag_to_json(g), u) == g);
  }
  SUBCASE("malformed graphs are rejected") {
    Universe u = U("ab");
    CHECK_THROWS(dag_from_json(json::parse(R"({"vertices":[],"arcs":[]})"), u));
    CHECK_THROWS(dag_from_json(json::parse(R"({"vertices":[{"id":0,"label":"a"},
      {"id":1,"label":"b"},{"id":2}],"arcs":[[2,0],[2,1],[0,2]]})"),
                               u));
    CHECK_THROWS(dag_from_json(json::parse(R"({"vertices":[{"id":0,"label":"z"},
      {"id":1,"label":"b"}],"arcs":[]})"),
                               u));
  }
}

TEST_CASE("emit_dot") {
  SUBCASE("single leaf") {
    Universe u = U("x");
    std::vector<DagVertex> verts(1);
    verts[0].taxon = 0;
    Dag g = Dag::from_parts(u, std::move(verts), {});
    std::string dot = emit_dot(g);
    CHECK(dot == "digraph G {\n  n0 [shape=box, label=\"x\"];\n}\n");
  }
  SUBCASE("fresh root is labeled rho") {
    Universe u = U("ab");
    std::vector<DagVertex> verts(4);
    verts[0].taxon = 0;
    verts[1].taxon = 1;
    Dag g = Dag::from_parts(u, std::move(verts), {{2, 0}, {2, 1}, {3, 0}, {3, 1}});
    std::string dot = emit_dot(to_network(g));
    CHECK(dot.find("label=\"rho\"") != std::string::npos);
    CHECK(dot.find("n4 -> n2") != std::string::npos);
    CHECK(dot.find("n4 -> n3") != std::string::npos);
  }
  SUBCASE("canonical classes print their members") {
    Universe u = U("abxy");
    CanonicalDag cd =
        canonical_dag(R(u, {{"xy", "ab"}, {"ay", "ay"}}), R(u, {{"ay", "ab"}}));
    std::string dot = emit_dot(cd.dag);
    CHECK(dot.find("label=\"{ab,ay}\"") != std::string::npos);
    CHECK(dot.find("label=\"{xy}\"") != std::string::npos);
    for (const char* leaf : {"\"a\"", "\"b\"", "\"x\"", "\"y\""})
      CHECK(dot.find(std::string("label=") + leaf) != std::string::npos);
    CHECK(emit_dot(cd.dag) == dot);  // bit-exact across calls
  }
}

TEST_CASE("cmd_decide") {
  SUBCASE("realizable instance exits 0 with witnesses") {
    std::string path = temp_file(
        "fig2.problem", "require: x y < x z\nrequire: x x < y z\nforbid: x z < x y\n");
    std::ostringstream out, err;
    int code = cmd_decide(DecideArgs{path, Mode::RF, std::nullopt, true}, out, err);
    CHECK(code == 0);
    json j = json::parse(out.str());
    CHECK(j["mode"] == "rf");
    CHECK(j["realizable"] == true);
    CHECK(j.contains("witness_dag"));
    CHECK(j.contains("witness_network"));
    CHECK(j.contains("closure"));
    CHECK_FALSE(j.contains("certificate"));
  }
  SUBCASE("lca mode reports the Y2 certificate") {
    std::string path = temp_file(
        "aflca.problem",
        "require: x y < a b\nforbid: x y < a y\nforbid: a y < a b\n");
    std::ostringstream out, err;
    int code = cmd_decide(DecideArgs{path, Mode::RF_LCA, std::nullopt, false}, out, err);
    CHECK(code == 1);
    json j = json::parse(out.str());
    CHECK(j["realizable"] == false);
    CHECK(j["certificate"]["condition"] == "Y2");
    CHECK(j["certificate"]["constraint"] == "x y < a b");
  }
  SUBCASE("npreceq mode reports the intersection certificate") {
    std::string path = temp_file(
        "aflca1.problem",
        "require: x y < x z\nrequire: y y < y z\nforbid: y z < x z\n");
    std::ostringstream out, err;
    int code =
        cmd_decide(DecideArgs{path, Mode::RF_NPRECEQ, std::nullopt, false}, out, err);
    CHECK(code == 1);
    json j = json::parse(out.str());
    CHECK(j["certificate"]["condition"] == "F_CAP_CL");
    CHECK(j["certificate"]["constraint"] == "y z < x z");
  }
  SUBCASE("parse errors exit 2") {
    std::string path = temp_file("broken.problem", "nonsense\n");
    std::ostringstream out, err;
    CHECK(cmd_decide(DecideArgs{path, Mode::RF, std::nullopt, false}, out, err) == 2);
    CHECK(err.str().find("line 1") != std::string::npos);
  }
  SUBCASE("dot files are written for witnesses") {
    std::string path = temp_file("fig5.problem", "require: x y < a b\nforbid: x y < a y\n");
    auto prefix = (std::filesystem::temp_directory_path() / "lcaforge_test_fig5").string();
    std::ostringstream out, err;
    CHECK(cmd_decide(DecideArgs{path, Mode::RF, prefix, false}, out, err) == 0);
    CHECK(std::filesystem::exists(prefix + ".dag.dot"));
    CHECK(std::filesystem::exists(prefix + ".net.dot"));
  }
}

TEST_CASE("cmd_closure") {
  SUBCASE("empty instance lists the reflexive singletons") {
    std::string path = temp_file("empty.problem", "taxa: x y\n");
    std::ostringstream out, err;
    CHECK(cmd_closure(ClosureArgs{path, false}, out, err) == 0);
    CHECK(out.str() == "x x < x x\ny y < y y\n");
  }
  SUBCASE("R4 symmetrization shows up in the listing") {
    std::string path = temp_file(
        "fig3.problem", "require: x y < x z\nrequire: y y < y z\nforbid: y z < x z\n");
    std::ostringstream out, err;
    CHECK(cmd_closure(ClosureArgs{path, true}, out, err) == 0);
    CHECK(out.str().find("y z < x z") != std::string::npos);
    CHECK(out.str().find("x z < y z  # R4") != std::string::npos);
  }
  SUBCASE("sorted by pair index and oracle-consistent size") {
    std::string path = temp_file(
        "fig1.problem", "require: x y < a b\nrequire: a y < a y\nforbid: a y < a b\n");
    std::ostringstream out, err;
    CHECK(cmd_closure(ClosureArgs{path, false}, out, err) == 0);
    std::istringstream lines(out.str());
    std::string line;
    int count = 0;
    while (std::getline(lines, line)) ++count;
    CHECK(count == 21);
  }
}

TEST_CASE("cmd_verify") {
  std::string fig5 = temp_file("v_fig5.problem", "require: x y < a b\nforbid: x y < a y\n");
  Problem p = parse_problem("require: x y < a b\nforbid: x y < a y\n");
  SUBCASE("canonical dag fails, extension passes") {
    CanonicalDag cd = canonical_dag(p.required, p.forbidden);
    std::string dag_path = temp_file("v_fig5_canon.json", dag_to_json(cd.dag).dump());
    std::ostringstream out, err;
    int code = cmd_verify(VerifyArgs{fig5, dag_path, ForbidFlavor::F, {}, {}}, out, err);
    CHECK(code == 1);
    json j = json::parse(out.str());
    CHECK(j["ok"] == false);
    CHECK(j["violations"][0]["axiom"] == "F");
    CHECK(j["violations"][0]["constraint"] == "x y < a y");

    std::ostringstream out2, err2;
    std::string ext_path = temp_file(
        "v_fig5_ext.json",
        dag_to_json(fr_extension(cd.dag, p.required, p.forbidden)).dump());
    CHECK(cmd_verify(VerifyArgs{fig5, ext_path, ForbidFlavor::F, {}, {}}, out2, err2) ==
          0);
  }
  SUBCASE("empty constraints accept any valid dag") {
    std::string trivial = temp_file("v_trivial.problem", "taxa: a b x y\n");
    Problem tp = parse_problem("taxa: a b x y\n");
    std::string dag_path = temp_file(
        "v_sample.json", dag_to_json(random_dag_sampler(tp.universe, 3, 5)).dump());
    std::ostringstream out, err;
    CHECK(cmd_verify(VerifyArgs{trivial, dag_path, ForbidFlavor::F, {}, {}}, out, err) ==
          0);
  }
  SUBCASE("witness from decide verifies through the wire format") {
    std::ostringstream out, err;
    CHECK(cmd_decide(DecideArgs{fig5, Mode::RF, std::nullopt, false}, out, err) == 0);
    json decided = json::parse(out.str());
    std::string dag_path = temp_file("v_roundtrip.json", decided["witness_dag"].dump());
    std::ostringstream out2, err2;
    CHECK(cmd_verify(VerifyArgs{fig5, dag_path, ForbidFlavor::F, {}, {}}, out2, err2) ==
          0);
  }
  SUBCASE("malformed dag exits 2") {
    std::string dag_path = temp_file("v_bad.json", R"({"vertices":[{"id":0}],"arcs":[]})");
    std::ostringstream out, err;
    CHECK(cmd_verify(VerifyArgs{fig5, dag_path, ForbidFlavor::F, {}, {}}, out, err) == 2);
  }
  SUBCASE("fuzz sampling reports hits deterministically") {
    std::string trivial = temp_file("v_fuzz.problem", "taxa: a b c\n");
    std::ostringstream out, err;
    CHECK(cmd_verify(VerifyArgs{trivial, std::nullopt, ForbidFlavor::F, 25, 42}, out,
                     err) == 0);
    json j = json::parse(out.str());
    CHECK(j["samples"] == 25);
    CHECK(j["realizing"] == 25);  // no constraints: everything verifies
  }
}

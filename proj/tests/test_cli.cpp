#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "magiclab/cli.hpp"
#include "magiclab/json_io.hpp"

using namespace magiclab;
using nlohmann::json;

namespace {

struct CliResult {
  int code = -1;
  json out;        // parsed stdout when it was JSON
  std::string raw_out;
  std::string raw_err;
};

CliResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  CliResult r;
  r.code = run_cli(args, out, err);
  r.raw_out = out.str();
  r.raw_err = err.str();
  if (!r.raw_out.empty() && r.raw_out.front() == '{')
    r.out = json::parse(r.raw_out);
  return r;
}

// Writes content on construction, removes the file on scope exit.
struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name, const std::string& content)
      : path("cli_" + name) {
    std::ofstream f(path);
    f << content;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

TotalLabeling sem_c3() {
  return {directed_cycle(3), {1, 2, 3}, {6, 4, 5}};
}

}  // namespace

TEST_CASE("verify reports valence and super status") {
  const TempFile f("sem_c3.json", json_of(sem_c3()).dump());
  const CliResult r = run({"verify", "--labeling", f.path});
  CHECK(r.code == 0);
  CHECK(r.out["status"] == "ok");
  CHECK(r.out["payload"]["edge_magic"] == true);
  CHECK(r.out["payload"]["valence"] == 9);
  CHECK(r.out["payload"]["super"] == true);

  const TotalLabeling not_magic{directed_cycle(3), {1, 2, 3}, {4, 5, 6}};
  const TempFile g("not_magic.json", json_of(not_magic).dump());
  const CliResult r2 = run({"verify", "--labeling", g.path});
  CHECK(r2.code == 0);
  CHECK(r2.out["payload"]["edge_magic"] == false);
  CHECK(r2.out["payload"]["valence"].is_null());
  CHECK(r2.out["payload"]["super"] == false);
}

TEST_CASE("verify writes dot output on request") {
  const TempFile f("dot_src.json", json_of(sem_c3()).dump());
  const std::string dot_path = "cli_out.dot";
  const CliResult r =
      run({"verify", "--labeling", f.path, "--emit-dot", dot_path});
  CHECK(r.code == 0);
  std::ifstream dot(dot_path);
  std::stringstream content;
  content << dot.rdbuf();
  CHECK(content.str().find("digraph") != std::string::npos);
  std::remove(dot_path.c_str());
}

TEST_CASE("transform applies and re-verifies") {
  const TempFile f("sem_c3.json", json_of(sem_c3()).dump());
  const CliResult r =
      run({"transform", "--op", "complement", "--labeling", f.path});
  CHECK(r.code == 0);
  const TotalLabeling out = labeling_from_json(r.out["payload"]);
  CHECK(out.vertex_labels == std::vector<int>{6, 5, 4});
  CHECK(valence_if_edge_magic(out) == 12);

  const CliResult odd = run({"transform", "--op", "odd", "--labeling", f.path});
  CHECK(odd.code == 0);
  CHECK(labeling_from_json(odd.out["payload"]).vertex_labels ==
        std::vector<int>{1, 3, 5});
}

TEST_CASE("family subcommands") {
  const CliResult r = run({"families", "enumerate-s", "--p", "3"});
  CHECK(r.code == 0);
  CHECK(r.out["payload"]["count"] == 2);
  CHECK(r.out["payload"]["members"].size() == 2);

  const CliResult member = run({"families", "check-s", "--digraph", "cycle:3"});
  CHECK(member.code == 0);
  CHECK(member.out["payload"]["member"] == true);
  CHECK(member.out["payload"]["k"] == 3);

  const CliResult non = run({"families", "check-s", "--digraph", "cycle:4"});
  CHECK(non.code == 0);
  CHECK(non.out["payload"]["member"] == false);
  CHECK(non.out["payload"]["k"].is_null());

  const TempFile f("sem_c3.json", json_of(sem_c3()).dump());
  const CliResult t = run({"families", "t-from", "--labeling", f.path});
  CHECK(t.code == 0);
  CHECK(t.out["payload"]["sigma"] == 9);
  CHECK(t.out["payload"]["vertex_set"] == json({1, 2, 3}));
}

TEST_CASE("oracle subcommand") {
  const CliResult em = run({"oracle", "--graph", "cycle:3", "--mode", "em"});
  CHECK(em.code == 0);
  CHECK(em.out["payload"]["valences"] == json({9, 10, 11, 12}));
  CHECK(em.out["payload"]["certificates"].size() == 4);

  const CliResult sem = run({"oracle", "--graph", "cycle:3", "--mode", "sem"});
  CHECK(sem.code == 0);
  CHECK(sem.out["payload"]["valences"] == json({9}));
}

TEST_CASE("product subcommand") {
  const TempFile base("sem_c3.json", json_of(sem_c3()).dump());
  const TempFile h("h.json",
                   json{{"kind", "s"},
                        {"constant", json_of(make_s_member(directed_cycle(3)))}}
                       .dump());
  const CliResult r = run({"product", "--mode", "spk", "--d", base.path,
                           "--h", h.path});
  CHECK(r.code == 0);
  CHECK(r.out["payload"]["construction"] == "spk");
  CHECK(r.out["payload"]["predicted_valence"] == 24);

  const TempFile member("s3.json", json_of(make_s_member(directed_cycle(3))).dump());
  const TotalLabeling em{directed_cycle(3), {6, 5, 4}, {1, 3, 2}};
  const TempFile ht("ht.json",
                    json{{"kind", "t"},
                         {"constant", json_of(t_member_from_labeling(em))}}
                        .dump());
  const CliResult tq = run({"product", "--mode", "tqs", "--d", member.path,
                            "--h", ht.path});
  CHECK(tq.code == 0);
  CHECK(tq.out["payload"]["predicted_valence"] == 30);

  // Constant sigma-9 images over the triangle member land on valence 27.
  const TempFile ht9("ht9.json",
                     json{{"kind", "t"},
                          {"constant", json_of(t_member_from_labeling(sem_c3()))}}
                         .dump());
  const CliResult tq9 = run({"product", "--mode", "tqs", "--d", member.path,
                             "--h", ht9.path});
  CHECK(tq9.code == 0);
  CHECK(tq9.out["payload"]["predicted_valence"] == 27);

  // --h stays an option; help on this subcommand is --help only.
  CHECK(run({"product", "--help"}).code == 0);
}

TEST_CASE("cycles subcommands") {
  const CliResult s = run({"cycles", "structure", "--m", "3", "--n", "3",
                           "--g", "1"});
  CHECK(s.code == 0);
  CHECK(s.out["payload"]["solvable"] == true);
  CHECK(s.out["payload"]["reversed"] == 1);
  CHECK(s.out["payload"]["components"] == json({9}));

  const CliResult no = run({"cycles", "structure", "--m", "4", "--n", "4",
                            "--g", "1"});
  CHECK(no.code == 0);
  CHECK(no.out["payload"]["solvable"] == false);
  CHECK_FALSE(no.out["payload"].contains("components"));

  const TempFile f("sem_c3.json", json_of(sem_c3()).dump());
  const CliResult mi = run({"cycles", "mcquillan", "--variant", "i", "--p", "3",
                            "--base", f.path});
  CHECK(mi.code == 0);
  CHECK(mi.out["payload"]["construction"] == "mcquillan_i");
  CHECK(mi.out["payload"]["predicted_valence"] == 24);

  const CliResult cov = run({"cycles", "coverage", "--n", "9",
                             "--oracle-max", "12"});
  CHECK(cov.code == 0);
  CHECK(cov.out["payload"]["oracle_ran"] == false);
  CHECK(cov.out["payload"]["entries"].size() == 10);

  const CliResult vmt = run({"cycles", "vmt", "--labeling", f.path});
  CHECK(vmt.code == 0);
  CHECK(vmt.out["payload"]["vertex_magic_weight"] == 9);

  // Feed the rotated labeling back through the inverse rotation.
  const TempFile rotated("vmt.json", vmt.out["payload"]["labeling"].dump());
  const CliResult back =
      run({"cycles", "vmt", "--labeling", rotated.path, "--inverse"});
  CHECK(back.code == 0);
  const TotalLabeling restored = labeling_from_json(back.out["payload"]);
  CHECK(restored.vertex_labels == sem_c3().vertex_labels);
  CHECK(restored.arc_labels == sem_c3().arc_labels);
}

TEST_CASE("exit codes by failure class") {
  CHECK(run({}).code == 2);                       // a subcommand is required
  CHECK(run({"frobnicate"}).code == 2);           // unknown subcommand
  CHECK(run({"verify"}).code == 2);               // missing required option
  CHECK(run({"transform", "--op", "squash", "--labeling", "x"}).code == 2);

  const TempFile bad("bad.json", "{not json");
  const CliResult schema = run({"verify", "--labeling", bad.path});
  CHECK(schema.code == 3);
  CHECK(json::parse(schema.raw_err)["code"] == "schema");
  CHECK(run({"verify", "--labeling", "does_not_exist.json"}).code == 3);

  // Valid file, invalid label multiset: schema layer again.
  const TempFile off(
      "off.json",
      R"({"graph": {"n": 1, "arcs": []}, "vertex_labels": {"1": 2}, "arc_labels": []})");
  CHECK(run({"verify", "--labeling", off.path}).code == 3);

  // Structurally valid labeling, unusable for the requested transform.
  const TotalLabeling path_sem{directed_path(3), {1, 3, 2}, {5, 4}};
  const TempFile pf("path.json", json_of(path_sem).dump());
  const CliResult precondition =
      run({"transform", "--op", "odd", "--labeling", pf.path});
  CHECK(precondition.code == 4);
  CHECK(json::parse(precondition.raw_err)["code"] == "precondition");

  const CliResult help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.raw_out.find("verify") != std::string::npos);
}

TEST_CASE("the documented json flag is accepted") {
  const TempFile f("sem_c3.json", json_of(sem_c3()).dump());
  const CliResult r = run({"verify", "--labeling", f.path, "--json"});
  CHECK(r.code == 0);
  CHECK(r.out["payload"]["valence"] == 9);
}

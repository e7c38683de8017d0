#include "magiclab/cli.hpp"

#include <fstream>
#include <ostream>

#include <CLI11.hpp>

#include "magiclab/acceptance.hpp"
#include "magiclab/dot.hpp"
#include "magiclab/json_io.hpp"
#include "magiclab/transforms.hpp"

namespace magiclab {

namespace {

using nlohmann::json;

void emit_ok(std::ostream& out, json payload) {
  out << json{{"status", "ok"}, {"payload", std::move(payload)}}.dump(2) << "\n";
}

void emit_error(std::ostream& err, const char* code, const std::string& message) {
  err << json{{"status", "error"}, {"code", code}, {"message", message}}.dump(2)
      << "\n";
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw SchemaError("cannot write file: " + path);
  out << content;
}

void maybe_emit_dot(const std::string& path, const TotalLabeling& f) {
  if (!path.empty()) write_file(path, to_dot(f));
}

json verify_payload(const TotalLabeling& f) {
  const auto valence = valence_if_edge_magic(f);
  json payload{{"edge_magic", valence.has_value()},
               {"super", is_super_edge_magic(f)}};
  payload["valence"] = valence ? json(*valence) : json(nullptr);
  return payload;
}

// Emitted labelings are re-checked first; a payload must never carry an
// unverified certificate.
json verified_labeling_payload(const TotalLabeling& f) {
  if (!valence_if_edge_magic(f))
    throw InvariantError("refusing to emit a labeling that does not verify");
  return json_of(f);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"construct, transform and verify edge-magic labeled digraphs"};
  app.require_subcommand(1);
  int exit_code = 0;

  // verify
  std::string verify_labeling, verify_dot;
  CLI::App* verify = app.add_subcommand("verify", "check a labeling and report its valence");
  verify->add_option("--labeling", verify_labeling, "labeling JSON file")->required();
  verify->add_option("--emit-dot", verify_dot, "write DOT with labels");
  verify->callback([&] {
    const TotalLabeling f = labeling_from_json(parse_json_file(verify_labeling));
    maybe_emit_dot(verify_dot, f);
    emit_ok(out, verify_payload(f));
  });

  // transform
  std::string transform_op, transform_labeling, transform_dot;
  CLI::App* transform = app.add_subcommand("transform", "apply a labeling transform");
  transform->add_option("--op", transform_op, "complement | sem-complement | odd | even")
      ->required()
      ->check(CLI::IsMember({"complement", "sem-complement", "odd", "even"}));
  transform->add_option("--labeling", transform_labeling, "labeling JSON file")->required();
  transform->add_option("--emit-dot", transform_dot, "write DOT with labels");
  transform->callback([&] {
    const TotalLabeling f = labeling_from_json(parse_json_file(transform_labeling));
    TotalLabeling result;
    if (transform_op == "complement") result = em_complement(f);
    else if (transform_op == "sem-complement") result = sem_complement(f);
    else if (transform_op == "odd") result = odd_labeling(f);
    else result = even_labeling(f);
    maybe_emit_dot(transform_dot, result);
    emit_ok(out, verified_labeling_payload(result));
  });

  // families
  CLI::App* families = app.add_subcommand("families", "labeled family helpers");
  families->require_subcommand(1);

  int enumerate_p = 0;
  CLI::App* enumerate = families->add_subcommand("enumerate-s", "all 1-regular members of S_p");
  enumerate->add_option("--p", enumerate_p, "order (odd)")->required();
  enumerate->callback([&] {
    json members = json::array();
    for (const SFamilyMember& m : enumerate_s1regular(enumerate_p))
      members.push_back(json_of(m));
    emit_ok(out, json{{"p", enumerate_p},
                      {"count", members.size()},
                      {"members", std::move(members)}});
  });

  std::string check_digraph;
  CLI::App* check_s = families->add_subcommand("check-s", "test S_p^k membership");
  check_s->add_option("--digraph", check_digraph, "digraph JSON file or cycle:n/path:n")->required();
  check_s->callback([&] {
    const Digraph d = graph_from_spec(check_digraph);
    const auto k = check_s_member(d, d.order());
    json payload{{"member", k.has_value()}};
    payload["k"] = k ? json(*k) : json(nullptr);
    emit_ok(out, std::move(payload));
  });

  std::string t_from_labeling;
  CLI::App* t_from = families->add_subcommand("t-from", "view an edge-magic labeling as a T member");
  t_from->add_option("--labeling", t_from_labeling, "labeling JSON file")->required();
  t_from->callback([&] {
    const TotalLabeling f = labeling_from_json(parse_json_file(t_from_labeling));
    emit_ok(out, json_of(t_member_from_labeling(f)));
  });

  // oracle
  std::string oracle_graph, oracle_mode = "em";
  CLI::App* oracle = app.add_subcommand("oracle", "exhaustive valence search");
  oracle->add_option("--graph", oracle_graph, "digraph JSON file or cycle:n/path:n")->required();
  oracle->add_option("--mode", oracle_mode, "em | sem")
      ->check(CLI::IsMember({"em", "sem"}));
  oracle->callback([&] {
    const Digraph d = graph_from_spec(oracle_graph);
    const ValenceReport report = oracle_mode == "em"
                                     ? exhaustive_edge_magic(d)
                                     : exhaustive_super_edge_magic(d);
    for (const TotalLabeling& f : report.certificates)
      verified_labeling_payload(f);
    emit_ok(out, json_of(report));
  });

  // product
  std::string product_mode, product_d, product_h_file, product_dot;
  CLI::App* product = app.add_subcommand("product", "induced product labeling");
  // The assignment flag is --h, so this subcommand's help must not take -h.
  product->set_help_flag("--help", "print help and exit");
  product->add_option("--mode", product_mode, "spk | tqs")
      ->required()
      ->check(CLI::IsMember({"spk", "tqs"}));
  product->add_option("--d", product_d, "labeled digraph (spk) or S member (tqs) JSON file")->required();
  product->add_option("--h", product_h_file, "assignment JSON file")->required();
  product->add_option("--emit-dot", product_dot, "write DOT with labels");
  product->callback([&] {
    const json hj = parse_json_file(product_h_file);
    LabeledProduct result;
    if (product_mode == "spk") {
      const TotalLabeling f = labeling_from_json(parse_json_file(product_d));
      result = induced_spk(f, s_assignment_from_json(hj, f.graph));
    } else {
      const SFamilyMember d = s_member_from_json(parse_json_file(product_d));
      result = induced_tqs(d, t_assignment_from_json(hj, d.digraph));
    }
    maybe_emit_dot(product_dot, result.labeling);
    verified_labeling_payload(result.labeling);
    emit_ok(out, json_of(result));
  });

  // cycles
  CLI::App* cycles = app.add_subcommand("cycles", "cycle products and coverage");
  cycles->require_subcommand(1);

  int structure_m = 0, structure_n = 0, structure_g = 0;
  CLI::App* structure = cycles->add_subcommand("structure", "decompose an oriented cycle product");
  structure->add_option("--m", structure_m, "outer cycle length")->required();
  structure->add_option("--n", structure_n, "inner cycle length")->required();
  structure->add_option("--g", structure_g, "target residue in [0, n-1]")->required();
  structure->callback([&] {
    const auto a = solve_ng(structure_m, structure_n, structure_g);
    json payload{{"m", structure_m}, {"n", structure_n}, {"g", structure_g},
                 {"solvable", a.has_value()}};
    if (a) {
      payload["reversed"] = a->reversed_count();
      payload["components"] = cycle_product_structure(*a);
    }
    emit_ok(out, std::move(payload));
  });

  std::string mcq_variant, mcq_base, mcq_dot;
  int mcq_p = 0;
  CLI::App* mcquillan = cycles->add_subcommand("mcquillan", "cycle-of-cycles valence construction");
  mcquillan->add_option("--variant", mcq_variant, "i | ii")
      ->required()
      ->check(CLI::IsMember({"i", "ii"}));
  mcquillan->add_option("--p", mcq_p, "odd inner order")->required();
  mcquillan->add_option("--base", mcq_base, "edge-magic cycle labeling JSON file")->required();
  mcquillan->add_option("--emit-dot", mcq_dot, "write DOT with labels");
  mcquillan->callback([&] {
    const TotalLabeling f = labeling_from_json(parse_json_file(mcq_base));
    const LabeledProduct result =
        mcq_variant == "i" ? mcquillan_i(f, mcq_p) : mcquillan_ii(f, mcq_p);
    maybe_emit_dot(mcq_dot, result.labeling);
    verified_labeling_payload(result.labeling);
    emit_ok(out, json_of(result));
  });

  int coverage_n = 0, coverage_budget = 0;
  CLI::App* coverage = cycles->add_subcommand("coverage", "realizable-valence report for C_n");
  coverage->add_option("--n", coverage_n, "cycle length")->required();
  coverage->add_option("--oracle-max", coverage_budget, "p+q budget for exhaustive search");
  coverage->callback([&] {
    const std::optional<int> budget =
        coverage_budget > 0 ? std::optional<int>(coverage_budget) : std::nullopt;
    emit_ok(out, json_of(godbold_slater_report(coverage_n, budget)));
  });

  std::string vmt_labeling;
  bool vmt_inverse = false;
  CLI::App* vmt = cycles->add_subcommand("vmt", "rotate between edge-magic and vertex-magic labels");
  vmt->add_option("--labeling", vmt_labeling, "labeling JSON file")->required();
  vmt->add_flag("--inverse", vmt_inverse, "rotate back (vertex-magic to edge-magic)");
  vmt->callback([&] {
    const TotalLabeling f = labeling_from_json(parse_json_file(vmt_labeling));
    if (vmt_inverse) {
      const TotalLabeling result = vmt_to_em(f);
      emit_ok(out, verified_labeling_payload(result));
      return;
    }
    const TotalLabeling result = em_to_vmt(f);
    const auto weight = vertex_magic_weight(result);
    if (weight != valence_if_edge_magic(f))
      throw InvariantError("rotation lost the constant vertex weight");
    emit_ok(out, json{{"labeling", json_of(result)},
                      {"vertex_magic_weight", *weight}});
  });

  // JSON is the only output format; the flag is accepted for scripts that
  // pass it explicitly.
  bool json_flag = true;
  for (CLI::App* cmd : {verify, transform, enumerate, check_s, t_from, oracle,
                        product, structure, mcquillan, coverage, vmt})
    cmd->add_flag("--json", json_flag, "JSON output to stdout (default)");

  // suite
  CLI::App* suite = app.add_subcommand("suite", "run the full release criteria");
  suite->callback([&] {
    const auto outcomes = run_acceptance_suite(&out);
    for (const CriterionOutcome& o : outcomes)
      if (!o.passed) exit_code = 1;
    out << (exit_code == 0 ? "all criteria passed" : "criteria failed") << "\n";
  });

  std::vector<const char*> argv{"magiclab"};
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help and friends
      app.exit(e, out, err);
      return 0;
    }
    emit_error(err, "usage", e.what());
    return 2;
  } catch (const SchemaError& e) {
    emit_error(err, "schema", e.what());
    return 3;
  } catch (const PreconditionError& e) {
    emit_error(err, "precondition", e.what());
    return 4;
  } catch (const InvariantError& e) {
    emit_error(err, "invariant", e.what());
    return 5;
  } catch (const nlohmann::json::exception& e) {
    emit_error(err, "schema", e.what());
    return 3;
  }
  return exit_code;
}

}  // namespace magiclab

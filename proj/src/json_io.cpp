#include "magiclab/json_io.hpp"

#include <fstream>
#include <map>

namespace magiclab {

using nlohmann::json;

namespace {

const json& require_field(const json& j, const char* key, const char* what) {
  if (!j.is_object())
    throw SchemaError(std::string(what) + ": expected an object");
  const auto it = j.find(key);
  if (it == j.end())
    throw SchemaError(std::string(what) + ": missing \"" + key + "\"");
  return *it;
}

int require_int(const json& j, const std::string& what) {
  if (!j.is_number_integer())
    throw SchemaError(what + ": expected an integer");
  return j.get<int>();
}

std::vector<int> require_int_array(const json& j, const std::string& what) {
  if (!j.is_array()) throw SchemaError(what + ": expected an array");
  std::vector<int> out;
  out.reserve(j.size());
  for (const json& e : j) out.push_back(require_int(e, what));
  return out;
}

std::vector<Arc> arcs_from_json(const json& j, const std::string& what) {
  if (!j.is_array()) throw SchemaError(what + ": expected an array of [u,v]");
  std::vector<Arc> arcs;
  arcs.reserve(j.size());
  for (const json& e : j) {
    if (!e.is_array() || e.size() != 2)
      throw SchemaError(what + ": each arc is a pair [u,v]");
    arcs.push_back({require_int(e[0], what), require_int(e[1], what)});
  }
  return arcs;
}

json arcs_to_json(const std::vector<Arc>& arcs) {
  json out = json::array();
  for (const Arc& a : arcs) out.push_back({a.from, a.to});
  return out;
}

}  // namespace

json json_of(const Digraph& d) {
  return {{"n", d.order()}, {"arcs", arcs_to_json(d.arcs())}};
}

Digraph digraph_from_json(const json& j) {
  return Digraph(require_int(require_field(j, "n", "digraph"), "digraph.n"),
                 arcs_from_json(require_field(j, "arcs", "digraph"), "digraph.arcs"));
}

json json_of(const TotalLabeling& f) {
  json vertex_labels = json::object();
  for (int v = 1; v <= f.graph.order(); ++v)
    vertex_labels[std::to_string(v)] = f.vertex_label(v);
  json arc_labels = json::array();
  for (int i = 0; i < f.graph.size(); ++i)
    arc_labels.push_back({f.graph.arc(i).from, f.graph.arc(i).to, f.arc_labels[i]});
  return {{"graph", json_of(f.graph)},
          {"vertex_labels", vertex_labels},
          {"arc_labels", arc_labels}};
}

TotalLabeling labeling_from_json(const json& j) {
  TotalLabeling f;
  f.graph = digraph_from_json(require_field(j, "graph", "labeling"));

  const json& vl = require_field(j, "vertex_labels", "labeling");
  if (!vl.is_object())
    throw SchemaError("labeling.vertex_labels: expected an object keyed by vertex");
  f.vertex_labels.assign(f.graph.order(), 0);
  for (const auto& [key, value] : vl.items()) {
    int v = 0;
    try {
      v = std::stoi(key);
    } catch (const std::exception&) {
      throw SchemaError("labeling.vertex_labels: key \"" + key + "\" is not a vertex");
    }
    if (v < 1 || v > f.graph.order())
      throw SchemaError("labeling.vertex_labels: vertex " + key + " out of range");
    f.vertex_labels[v - 1] = require_int(value, "labeling.vertex_labels");
  }

  const json& al = require_field(j, "arc_labels", "labeling");
  if (!al.is_array())
    throw SchemaError("labeling.arc_labels: expected an array of [u,v,label]");
  std::map<std::pair<int, int>, int> by_arc;
  for (const json& e : al) {
    if (!e.is_array() || e.size() != 3)
      throw SchemaError("labeling.arc_labels: each entry is [u,v,label]");
    const int u = require_int(e[0], "labeling.arc_labels");
    const int v = require_int(e[1], "labeling.arc_labels");
    if (!by_arc.emplace(std::pair{u, v}, require_int(e[2], "labeling.arc_labels")).second)
      throw SchemaError("labeling.arc_labels: arc (" + std::to_string(u) + "," +
                        std::to_string(v) + ") labeled twice");
  }
  f.arc_labels.reserve(f.graph.size());
  for (const Arc& a : f.graph.arcs()) {
    const auto it = by_arc.find({a.from, a.to});
    if (it == by_arc.end())
      throw SchemaError("labeling.arc_labels: arc (" + std::to_string(a.from) +
                        "," + std::to_string(a.to) + ") has no label");
    f.arc_labels.push_back(it->second);
  }
  if (by_arc.size() != static_cast<size_t>(f.graph.size()))
    throw SchemaError("labeling.arc_labels: labels for arcs the graph does not have");
  f.validate();
  return f;
}

json json_of(const SFamilyMember& m) {
  return {{"p", m.p}, {"k", m.k}, {"digraph", json_of(m.digraph)}};
}

SFamilyMember s_member_from_json(const json& j) {
  const SFamilyMember m =
      make_s_member(digraph_from_json(require_field(j, "digraph", "s member")));
  if (require_int(require_field(j, "p", "s member"), "s member.p") != m.p ||
      require_int(require_field(j, "k", "s member"), "s member.k") != m.k)
    throw SchemaError("s member: declared (p, k) disagree with the digraph");
  return m;
}

json json_of(const TFamilyMember& m) {
  return {{"label_universe", m.label_universe},
          {"vertex_set", m.vertex_set},
          {"sigma", m.sigma},
          {"arcs", arcs_to_json(m.arcs)}};
}

TFamilyMember t_member_from_json(const json& j) {
  return make_t_member(
      require_int(require_field(j, "label_universe", "t member"), "t member.label_universe"),
      require_int_array(require_field(j, "vertex_set", "t member"), "t member.vertex_set"),
      require_int(require_field(j, "sigma", "t member"), "t member.sigma"),
      arcs_from_json(require_field(j, "arcs", "t member"), "t member.arcs"));
}

namespace {

// Shared shape handling for {"constant": member} / {"images": [member...]}.
template <typename Member, typename Parse>
std::vector<Member> assignment_images(const json& j, const Digraph& domain,
                                      const char* expected_kind, Parse parse) {
  if (j.is_object() && j.contains("kind")) {
    const json& kind = j.at("kind");
    if (!kind.is_string() || kind.get<std::string>() != expected_kind)
      throw SchemaError(std::string("assignment: expected kind \"") +
                        expected_kind + "\"");
  }
  if (j.is_object() && j.contains("constant"))
    return std::vector<Member>(domain.size(), parse(j.at("constant")));
  const json& images = require_field(j, "images", "assignment");
  if (!images.is_array())
    throw SchemaError("assignment.images: expected an array of members");
  std::vector<Member> out;
  out.reserve(images.size());
  for (const json& e : images) out.push_back(parse(e));
  return out;
}

}  // namespace

SEdgeAssignment s_assignment_from_json(const json& j, const Digraph& domain) {
  SEdgeAssignment h{domain, assignment_images<SFamilyMember>(
                                j, domain, "s", s_member_from_json)};
  h.validate();
  return h;
}

TEdgeAssignment t_assignment_from_json(const json& j, const Digraph& domain) {
  TEdgeAssignment h{domain, assignment_images<TFamilyMember>(
                                j, domain, "t", t_member_from_json)};
  h.validate();
  return h;
}

json json_of(const ValenceReport& r) {
  json certificates = json::array();
  for (const TotalLabeling& f : r.certificates) certificates.push_back(json_of(f));
  return {{"graph", json_of(r.graph)},
          {"mode", r.mode == MagicMode::kEdgeMagic ? "em" : "sem"},
          {"valences", r.valences},
          {"certificates", certificates}};
}

json json_of(const LabeledProduct& p) {
  return {{"construction", p.construction},
          {"predicted_valence", p.predicted_valence},
          {"labeling", json_of(p.labeling)}};
}

json json_of(const CoverageReport& r) {
  json entries = json::array();
  for (const CoverageEntry& e : r.entries) {
    json entry = {{"valence", e.valence}};
    switch (e.status) {
      case CoverageStatus::kAchieved:
        entry["status"] = "achieved";
        break;
      case CoverageStatus::kUnachieved:
        entry["status"] = "unachieved";
        break;
      case CoverageStatus::kUnknownUnderBudget:
        entry["status"] = "unknown-under-budget";
        break;
    }
    if (!e.recipe.empty()) entry["recipe"] = e.recipe;
    if (e.certificate) entry["certificate"] = json_of(*e.certificate);
    entries.push_back(std::move(entry));
  }
  return {{"n", r.n},
          {"conjectured_range", {r.conjectured_lo, r.conjectured_hi}},
          {"oracle_ran", r.oracle_ran},
          {"entries", entries}};
}

json parse_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot read file: " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw SchemaError(path + ": " + e.what());
  }
}

Digraph graph_from_spec(const std::string& spec) {
  for (const auto& [prefix, make] :
       {std::pair<std::string, Digraph (*)(int)>{"cycle:", directed_cycle},
        {"path:", directed_path}}) {
    if (spec.rfind(prefix, 0) != 0) continue;
    int n = 0;
    try {
      n = std::stoi(spec.substr(prefix.size()));
    } catch (const std::exception&) {
      throw SchemaError("graph spec \"" + spec + "\": expected " + prefix + "<n>");
    }
    if (n < 1) throw SchemaError("graph spec \"" + spec + "\": n must be positive");
    return make(n);
  }
  return digraph_from_json(parse_json_file(spec));
}

}  // namespace magiclab

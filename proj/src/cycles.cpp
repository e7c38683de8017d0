#include "magiclab/cycles.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "magiclab/oracle.hpp"
#include "magiclab/transforms.hpp"

namespace magiclab {

std::optional<OrientationAssignment> solve_ng(int m, int n, int g) {
  if (m < 3 || n < 3) throw PreconditionError("solve_ng: need m, n >= 3");
  if (g < 0 || g >= n)
    throw PreconditionError("solve_ng: g must lie in [0, n-1]");
  for (int N = 0; N < m; ++N) {
    if (((m - 2 * N) % n + n) % n == g) {
      OrientationAssignment a{m, n, g, {}};
      for (int i = 0; i < N; ++i) a.reversed_arcs.push_back(i);
      return a;
    }
  }
  return std::nullopt;
}

namespace {

EdgeAssignment orientation_to_assignment(const OrientationAssignment& a) {
  const Digraph forward = directed_cycle(a.n), backward = reversed_cycle(a.n);
  EdgeAssignment h{directed_cycle(a.m), std::vector<Digraph>(a.m, forward)};
  for (int i : a.reversed_arcs) h.images[i] = backward;
  return h;
}

}  // namespace

std::vector<int> cycle_product_structure(const OrientationAssignment& a) {
  const EdgeAssignment h = orientation_to_assignment(a);
  const Digraph product = product_h(h.domain, h);

  std::vector<int> lengths;
  for (const Component& c : components(product)) {
    const auto len = is_directed_cycle(c.graph);
    if (!len)
      throw InvariantError("cycle product: component is not a directed cycle");
    lengths.push_back(*len);
  }
  std::sort(lengths.begin(), lengths.end());

  const int k = a.n / std::gcd(a.g, a.n);  // order of g in Z_n (gcd(0,n)=n)
  if (static_cast<int>(lengths.size()) != a.n / k ||
      lengths.front() != a.m * k || lengths.back() != a.m * k)
    throw InvariantError("cycle product: expected " + std::to_string(a.n / k) +
                         " cycles of length " + std::to_string(a.m * k));
  return lengths;
}

namespace {

struct CycleBase {
  int m = 0;
  int valence = 0;
};

CycleBase require_cycle_base(const TotalLabeling& f, int p, const char* op) {
  const auto m = is_directed_cycle(f.graph);
  if (!m || *m < 3)
    throw PreconditionError(std::string(op) +
                            ": base graph must be a strongly oriented cycle "
                            "of length at least 3");
  const auto val = valence_if_edge_magic(f);
  if (!val) throw PreconditionError(std::string(op) + ": base labeling is not edge-magic");
  if (p < 3 || p % 2 == 0)
    throw PreconditionError(std::string(op) + ": p must be odd and at least 3");
  return {*m, *val};
}

// Deterministic single-cycle member of S_p: the first super edge-magic
// labeling of the directed p-cycle, renamed so vertices are labels.
SFamilyMember cycle_s_member(int p) {
  const ValenceReport sem = exhaustive_super_edge_magic(directed_cycle(p));
  if (sem.certificates.empty())
    throw InvariantError("cycle_s_member: odd cycle unexpectedly lacks a labeling");
  return s_member_from_labeling(sem.certificates.front());
}

void require_single_cycle(const LabeledProduct& out, int length, const char* op) {
  if (is_directed_cycle(out.labeling.graph) != std::optional<int>(length))
    throw InvariantError(std::string(op) + ": product is not a single " +
                         std::to_string(length) + "-cycle");
}

}  // namespace

LabeledProduct mcquillan_i(const TotalLabeling& f, int p) {
  const CycleBase base = require_cycle_base(f, p, "mcquillan_i");
  if (base.m % 2 == 0 && base.m < p)
    throw PreconditionError("mcquillan_i: need m odd or m >= p");

  const SFamilyMember inner = cycle_s_member(p);
  const auto orient = solve_ng(base.m, p, 1);
  if (!orient)
    throw InvariantError("mcquillan_i: no orientation count solves the congruence");

  // solve_ng marks a reversed prefix; component structure depends only on
  // the count, so positions in f's arc order serve as well.
  SEdgeAssignment h{f.graph, std::vector<SFamilyMember>(base.m, inner)};
  const SFamilyMember inner_reversed = reverse_member(inner);
  for (int i : orient->reversed_arcs) h.images[i] = inner_reversed;

  LabeledProduct out = induced_spk(f, h);
  out.construction = "mcquillan_i";
  const int predicted = p * base.valence - 3 * (p - 1) / 2;
  if (out.predicted_valence != predicted)
    throw InvariantError("mcquillan_i: valence bookkeeping disagrees");
  require_single_cycle(out, p * base.m, "mcquillan_i");
  return out;
}

LabeledProduct mcquillan_ii(const TotalLabeling& f, int p) {
  const CycleBase base = require_cycle_base(f, p, "mcquillan_ii");

  const SFamilyMember outer = cycle_s_member(p);
  const TFamilyMember forward = t_member_from_labeling(f);
  const TFamilyMember backward = reverse_member(forward);
  const auto orient = solve_ng(p, base.m, 1);
  if (!orient)
    throw InvariantError("mcquillan_ii: no orientation count solves the congruence");

  TEdgeAssignment h{outer.digraph,
                    std::vector<TFamilyMember>(p, forward)};
  for (int i : orient->reversed_arcs) h.images[i] = backward;

  LabeledProduct out = induced_tqs(outer, h);
  out.construction = "mcquillan_ii";
  const int predicted = 3 * (p - 1) * base.m + base.valence;
  if (out.predicted_valence != predicted)
    throw InvariantError("mcquillan_ii: valence bookkeeping disagrees");
  require_single_cycle(out, p * base.m, "mcquillan_ii");
  return out;
}

namespace {

// Vertex traversal orders of the disjoint cycles of a 2-regular graph:
// each cycle starts at its smallest vertex and moves toward that vertex's
// smaller neighbor. Loops and 2-cycles are rejected (no rotation room).
std::vector<std::vector<int>> cycle_orders(const Digraph& d, const char* op) {
  const int n = d.order();
  std::vector<std::vector<int>> nbr(n + 1);
  for (const Arc& a : d.arcs()) {
    if (a.from == a.to)
      throw PreconditionError(std::string(op) + ": loops are not 2-regular cycles");
    nbr[a.from].push_back(a.to);
    nbr[a.to].push_back(a.from);
  }
  for (int v = 1; v <= n; ++v) {
    if (nbr[v].size() != 2)
      throw PreconditionError(std::string(op) + ": vertex " + std::to_string(v) +
                              " does not have exactly two neighbors");
    if (nbr[v][0] == nbr[v][1])
      throw PreconditionError(std::string(op) + ": parallel arcs between two vertices");
  }

  std::vector<std::vector<int>> orders;
  std::vector<bool> visited(n + 1, false);
  for (int start = 1; start <= n; ++start) {
    if (visited[start]) continue;
    std::vector<int> order{start};
    visited[start] = true;
    int prev = start, cur = std::min(nbr[start][0], nbr[start][1]);
    while (cur != start) {
      order.push_back(cur);
      visited[cur] = true;
      const int next = nbr[cur][0] == prev ? nbr[cur][1] : nbr[cur][0];
      prev = cur;
      cur = next;
    }
    orders.push_back(std::move(order));
  }
  return orders;
}

int arc_index_between(const Digraph& d, int u, int v) {
  for (int i = 0; i < d.size(); ++i) {
    const Arc& a = d.arc(i);
    if ((a.from == u && a.to == v) || (a.from == v && a.to == u)) return i;
  }
  throw InvariantError("rotation: traversal left the graph's arcs");
}

}  // namespace

TotalLabeling em_to_vmt(const TotalLabeling& f) {
  if (!valence_if_edge_magic(f))
    throw PreconditionError("em_to_vmt: input is not edge-magic");
  TotalLabeling out = f;
  for (const std::vector<int>& order : cycle_orders(f.graph, "em_to_vmt")) {
    const int len = static_cast<int>(order.size());
    for (int t = 0; t < len; ++t) {
      const int v = order[t], succ = order[(t + 1) % len];
      const int e = arc_index_between(f.graph, v, succ);
      out.vertex_labels[succ - 1] = f.arc_labels[e];  // edge label moves on
      out.arc_labels[e] = f.vertex_label(v);          // vertex label falls back
    }
  }
  out.validate();
  return out;
}

TotalLabeling vmt_to_em(const TotalLabeling& g) {
  g.validate();
  TotalLabeling out = g;
  for (const std::vector<int>& order : cycle_orders(g.graph, "vmt_to_em")) {
    const int len = static_cast<int>(order.size());
    for (int t = 0; t < len; ++t) {
      const int v = order[t], succ = order[(t + 1) % len];
      const int e = arc_index_between(g.graph, v, succ);
      out.arc_labels[e] = g.vertex_label(succ);
      out.vertex_labels[v - 1] = g.arc_labels[e];
    }
  }
  out.validate();
  return out;
}

std::optional<int> vertex_magic_weight(const TotalLabeling& f) {
  f.validate();
  std::vector<int> weight(f.vertex_labels);
  for (int i = 0; i < f.graph.size(); ++i) {
    weight[f.graph.arc(i).from - 1] += f.arc_labels[i];
    if (f.graph.arc(i).to != f.graph.arc(i).from)
      weight[f.graph.arc(i).to - 1] += f.arc_labels[i];
  }
  for (int w : weight)
    if (w != weight.front()) return std::nullopt;
  return weight.empty() ? std::nullopt : std::optional<int>(weight.front());
}

std::vector<int> CoverageReport::achieved() const {
  std::vector<int> out;
  for (const CoverageEntry& e : entries)
    if (e.status == CoverageStatus::kAchieved) out.push_back(e.valence);
  return out;
}

std::pair<int, int> godbold_slater_range(int n) {
  if (n < 3) throw PreconditionError("godbold_slater_range: need n >= 3");
  const int t = n / 2;
  if (n % 2 == 1) return {5 * t + 4, 7 * t + 5};
  return {5 * t + 2, 7 * t + 1};
}

namespace {

struct Achievement {
  std::string recipe;
  TotalLabeling certificate;
};

void add_achievement(std::map<int, Achievement>& achieved, int valence,
                     std::string recipe, TotalLabeling certificate) {
  if (achieved.count(valence)) return;  // first recipe wins, deterministically
  if (valence_if_edge_magic(certificate) != std::optional<int>(valence))
    throw InvariantError("coverage: certificate does not verify at valence " +
                         std::to_string(valence));
  achieved.emplace(valence, Achievement{std::move(recipe), std::move(certificate)});
}

}  // namespace

CoverageReport godbold_slater_report(int n, std::optional<int> budget) {
  const int cap = budget.value_or(oracle_guard());
  CoverageReport report;
  report.n = n;
  std::tie(report.conjectured_lo, report.conjectured_hi) = godbold_slater_range(n);

  std::map<int, Achievement> achieved;

  if (2 * n <= cap) {
    report.oracle_ran = true;
    const ValenceReport em = exhaustive_edge_magic(directed_cycle(n), cap);
    for (size_t i = 0; i < em.valences.size(); ++i)
      add_achievement(achieved, em.valences[i], "oracle", em.certificates[i]);
  }

  for (int p = 3; p <= n / 3; p += 2) {
    if (n % p != 0) continue;
    bool prime = true;
    for (int d = 3; d * d <= p; d += 2) prime = prime && p % d != 0;
    if (!prime) continue;
    const int m = n / p;
    if (m < 3 || 2 * m > cap || 2 * p > cap) continue;

    const ValenceReport base = exhaustive_edge_magic(directed_cycle(m), cap);
    for (size_t i = 0; i < base.valences.size(); ++i) {
      const int v = base.valences[i];
      const std::string suffix = "(m=" + std::to_string(m) +
                                 ",p=" + std::to_string(p) +
                                 ",base=" + std::to_string(v) + ")";
      if (m % 2 == 1 || m >= p) {
        const LabeledProduct first = mcquillan_i(base.certificates[i], p);
        add_achievement(achieved, first.predicted_valence,
                        "mcquillan_i" + suffix, first.labeling);
      }
      const LabeledProduct second = mcquillan_ii(base.certificates[i], p);
      add_achievement(achieved, second.predicted_valence,
                      "mcquillan_ii" + suffix, second.labeling);
    }
  }

  // Complement closure: one pass suffices since the valence map is an
  // involution.
  for (const auto& [v, a] : std::map<int, Achievement>(achieved)) {
    const int mirror = 3 * (2 * n + 1) - v;
    if (!achieved.count(mirror))
      add_achievement(achieved, mirror, "em_complement(" + a.recipe + ")",
                      em_complement(a.certificate));
  }

  std::vector<int> valences;
  for (int v = report.conjectured_lo; v <= report.conjectured_hi; ++v)
    valences.push_back(v);
  for (const auto& [v, a] : achieved)
    if (v < report.conjectured_lo || v > report.conjectured_hi)
      valences.push_back(v);
  std::sort(valences.begin(), valences.end());

  for (int v : valences) {
    CoverageEntry entry;
    entry.valence = v;
    if (const auto it = achieved.find(v); it != achieved.end()) {
      entry.status = CoverageStatus::kAchieved;
      entry.recipe = it->second.recipe;
      entry.certificate = it->second.certificate;
    } else {
      entry.status = report.oracle_ran ? CoverageStatus::kUnachieved
                                       : CoverageStatus::kUnknownUnderBudget;
    }
    report.entries.push_back(std::move(entry));
  }
  return report;
}

}  // namespace magiclab

#include "magiclab/labeling.hpp"

#include <algorithm>
#include <string>

namespace magiclab {

namespace {

void require_label_range(const std::vector<int>& labels, int limit,
                         const char* what) {
  std::vector<bool> used(limit + 1, false);
  for (int l : labels) {
    if (l < 1 || l > limit)
      throw SchemaError(std::string(what) + ": label " + std::to_string(l) +
                        " outside [1," + std::to_string(limit) + "]");
    if (used[l])
      throw SchemaError(std::string(what) + ": label " + std::to_string(l) +
                        " used twice");
    used[l] = true;
  }
}

}  // namespace

void TotalLabeling::validate() const {
  const int p = graph.order(), q = graph.size();
  if (static_cast<int>(vertex_labels.size()) != p)
    throw SchemaError("labeling: expected " + std::to_string(p) +
                      " vertex labels, got " +
                      std::to_string(vertex_labels.size()));
  if (static_cast<int>(arc_labels.size()) != q)
    throw SchemaError("labeling: expected " + std::to_string(q) +
                      " arc labels, got " + std::to_string(arc_labels.size()));
  std::vector<int> all = vertex_labels;
  all.insert(all.end(), arc_labels.begin(), arc_labels.end());
  require_label_range(all, p + q, "labeling");
}

void VertexLabeling::validate() const {
  const int p = graph.order();
  if (static_cast<int>(labels.size()) != p)
    throw SchemaError("vertex labeling: expected " + std::to_string(p) +
                      " labels, got " + std::to_string(labels.size()));
  require_label_range(labels, p, "vertex labeling");
}

MagicCheck check_edge_magic(const TotalLabeling& f) {
  f.validate();
  MagicCheck result;
  const auto& arcs = f.graph.arcs();
  for (int i = 0; i < f.graph.size(); ++i) {
    const int sum =
        f.vertex_label(arcs[i].from) + f.arc_labels[i] + f.vertex_label(arcs[i].to);
    if (!result.valence) {
      result.valence = sum;
    } else if (sum != *result.valence) {
      result.valence.reset();
      result.conflict = arcs[i];
      return result;
    }
  }
  if (!result.valence && f.graph.size() == 0) result.valence = 0;
  return result;
}

std::optional<int> valence_if_edge_magic(const TotalLabeling& f) {
  return check_edge_magic(f).valence;
}

bool is_super_edge_magic(const TotalLabeling& f) {
  if (!valence_if_edge_magic(f)) return false;
  const int p = f.graph.order();
  return std::all_of(f.vertex_labels.begin(), f.vertex_labels.end(),
                     [p](int l) { return l >= 1 && l <= p; });
}

std::optional<int> consecutive_sum_start(const VertexLabeling& g) {
  g.validate();
  const int q = g.graph.size();
  if (q == 0) return std::nullopt;
  std::vector<int> sums;
  sums.reserve(q);
  for (const Arc& a : g.graph.arcs()) sums.push_back(g.label(a.from) + g.label(a.to));
  std::sort(sums.begin(), sums.end());
  for (int i = 1; i < q; ++i)
    if (sums[i] != sums[0] + i) return std::nullopt;  // gap or repeat
  return sums[0];
}

TotalLabeling extend_to_super_edge_magic(const VertexLabeling& g) {
  const auto min_sum = consecutive_sum_start(g);
  if (!min_sum)
    throw PreconditionError(
        "extend: endpoint sums are not q distinct consecutive integers");
  const int p = g.graph.order(), q = g.graph.size();
  TotalLabeling f{g.graph, g.labels, {}};
  f.arc_labels.reserve(q);
  for (const Arc& a : g.graph.arcs())
    f.arc_labels.push_back(p + q + *min_sum - g.label(a.from) - g.label(a.to));
  f.validate();
  return f;
}

namespace {

std::vector<std::tuple<int, int, int>> labeled_arcs_sorted(const TotalLabeling& f) {
  std::vector<std::tuple<int, int, int>> out;
  out.reserve(f.graph.size());
  for (int i = 0; i < f.graph.size(); ++i)
    out.emplace_back(f.graph.arc(i).from, f.graph.arc(i).to, f.arc_labels[i]);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

bool labeled_equal(const TotalLabeling& a, const TotalLabeling& b) {
  return a.graph.order() == b.graph.order() &&
         a.vertex_labels == b.vertex_labels &&
         labeled_arcs_sorted(a) == labeled_arcs_sorted(b);
}

TotalLabeling transport(const TotalLabeling& f, const VertexMap& witness) {
  TotalLabeling out{apply_map(f.graph, witness),
                    std::vector<int>(f.vertex_labels.size()), f.arc_labels};
  for (int v = 1; v <= f.graph.order(); ++v)
    out.vertex_labels[witness(v) - 1] = f.vertex_label(v);
  return out;
}

}  // namespace magiclab

#include "magiclab/families.hpp"

#include <algorithm>
#include <string>

namespace magiclab {

std::optional<int> check_s_member(const Digraph& d, int p) {
  if (d.order() != p)
    throw PreconditionError("check_s_member: digraph has order " +
                            std::to_string(d.order()) + ", expected " +
                            std::to_string(p));
  if (d.size() != p) return std::nullopt;  // members have exactly p arcs
  VertexLabeling identity{d, {}};
  identity.labels.resize(p);
  for (int v = 1; v <= p; ++v) identity.labels[v - 1] = v;
  return consecutive_sum_start(identity);
}

SFamilyMember make_s_member(const Digraph& d) {
  const auto k = check_s_member(d, d.order());
  if (!k)
    throw PreconditionError(
        "make_s_member: identity labeling lacks consecutive endpoint sums");
  return {d.order(), *k, d};
}

namespace {

// Lexicographic backtracking over permutation images. k is forced to
// (p+3)/2 by the sum-of-sums identity, so every endpoint sum i + perm(i)
// must land in [k, k+p-1], each exactly once.
void extend_s1regular(int i, int p, int k, std::vector<int>& image,
                      std::vector<bool>& value_used, std::vector<bool>& sum_used,
                      std::vector<SFamilyMember>& out) {
  if (i > p) {
    std::vector<Arc> arcs;
    arcs.reserve(p);
    for (int v = 1; v <= p; ++v) arcs.push_back({v, image[v - 1]});
    out.push_back({p, k, Digraph(p, std::move(arcs))});
    return;
  }
  const int lo = std::max(1, k - i), hi = std::min(p, k + p - 1 - i);
  for (int v = lo; v <= hi; ++v) {
    if (value_used[v] || sum_used[i + v - k]) continue;
    value_used[v] = sum_used[i + v - k] = true;
    image[i - 1] = v;
    extend_s1regular(i + 1, p, k, image, value_used, sum_used, out);
    value_used[v] = sum_used[i + v - k] = false;
  }
}

}  // namespace

std::vector<SFamilyMember> enumerate_s1regular(int p) {
  if (p < 1 || p > 11)
    throw PreconditionError("enumerate_s1regular: p must be in [1, 11]");
  if (p % 2 == 0) return {};  // k = (p+3)/2 is not an integer
  const int k = (p + 3) / 2;
  std::vector<SFamilyMember> out;
  std::vector<int> image(p);
  std::vector<bool> value_used(p + 1, false), sum_used(p, false);
  extend_s1regular(1, p, k, image, value_used, sum_used, out);
  return out;
}

SFamilyMember s_member_from_labeling(const TotalLabeling& f) {
  if (!is_super_edge_magic(f))
    throw PreconditionError("s_member_from_labeling: input is not super edge-magic");
  if (f.graph.order() != f.graph.size())
    throw PreconditionError("s_member_from_labeling: member needs p arcs on p vertices");
  return make_s_member(apply_map(f.graph, VertexMap{f.vertex_labels}));
}

TFamilyMember t_member_from_labeling(const TotalLabeling& f) {
  const auto sigma = valence_if_edge_magic(f);
  if (!sigma)
    throw PreconditionError("t_member_from_labeling: input is not edge-magic");
  std::vector<int> vertex_set = f.vertex_labels;
  std::sort(vertex_set.begin(), vertex_set.end());
  std::vector<Arc> arcs;
  arcs.reserve(f.graph.size());
  for (const Arc& a : f.graph.arcs())
    arcs.push_back({f.vertex_label(a.from), f.vertex_label(a.to)});
  return make_t_member(f.graph.order() + f.graph.size(), std::move(vertex_set),
                       *sigma, std::move(arcs));
}

namespace {

int position_in(const std::vector<int>& sorted_values, int value) {
  const auto it =
      std::lower_bound(sorted_values.begin(), sorted_values.end(), value);
  if (it == sorted_values.end() || *it != value)
    throw PreconditionError("t member: arc endpoint " + std::to_string(value) +
                            " is not a vertex label");
  return static_cast<int>(it - sorted_values.begin()) + 1;
}

}  // namespace

TotalLabeling labeling_from_t_member(const TFamilyMember& m) {
  if (!is_t_member(m))
    throw PreconditionError("labeling_from_t_member: invalid member");
  TotalLabeling f;
  std::vector<Arc> arcs;
  arcs.reserve(m.q());
  f.arc_labels.reserve(m.q());
  for (const Arc& a : m.arcs) {
    arcs.push_back({position_in(m.vertex_set, a.from),
                    position_in(m.vertex_set, a.to)});
    f.arc_labels.push_back(m.sigma - a.from - a.to);
  }
  f.graph = Digraph(m.p(), std::move(arcs));
  f.vertex_labels = m.vertex_set;
  f.validate();
  return f;
}

bool is_t_member(const TFamilyMember& m) {
  const int u = m.label_universe;
  if (u < 1 || m.vertex_set.empty()) return false;
  if (!std::is_sorted(m.vertex_set.begin(), m.vertex_set.end())) return false;
  if (m.p() + m.q() != u) return false;
  std::vector<bool> is_vertex(u + 1, false);
  for (int v : m.vertex_set) {
    if (v < 1 || v > u || is_vertex[v]) return false;
    is_vertex[v] = true;
  }
  std::vector<bool> arc_label_seen(u + 1, false);
  std::vector<std::pair<int, int>> seen_arcs;
  for (const Arc& a : m.arcs) {
    if (a.from < 1 || a.from > u || !is_vertex[a.from]) return false;
    if (a.to < 1 || a.to > u || !is_vertex[a.to]) return false;
    const int label = m.sigma - a.from - a.to;
    if (label < 1 || label > u || is_vertex[label] || arc_label_seen[label])
      return false;
    arc_label_seen[label] = true;
    seen_arcs.emplace_back(a.from, a.to);
  }
  std::sort(seen_arcs.begin(), seen_arcs.end());
  return std::adjacent_find(seen_arcs.begin(), seen_arcs.end()) ==
         seen_arcs.end();
}

TFamilyMember make_t_member(int label_universe, std::vector<int> vertex_set,
                            int sigma, std::vector<Arc> arcs) {
  std::sort(arcs.begin(), arcs.end());  // canonical arc order
  TFamilyMember m{label_universe, std::move(vertex_set), sigma, std::move(arcs)};
  if (!is_t_member(m))
    throw PreconditionError(
        "make_t_member: arc labels sigma-a-b do not complement the vertex set");
  return m;
}

SFamilyMember phi_reflect(const SFamilyMember& m) {
  std::vector<int> reflect(m.p);
  for (int v = 1; v <= m.p; ++v) reflect[v - 1] = m.p + 1 - v;
  return make_s_member(apply_map(m.digraph, VertexMap{std::move(reflect)}));
}

TFamilyMember psi_reflect(const TFamilyMember& m) {
  const int u = m.label_universe;
  std::vector<int> vertex_set;
  vertex_set.reserve(m.p());
  for (int v : m.vertex_set) vertex_set.push_back(u + 1 - v);
  std::sort(vertex_set.begin(), vertex_set.end());
  std::vector<Arc> arcs;
  arcs.reserve(m.q());
  for (const Arc& a : m.arcs) arcs.push_back({u + 1 - a.from, u + 1 - a.to});
  return make_t_member(u, std::move(vertex_set), 3 * (u + 1) - m.sigma,
                       std::move(arcs));
}

SFamilyMember reverse_member(const SFamilyMember& m) {
  return make_s_member(reversed(m.digraph));
}

TFamilyMember reverse_member(const TFamilyMember& m) {
  std::vector<Arc> arcs;
  arcs.reserve(m.q());
  for (const Arc& a : m.arcs) arcs.push_back({a.to, a.from});
  return make_t_member(m.label_universe, m.vertex_set, m.sigma, std::move(arcs));
}

void EdgeAssignment::validate() const {
  if (static_cast<int>(images.size()) != domain.size())
    throw PreconditionError("assignment: need one image per arc, got " +
                            std::to_string(images.size()) + " for " +
                            std::to_string(domain.size()) + " arcs");
  if (images.empty()) throw PreconditionError("assignment: empty domain");
  for (const Digraph& g : images)
    if (g.order() != images.front().order())
      throw PreconditionError("assignment: images disagree on vertex count");
}

void SEdgeAssignment::validate() const {
  generic().validate();
  for (const SFamilyMember& m : images)
    if (m.p != inner_p() || m.k != inner_k())
      throw PreconditionError("assignment: images come from different S classes");
}

EdgeAssignment SEdgeAssignment::generic() const {
  EdgeAssignment g{domain, {}};
  g.images.reserve(images.size());
  for (const SFamilyMember& m : images) g.images.push_back(m.digraph);
  return g;
}

void TEdgeAssignment::validate() const {
  generic().validate();
  for (const TFamilyMember& m : images)
    if (m.label_universe != inner_universe() || m.sigma != inner_sigma() ||
        m.vertex_set != images.front().vertex_set)
      throw PreconditionError("assignment: images come from different T classes");
}

EdgeAssignment TEdgeAssignment::generic() const {
  EdgeAssignment g{domain, {}};
  g.images.reserve(images.size());
  for (const TFamilyMember& m : images) {
    std::vector<Arc> arcs;
    arcs.reserve(m.q());
    for (const Arc& a : m.arcs)
      arcs.push_back({position_in(m.vertex_set, a.from),
                      position_in(m.vertex_set, a.to)});
    g.images.emplace_back(m.p(), std::move(arcs));
  }
  return g;
}

EdgeAssignment constant_assignment(const Digraph& domain, const Digraph& image) {
  EdgeAssignment h{domain, std::vector<Digraph>(domain.size(), image)};
  h.validate();
  return h;
}

SEdgeAssignment constant_assignment(const Digraph& domain,
                                    const SFamilyMember& image) {
  SEdgeAssignment h{domain, std::vector<SFamilyMember>(domain.size(), image)};
  h.validate();
  return h;
}

TEdgeAssignment constant_assignment(const Digraph& domain,
                                    const TFamilyMember& image) {
  TEdgeAssignment h{domain, std::vector<TFamilyMember>(domain.size(), image)};
  h.validate();
  return h;
}

}  // namespace magiclab

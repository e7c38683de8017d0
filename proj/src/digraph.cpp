#include "magiclab/digraph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <string>

namespace magiclab {

Digraph::Digraph(int n, std::vector<Arc> arcs) : n_(n), arcs_(std::move(arcs)) {
  if (n_ < 0) throw SchemaError("digraph: negative vertex count");
  std::set<std::pair<int, int>> seen;
  for (const Arc& a : arcs_) {
    if (a.from < 1 || a.from > n_ || a.to < 1 || a.to > n_)
      throw SchemaError("digraph: arc (" + std::to_string(a.from) + "," +
                        std::to_string(a.to) + ") leaves [1," +
                        std::to_string(n_) + "]");
    if (!seen.emplace(a.from, a.to).second)
      throw SchemaError("digraph: duplicate arc (" + std::to_string(a.from) +
                        "," + std::to_string(a.to) + ")");
  }
}

bool Digraph::has_arc(int from, int to) const {
  return std::find(arcs_.begin(), arcs_.end(), Arc{from, to}) != arcs_.end();
}

bool is_bijection(const VertexMap& m, int n) {
  if (m.size() != n) return false;
  std::vector<bool> hit(n, false);
  for (int v : m.to) {
    if (v < 1 || v > n || hit[v - 1]) return false;
    hit[v - 1] = true;
  }
  return true;
}

VertexMap inverse(const VertexMap& m) {
  const int n = m.size();
  if (!is_bijection(m, n)) throw PreconditionError("vertex map: not a bijection");
  VertexMap inv{std::vector<int>(n)};
  for (int v = 1; v <= n; ++v) inv.to[m(v) - 1] = v;
  return inv;
}

VertexMap identity_map(int n) {
  VertexMap m{std::vector<int>(n)};
  std::iota(m.to.begin(), m.to.end(), 1);
  return m;
}

Digraph directed_cycle(int n) {
  if (n < 1) throw PreconditionError("directed_cycle: need n >= 1");
  std::vector<Arc> arcs;
  arcs.reserve(n);
  for (int i = 1; i < n; ++i) arcs.push_back({i, i + 1});
  arcs.push_back({n, 1});
  return Digraph(n, std::move(arcs));
}

Digraph reversed_cycle(int n) { return reversed(directed_cycle(n)); }

Digraph directed_path(int n) {
  if (n < 1) throw PreconditionError("directed_path: need n >= 1");
  std::vector<Arc> arcs;
  arcs.reserve(n - 1);
  for (int i = 1; i < n; ++i) arcs.push_back({i, i + 1});
  return Digraph(n, std::move(arcs));
}

Digraph reversed(const Digraph& d) {
  std::vector<Arc> arcs;
  arcs.reserve(d.size());
  for (const Arc& a : d.arcs()) arcs.push_back({a.to, a.from});
  return Digraph(d.order(), std::move(arcs));
}

Digraph underlying_graph(const Digraph& d) {
  std::set<std::pair<int, int>> edges;
  for (const Arc& a : d.arcs())
    edges.emplace(std::min(a.from, a.to), std::max(a.from, a.to));
  std::vector<Arc> arcs;
  arcs.reserve(edges.size());
  for (const auto& [u, v] : edges) arcs.push_back({u, v});
  return Digraph(d.order(), std::move(arcs));
}

std::vector<Component> components(const Digraph& d) {
  const int n = d.order();
  std::vector<std::vector<int>> adj(n + 1);
  for (const Arc& a : d.arcs()) {
    adj[a.from].push_back(a.to);
    adj[a.to].push_back(a.from);
  }
  std::vector<int> comp(n + 1, 0);
  int count = 0;
  for (int start = 1; start <= n; ++start) {
    if (comp[start]) continue;
    comp[start] = ++count;
    std::queue<int> frontier;
    frontier.push(start);
    while (!frontier.empty()) {
      int u = frontier.front();
      frontier.pop();
      for (int v : adj[u])
        if (!comp[v]) {
          comp[v] = count;
          frontier.push(v);
        }
    }
  }

  std::vector<Component> out(count);
  std::vector<int> local(n + 1, 0);  // original id -> id within its component
  for (int v = 1; v <= n; ++v) {
    Component& c = out[comp[v] - 1];
    c.original_vertex.push_back(v);
    local[v] = static_cast<int>(c.original_vertex.size());
  }
  std::vector<std::vector<Arc>> arcs(count);
  for (const Arc& a : d.arcs())
    arcs[comp[a.from] - 1].push_back({local[a.from], local[a.to]});
  for (int i = 0; i < count; ++i)
    out[i].graph = Digraph(static_cast<int>(out[i].original_vertex.size()),
                           std::move(arcs[i]));
  return out;
}

std::optional<int> is_directed_cycle(const Digraph& d) {
  const int n = d.order();
  if (n == 0 || d.size() != n) return std::nullopt;
  std::vector<int> out_deg(n + 1, 0), in_deg(n + 1, 0), next(n + 1, 0);
  for (const Arc& a : d.arcs()) {
    if (++out_deg[a.from] > 1 || ++in_deg[a.to] > 1) return std::nullopt;
    next[a.from] = a.to;
  }
  int v = 1, steps = 0;
  do {
    if (next[v] == 0) return std::nullopt;
    v = next[v];
    ++steps;
  } while (v != 1 && steps <= n);
  return steps == n ? std::optional<int>(n) : std::nullopt;
}

Digraph apply_map(const Digraph& d, const VertexMap& m) {
  if (!is_bijection(m, d.order()))
    throw PreconditionError("apply_map: map is not a bijection on the vertices");
  std::vector<Arc> arcs;
  arcs.reserve(d.size());
  for (const Arc& a : d.arcs()) arcs.push_back({m(a.from), m(a.to)});
  return Digraph(d.order(), std::move(arcs));
}

}  // namespace magiclab

#pragma once

#include <compare>
#include <optional>
#include <vector>

#include "magiclab/errors.hpp"

namespace magiclab {

struct Arc {
  int from = 0;
  int to = 0;
  auto operator<=>(const Arc&) const = default;
};

// Directed graph on vertex set [1, n]. Loops are allowed, duplicate arcs are
// rejected at construction. Arc order is preserved as given; several
// constructions (orientation assignments, label rotations) depend on it.
class Digraph {
 public:
  Digraph() = default;
  Digraph(int n, std::vector<Arc> arcs);

  int order() const { return n_; }
  int size() const { return static_cast<int>(arcs_.size()); }
  const std::vector<Arc>& arcs() const { return arcs_; }
  const Arc& arc(int index) const { return arcs_[index]; }
  bool has_arc(int from, int to) const;

  bool operator==(const Digraph&) const = default;

 private:
  int n_ = 0;
  std::vector<Arc> arcs_;
};

// Explicit vertex correspondence, v -> to[v-1]. Used as an isomorphism
// witness; never produced by isomorphism search.
struct VertexMap {
  std::vector<int> to;
  int operator()(int v) const { return to[v - 1]; }
  int size() const { return static_cast<int>(to.size()); }
};

bool is_bijection(const VertexMap& m, int n);
VertexMap inverse(const VertexMap& m);
VertexMap identity_map(int n);

Digraph directed_cycle(int n);   // arcs (1,2),(2,3),...,(n,1)
Digraph reversed_cycle(int n);   // arcs (2,1),(3,2),...,(1,n)
Digraph directed_path(int n);    // arcs (i,i+1)
Digraph reversed(const Digraph& d);

// Forgets orientation: one arc (min,max) per undirected edge, sorted
// ascending. Loops survive as (u,u).
Digraph underlying_graph(const Digraph& d);

struct Component {
  Digraph graph;                     // re-indexed to [1, order]
  std::vector<int> original_vertex;  // component vertex i+1 had this id in the input
};

// Weakly connected components, ordered by smallest original vertex; vertices
// within a component keep ascending original order.
std::vector<Component> components(const Digraph& d);

// Length of d when d is a single strongly oriented cycle, otherwise nullopt.
std::optional<int> is_directed_cycle(const Digraph& d);

// Relabels vertices through a bijection; arcs are transported in order.
Digraph apply_map(const Digraph& d, const VertexMap& m);

}  // namespace magiclab

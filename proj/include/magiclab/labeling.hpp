#pragma once

#include <optional>
#include <vector>

#include "magiclab/digraph.hpp"

namespace magiclab {

// Total labeling f : V + A -> integers. vertex_labels[v-1] labels vertex v,
// arc_labels[i] labels graph.arcs()[i]. validate() checks that the label
// multiset is exactly [1, p+q].
struct TotalLabeling {
  Digraph graph;
  std::vector<int> vertex_labels;
  std::vector<int> arc_labels;

  int vertex_label(int v) const { return vertex_labels[v - 1]; }
  void validate() const;  // throws SchemaError
};

// Vertex-only labeling with labels [1, p] (bijective).
struct VertexLabeling {
  Digraph graph;
  std::vector<int> labels;

  int label(int v) const { return labels[v - 1]; }
  void validate() const;  // throws SchemaError
};

struct MagicCheck {
  std::optional<int> valence;  // set iff every arc sum agrees
  std::optional<Arc> conflict; // first arc breaking the shared sum
};

MagicCheck check_edge_magic(const TotalLabeling& f);
std::optional<int> valence_if_edge_magic(const TotalLabeling& f);

// Edge-magic with vertex labels exactly [1, p].
bool is_super_edge_magic(const TotalLabeling& f);

// Smallest induced endpoint sum k when {g(u)+g(v) : uv in A} is a run of q
// consecutive integers, else nullopt. This is the hypothesis under which a
// vertex labeling extends to a super edge-magic one.
std::optional<int> consecutive_sum_start(const VertexLabeling& g);

// Completes g with the forced arc labels; valence p+q+k. Throws
// PreconditionError when the consecutive-sum condition fails.
TotalLabeling extend_to_super_edge_magic(const VertexLabeling& g);

// Structural equality that ignores arc storage order: same graph order, same
// arc multiset, same labels on matching vertices/arcs.
bool labeled_equal(const TotalLabeling& a, const TotalLabeling& b);

// Pushes a labeling through a digraph isomorphism witness.
TotalLabeling transport(const TotalLabeling& f, const VertexMap& witness);

}  // namespace magiclab

#pragma once

#include <optional>
#include <vector>

#include "magiclab/labeling.hpp"

namespace magiclab {

// Member of S_p^k: a digraph on [1, p] with p arcs whose identity vertex
// labeling extends to a super edge-magic labeling, the minimum induced
// endpoint sum being k. Vertex names are their labels, so all product label
// arithmetic can read names directly.
struct SFamilyMember {
  int p = 0;
  int k = 0;
  Digraph digraph;

  bool operator==(const SFamilyMember&) const = default;
};

// Member of T^q_sigma: an edge-magic labeled digraph presented by labels.
// Vertices are the p labels in vertex_set (subset of [1, label_universe],
// label_universe = p+q); each arc (a, b) carries the implied label
// sigma - a - b, and those arc labels fill [1, p+q] \ vertex_set exactly.
struct TFamilyMember {
  int label_universe = 0;
  std::vector<int> vertex_set;  // sorted ascending
  int sigma = 0;
  std::vector<Arc> arcs;        // endpoints from vertex_set; kept sorted

  int p() const { return static_cast<int>(vertex_set.size()); }
  int q() const { return static_cast<int>(arcs.size()); }

  bool operator==(const TFamilyMember&) const = default;
};

// k such that d (on vertex set [1, p], names = labels) lies in S_p^k, else
// nullopt. Throws PreconditionError when d's order differs from p.
std::optional<int> check_s_member(const Digraph& d, int p);

SFamilyMember make_s_member(const Digraph& d);  // throws PreconditionError

// All 1-regular members of S_p (permutation digraphs with consecutive
// endpoint sums), ordered lexicographically by the permutation image. Only
// odd p yields members: k = (p+3)/2 must be integral. Even p returns empty.
std::vector<SFamilyMember> enumerate_s1regular(int p);

// Renames a super edge-magic labeled digraph so vertex names equal labels.
SFamilyMember s_member_from_labeling(const TotalLabeling& f);

// Renames an edge-magic labeled digraph so vertex names equal labels;
// sigma = valence. Throws PreconditionError on non-magic input.
TFamilyMember t_member_from_labeling(const TotalLabeling& f);

// Rebuilds the labeled digraph from a member: vertex i is the i-th smallest
// label of vertex_set, arcs carry sigma - a - b.
TotalLabeling labeling_from_t_member(const TFamilyMember& m);

bool is_t_member(const TFamilyMember& m);
TFamilyMember make_t_member(int label_universe, std::vector<int> vertex_set,
                            int sigma, std::vector<Arc> arcs);

// phi: S_p^k -> S_p^{p+3-k}, vertex a -> p+1-a. Involution.
SFamilyMember phi_reflect(const SFamilyMember& m);

// psi: T^q_sigma -> T^q_{3(p+q+1)-sigma}, label a -> p+q+1-a. Involution.
TFamilyMember psi_reflect(const TFamilyMember& m);

// Arc reversal; endpoint sums are symmetric, so membership, k and sigma are
// unchanged.
SFamilyMember reverse_member(const SFamilyMember& m);
TFamilyMember reverse_member(const TFamilyMember& m);

// Arc-indexed family assignment h: images[i] expands domain.arcs()[i] in the
// product. The structural form carries plain digraphs over a common inner
// vertex count; the typed forms below enforce the single-class requirements
// of the labeling constructions.
struct EdgeAssignment {
  Digraph domain;
  std::vector<Digraph> images;
  void validate() const;  // throws PreconditionError
};

struct SEdgeAssignment {
  Digraph domain;
  std::vector<SFamilyMember> images;  // one common (p, k)

  void validate() const;  // throws PreconditionError
  EdgeAssignment generic() const;
  int inner_p() const { return images.front().p; }
  int inner_k() const { return images.front().k; }
};

struct TEdgeAssignment {
  Digraph domain;                     // vertices named by labels (S-member form)
  std::vector<TFamilyMember> images;  // one common (universe, V, q, sigma)

  void validate() const;  // throws PreconditionError
  // Inner vertices become positions in the sorted vertex_set.
  EdgeAssignment generic() const;
  int inner_universe() const { return images.front().label_universe; }
  int inner_p() const { return images.front().p(); }
  int inner_sigma() const { return images.front().sigma; }
};

EdgeAssignment constant_assignment(const Digraph& domain, const Digraph& image);
SEdgeAssignment constant_assignment(const Digraph& domain, const SFamilyMember& image);
TEdgeAssignment constant_assignment(const Digraph& domain, const TFamilyMember& image);

}  // namespace magiclab

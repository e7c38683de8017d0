#pragma once

#include <optional>
#include <string>
#include <vector>

#include "magiclab/product.hpp"

namespace magiclab {

// Orientation pattern for the product of two cycles: each of the m arcs of
// the outer directed m-cycle expands to the inner n-cycle, forward or
// reversed. reversed_arcs holds the arc indices assigned the reversed copy.
struct OrientationAssignment {
  int m = 0;
  int n = 0;
  int g = 0;  // target residue of m - 2N mod n
  std::vector<int> reversed_arcs;  // indices into the outer cycle's arcs

  int reversed_count() const { return static_cast<int>(reversed_arcs.size()); }
};

// Least N in [0, m-1] with m - 2N = g (mod n), marking the first N arcs
// reversed; nullopt when no such N exists. The component structure of the
// resulting product depends only on the count, so the prefix choice is just
// a canonical one.
std::optional<OrientationAssignment> solve_ng(int m, int n, int g);

// Builds the inner-cycle assignment from a, runs the product, and returns
// the sorted component cycle lengths. Postcondition (checked): n/k copies of
// length m*k where k is the order of g in Z_n; a non-cycle component throws
// InvariantError.
std::vector<int> cycle_product_structure(const OrientationAssignment& a);

// Cycle-of-cycles valence constructions. Both take an edge-magic labeling f
// of a strongly oriented m-cycle and odd p, and return a verified labeling
// of C_{pm}.
//
// The first expands f's cycle by a 1-regular inner member (a relabeled
// directed p-cycle and its reversal, mixed so the product is one cycle);
// valence p*val(f) - 3(p-1)/2. Requires m odd or m >= p.
LabeledProduct mcquillan_i(const TotalLabeling& f, int p);

// The second takes the p-cycle as the outer S_p member and both orientations
// of f's T-member as inner images; valence 3(p-1)m + val(f).
LabeledProduct mcquillan_ii(const TotalLabeling& f, int p);

// Label rotation between edge-magic and vertex-magic total labelings of
// 2-regular graphs (disjoint unions of cycles): each edge's label moves to
// the successor vertex in the traversal order, each vertex's to the edge
// behind it. The result has every vertex weight (own label plus incident
// edge labels) equal to val(f). Traversal is deterministic: a cycle starts
// at its smallest vertex and steps first to that vertex's smaller neighbor.
TotalLabeling em_to_vmt(const TotalLabeling& f);

// Inverse rotation; vmt_to_em(em_to_vmt(f)) == f exactly.
TotalLabeling vmt_to_em(const TotalLabeling& g);

// Constant vertex weight of a total labeling if one exists.
std::optional<int> vertex_magic_weight(const TotalLabeling& f);

enum class CoverageStatus { kAchieved, kUnachieved, kUnknownUnderBudget };

struct CoverageEntry {
  int valence = 0;
  CoverageStatus status = CoverageStatus::kUnknownUnderBudget;
  std::string recipe;                        // how the certificate was built
  std::optional<TotalLabeling> certificate;  // verified when present
};

struct CoverageReport {
  int n = 0;
  int conjectured_lo = 0;
  int conjectured_hi = 0;
  bool oracle_ran = false;
  std::vector<CoverageEntry> entries;  // ascending by valence

  std::vector<int> achieved() const;
};

// Conjectured edge-magic valence interval for the n-cycle:
// [5t+4, 7t+5] for n = 2t+1, [5t+2, 7t+1] for n = 2t.
std::pair<int, int> godbold_slater_range(int n);

// Assembles realizable valences for C_n within a p+q search budget: direct
// oracle when 2n fits, the two cycle-of-cycles constructions over odd prime
// factorizations n = p*m with oracle-labelable C_m, and complement closure
// of everything found. Every achieved entry carries a re-verified
// certificate; missing valences are reported, never claimed impossible.
CoverageReport godbold_slater_report(int n, std::optional<int> budget = {});

}  // namespace magiclab

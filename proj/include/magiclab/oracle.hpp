#pragma once

#include <optional>
#include <vector>

#include "magiclab/labeling.hpp"

namespace magiclab {

inline constexpr int kDefaultOracleGuard = 18;

// Effective p+q cap: MAGICLAB_ORACLE_GUARD when set, else the default.
int oracle_guard();

enum class MagicMode { kEdgeMagic, kSuperEdgeMagic };

// Exhaustive ground truth for one graph: every achievable valence, with the
// first labeling found per valence under the deterministic search order.
struct ValenceReport {
  Digraph graph;
  MagicMode mode = MagicMode::kEdgeMagic;
  std::vector<int> valences;                // ascending
  std::vector<TotalLabeling> certificates;  // parallel to valences
};

// Complete edge-magic valence search. For each candidate valence, vertex
// labels are assigned by backtracking (descending degree, ties by vertex id)
// with each arc label forced to v - f(u) - f(v). Guard exceeded (p+q over
// the cap) throws PreconditionError rather than truncating.
ValenceReport exhaustive_edge_magic(const Digraph& d,
                                    std::optional<int> guard = {});

// Complete super edge-magic search over vertex bijections onto [1, p] with
// consecutive-sum pruning, then the forced arc extension.
ValenceReport exhaustive_super_edge_magic(const Digraph& d,
                                          std::optional<int> guard = {});

// Every super edge-magic labeling, in vertex-bijection lexicographic order.
std::vector<TotalLabeling> all_super_edge_magic_labelings(
    const Digraph& d, std::optional<int> guard = {});

// Number of permutations of [1, p] whose endpoint sums i + perm(i) are p
// distinct consecutive values; independent cross-check for the 1-regular
// family enumeration. Requires p <= 11.
long long count_sem_one_regular(int p);

}  // namespace magiclab

#pragma once

#include "magiclab/labeling.hpp"

namespace magiclab {

// x -> p+q+1-x on every label. Edge-magic in, edge-magic out;
// valence v -> 3(p+q+1) - v.
TotalLabeling em_complement(const TotalLabeling& f);

// Vertex labels x -> p+1-x, then re-extend. Requires super edge-magic input;
// result is super edge-magic with valence v -> 4p+q+3-v.
TotalLabeling sem_complement(const TotalLabeling& f);

// Odd labeling o(f): vertices 2f(x)-1, arcs chosen to keep the magic sum.
// Requires super edge-magic input with p == q; valence v -> 2v-2p-2.
TotalLabeling odd_labeling(const TotalLabeling& f);

// Even labeling e(f): vertices 2f(x), valence v -> 2v-2p-1. Requires super
// edge-magic input with p == q. Always edge-magic, never super.
TotalLabeling even_labeling(const TotalLabeling& f);

// For super edge-magic f with p == q, the complement of the even labeling is
// the odd labeling of the complement, and vice versa. Returns true when both
// identities hold for f (they always should; exposed for direct checking).
bool odd_even_complement_duality(const TotalLabeling& f);

}  // namespace magiclab

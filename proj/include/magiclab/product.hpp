#pragma once

#include <string>
#include <utility>

#include "magiclab/families.hpp"

namespace magiclab {

// Product vertices are pairs (outer, inner) flattened row-major with the
// outer coordinate major: flat = (outer-1)*inner_order + inner. Under
// identity naming the induced labels below coincide with flat indices, which
// keeps bijectivity checks structural.
struct ProductVertex {
  int outer = 0;
  int inner = 0;
};

int flat_index(ProductVertex v, int inner_order);
ProductVertex unflatten(int flat, int inner_order);

// The arc-expansion product: ((a,i),(b,j)) is an arc iff (a,b) is an arc of
// d and (i,j) an arc of its assigned image. Arc order is (d-arc index,
// inner-arc index), so output is deterministic. A constant assignment
// reproduces the Kronecker product of digraphs.
Digraph product_h(const Digraph& d, const EdgeAssignment& h);

struct LabeledProduct {
  TotalLabeling labeling;
  std::string construction;
  int predicted_valence = 0;
};

// Product labeling with an S_p^k assignment: vertex (a,i) -> p(a-1)+i and
// arc ((a,i),(b,j)) over a d-arc labeled e -> p(e-1)+(k+p)-(i+j), where a, b,
// e are the labels under f. Valence p(val(f)-3)+k+p; super edge-magic
// whenever f is.
LabeledProduct induced_spk(const TotalLabeling& f, const SEdgeAssignment& h);

// Product labeling of an S_n^k member with a T^q_sigma assignment: vertex
// (i,a) -> (p+q)(i-1)+a and arc -> (p+q)(k+n-(i+j)-1)+(sigma-a-b); a
// bijection onto [1, n(p+q)] with valence (p+q)(k+n-3)+sigma.
LabeledProduct induced_tqs(const SFamilyMember& d, const TEdgeAssignment& h);

// Arc-wise phi-reflection of an S-assignment (images move to S_p^{p+3-k}).
SEdgeAssignment hbar_of(const SEdgeAssignment& h);

// Complement counterpart of a T-assignment over a domain in S_n^k: the
// domain reflects through phi (i -> n+1-i) and each image through psi, with
// arc correspondence preserved. n is taken from the domain's order and
// checked against the argument.
TEdgeAssignment hc_of(const TEdgeAssignment& h, int n);

// Isomorphism witnesses used by the commutation checks, as flat vertex maps.
VertexMap inner_reflection_witness(int outer_order, int inner_order);
VertexMap full_reflection_witness(int total_order);

// sem_complement(induced_spk(f, h)) transported through the inner-reflection
// witness equals induced_spk(sem_complement(f), hbar_of(h)), valences
// included. Requires super edge-magic f.
bool check_sem_complement_commutes(const TotalLabeling& f,
                                   const SEdgeAssignment& h);

// em_complement(induced_spk(f, h)) transported through the inner-reflection
// witness equals induced_spk(em_complement(f), hbar_of(h)).
bool check_em_complement_commutes(const TotalLabeling& f,
                                  const SEdgeAssignment& h);

// For super edge-magic f with p = q: the complement of the product of the
// odd labeling matches the product of the even labeling of the complement
// (and with odd/even swapped), through the same witness.
bool check_odd_even_product_duality(const TotalLabeling& f,
                                    const SEdgeAssignment& h);

// em_complement(induced_tqs(d, h)) transported through the full-reflection
// witness equals induced_tqs over the phi-reflected domain with hc_of(h).
bool check_t_complement_commutes(const SFamilyMember& d,
                                 const TEdgeAssignment& h);

}  // namespace magiclab

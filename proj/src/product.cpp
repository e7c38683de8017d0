#include "magiclab/product.hpp"

#include <string>

#include "magiclab/transforms.hpp"

namespace magiclab {

int flat_index(ProductVertex v, int inner_order) {
  return (v.outer - 1) * inner_order + v.inner;
}

ProductVertex unflatten(int flat, int inner_order) {
  return {(flat - 1) / inner_order + 1, (flat - 1) % inner_order + 1};
}

Digraph product_h(const Digraph& d, const EdgeAssignment& h) {
  h.validate();
  if (!(d == h.domain))
    throw PreconditionError("product_h: assignment was built for a different digraph");
  const int inner = h.images.front().order();
  std::vector<Arc> arcs;
  for (int e = 0; e < d.size(); ++e) {
    const Arc& a = d.arc(e);
    for (const Arc& im : h.images[e].arcs())
      arcs.push_back({flat_index({a.from, im.from}, inner),
                      flat_index({a.to, im.to}, inner)});
  }
  return Digraph(d.order() * inner, std::move(arcs));
}

namespace {

void verify_product(LabeledProduct& out, bool expect_super) {
  out.labeling.validate();
  const auto valence = valence_if_edge_magic(out.labeling);
  if (!valence || *valence != out.predicted_valence)
    throw InvariantError(out.construction + ": constructed labeling missed the predicted valence " +
                         std::to_string(out.predicted_valence));
  if (expect_super && !is_super_edge_magic(out.labeling))
    throw InvariantError(out.construction + ": super edge-magic input did not stay super");
}

}  // namespace

LabeledProduct induced_spk(const TotalLabeling& f, const SEdgeAssignment& h) {
  h.validate();
  if (!(h.domain == f.graph))
    throw PreconditionError("induced_spk: assignment domain differs from the labeled digraph");
  const auto val = valence_if_edge_magic(f);
  if (!val) throw PreconditionError("induced_spk: input labeling is not edge-magic");
  const int p = h.inner_p(), k = h.inner_k();

  LabeledProduct out;
  out.construction = "spk";
  out.predicted_valence = p * (*val - 3) + k + p;
  out.labeling.graph = product_h(f.graph, h.generic());

  out.labeling.vertex_labels.resize(f.graph.order() * p);
  for (int u = 1; u <= f.graph.order(); ++u)
    for (int i = 1; i <= p; ++i)
      out.labeling.vertex_labels[flat_index({u, i}, p) - 1] =
          p * (f.vertex_label(u) - 1) + i;

  out.labeling.arc_labels.reserve(out.labeling.graph.size());
  for (int e = 0; e < f.graph.size(); ++e)
    for (const Arc& im : h.images[e].digraph.arcs())
      out.labeling.arc_labels.push_back(p * (f.arc_labels[e] - 1) + (k + p) -
                                        (im.from + im.to));

  verify_product(out, is_super_edge_magic(f));
  return out;
}

LabeledProduct induced_tqs(const SFamilyMember& d, const TEdgeAssignment& h) {
  h.validate();
  if (!(h.domain == d.digraph))
    throw PreconditionError("induced_tqs: assignment domain differs from the member");
  if (!check_s_member(d.digraph, d.p).has_value() ||
      *check_s_member(d.digraph, d.p) != d.k)
    throw PreconditionError("induced_tqs: outer factor is not the S member it claims");
  const int n = d.p, k = d.k;
  const int universe = h.inner_universe(), sigma = h.inner_sigma();
  const int inner_p = h.inner_p();
  const std::vector<int>& labels = h.images.front().vertex_set;

  LabeledProduct out;
  out.construction = "tqs";
  out.predicted_valence = universe * (k + n - 3) + sigma;
  out.labeling.graph = product_h(d.digraph, h.generic());

  out.labeling.vertex_labels.resize(n * inner_p);
  for (int i = 1; i <= n; ++i)
    for (int t = 1; t <= inner_p; ++t)
      out.labeling.vertex_labels[flat_index({i, t}, inner_p) - 1] =
          universe * (i - 1) + labels[t - 1];

  out.labeling.arc_labels.reserve(out.labeling.graph.size());
  for (int e = 0; e < d.digraph.size(); ++e) {
    const Arc& outer = d.digraph.arc(e);
    for (const Arc& im : h.images[e].arcs)
      out.labeling.arc_labels.push_back(
          universe * (k + n - (outer.from + outer.to) - 1) +
          (sigma - im.from - im.to));
  }

  verify_product(out, false);
  return out;
}

SEdgeAssignment hbar_of(const SEdgeAssignment& h) {
  SEdgeAssignment out{h.domain, {}};
  out.images.reserve(h.images.size());
  for (const SFamilyMember& m : h.images) out.images.push_back(phi_reflect(m));
  out.validate();
  return out;
}

TEdgeAssignment hc_of(const TEdgeAssignment& h, int n) {
  if (h.domain.order() != n)
    throw PreconditionError("hc_of: n differs from the domain's order");
  std::vector<int> reflect(n);
  for (int v = 1; v <= n; ++v) reflect[v - 1] = n + 1 - v;
  TEdgeAssignment out{apply_map(h.domain, VertexMap{std::move(reflect)}), {}};
  out.images.reserve(h.images.size());
  for (const TFamilyMember& m : h.images) out.images.push_back(psi_reflect(m));
  out.validate();
  return out;
}

VertexMap inner_reflection_witness(int outer_order, int inner_order) {
  VertexMap w{std::vector<int>(outer_order * inner_order)};
  for (int u = 1; u <= outer_order; ++u)
    for (int i = 1; i <= inner_order; ++i)
      w.to[flat_index({u, i}, inner_order) - 1] =
          flat_index({u, inner_order + 1 - i}, inner_order);
  return w;
}

VertexMap full_reflection_witness(int total_order) {
  VertexMap w{std::vector<int>(total_order)};
  for (int v = 1; v <= total_order; ++v) w.to[v - 1] = total_order + 1 - v;
  return w;
}

bool check_sem_complement_commutes(const TotalLabeling& f,
                                   const SEdgeAssignment& h) {
  if (!is_super_edge_magic(f))
    throw PreconditionError("check_sem_complement_commutes: input is not super edge-magic");
  const VertexMap w = inner_reflection_witness(f.graph.order(), h.inner_p());
  const TotalLabeling left = sem_complement(induced_spk(f, h).labeling);
  const TotalLabeling right = induced_spk(sem_complement(f), hbar_of(h)).labeling;
  return labeled_equal(transport(left, w), right) &&
         valence_if_edge_magic(left) == valence_if_edge_magic(right);
}

bool check_em_complement_commutes(const TotalLabeling& f,
                                  const SEdgeAssignment& h) {
  const VertexMap w = inner_reflection_witness(f.graph.order(), h.inner_p());
  const TotalLabeling left = em_complement(induced_spk(f, h).labeling);
  const TotalLabeling right = induced_spk(em_complement(f), hbar_of(h)).labeling;
  return labeled_equal(transport(left, w), right);
}

bool check_odd_even_product_duality(const TotalLabeling& f,
                                    const SEdgeAssignment& h) {
  const VertexMap w = inner_reflection_witness(f.graph.order(), h.inner_p());
  const SEdgeAssignment hb = hbar_of(h);
  const TotalLabeling fc = sem_complement(f);
  const bool odd_side = labeled_equal(
      transport(em_complement(induced_spk(odd_labeling(f), h).labeling), w),
      induced_spk(even_labeling(fc), hb).labeling);
  const bool even_side = labeled_equal(
      transport(em_complement(induced_spk(even_labeling(f), h).labeling), w),
      induced_spk(odd_labeling(fc), hb).labeling);
  return odd_side && even_side;
}

bool check_t_complement_commutes(const SFamilyMember& d,
                                 const TEdgeAssignment& h) {
  const VertexMap w = full_reflection_witness(d.p * h.inner_p());
  const TotalLabeling left = em_complement(induced_tqs(d, h).labeling);
  const TotalLabeling right =
      induced_tqs(phi_reflect(d), hc_of(h, d.p)).labeling;
  return labeled_equal(transport(left, w), right);
}

}  // namespace magiclab

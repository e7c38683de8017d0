#include "magiclab/transforms.hpp"

#include <string>

namespace magiclab {

namespace {

int require_valence(const TotalLabeling& f, const char* op) {
  const auto v = valence_if_edge_magic(f);
  if (!v) throw PreconditionError(std::string(op) + ": input is not edge-magic");
  return *v;
}

int require_sem_valence(const TotalLabeling& f, const char* op) {
  const int v = require_valence(f, op);
  if (!is_super_edge_magic(f))
    throw PreconditionError(std::string(op) + ": input is not super edge-magic");
  return v;
}

void require_equal_order_size(const TotalLabeling& f, const char* op) {
  if (f.graph.order() != f.graph.size())
    throw PreconditionError(std::string(op) + ": graph needs p = q, got p=" +
                            std::to_string(f.graph.order()) + " q=" +
                            std::to_string(f.graph.size()));
}

}  // namespace

TotalLabeling em_complement(const TotalLabeling& f) {
  require_valence(f, "em_complement");
  const int top = f.graph.order() + f.graph.size() + 1;
  TotalLabeling out = f;
  for (int& l : out.vertex_labels) l = top - l;
  for (int& l : out.arc_labels) l = top - l;
  return out;
}

TotalLabeling sem_complement(const TotalLabeling& f) {
  require_sem_valence(f, "sem_complement");
  const int p = f.graph.order();
  VertexLabeling g{f.graph, f.vertex_labels};
  for (int& l : g.labels) l = p + 1 - l;
  return extend_to_super_edge_magic(g);
}

TotalLabeling odd_labeling(const TotalLabeling& f) {
  const int val = require_sem_valence(f, "odd_labeling");
  require_equal_order_size(f, "odd_labeling");
  const int p = f.graph.order();
  TotalLabeling out = f;
  for (int& l : out.vertex_labels) l = 2 * l - 1;
  const int target = 2 * val - 2 * p - 2;
  for (int i = 0; i < f.graph.size(); ++i) {
    const Arc& a = f.graph.arc(i);
    out.arc_labels[i] =
        target - out.vertex_label(a.from) - out.vertex_label(a.to);
  }
  out.validate();
  return out;
}

TotalLabeling even_labeling(const TotalLabeling& f) {
  const int val = require_sem_valence(f, "even_labeling");
  require_equal_order_size(f, "even_labeling");
  const int p = f.graph.order();
  TotalLabeling out = f;
  for (int& l : out.vertex_labels) l = 2 * l;
  const int target = 2 * val - 2 * p - 1;
  for (int i = 0; i < f.graph.size(); ++i) {
    const Arc& a = f.graph.arc(i);
    out.arc_labels[i] =
        target - out.vertex_label(a.from) - out.vertex_label(a.to);
  }
  out.validate();
  return out;
}

bool odd_even_complement_duality(const TotalLabeling& f) {
  return labeled_equal(em_complement(even_labeling(f)),
                       odd_labeling(sem_complement(f))) &&
         labeled_equal(em_complement(odd_labeling(f)),
                       even_labeling(sem_complement(f)));
}

}  // namespace magiclab

#include <doctest.h>

#include "magiclab/labeling.hpp"

using namespace magiclab;

namespace {

// Hand-checked: vertex labels 1,2,3 around the directed triangle force arc
// labels 6,4,5 and constant sum 9 with vertex labels exactly [1,3].
TotalLabeling sem_c3() {
  return {directed_cycle(3), {1, 2, 3}, {6, 4, 5}};
}

// Hand-checked: cycle labels 1,4,2,5,3 give endpoint sums 4..8, so the
// extension has valence 14.
TotalLabeling sem_c5() {
  return {directed_cycle(5), {1, 4, 2, 5, 3}, {9, 8, 7, 6, 10}};
}

}  // namespace

TEST_CASE("validate accepts exactly the label multiset [1, p+q]") {
  CHECK_NOTHROW(sem_c3().validate());
  TotalLabeling bad = sem_c3();
  bad.arc_labels[0] = 5;  // duplicate
  CHECK_THROWS_AS(bad.validate(), SchemaError);
  bad = sem_c3();
  bad.vertex_labels.pop_back();
  CHECK_THROWS_AS(bad.validate(), SchemaError);
  bad = sem_c3();
  bad.arc_labels[2] = 7;  // out of range
  CHECK_THROWS_AS(bad.validate(), SchemaError);
}

TEST_CASE("edge-magic check finds the valence or the first conflict") {
  CHECK(valence_if_edge_magic(sem_c3()) == 9);
  CHECK(valence_if_edge_magic(sem_c5()) == 14);

  TotalLabeling broken = sem_c3();
  std::swap(broken.arc_labels[1], broken.arc_labels[2]);
  const MagicCheck check = check_edge_magic(broken);
  CHECK_FALSE(check.valence.has_value());
  CHECK(check.conflict == Arc{2, 3});

  // No arcs: the shared-sum condition is vacuous.
  const TotalLabeling isolated{Digraph(1, {}), {1}, {}};
  CHECK(valence_if_edge_magic(isolated) == 0);
}

TEST_CASE("super edge-magic needs vertex labels [1, p]") {
  CHECK(is_super_edge_magic(sem_c3()));
  CHECK(is_super_edge_magic(sem_c5()));
  // Shift high labels onto vertices: still edge-magic, no longer super.
  const TotalLabeling em{directed_cycle(3), {6, 5, 4}, {1, 3, 2}};
  CHECK(valence_if_edge_magic(em) == 12);
  CHECK_FALSE(is_super_edge_magic(em));
}

TEST_CASE("consecutive endpoint sums extend to a super edge-magic labeling") {
  const VertexLabeling g{directed_cycle(5), {1, 4, 2, 5, 3}};
  CHECK(consecutive_sum_start(g) == 4);
  const TotalLabeling f = extend_to_super_edge_magic(g);
  CHECK(f.arc_labels == std::vector<int>{9, 8, 7, 6, 10});
  CHECK(valence_if_edge_magic(f) == 5 + 5 + 4);
  CHECK(is_super_edge_magic(f));

  // Identity on the square: sums 3,5,7,5 repeat a value.
  const VertexLabeling square{directed_cycle(4), {1, 2, 3, 4}};
  CHECK_FALSE(consecutive_sum_start(square).has_value());
  CHECK_THROWS_AS(extend_to_super_edge_magic(square), PreconditionError);
}

TEST_CASE("labeled_equal ignores arc storage order") {
  const TotalLabeling a = sem_c3();
  const TotalLabeling b{Digraph(3, {{2, 3}, {3, 1}, {1, 2}}), {1, 2, 3}, {4, 5, 6}};
  CHECK(labeled_equal(a, b));
  TotalLabeling c = b;
  std::swap(c.arc_labels[0], c.arc_labels[1]);
  CHECK_FALSE(labeled_equal(a, c));
  CHECK_FALSE(labeled_equal(a, sem_c5()));
}

TEST_CASE("transport pushes labels through a witness") {
  const TotalLabeling f = sem_c3();
  const VertexMap m{{2, 3, 1}};
  const TotalLabeling g = transport(f, m);
  CHECK(valence_if_edge_magic(g) == 9);
  CHECK(g.vertex_label(m(1)) == f.vertex_label(1));
  CHECK(g.vertex_label(m(3)) == f.vertex_label(3));
  CHECK(g.graph.has_arc(m(1), m(2)));
  // Round trip through the inverse witness restores the original exactly.
  CHECK(labeled_equal(transport(g, inverse(m)), f));
}

#include <doctest.h>

#include "magiclab/oracle.hpp"
#include "magiclab/transforms.hpp"

using namespace magiclab;

namespace {

TotalLabeling sem_c3() {
  return {directed_cycle(3), {1, 2, 3}, {6, 4, 5}};
}

TotalLabeling sem_c5() {
  return {directed_cycle(5), {1, 4, 2, 5, 3}, {9, 8, 7, 6, 10}};
}

}  // namespace

TEST_CASE("label complement, hand-checked image") {
  const TotalLabeling c = em_complement(sem_c3());
  CHECK(c.vertex_labels == std::vector<int>{6, 5, 4});
  CHECK(c.arc_labels == std::vector<int>{1, 3, 2});
  CHECK(valence_if_edge_magic(c) == 3 * 7 - 9);
  CHECK_FALSE(is_super_edge_magic(c));
  CHECK(labeled_equal(em_complement(c), sem_c3()));  // involution
}

TEST_CASE("vertex complement keeps the labeling super edge-magic") {
  const TotalLabeling c = sem_complement(sem_c3());
  CHECK(c.vertex_labels == std::vector<int>{3, 2, 1});
  CHECK(c.arc_labels == std::vector<int>{4, 6, 5});
  CHECK(valence_if_edge_magic(c) == 4 * 3 + 3 + 3 - 9);
  CHECK(is_super_edge_magic(c));
  CHECK(labeled_equal(sem_complement(c), sem_c3()));

  const TotalLabeling c5 = sem_complement(sem_c5());
  CHECK(is_super_edge_magic(c5));
  CHECK(valence_if_edge_magic(c5) == 4 * 5 + 5 + 3 - 14);
  CHECK(labeled_equal(sem_complement(c5), sem_c5()));
}

TEST_CASE("odd labeling, hand-checked image") {
  const TotalLabeling o = odd_labeling(sem_c3());
  CHECK(o.vertex_labels == std::vector<int>{1, 3, 5});
  CHECK(o.arc_labels == std::vector<int>{6, 2, 4});
  CHECK(valence_if_edge_magic(o) == 2 * 9 - 2 * 3 - 2);
  CHECK_FALSE(is_super_edge_magic(o));  // vertex labels spread to 2p-1

  const TotalLabeling o5 = odd_labeling(sem_c5());
  CHECK(o5.vertex_labels == std::vector<int>{1, 7, 3, 9, 5});
  CHECK(o5.arc_labels == std::vector<int>{8, 6, 4, 2, 10});
  CHECK(valence_if_edge_magic(o5) == 16);
}

TEST_CASE("even labeling, hand-checked image") {
  const TotalLabeling e = even_labeling(sem_c3());
  CHECK(e.vertex_labels == std::vector<int>{2, 4, 6});
  CHECK(e.arc_labels == std::vector<int>{5, 1, 3});
  CHECK(valence_if_edge_magic(e) == 2 * 9 - 2 * 3 - 1);
  CHECK_FALSE(is_super_edge_magic(e));  // vertex labels all even, never [1,p]

  // The even labeling of the 5-cycle realizes valence 17.
  const TotalLabeling e5 = even_labeling(sem_c5());
  CHECK(e5.vertex_labels == std::vector<int>{2, 8, 4, 10, 6});
  CHECK(e5.arc_labels == std::vector<int>{7, 5, 3, 1, 9});
  CHECK(valence_if_edge_magic(e5) == 17);
}

TEST_CASE("complement exchanges the odd and even labelings") {
  CHECK(odd_even_complement_duality(sem_c3()));
  CHECK(odd_even_complement_duality(sem_c5()));
  for (const TotalLabeling& f : all_super_edge_magic_labelings(directed_cycle(7)))
    CHECK(odd_even_complement_duality(f));
}

TEST_CASE("transform preconditions") {
  // Valid label multiset, but no constant sum.
  const TotalLabeling not_magic{directed_cycle(3), {1, 2, 3}, {4, 5, 6}};
  CHECK_THROWS_AS(em_complement(not_magic), PreconditionError);
  CHECK_THROWS_AS(sem_complement(not_magic), PreconditionError);

  // Edge-magic but not super: vertex complement is undefined.
  const TotalLabeling em{directed_cycle(3), {6, 5, 4}, {1, 3, 2}};
  CHECK_THROWS_AS(sem_complement(em), PreconditionError);

  // Super edge-magic with p != q: parity doubling has no room for the arcs.
  const TotalLabeling path{directed_path(3), {1, 3, 2}, {5, 4}};
  REQUIRE(is_super_edge_magic(path));
  CHECK_THROWS_AS(odd_labeling(path), PreconditionError);
  CHECK_THROWS_AS(even_labeling(path), PreconditionError);
}

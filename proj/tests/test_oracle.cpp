#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <vector>

#include "magiclab/oracle.hpp"

using namespace magiclab;

namespace {

// Brute force over every arrangement of [1, p+q] on the slots
// (vertices, then arcs), with no pruning at all: the reference the search
// implementations are measured against. Also reports which constant sums are
// reachable with all vertex labels inside [1, p], and how many arrangements
// achieve that.
struct NaiveScan {
  std::set<int> em_valences;
  std::set<int> sem_valences;
  long long sem_count = 0;
};

NaiveScan naive_scan(const Digraph& d) {
  const int p = d.order(), q = d.size();
  std::vector<int> label(p + q);
  std::iota(label.begin(), label.end(), 1);
  NaiveScan out;
  do {
    int valence = 0;
    bool magic = true;
    for (int e = 0; e < q; ++e) {
      const Arc a = d.arc(e);
      const int sum = label[a.from - 1] + label[a.to - 1] + label[p + e];
      if (e == 0)
        valence = sum;
      else if (sum != valence)
        magic = false;
      if (!magic) break;
    }
    if (!magic) continue;
    out.em_valences.insert(valence);
    if (std::all_of(label.begin(), label.begin() + p,
                    [p](int x) { return x <= p; })) {
      out.sem_valences.insert(valence);
      ++out.sem_count;
    }
  } while (std::next_permutation(label.begin(), label.end()));
  return out;
}

std::set<int> as_set(const std::vector<int>& v) { return {v.begin(), v.end()}; }

void check_report(const ValenceReport& r, const std::set<int>& want,
                  bool want_super) {
  CHECK(as_set(r.valences) == want);
  CHECK(std::is_sorted(r.valences.begin(), r.valences.end()));
  REQUIRE(r.certificates.size() == r.valences.size());
  for (size_t i = 0; i < r.valences.size(); ++i) {
    r.certificates[i].validate();
    CHECK(valence_if_edge_magic(r.certificates[i]) == r.valences[i]);
    if (want_super) CHECK(is_super_edge_magic(r.certificates[i]));
  }
}

}  // namespace

TEST_CASE("search agrees with the unpruned scan on small graphs") {
  const Digraph k2(2, {{1, 2}});
  const Digraph loop(1, {{1, 1}});
  const Digraph path3 = directed_path(3);
  const Digraph c3 = directed_cycle(3);
  const Digraph c4 = directed_cycle(4);
  const Digraph c5 = directed_cycle(5);
  // A vertex with a loop hanging off an arc: mixes degrees and a loop.
  const Digraph lollipop(2, {{1, 1}, {1, 2}});

  for (const Digraph* d : {&k2, &loop, &path3, &c3, &c4, &c5, &lollipop}) {
    const NaiveScan want = naive_scan(*d);
    check_report(exhaustive_edge_magic(*d), want.em_valences, false);
    check_report(exhaustive_super_edge_magic(*d), want.sem_valences, true);
    CHECK(static_cast<long long>(all_super_edge_magic_labelings(*d).size()) ==
          want.sem_count);
  }
}

TEST_CASE("pinned valence sets for small cycles") {
  CHECK(as_set(exhaustive_edge_magic(directed_cycle(3)).valences) ==
        std::set<int>{9, 10, 11, 12});
  CHECK(as_set(exhaustive_edge_magic(directed_cycle(4)).valences) ==
        std::set<int>{12, 13, 14, 15});
  CHECK(as_set(exhaustive_edge_magic(directed_cycle(5)).valences) ==
        std::set<int>{14, 16, 17, 19});
  CHECK(as_set(exhaustive_edge_magic(Digraph(2, {{1, 2}})).valences) ==
        std::set<int>{6});
  CHECK(as_set(exhaustive_edge_magic(directed_path(3)).valences) ==
        std::set<int>{8, 9, 10});
  CHECK(as_set(exhaustive_edge_magic(Digraph(1, {{1, 1}})).valences) ==
        std::set<int>{4, 5});

  CHECK(as_set(exhaustive_super_edge_magic(directed_cycle(3)).valences) ==
        std::set<int>{9});
  CHECK(exhaustive_super_edge_magic(directed_cycle(4)).valences.empty());
  // The 5-cycle admits super edge-magic labelings only at the low end of its
  // valence range.
  CHECK(as_set(exhaustive_super_edge_magic(directed_cycle(5)).valences) ==
        std::set<int>{14});
  CHECK(exhaustive_super_edge_magic(directed_cycle(6)).valences.empty());

  CHECK(all_super_edge_magic_labelings(directed_cycle(3)).size() == 6);
  CHECK(all_super_edge_magic_labelings(directed_cycle(5)).size() == 10);
  CHECK(all_super_edge_magic_labelings(directed_cycle(7)).size() == 126);
}

TEST_CASE("orientation does not change valence sets") {
  const auto fwd = exhaustive_edge_magic(directed_cycle(4)).valences;
  const auto bwd = exhaustive_edge_magic(reversed_cycle(4)).valences;
  CHECK(fwd == bwd);
  // A digon forces two distinct labels onto the same endpoint pair.
  CHECK(exhaustive_edge_magic(Digraph(2, {{1, 2}, {2, 1}})).valences.empty());
}

TEST_CASE("the p+q guard refuses oversized searches") {
  CHECK_THROWS_AS(exhaustive_edge_magic(directed_cycle(10)),
                  PreconditionError);
  // A custom guard moves the cap in both directions.
  CHECK_THROWS_AS(exhaustive_edge_magic(directed_cycle(3), 4),
                  PreconditionError);
  CHECK_NOTHROW(exhaustive_edge_magic(directed_cycle(3), 6));
  CHECK_THROWS_AS(exhaustive_super_edge_magic(directed_cycle(12)),
                  PreconditionError);
  CHECK_THROWS_AS(count_sem_one_regular(12), PreconditionError);
  CHECK_THROWS_AS(count_sem_one_regular(0), PreconditionError);
}

TEST_CASE("guard override comes from the environment") {
  // Default cap is 18 when the variable is unset.
  const char* saved = std::getenv("MAGICLAB_ORACLE_GUARD");
  if (saved == nullptr) CHECK(oracle_guard() == kDefaultOracleGuard);
}

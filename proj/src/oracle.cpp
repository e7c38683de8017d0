#include "magiclab/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <future>
#include <map>
#include <numeric>
#include <string>

namespace magiclab {

int oracle_guard() {
  if (const char* env = std::getenv("MAGICLAB_ORACLE_GUARD")) {
    char* end = nullptr;
    const long parsed = std::strtol(env, &end, 10);
    if (end && *end == '\0' && parsed > 0) return static_cast<int>(parsed);
  }
  return kDefaultOracleGuard;
}

namespace {

void check_guard(const Digraph& d, std::optional<int> guard, const char* op) {
  const int cap = guard.value_or(oracle_guard());
  const int size = d.order() + d.size();
  if (size > cap)
    throw PreconditionError(std::string(op) + ": p+q = " + std::to_string(size) +
                            " exceeds the exhaustive-search cap " +
                            std::to_string(cap));
}

struct IncidentArc {
  int arc = 0;    // arc index
  int other = 0;  // opposite endpoint; equals the vertex itself for loops
};

// Backtracking search for one edge-magic labeling at a fixed valence.
// Vertices are labeled in descending-degree order (ties by id) and every arc
// label is forced as soon as both endpoints are labeled, against a shared
// label-occupancy table.
class EmSearch {
 public:
  EmSearch(const Digraph& d, int valence)
      : d_(d), valence_(valence), total_(d.order() + d.size()),
        label_of_(d.order() + 1, 0), occupied_(total_ + 1, false),
        arc_label_(d.size(), 0), incident_(d.order() + 1) {
    std::vector<int> degree(d.order() + 1, 0);
    for (int i = 0; i < d.size(); ++i) {
      const Arc& a = d.arc(i);
      degree[a.from] += 1;
      degree[a.to] += 1;
      incident_[a.from].push_back({i, a.to});
      if (a.from != a.to) incident_[a.to].push_back({i, a.from});
    }
    order_.resize(d.order());
    std::iota(order_.begin(), order_.end(), 1);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](int u, int v) { return degree[u] > degree[v]; });
  }

  std::optional<TotalLabeling> first() {
    if (assign(0)) {
      TotalLabeling f{d_, std::vector<int>(label_of_.begin() + 1, label_of_.end()),
                      arc_label_};
      return f;
    }
    return std::nullopt;
  }

 private:
  bool assign(size_t depth) {
    if (depth == order_.size()) return true;
    const int v = order_[depth];
    for (int label = 1; label <= total_; ++label) {
      if (occupied_[label]) continue;
      occupied_[label] = true;
      label_of_[v] = label;
      std::vector<int> forced;
      if (force_arcs(v, &forced)) {
        if (assign(depth + 1)) return true;
      }
      for (int arc : forced) {
        occupied_[arc_label_[arc]] = false;
        arc_label_[arc] = 0;
      }
      occupied_[label] = false;
      label_of_[v] = 0;
    }
    return false;
  }

  // Forces labels of arcs whose endpoints are now both labeled. On failure
  // the already-forced subset is left in *forced for the caller to unwind.
  bool force_arcs(int v, std::vector<int>* forced) {
    for (const IncidentArc& ia : incident_[v]) {
      if (arc_label_[ia.arc] != 0 || label_of_[ia.other] == 0) continue;
      const int label = valence_ - label_of_[v] - label_of_[ia.other];
      if (label < 1 || label > total_ || occupied_[label]) return false;
      occupied_[label] = true;
      arc_label_[ia.arc] = label;
      forced->push_back(ia.arc);
    }
    return true;
  }

  const Digraph& d_;
  int valence_;
  int total_;
  std::vector<int> order_;
  std::vector<int> label_of_;
  std::vector<bool> occupied_;
  std::vector<int> arc_label_;
  std::vector<std::vector<IncidentArc>> incident_;
};

// Sound valence bounds from the smallest/largest labels an arc can carry.
// An ordinary arc uses three distinct labels; a loop uses two (vertex label
// counted twice), which widens the window.
std::pair<int, int> valence_bounds(const Digraph& d) {
  const int total = d.order() + d.size();
  bool has_loop = false, has_plain = false;
  for (const Arc& a : d.arcs()) (a.from == a.to ? has_loop : has_plain) = true;
  int lo = 3 * total, hi = 0;
  if (has_plain) {
    lo = std::min(lo, 1 + 2 + 3);
    hi = std::max(hi, 3 * total - 3);
  }
  if (has_loop) {
    lo = std::min(lo, 2 * 1 + 2);
    hi = std::max(hi, 3 * total - 1);
  }
  return {lo, hi};
}

// Lexicographic enumeration of vertex bijections onto [1, p] with
// consecutive-sum pruning; emits the forced extension for each survivor.
class SemSearch {
 public:
  SemSearch(const Digraph& d, bool stop_per_valence)
      : d_(d), p_(d.order()), q_(d.size()), stop_per_valence_(stop_per_valence),
        label_of_(p_ + 1, 0), label_used_(p_ + 1, false),
        sum_used_(2 * p_ + 1, false), incident_(p_ + 1) {
    for (const Arc& a : d.arcs()) {
      incident_[a.from].push_back({0, a.to});
      if (a.from != a.to) incident_[a.to].push_back({0, a.from});
    }
  }

  std::map<int, std::vector<TotalLabeling>> run() {
    if (q_ > 0) assign(1, 2 * p_ + 1, 0);
    return std::move(found_);
  }

 private:
  void assign(int v, int min_sum, int max_sum) {
    if (v > p_) {
      emit(min_sum, max_sum);
      return;
    }
    for (int label = 1; label <= p_; ++label) {
      if (label_used_[label]) continue;
      std::vector<int> added;
      if (try_sums(v, label, &added, min_sum, max_sum)) {
        label_used_[label] = true;
        label_of_[v] = label;
        int new_min = min_sum, new_max = max_sum;
        for (int s : added) {
          new_min = std::min(new_min, s);
          new_max = std::max(new_max, s);
        }
        assign(v + 1, new_min, new_max);
        label_used_[label] = false;
        label_of_[v] = 0;
      }
      for (int s : added) sum_used_[s] = false;
    }
  }

  bool try_sums(int v, int label, std::vector<int>* added, int min_sum,
                int max_sum) {
    for (const IncidentArc& ia : incident_[v]) {
      if (ia.other != v && label_of_[ia.other] == 0) continue;
      const int sum = ia.other == v ? 2 * label : label + label_of_[ia.other];
      if (sum_used_[sum]) return false;  // repeated endpoint sum
      const int lo = std::min(min_sum, sum), hi = std::max(max_sum, sum);
      if (hi - lo > q_ - 1) return false;  // span can never become consecutive
      sum_used_[sum] = true;
      added->push_back(sum);
    }
    return true;
  }

  // The incremental span checks are partial when one vertex closes several
  // arcs at once, so the full condition (q distinct sums spanning exactly
  // q-1) is settled here.
  void emit(int min_sum, int max_sum) {
    if (max_sum - min_sum != q_ - 1) return;
    const int valence = p_ + q_ + min_sum;
    auto& bucket = found_[valence];
    if (stop_per_valence_ && !bucket.empty()) return;
    VertexLabeling g{d_, std::vector<int>(label_of_.begin() + 1, label_of_.end())};
    bucket.push_back(extend_to_super_edge_magic(g));
  }

  const Digraph& d_;
  int p_, q_;
  bool stop_per_valence_;
  std::vector<int> label_of_;
  std::vector<bool> label_used_;
  std::vector<bool> sum_used_;
  std::vector<std::vector<IncidentArc>> incident_;
  std::map<int, std::vector<TotalLabeling>> found_;
};

}  // namespace

ValenceReport exhaustive_edge_magic(const Digraph& d, std::optional<int> guard) {
  check_guard(d, guard, "exhaustive_edge_magic");
  ValenceReport report{d, MagicMode::kEdgeMagic, {}, {}};
  if (d.size() == 0) return report;
  const auto [lo, hi] = valence_bounds(d);

  std::vector<std::future<std::optional<TotalLabeling>>> tasks;
  for (int v = lo; v <= hi; ++v)
    tasks.push_back(std::async(std::launch::async, [&d, v] {
      return EmSearch(d, v).first();
    }));
  for (int v = lo; v <= hi; ++v) {
    if (auto cert = tasks[v - lo].get()) {
      report.valences.push_back(v);
      report.certificates.push_back(std::move(*cert));
    }
  }
  return report;
}

ValenceReport exhaustive_super_edge_magic(const Digraph& d,
                                          std::optional<int> guard) {
  check_guard(d, guard, "exhaustive_super_edge_magic");
  ValenceReport report{d, MagicMode::kSuperEdgeMagic, {}, {}};
  for (auto& [valence, certs] : SemSearch(d, true).run()) {
    report.valences.push_back(valence);
    report.certificates.push_back(std::move(certs.front()));
  }
  return report;
}

std::vector<TotalLabeling> all_super_edge_magic_labelings(
    const Digraph& d, std::optional<int> guard) {
  check_guard(d, guard, "all_super_edge_magic_labelings");
  std::vector<TotalLabeling> out;
  for (auto& [valence, certs] : SemSearch(d, false).run())
    for (TotalLabeling& f : certs) out.push_back(std::move(f));
  return out;
}

long long count_sem_one_regular(int p) {
  if (p < 1 || p > 11)
    throw PreconditionError("count_sem_one_regular: p must be in [1, 11]");
  std::vector<int> perm(p);
  std::iota(perm.begin(), perm.end(), 1);
  long long count = 0;
  std::vector<int> sums(p);
  do {
    for (int i = 0; i < p; ++i) sums[i] = i + 1 + perm[i];
    std::sort(sums.begin(), sums.end());
    bool consecutive = true;
    for (int i = 1; i < p && consecutive; ++i)
      consecutive = sums[i] == sums[0] + i;
    if (consecutive) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

}  // namespace magiclab

#include "resolvekit/solvers.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <string>
#include <thread>
#include <vector>

#include "resolvekit/errors.hpp"

namespace resolvekit {

namespace {

constexpr int kInfinity = std::numeric_limits<int>::max() / 2;

unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

template <typename Result>
struct TaskOutcome {
  std::optional<Result> found;
  std::uint64_t examined = 0;
};

// Runs tasks 0..count-1, which partition the search space in canonical
// order, and returns the result of the lowest-indexed successful task. Tasks
// after the current best are abandoned; tasks before it always finish, so
// the combined count is what a sequential scan would have examined.
template <typename Result, typename RunTask>
TaskOutcome<Result> run_canonical(std::size_t count, unsigned threads, RunTask run_task) {
  std::vector<TaskOutcome<Result>> outcomes(count);
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{count};

  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count || i > best.load()) return;
      auto stop = [&best, i] { return best.load(std::memory_order_relaxed) < i; };
      outcomes[i] = run_task(i, stop);
      if (outcomes[i].found) {
        std::size_t current = best.load();
        while (i < current && !best.compare_exchange_weak(current, i)) {
        }
      }
    }
  };

  const unsigned workers = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(count, 1)));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  TaskOutcome<Result> combined;
  for (auto& outcome : outcomes) {
    combined.examined += outcome.examined;
    if (outcome.found) {
      combined.found = std::move(outcome.found);
      break;
    }
  }
  return combined;
}

// Lexicographic k-subset search. Chosen landmarks refine the vertex set
// into classes of equal partial representation; a subset resolves once every
// class is a singleton.
class SetSearch {
 public:
  SetSearch(const DistanceMatrix& dm, int k)
      : dm_(dm), n_(dm.order()), k_(k), base_(dm.diameter() + 1),
        remap_(static_cast<std::size_t>(n_) * base_, -1) {}

  template <typename Stop>
  TaskOutcome<VertexSequence> run(Vertex first, Stop stop) {
    chosen_.clear();
    examined_ = 0;
    std::vector<int> classes(static_cast<std::size_t>(n_), 0);
    std::vector<int> refined(static_cast<std::size_t>(n_));
    const int count = refine(classes, first, refined);
    chosen_.push_back(first);
    TaskOutcome<VertexSequence> outcome;
    if (descend(1, first + 1, refined, count, stop)) outcome.found = VertexSequence(chosen_);
    outcome.examined = examined_;
    return outcome;
  }

 private:
  int refine(const std::vector<int>& classes, Vertex landmark, std::vector<int>& out) {
    touched_.clear();
    int count = 0;
    for (Vertex u = 0; u < n_; ++u) {
      const std::size_t key = static_cast<std::size_t>(classes[u]) * base_ + dm_(u, landmark);
      if (remap_[key] < 0) {
        remap_[key] = count++;
        touched_.push_back(key);
      }
      out[u] = remap_[key];
    }
    for (std::size_t key : touched_) remap_[key] = -1;
    return count;
  }

  // Each landmark splits a class into at most base_ parts.
  bool can_reach_singletons(int count, int remaining) const {
    long long reachable = count;
    for (int r = 0; r < remaining && reachable < n_; ++r) reachable *= base_;
    return reachable >= n_;
  }

  template <typename Stop>
  bool descend(int depth, Vertex start, const std::vector<int>& classes, int count, Stop& stop) {
    if (count == n_) {
      // Any completion resolves; take the lexicographically first one.
      for (int r = depth; r < k_; ++r) chosen_.push_back(start + (r - depth));
      ++examined_;
      return true;
    }
    if (depth == k_) {
      ++examined_;
      return false;
    }
    if (!can_reach_singletons(count, k_ - depth)) return false;
    std::vector<int> refined(static_cast<std::size_t>(n_));
    for (Vertex x = start; x <= n_ - (k_ - depth); ++x) {
      if (stop()) return false;
      const int next_count = refine(classes, x, refined);
      chosen_.push_back(x);
      if (descend(depth + 1, x + 1, refined, next_count, stop)) return true;
      chosen_.pop_back();
    }
    return false;
  }

  const DistanceMatrix& dm_;
  int n_;
  int k_;
  int base_;
  std::vector<int> remap_;
  std::vector<std::size_t> touched_;
  std::vector<Vertex> chosen_;
  std::uint64_t examined_ = 0;
};

// Restricted-growth-string search over partitions of 0..n-1 into exactly t
// classes, vertices assigned in id order.
//
// partial_[layer] holds, for every vertex u and class j, the minimum of
// d(u, x) over the vertices x < layer already placed in j. Once that value
// is no larger than u's distance to every unplaced vertex it is final, so
// two placed vertices whose vectors are entirely final and equal can never
// be separated.
class PartitionSearch {
 public:
  PartitionSearch(const DistanceMatrix& dm, int t)
      : dm_(dm), n_(dm.order()), t_(t), labels_(static_cast<std::size_t>(n_), -1),
        earlier_twins_(static_cast<std::size_t>(n_)),
        nearest_unplaced_(static_cast<std::size_t>(n_) * n_, kInfinity),
        partial_(static_cast<std::size_t>(n_ + 1) * n_ * t_, kInfinity) {
    for (const auto& cls : twin_classes(dm)) {
      for (std::size_t i = 1; i < cls.size(); ++i) {
        earlier_twins_[cls[i]].assign(cls.begin(), cls.begin() + static_cast<std::ptrdiff_t>(i));
      }
    }
    // nearest_unplaced_[i * n + u] = min over w > i of d(u, w).
    for (int i = n_ - 2; i >= 0; --i) {
      for (Vertex u = 0; u < n_; ++u) {
        nearest_unplaced_[i * n_ + u] =
            std::min(nearest_unplaced_[(i + 1) * n_ + u], dm_(u, i + 1));
      }
    }
  }

  template <typename Stop>
  TaskOutcome<OrderedPartition> run(const std::vector<int>& prefix, Stop stop) {
    prefix_ = &prefix;
    examined_ = 0;
    TaskOutcome<OrderedPartition> outcome;
    if (assign(0, -1, stop)) outcome.found = OrderedPartition::from_labels(labels_);
    outcome.examined = examined_;
    return outcome;
  }

 private:
  int* layer(int placed) { return partial_.data() + static_cast<std::size_t>(placed) * n_ * t_; }

  // True if two of the vertices 0..last (all of them when last == n-1) have
  // equal, fully determined representations.
  bool determined_collision(int last) {
    const int* partial = layer(last + 1);
    keyed_.clear();
    for (Vertex u = 0; u <= last; ++u) {
      const int horizon = nearest_unplaced_[last * n_ + u];
      const int* row = partial + static_cast<std::size_t>(u) * t_;
      std::uint64_t hash = 1469598103934665603ull;
      bool determined = true;
      for (int j = 0; j < t_ && determined; ++j) {
        determined = row[j] <= horizon;
        hash = (hash ^ static_cast<std::uint64_t>(row[j])) * 1099511628211ull;
      }
      if (determined) keyed_.emplace_back(hash, u);
    }
    std::sort(keyed_.begin(), keyed_.end());
    for (std::size_t i = 0; i + 1 < keyed_.size(); ++i) {
      for (std::size_t j = i + 1; j < keyed_.size() && keyed_[j].first == keyed_[i].first; ++j) {
        const int* a = partial + static_cast<std::size_t>(keyed_[i].second) * t_;
        const int* b = partial + static_cast<std::size_t>(keyed_[j].second) * t_;
        if (std::equal(a, a + t_, b)) return true;
      }
    }
    return false;
  }

  template <typename Stop>
  bool assign(int i, int max_label, Stop& stop) {
    if (i == n_) {
      ++examined_;
      return !determined_collision(n_ - 1);
    }
    int lo = 0;
    int hi = std::min(max_label + 1, t_ - 1);
    if (i < static_cast<int>(prefix_->size())) {
      lo = (*prefix_)[i];
      if (lo > hi) return false;
      hi = lo;
    }
    for (int c = lo; c <= hi; ++c) {
      if (stop()) return false;
      const int next_max = std::max(max_label, c);
      if (next_max + 1 + (n_ - i - 1) < t_) continue;
      const auto& twins = earlier_twins_[i];
      if (std::any_of(twins.begin(), twins.end(), [&](Vertex w) { return labels_[w] == c; })) {
        continue;
      }
      labels_[i] = c;
      const int* from = layer(i);
      int* to = layer(i + 1);
      std::copy(from, from + static_cast<std::ptrdiff_t>(n_) * t_, to);
      for (Vertex u = 0; u < n_; ++u) {
        int& slot = to[static_cast<std::size_t>(u) * t_ + c];
        slot = std::min(slot, dm_(u, i));
      }
      if (next_max + 1 == t_ && i + 1 < n_ && determined_collision(i)) continue;
      if (assign(i + 1, next_max, stop)) return true;
    }
    labels_[i] = -1;
    return false;
  }

  const DistanceMatrix& dm_;
  int n_;
  int t_;
  std::vector<int> labels_;
  std::vector<std::vector<Vertex>> earlier_twins_;
  std::vector<int> nearest_unplaced_;
  std::vector<int> partial_;
  std::vector<std::pair<std::uint64_t, Vertex>> keyed_;
  const std::vector<int>* prefix_ = nullptr;
  std::uint64_t examined_ = 0;
};

void rgs_prefixes(int length, int t, std::vector<int>& current, int max_label,
                  std::vector<std::vector<int>>& out) {
  if (static_cast<int>(current.size()) == length) {
    out.push_back(current);
    return;
  }
  for (int c = 0; c <= std::min(max_label + 1, t - 1); ++c) {
    current.push_back(c);
    rgs_prefixes(length, t, current, std::max(max_label, c), out);
    current.pop_back();
  }
}

// Enough tasks to keep the workers busy; one task when running alone.
std::vector<std::vector<int>> split_partition_space(int n, int t, unsigned threads) {
  std::vector<std::vector<int>> prefixes;
  std::vector<int> scratch;
  if (threads <= 1) {
    prefixes.emplace_back();
    return prefixes;
  }
  for (int length = 1; length <= n; ++length) {
    prefixes.clear();
    rgs_prefixes(length, t, scratch, -1, prefixes);
    if (prefixes.size() >= 16u * threads) break;
  }
  return prefixes;
}

int order_cap(const SearchOptions& options, int fallback) {
  return options.max_order > 0 ? options.max_order : fallback;
}

void check_cap(const Graph& g, int cap, const char* what) {
  if (g.order() > cap) {
    throw SizeLimitExceeded(std::string(what) + " search refuses graphs with more than " +
                            std::to_string(cap) + " vertices (got " + std::to_string(g.order()) +
                            ")");
  }
}

}  // namespace

int dim_lower_bound(const DistanceMatrix& dm) {
  if (dm.order() <= 1) return 0;
  int bound = 0;
  for (const auto& cls : twin_classes(dm)) bound += static_cast<int>(cls.size()) - 1;
  return std::max(bound, 1);
}

int pd_lower_bound(const DistanceMatrix& dm) {
  if (dm.order() <= 1) return 1;
  std::size_t largest = 0;
  for (const auto& cls : twin_classes(dm)) largest = std::max(largest, cls.size());
  return std::max(static_cast<int>(largest), 2);
}

std::optional<VertexSequence> find_resolving_set(const DistanceMatrix& dm, int k, unsigned threads,
                                                 std::uint64_t* examined) {
  const int n = dm.order();
  if (k < 0 || k > n) {
    if (examined) *examined = 0;
    return std::nullopt;
  }
  if (k == 0) {
    if (examined) *examined = 1;
    return n == 1 ? std::optional<VertexSequence>(VertexSequence{}) : std::nullopt;
  }
  const auto tasks = static_cast<std::size_t>(n - k + 1);
  const unsigned workers = resolve_threads(threads);
  auto outcome = run_canonical<VertexSequence>(tasks, workers, [&](std::size_t i, auto stop) {
    SetSearch search(dm, k);
    return search.run(static_cast<Vertex>(i), stop);
  });
  if (examined) *examined = outcome.examined;
  return std::move(outcome.found);
}

std::optional<OrderedPartition> find_resolving_partition(const DistanceMatrix& dm, int t,
                                                         unsigned threads,
                                                         std::uint64_t* examined) {
  const int n = dm.order();
  if (t < 1 || t > n) {
    if (examined) *examined = 0;
    return std::nullopt;
  }
  const unsigned workers = resolve_threads(threads);
  const auto prefixes = split_partition_space(n, t, workers);
  auto outcome =
      run_canonical<OrderedPartition>(prefixes.size(), workers, [&](std::size_t i, auto stop) {
        PartitionSearch search(dm, t);
        return search.run(prefixes[i], stop);
      });
  if (examined) *examined = outcome.examined;
  return std::move(outcome.found);
}

DimResult metric_dimension(const Graph& g, const SearchOptions& options) {
  check_cap(g, order_cap(options, kDefaultMaxOrderForDim), "metric dimension");
  const DistanceMatrix dm = all_pairs_distances(g);
  DimResult result;
  result.lower_bound = dim_lower_bound(dm);
  const int top = std::min(options.limit.value_or(g.order()), g.order());
  for (int k = result.lower_bound; k <= top; ++k) {
    std::uint64_t examined = 0;
    auto witness = find_resolving_set(dm, k, options.threads, &examined);
    result.examined += examined;
    if (witness) {
      result.status = SearchStatus::kFound;
      result.value = k;
      result.witness = std::move(*witness);
      return result;
    }
  }
  return result;
}

PdResult partition_dimension(const Graph& g, const SearchOptions& options) {
  check_cap(g, order_cap(options, kDefaultMaxOrderForPd), "partition dimension");
  const DistanceMatrix dm = all_pairs_distances(g);
  PdResult result;
  result.lower_bound = pd_lower_bound(dm);
  const int top = std::min(options.limit.value_or(g.order()), g.order());
  for (int t = result.lower_bound; t <= top; ++t) {
    std::uint64_t examined = 0;
    auto witness = find_resolving_partition(dm, t, options.threads, &examined);
    result.examined += examined;
    if (witness) {
      result.status = SearchStatus::kFound;
      result.value = t;
      result.witness = std::move(*witness);
      return result;
    }
  }
  return result;
}

bool verify_minimality(const Graph& g, const DimResult& claimed, unsigned threads) {
  if (!claimed.found() || static_cast<int>(claimed.witness.size()) != claimed.value) return false;
  const DistanceMatrix dm = all_pairs_distances(g);
  for (Vertex v : claimed.witness) {
    if (v >= g.order()) return false;
  }
  if (!is_resolving_set(dm, claimed.witness).resolving()) return false;
  return claimed.value == 0 || !find_resolving_set(dm, claimed.value - 1, threads).has_value();
}

bool verify_minimality(const Graph& g, const PdResult& claimed, unsigned threads) {
  if (!claimed.found() || claimed.witness.class_count() != claimed.value ||
      claimed.witness.order() != g.order()) {
    return false;
  }
  const DistanceMatrix dm = all_pairs_distances(g);
  if (!is_resolving_partition(dm, claimed.witness).resolving()) return false;
  return claimed.value <= 1 || !find_resolving_partition(dm, claimed.value - 1, threads).has_value();
}

}  // namespace resolvekit

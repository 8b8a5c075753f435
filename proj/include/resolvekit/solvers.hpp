#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>

#include "resolvekit/graph.hpp"
#include "resolvekit/resolvability.hpp"

namespace resolvekit {

inline constexpr int kDefaultMaxOrderForDim = 20;
inline constexpr int kDefaultMaxOrderForPd = 16;

// The graph is larger than the solver is allowed to search.
class SizeLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SearchOptions {
  // Largest k (or t) to try. Unset means "up to n".
  std::optional<int> limit;
  // 0 means std::thread::hardware_concurrency().
  unsigned threads = 1;
  // 0 means the per-solver default cap.
  int max_order = 0;
};

enum class SearchStatus { kFound, kLimitExceeded };

struct DimResult {
  SearchStatus status = SearchStatus::kLimitExceeded;
  int value = -1;          // valid when found
  VertexSequence witness;  // lexicographically first minimum resolving set
  std::uint64_t examined = 0;
  int lower_bound = 0;

  bool found() const noexcept { return status == SearchStatus::kFound; }
};

struct PdResult {
  SearchStatus status = SearchStatus::kLimitExceeded;
  int value = -1;
  // First resolving partition in restricted-growth order with `value` classes.
  OrderedPartition witness;
  std::uint64_t examined = 0;
  int lower_bound = 0;

  bool found() const noexcept { return status == SearchStatus::kFound; }
};

// Exact dim(G). Tries k = lower_bound, lower_bound + 1, ... and returns the
// first resolving k-subset in lexicographic order. Throws ContractViolation
// on a disconnected graph and SizeLimitExceeded above the order cap.
DimResult metric_dimension(const Graph& g, const SearchOptions& options = {});

// Exact pd(G) over partitions into exactly t classes, t = lower_bound, ...
PdResult partition_dimension(const Graph& g, const SearchOptions& options = {});

// Twin lower bounds: dim >= sum over twin classes of (size - 1), and
// pd >= largest twin class. Both are at least the trivial bound (1 and 2)
// for n >= 2; K_1 gives 0 and 1.
int dim_lower_bound(const DistanceMatrix& dm);
int pd_lower_bound(const DistanceMatrix& dm);

// Single-layer searches. `examined` counts complete candidates checked and
// is independent of the thread count.
std::optional<VertexSequence> find_resolving_set(const DistanceMatrix& dm, int k, unsigned threads,
                                                 std::uint64_t* examined = nullptr);
std::optional<OrderedPartition> find_resolving_partition(const DistanceMatrix& dm, int t,
                                                         unsigned threads,
                                                         std::uint64_t* examined = nullptr);

// The witness resolves and nothing one size smaller does. One layer is
// enough: supersets of resolving sets and refinements of resolving
// partitions resolve.
bool verify_minimality(const Graph& g, const DimResult& claimed, unsigned threads = 1);
bool verify_minimality(const Graph& g, const PdResult& claimed, unsigned threads = 1);

}  // namespace resolvekit

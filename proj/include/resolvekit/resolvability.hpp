#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "resolvekit/graph.hpp"

namespace resolvekit {

// Ordered list of distinct vertices (S = v_1, ..., v_k).
class VertexSequence {
 public:
  VertexSequence() = default;
  // Throws ContractViolation on duplicates or negative ids.
  explicit VertexSequence(std::vector<Vertex> vertices);

  std::span<const Vertex> vertices() const noexcept { return vertices_; }
  std::size_t size() const noexcept { return vertices_.size(); }
  bool empty() const noexcept { return vertices_.empty(); }
  Vertex operator[](std::size_t i) const { return vertices_[i]; }
  auto begin() const noexcept { return vertices_.begin(); }
  auto end() const noexcept { return vertices_.end(); }

  // Throws ContractViolation if an id is >= n.
  void check_fits(int n) const;

  friend bool operator==(const VertexSequence&, const VertexSequence&) = default;

 private:
  std::vector<Vertex> vertices_;
};

// Ordered partition of 0..n-1 into nonempty, pairwise disjoint classes.
// Class order is significant; members of each class are kept ascending.
class OrderedPartition {
 public:
  OrderedPartition() = default;
  // Throws ContractViolation unless the classes partition 0..n-1.
  OrderedPartition(std::vector<std::vector<Vertex>> classes, int n);

  // labels[v] is the class index of v; indices must be exactly 0..t-1.
  static OrderedPartition from_labels(std::span<const int> labels);
  // {0}, {1}, ..., {n-1}
  static OrderedPartition singletons(int n);

  int order() const noexcept { return static_cast<int>(labels_.size()); }
  int class_count() const noexcept { return static_cast<int>(classes_.size()); }
  const std::vector<std::vector<Vertex>>& classes() const noexcept { return classes_; }
  std::span<const Vertex> members(int index) const { return classes_.at(index); }
  int class_of(Vertex v) const { return labels_.at(v); }
  std::span<const int> labels() const noexcept { return labels_; }

  friend bool operator==(const OrderedPartition& a, const OrderedPartition& b) {
    return a.classes_ == b.classes_;
  }

 private:
  std::vector<std::vector<Vertex>> classes_;
  std::vector<int> labels_;
};

struct Representation {
  std::vector<int> coords;

  friend auto operator<=>(const Representation&, const Representation&) = default;
};

// r(v|S): coordinate i is d(v, v_i). Throws ContractViolation on empty S.
Representation metric_representation(const DistanceMatrix& dm, Vertex v, const VertexSequence& s);

// r(v|Pi): coordinate i is d(v, P_i); the coordinate of v's own class is 0.
Representation partition_representation(const DistanceMatrix& dm, Vertex v,
                                        const OrderedPartition& pi);

enum class Verdict { kResolving, kNotResolving };
enum class ObjectKind { kSet, kPartition };

struct Certificate {
  Verdict verdict = Verdict::kNotResolving;
  // Present iff not resolving; u < v and r(u) == r(v).
  std::optional<std::pair<Vertex, Vertex>> witness;
  ObjectKind kind = ObjectKind::kSet;
  // One row for a set, one row per class for a partition.
  std::vector<std::vector<Vertex>> object;
  std::string graph_sha;

  bool resolving() const noexcept { return verdict == Verdict::kResolving; }
};

// Both verifiers report the lexicographically first colliding pair (u, v),
// u < v, as the witness. An empty S resolves only K_1.
Certificate is_resolving_set(const DistanceMatrix& dm, const VertexSequence& s);
Certificate is_resolving_partition(const DistanceMatrix& dm, const OrderedPartition& pi);

// Re-derives the witness collision from scratch; true iff the certificate's
// verdict is consistent with the object it names.
bool recheck_witness(const DistanceMatrix& dm, const Certificate& cert);

// Two vertices are twins when d(u, x) == d(v, x) for every other x. The
// relation is an equivalence; returns its classes of size >= 1, ordered by
// smallest member.
std::vector<std::vector<Vertex>> twin_classes(const DistanceMatrix& dm);

// Partition file: one class per line, ids whitespace-separated.
OrderedPartition read_partition(std::istream& in, int n);
OrderedPartition read_partition_file(const std::string& path, int n);
void write_partition(std::ostream& out, const OrderedPartition& pi);

// Set file: one line of ids, order significant.
VertexSequence read_vertex_sequence(std::istream& in, int n);
VertexSequence read_vertex_sequence_file(const std::string& path, int n);
void write_vertex_sequence(std::ostream& out, const VertexSequence& s);

}  // namespace resolvekit

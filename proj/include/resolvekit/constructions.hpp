#pragma once

#include <optional>
#include <string>
#include <vector>

#include "resolvekit/errors.hpp"
#include "resolvekit/families.hpp"
#include "resolvekit/graph.hpp"
#include "resolvekit/resolvability.hpp"
#include "resolvekit/solvers.hpp"

namespace resolvekit {

// A factor input that does not resolve its graph. certificate() carries
// the collision witness.
class FactorNotResolving : public ContractViolation {
 public:
  FactorNotResolving(int factor, Certificate cert);

  int factor() const noexcept { return factor_; }
  const Certificate& certificate() const noexcept { return cert_; }

 private:
  int factor_;
  Certificate cert_;
};

enum class ProductConstruction {
  kPartitionPair,     // resolving partitions of both factors
  kPartitionWithSet,  // resolving partition of G1, resolving set of G2
};

struct ProductPartitionPlan {
  ProductConstruction source;
  ProductGraph product;
  OrderedPartition first_partition;
  std::optional<OrderedPartition> second_partition;
  std::optional<VertexSequence> second_set;
  OrderedPartition classes;
  std::vector<std::string> labels;  // aligned with classes
  Certificate certificate;          // verifier output on the product
};

// From Pi1 = {A_1..A_k} of G1 and Pi2 = {B_1..B_t} of G2, the k + t classes
//   A_1xB_1, ..., A_1xB_t, A_2xB_1, ..., A_kxB_1, C
// where C is everything outside (V1 x B_1) and (A_1 x V2). Both factors need
// at least two vertices.
ProductPartitionPlan combine_partitions(const Graph& g1, const OrderedPartition& pi1,
                                        const Graph& g2, const OrderedPartition& pi2,
                                        unsigned threads = 1);

// From Pi = {A_1..A_k} of G1 and S = (u_1..u_t) of G2, the k + t classes
//   A_1x{u_1}, ..., A_kx{u_1}, A_1x{u_2}, ..., A_1x{u_t}, C.
ProductPartitionPlan combine_partition_with_set(const Graph& g1, const OrderedPartition& pi,
                                                const Graph& g2, const VertexSequence& s,
                                                unsigned threads = 1);

struct BoundEntry {
  std::string name;
  std::string formula;
  std::optional<int> value;  // nullopt when an input is unknown
  std::string derivation;
  std::optional<bool> tight;  // set only when the exact product pd is known
};

struct FactorSummary {
  int order = 0;
  std::optional<int> dim;
  std::optional<int> pd;
  // "exact" from the solver, "supplied" from a caller witness (upper bound).
  std::string dim_source = "unknown";
  std::string pd_source = "unknown";
  std::optional<FamilySpec> family;
};

struct BoundReport {
  FactorSummary first;
  FactorSummary second;
  int product_order = 0;
  std::vector<BoundEntry> entries;
  int trivial_lower_bound = 1;   // 2 for a product with at least two vertices
  std::optional<int> product_pd;
  // Tabulated only; no inequality about it is claimed.
  std::optional<int> product_dim;
  std::vector<std::string> notes;
};

struct BoundBudget {
  SearchOptions factor;
  bool exact_product = false;
  SearchOptions product;
};

// Caller-supplied witnesses replace the exact solver for that factor
// invariant. They must resolve; their size is used as the invariant value.
struct FactorWitnesses {
  std::optional<OrderedPartition> first_partition;
  std::optional<OrderedPartition> second_partition;
  std::optional<VertexSequence> first_set;
  std::optional<VertexSequence> second_set;
};

// Evaluates every applicable upper bound on pd(G1 x G2). Budget exhaustion
// leaves values unknown instead of failing.
BoundReport bound_report(const Graph& g1, const Graph& g2, const BoundBudget& budget = {},
                         const FactorWitnesses& witnesses = {});

}  // namespace resolvekit

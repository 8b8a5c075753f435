#include "resolvekit/constructions.hpp"

#include <algorithm>
#include <cassert>

#include "resolvekit/errors.hpp"

namespace resolvekit {

FactorNotResolving::FactorNotResolving(int factor, Certificate cert)
    : ContractViolation("factor " + std::to_string(factor) + " input is not resolving" +
                        (cert.witness ? " (vertices " + std::to_string(cert.witness->first) +
                                            " and " + std::to_string(cert.witness->second) +
                                            " collide)"
                                      : std::string())),
      factor_(factor),
      cert_(std::move(cert)) {}

namespace {

DistanceMatrix factor_distances(const Graph& g, int factor) {
  if (g.order() < 2) {
    throw ContractViolation("factor " + std::to_string(factor) + " must have at least two vertices");
  }
  if (!is_connected(g)) {
    throw ContractViolation("factor " + std::to_string(factor) + " is disconnected");
  }
  return all_pairs_distances(g);
}

void require_resolving_partition(const DistanceMatrix& dm, const OrderedPartition& pi, int factor) {
  if (pi.order() != dm.order()) {
    throw ContractViolation("factor " + std::to_string(factor) + " partition covers " +
                            std::to_string(pi.order()) + " vertices, graph has " +
                            std::to_string(dm.order()));
  }
  auto cert = is_resolving_partition(dm, pi);
  if (!cert.resolving()) throw FactorNotResolving(factor, std::move(cert));
}

ProductPartitionPlan finish(ProductPartitionPlan plan, std::span<const int> labels,
                            unsigned threads) {
  plan.classes = OrderedPartition::from_labels(labels);
  assert(plan.classes.class_count() == static_cast<int>(plan.labels.size()));
  plan.certificate = is_resolving_partition(all_pairs_distances(plan.product.graph, threads),
                                            plan.classes);
  return plan;
}

}  // namespace

ProductPartitionPlan combine_partitions(const Graph& g1, const OrderedPartition& pi1,
                                        const Graph& g2, const OrderedPartition& pi2,
                                        unsigned threads) {
  require_resolving_partition(factor_distances(g1, 1), pi1, 1);
  require_resolving_partition(factor_distances(g2, 2), pi2, 2);

  const int k = pi1.class_count();
  const int t = pi2.class_count();
  ProductPartitionPlan plan{ProductConstruction::kPartitionPair, cartesian_product(g1, g2), pi1,
                            pi2, std::nullopt, {}, {}, {}};
  for (int j = 0; j < t; ++j) plan.labels.push_back("A1×B" + std::to_string(j + 1));
  for (int i = 1; i < k; ++i) plan.labels.push_back("A" + std::to_string(i + 1) + "×B1");
  plan.labels.push_back("C");

  const auto& codec = plan.product.codec;
  const int residual = k + t - 1;
  std::vector<int> labels(static_cast<std::size_t>(codec.order()));
  for (Vertex v = 0; v < codec.order(); ++v) {
    const auto [a, b] = codec.decode(v);
    const int i = pi1.class_of(a);
    const int j = pi2.class_of(b);
    if (i == 0) {
      labels[v] = j;
    } else if (j == 0) {
      labels[v] = t + i - 1;
    } else {
      labels[v] = residual;
    }
  }
  // k, t >= 2 puts A_2 x B_2 inside C.
  if (std::find(labels.begin(), labels.end(), residual) == labels.end()) {
    throw ContractViolation("residual class C is empty");
  }
  return finish(std::move(plan), labels, threads);
}

ProductPartitionPlan combine_partition_with_set(const Graph& g1, const OrderedPartition& pi,
                                                const Graph& g2, const VertexSequence& s,
                                                unsigned threads) {
  require_resolving_partition(factor_distances(g1, 1), pi, 1);
  const DistanceMatrix d2 = factor_distances(g2, 2);
  s.check_fits(g2.order());
  if (auto cert = is_resolving_set(d2, s); !cert.resolving()) {
    throw FactorNotResolving(2, std::move(cert));
  }

  const int k = pi.class_count();
  const int t = static_cast<int>(s.size());
  ProductPartitionPlan plan{ProductConstruction::kPartitionWithSet, cartesian_product(g1, g2), pi,
                            std::nullopt, s, {}, {}, {}};
  for (int i = 0; i < k; ++i) plan.labels.push_back("A" + std::to_string(i + 1) + "×{u1}");
  for (int j = 1; j < t; ++j) plan.labels.push_back("A1×{u" + std::to_string(j + 1) + "}");
  plan.labels.push_back("C");

  std::vector<int> landmark_index(static_cast<std::size_t>(g2.order()), -1);
  for (int j = 0; j < t; ++j) landmark_index[s[j]] = j;

  const auto& codec = plan.product.codec;
  const int residual = k + t - 1;
  std::vector<int> labels(static_cast<std::size_t>(codec.order()));
  for (Vertex v = 0; v < codec.order(); ++v) {
    const auto [a, b] = codec.decode(v);
    const int i = pi.class_of(a);
    const int j = landmark_index[b];
    if (j == 0) {
      labels[v] = i;
    } else if (j > 0 && i == 0) {
      labels[v] = k + j - 1;
    } else {
      labels[v] = residual;
    }
  }
  // k >= 2 and n2 >= 2 put A_2 x {w}, w != u_1, inside C.
  if (std::find(labels.begin(), labels.end(), residual) == labels.end()) {
    throw ContractViolation("residual class C is empty");
  }
  return finish(std::move(plan), labels, threads);
}

namespace {

FactorSummary summarize(const Graph& g, const SearchOptions& options,
                        const std::optional<OrderedPartition>& partition,
                        const std::optional<VertexSequence>& set, int factor,
                        std::vector<std::string>& notes) {
  FactorSummary summary;
  summary.order = g.order();
  summary.family = recognize_family(g);
  const DistanceMatrix dm = all_pairs_distances(g);
  const std::string name = "G" + std::to_string(factor);

  if (partition) {
    require_resolving_partition(dm, *partition, factor);
    summary.pd = partition->class_count();
    summary.pd_source = "supplied";
  } else {
    try {
      const auto pd = partition_dimension(g, options);
      if (pd.found()) {
        summary.pd = pd.value;
        summary.pd_source = "exact";
      } else {
        notes.push_back("pd(" + name + ") not found within the class limit");
      }
    } catch (const SizeLimitExceeded& e) {
      notes.push_back("pd(" + name + ") unknown: " + e.what());
    }
  }

  if (set) {
    set->check_fits(g.order());
    if (auto cert = is_resolving_set(dm, *set); !cert.resolving()) {
      throw FactorNotResolving(factor, std::move(cert));
    }
    summary.dim = static_cast<int>(set->size());
    summary.dim_source = "supplied";
  } else {
    try {
      const auto dim = metric_dimension(g, options);
      if (dim.found()) {
        summary.dim = dim.value;
        summary.dim_source = "exact";
      } else {
        notes.push_back("dim(" + name + ") not found within the size limit");
      }
    } catch (const SizeLimitExceeded& e) {
      notes.push_back("dim(" + name + ") unknown: " + e.what());
    }
  }
  return summary;
}

std::optional<int> add(std::optional<int> a, std::optional<int> b, int extra = 0) {
  if (!a || !b) return std::nullopt;
  return *a + *b + extra;
}

void add_family_entries(const FactorSummary& family_factor, int family_index,
                        const FactorSummary& other, std::vector<BoundEntry>& entries) {
  if (!family_factor.family) return;
  const FamilySpec& fam = *family_factor.family;
  const int known_dim = known_metric_dimension(fam);
  const std::string other_name = family_index == 1 ? "G2" : "G1";
  const std::string prefix = family_index == 1 ? "first" : "second";
  std::string suffix;
  std::string addend;
  switch (fam.kind) {
    case FamilyKind::kComplete:
      suffix = "complete";
      addend = "n-1";
      break;
    case FamilyKind::kPath:
      suffix = "path";
      addend = "1";
      break;
    case FamilyKind::kCycle:
      suffix = "cycle";
      addend = "2";
      break;
    case FamilyKind::kStar:
      suffix = "star";
      addend = "n-1";
      break;
    default:
      return;
  }
  entries.push_back({prefix + "_factor_" + suffix,
                     "pd(" + other_name + ")+" + addend + " with G" +
                         std::to_string(family_index) + " = " + describe(fam),
                     add(other.pd, known_dim),
                     "partition with resolving set, closed-form dim of " + describe(fam) + " = " +
                         std::to_string(known_dim),
                     std::nullopt});
}

}  // namespace

BoundReport bound_report(const Graph& g1, const Graph& g2, const BoundBudget& budget,
                         const FactorWitnesses& witnesses) {
  if (!is_connected(g1) || !is_connected(g2)) {
    throw ContractViolation("bound report needs connected factors");
  }
  BoundReport report;
  report.first = summarize(g1, budget.factor, witnesses.first_partition, witnesses.first_set, 1,
                           report.notes);
  report.second = summarize(g2, budget.factor, witnesses.second_partition, witnesses.second_set,
                            2, report.notes);
  report.product_order = g1.order() * g2.order();
  report.trivial_lower_bound = report.product_order >= 2 ? 2 : 1;

  const auto& f1 = report.first;
  const auto& f2 = report.second;
  report.entries.push_back({"partition_sum", "pd(G1)+pd(G2)", add(f1.pd, f2.pd),
                            "construction from resolving partitions of both factors",
                            std::nullopt});
  report.entries.push_back({"partition_plus_metric", "pd(G1)+dim(G2)", add(f1.pd, f2.dim),
                            "construction from a resolving partition of G1 and a resolving set "
                            "of G2",
                            std::nullopt});
  report.entries.push_back({"metric_plus_partition", "dim(G1)+pd(G2)", add(f1.dim, f2.pd),
                            "construction from a resolving partition of G2 and a resolving set "
                            "of G1",
                            std::nullopt});
  report.entries.push_back({"partition_sum_via_metric", "pd(G1)+dim(G2)+1",
                            add(f1.pd, f2.dim, 1),
                            "partition sum with pd(G2) <= dim(G2)+1", std::nullopt});
  report.entries.push_back({"metric_sum_plus_one", "dim(G1)+dim(G2)+1", add(f1.dim, f2.dim, 1),
                            "partition with resolving set, then pd(G1) <= dim(G1)+1",
                            std::nullopt});
  add_family_entries(f2, 2, f1, report.entries);
  add_family_entries(f1, 1, f2, report.entries);

  if (budget.exact_product) {
    const Graph product = cartesian_product(g1, g2).graph;
    try {
      const auto pd = partition_dimension(product, budget.product);
      if (pd.found()) {
        report.product_pd = pd.value;
      } else {
        report.notes.push_back("pd(G1xG2) not found within the class limit");
      }
    } catch (const SizeLimitExceeded& e) {
      report.notes.push_back(std::string("pd(G1xG2) unknown: ") + e.what());
    }
    try {
      const auto dim = metric_dimension(product, budget.product);
      if (dim.found()) report.product_dim = dim.value;
    } catch (const SizeLimitExceeded& e) {
      report.notes.push_back(std::string("dim(G1xG2) unknown: ") + e.what());
    }
  }
  if (report.product_pd) {
    for (auto& entry : report.entries) {
      if (entry.value) entry.tight = *entry.value == *report.product_pd;
    }
  }
  return report;
}

}  // namespace resolvekit

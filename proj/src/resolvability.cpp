#include "resolvekit/resolvability.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <numeric>
#include <ostream>

#include "resolvekit/errors.hpp"
#include "resolvekit/graph_io.hpp"
#include "text_lines.hpp"

namespace resolvekit {

namespace {

// reps is row-major, n rows of width t. Lexicographically first (u, v)
// with identical rows.
std::optional<std::pair<Vertex, Vertex>> first_collision(const std::vector<int>& reps, int n,
                                                          std::size_t t) {
  if (n < 2) return std::nullopt;
  auto row = [&](Vertex v) { return reps.begin() + static_cast<std::ptrdiff_t>(v * t); };
  std::vector<Vertex> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
    const auto c = std::lexicographical_compare_three_way(row(a), row(a) + t, row(b), row(b) + t);
    return c != 0 ? c < 0 : a < b;
  });
  std::optional<std::pair<Vertex, Vertex>> best;
  for (std::size_t i = 0; i + 1 < order.size(); ++i) {
    const Vertex a = order[i];
    const Vertex b = order[i + 1];
    // a is the smallest member of its group whenever the previous entry differs.
    if (std::equal(row(a), row(a) + t, row(b)) &&
        (i == 0 || !std::equal(row(order[i - 1]), row(order[i - 1]) + t, row(a)))) {
      if (!best || a < best->first) best = {a, b};
    }
  }
  return best;
}

std::string sha_of(const DistanceMatrix& dm) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < dm.order(); ++u) {
    for (Vertex v = u + 1; v < dm.order(); ++v) {
      if (dm(u, v) == 1) edges.push_back({u, v});
    }
  }
  return graph_sha256(Graph::from_edge_list(dm.order(), edges));
}

Vertex checked_vertex(long long value, std::size_t line, int n) {
  if (value < 0 || value >= n) {
    throw ParseError(line, "vertex id " + std::to_string(value) + " outside 0.." +
                               std::to_string(n - 1));
  }
  return static_cast<Vertex>(value);
}

}  // namespace

VertexSequence::VertexSequence(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
  std::vector<Vertex> sorted = vertices_;
  std::sort(sorted.begin(), sorted.end());
  if (!sorted.empty() && sorted.front() < 0) throw ContractViolation("negative vertex id");
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw ContractViolation("vertex sequence contains a duplicate");
  }
}

void VertexSequence::check_fits(int n) const {
  for (Vertex v : vertices_) {
    if (v >= n) throw ContractViolation("vertex " + std::to_string(v) + " not in graph");
  }
}

OrderedPartition::OrderedPartition(std::vector<std::vector<Vertex>> classes, int n)
    : classes_(std::move(classes)), labels_(static_cast<std::size_t>(n), -1) {
  for (std::size_t i = 0; i < classes_.size(); ++i) {
    auto& cls = classes_[i];
    if (cls.empty()) throw ContractViolation("partition class " + std::to_string(i) + " is empty");
    std::sort(cls.begin(), cls.end());
    for (Vertex v : cls) {
      if (v < 0 || v >= n) throw ContractViolation("vertex " + std::to_string(v) + " not in graph");
      if (labels_[v] >= 0) {
        throw ContractViolation("vertex " + std::to_string(v) + " appears in two classes");
      }
      labels_[v] = static_cast<int>(i);
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (labels_[v] < 0) throw ContractViolation("vertex " + std::to_string(v) + " not covered");
  }
}

OrderedPartition OrderedPartition::from_labels(std::span<const int> labels) {
  const int t = labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
  std::vector<std::vector<Vertex>> classes(static_cast<std::size_t>(std::max(t, 0)));
  for (std::size_t v = 0; v < labels.size(); ++v) {
    if (labels[v] < 0) throw ContractViolation("negative class label");
    classes[labels[v]].push_back(static_cast<Vertex>(v));
  }
  return OrderedPartition(std::move(classes), static_cast<int>(labels.size()));
}

OrderedPartition OrderedPartition::singletons(int n) {
  std::vector<std::vector<Vertex>> classes;
  classes.reserve(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) classes.push_back({v});
  return OrderedPartition(std::move(classes), n);
}

Representation metric_representation(const DistanceMatrix& dm, Vertex v, const VertexSequence& s) {
  if (s.empty()) throw ContractViolation("metric representation needs a nonempty sequence");
  Representation r;
  r.coords.reserve(s.size());
  for (Vertex x : s) r.coords.push_back(dm(v, x));
  return r;
}

Representation partition_representation(const DistanceMatrix& dm, Vertex v,
                                        const OrderedPartition& pi) {
  Representation r;
  r.coords.reserve(static_cast<std::size_t>(pi.class_count()));
  for (const auto& cls : pi.classes()) r.coords.push_back(distance_to_set(dm, v, cls));
  return r;
}

Certificate is_resolving_set(const DistanceMatrix& dm, const VertexSequence& s) {
  s.check_fits(dm.order());
  Certificate cert;
  cert.kind = ObjectKind::kSet;
  cert.object = {std::vector<Vertex>(s.begin(), s.end())};
  cert.graph_sha = sha_of(dm);

  const int n = dm.order();
  const std::size_t k = s.size();
  std::vector<int> reps(static_cast<std::size_t>(n) * k);
  for (Vertex v = 0; v < n; ++v) {
    for (std::size_t i = 0; i < k; ++i) reps[v * k + i] = dm(v, s[i]);
  }
  cert.witness = first_collision(reps, n, k);
  cert.verdict = cert.witness ? Verdict::kNotResolving : Verdict::kResolving;
  return cert;
}

Certificate is_resolving_partition(const DistanceMatrix& dm, const OrderedPartition& pi) {
  if (pi.order() != dm.order()) throw ContractViolation("partition and graph sizes differ");
  Certificate cert;
  cert.kind = ObjectKind::kPartition;
  cert.object = pi.classes();
  cert.graph_sha = sha_of(dm);

  const int n = dm.order();
  const auto t = static_cast<std::size_t>(pi.class_count());
  std::vector<int> reps(static_cast<std::size_t>(n) * t);
  for (Vertex v = 0; v < n; ++v) {
    for (std::size_t i = 0; i < t; ++i) reps[v * t + i] = distance_to_set(dm, v, pi.members(i));
  }
  cert.witness = first_collision(reps, n, t);
  cert.verdict = cert.witness ? Verdict::kNotResolving : Verdict::kResolving;
  return cert;
}

bool recheck_witness(const DistanceMatrix& dm, const Certificate& cert) {
  const auto fresh = [&] {
    if (cert.kind == ObjectKind::kSet) {
      return is_resolving_set(dm, VertexSequence(cert.object.empty() ? std::vector<Vertex>{}
                                                                     : cert.object.front()));
    }
    return is_resolving_partition(dm, OrderedPartition(cert.object, dm.order()));
  }();
  if (fresh.verdict != cert.verdict || fresh.witness != cert.witness) return false;
  if (!cert.witness) return true;
  const auto [u, v] = *cert.witness;
  if (cert.kind == ObjectKind::kSet) {
    const VertexSequence s(cert.object.front());
    if (s.empty()) return u != v;
    return metric_representation(dm, u, s) == metric_representation(dm, v, s);
  }
  const OrderedPartition pi(cert.object, dm.order());
  return partition_representation(dm, u, pi) == partition_representation(dm, v, pi);
}

std::vector<std::vector<Vertex>> twin_classes(const DistanceMatrix& dm) {
  const int n = dm.order();
  std::vector<int> group(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<Vertex>> classes;
  for (Vertex u = 0; u < n; ++u) {
    if (group[u] >= 0) continue;
    group[u] = static_cast<int>(classes.size());
    classes.push_back({u});
    for (Vertex v = u + 1; v < n; ++v) {
      if (group[v] >= 0) continue;
      bool twins = true;
      for (Vertex x = 0; x < n && twins; ++x) {
        if (x != u && x != v && dm(u, x) != dm(v, x)) twins = false;
      }
      if (twins) {
        group[v] = group[u];
        classes.back().push_back(v);
      }
    }
  }
  return classes;
}

OrderedPartition read_partition(std::istream& in, int n) {
  const auto lines = detail::read_integer_lines(in);
  std::vector<std::vector<Vertex>> classes;
  std::vector<std::size_t> seen_on(static_cast<std::size_t>(n), 0);
  for (const auto& line : lines) {
    auto& cls = classes.emplace_back();
    for (long long value : line.values) {
      const Vertex v = checked_vertex(value, line.number, n);
      if (seen_on[v] != 0) {
        throw ParseError(line.number, "vertex " + std::to_string(v) + " already listed on line " +
                                          std::to_string(seen_on[v]));
      }
      seen_on[v] = line.number;
      cls.push_back(v);
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (seen_on[v] == 0) throw ParseError(0, "vertex " + std::to_string(v) + " not in any class");
  }
  return OrderedPartition(std::move(classes), n);
}

OrderedPartition read_partition_file(const std::string& path, int n) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  return read_partition(in, n);
}

void write_partition(std::ostream& out, const OrderedPartition& pi) {
  for (const auto& cls : pi.classes()) {
    for (std::size_t i = 0; i < cls.size(); ++i) out << (i ? " " : "") << cls[i];
    out << '\n';
  }
}

VertexSequence read_vertex_sequence(std::istream& in, int n) {
  const auto lines = detail::read_integer_lines(in);
  if (lines.size() > 1) throw ParseError(lines[1].number, "set file must be a single line");
  std::vector<Vertex> vertices;
  if (!lines.empty()) {
    for (long long value : lines.front().values) {
      const Vertex v = checked_vertex(value, lines.front().number, n);
      if (std::find(vertices.begin(), vertices.end(), v) != vertices.end()) {
        throw ParseError(lines.front().number, "vertex " + std::to_string(v) + " repeated");
      }
      vertices.push_back(v);
    }
  }
  return VertexSequence(std::move(vertices));
}

VertexSequence read_vertex_sequence_file(const std::string& path, int n) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  return read_vertex_sequence(in, n);
}

void write_vertex_sequence(std::ostream& out, const VertexSequence& s) {
  for (std::size_t i = 0; i < s.size(); ++i) out << (i ? " " : "") << s[i];
  out << '\n';
}

}  // namespace resolvekit

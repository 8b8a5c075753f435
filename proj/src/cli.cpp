#include "resolvekit/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <functional>
#include <fstream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>

#include "resolvekit/certificate.hpp"
#include "resolvekit/constructions.hpp"
#include "resolvekit/errors.hpp"
#include "resolvekit/families.hpp"
#include "resolvekit/graph.hpp"
#include "resolvekit/graph_io.hpp"
#include "resolvekit/resolvability.hpp"
#include "resolvekit/solvers.hpp"

namespace resolvekit {

namespace {

using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

// Bad command line or unreadable/malformed input; maps to exit 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Common {
  unsigned threads = 0;
  bool pretty = false;
  bool no_timing = false;
  std::string output = "-";
  std::string manifest;
};

class Io {
 public:
  Io(std::istream& in, std::ostream& out) : in_(in), out_(out) {}

  std::string read(const std::string& path) {
    std::string text;
    if (path == "-") {
      if (stdin_used_) throw UsageError("standard input can feed only one file slot");
      stdin_used_ = true;
      text.assign(std::istreambuf_iterator<char>(in_), {});
    } else {
      std::ifstream file(path, std::ios::binary);
      if (!file) throw UsageError("cannot open '" + path + "'");
      text.assign(std::istreambuf_iterator<char>(file), {});
    }
    inputs_[path] = sha256_hex(text);
    return text;
  }

  void write(const std::string& path, const std::string& text) {
    if (path == "-") {
      out_ << text;
      out_.flush();
    } else {
      std::ofstream file(path, std::ios::binary);
      if (!file) throw UsageError("cannot write '" + path + "'");
      file << text;
    }
    outputs_.push_back(path);
  }

  const std::map<std::string, std::string>& inputs() const { return inputs_; }
  const std::vector<std::string>& outputs() const { return outputs_; }

 private:
  std::istream& in_;
  std::ostream& out_;
  bool stdin_used_ = false;
  std::map<std::string, std::string> inputs_;
  std::vector<std::string> outputs_;
};

template <typename Parse>
auto parse_input(Io& io, const std::string& path, Parse parse) {
  std::istringstream text(io.read(path));
  try {
    return parse(text);
  } catch (const ParseError& e) {
    throw UsageError((path == "-" ? std::string("<stdin>") : path) + ": " + e.what());
  } catch (const ContractViolation& e) {
    throw UsageError((path == "-" ? std::string("<stdin>") : path) + ": " + e.what());
  }
}

Graph load_graph(Io& io, const std::string& path) {
  return parse_input(io, path, [](std::istream& in) { return read_edge_list(in); });
}

OrderedPartition load_partition(Io& io, const std::string& path, int n) {
  return parse_input(io, path, [n](std::istream& in) { return read_partition(in, n); });
}

VertexSequence load_set(Io& io, const std::string& path, int n) {
  return parse_input(io, path, [n](std::istream& in) { return read_vertex_sequence(in, n); });
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string partition_text(const OrderedPartition& pi) {
  std::ostringstream out;
  write_partition(out, pi);
  return out.str();
}

std::string set_text(const VertexSequence& s) {
  std::ostringstream out;
  write_vertex_sequence(out, s);
  return out.str();
}

std::string join(std::span<const int> values, const char* sep = " ") {
  std::string text;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) text += sep;
    text += std::to_string(values[i]);
  }
  return text;
}

json optional_int(const std::optional<int>& v) { return v ? json(*v) : json(nullptr); }

void report_collision(std::ostream& err, const Certificate& cert) {
  if (cert.witness) {
    err << "not resolving: vertices " << cert.witness->first << " and " << cert.witness->second
        << " have equal representations\n";
  }
}

// ---------------------------------------------------------------- gen

struct GenArgs {
  std::string kind;
  std::vector<int> params;
  std::string partition_out;
  std::string set_out;
};

int cmd_gen(Io& io, const Common& common, const GenArgs& args) {
  const auto kind = parse_family_kind(args.kind);
  if (!kind) throw UsageError("unknown family '" + args.kind + "'");
  const FamilySpec spec{*kind, args.params};
  Graph g;
  try {
    g = generate(spec);
  } catch (const GraphError& e) {
    throw UsageError(e.what());
  }
  if (*kind != FamilyKind::kPaperUnicyclic) {
    io.write(common.output, to_edge_list(g));
    return kExitOk;
  }

  const auto example = paper_unicyclic_example();
  io.write(common.output,
           "# 15-vertex unicyclic example: triangle 1-2-3, leaves 4-7 on 1, 8-11 on 2, "
           "12-15 on 3\n# published vertex i is id i-1 here\n" +
               to_edge_list(example.graph));
  std::string partition_out = args.partition_out;
  std::string set_out = args.set_out;
  if (common.output != "-") {
    if (partition_out.empty()) partition_out = common.output + ".partition";
    if (set_out.empty()) set_out = common.output + ".set";
  }
  if (!partition_out.empty()) io.write(partition_out, partition_text(example.partition));
  if (!set_out.empty()) io.write(set_out, set_text(example.set));
  return kExitOk;
}

// ---------------------------------------------------------------- dim / pd

struct SolveArgs {
  std::string graph;
  std::optional<int> limit;
  int max_n = 0;
  std::string witness_out;
};

template <typename Result>
int emit_solver_result(Io& io, const Common& common, const Result& result, json witness,
                       const std::string& witness_text, long long wall_ms, const char* name,
                       const std::string& witness_out) {
  if (result.found() && !witness_out.empty()) io.write(witness_out, witness_text);
  if (common.pretty) {
    std::ostringstream text;
    if (result.found()) {
      text << name << " = " << result.value << "\nwitness:\n" << witness_text;
    } else {
      text << name << " not found within the limit\n";
    }
    text << "lower bound: " << result.lower_bound << "\nexamined: " << result.examined << "\n";
    if (!common.no_timing) text << "wall: " << wall_ms << " ms\n";
    io.write(common.output, text.str());
  } else {
    json j;
    j["value"] = result.found() ? json(result.value) : json(nullptr);
    j["witness"] = result.found() ? std::move(witness) : json(nullptr);
    j["examined"] = result.examined;
    if (!common.no_timing) j["wall_ms"] = wall_ms;
    j["status"] = result.found() ? "found" : "limit-exceeded";
    io.write(common.output, dump(j));
  }
  return result.found() ? kExitOk : kExitBudget;
}

SearchOptions search_options(const Common& common, std::optional<int> limit, int max_n) {
  SearchOptions options;
  options.limit = limit;
  options.threads = common.threads;
  options.max_order = max_n;
  return options;
}

Graph load_connected(Io& io, const std::string& path) {
  Graph g = load_graph(io, path);
  if (!is_connected(g)) throw UsageError(path + ": graph is not connected");
  return g;
}

long long elapsed_ms(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

int cmd_dim(Io& io, const Common& common, const SolveArgs& args) {
  const Graph g = load_connected(io, args.graph);
  const auto start = Clock::now();
  const auto result = metric_dimension(g, search_options(common, args.limit, args.max_n));
  const auto wall = elapsed_ms(start);
  json witness(std::vector<Vertex>(result.witness.begin(), result.witness.end()));
  return emit_solver_result(io, common, result, std::move(witness), set_text(result.witness), wall,
                            "dim", args.witness_out);
}

int cmd_pd(Io& io, const Common& common, const SolveArgs& args) {
  const Graph g = load_connected(io, args.graph);
  const auto start = Clock::now();
  const auto result = partition_dimension(g, search_options(common, args.limit, args.max_n));
  const auto wall = elapsed_ms(start);
  return emit_solver_result(io, common, result, json(result.witness.classes()),
                            partition_text(result.witness), wall, "pd", args.witness_out);
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  std::string graph;
  std::string object;
};

int emit_certificate(Io& io, const Common& common, const DistanceMatrix& dm,
                     const Certificate& cert, std::ostream& err,
                     const std::function<Representation(Vertex)>& representation) {
  if (common.pretty) {
    std::ostringstream text;
    text << to_string(cert.verdict) << "\n";
    for (Vertex v = 0; v < dm.order(); ++v) {
      text << v << "\t(" << join(representation(v).coords, ",") << ")\n";
    }
    io.write(common.output, text.str());
  } else {
    io.write(common.output, dump(to_json(cert)));
  }
  report_collision(err, cert);
  return cert.resolving() ? kExitOk : kExitNotResolving;
}

int cmd_verify_set(Io& io, const Common& common, const VerifyArgs& args, std::ostream& err) {
  const Graph g = load_connected(io, args.graph);
  const VertexSequence s = load_set(io, args.object, g.order());
  const DistanceMatrix dm = all_pairs_distances(g, common.threads);
  const auto cert = is_resolving_set(dm, s);
  return emit_certificate(io, common, dm, cert, err, [&](Vertex v) {
    return s.empty() ? Representation{} : metric_representation(dm, v, s);
  });
}

int cmd_verify_partition(Io& io, const Common& common, const VerifyArgs& args,
                         std::ostream& err) {
  const Graph g = load_connected(io, args.graph);
  const OrderedPartition pi = load_partition(io, args.object, g.order());
  const DistanceMatrix dm = all_pairs_distances(g, common.threads);
  const auto cert = is_resolving_partition(dm, pi);
  return emit_certificate(io, common, dm, cert, err,
                          [&](Vertex v) { return partition_representation(dm, v, pi); });
}

// ---------------------------------------------------------------- product

struct ProductArgs {
  std::string g1;
  std::string g2;
  bool dot = false;
};

int cmd_product(Io& io, const Common& common, const ProductArgs& args) {
  const Graph g1 = load_graph(io, args.g1);
  const Graph g2 = load_graph(io, args.g2);
  const auto product = cartesian_product(g1, g2);
  io.write(common.output,
           args.dot ? to_dot(product.graph, &product.codec) : to_edge_list(product.graph));
  return kExitOk;
}

// ---------------------------------------------------------------- construct

struct ConstructArgs {
  int theorem = 0;
  std::string g1;
  std::string pi1;
  std::string g2;
  std::string pi2;
  std::string set;
  std::string prefix;
};

int cmd_construct(Io& io, const Common& common, const ConstructArgs& args, std::ostream& err) {
  const Graph g1 = load_connected(io, args.g1);
  const Graph g2 = load_connected(io, args.g2);
  const OrderedPartition pi1 = load_partition(io, args.pi1, g1.order());

  ProductPartitionPlan plan;
  try {
    if (args.theorem == 1) {
      if (args.pi2.empty()) throw UsageError("--theorem 1 needs --pi2");
      plan = combine_partitions(g1, pi1, g2, load_partition(io, args.pi2, g2.order()),
                                common.threads);
    } else {
      if (args.set.empty()) throw UsageError("--theorem 2 needs --set");
      plan = combine_partition_with_set(g1, pi1, g2, load_set(io, args.set, g2.order()),
                                        common.threads);
    }
  } catch (const FactorNotResolving& e) {
    err << "error: " << e.what() << "\n";
    json j;
    j["error"] = "factor-not-resolving";
    j["factor"] = e.factor();
    j["certificate"] = to_json(e.certificate());
    io.write(common.output, dump(j));
    return kExitNotResolving;
  } catch (const ContractViolation& e) {
    throw UsageError(e.what());
  }

  const auto cert_json = to_json(plan.certificate);
  if (!args.prefix.empty()) {
    io.write(args.prefix + ".edges", to_edge_list(plan.product.graph));
    io.write(args.prefix + ".partition", partition_text(plan.classes));
    std::string labels;
    for (const auto& label : plan.labels) labels += label + "\n";
    io.write(args.prefix + ".labels", labels);
    io.write(args.prefix + ".cert.json", dump(cert_json));
  }

  if (common.pretty) {
    std::ostringstream text;
    text << "product: " << plan.product.graph.order() << " vertices, "
         << plan.product.graph.size() << " edges\n";
    for (std::size_t i = 0; i < plan.labels.size(); ++i) {
      text << plan.labels[i] << "\t" << plan.classes.classes()[i].size() << " vertices\n";
    }
    text << to_string(plan.certificate.verdict) << "\n";
    io.write(common.output, text.str());
  } else {
    json j;
    j["construction"] =
        plan.source == ProductConstruction::kPartitionPair ? "partition-pair" : "partition-with-set";
    j["class_count"] = plan.classes.class_count();
    j["labels"] = plan.labels;
    j["classes"] = plan.classes.classes();
    j["product"] = {{"n", plan.product.graph.order()},
                    {"m", plan.product.graph.size()},
                    {"graph_sha", graph_sha256(plan.product.graph)}};
    j["certificate"] = cert_json;
    io.write(common.output, dump(j));
  }
  report_collision(err, plan.certificate);
  return plan.certificate.resolving() ? kExitOk : kExitNotResolving;
}

// ---------------------------------------------------------------- bounds

struct BoundsArgs {
  std::string g1;
  std::string g2;
  bool exact_product = false;
  std::string pi1;
  std::string pi2;
  std::string set1;
  std::string set2;
  std::optional<int> limit;
  int max_n = 0;
  int product_max_n = 0;
};

json factor_json(const FactorSummary& f) {
  return {{"order", f.order},
          {"dim", optional_int(f.dim)},
          {"dim_source", f.dim_source},
          {"pd", optional_int(f.pd)},
          {"pd_source", f.pd_source},
          {"family", f.family ? json(describe(*f.family)) : json(nullptr)}};
}

int cmd_bounds(Io& io, const Common& common, const BoundsArgs& args) {
  const Graph g1 = load_connected(io, args.g1);
  const Graph g2 = load_connected(io, args.g2);
  FactorWitnesses witnesses;
  if (!args.pi1.empty()) witnesses.first_partition = load_partition(io, args.pi1, g1.order());
  if (!args.pi2.empty()) witnesses.second_partition = load_partition(io, args.pi2, g2.order());
  if (!args.set1.empty()) witnesses.first_set = load_set(io, args.set1, g1.order());
  if (!args.set2.empty()) witnesses.second_set = load_set(io, args.set2, g2.order());

  BoundBudget budget;
  budget.factor = search_options(common, args.limit, args.max_n);
  budget.exact_product = args.exact_product;
  budget.product = search_options(common, std::nullopt, args.product_max_n);

  BoundReport report;
  try {
    report = bound_report(g1, g2, budget, witnesses);
  } catch (const FactorNotResolving& e) {
    throw UsageError(e.what());
  }

  if (common.pretty) {
    std::ostringstream text;
    for (const auto& e : report.entries) {
      text << e.name << "\t" << e.formula << "\t"
           << (e.value ? std::to_string(*e.value) : std::string("unknown"));
      if (e.tight) text << (*e.tight ? "\ttight" : "\tnot tight");
      text << "\n";
    }
    if (report.product_pd) text << "pd(G1xG2) = " << *report.product_pd << "\n";
    for (const auto& note : report.notes) text << "note: " << note << "\n";
    io.write(common.output, text.str());
    return kExitOk;
  }

  json entries = json::array();
  for (const auto& e : report.entries) {
    entries.push_back({{"name", e.name},
                       {"formula", e.formula},
                       {"value", optional_int(e.value)},
                       {"derivation", e.derivation},
                       {"tight", e.tight ? json(*e.tight) : json(nullptr)}});
  }
  json j;
  j["factors"] = {factor_json(report.first), factor_json(report.second)};
  j["product_order"] = report.product_order;
  j["entries"] = std::move(entries);
  j["trivial_lower_bound"] = report.trivial_lower_bound;
  j["product_pd"] = optional_int(report.product_pd);
  j["product_dim"] = optional_int(report.product_dim);
  j["notes"] = report.notes;
  io.write(common.output, dump(j));
  return kExitOk;
}

unsigned default_threads() {
  if (const char* env = std::getenv("RESOLVEKIT_THREADS")) {
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && value >= 0) return static_cast<unsigned>(value);
  }
  return 0;
}

void write_manifest(const std::string& path, const std::vector<std::string>& args, const Io& io,
                    int status, long long wall_ms, const Common& common) {
  json j;
  json command_line = json::array({"resolvekit"});
  for (const auto& a : args) command_line.push_back(a);
  j["command_line"] = std::move(command_line);
  j["inputs"] = io.inputs();
  j["tool_version"] = kToolVersion;
  j["seed"] = nullptr;
  if (!common.no_timing) j["wall_ms"] = wall_ms;
  j["exit_status"] = status;
  j["outputs"] = io.outputs();
  std::ofstream out(path);
  out << j.dump(2) << "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Exact metric and partition dimension, product partition constructions, and "
               "certificate verification.",
               "resolvekit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  Common common;
  common.threads = default_threads();
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--threads", common.threads,
                    "Worker threads (0 = all cores; env RESOLVEKIT_THREADS)");
    sub->add_flag("--pretty", common.pretty, "Human-readable output instead of JSON");
    sub->add_flag("--no-timing", common.no_timing, "Omit wall-clock fields");
    sub->add_option("-o,--output", common.output, "Output file ('-' = stdout)");
    sub->add_option("--manifest", common.manifest, "Write a run manifest JSON here");
  };

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "Generate a named graph family as an edge list");
  gen->add_option("kind", gen_args.kind, "complete | path | cycle | star | grid | paper-example")
      ->required();
  gen->add_option("params", gen_args.params, "Family parameters");
  gen->add_option("--partition-out", gen_args.partition_out, "paper-example partition file");
  gen->add_option("--set-out", gen_args.set_out, "paper-example resolving set file");
  add_common(gen);

  SolveArgs dim_args;
  SolveArgs pd_args;
  auto setup_solver = [&](CLI::App* sub, SolveArgs& a) {
    sub->add_option("graph", a.graph, "Edge-list file ('-' = stdin)")->required();
    sub->add_option("--limit", a.limit, "Largest size to try");
    sub->add_option("--max-n", a.max_n, "Override the vertex-count cap");
    sub->add_option("--witness-out", a.witness_out, "Write the witness file here");
    add_common(sub);
  };
  auto* dim = app.add_subcommand("dim", "Exact metric dimension");
  setup_solver(dim, dim_args);
  auto* pd = app.add_subcommand("pd", "Exact partition dimension");
  setup_solver(pd, pd_args);

  VerifyArgs vset_args;
  auto* vset = app.add_subcommand("verify-set", "Check whether a vertex sequence resolves");
  vset->add_option("graph", vset_args.graph)->required();
  vset->add_option("set", vset_args.object)->required();
  add_common(vset);

  VerifyArgs vpart_args;
  auto* vpart = app.add_subcommand("verify-partition", "Check whether a partition resolves");
  vpart->add_option("graph", vpart_args.graph)->required();
  vpart->add_option("partition", vpart_args.object)->required();
  add_common(vpart);

  ProductArgs product_args;
  auto* product = app.add_subcommand("product", "Cartesian product edge list, (a,b) -> a*n2+b");
  product->add_option("g1", product_args.g1)->required();
  product->add_option("g2", product_args.g2)->required();
  product->add_flag("--dot", product_args.dot, "Emit Graphviz instead of an edge list");
  add_common(product);

  ConstructArgs construct_args;
  auto* construct = app.add_subcommand("construct", "Build a resolving partition of G1 x G2");
  construct->add_option("--theorem", construct_args.theorem,
                        "1: from two partitions, 2: from a partition and a resolving set")
      ->required()
      ->check(CLI::IsMember({1, 2}));
  construct->add_option("--g1", construct_args.g1)->required();
  construct->add_option("--pi1", construct_args.pi1)->required();
  construct->add_option("--g2", construct_args.g2)->required();
  auto* pi2_opt = construct->add_option("--pi2", construct_args.pi2);
  auto* set_opt = construct->add_option("--set", construct_args.set);
  pi2_opt->excludes(set_opt);
  construct->add_option("--prefix", construct_args.prefix,
                        "Write PREFIX.edges, .partition, .labels, .cert.json");
  add_common(construct);

  BoundsArgs bounds_args;
  auto* bounds = app.add_subcommand("bounds", "Upper bounds on pd(G1 x G2)");
  bounds->add_option("--g1", bounds_args.g1)->required();
  bounds->add_option("--g2", bounds_args.g2)->required();
  bounds->add_flag("--exact-product", bounds_args.exact_product,
                   "Also solve pd (and dim) of the product when small enough");
  bounds->add_option("--pi1", bounds_args.pi1, "Use this partition of G1 instead of solving");
  bounds->add_option("--pi2", bounds_args.pi2, "Use this partition of G2 instead of solving");
  bounds->add_option("--set1", bounds_args.set1, "Use this resolving set of G1");
  bounds->add_option("--set2", bounds_args.set2, "Use this resolving set of G2");
  bounds->add_option("--limit", bounds_args.limit, "Largest factor size to try");
  bounds->add_option("--max-n", bounds_args.max_n, "Factor vertex-count cap override");
  bounds->add_option("--product-max-n", bounds_args.product_max_n,
                     "Product vertex-count cap override");
  add_common(bounds);

  std::vector<const char*> argv{"resolvekit"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  Io io(in, out);
  const auto start = Clock::now();
  int status = kExitUsage;
  try {
    if (gen->parsed()) {
      status = cmd_gen(io, common, gen_args);
    } else if (dim->parsed()) {
      status = cmd_dim(io, common, dim_args);
    } else if (pd->parsed()) {
      status = cmd_pd(io, common, pd_args);
    } else if (vset->parsed()) {
      status = cmd_verify_set(io, common, vset_args, err);
    } else if (vpart->parsed()) {
      status = cmd_verify_partition(io, common, vpart_args, err);
    } else if (product->parsed()) {
      status = cmd_product(io, common, product_args);
    } else if (construct->parsed()) {
      status = cmd_construct(io, common, construct_args, err);
    } else if (bounds->parsed()) {
      status = cmd_bounds(io, common, bounds_args);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    status = kExitUsage;
  } catch (const SizeLimitExceeded& e) {
    err << "error: " << e.what() << "\n";
    status = kExitBudget;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    status = kExitUsage;
  }
  if (!common.manifest.empty()) {
    write_manifest(common.manifest, args, io, status, elapsed_ms(start), common);
  }
  return status;
}

}  // namespace resolvekit

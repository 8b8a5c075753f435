#include "resolvekit/graph_io.hpp"

#include <openssl/evp.h>

#include <array>
#include <fstream>
#include <limits>
#include <sstream>

#include "resolvekit/errors.hpp"
#include "text_lines.hpp"

namespace resolvekit {

namespace {

int checked_int(long long value, std::size_t line, const char* what) {
  if (value < 0 || value > std::numeric_limits<int>::max()) {
    throw ParseError(line, std::string(what) + " out of range: " + std::to_string(value));
  }
  return static_cast<int>(value);
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  const auto lines = detail::read_integer_lines(in);
  if (lines.empty()) throw ParseError(0, "missing header line 'n m'");
  const auto& header = lines.front();
  if (header.values.size() != 2) throw ParseError(header.number, "header must be 'n m'");
  const int n = checked_int(header.values[0], header.number, "vertex count");
  const int m = checked_int(header.values[1], header.number, "edge count");

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    if (static_cast<int>(edges.size()) == m) {
      throw ParseError(line.number, "more than the declared " + std::to_string(m) + " edges");
    }
    if (line.values.size() != 2) throw ParseError(line.number, "edge line must be 'u v'");
    const Vertex u = checked_int(line.values[0], line.number, "vertex id");
    const Vertex v = checked_int(line.values[1], line.number, "vertex id");
    if (u >= n || v >= n) {
      throw ParseError(line.number, "vertex id outside 0.." + std::to_string(n - 1));
    }
    if (u == v) throw ParseError(line.number, "self-loop at vertex " + std::to_string(u));
    edges.push_back({u, v});
  }
  if (static_cast<int>(edges.size()) != m) {
    throw ParseError(0, "declared " + std::to_string(m) + " edges, found " +
                            std::to_string(edges.size()));
  }
  return Graph::from_edge_list(n, edges);
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.size() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

std::string graph_sha256(const Graph& g) { return sha256_hex(to_edge_list(g)); }

std::string sha256_hex(std::string_view text) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int length = 0;
  EVP_Digest(text.data(), text.size(), digest.data(), &length, EVP_sha256(), nullptr);
  static constexpr char kHex[] = "0123456789abcdef";
  std::string hex;
  hex.reserve(2 * length);
  for (unsigned int i = 0; i < length; ++i) {
    hex.push_back(kHex[digest[i] >> 4]);
    hex.push_back(kHex[digest[i] & 0xF]);
  }
  return hex;
}

std::string to_dot(const Graph& g, const ProductVertexCodec* codec) {
  std::ostringstream out;
  out << "graph G {\n";
  for (Vertex v = 0; v < g.order(); ++v) {
    out << "  " << v;
    if (codec != nullptr) {
      const auto [a, b] = codec->decode(v);
      out << " [label=\"(" << a << "," << b << ")\"]";
    }
    out << ";\n";
  }
  for (const auto& e : g.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace resolvekit

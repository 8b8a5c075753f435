#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "resolvekit/graph.hpp"

namespace resolvekit {

// Edge-list text: a header line "n m", then m lines "u v". Vertex ids are
// 0-based; '#' comments and blank lines are ignored. Throws ParseError.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);

// Canonical form: header, then edges sorted with u < v.
void write_edge_list(std::ostream& out, const Graph& g);
std::string to_edge_list(const Graph& g);

// Hex SHA-256 of arbitrary bytes.
std::string sha256_hex(std::string_view bytes);

// Hex SHA-256 of the canonical edge list.
std::string graph_sha256(const Graph& g);

// Graphviz output, one node per vertex. With a codec, nodes are labelled (a,b).
std::string to_dot(const Graph& g, const ProductVertexCodec* codec = nullptr);

}  // namespace resolvekit

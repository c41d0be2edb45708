#pragma once

#include <iosfwd>
#include <string>

#include "superdom/graph.hpp"

namespace superdom {

// Thrown for malformed textual graph input (graph6, edge list, JSON).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// graph6: printable encoding of simple graphs. Header is byte n+63 for
// n <= 62, or '~' plus a 3-byte (18-bit) big-endian order, or '~~' plus a
// 6-byte (36-bit) order. Body packs the upper triangle column-major
// (x01, x02, x12, x03, ...) into 6-bit groups, each emitted as byte+63.
std::string graph6_encode(const Graph& g);
Graph graph6_decode(const std::string& line);

// Edge-list text: first line "n m", then m lines "u v" (0-based).
std::string edge_list_encode(const Graph& g);
Graph edge_list_decode(std::istream& in);
Graph edge_list_decode_string(const std::string& text);

// JSON object {"n": int, "edges": [[u,v],...]}.
std::string graph_to_json(const Graph& g);
Graph graph_from_json(const std::string& text);

// Convenience: parse a file whose format is inferred from the extension
// (.g6 -> graph6 single line, .json -> JSON object, anything else -> edge list).
Graph read_graph_file(const std::string& path);

}  // namespace superdom

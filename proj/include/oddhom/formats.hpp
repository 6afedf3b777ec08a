#pragma once

#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "oddhom/graph.hpp"

namespace oddhom {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GraphDocument {
    Graph graph;
    std::string name;    // optional label
    std::string source;  // provenance, e.g. "file:foo.g6:3"
};

/// Decodes one graph6 line (optional ">>graph6<<" header allowed).
/// Bit layout: upper triangle, column-major, 6-bit chunks offset by 63.
Graph parse_graph6(std::string_view line);

/// Encodes the labeled adjacency (no isomorphism canonicalization).
/// Supports n <= 258047 (one- and three-byte length forms).
std::string emit_graph6(const Graph& g);

struct DimacsOptions {
    bool strict = false;  // strict: duplicate edges and count mismatches are errors
};

/// DIMACS edge format: "p edge n m" header, "e u v" lines, 1-based on the
/// wire and 0-based internally. In non-strict mode duplicate edges are
/// dropped with a warning recorded in the returned document's source field.
GraphDocument parse_dimacs(std::string_view text, DimacsOptions options = {});
std::string emit_dimacs(const Graph& g);

/// JSON object {"n": int, "edges": [[u,v], ...]}, optionally {"name": str}.
GraphDocument parse_edgelist_json(std::string_view text);
std::string emit_edgelist_json(const Graph& g, const std::string& name = "");

/// Streaming graph6 reader: one graph per LF-terminated line. Malformed lines
/// surface as items carrying an error instead of a graph, so consumers can
/// keep going.
class Graph6Reader {
public:
    explicit Graph6Reader(std::istream& in) : in_(in) {}

    struct Item {
        int line_number = 0;
        std::optional<Graph> graph;
        std::string error;  // nonempty iff graph is absent
    };

    /// Returns the next non-empty line's parse result, or nullopt at EOF.
    std::optional<Item> next();

private:
    std::istream& in_;
    int line_number_ = 0;
};

/// Format sniffing used by the CLI: graph6 / DIMACS / JSON edge list.
enum class GraphFormat { graph6, dimacs, json };
GraphFormat sniff_format(std::string_view text, std::string_view filename = "");
GraphDocument parse_any(std::string_view text, std::string_view filename = "", DimacsOptions options = {});

} // namespace oddhom

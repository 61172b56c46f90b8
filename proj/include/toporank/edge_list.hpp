#pragma once

#include <cstdint>
#include <istream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace toporank {

// An undirected simple graph, normalized: no self-loops, no duplicate
// unordered pairs. Node identifiers are opaque strings mapped to dense
// indices in order of first appearance; only nodes incident to at least
// one kept edge are retained, so every node has degree >= 1.
struct EdgeList {
    std::vector<std::string> node_names;                      // index -> identifier
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges; // first < second

    std::size_t node_count() const noexcept { return node_names.size(); }
    std::size_t edge_count() const noexcept { return edges.size(); }
};

// parse_edge_list output: the normalized graph plus per-category counts of
// dropped lines, surfaced for audit.
struct ParseResult {
    EdgeList graph;
    std::size_t self_loops_dropped = 0;
    std::size_t duplicate_edges_dropped = 0;
};

// Parses line-oriented text: two whitespace-separated node tokens per data
// line; lines starting with '#' and blank lines are skipped. Self-loops and
// duplicate edges are dropped, not fatal.
//
// Throws ParseError (with line number) on a line with != 2 tokens, and
// EmptyInputError when no edges survive.
ParseResult parse_edge_list(std::istream& in);
ParseResult parse_edge_list(std::string_view text);

// One "name name" line per edge, in stored order. Parsing the result yields
// an EdgeList with identical node count, edge count and edge multiset.
std::string serialize_edge_list(const EdgeList& g);

// Per-node degrees; node identity is not retained. Every entry is >= 1 and
// the degrees sum to twice the edge count.
struct DegreeSequence {
    std::vector<int> degrees;

    std::size_t size() const noexcept { return degrees.size(); }
    bool empty() const noexcept { return degrees.empty(); }
};

DegreeSequence degree_sequence(const EdgeList& g);

} // namespace toporank

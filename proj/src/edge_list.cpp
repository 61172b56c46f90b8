#include "toporank/edge_list.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "toporank/errors.hpp"

namespace toporank {

namespace {

std::uint64_t edge_key(std::uint32_t a, std::uint32_t b) {
    return (static_cast<std::uint64_t>(a) << 32) | b;
}

} // namespace

ParseResult parse_edge_list(std::istream& in) {
    std::unordered_map<std::string, std::uint32_t> index_of;
    std::vector<std::string> names; // first-appearance order
    std::unordered_set<std::uint64_t> seen;
    ParseResult result;

    auto intern = [&](std::string&& name) {
        auto [it, inserted] = index_of.try_emplace(std::move(name), static_cast<std::uint32_t>(names.size()));
        if (inserted)
            names.push_back(it->first);
        return it->second;
    };

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream fields(line);
        std::string a, b, extra;
        if (!(fields >> a))
            continue; // blank
        if (a.front() == '#')
            continue; // comment
        if (!(fields >> b) || (fields >> extra))
            throw ParseError("expected two node tokens", line_no);
        std::uint32_t u = intern(std::move(a));
        std::uint32_t v = intern(std::move(b));
        if (u == v) {
            ++result.self_loops_dropped;
            continue;
        }
        if (u > v)
            std::swap(u, v);
        if (!seen.insert(edge_key(u, v)).second) {
            ++result.duplicate_edges_dropped;
            continue;
        }
        result.graph.edges.emplace_back(u, v);
    }

    if (result.graph.edges.empty())
        throw EmptyInputError("empty input: no edges");

    // Keep only nodes incident to a surviving edge, remapped to dense
    // indices in first-appearance order.
    std::vector<std::uint32_t> remap(names.size(), UINT32_MAX);
    for (const auto& [u, v] : result.graph.edges) {
        remap[u] = 0;
        remap[v] = 0;
    }
    std::uint32_t next = 0;
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (remap[i] != UINT32_MAX) {
            remap[i] = next++;
            result.graph.node_names.push_back(names[i]);
        }
    }
    for (auto& [u, v] : result.graph.edges) {
        u = remap[u];
        v = remap[v];
        if (u > v)
            std::swap(u, v);
    }
    return result;
}

ParseResult parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_edge_list(in);
}

std::string serialize_edge_list(const EdgeList& g) {
    std::string out;
    for (const auto& [u, v] : g.edges) {
        out += g.node_names[u];
        out += ' ';
        out += g.node_names[v];
        out += '\n';
    }
    return out;
}

DegreeSequence degree_sequence(const EdgeList& g) {
    DegreeSequence s;
    s.degrees.assign(g.node_count(), 0);
    for (const auto& [u, v] : g.edges) {
        ++s.degrees[u];
        ++s.degrees[v];
    }
    return s;
}

} // namespace toporank

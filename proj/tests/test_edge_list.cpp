#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include <doctest.h>

#include "toporank/edge_list.hpp"
#include "toporank/errors.hpp"

using namespace toporank;

TEST_CASE("parse: path graph") {
    const ParseResult r = parse_edge_list("a b\nb c\n");
    CHECK(r.graph.node_count() == 3);
    CHECK(r.graph.edge_count() == 2);
    CHECK(r.self_loops_dropped == 0);
    CHECK(r.duplicate_edges_dropped == 0);
}

TEST_CASE("parse: duplicates and self-loops are dropped and counted") {
    const ParseResult r = parse_edge_list("a b\nb a\na a\n");
    CHECK(r.graph.node_count() == 2);
    CHECK(r.graph.edge_count() == 1);
    CHECK(r.duplicate_edges_dropped == 1);
    CHECK(r.self_loops_dropped == 1);
}

TEST_CASE("parse: comments and blank lines are skipped") {
    const ParseResult r = parse_edge_list("# comment\na b\n\nc d\n");
    CHECK(r.graph.node_count() == 4);
    CHECK(r.graph.edge_count() == 2);
}

TEST_CASE("parse: malformed line carries its line number") {
    try {
        parse_edge_list("a b\nc\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
    try {
        parse_edge_list("a b c\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 1);
    }
}

TEST_CASE("parse: empty input") {
    CHECK_THROWS_AS(parse_edge_list(""), EmptyInputError);
    CHECK_THROWS_AS(parse_edge_list("# only comments\n\n"), EmptyInputError);
    // A file holding nothing but a self-loop has no usable edges either.
    CHECK_THROWS_AS(parse_edge_list("a a\n"), EmptyInputError);
}

TEST_CASE("parse: node order within a line does not matter") {
    const ParseResult a = parse_edge_list("a b\nc b\n");
    const ParseResult b = parse_edge_list("b a\nb c\n");
    CHECK(a.graph.node_count() == b.graph.node_count());
    CHECK(a.graph.edge_count() == b.graph.edge_count());
    CHECK(parse_edge_list("x y\ny x\n").graph.edge_count() == 1);
}

TEST_CASE("degrees: path graph") {
    const auto s = degree_sequence(parse_edge_list("a b\nb c\n").graph);
    std::vector<int> d = s.degrees;
    std::sort(d.begin(), d.end());
    CHECK(d == std::vector<int>{1, 1, 2});
}

TEST_CASE("degrees: complete graph K4") {
    const auto s =
        degree_sequence(parse_edge_list("a b\na c\na d\nb c\nb d\nc d\n").graph);
    CHECK(s.degrees == std::vector<int>{3, 3, 3, 3});
}

TEST_CASE("degrees: star with five leaves") {
    const auto s =
        degree_sequence(parse_edge_list("hub l1\nhub l2\nhub l3\nhub l4\nhub l5\n").graph);
    std::vector<int> d = s.degrees;
    std::sort(d.begin(), d.end(), std::greater<int>());
    CHECK(d == std::vector<int>{5, 1, 1, 1, 1, 1});
}

namespace {

// Random edge-list text over a small node universe, with self-loops and
// duplicate lines injected.
std::string random_edge_text(std::mt19937& rng, int universe, int lines) {
    std::uniform_int_distribution<int> node(0, universe - 1);
    std::uniform_int_distribution<int> coin(0, 9);
    std::ostringstream out;
    for (int i = 0; i < lines; ++i) {
        const int u = node(rng);
        const int v = coin(rng) == 0 ? u : node(rng); // occasional self-loop
        out << "n" << u << " n" << v << "\n";
        if (coin(rng) < 2)
            out << "n" << v << " n" << u << "\n"; // occasional duplicate
    }
    return out.str();
}

} // namespace

TEST_CASE("property: handshake lemma on random graphs") {
    std::mt19937 rng(7);
    for (int i = 0; i < 50; ++i) {
        std::string text = random_edge_text(rng, 30, 60);
        ParseResult r;
        try {
            r = parse_edge_list(text);
        } catch (const EmptyInputError&) {
            continue;
        }
        const auto s = degree_sequence(r.graph);
        const long long sum = std::accumulate(s.degrees.begin(), s.degrees.end(), 0LL);
        CHECK(sum == 2 * static_cast<long long>(r.graph.edge_count()));
        CHECK(std::all_of(s.degrees.begin(), s.degrees.end(), [](int d) { return d >= 1; }));
        CHECK(s.size() == r.graph.node_count());
    }
}

TEST_CASE("property: serialize then parse is an identity on N, E and edges") {
    std::mt19937 rng(11);
    for (int i = 0; i < 50; ++i) {
        ParseResult first;
        try {
            first = parse_edge_list(random_edge_text(rng, 25, 40));
        } catch (const EmptyInputError&) {
            continue;
        }
        const ParseResult second = parse_edge_list(serialize_edge_list(first.graph));
        CHECK(second.graph.node_count() == first.graph.node_count());
        CHECK(second.graph.edge_count() == first.graph.edge_count());
        CHECK(second.self_loops_dropped == 0);
        CHECK(second.duplicate_edges_dropped == 0);

        auto name_edges = [](const EdgeList& g) {
            std::multiset<std::pair<std::string, std::string>> edges;
            for (const auto& [u, v] : g.edges) {
                std::string a = g.node_names[u], b = g.node_names[v];
                if (b < a)
                    std::swap(a, b);
                edges.emplace(a, b);
            }
            return edges;
        };
        CHECK(name_edges(first.graph) == name_edges(second.graph));
    }
}

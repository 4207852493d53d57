#include <doctest.h>

#include <algorithm>
#include <queue>

#include "edgereg/graph.hpp"
#include "edgereg/io.hpp"

using namespace edgereg;

namespace {

// BFS distances, kept separate from the library's distance matrix.
std::vector<int> bfs(const Graph& g, int s) {
    std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()) + 1, -1);
    std::queue<int> q;
    dist[static_cast<std::size_t>(s)] = 0;
    q.push(s);
    while (!q.empty()) {
        const int u = q.front();
        q.pop();
        for (int v = 1; v <= g.vertex_count(); ++v)
            if (g.has_edge(u, v) && dist[static_cast<std::size_t>(v)] < 0) {
                dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
                q.push(v);
            }
    }
    return dist;
}

}  // namespace

TEST_CASE("families have the expected shape") {
    CHECK(path(5).edge_count() == 4);
    CHECK(cycle(7).edge_count() == 7);
    CHECK(complete(6).edge_count() == 15);
    CHECK(star(4).vertex_count() == 5);
    CHECK(star(4).degree(1) == 4);
    const Graph s = sunflower6();
    CHECK(s.vertex_count() == 12);
    CHECK(s.edge_count() == 21);
    CHECK(is_forest(random_tree(20, 3)));
    CHECK(connected_components(random_tree(20, 3)).size() == 1);
    CHECK(is_forest(random_forest(20, 3)));
}

TEST_CASE("seeded generators are deterministic") {
    CHECK(random_tree(15, 42) == random_tree(15, 42));
    CHECK(random_graph(12, 0.3, 7) == random_graph(12, 0.3, 7));
    CHECK(random_block_graph(14, 9) == random_block_graph(14, 9));
}

TEST_CASE("power matches BFS distances") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const Graph g = random_graph(10, 0.25, seed);
        for (int d = 1; d <= 4; ++d) {
            const Graph p = power(g, d);
            for (int u = 1; u <= 10; ++u) {
                const auto dist = bfs(g, u);
                for (int v = 1; v <= 10; ++v) {
                    const int duv = dist[static_cast<std::size_t>(v)];
                    const bool expected = u != v && duv > 0 && duv <= d;
                    CHECK(p.has_edge(u, v) == expected);
                }
            }
        }
    }
}

TEST_CASE("power of a cycle wraps around") {
    const Graph p = power(cycle(9), 2);
    CHECK(p.edge_count() == 18);
    CHECK(p.has_edge(8, 1));
    CHECK(p.has_edge(9, 2));
    CHECK(power(cycle(5), 2) == complete(5));
}

TEST_CASE("distance witness set") {
    const Graph g = path(6);
    CHECK(distance_witness_set(g, 1, 4) == VertexSet::of({3}));
    const Graph c = cycle(6);
    // two geodesics 1-2-3-4 and 1-6-5-4, both end next to 4
    CHECK(distance_witness_set(c, 1, 4) == VertexSet::of({3, 5}));
}

TEST_CASE("induced subgraph keeps original labels") {
    const Graph g = cycle(8);
    const Graph h = induced_subgraph(g, VertexSet::of({2, 3, 4, 7}));
    CHECK(h.vertex_count() == 4);
    CHECK(h.edge_count() == 2);
    CHECK(h.original_label(4) == 7);
    CHECK(h.local_vertex(3) == 2);
    CHECK(delete_vertices(g, VertexSet::of({1})) == path(7));
}

TEST_CASE("diameter") {
    CHECK(diameter(path(7)) == 6);
    CHECK(diameter(cycle(9)) == 4);
    Graph two(4, {{1, 2}, {3, 4}});
    CHECK_FALSE(diameter(two).has_value());
    CHECK(diameter_info(two).finite_diameter == 1);
}

TEST_CASE("isomorphism") {
    CHECK(is_isomorphic(path(4), Graph(4, {{1, 3}, {3, 2}, {2, 4}})));
    CHECK_FALSE(is_isomorphic(path(4), star(3)));
}

TEST_CASE("graph file round trip") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const Graph g = random_graph(11, 0.4, seed);
        CHECK(parse_graph(format_graph(g)) == g);
    }
    CHECK(parse_graph("# comment\n3 2\n1 2 # edge\n2 3\n") == path(3));
}

TEST_CASE("graph parse errors carry positions") {
    auto position = [](const std::string& text) {
        try {
            parse_graph(text);
        } catch (const ParseError& e) {
            return std::make_pair(e.line(), e.column());
        }
        return std::make_pair(0, 0);
    };
    CHECK(position("3 2\n1 2\n2 1\n").first == 3);
    CHECK(position("3 2\n1 2\n1 2\n").first == 3);
    CHECK(position("3 1\n1 4\n").first == 2);
    CHECK(position("3 2\n1 2\n").first != 0);
    CHECK(position("x 2\n").first == 1);
}

TEST_CASE("ideal file round trip") {
    const MonomialIdeal a(6, {VertexSet::of({1, 2}), VertexSet::of({3}), VertexSet::of({4, 5, 6})});
    CHECK(parse_ideal(format_ideal(a)) == a);
    CHECK(parse_ideal("ring 4\n1 2\n# x\n1 2 3\n") == MonomialIdeal(4, {VertexSet::of({1, 2})}));
    CHECK_THROWS_AS(parse_ideal("ring 3\n1 5\n"), ParseError);
}

TEST_CASE("family specs") {
    CHECK(parse_family_spec("cycle:9@2").build() == power(cycle(9), 2));
    CHECK(parse_family_spec("path:13").build() == path(13));
    CHECK(parse_family_spec("sunflower6").build() == sunflower6());
    for (const char* s : {"path:6@2", "cycle:11", "complete:5", "star:4@3", "sunflower6@2", "tree:12:5",
                          "forest:9:2@2", "block:10:3", "random:10:30:7@2"})
        CHECK(parse_family_spec(s).to_string() == s);
    CHECK_THROWS(parse_family_spec("cycle"));
    CHECK_THROWS(parse_family_spec("hexagon:5"));
    CHECK_THROWS(parse_family_spec("path:5@0"));
}

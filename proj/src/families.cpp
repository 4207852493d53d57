#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>
#include <string>

#include "edgereg/graph.hpp"

namespace edgereg {

namespace {

void require_size(int n, int min_n, const char* what) {
    if (n < min_n || n > kMaxVertices)
        throw std::invalid_argument(std::string(what) + ": vertex count must be in [" + std::to_string(min_n) +
                                    ", 64], got " + std::to_string(n));
}

}  // namespace

Graph path(int n) {
    require_size(n, 1, "path");
    std::vector<Edge> edges;
    for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
    return Graph(n, edges);
}

Graph cycle(int n) {
    require_size(n, 3, "cycle");
    std::vector<Edge> edges;
    for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(1, n);
    return Graph(n, edges);
}

Graph complete(int n) {
    require_size(n, 1, "complete");
    std::vector<Edge> edges;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) edges.emplace_back(u, v);
    return Graph(n, edges);
}

Graph star(int leaves) {
    require_size(leaves + 1, 1, "star");
    std::vector<Edge> edges;
    for (int v = 2; v <= leaves + 1; ++v) edges.emplace_back(1, v);
    return Graph(leaves + 1, edges);
}

// Inner hexagon 1..6 with the triangle {2,4,6}; petal 6+i sits on the inner
// vertices i-1, i, i+1 (cyclically on 1..6).
Graph sunflower6() {
    // Inner hexagon 1..6 plus the triangle {2,4,6}; petal 6+i hangs on the
    // hexagon edge {i, i+1}.
    std::vector<Edge> edges;
    for (int i = 1; i <= 6; ++i) edges.emplace_back(i, i % 6 + 1);
    edges.insert(edges.end(), {{2, 4}, {4, 6}, {2, 6}});
    for (int i = 1; i <= 6; ++i) {
        edges.emplace_back(i, 6 + i);
        edges.emplace_back(i % 6 + 1, 6 + i);
    }
    return Graph(12, edges);
}

Graph random_tree(int n, std::uint64_t seed) {
    require_size(n, 1, "random_tree");
    if (n == 1) return Graph(1);
    if (n == 2) return Graph(2, {{1, 2}});

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(1, n);
    std::vector<int> pruefer(n - 2);
    for (int& x : pruefer) x = pick(rng);

    std::vector<int> degree(n + 1, 1);
    for (int x : pruefer) ++degree[x];
    std::set<int> leaves;
    for (int v = 1; v <= n; ++v)
        if (degree[v] == 1) leaves.insert(v);

    std::vector<Edge> edges;
    for (int x : pruefer) {
        const int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        edges.emplace_back(std::min(leaf, x), std::max(leaf, x));
        if (--degree[x] == 1) leaves.insert(x);
    }
    const int a = *leaves.begin();
    const int b = *std::next(leaves.begin());
    edges.emplace_back(a, b);
    return Graph(n, edges);
}

Graph random_forest(int n, std::uint64_t seed) {
    const Graph tree = random_tree(n, seed);
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    std::bernoulli_distribution drop(0.2);
    std::vector<Edge> kept;
    for (const Edge& e : tree.edges())
        if (!drop(rng)) kept.push_back(e);
    return Graph(n, kept);
}

Graph random_graph(int n, double edge_probability, std::uint64_t seed) {
    require_size(n, 1, "random_graph");
    if (!(edge_probability >= 0.0 && edge_probability <= 1.0))
        throw std::invalid_argument("edge probability must be in [0, 1]");
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(edge_probability);
    std::vector<Edge> edges;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (coin(rng)) edges.emplace_back(u, v);
    return Graph(n, edges);
}

Graph random_block_graph(int n, std::uint64_t seed) {
    require_size(n, 1, "random_block_graph");
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    int placed = 1;
    while (placed < n) {
        const int anchor = std::uniform_int_distribution<int>(1, placed)(rng);
        const int block = std::uniform_int_distribution<int>(2, std::min(4, n - placed + 1))(rng);
        std::vector<int> members{anchor};
        for (int i = 1; i < block; ++i) members.push_back(++placed);
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = i + 1; j < members.size(); ++j)
                edges.emplace_back(std::min(members[i], members[j]), std::max(members[i], members[j]));
    }
    return Graph(n, edges);
}

}  // namespace edgereg

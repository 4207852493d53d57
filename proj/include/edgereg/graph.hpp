#ifndef EDGEREG_GRAPH_HPP
#define EDGEREG_GRAPH_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "edgereg/vertex_set.hpp"

namespace edgereg {

using Edge = std::pair<int, int>;

/// Simple undirected graph on vertices 1..n (0 <= n <= 64).
///
/// Immutable after construction. Graphs produced by induced_subgraph() are
/// relabelled to 1..|W| and remember the label each vertex had in the parent;
/// equality compares structure only, never the label map.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, std::span<const Edge> edges);
    Graph(int n, std::initializer_list<Edge> edges);

    int vertex_count() const { return n_; }
    int edge_count() const;
    VertexSet vertices() const { return VertexSet::prefix(n_); }

    bool has_edge(int u, int v) const;
    VertexSet neighbors(int v) const;
    VertexSet closed_neighborhood(int v) const;
    VertexSet neighborhood(VertexSet w) const;
    VertexSet closed_neighborhood(VertexSet w) const;
    int degree(int v) const { return neighbors(v).size(); }

    /// All edges {u,v}, u < v, sorted lexicographically.
    std::vector<Edge> edges() const;

    /// Label of v in the graph this one was cut out of (identity otherwise).
    int original_label(int v) const;
    const std::vector<int>& original_labels() const { return labels_; }
    /// Local vertex carrying the given original label, or 0.
    int local_vertex(int original) const;

    bool operator==(const Graph& other) const;

private:
    friend Graph induced_subgraph(const Graph& g, VertexSet w);
    void add_edge(int u, int v);
    void check_vertex(int v) const;

    int n_ = 0;
    std::array<VertexSet, kMaxVertices> adj_{};
    std::vector<int> labels_;
};

/// Hop-count distances; kUnreachable marks pairs in different components.
class DistanceMatrix {
public:
    static constexpr int kUnreachable = -1;

    explicit DistanceMatrix(int n) : n_(n), dist_(static_cast<std::size_t>(n) * n, kUnreachable) {}

    int size() const { return n_; }
    int at(int u, int v) const { return dist_[index(u, v)]; }
    bool reachable(int u, int v) const { return at(u, v) != kUnreachable; }
    void set(int u, int v, int d) { dist_[index(u, v)] = d; }

private:
    std::size_t index(int u, int v) const { return static_cast<std::size_t>(u - 1) * n_ + (v - 1); }

    int n_;
    std::vector<int> dist_;
};

// Families.
Graph path(int n);
Graph cycle(int n);
Graph complete(int n);
Graph star(int leaves);
Graph sunflower6();

// Seeded instance generators.
Graph random_tree(int n, std::uint64_t seed);
Graph random_forest(int n, std::uint64_t seed);
Graph random_graph(int n, double edge_probability, std::uint64_t seed);
/// Tree of cliques: each new block is a clique glued to one existing vertex.
Graph random_block_graph(int n, std::uint64_t seed);

DistanceMatrix distance_matrix(const Graph& g);
Graph power(const Graph& g, int d);

Graph induced_subgraph(const Graph& g, VertexSet w);
Graph delete_vertices(const Graph& g, VertexSet w);
std::vector<VertexSet> connected_components(const Graph& g);
/// Largest finite distance in g, and whether every pair is reachable.
struct DiameterInfo {
    int finite_diameter = 0;
    bool connected = true;
};
DiameterInfo diameter_info(const Graph& g);
/// Diameter, or std::nullopt when g is disconnected (infinite diameter).
std::optional<int> diameter(const Graph& g);

/// { w : dist(u,w) = d-1, dist(w,v) = 1 } where d = dist(u,v) >= 2.
VertexSet distance_witness_set(const Graph& g, int u, int v);
VertexSet distance_witness_set(const Graph& g, const DistanceMatrix& dist, int u, int v);

bool is_forest(const Graph& g);
bool is_isomorphic(const Graph& a, const Graph& b);

}  // namespace edgereg

#endif

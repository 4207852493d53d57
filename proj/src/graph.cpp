#include "edgereg/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <string>

namespace edgereg {

namespace {

void check_size(int n) {
    if (n < 0 || n > kMaxVertices)
        throw std::invalid_argument("graph size must be in [0, 64], got " + std::to_string(n));
}

}  // namespace

Graph::Graph(int n) : n_(n) {
    check_size(n);
    labels_.resize(n);
    std::iota(labels_.begin(), labels_.end(), 1);
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
}

Graph::Graph(int n, std::initializer_list<Edge> edges)
    : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

void Graph::check_vertex(int v) const {
    if (v < 1 || v > n_)
        throw std::out_of_range("vertex " + std::to_string(v) + " outside 1.." + std::to_string(n_));
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    adj_[u - 1].insert(v);
    adj_[v - 1].insert(u);
}

int Graph::edge_count() const {
    int twice = 0;
    for (int v = 1; v <= n_; ++v) twice += adj_[v - 1].size();
    return twice / 2;
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return adj_[u - 1].contains(v);
}

VertexSet Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[v - 1];
}

VertexSet Graph::closed_neighborhood(int v) const { return neighbors(v) | VertexSet::of({v}); }

VertexSet Graph::neighborhood(VertexSet w) const {
    VertexSet out;
    for (int v : w) out |= neighbors(v);
    return out;
}

VertexSet Graph::closed_neighborhood(VertexSet w) const { return neighborhood(w) | w; }

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (int u = 1; u <= n_; ++u)
        for (int v : adj_[u - 1])
            if (u < v) out.emplace_back(u, v);
    return out;
}

int Graph::original_label(int v) const {
    check_vertex(v);
    return labels_[v - 1];
}

int Graph::local_vertex(int original) const {
    auto it = std::find(labels_.begin(), labels_.end(), original);
    return it == labels_.end() ? 0 : static_cast<int>(it - labels_.begin()) + 1;
}

bool Graph::operator==(const Graph& other) const {
    if (n_ != other.n_) return false;
    for (int v = 0; v < n_; ++v)
        if (adj_[v] != other.adj_[v]) return false;
    return true;
}

DistanceMatrix distance_matrix(const Graph& g) {
    const int n = g.vertex_count();
    DistanceMatrix dist(n);
    for (int s = 1; s <= n; ++s) {
        // Frontier BFS on bitsets.
        VertexSet seen = VertexSet::of({s});
        VertexSet frontier = seen;
        dist.set(s, s, 0);
        for (int level = 1; !frontier.empty(); ++level) {
            VertexSet next = g.neighborhood(frontier) - seen;
            for (int v : next) dist.set(s, v, level);
            seen |= next;
            frontier = next;
        }
    }
    return dist;
}

Graph power(const Graph& g, int d) {
    if (d < 1) throw std::invalid_argument("graph power exponent must be >= 1");
    const int n = g.vertex_count();
    const DistanceMatrix dist = distance_matrix(g);
    std::vector<Edge> edges;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (dist.reachable(u, v) && dist.at(u, v) <= d) edges.emplace_back(u, v);
    Graph out(n, edges);
    return out;
}

Graph induced_subgraph(const Graph& g, VertexSet w) {
    if (!w.subset_of(g.vertices())) throw std::out_of_range("vertex set " + w.to_string() + " not inside graph");
    const std::vector<int> keep = w.to_vector();
    std::vector<int> local(g.vertex_count() + 1, 0);
    for (std::size_t i = 0; i < keep.size(); ++i) local[keep[i]] = static_cast<int>(i) + 1;

    std::vector<Edge> edges;
    for (int u : keep)
        for (int v : g.neighbors(u) & w)
            if (u < v) edges.emplace_back(local[u], local[v]);
    Graph out(static_cast<int>(keep.size()), edges);
    for (std::size_t i = 0; i < keep.size(); ++i) out.labels_[i] = g.original_label(keep[i]);
    return out;
}

Graph delete_vertices(const Graph& g, VertexSet w) { return induced_subgraph(g, g.vertices() - w); }

std::vector<VertexSet> connected_components(const Graph& g) {
    std::vector<VertexSet> out;
    VertexSet remaining = g.vertices();
    while (!remaining.empty()) {
        VertexSet comp = VertexSet::of({remaining.min()});
        VertexSet frontier = comp;
        while (!frontier.empty()) {
            frontier = g.neighborhood(frontier) - comp;
            comp |= frontier;
        }
        out.push_back(comp);
        remaining -= comp;
    }
    return out;
}

DiameterInfo diameter_info(const Graph& g) {
    DiameterInfo info;
    const DistanceMatrix dist = distance_matrix(g);
    for (int u = 1; u <= g.vertex_count(); ++u)
        for (int v = u + 1; v <= g.vertex_count(); ++v) {
            if (!dist.reachable(u, v))
                info.connected = false;
            else
                info.finite_diameter = std::max(info.finite_diameter, dist.at(u, v));
        }
    return info;
}

std::optional<int> diameter(const Graph& g) {
    const DiameterInfo info = diameter_info(g);
    if (!info.connected) return std::nullopt;
    return info.finite_diameter;
}

VertexSet distance_witness_set(const Graph& g, const DistanceMatrix& dist, int u, int v) {
    if (!dist.reachable(u, v) || dist.at(u, v) < 2)
        throw std::domain_error("distance witness set needs 2 <= dist(u,v) < infinity");
    const int d = dist.at(u, v);
    VertexSet out;
    for (int w : g.neighbors(v))
        if (dist.at(u, w) == d - 1) out.insert(w);
    return out;
}

VertexSet distance_witness_set(const Graph& g, int u, int v) {
    return distance_witness_set(g, distance_matrix(g), u, v);
}

bool is_forest(const Graph& g) {
    return g.edge_count() + static_cast<int>(connected_components(g).size()) == g.vertex_count();
}

namespace {

// Backtracking isomorphism search with degree-sequence pruning.
class IsomorphismSearch {
public:
    IsomorphismSearch(const Graph& a, const Graph& b) : a_(a), b_(b), map_(a.vertex_count() + 1, 0) {}

    bool run() {
        if (a_.vertex_count() != b_.vertex_count() || a_.edge_count() != b_.edge_count()) return false;
        std::vector<int> da, db;
        for (int v = 1; v <= a_.vertex_count(); ++v) {
            da.push_back(a_.degree(v));
            db.push_back(b_.degree(v));
        }
        std::sort(da.begin(), da.end());
        std::sort(db.begin(), db.end());
        if (da != db) return false;
        return extend(1, VertexSet());
    }

private:
    bool extend(int v, VertexSet used) {
        if (v > a_.vertex_count()) return true;
        for (int image = 1; image <= b_.vertex_count(); ++image) {
            if (used.contains(image) || a_.degree(v) != b_.degree(image)) continue;
            bool ok = true;
            for (int u = 1; u < v && ok; ++u)
                ok = a_.has_edge(u, v) == b_.has_edge(map_[u], image);
            if (!ok) continue;
            map_[v] = image;
            if (extend(v + 1, used | VertexSet::of({image}))) return true;
        }
        return false;
    }

    const Graph& a_;
    const Graph& b_;
    std::vector<int> map_;
};

}  // namespace

bool is_isomorphic(const Graph& a, const Graph& b) { return IsomorphismSearch(a, b).run(); }

}  // namespace edgereg

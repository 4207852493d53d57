#include "edgereg/invariants.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <stdexcept>

namespace edgereg {

VertexSet Matching::vertices() const {
    VertexSet out;
    for (auto [u, v] : edges) out |= VertexSet::of({u, v});
    return out;
}

bool is_matching(const Graph& g, const Matching& m) {
    VertexSet used;
    for (auto [u, v] : m.edges) {
        if (u < 1 || v < 1 || u > g.vertex_count() || v > g.vertex_count() || !g.has_edge(u, v)) return false;
        const VertexSet pair = VertexSet::of({u, v});
        if (used.intersects(pair)) return false;
        used |= pair;
    }
    return true;
}

bool is_induced_matching(const Graph& g, const Matching& m) {
    if (!is_matching(g, m)) return false;
    const VertexSet covered = m.vertices();
    for (auto [u, v] : m.edges) {
        if ((g.neighbors(u) & covered) != VertexSet::of({v})) return false;
        if ((g.neighbors(v) & covered) != VertexSet::of({u})) return false;
    }
    return true;
}

namespace {

class InducedMatchingSearch {
public:
    explicit InducedMatchingSearch(const Graph& g) : g_(g) {}

    InducedMatchingResult run() {
        std::vector<Edge> chosen;
        search(g_.vertices(), chosen);
        return {static_cast<int>(best_.size()), Matching{best_}};
    }

private:
    // Upper bound on im(g[avail]): each matched edge uses two vertices and
    // one edge of g[avail].
    int bound(VertexSet avail) const {
        int edges_twice = 0;
        for (int v : avail) edges_twice += (g_.neighbors(v) & avail).size();
        return std::min(avail.size() / 2, edges_twice / 2);
    }

    void search(VertexSet avail, std::vector<Edge>& chosen) {
        // Vertices without neighbours in avail cannot be matched any more.
        VertexSet live;
        for (int v : avail)
            if ((g_.neighbors(v) & avail).size() > 0) live.insert(v);
        if (chosen.size() > best_.size()) best_ = chosen;
        if (live.empty()) return;
        if (static_cast<int>(chosen.size()) + bound(live) <= static_cast<int>(best_.size())) return;

        const int v = live.min();
        for (int u : g_.neighbors(v) & live) {
            chosen.emplace_back(std::min(u, v), std::max(u, v));
            search(live - g_.closed_neighborhood(VertexSet::of({u, v})), chosen);
            chosen.pop_back();
        }
        search(live - VertexSet::of({v}), chosen);
    }

    const Graph& g_;
    std::vector<Edge> best_;
};

}  // namespace

InducedMatchingResult induced_matching(const Graph& g) {
    if (g.vertex_count() > kMaxMatchingVertices)
        throw CapacityError("induced matching search supports at most " + std::to_string(kMaxMatchingVertices) +
                            " vertices, got " + std::to_string(g.vertex_count()));
    InducedMatchingResult result = InducedMatchingSearch(g).run();
    std::sort(result.witness.edges.begin(), result.witness.edges.end());
    if (!is_induced_matching(g, result.witness)) throw std::logic_error("induced matching witness failed verification");
    return result;
}

int induced_matching_number(const Graph& g) { return induced_matching(g).size; }

int im_path_power(int n, int d) {
    if (n < 2 || d < 1) throw std::domain_error("im_path_power needs n >= 2 and d >= 1");
    return (n + d) / (d + 2);
}

int im_cycle_power(int n, int d) {
    if (n < 3 || d < 1) throw std::domain_error("im_cycle_power needs n >= 3 and d >= 1");
    static std::mutex lock;
    static std::map<std::pair<int, int>, int> memo;
    {
        std::lock_guard guard(lock);
        if (auto it = memo.find({n, d}); it != memo.end()) return it->second;
    }
    const int value = induced_matching_number(power(cycle(n), d));
    std::lock_guard guard(lock);
    memo[{n, d}] = value;
    return value;
}

bool verify_elimination_order(const Graph& g, const std::vector<int>& order) {
    const int n = g.vertex_count();
    if (static_cast<int>(order.size()) != n) return false;
    std::vector<int> position(n + 1, -1);
    for (std::size_t i = 0; i < order.size(); ++i) {
        const int v = order[i];
        if (v < 1 || v > n || position[v] != -1) return false;
        position[v] = static_cast<int>(i);
    }
    VertexSet later = g.vertices();
    for (int v : order) {
        later.erase(v);
        const VertexSet up = g.neighbors(v) & later;
        for (int u : up)
            if (!(up - VertexSet::of({u})).subset_of(g.neighbors(u))) return false;
    }
    return true;
}

bool verify_induced_cycle(const Graph& g, const std::vector<int>& cycle) {
    const std::size_t len = cycle.size();
    if (len < 4) return false;
    VertexSet seen;
    for (int v : cycle) {
        if (v < 1 || v > g.vertex_count() || seen.contains(v)) return false;
        seen.insert(v);
    }
    for (std::size_t i = 0; i < len; ++i) {
        const int v = cycle[i];
        const VertexSet expected = VertexSet::of({cycle[(i + 1) % len], cycle[(i + len - 1) % len]});
        if ((g.neighbors(v) & seen) != expected) return false;
    }
    return true;
}

namespace {

// Shortest a-b path avoiding `blocked`; empty when none exists.
std::vector<int> shortest_path(const Graph& g, int a, int b, VertexSet blocked) {
    std::vector<int> parent(g.vertex_count() + 1, 0);
    std::deque<int> queue{a};
    VertexSet seen = VertexSet::of({a}) | blocked;
    while (!queue.empty()) {
        const int x = queue.front();
        queue.pop_front();
        if (x == b) break;
        for (int y : g.neighbors(x) - seen) {
            seen.insert(y);
            parent[y] = x;
            queue.push_back(y);
        }
    }
    if (b != a && parent[b] == 0) return {};
    std::vector<int> out{b};
    while (out.back() != a) out.push_back(parent[out.back()]);
    std::reverse(out.begin(), out.end());
    return out;
}

// Induced cycle through v with v's cycle neighbours a and b (non-adjacent).
std::vector<int> cycle_through(const Graph& g, int v, int a, int b) {
    const VertexSet blocked = g.closed_neighborhood(v) - VertexSet::of({a, b});
    std::vector<int> p = shortest_path(g, a, b, blocked);
    if (p.empty()) return {};
    p.insert(p.begin(), v);
    return p;
}

std::vector<int> find_induced_cycle(const Graph& g, int hint_v, int hint_a, int hint_b) {
    if (hint_v != 0) {
        auto c = cycle_through(g, hint_v, hint_a, hint_b);
        if (verify_induced_cycle(g, c)) return c;
    }
    for (int v = 1; v <= g.vertex_count(); ++v) {
        const std::vector<int> nb = g.neighbors(v).to_vector();
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                if (g.has_edge(nb[i], nb[j])) continue;
                auto c = cycle_through(g, v, nb[i], nb[j]);
                if (verify_induced_cycle(g, c)) return c;
            }
    }
    return {};
}

}  // namespace

ChordalityResult chordality(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> weight(n + 1, 0);
    VertexSet unvisited = g.vertices();
    std::vector<int> visit;
    while (!unvisited.empty()) {
        int pick = 0;
        for (int v : unvisited)
            if (pick == 0 || weight[v] > weight[pick]) pick = v;
        visit.push_back(pick);
        unvisited.erase(pick);
        for (int u : g.neighbors(pick) & unvisited) ++weight[u];
    }

    ChordalityResult result;
    std::vector<int> order(visit.rbegin(), visit.rend());
    // A vertex whose earlier-visited neighbours are not a clique breaks the order.
    VertexSet later = g.vertices();
    for (int v : order) {
        later.erase(v);
        const VertexSet up = g.neighbors(v) & later;
        for (int a : up) {
            const VertexSet missing = up - g.closed_neighborhood(a);
            if (!missing.empty()) {
                result.chordal = false;
                result.induced_cycle = find_induced_cycle(g, v, a, missing.min());
                if (!verify_induced_cycle(g, result.induced_cycle))
                    throw std::logic_error("non-chordal graph without a verifiable induced cycle");
                return result;
            }
        }
    }
    result.chordal = true;
    result.elimination_order = std::move(order);
    if (!verify_elimination_order(g, result.elimination_order))
        throw std::logic_error("elimination ordering failed verification");
    return result;
}

bool is_chordal(const Graph& g) { return chordality(g).chordal; }

int reg_path_power_formula(int n, int d) {
    if (n < 1 || d < 1) throw std::domain_error("reg_path_power_formula needs n >= 1 and d >= 1");
    return n == 1 ? 0 : (n + d) / (d + 2);
}

std::string to_string(CycleCase c) {
    switch (c) {
        case CycleCase::Complete: return "complete";
        case CycleCase::Two: return "two";
        case CycleCase::Floor: return "floor";
    }
    return "?";
}

CycleFormula reg_cycle_power_formula(int n, int d) {
    if (n < 3 || d < 1) throw std::domain_error("reg_cycle_power_formula needs n >= 3 and d >= 1");
    if (n <= 2 * d + 2) return {1, CycleCase::Complete};
    if (n == 2 * d + 3) return {2, CycleCase::Two};
    return {n / (d + 2), CycleCase::Floor};
}

std::string to_string(RegularityMethod m) {
    switch (m) {
        case RegularityMethod::ClosedForm: return "closed-form";
        case RegularityMethod::ChordalFastPath: return "chordal-fast-path";
        case RegularityMethod::Hochster: return "hochster";
        case RegularityMethod::LcmLattice: return "lcm";
    }
    return "?";
}

RegularityResult regularity_of_graph(const Graph& g, const EngineOptions& options, RegularityMode mode) {
    RegularityResult result;
    if (mode == RegularityMode::Auto) {
        ChordalityResult chordal = chordality(g);
        if (chordal.chordal) {
            InducedMatchingResult im = induced_matching(g);
            result.value = im.size;
            result.method = RegularityMethod::ChordalFastPath;
            result.witness = std::move(im.witness);
            result.elimination_order = std::move(chordal.elimination_order);
            return result;
        }
    }
    const MonomialIdeal ideal = edge_ideal(g);
    if (mode == RegularityMode::ForceLcm) {
        result.value = betti_table_lcm_lattice(ideal, options).regularity();
        result.method = RegularityMethod::LcmLattice;
    } else {
        result.value = betti_table_hochster(ideal, options).regularity();
        result.method = RegularityMethod::Hochster;
    }
    return result;
}

}  // namespace edgereg

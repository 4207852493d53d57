#include <algorithm>
#include <stdexcept>

#include "edgereg/homology.hpp"

namespace edgereg {

namespace {

std::vector<VertexSet> minimal_sets(std::vector<VertexSet> sets) {
    std::sort(sets.begin(), sets.end(), [](VertexSet a, VertexSet b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    std::vector<VertexSet> out;
    for (VertexSet s : sets)
        if (std::none_of(out.begin(), out.end(), [s](VertexSet o) { return o.subset_of(s); })) out.push_back(s);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<VertexSet> maximal_sets(std::vector<VertexSet> sets) {
    std::sort(sets.begin(), sets.end(), [](VertexSet a, VertexSet b) {
        return a.size() != b.size() ? a.size() > b.size() : a < b;
    });
    std::vector<VertexSet> out;
    for (VertexSet s : sets)
        if (std::none_of(out.begin(), out.end(), [s](VertexSet o) { return s.subset_of(o); })) out.push_back(s);
    std::sort(out.begin(), out.end());
    return out;
}

void check_ground(int ground) {
    if (ground < 0 || ground > kMaxVertices) throw std::invalid_argument("complex ground set must be 0..64");
}

}  // namespace

SimplicialComplex SimplicialComplex::void_complex(int ground) {
    check_ground(ground);
    SimplicialComplex c;
    c.ground_ = ground;
    c.void_ = true;
    return c;
}

SimplicialComplex SimplicialComplex::irrelevant(int ground) { return from_nonfaces(ground, VertexSet(), {}); }

SimplicialComplex SimplicialComplex::simplex(int ground, VertexSet vertices) {
    return from_nonfaces(ground, vertices, {});
}

SimplicialComplex SimplicialComplex::from_nonfaces(int ground, VertexSet vertices, std::vector<VertexSet> nonfaces) {
    check_ground(ground);
    if (!vertices.subset_of(VertexSet::prefix(ground))) throw std::invalid_argument("vertex outside ground set");
    SimplicialComplex c;
    c.ground_ = ground;
    nonfaces = minimal_sets(std::move(nonfaces));
    if (!nonfaces.empty() && nonfaces.front().empty()) {
        c.void_ = true;
        return c;
    }
    for (VertexSet nf : nonfaces)
        if (nf.size() == 1) vertices -= nf;
    c.vertices_ = vertices;
    for (VertexSet nf : nonfaces)
        if (nf.size() >= 2 && nf.subset_of(vertices)) c.generators_.push_back(nf);
    return c;
}

SimplicialComplex SimplicialComplex::from_facets(int ground, std::vector<VertexSet> facets) {
    check_ground(ground);
    SimplicialComplex c;
    c.ground_ = ground;
    c.by_facets_ = true;
    if (facets.empty()) {
        c.void_ = true;
        return c;
    }
    for (VertexSet f : facets) {
        if (!f.subset_of(VertexSet::prefix(ground))) throw std::invalid_argument("facet outside ground set");
        c.vertices_ |= f;
    }
    c.generators_ = maximal_sets(std::move(facets));
    return c;
}

bool SimplicialComplex::is_irrelevant() const { return !void_ && vertices_.empty(); }

bool SimplicialComplex::is_face(VertexSet s) const {
    if (void_ || !s.subset_of(vertices_)) return false;
    if (by_facets_)
        return std::any_of(generators_.begin(), generators_.end(), [s](VertexSet f) { return s.subset_of(f); });
    return std::none_of(generators_.begin(), generators_.end(), [s](VertexSet nf) { return nf.subset_of(s); });
}

VertexSet SimplicialComplex::vertices() const { return void_ ? VertexSet() : vertices_; }

int SimplicialComplex::dimension() const {
    if (void_) return -2;
    int best = 0;
    for (const auto& group : faces_by_size())
        if (!group.empty()) best = group.front().size();
    return best - 1;
}

std::vector<std::vector<VertexSet>> SimplicialComplex::faces_by_size() const {
    std::vector<std::vector<VertexSet>> out;
    if (void_) return out;
    out.resize(1);
    out[0].push_back(VertexSet());

    const std::vector<int> order = vertices_.to_vector();
    // blockers[v]: for each minimal non-face containing v, the rest of it.
    std::vector<std::vector<VertexSet>> blockers(kMaxVertices + 1);
    if (!by_facets_)
        for (VertexSet nf : generators_)
            for (int v : nf) blockers[v].push_back(nf - VertexSet::of({v}));

    // Depth-first extension by increasing vertex label.
    std::vector<std::pair<VertexSet, std::size_t>> stack{{VertexSet(), 0}};
    while (!stack.empty()) {
        auto [face, next] = stack.back();
        stack.pop_back();
        for (std::size_t i = next; i < order.size(); ++i) {
            const int v = order[i];
            const VertexSet grown = face | VertexSet::of({v});
            bool ok;
            if (by_facets_) {
                ok = std::any_of(generators_.begin(), generators_.end(),
                                 [grown](VertexSet f) { return grown.subset_of(f); });
            } else {
                ok = std::none_of(blockers[v].begin(), blockers[v].end(),
                                  [face](VertexSet rest) { return rest.subset_of(face); });
            }
            if (!ok) continue;
            const std::size_t size = static_cast<std::size_t>(grown.size());
            if (out.size() <= size) out.resize(size + 1);
            out[size].push_back(grown);
            stack.emplace_back(grown, i + 1);
        }
    }
    for (auto& group : out) std::sort(group.begin(), group.end());
    return out;
}

std::vector<VertexSet> SimplicialComplex::facets() const {
    if (void_) return {};
    if (by_facets_) return generators_;
    std::vector<VertexSet> all;
    for (const auto& group : faces_by_size()) all.insert(all.end(), group.begin(), group.end());
    return maximal_sets(std::move(all));
}

int SimplicialComplex::cone_point() const {
    if (void_) return 0;
    for (int v : vertices_) {
        bool apex;
        if (by_facets_)
            apex = std::all_of(generators_.begin(), generators_.end(), [v](VertexSet f) { return f.contains(v); });
        else
            apex = std::none_of(generators_.begin(), generators_.end(), [v](VertexSet nf) { return nf.contains(v); });
        if (apex) return v;
    }
    return 0;
}

SimplicialComplex independence_complex(const Graph& g) {
    std::vector<VertexSet> nonfaces;
    for (auto [u, v] : g.edges()) nonfaces.push_back(VertexSet::of({u, v}));
    return SimplicialComplex::from_nonfaces(g.vertex_count(), g.vertices(), std::move(nonfaces));
}

SimplicialComplex stanley_reisner_complex(const MonomialIdeal& a, bool* flagged_unit) {
    if (flagged_unit) *flagged_unit = a.is_unit();
    return SimplicialComplex::from_nonfaces(a.ground(), VertexSet::prefix(a.ground()), a.generators());
}

SimplicialComplex restrict(const SimplicialComplex& c, VertexSet w) {
    if (!w.subset_of(VertexSet::prefix(c.ground()))) throw std::invalid_argument("restriction set outside ground");
    if (c.is_void()) return SimplicialComplex::void_complex(c.ground());
    if (c.uses_facets()) {
        std::vector<VertexSet> cut;
        for (VertexSet f : c.generators()) cut.push_back(f & w);
        return SimplicialComplex::from_facets(c.ground(), std::move(cut));
    }
    std::vector<VertexSet> kept;
    for (VertexSet nf : c.generators())
        if (nf.subset_of(w)) kept.push_back(nf);
    return SimplicialComplex::from_nonfaces(c.ground(), c.vertices() & w, std::move(kept));
}

}  // namespace edgereg

#include "edgereg/ideal.hpp"

#include <algorithm>
#include <stdexcept>

namespace edgereg {

namespace {

std::vector<VertexSet> minimalize(std::vector<VertexSet> gens) {
    std::sort(gens.begin(), gens.end(), [](VertexSet a, VertexSet b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    std::vector<VertexSet> kept;
    for (VertexSet g : gens) {
        const bool redundant =
            std::any_of(kept.begin(), kept.end(), [g](VertexSet k) { return k.subset_of(g); });
        if (!redundant) kept.push_back(g);
    }
    std::sort(kept.begin(), kept.end());
    return kept;
}

void require_same_ground(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (a.ground() != b.ground())
        throw std::invalid_argument("ideals live in different rings (" + std::to_string(a.ground()) + " vs " +
                                    std::to_string(b.ground()) + " variables)");
}

}  // namespace

MonomialIdeal::MonomialIdeal(int ground) : ground_(ground) {
    if (ground < 0 || ground > kMaxVertices) throw std::invalid_argument("ring must have 0..64 variables");
}

MonomialIdeal::MonomialIdeal(int ground, std::vector<VertexSet> generators) : MonomialIdeal(ground) {
    const VertexSet ring = VertexSet::prefix(ground);
    for (VertexSet g : generators)
        if (!g.subset_of(ring))
            throw std::invalid_argument("generator " + g.to_string() + " uses variables outside the ring");
    gens_ = minimalize(std::move(generators));
}

MonomialIdeal MonomialIdeal::variables(int ground, VertexSet vars) {
    std::vector<VertexSet> gens;
    for (int v : vars) gens.push_back(VertexSet::of({v}));
    return MonomialIdeal(ground, std::move(gens));
}

bool MonomialIdeal::contains_monomial(VertexSet s) const {
    return std::any_of(gens_.begin(), gens_.end(), [s](VertexSet g) { return g.subset_of(s); });
}

MonomialIdeal MonomialIdeal::embed(int new_ground) const {
    if (new_ground < ground_) throw std::invalid_argument("cannot embed into a smaller ring");
    MonomialIdeal out(new_ground);
    out.gens_ = gens_;
    return out;
}

std::string MonomialIdeal::to_string() const {
    if (is_zero()) return "(0)";
    if (is_unit()) return "(1)";
    std::string out = "(";
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (i) out += ", ";
        bool first = true;
        for (int v : gens_[i]) {
            if (!first) out += '*';
            out += "x" + std::to_string(v);
            first = false;
        }
    }
    return out + ")";
}

MonomialIdeal edge_ideal(const Graph& g) { return edge_ideal(g, g.vertex_count()); }

MonomialIdeal edge_ideal(const Graph& g, int ground) {
    if (ground < g.vertex_count()) throw std::invalid_argument("ring smaller than the graph");
    std::vector<VertexSet> gens;
    for (auto [u, v] : g.edges()) gens.push_back(VertexSet::of({u, v}));
    return MonomialIdeal(ground, std::move(gens));
}

MonomialIdeal edge_ideal_on(const Graph& g, VertexSet w) {
    std::vector<VertexSet> gens;
    for (auto [u, v] : g.edges())
        if (w.contains(u) && w.contains(v)) gens.push_back(VertexSet::of({u, v}));
    return MonomialIdeal(g.vertex_count(), std::move(gens));
}

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
    require_same_ground(a, b);
    std::vector<VertexSet> gens = a.generators();
    gens.insert(gens.end(), b.generators().begin(), b.generators().end());
    return MonomialIdeal(a.ground(), std::move(gens));
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
    require_same_ground(a, b);
    std::vector<VertexSet> gens;
    gens.reserve(a.generator_count() * b.generator_count());
    for (VertexSet u : a.generators())
        for (VertexSet v : b.generators()) gens.push_back(u | v);
    return MonomialIdeal(a.ground(), std::move(gens));
}

MonomialIdeal colon(const MonomialIdeal& a, SquarefreeMonomial f) {
    std::vector<VertexSet> gens;
    gens.reserve(a.generator_count());
    for (VertexSet u : a.generators()) gens.push_back(u - f.vars);
    return MonomialIdeal(a.ground(), std::move(gens));
}

MonomialIdeal multiply(const MonomialIdeal& a, SquarefreeMonomial f) {
    if (support(a).intersects(f.vars))
        throw std::invalid_argument("multiplier shares variables with the ideal's support");
    if (!f.vars.subset_of(VertexSet::prefix(a.ground())))
        throw std::invalid_argument("multiplier uses variables outside the ring");
    std::vector<VertexSet> gens;
    for (VertexSet u : a.generators()) gens.push_back(u | f.vars);
    return MonomialIdeal(a.ground(), std::move(gens));
}

MonomialIdeal product_disjoint(const MonomialIdeal& a, const MonomialIdeal& b) {
    require_same_ground(a, b);
    if (support(a).intersects(support(b))) throw std::invalid_argument("product_disjoint needs disjoint supports");
    std::vector<VertexSet> gens;
    for (VertexSet u : a.generators())
        for (VertexSet v : b.generators()) gens.push_back(u | v);
    return MonomialIdeal(a.ground(), std::move(gens));
}

VertexSet support(const MonomialIdeal& a) {
    VertexSet out;
    for (VertexSet g : a.generators()) out |= g;
    return out;
}

bool equals(const MonomialIdeal& a, const MonomialIdeal& b) {
    require_same_ground(a, b);
    return a.generators() == b.generators();
}

bool contains(const MonomialIdeal& a, const MonomialIdeal& b) {
    require_same_ground(a, b);
    return std::all_of(b.generators().begin(), b.generators().end(),
                       [&a](VertexSet g) { return a.contains_monomial(g); });
}

}  // namespace edgereg

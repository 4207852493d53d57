#ifndef EDGEREG_IDEAL_HPP
#define EDGEREG_IDEAL_HPP

#include <map>
#include <string>
#include <vector>

#include "edgereg/graph.hpp"
#include "edgereg/vertex_set.hpp"

namespace edgereg {

/// Squarefree monomial x^S identified with its support S. The empty support
/// is the unit monomial 1.
struct SquarefreeMonomial {
    VertexSet vars;

    static SquarefreeMonomial variable(int i) { return {VertexSet::of({i})}; }
    static SquarefreeMonomial of(std::initializer_list<int> vars) { return {VertexSet::of(vars)}; }

    int degree() const { return vars.size(); }
    bool is_unit() const { return vars.empty(); }
    bool divides(SquarefreeMonomial other) const { return vars.subset_of(other.vars); }
    bool operator==(const SquarefreeMonomial&) const = default;
    auto operator<=>(const SquarefreeMonomial&) const = default;
};

/// Squarefree monomial ideal in k[x_1, ..., x_ground], kept in canonical form:
/// minimal generators sorted by ascending bitmask. The zero ideal has no
/// generators; the unit ideal has the single generator 1.
class MonomialIdeal {
public:
    MonomialIdeal() = default;
    explicit MonomialIdeal(int ground);
    MonomialIdeal(int ground, std::vector<VertexSet> generators);

    static MonomialIdeal zero(int ground) { return MonomialIdeal(ground); }
    static MonomialIdeal unit(int ground) { return MonomialIdeal(ground, {VertexSet()}); }
    /// The linear ideal (x_i | i in vars).
    static MonomialIdeal variables(int ground, VertexSet vars);

    int ground() const { return ground_; }
    const std::vector<VertexSet>& generators() const { return gens_; }
    std::size_t generator_count() const { return gens_.size(); }
    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const { return gens_.size() == 1 && gens_.front().empty(); }
    bool is_proper() const { return !is_unit(); }

    /// Whether the monomial x^S lies in the ideal.
    bool contains_monomial(VertexSet s) const;
    bool contains_monomial(SquarefreeMonomial m) const { return contains_monomial(m.vars); }

    /// Same ideal in a larger ring.
    MonomialIdeal embed(int new_ground) const;

    bool operator==(const MonomialIdeal& other) const = default;

    /// "(x1*x2, x3)" style rendering; "(0)" and "(1)" for the degenerate ideals.
    std::string to_string() const;

private:
    int ground_ = 0;
    std::vector<VertexSet> gens_;
};

MonomialIdeal edge_ideal(const Graph& g);
/// Edge ideal of g in a ring with `ground` >= n variables.
MonomialIdeal edge_ideal(const Graph& g, int ground);
/// I(g[w]) written in g's own labels (no relabelling).
MonomialIdeal edge_ideal_on(const Graph& g, VertexSet w);

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal colon(const MonomialIdeal& a, SquarefreeMonomial f);
/// f * a; f must share no variable with supp(a).
MonomialIdeal multiply(const MonomialIdeal& a, SquarefreeMonomial f);
/// a * b for ideals with disjoint supports.
MonomialIdeal product_disjoint(const MonomialIdeal& a, const MonomialIdeal& b);

VertexSet support(const MonomialIdeal& a);
bool equals(const MonomialIdeal& a, const MonomialIdeal& b);
/// b is a subideal of a.
bool contains(const MonomialIdeal& a, const MonomialIdeal& b);

inline MonomialIdeal operator+(const MonomialIdeal& a, const MonomialIdeal& b) { return sum(a, b); }

/// Ideals attached to C_n^d in the critical shape n = k(d+2) + d + 1, k >= 2.
struct CriticalDecomposition {
    int n = 0;
    int d = 0;
    int k = 0;
    Graph graph;
    MonomialIdeal I, J, K, L, M;
    std::map<int, MonomialIdeal> A;
    std::map<int, MonomialIdeal> B;
};

/// k with n = k(d+2) + d + 1 and k >= 2, or 0 when (n, d) has another shape.
int critical_multiplier(int n, int d);
CriticalDecomposition critical_decomposition(int n, int d);
/// Right-hand side of the closed formula for L ∩ M, assembled term by term.
MonomialIdeal lm_intersection_formula(const CriticalDecomposition& dec);

}  // namespace edgereg

#endif

#ifndef EDGEREG_INVARIANTS_HPP
#define EDGEREG_INVARIANTS_HPP

#include <optional>
#include <string>
#include <vector>

#include "edgereg/graph.hpp"
#include "edgereg/homology.hpp"

namespace edgereg {

inline constexpr int kMaxMatchingVertices = 40;

struct Matching {
    std::vector<Edge> edges;

    int size() const { return static_cast<int>(edges.size()); }
    VertexSet vertices() const;
};

bool is_matching(const Graph& g, const Matching& m);
/// The subgraph induced on the matched vertices has exactly the matching edges.
bool is_induced_matching(const Graph& g, const Matching& m);

struct InducedMatchingResult {
    int size = 0;
    Matching witness;
};

/// Exact im(g) by branch and bound; throws CapacityError above 40 vertices.
InducedMatchingResult induced_matching(const Graph& g);
int induced_matching_number(const Graph& g);

/// floor((n + d) / (d + 2)) for n >= 2, d >= 1.
int im_path_power(int n, int d);
/// im(C_n^d) by exhaustive search, memoized per (n, d).
int im_cycle_power(int n, int d);

struct ChordalityResult {
    bool chordal = false;
    /// Perfect elimination ordering (each vertex's later neighbours form a clique).
    std::vector<int> elimination_order;
    /// Induced cycle of length >= 4 when not chordal.
    std::vector<int> induced_cycle;
};

/// Maximum cardinality search (ties to the smallest label); both certificates
/// are verified before returning.
ChordalityResult chordality(const Graph& g);
bool is_chordal(const Graph& g);
bool verify_elimination_order(const Graph& g, const std::vector<int>& order);
bool verify_induced_cycle(const Graph& g, const std::vector<int>& cycle);

/// reg(R/I(P_n^d)); 0 for n = 1.
int reg_path_power_formula(int n, int d);

enum class CycleCase { Complete, Two, Floor };
std::string to_string(CycleCase c);

struct CycleFormula {
    int value = 0;
    CycleCase which = CycleCase::Floor;
};
/// 1 if n <= 2d+2; 2 if n = 2d+3; floor(n/(d+2)) otherwise.
CycleFormula reg_cycle_power_formula(int n, int d);

enum class RegularityMethod { ClosedForm, ChordalFastPath, Hochster, LcmLattice };
std::string to_string(RegularityMethod m);

enum class RegularityMode { Auto, ForceHochster, ForceLcm };

struct RegularityResult {
    int value = 0;  // reg(R/I(g))
    RegularityMethod method = RegularityMethod::Hochster;
    std::optional<Matching> witness;
    std::optional<std::vector<int>> elimination_order;
};

RegularityResult regularity_of_graph(const Graph& g, const EngineOptions& options = {},
                                     RegularityMode mode = RegularityMode::Auto);

}  // namespace edgereg

#endif

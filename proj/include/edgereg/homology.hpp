#ifndef EDGEREG_HOMOLOGY_HPP
#define EDGEREG_HOMOLOGY_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "edgereg/graph.hpp"
#include "edgereg/ideal.hpp"
#include "edgereg/linalg.hpp"

namespace edgereg {

/// Raised when an input exceeds one of the engine's hard size limits.
class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr int kMaxHomologyVertices = 22;
inline constexpr int kMaxHochsterSupport = 18;
inline constexpr int kMaxLcmGenerators = 20;

/// Finite simplicial complex on ground vertices 1..ground.
///
/// Two presentations share one face test: by minimal non-faces (Stanley-Reisner
/// and independence complexes) or by facets. Either way the face set is
/// downward closed. The void complex has no faces; the irrelevant complex has
/// only the empty face.
class SimplicialComplex {
public:
    static SimplicialComplex void_complex(int ground);
    static SimplicialComplex irrelevant(int ground);
    static SimplicialComplex simplex(int ground, VertexSet vertices);
    /// Faces: subsets of `vertices` containing no element of `nonfaces`.
    static SimplicialComplex from_nonfaces(int ground, VertexSet vertices, std::vector<VertexSet> nonfaces);
    /// Faces: subsets of some facet. An empty facet list gives the void complex.
    static SimplicialComplex from_facets(int ground, std::vector<VertexSet> facets);

    int ground() const { return ground_; }
    bool is_void() const { return void_; }
    bool is_irrelevant() const;
    bool is_face(VertexSet s) const;
    /// Vertices v with {v} a face.
    VertexSet vertices() const;
    /// -1 for the irrelevant complex; -2 for the void complex.
    int dimension() const;

    /// Faces grouped by cardinality: result[c] lists the faces with c
    /// vertices in ascending mask order.
    std::vector<std::vector<VertexSet>> faces_by_size() const;
    std::vector<VertexSet> facets() const;

    /// A vertex v such that F ∪ {v} is a face for every face F, or 0.
    int cone_point() const;

    bool uses_facets() const { return by_facets_; }
    const std::vector<VertexSet>& generators() const { return generators_; }

private:
    SimplicialComplex() = default;

    int ground_ = 0;
    bool void_ = false;
    bool by_facets_ = false;
    VertexSet vertices_;
    std::vector<VertexSet> generators_;  // minimal non-faces, or facets
};

SimplicialComplex independence_complex(const Graph& g);
/// The unit ideal has no Stanley-Reisner complex in the usual sense; the void
/// complex is returned and `flagged_unit` (if given) is set.
SimplicialComplex stanley_reisner_complex(const MonomialIdeal& a, bool* flagged_unit = nullptr);
SimplicialComplex restrict(const SimplicialComplex& c, VertexSet w);

/// Reduced homology ranks by degree t = -1 .. ground-1.
class HomologyRanks {
public:
    HomologyRanks(int ground, Field field) : field_(field), ranks_(static_cast<std::size_t>(ground) + 1, 0) {}

    Field field() const { return field_; }
    int max_degree() const { return static_cast<int>(ranks_.size()) - 2; }
    long long at(int t) const;
    void set(int t, long long rank);
    bool all_zero() const;
    const std::vector<long long>& raw() const { return ranks_; }

private:
    Field field_;
    std::vector<long long> ranks_;  // index t + 1
};

HomologyRanks reduced_homology(const SimplicialComplex& c, Field field);
/// Number of homology computations whose Euler characteristic identity was
/// checked in this process.
std::uint64_t euler_checks_performed();

/// Graded Betti numbers beta_{i,j} of R/I.
class BettiTable {
public:
    explicit BettiTable(Field field) : field_(field) {}

    Field field() const { return field_; }
    long long at(int i, int j) const;
    void add(int i, int j, long long value);
    const std::map<std::pair<int, int>, long long>& entries() const { return entries_; }

    /// max{ j - i : beta_{i,j} != 0 }, i.e. reg(R/I).
    int regularity() const;
    /// Largest homological index with a nonzero entry.
    int projective_dimension() const;
    BettiTable& operator+=(const BettiTable& other);
    /// Equal entries; the field tag is not compared.
    bool same_entries(const BettiTable& other) const { return entries_ == other.entries_; }
    bool operator==(const BettiTable& other) const = default;

    /// {"field": ..., "entries": [[i,j,beta],...], "reg": r}
    std::string to_json() const;
    static BettiTable from_json(const std::string& text);
    /// Macaulay2-like grid, rows j-i, columns i.
    std::string to_text() const;

private:
    Field field_;
    std::map<std::pair<int, int>, long long> entries_;
};

struct EngineOptions {
    Field field = Field::rationals();
    unsigned threads = 1;
};

/// Hochster: beta_{i,j}(R/I) = sum over |W| = j, W ⊆ supp(I), of
/// dim H~_{j-i-1}(Delta|_W).
BettiTable betti_table_hochster(const MonomialIdeal& a, const EngineOptions& options = {});
/// Lcm-lattice route: beta_{i,m}(R/I) = dim H~_{i-2}((0, m)) for m in the lcm
/// lattice, with the open interval computed through its atom crosscut and
/// Alexander duality.
BettiTable betti_table_lcm_lattice(const MonomialIdeal& a, const EngineOptions& options = {});

/// reg(R/I) via Hochster. The zero ideal gives 0; the unit ideal is rejected.
int regularity(const MonomialIdeal& a, const EngineOptions& options = {});
/// reg(I) = reg(R/I) + 1 for a nonzero proper ideal.
int ideal_regularity(const MonomialIdeal& a, const EngineOptions& options = {});

}  // namespace edgereg

#endif

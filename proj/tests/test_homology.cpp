#include <doctest.h>

#include <random>

#include "edgereg/homology.hpp"

using namespace edgereg;

namespace {

MonomialIdeal random_ideal(std::mt19937_64& rng, int n, int gens) {
    std::vector<VertexSet> g;
    std::uniform_int_distribution<int> deg(1, 3), var(1, n);
    for (int i = 0; i < gens; ++i) {
        VertexSet s;
        for (int j = deg(rng); j > 0; --j) s.insert(var(rng));
        g.push_back(s);
    }
    return MonomialIdeal(n, g);
}

}  // namespace

TEST_CASE("reduced homology of spheres and degenerate complexes") {
    for (const Field f : {Field::rationals(), Field::gf2()}) {
        // boundary of the 3-simplex is a 2-sphere
        std::vector<VertexSet> facets;
        for (int v = 1; v <= 4; ++v) facets.push_back(VertexSet::range(1, 4) - VertexSet::of({v}));
        const HomologyRanks s2 = reduced_homology(SimplicialComplex::from_facets(4, facets), f);
        CHECK(s2.at(2) == 1);
        CHECK(s2.at(1) == 0);
        CHECK(s2.at(0) == 0);

        const HomologyRanks s1 = reduced_homology(independence_complex(cycle(5)), f);
        CHECK(s1.at(1) == 1);
        CHECK(s1.at(0) == 0);

        CHECK(reduced_homology(SimplicialComplex::simplex(3, VertexSet::range(1, 3)), f).all_zero());
        CHECK(reduced_homology(SimplicialComplex::irrelevant(3), f).at(-1) == 1);
        CHECK(reduced_homology(SimplicialComplex::void_complex(3), f).all_zero());
    }
}

TEST_CASE("two points and the projective plane") {
    const SimplicialComplex two = SimplicialComplex::from_facets(2, {VertexSet::of({1}), VertexSet::of({2})});
    CHECK(reduced_homology(two, Field::rationals()).at(0) == 1);
    // six-vertex triangulation of RP^2: torsion shows only in characteristic 2
    const std::vector<std::vector<int>> tri{{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 2, 6},
                                            {2, 3, 5}, {2, 4, 5}, {2, 4, 6}, {3, 4, 6}, {3, 5, 6}};
    std::vector<VertexSet> facets;
    for (const auto& t : tri) facets.push_back(VertexSet::of(t));
    const SimplicialComplex rp2 = SimplicialComplex::from_facets(6, facets);
    CHECK(reduced_homology(rp2, Field::rationals()).all_zero());
    const HomologyRanks h2 = reduced_homology(rp2, Field::gf2());
    CHECK(h2.at(1) == 1);
    CHECK(h2.at(2) == 1);
}

TEST_CASE("Betti table of the pentagon") {
    const BettiTable t = betti_table_hochster(edge_ideal(cycle(5)));
    CHECK(t.at(0, 0) == 1);
    CHECK(t.at(1, 2) == 5);
    CHECK(t.at(2, 3) == 5);
    CHECK(t.at(3, 5) == 1);
    CHECK(t.entries().size() == 4);
    CHECK(t.regularity() == 2);
    CHECK(t.projective_dimension() == 3);
    CHECK(betti_table_lcm_lattice(edge_ideal(cycle(5))).same_entries(t));
}

TEST_CASE("Hochster and lcm routes agree") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 40; ++trial) {
        const MonomialIdeal a = random_ideal(rng, 7, 6);
        for (const Field f : {Field::rationals(), Field::gf2()}) {
            const EngineOptions o{f, 1};
            CHECK(betti_table_hochster(a, o).same_entries(betti_table_lcm_lattice(a, o)));
        }
    }
}

TEST_CASE("extra variables do not change the table") {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 20; ++trial) {
        const MonomialIdeal a = random_ideal(rng, 6, 5);
        CHECK(betti_table_hochster(a).same_entries(betti_table_hochster(a.embed(10))));
    }
}

TEST_CASE("thread count does not change the table") {
    const MonomialIdeal a = edge_ideal(power(cycle(11), 2));
    CHECK(betti_table_hochster(a, {Field::rationals(), 1}) == betti_table_hochster(a, {Field::rationals(), 4}));
}

TEST_CASE("regularity conventions") {
    CHECK(regularity(MonomialIdeal::zero(4)) == 0);
    CHECK_THROWS(regularity(MonomialIdeal::unit(4)));
    CHECK(ideal_regularity(edge_ideal(cycle(5))) == 3);
    CHECK(regularity(MonomialIdeal::variables(5, VertexSet::of({1, 3}))) == 0);
}

TEST_CASE("Betti table JSON round trip") {
    const BettiTable t = betti_table_hochster(edge_ideal(power(cycle(9), 2)), {Field::gf2(), 1});
    const BettiTable back = BettiTable::from_json(t.to_json());
    CHECK(back == t);
    CHECK(back.field() == Field::gf2());
}

TEST_CASE("capacity limits") {
    CHECK_THROWS_AS(betti_table_hochster(edge_ideal(path(kMaxHochsterSupport + 1))), CapacityError);
    CHECK_THROWS_AS(betti_table_lcm_lattice(edge_ideal(cycle(kMaxLcmGenerators + 1))), CapacityError);
    CHECK_THROWS_AS(reduced_homology(SimplicialComplex::simplex(30, VertexSet::range(1, 30)), Field::rationals()),
                    CapacityError);
}

TEST_CASE("Euler checks are counted") {
    const auto before = euler_checks_performed();
    reduced_homology(independence_complex(cycle(6)), Field::rationals());
    CHECK(euler_checks_performed() > before);
}

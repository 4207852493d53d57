#include <doctest.h>

#include <random>

#include "edgereg/ideal.hpp"

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

// Membership straight from the generator list.
bool member(const MonomialIdeal& a, VertexSet m) {
    for (VertexSet g : a.generators())
        if (g.subset_of(m)) return true;
    return false;
}

}  // namespace

TEST_CASE("canonical form drops non-minimal generators") {
    const MonomialIdeal a(4, {VertexSet::of({1, 2, 3}), VertexSet::of({1, 2}), VertexSet::of({4}), VertexSet::of({1, 2})});
    CHECK(a.generators() == std::vector<VertexSet>{VertexSet::of({1, 2}), VertexSet::of({4})});
    CHECK(a.to_string() == "(x1*x2, x4)");
    CHECK(MonomialIdeal::zero(3).to_string() == "(0)");
    CHECK(MonomialIdeal::unit(3).to_string() == "(1)");
}

TEST_CASE("edge ideal") {
    const MonomialIdeal a = edge_ideal(cycle(5));
    CHECK(a.generator_count() == 5);
    CHECK(a.contains_monomial(VertexSet::of({1, 5})));
    CHECK_FALSE(a.contains_monomial(VertexSet::of({1, 3})));
    CHECK(edge_ideal(path(3), 5).ground() == 5);
    CHECK(edge_ideal_on(cycle(6), VertexSet::of({1, 2, 3, 5})).generators() ==
          std::vector<VertexSet>{VertexSet::of({1, 2}), VertexSet::of({2, 3})});
}

TEST_CASE("operations agree with brute-force membership") {
    std::mt19937_64 rng(11);
    const int n = 7;
    for (int trial = 0; trial < 60; ++trial) {
        const MonomialIdeal a = random_ideal(rng, n, 4);
        const MonomialIdeal b = random_ideal(rng, n, 3);
        const VertexSet f = VertexSet::of({1 + trial % n});
        const MonomialIdeal s = a + b, i = intersect(a, b), c = colon(a, {f});
        for (std::uint64_t mask = 0; mask < (1u << n); ++mask) {
            const VertexSet m = VertexSet::from_mask(mask);
            CHECK(s.contains_monomial(m) == (member(a, m) || member(b, m)));
            CHECK(i.contains_monomial(m) == (member(a, m) && member(b, m)));
            CHECK(c.contains_monomial(m) == member(a, m | f));
        }
        CHECK(contains(s, a));
        CHECK(contains(a, i));
        CHECK(equals(colon(i, {f}), intersect(colon(a, {f}), colon(b, {f}))));
    }
}

TEST_CASE("multiply and disjoint product") {
    const MonomialIdeal a(6, {VertexSet::of({1, 2}), VertexSet::of({3})});
    CHECK(multiply(a, SquarefreeMonomial::of({5})).generators() ==
          std::vector<VertexSet>{VertexSet::of({1, 2, 5}), VertexSet::of({3, 5})});
    const MonomialIdeal b(6, {VertexSet::of({4}), VertexSet::of({5, 6})});
    CHECK(product_disjoint(a, b).generator_count() == 4);
    CHECK(support(a) == VertexSet::of({1, 2, 3}));
    CHECK(a.embed(9).ground() == 9);
}

TEST_CASE("critical decomposition") {
    CHECK(critical_multiplier(11, 2) == 2);
    CHECK(critical_multiplier(14, 3) == 2);
    CHECK(critical_multiplier(10, 2) == 0);
    const CriticalDecomposition dec = critical_decomposition(11, 2);
    CHECK(dec.k == 2);
    CHECK(equals(dec.I, edge_ideal(power(cycle(11), 2))));
    CHECK(equals(dec.J + multiply(dec.K, SquarefreeMonomial::variable(1)), dec.I));
    CHECK(equals(intersect(dec.J, dec.K), dec.L + multiply(dec.M, SquarefreeMonomial::variable(2))));
}

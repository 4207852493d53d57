#include <doctest.h>

#include "edgereg/homology.hpp"
#include "edgereg/invariants.hpp"

using namespace edgereg;

namespace {

// Exhaustive induced matching number over edge subsets.
int brute_im(const Graph& g) {
    const auto e = g.edges();
    int best = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << e.size()); ++mask) {
        Matching m;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (mask >> i & 1) m.edges.push_back(e[i]);
        if (m.size() > best && is_induced_matching(g, m)) best = m.size();
    }
    return best;
}

}  // namespace

TEST_CASE("induced matching against exhaustive search") {
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        const Graph g = random_graph(8, 0.3, seed);
        if (g.edge_count() > 16) continue;
        const InducedMatchingResult r = induced_matching(g);
        CHECK(r.size == brute_im(g));
        CHECK(r.witness.size() == r.size);
        CHECK(is_induced_matching(g, r.witness));
    }
}

TEST_CASE("induced matching checks") {
    const Graph p = path(4);
    CHECK(is_matching(p, {{{1, 2}, {3, 4}}}));
    CHECK_FALSE(is_induced_matching(p, {{{1, 2}, {3, 4}}}));
    CHECK(is_induced_matching(path(5), {{{1, 2}, {4, 5}}}));
    CHECK_FALSE(is_matching(p, {{{1, 2}, {2, 3}}}));
}

TEST_CASE("induced matching of path powers") {
    for (int n = 2; n <= 14; ++n)
        for (int d = 1; d <= 4; ++d) CHECK(induced_matching_number(power(path(n), d)) == im_path_power(n, d));
    CHECK(induced_matching_number(power(path(13), 3)) == 3);
}

TEST_CASE("induced matching of powers of the 12-cycle") {
    std::vector<int> seq;
    for (int d = 1; d <= 4; ++d) seq.push_back(im_cycle_power(12, d));
    CHECK(seq == std::vector<int>{4, 3, 2, 2});
    CHECK(induced_matching_number(cycle(12)) == 4);
}

TEST_CASE("chordality certificates") {
    const ChordalityResult tree = chordality(random_tree(15, 4));
    CHECK(tree.chordal);
    CHECK(verify_elimination_order(random_tree(15, 4), tree.elimination_order));

    const ChordalityResult c6 = chordality(cycle(6));
    CHECK_FALSE(c6.chordal);
    CHECK(c6.induced_cycle.size() == 6);
    CHECK(verify_induced_cycle(cycle(6), c6.induced_cycle));

    CHECK(is_chordal(power(path(10), 3)));
    CHECK(is_chordal(complete(6)));
    CHECK_FALSE(is_chordal(power(cycle(10), 2)));
    CHECK_FALSE(verify_induced_cycle(cycle(6), {1, 2, 3}));
}

TEST_CASE("closed forms") {
    CHECK(reg_path_power_formula(6, 2) == 2);
    CHECK(reg_path_power_formula(1, 3) == 0);
    CHECK(reg_cycle_power_formula(5, 2).value == 1);
    CHECK(reg_cycle_power_formula(5, 2).which == CycleCase::Complete);
    CHECK(reg_cycle_power_formula(7, 2).value == 2);
    CHECK(reg_cycle_power_formula(7, 2).which == CycleCase::Two);
    CHECK(reg_cycle_power_formula(9, 2).value == 2);
    CHECK(reg_cycle_power_formula(12, 2).value == 3);
}

TEST_CASE("regularity of cycle powers by Hochster") {
    for (int n = 6; n <= 12; ++n) {
        const RegularityResult r = regularity_of_graph(power(cycle(n), 2), {}, RegularityMode::ForceHochster);
        CHECK(r.value == reg_cycle_power_formula(n, 2).value);
    }
}

TEST_CASE("chordal fast path agrees with Hochster") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const Graph g = power(random_tree(11, seed), 2);
        const RegularityResult fast = regularity_of_graph(g);
        CHECK(fast.method == RegularityMethod::ChordalFastPath);
        CHECK(fast.witness.has_value());
        CHECK(fast.value == regularity_of_graph(g, {}, RegularityMode::ForceHochster).value);
    }
}

TEST_CASE("sunflower graph") {
    const Graph s = sunflower6();
    CHECK(is_chordal(s));
    CHECK(induced_matching_number(s) == 3);
    CHECK(regularity(edge_ideal(s)) == 3);
    const Graph s2 = power(s, 2);
    CHECK_FALSE(is_chordal(s2));
    CHECK(regularity(edge_ideal(s2)) == 2);
}

TEST_CASE("double star whose square has a larger induced matching") {
    const Graph g(6, {{1, 2}, {2, 4}, {2, 5}, {3, 4}, {4, 6}});
    const Graph g2 = power(g, 2);
    CHECK(induced_matching_number(g) == 1);
    CHECK(induced_matching_number(g2) == 2);
    CHECK(is_induced_matching(g2, {{{1, 5}, {3, 6}}}));
    CHECK(is_chordal(g2));
    CHECK(regularity(edge_ideal(g)) == 1);
    CHECK(regularity(edge_ideal(g2)) == 2);
    CHECK(regularity(edge_ideal(g2), {Field::gf2(), 1}) == 2);
}

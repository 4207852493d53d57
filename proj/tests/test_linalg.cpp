#include <doctest.h>

#include <random>

#include "edgereg/linalg.hpp"

using namespace edgereg;

namespace {

SparseMatrix from_dense(const std::vector<std::vector<std::int64_t>>& d) {
    SparseMatrix m(static_cast<int>(d.size()), d.empty() ? 0 : static_cast<int>(d[0].size()));
    for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = 0; j < d[i].size(); ++j)
            if (d[i][j]) m.data[i].emplace_back(static_cast<int>(j), d[i][j]);
    return m;
}

}  // namespace

TEST_CASE("small ranks") {
    CHECK(rank_rational(from_dense({{1, 2}, {2, 4}})) == 1);
    CHECK(rank_rational(from_dense({{2, 0}, {0, 3}})) == 2);
    CHECK(rank_rational(SparseMatrix(3, 4)) == 0);
    // det = 2: full rank over Q and GF3, rank 1 over GF2
    const SparseMatrix m = from_dense({{1, 1}, {1, -1}});
    CHECK(rank(m, Field::rationals()) == 2);
    CHECK(rank(m, Field::gf2()) == 1);
    CHECK(rank(m, Field::prime(3)) == 2);
}

TEST_CASE("large entries take the multiprecision path") {
    const std::int64_t big = std::int64_t{1} << 40;
    // rows (big, big+1), (big+1, big+2): determinant -1
    const SparseMatrix m = from_dense({{big, big + 1, 3}, {big + 1, big + 2, 5}, {2 * big + 1, 2 * big + 3, 8}});
    CHECK(rank_rational(m) == 2);
    const SparseMatrix n = from_dense({{big, 3, 1}, {7, big, 1}, {5, 11, big}});
    CHECK(rank_rational(n) == 3);
}

TEST_CASE("rank over Q agrees with rank mod a large prime on random matrices") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> e(-3, 3), sz(1, 9);
    for (int t = 0; t < 200; ++t) {
        const int r = sz(rng), c = sz(rng);
        std::vector<std::vector<std::int64_t>> d(static_cast<std::size_t>(r), std::vector<std::int64_t>(static_cast<std::size_t>(c)));
        for (auto& row : d)
            for (auto& x : row) x = (rng() % 3 == 0) ? e(rng) : 0;
        CHECK(rank_rational(from_dense(d)) == rank_mod_p(from_dense(d), 1000003));
    }
}

TEST_CASE("field names") {
    CHECK(Field::parse("Q") == Field::rationals());
    CHECK(Field::parse("GF2") == Field::gf2());
    CHECK(Field::parse("GF7").characteristic() == 7);
    CHECK(Field::prime(5).name() == "GF5");
    CHECK_THROWS(Field::parse("GF4"));
    CHECK_THROWS(Field::parse("R"));
}

#include <doctest.h>

#include <algorithm>

#include "nilcomm/components.hpp"
#include "nilcomm/rng.hpp"

using namespace nilcomm;

namespace {
RationalField FQ;
}

TEST_CASE("closed dimension formulas") {
    CHECK(block_component_dim(4, 2, 7) == 32);
    CHECK(block_component_dim(10, 0, 3) == 0);
    CHECK(block_component_dim(5, 2, 7) == 48);

    const auto n47 = nilpotent_commuting_dim(4, 7);
    CHECK(n47.dim == 32);
    CHECK(n47.component_count == 1);
    const auto n57 = nilpotent_commuting_dim(5, 7);
    CHECK(n57.dim == 48);
    CHECK(n57.component_count == 2);
    CHECK(nilpotent_commuting_dim(6, 10).dim == 99);

    CHECK(gl_commuting_dim(4, 7) == 40);
    CHECK(gl_commuting_dim(4, 8) == 44);
    CHECK(gl_commuting_dim(5, 8) == 62);

    CHECK(sl_commuting_dim(4, 7, 5) == 33);
    CHECK(sl_commuting_dim(5, 7, 5) == 55);  // p | n
    CHECK(sl_commuting_dim(5, 7, 7) == 48);

    CHECK(regular_component_dim(4, 4) == 21);
    CHECK(generic_component_dim(4, 7) == 40);
    CHECK(regular_component_dim(1, 9) == 0);
}

TEST_CASE("out-of-range queries are rejected, not extrapolated") {
    CHECK_THROWS_AS(nilpotent_commuting_dim(4, 5), OutOfEstablishedRange);
    CHECK_THROWS_AS(nilpotent_commuting_dim(3, 9), OutOfEstablishedRange);
    CHECK_THROWS_AS(gl_commuting_dim(4, 6), OutOfEstablishedRange);
    CHECK_THROWS_AS(sl_commuting_dim(4, 7, 3), std::invalid_argument);
    CHECK_THROWS_AS(sl_commuting_dim(4, 7, 6), std::invalid_argument);
}

TEST_CASE("gl and nilpotent dimensions differ by r away from (4,7)") {
    for (int n = 4; n <= 9; ++n)
        for (int r = 7; r <= 11; ++r) {
            if (n == 4 && r == 7) continue;
            CHECK(gl_commuting_dim(n, r) - nilpotent_commuting_dim(n, r).dim == r);
        }
}

TEST_CASE("block component dimension is maximized at s = n/2") {
    for (int n = 4; n <= 9; ++n)
        for (int r = 7; r <= 9; ++r) {
            const long best = block_component_dim(n, n / 2, r);
            CHECK(block_component_dim(n, (n + 1) / 2, r) == best);
            for (int s = 0; s <= n; ++s) {
                CHECK(block_component_dim(n, s, r) <= best);
                if (s != n / 2 && s != (n + 1) / 2)
                    CHECK(block_component_dim(n, s, r) < best);
            }
        }
}

TEST_CASE("crossover lists") {
    const auto lists = crossover_lists(30, 30);
    CHECK(lists.nilpotent_regular ==
          std::vector<std::pair<int, int>>{{4, 4}, {5, 4}});
    const std::vector<std::pair<int, int>> expected_ordinary{
        {4, 4}, {4, 5}, {4, 6}, {4, 7}, {5, 4}, {5, 5}, {5, 6},
        {6, 4}, {6, 5}, {7, 4}, {8, 4}, {9, 4}, {10, 4}};
    auto sorted = lists.ordinary_generic;
    std::sort(sorted.begin(), sorted.end());
    auto expected = expected_ordinary;
    std::sort(expected.begin(), expected.end());
    CHECK(sorted == expected);

    const auto small = crossover_lists(4, 4);
    CHECK(small.nilpotent_regular == std::vector<std::pair<int, int>>{{4, 4}});
    CHECK(small.ordinary_generic == std::vector<std::pair<int, int>>{{4, 4}});
}

TEST_CASE("block nilradical: squares and products vanish") {
    const auto u = block_nilradical(FQ, 5, 2);
    CHECK(u.basis.size() == 6);
    for (const auto& x : u.basis)
        for (const auto& y : u.basis) CHECK((x * y).is_zero());
}

TEST_CASE("tuple membership in the block family closure") {
    SplitMix64 rng(31);
    const int n = 4, s = 2, r = 3;
    const auto u = block_nilradical(FQ, n, s);

    const auto random_u_element = [&](SplitMix64& g) {
        RatMatrix x(FQ, n, n);
        for (const auto& b : u.basis) x = x + b.scaled(Rat(g.range(-4, 4)));
        return x;
    };

    std::vector<RatMatrix> tuple;
    for (int i = 0; i < r; ++i) tuple.push_back(random_u_element(rng));
    CHECK(tuple_in_block_closure(tuple, s));

    // Conjugation preserves the closed conditions.
    RatMatrix g = RatMatrix::identity(FQ, n), ginv = RatMatrix::identity(FQ, n);
    g.at(0, 1) = 2;
    g.at(2, 3) = -1;
    ginv.at(0, 1) = -2;
    ginv.at(2, 3) = 1;
    REQUIRE((g * ginv) == RatMatrix::identity(FQ, n));
    std::vector<RatMatrix> conj;
    for (const auto& x : tuple) conj.push_back(g * x * ginv);
    CHECK(tuple_in_block_closure(conj, s));

    // GL_r dot action on the tuple preserves membership.
    std::vector<RatMatrix> mixed = tuple;
    mixed[0] = tuple[0] + tuple[1].scaled(Rat(3));
    mixed[2] = tuple[2] - tuple[0].scaled(Rat(2));
    CHECK(tuple_in_block_closure(mixed, s));

    // A nilpotent that is not square-zero fails on the product equations.
    RatMatrix j3(FQ, n, n);
    j3.at(0, 1) = j3.at(1, 2) = 1;
    std::vector<RatMatrix> bad = tuple;
    bad[1] = j3;
    CHECK_FALSE(tuple_in_block_closure(bad, s));

    // The span conditions discriminate on their own: E_{0,3}, E_{1,3} have
    // vanishing products, a 1-dim row span and a 2-dim column span.
    const RatMatrix e03 = RatMatrix::unit(FQ, n, 0, 3), e13 = RatMatrix::unit(FQ, n, 1, 3);
    const std::vector<RatMatrix> pair1{e03, e13};
    CHECK(tuple_in_block_closure(pair1, 3));
    CHECK_FALSE(tuple_in_block_closure(pair1, 1));  // column span too big
    const std::vector<RatMatrix> pair2{e03, RatMatrix::unit(FQ, n, 0, 1)};
    CHECK_FALSE(tuple_in_block_closure(pair2, 3));  // row span too big
}

TEST_CASE("membership test works over prime fields") {
    PrimeField F5(5);
    const auto u = block_nilradical(F5, 4, 2);
    std::vector<FpMatrix> tuple{u.basis[0] + u.basis[3].scaled(2), u.basis[1].scaled(4)};
    CHECK(tuple_in_block_closure(tuple, 2));
    tuple.push_back(FpMatrix::identity(F5, 4));
    CHECK_FALSE(tuple_in_block_closure(tuple, 2));
}

TEST_CASE("jacobian rank oracle agrees with the closed formula") {
    CHECK(jacobian_component_dim(4, 2, 7, 1).rank == 32);
    CHECK(jacobian_component_dim(5, 2, 7, 2).rank == 48);
    CHECK(jacobian_component_dim(4, 0, 5, 3).rank == 0);
    CHECK(jacobian_component_dim(5, 1, 3, 4).rank == block_component_dim(5, 1, 3));
}

TEST_CASE("jacobian oracle is deterministic in the seed") {
    const auto a = jacobian_component_dim(4, 2, 8, 42);
    const auto b = jacobian_component_dim(4, 2, 8, 42);
    CHECK(a.rank == b.rank);
    CHECK(a.attempts == b.attempts);
}

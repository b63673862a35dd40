#include <doctest.h>

#include "nilcomm/matrix.hpp"
#include "nilcomm/rng.hpp"

using namespace nilcomm;

namespace {

RatMatrix rat_mat(std::size_t rows, std::size_t cols, const std::vector<long>& entries) {
    RatMatrix m(RationalField{}, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = Rat(entries[i * cols + j]);
    return m;
}

/// Random invertible matrix as a product of unitriangular factors.
RatMatrix random_invertible(SplitMix64& rng, std::size_t n) {
    RationalField F;
    RatMatrix lower = RatMatrix::identity(F, n), upper = RatMatrix::identity(F, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i > j) lower.at(i, j) = Rat(rng.range(-3, 3));
            if (i < j) upper.at(i, j) = Rat(rng.range(-3, 3));
        }
    return lower * upper;
}

}  // namespace

TEST_CASE("rank: basic cases") {
    RationalField F;
    CHECK(rank(RatMatrix::identity(F, 3)) == 3);
    CHECK(rank(RatMatrix(F, 2, 4)) == 0);
    CHECK(rank(RatMatrix::unit(F, 4, 0, 2)) == 1);
    CHECK(rank(rat_mat(2, 2, {1, 2, 2, 4})) == 1);
    CHECK(rank(rat_mat(3, 3, {1, 2, 3, 4, 5, 6, 7, 8, 9})) == 2);
}

TEST_CASE("rank over F_p") {
    PrimeField F2(2), F5(5);
    FpMatrix m(F2, 2, 2);
    m.at(0, 0) = m.at(0, 1) = m.at(1, 0) = m.at(1, 1) = 1;
    CHECK(rank(m) == 1);
    CHECK(rank(FpMatrix::identity(F5, 4)) == 4);
}

TEST_CASE("kernel_basis: basic cases") {
    RationalField F;
    CHECK(kernel_basis(RatMatrix::identity(F, 3)).empty());
    CHECK(kernel_basis(RatMatrix(F, 1, 2)).size() == 2);

    PrimeField F2(2);
    FpMatrix m(F2, 2, 2);
    m.at(0, 0) = m.at(0, 1) = m.at(1, 0) = m.at(1, 1) = 1;
    const auto basis = kernel_basis(m);
    REQUIRE(basis.size() == 1);
    CHECK(basis[0].at(0, 0) == 1);
    CHECK(basis[0].at(1, 0) == 1);
}

TEST_CASE("kernel vectors actually lie in the kernel") {
    SplitMix64 rng(11);
    RationalField F;
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t rows = 1 + rng.next() % 5, cols = 1 + rng.next() % 6;
        RatMatrix m(F, rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = Rat(rng.range(-4, 4));
        const auto basis = kernel_basis(m);
        CHECK(rank(m) + basis.size() == cols);  // rank-nullity
        for (const auto& v : basis) CHECK((m * v).is_zero());
    }
}

TEST_CASE("rank-nullity over F_p") {
    SplitMix64 rng(12);
    PrimeField F5(5);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t rows = 1 + rng.next() % 5, cols = 1 + rng.next() % 6;
        FpMatrix m(F5, rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rng.next() % 5;
        const auto basis = kernel_basis(m);
        CHECK(rank(m) + basis.size() == cols);
        for (const auto& v : basis) CHECK((m * v).is_zero());
    }
}

TEST_CASE("fraction-free and plain elimination agree on low-rank products") {
    SplitMix64 rng(16);
    RationalField F;
    for (int trial = 0; trial < 30; ++trial) {
        // rank(AB) <= k by construction; the two elimination routes must agree.
        const std::size_t m = 3 + rng.next() % 6, n = 3 + rng.next() % 6,
                          k = 1 + rng.next() % 3;
        RatMatrix a(F, m, k), b(F, k, n);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < k; ++j) a.at(i, j) = Rat(rng.range(-9, 9));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < n; ++j) b.at(i, j) = Rat(rng.range(-9, 9));
        const RatMatrix prod = a * b;
        const std::size_t rk = rank(prod);
        CHECK(rk <= k);
        CHECK(rk + kernel_basis(prod).size() == n);
    }
}

TEST_CASE("rank is invariant under invertible row and column transforms") {
    SplitMix64 rng(13);
    RationalField F;
    for (int trial = 0; trial < 10; ++trial) {
        const std::size_t n = 4;
        RatMatrix m(F, n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                m.at(i, j) = Rat(rng.range(-2, 2)) * Rat(rng.range(0, 1));
        const RatMatrix g = random_invertible(rng, n), h = random_invertible(rng, n);
        CHECK(rank(g * m * h) == rank(m));
    }
}

TEST_CASE("rank mod p vs rank over the integers on 0/1 matrices") {
    SplitMix64 rng(14);
    RationalField FQ;
    // For 0/1 matrices of size <= 6, every minor is below 6! = 720, so no
    // pivot can degenerate modulo a prime above that and the ranks agree.
    PrimeField Fbig(1009);
    PrimeField F2(2), F3(3);
    for (int trial = 0; trial < 25; ++trial) {
        const std::size_t n = 2 + rng.next() % 5;
        RatMatrix mq(FQ, n, n);
        FpMatrix mbig(Fbig, n, n), m2(F2, n, n), m3(F3, n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const std::uint64_t bit = rng.next() % 2;
                mq.at(i, j) = Rat(static_cast<long>(bit));
                mbig.at(i, j) = bit;
                m2.at(i, j) = bit;
                m3.at(i, j) = bit;
            }
        const std::size_t rq = rank(mq);
        CHECK(rank(mbig) == rq);
        CHECK(rank(m2) <= rq);
        CHECK(rank(m3) <= rq);
    }
}

TEST_CASE("commutator: examples and errors") {
    RationalField F;
    const RatMatrix e12 = RatMatrix::unit(F, 2, 0, 1), e21 = RatMatrix::unit(F, 2, 1, 0);
    CHECK(commutator(e12, e12).is_zero());

    const RatMatrix h = commutator(e12, e21);
    CHECK(h == rat_mat(2, 2, {1, 0, 0, -1}));

    RatMatrix diag(F, 2, 2);
    diag.at(0, 0) = 1;
    diag.at(1, 1) = 2;
    CHECK(commutator(diag, e12) == e12.scaled(Rat(-1)));

    CHECK_THROWS_AS(commutator(e12, RatMatrix(F, 3, 3)), std::invalid_argument);
    CHECK_THROWS_AS(commutator(RatMatrix(F, 2, 3), RatMatrix(F, 2, 3)), std::invalid_argument);
}

TEST_CASE("commutator is bilinear and antisymmetric") {
    SplitMix64 rng(15);
    RationalField F;
    for (int trial = 0; trial < 10; ++trial) {
        RatMatrix x(F, 3, 3), y(F, 3, 3);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) {
                x.at(i, j) = Rat(rng.range(-5, 5));
                y.at(i, j) = Rat(rng.range(-5, 5));
            }
        CHECK(commutator(x, y) == commutator(y, x).scaled(Rat(-1)));
        const Rat c(rng.range(-3, 3));
        CHECK(commutator(x.scaled(c), y) == commutator(x, y).scaled(c));
        CHECK(commutator(x + y, y) == commutator(x, y));
    }
}

TEST_CASE("is_nilpotent") {
    RationalField F;
    CHECK(is_nilpotent(RatMatrix(F, 3, 3)));
    CHECK_FALSE(is_nilpotent(RatMatrix::identity(F, 3)));

    RatMatrix j3(F, 3, 3);
    j3.at(0, 1) = j3.at(1, 2) = 1;
    CHECK(is_nilpotent(j3));

    PrimeField F3(3);
    FpMatrix m(F3, 2, 2);
    m.at(0, 1) = 2;
    CHECK(is_nilpotent(m));
}

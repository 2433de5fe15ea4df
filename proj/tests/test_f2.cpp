#include <random>

#include "doctest.h"
#include "workbench/bigint.hpp"
#include "workbench/f2.hpp"

using namespace workbench;

TEST_CASE("rank basics") {
    CHECK(rank(F2Matrix(3, 3)) == 0);
    CHECK(rank(F2Matrix::identity(4)) == 4);
    CHECK(rank(F2Matrix::from_rows({{1, 1}, {1, 1}})) == 1);
}

TEST_CASE("kernel basics") {
    CHECK(kernel_basis(F2Matrix::identity(3)).empty());
    CHECK(kernel_basis(F2Matrix(2, 5)).size() == 5);

    auto basis = kernel_basis(F2Matrix::from_rows({{1, 1, 0}, {0, 1, 1}}));
    REQUIRE(basis.size() == 1);
    CHECK(basis[0] == F2Vector::from_bits({1, 1, 1}));
}

TEST_CASE("solve basics") {
    F2Vector b = F2Vector::from_bits({0, 1});
    auto x = solve(F2Matrix::identity(2), b);
    REQUIRE(x.has_value());
    CHECK(*x == b);

    CHECK_FALSE(solve(F2Matrix(2, 2), b).has_value());

    auto y = solve(F2Matrix::from_rows({{1, 1}, {0, 1}}), b);
    REQUIRE(y.has_value());
    CHECK(*y == F2Vector::from_bits({1, 1}));
}

TEST_CASE("rank + kernel = cols and solutions verify, randomized") {
    std::mt19937_64 rng(20240811);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t rows = 1 + rng() % 12;
        std::size_t cols = 1 + rng() % 12;
        F2Matrix m(rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c)
                if (rng() & 1) m.set(r, c, true);

        auto basis = kernel_basis(m);
        CHECK(rank(m) + basis.size() == cols);
        for (const auto& v : basis) CHECK(m.apply(v).is_zero());

        F2Vector x(cols);
        for (std::size_t c = 0; c < cols; ++c)
            if (rng() & 1) x.set(c, true);
        F2Vector b = m.apply(x);
        auto sol = solve(m, b);
        REQUIRE(sol.has_value());
        CHECK(m.apply(*sol) == b);
    }
}

TEST_CASE("rank is invariant under row permutation") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t rows = 2 + rng() % 10;
        std::size_t cols = 1 + rng() % 10;
        F2Matrix m(rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c)
                if (rng() & 1) m.set(r, c, true);
        std::vector<std::size_t> order(rows);
        for (std::size_t r = 0; r < rows; ++r) order[r] = r;
        std::shuffle(order.begin(), order.end(), rng);
        F2Matrix shuffled(rows, cols);
        for (std::size_t r = 0; r < rows; ++r) shuffled.row(r) = m.row(order[r]);
        CHECK(rank(m) == rank(shuffled));
    }
}

TEST_CASE("gauss solver matches one-shot solve") {
    F2Matrix m = F2Matrix::from_rows({{1, 0, 1}, {1, 1, 0}, {0, 1, 1}, {1, 1, 1}});
    GaussSolver solver(m);
    CHECK(solver.rank() == 3);
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 20; ++trial) {
        F2Vector x(3);
        for (std::size_t c = 0; c < 3; ++c)
            if (rng() & 1) x.set(c, true);
        auto sol = solver.solve(m.apply(x));
        REQUIRE(sol.has_value());
        CHECK(*sol == x);
    }
    F2Vector bad(4);
    bad.set(0, true);
    CHECK_FALSE(solver.solve(bad).has_value());
}

TEST_CASE("matrix multiply and transpose") {
    F2Matrix a = F2Matrix::from_rows({{1, 1, 0}, {0, 1, 1}});
    F2Matrix b = F2Matrix::from_rows({{1, 0}, {1, 1}, {0, 1}});
    F2Matrix ab = a.multiply(b);
    CHECK(ab == F2Matrix::from_rows({{0, 1}, {1, 0}}));
    CHECK(a.transposed().transposed() == a);
}

TEST_CASE("bigint arithmetic") {
    BigInt a(123456789012345678LL);
    BigInt b = a * a;
    CHECK(b.to_string() == "15241578753238836527968299765279684");
    CHECK((b - b).is_zero());
    CHECK((BigInt(5) - BigInt(9)).to_string() == "-4");
    CHECK(BigInt(-12).div_exact(4).to_string() == "-3");
    CHECK_THROWS(BigInt(5).div_exact(2));
    CHECK(BigInt(10) < BigInt(11));
    CHECK(BigInt(-10) < BigInt(2));

    BigInt big(1);
    for (int i = 0; i < 40; ++i) big = big * BigInt(10);
    CHECK(big.to_string() == "1" + std::string(40, '0'));
    CHECK(big.divisible_by(2));
    bool ok = true;
    big.to_int64(ok);
    CHECK_FALSE(ok);
}

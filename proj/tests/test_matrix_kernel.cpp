#include <random>

#include "doctest.h"

#include "bcn/boolean_matrix.hpp"
#include "bcn/json_io.hpp"
#include "bcn/rational.hpp"
#include "bcn/stp.hpp"

#include <nlohmann/json.hpp>

using namespace bcn;

namespace {

LogicalMatrix random_logical(std::mt19937_64& rng, int rows, int cols) {
    std::uniform_int_distribution<int> pick(0, rows - 1);
    std::vector<int> unit_rows(static_cast<size_t>(cols));
    for (auto& r : unit_rows) r = pick(rng);
    return {rows, std::move(unit_rows)};
}

RationalMatrix random_rational(std::mt19937_64& rng, int rows, int cols) {
    std::uniform_int_distribution<int> num(-3, 3);
    std::uniform_int_distribution<int> den(1, 4);
    RationalMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) m.at(r, c) = Rational(num(rng), den(rng));
    }
    return m;
}

BooleanMatrix random_boolean(std::mt19937_64& rng, int rows, int cols) {
    std::uniform_int_distribution<int> coin(0, 1);
    BooleanMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            if (coin(rng)) m.set(r, c);
        }
    }
    return m;
}

}  // namespace

TEST_CASE("rational arithmetic is exact and normalized") {
    Rational half(1, 2);
    Rational third(1, 3);
    CHECK(half + third == Rational(5, 6));
    CHECK(half * third == Rational(1, 6));
    CHECK(half - half == Rational(0));
    CHECK(Rational(2, 4) == half);
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(half / third == Rational(3, 2));
    CHECK(Rational(-2, 3) < Rational(-1, 3));
    CHECK(Rational(7).str() == "7");
    CHECK(Rational(-3, 8).str() == "-3/8");
    CHECK(Rational::parse("5/10") == half);
    CHECK(Rational::parse("-7") == Rational(-7));
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
    CHECK_THROWS_AS(half / Rational(0), std::invalid_argument);

    Rational big((1ll << 62) - 1);
    CHECK_THROWS_AS(big * big, std::overflow_error);
}

TEST_CASE("logical matrix delta construction and round trips") {
    LogicalMatrix m = LogicalMatrix::delta(8, {2, 3, 1, 5});
    CHECK(m.rows() == 8);
    CHECK(m.cols() == 4);
    CHECK(m.delta_index(0) == 2);
    CHECK(m.unit_row(2) == 0);
    CHECK_THROWS_AS(LogicalMatrix::delta(2, {3}), std::out_of_range);
    CHECK_THROWS_AS(LogicalMatrix(0, {}), std::invalid_argument);

    // densify then sparsify is the identity
    CHECK(LogicalMatrix::from_boolean(m.to_boolean()) == m);

    CHECK(m.to_delta_string() == "delta(8)[2 3 1 5]");
    CHECK(LogicalMatrix::from_delta_string(m.to_delta_string()) == m);
    CHECK_THROWS_AS(LogicalMatrix::from_delta_string("delta(8)(1 2)"), std::invalid_argument);

    json j = to_json(m);
    CHECK(logical_from_json(j) == m);

    BooleanMatrix not_logical(2, 1);
    CHECK_THROWS_AS(LogicalMatrix::from_boolean(not_logical), std::invalid_argument);
}

TEST_CASE("semi-tensor product on unit-vector shapes") {
    CHECK(stp(LogicalMatrix::delta(2, {2, 1}), LogicalMatrix::unit(2, 1)) == LogicalMatrix::unit(2, 2));
    CHECK(stp(LogicalMatrix::unit(2, 1), LogicalMatrix::unit(2, 1)) == LogicalMatrix::unit(4, 1));

    std::mt19937_64 rng(7101);
    LogicalMatrix b44 = random_logical(rng, 4, 4);
    CHECK(stp(LogicalMatrix::identity(2), b44) == b44);

    // matching inner dimensions reduce to the ordinary product
    LogicalMatrix a = random_logical(rng, 3, 5);
    LogicalMatrix b = random_logical(rng, 5, 2);
    CHECK(stp(a, b) == mul(a, b));
}

TEST_CASE("semi-tensor product is associative") {
    std::mt19937_64 rng(7102);
    std::uniform_int_distribution<int> dim(1, 4);
    for (int trial = 0; trial < 200; ++trial) {
        LogicalMatrix a = random_logical(rng, dim(rng), dim(rng));
        LogicalMatrix b = random_logical(rng, dim(rng), dim(rng));
        LogicalMatrix c = random_logical(rng, dim(rng), dim(rng));
        CHECK(stp(stp(a, b), c) == stp(a, stp(b, c)));
    }
    for (int trial = 0; trial < 20; ++trial) {
        RationalMatrix a = random_rational(rng, dim(rng), dim(rng));
        RationalMatrix b = random_rational(rng, dim(rng), dim(rng));
        RationalMatrix c = random_rational(rng, dim(rng), dim(rng));
        CHECK(stp(stp(a, b), c) == stp(a, stp(b, c)));
    }
}

TEST_CASE("unit vectors commute across matrices up to an identity lift") {
    // w A = (I_k (x) A) w for every unit w
    std::mt19937_64 rng(7103);
    for (int k = 1; k <= 4; ++k) {
        RationalMatrix a = random_rational(rng, 3, 2);
        RationalMatrix lift = kron(RationalMatrix::identity(k), a);
        for (int i = 1; i <= k; ++i) {
            RationalMatrix w = LogicalMatrix::unit(k, i).to_rational();
            CHECK(stp(w, a) == stp(lift, w));
        }
    }
}

TEST_CASE("kronecker product on logical and boolean matrices") {
    CHECK(kron(LogicalMatrix::unit(2, 1), LogicalMatrix::unit(2, 2)) == LogicalMatrix::unit(4, 2));
    CHECK(kron(LogicalMatrix::identity(2), LogicalMatrix::unit(2, 1)) ==
          LogicalMatrix::delta(4, {1, 3}));

    // ones-row (x) identity lays the identity blocks side by side
    BooleanMatrix expected = BooleanMatrix::from_bitstrings(std::vector<std::string>{"1010", "0101"});
    CHECK(kron(BooleanMatrix::ones(1, 2), BooleanMatrix::identity(2)) == expected);
}

TEST_CASE("khatri-rao product stacks columns") {
    CHECK(khatri_rao(LogicalMatrix::delta(2, {1, 2}), LogicalMatrix::delta(2, {2, 1})) ==
          LogicalMatrix::delta(4, {2, 3}));
    CHECK(khatri_rao(LogicalMatrix::delta(2, {1, 1}), LogicalMatrix::delta(2, {1, 1})) ==
          LogicalMatrix::delta(4, {1, 1}));
    CHECK_THROWS_AS(khatri_rao(LogicalMatrix::identity(2), LogicalMatrix::identity(4)),
                    std::invalid_argument);
}

TEST_CASE("khatri-rao factors joint evaluation") {
    // (M_y x) (x) (M_z x) = (M_y * M_z) x for every unit x
    std::mt19937_64 rng(7104);
    for (int n = 1; n <= 4; ++n) {
        int width = 1 << n;
        LogicalMatrix my = random_logical(rng, 2, width);
        LogicalMatrix mz = random_logical(rng, 2, width);
        LogicalMatrix joint = khatri_rao(my, mz);
        for (int i = 1; i <= width; ++i) {
            LogicalMatrix x = LogicalMatrix::unit(width, i);
            CHECK(kron(stp(my, x), stp(mz, x)) == stp(joint, x));
        }
    }
}

TEST_CASE("swap matrix exchanges tensor factors") {
    CHECK(swap_matrix(2, 2) == LogicalMatrix::delta(4, {1, 3, 2, 4}));
    CHECK(swap_matrix(1, 5) == LogicalMatrix::identity(5));
    CHECK(swap_matrix(5, 1) == LogicalMatrix::identity(5));

    for (auto [m, n] : {std::pair{3, 2}, std::pair{2, 3}, std::pair{4, 4}}) {
        LogicalMatrix w = swap_matrix(m, n);
        // block form [I_n (x) d_m^1, ..., I_n (x) d_m^m]
        LogicalMatrix blocks = kron(LogicalMatrix::identity(n), LogicalMatrix::unit(m, 1));
        for (int r = 2; r <= m; ++r) {
            LogicalMatrix block = kron(LogicalMatrix::identity(n), LogicalMatrix::unit(m, r));
            std::vector<int> merged = blocks.delta_indices();
            for (int idx : block.delta_indices()) merged.push_back(idx);
            blocks = LogicalMatrix::delta(m * n, merged);
        }
        CHECK(w == blocks);
        for (int i = 1; i <= m; ++i) {
            for (int j = 1; j <= n; ++j) {
                LogicalMatrix x = LogicalMatrix::unit(m, i);
                LogicalMatrix y = LogicalMatrix::unit(n, j);
                CHECK(stp(w, kron(x, y)) == kron(y, x));
            }
        }
    }
}

TEST_CASE("power-reducing matrix duplicates a unit vector") {
    CHECK(power_reducing(2) == LogicalMatrix::delta(4, {1, 4}));
    CHECK(power_reducing(3) == LogicalMatrix::delta(9, {1, 5, 9}));
    for (int k = 1; k <= 6; ++k) {
        LogicalMatrix reducer = power_reducing(k);
        for (int i = 1; i <= k; ++i) {
            LogicalMatrix w = LogicalMatrix::unit(k, i);
            CHECK(kron(w, w) == stp(reducer, w));
        }
    }
}

TEST_CASE("boolean product basics") {
    std::mt19937_64 rng(7105);
    BooleanMatrix b = random_boolean(rng, 6, 6);
    CHECK(bool_product(BooleanMatrix::identity(6), b) == b);

    // every row of ones*B is the column-wise OR of B
    BooleanMatrix all = bool_product(BooleanMatrix::ones(6, 6), b);
    for (int c = 0; c < 6; ++c) {
        bool any = !b.column_empty(c);
        for (int r = 0; r < 6; ++r) CHECK(all.get(r, c) == any);
    }

    CHECK(bool_and(b, b) == b);
    CHECK(leq(bool_and(b, BooleanMatrix::identity(6)), b));
    CHECK_THROWS_AS(bool_product(BooleanMatrix(2, 3), BooleanMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("boolean product is associative and monotone") {
    std::mt19937_64 rng(7106);
    for (int trial = 0; trial < 100; ++trial) {
        BooleanMatrix a = random_boolean(rng, 5, 4);
        BooleanMatrix b = random_boolean(rng, 4, 3);
        BooleanMatrix c = random_boolean(rng, 3, 6);
        CHECK(bool_product(bool_product(a, b), c) == bool_product(a, bool_product(b, c)));

        BooleanMatrix bigger = bool_or(a, random_boolean(rng, 5, 4));
        CHECK(leq(bool_product(a, b), bool_product(bigger, b)));
    }
}

TEST_CASE("boolean power equals repeated products") {
    std::mt19937_64 rng(7107);
    BooleanMatrix a = random_boolean(rng, 5, 5);
    BooleanMatrix expected = a;
    for (int e = 1; e <= 6; ++e) {
        CHECK(bool_power(a, e) == expected);
        expected = bool_product(expected, a);
    }
}

TEST_CASE("sign pattern of a summed transition matrix") {
    // F 1_M sums the input blocks; its sign pattern is the reachability matrix
    LogicalMatrix f = LogicalMatrix::delta(8, {2, 1, 4, 5, 6, 7, 8, 4, 1, 1, 8, 5, 6, 7, 8, 4});
    RationalMatrix summed = stp(f.to_rational(), RationalMatrix::ones(2, 1));
    BooleanMatrix expected(8, 8);
    const std::vector<std::vector<int>> cols = {{1, 2}, {1}, {4, 8}, {5}, {6}, {7}, {8}, {4}};
    for (size_t j = 0; j < cols.size(); ++j) {
        for (int i : cols[j]) expected.set(i - 1, static_cast<int>(j));
    }
    CHECK(sgn(summed) == expected);
}

TEST_CASE("boolean matrix serialization round trips") {
    std::mt19937_64 rng(7108);
    BooleanMatrix m = random_boolean(rng, 9, 70);  // spills into a second word per row
    auto strings = m.to_bitstrings();
    CHECK(BooleanMatrix::from_bitstrings(strings) == m);
    json j = to_json(m);
    CHECK(boolean_from_json(j) == m);
    CHECK_THROWS_AS(BooleanMatrix::from_bitstrings(std::vector<std::string>{"01", "0"}),
                    std::invalid_argument);
}

TEST_CASE("equal column grouping and equivalence checks") {
    BooleanMatrix m(3, 4);
    m.set(0, 0);
    m.set(0, 2);
    m.set(1, 1);
    m.set(1, 3);
    m.set(2, 3);
    auto classes = equal_column_classes(m);
    CHECK(classes == std::vector<int>{0, 1, 0, 2});

    BooleanMatrix rel = equivalence_from_classes(std::vector<int>{0, 0, 1});
    CHECK(is_equivalence_matrix(rel));
    CHECK(rel.get(0, 1));
    CHECK_FALSE(rel.get(0, 2));

    BooleanMatrix asym(2, 2);
    asym.set(0, 0);
    asym.set(1, 1);
    asym.set(0, 1);
    CHECK_FALSE(is_equivalence_matrix(asym));

    // symmetric + reflexive but not transitive
    BooleanMatrix nontrans = BooleanMatrix::identity(3);
    nontrans.set(0, 1);
    nontrans.set(1, 0);
    nontrans.set(1, 2);
    nontrans.set(2, 1);
    CHECK_FALSE(is_equivalence_matrix(nontrans));
}

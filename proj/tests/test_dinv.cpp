#include <doctest.h>

#include "dinv.hpp"
#include "errors.hpp"
#include "staircase.hpp"

#include <random>
#include <stdexcept>

using namespace dcover;

namespace {

const GenSet& k15_tensor() {
    static const GenSet s = tensor(torus_14_15(), whitehead_sum_22());
    return s;
}

// d values of the n = 15 cover on the grid labels 75i + 45j, rows j
constexpr std::int64_t k15_grid[5][3] = {
    {22, 14, 14}, {18, 6, 20}, {10, 16, 22}, {10, 22, 16}, {18, 20, 6}};

GenSet random_symmetric_genset(std::mt19937& rng) {
    std::uniform_int_distribution<std::int64_t> coord(0, 60);
    std::uniform_int_distribution<int> count(1, 25);
    GenSet s;
    const int k = count(rng);
    for (int i = 0; i < k; ++i) {
        const std::int64_t a = coord(rng), b = coord(rng);
        s.push_back({a, b});
        s.push_back({b, a});
    }
    return normalize_genset(std::move(s));
}

}  // namespace

TEST_CASE("psi two-branch definition") {
    CHECK(psi({6, 88}, 75) == 13);   // beta - alpha = 82 >= 75
    CHECK(psi({10, 77}, 75) == 10);  // beta - alpha = 67 < 75
    std::mt19937 rng(11);
    std::uniform_int_distribution<std::int64_t> coord(0, 200);
    for (int trial = 0; trial < 200; ++trial) {
        const std::int64_t a = coord(rng), b = coord(rng);
        CHECK(psi({a, b}, 0) == std::max(a, b));
    }
}

TEST_CASE("delta is a min over generators") {
    CHECK(delta(k15_tensor(), 0) == 39);
    CHECK(delta(k15_tensor(), 45) == 19);
    CHECK(delta(k15_tensor(), -75) == 85);
    CHECK_THROWS_AS(delta({}, 0), std::invalid_argument);

    SUBCASE("monotone nonincreasing as the set grows") {
        std::mt19937 rng(12);
        for (int trial = 0; trial < 50; ++trial) {
            GenSet small = random_symmetric_genset(rng);
            GenSet large = small;
            for (const auto& extra : random_symmetric_genset(rng)) large.push_back(extra);
            large = normalize_genset(std::move(large));
            for (std::int64_t m = -40; m <= 40; m += 7)
                CHECK(delta(large, m) <= delta(small, m));
        }
    }
    SUBCASE("pareto pruning never changes delta") {
        const auto pruned = pareto_min(k15_tensor());
        for (std::int64_t m = -112; m <= 112; ++m)
            CHECK(delta(pruned, m) == delta(k15_tensor(), m));
        std::mt19937 rng(13);
        for (int trial = 0; trial < 30; ++trial) {
            const auto s = random_symmetric_genset(rng);
            const auto p = pareto_min(s);
            for (std::int64_t m = -70; m <= 70; ++m) CHECK(delta(p, m) == delta(s, m));
        }
    }
}

TEST_CASE("lens term") {
    CHECK(lens_term(225, 0) == BigRat(56));
    CHECK(lens_term(225, 75) == BigRat(6));
    CHECK(lens_term(1, 0) == BigRat(0));
    CHECK(lens_term(225, 112) == BigRat(-56, 225));
    CHECK_THROWS_AS(lens_term(10, 0), std::invalid_argument);
    CHECK_THROWS_AS(lens_term(-3, 0), std::invalid_argument);
}

TEST_CASE("surgery d-invariant") {
    const auto& s = k15_tensor();
    CHECK(d_surgery(s, 225, 0) == BigRat(22));
    CHECK(d_surgery(s, 225, 75) == BigRat(14));
    CHECK(d_surgery(s, 225, -75) == BigRat(14));
    CHECK(d_surgery(s, 225, -105) == BigRat(6));
    CHECK(d_surgery_int(s, 225, 0) == 22);

    SUBCASE("appendix convention is the global negation") {
        for (std::int64_t m = -112; m <= 112; ++m)
            CHECK(d_surgery(s, 225, m, Convention::appendix) == -d_surgery(s, 225, m));
    }
    SUBCASE("labels off the order-15 subgroup are honest rationals") {
        CHECK(d_surgery(s, 225, 112) == BigRat(506, 225));
        CHECK(d_surgery(s, 225, -112) == BigRat(506, 225));
        CHECK_THROWS_AS(d_surgery_int(s, 225, 112), integrality_error);
    }
    SUBCASE("wrong N for the complex shows up as non-integrality") {
        CHECK_THROWS_AS(d_surgery_int(s, 15, 1), integrality_error);
    }
    SUBCASE("label range is enforced") {
        CHECK_THROWS_AS(d_surgery(s, 225, 113), std::invalid_argument);
        CHECK_THROWS_AS(d_surgery(s, 225, -113), std::invalid_argument);
    }
}

TEST_CASE("spinc label reduction") {
    CHECK(label_of_group_element(120, 225).m == -105);
    CHECK(label_of_group_element(330, 225).m == 105);
    CHECK(label_of_group_element(0, 1).m == 0);
    CHECK(label_of_group_element(-300, 225).m == -75);
    CHECK_THROWS_AS(label_of_group_element(1, 4), std::invalid_argument);
}

TEST_CASE("full d-table of the n = 15 cover") {
    const DTable table = d_table(k15_tensor(), 225);
    CHECK(table.N() == 225);
    CHECK(table.values().size() == 225);

    SUBCASE("grid labels 75i + 45j carry the known values") {
        for (int j = 0; j < 5; ++j)
            for (int i = 0; i < 3; ++i)
                CHECK(table.d_int(75 * i + 45 * j) == k15_grid[j][i]);
    }
    SUBCASE("column i = 0") {
        const std::int64_t want[5] = {22, 18, 10, 10, 18};
        for (int j = 0; j < 5; ++j) CHECK(table.d_int(45 * j) == want[j]);
    }
    SUBCASE("conjugation symmetry over all labels") {
        for (std::int64_t m = 0; m <= 112; ++m) CHECK(table.d(m) == table.d(-m));
    }
    SUBCASE("values are even integers exactly on the order-15 subgroup") {
        for (std::int64_t m = -112; m <= 112; ++m) {
            const BigRat v = table.d(m);
            if (m % 15 == 0) {
                CHECK(denominator(v) == 1);
                CHECK(numerator(v) % 2 == 0);
            } else {
                CHECK(denominator(v) != 1);
            }
        }
    }
    SUBCASE("grid accessor reduces arbitrary group elements") {
        CHECK(table.d(225) == table.d(0));
        CHECK(table.d(-450 + 75) == table.d(75));
    }
}

TEST_CASE("degenerate N = 1 table") {
    const DTable table = d_table({{0, 0}}, 1);
    CHECK(table.values().size() == 1);
    CHECK(table.d(0) == BigRat(0));
    CHECK(table.d(12345) == BigRat(0));
}

TEST_CASE("d-table properties on random symmetric complexes") {
    std::mt19937 rng(14);
    for (std::int64_t N : {9, 25, 49, 225}) {
        for (int trial = 0; trial < 10; ++trial) {
            const auto s = random_symmetric_genset(rng);
            const DTable table = d_table(s, N);
            for (std::int64_t m = 0; m <= (N - 1) / 2; ++m) CHECK(table.d(m) == table.d(-m));
        }
    }
    CHECK_THROWS_AS(d_table({{0, 0}}, 10), std::invalid_argument);
}

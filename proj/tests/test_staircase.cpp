#include <doctest.h>

#include "staircase.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

using namespace dcover;

namespace {

bool contains(const GenSet& s, BifiltGen g) {
    return std::binary_search(s.begin(), s.end(), g);
}

bool swap_symmetric(const GenSet& s) {
    for (const auto& g : s)
        if (!contains(s, {g.beta, g.alpha})) return false;
    return true;
}

// any strictly increasing nonnegative sequence folds into a staircase:
// pair x_i with x_{count-1-i}
Staircase random_staircase(std::mt19937& rng) {
    std::uniform_int_distribution<int> count_dist(1, 9), step(1, 12);
    const int count = count_dist(rng);
    std::vector<std::int64_t> xs(count);
    std::int64_t v = step(rng) - 1;
    for (int i = 0; i < count; ++i) {
        xs[i] = v;
        v += step(rng);
    }
    GenSet g;
    for (int i = 0; i < count; ++i) g.push_back({xs[i], xs[count - 1 - i]});
    return Staircase::from_corners(std::move(g));
}

}  // namespace

TEST_CASE("T(14,15) staircase matches the known generator list") {
    const auto s = torus_14_15();
    CHECK(s.size() == 15);
    CHECK(contains(s.generators(), {0, 105}));
    CHECK(contains(s.generators(), {105, 0}));
    CHECK(contains(s.generators(), {28, 28}));
    int self_symmetric = 0;
    for (const auto& g : s.generators())
        if (g.alpha == g.beta) ++self_symmetric;
    CHECK(self_symmetric == 1);
    CHECK(swap_symmetric(s.generators()));
}

TEST_CASE("22-fold Whitehead double staircase") {
    const auto s = whitehead_sum_22();
    CHECK(s.size() == 23);
    CHECK(contains(s.generators(), {0, 22}));
    CHECK(contains(s.generators(), {11, 11}));
    CHECK(swap_symmetric(s.generators()));
}

TEST_CASE("consecutive torus staircase") {
    CHECK(consecutive_torus_staircase(15).generators() == torus_14_15().generators());
    // k = 5 corner of the n = 15 model
    CHECK(contains(consecutive_torus_staircase(15).generators(), {15, 45}));
    const auto s19 = consecutive_torus_staircase(19);
    CHECK(s19.size() == 19);
    std::int64_t max_beta = 0;
    for (const auto& g : s19.generators()) max_beta = std::max(max_beta, g.beta);
    CHECK(max_beta == 171);  // T_18
    CHECK_THROWS_AS(consecutive_torus_staircase(13), std::invalid_argument);
    CHECK_THROWS_AS(consecutive_torus_staircase(16), std::invalid_argument);
    CHECK_THROWS_AS(consecutive_torus_staircase(3), std::invalid_argument);
}

TEST_CASE("unit staircase") {
    CHECK(unit_staircase(22).generators() == whitehead_sum_22().generators());
    CHECK(unit_staircase(0).generators() == GenSet{{0, 0}});
    CHECK(unit_staircase(2).generators() == GenSet{{0, 2}, {1, 1}, {2, 0}});
    CHECK_THROWS_AS(unit_staircase(-1), std::invalid_argument);
}

TEST_CASE("staircase validation") {
    CHECK_THROWS_AS(Staircase::from_corners({}), std::invalid_argument);
    CHECK_THROWS_AS(Staircase::from_corners({{-1, 1}, {1, -1}}), std::invalid_argument);
    // not swap-symmetric
    CHECK_THROWS_AS(Staircase::from_corners({{0, 1}}), std::invalid_argument);
    // symmetric but not an antichain: (0,0) is dominated
    CHECK_THROWS_AS(Staircase::from_corners({{0, 0}, {0, 1}, {1, 0}}), std::invalid_argument);
    // duplicate corners collapse instead of failing
    CHECK(Staircase::from_corners({{0, 1}, {1, 0}, {0, 1}}).size() == 2);
}

TEST_CASE("tensor of generator sets") {
    const auto c1 = torus_14_15();
    const auto c2 = whitehead_sum_22();
    CHECK(c1.size() * c2.size() == 345);
    const auto s = tensor(c1, c2);
    CHECK(s.size() == 337);  // 8 coordinate collisions among the 345 sums
    CHECK(contains(s, {39, 39}));  // (28,28) + (11,11)
    CHECK(swap_symmetric(s));

    SUBCASE("unit_staircase(0) is the tensor identity") {
        CHECK(tensor(c1, unit_staircase(0)) == c1.generators());
        CHECK(tensor(unit_staircase(0), c2) == c2.generators());
    }
    SUBCASE("commutative and associative on generator sets") {
        std::mt19937 rng(101);
        for (int trial = 0; trial < 25; ++trial) {
            const auto a = random_staircase(rng).generators();
            const auto b = random_staircase(rng).generators();
            const auto c = random_staircase(rng).generators();
            CHECK(tensor(a, b) == tensor(b, a));
            CHECK(tensor(tensor(a, b), c) == tensor(a, tensor(b, c)));
        }
    }
    SUBCASE("unit staircases add under tensor") {
        CHECK(tensor(unit_staircase(5), unit_staircase(17)) == unit_staircase(22).generators());
    }
}

TEST_CASE("pareto_min") {
    CHECK(pareto_min({{0, 2}, {1, 1}, {1, 2}}) == GenSet{{0, 2}, {1, 1}});
    CHECK(pareto_min({}).empty());
    CHECK(pareto_min({{3, 3}}) == GenSet{{3, 3}});

    SUBCASE("a staircase is already an antichain") {
        std::mt19937 rng(55);
        for (int trial = 0; trial < 25; ++trial) {
            const auto s = random_staircase(rng).generators();
            CHECK(pareto_min(s) == s);
        }
    }
    SUBCASE("output is an antichain and every dropped point is dominated") {
        std::mt19937 rng(56);
        std::uniform_int_distribution<std::int64_t> coord(0, 30);
        for (int trial = 0; trial < 50; ++trial) {
            GenSet s;
            for (int i = 0; i < 40; ++i) s.push_back({coord(rng), coord(rng)});
            s = normalize_genset(std::move(s));
            const auto frontier = pareto_min(s);
            for (const auto& x : frontier)
                for (const auto& y : frontier)
                    CHECK((x == y || !(y.alpha <= x.alpha && y.beta <= x.beta)));
            std::set<BifiltGen> kept(frontier.begin(), frontier.end());
            for (const auto& x : s) {
                if (kept.count(x)) continue;
                bool dominated = false;
                for (const auto& y : frontier)
                    if (y.alpha <= x.alpha && y.beta <= x.beta) dominated = true;
                CHECK(dominated);
            }
        }
    }
    SUBCASE("paper tensor set prunes to 79 points") {
        CHECK(pareto_min(tensor(torus_14_15(), whitehead_sum_22())).size() == 79);
    }
}

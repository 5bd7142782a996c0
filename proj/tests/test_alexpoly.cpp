#include <doctest.h>

#include "alexpoly.hpp"

#include <stdexcept>
#include <vector>

using namespace dcover;

namespace {

IntLaurentPoly t_power_minus_one(int n) {
    return IntLaurentPoly::from_terms({{n, 1}, {0, -1}});
}

const std::vector<int> odd_primes = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31};

}  // namespace

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic(1) == IntLaurentPoly::from_terms({{1, 1}, {0, -1}}));
    CHECK(cyclotomic(2) == IntLaurentPoly::from_terms({{1, 1}, {0, 1}}));
    CHECK(cyclotomic(6) == IntLaurentPoly::from_terms({{2, 1}, {1, -1}, {0, 1}}));
    // phi_30 = t^8 + t^7 - t^5 - t^4 - t^3 + t + 1
    CHECK(cyclotomic(30) ==
          IntLaurentPoly::from_terms({{8, 1}, {7, 1}, {5, -1}, {4, -1}, {3, -1}, {1, 1}, {0, 1}}));
    CHECK(cyclotomic(30).eval(-1) == 1);
    CHECK(cyclotomic(6).eval(-1) == 3);
    CHECK(cyclotomic(10).eval(-1) == 5);
    CHECK_THROWS_AS(cyclotomic(0), std::invalid_argument);
    CHECK_THROWS_AS(cyclotomic(-4), std::invalid_argument);
}

TEST_CASE("product of phi_d over divisors of n is t^n - 1") {
    for (int n = 1; n <= 60; ++n) {
        IntLaurentPoly prod(BigInt(1));
        for (int d = 1; d <= n; ++d)
            if (n % d == 0) prod = prod * cyclotomic(d);
        CHECK(prod == t_power_minus_one(n));
    }
}

TEST_CASE("torus knot Alexander polynomial (t^n + 1)/(t + 1)") {
    CHECK(torus2_alexander(3) == IntLaurentPoly::from_terms({{2, 1}, {1, -1}, {0, 1}}));
    CHECK(torus2_alexander(1) == IntLaurentPoly(BigInt(1)));
    CHECK(torus2_alexander(15).eval(-1) == 15);
    CHECK(torus2_alexander(15).degree() == 14);
    CHECK_THROWS_AS(torus2_alexander(4), std::invalid_argument);
    CHECK_THROWS_AS(torus2_alexander(0), std::invalid_argument);
    CHECK_THROWS_AS(torus2_alexander(-3), std::invalid_argument);
}

TEST_CASE("pretzel knot Alexander polynomial") {
    const auto expected3 = torus2_alexander(3) * torus2_alexander(3);
    CHECK(pretzel_alexander(3) == expected3);
    CHECK(pretzel_alexander(3) ==
          IntLaurentPoly::from_terms({{4, 1}, {3, -2}, {2, 3}, {1, -2}, {0, 1}}));
    CHECK(pretzel_alexander(1) == IntLaurentPoly(BigInt(1)));
    CHECK(pretzel_alexander(15).eval(-1) == 225);
    CHECK_THROWS_AS(pretzel_alexander(6), std::invalid_argument);

    SUBCASE("coefficients are symmetric") {
        for (int n : {3, 5, 7, 9, 11, 13, 15}) {
            const auto p = pretzel_alexander(n);
            const int deg = p.degree();
            for (int k = 0; k <= deg; ++k) CHECK(p.coeff(k) == p.coeff(deg - k));
        }
    }
}

TEST_CASE("cyclotomic factorization of (t^pq + 1)/(t + 1)") {
    SUBCASE("paper instance p=3, q=5") {
        const auto [f1, f2, f3] = cyclotomic_split(3, 5);
        CHECK(f1 * f2 * f3 == torus2_alexander(15));
        CHECK(f1.eval(-1) == 3);
        CHECK(f2.eval(-1) == 5);
        CHECK(f3.eval(-1) == 1);
    }
    SUBCASE("all odd prime pairs with pq <= 105") {
        for (int p : odd_primes)
            for (int q : odd_primes) {
                if (p >= q || p * q > 105) continue;
                const auto [f1, f2, f3] = cyclotomic_split(p, q);
                CHECK(f1 * f2 * f3 == torus2_alexander(p * q));
                CHECK(f1.eval(-1) == p);
                CHECK(f2.eval(-1) == q);
                CHECK(f3.eval(-1) == 1);
            }
    }
    SUBCASE("rejects bad input") {
        CHECK_THROWS_AS(cyclotomic_split(3, 3), std::invalid_argument);
        CHECK_THROWS_AS(cyclotomic_split(3, 9), std::invalid_argument);
        CHECK_THROWS_AS(cyclotomic_split(2, 5), std::invalid_argument);
        CHECK_THROWS_AS(cyclotomic_split(3, 1), std::invalid_argument);
    }
}

TEST_CASE("homology order of the branched double cover") {
    CHECK(homology_order(pretzel_alexander(15)) == 225);
    CHECK(homology_order(pretzel_alexander(21)) == 441);
    CHECK(homology_order(IntLaurentPoly(BigInt(1))) == 1);
    CHECK(homology_order(IntLaurentPoly{}) == 0);
    for (int n = 1; n <= 31; n += 2)
        CHECK(homology_order(pretzel_alexander(n)) == BigInt(n) * n);
    // insensitive to the Laurent unit
    auto shifted = IntLaurentPoly::monomial(1, -7) * pretzel_alexander(15);
    CHECK(homology_order(shifted) == 225);
    auto negated = -pretzel_alexander(15);
    CHECK(homology_order(negated) == 225);
}

TEST_CASE("odd prime detection") {
    CHECK(is_odd_prime(3));
    CHECK(is_odd_prime(31));
    CHECK_FALSE(is_odd_prime(2));
    CHECK_FALSE(is_odd_prime(1));
    CHECK_FALSE(is_odd_prime(9));
    CHECK_FALSE(is_odd_prime(91));  // 7 * 13
    CHECK_FALSE(is_odd_prime(-3));
}

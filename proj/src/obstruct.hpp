#pragma once

// Concordance obstructions on a d-table:
//  - split test: if M is rationally homology cobordant to M1 # M2 with
//    coprime homology orders, D(i,j) = d(ipa+jqb) - d(ipa) - d(jqb) is
//    constant; a non-constant grid obstructs the splitting.
//  - metabolizer test: a rational homology ball filling forces a subgroup
//    of order sqrt(|H_1|) on which the linking form and all d vanish.

#include "dinv.hpp"

#include <cstdint>
#include <vector>

namespace dcover {

struct SplitGrid {
    std::int64_t p = 0;  // distinct odd primes, N = (pq)^2
    std::int64_t q = 0;
    std::int64_t a = 0;  // generator of the order-p^2 subgroup: a = q^2
    std::int64_t b = 0;  // generator of the order-q^2 subgroup: b = p^2
    std::vector<std::vector<std::int64_t>> D;  // D[i][j], i in [0,p), j in [0,q)
    bool obstructed = false;                   // true iff the grid is not constant
};

// Requires table.N == (pq)^2 with p, q distinct odd primes.
SplitGrid split_obstruction(const DTable& table, std::int64_t p, std::int64_t q);

// lambda(x, y) = -xy/N mod 1, canonical representative in [0, 1).
// Only vanishing is used downstream, which is independent of the sign choice.
BigRat linking_form(std::int64_t x, std::int64_t y, std::int64_t N);

// Elements of the order-k subgroup of Z_N (k | N), as symmetric representatives.
std::vector<std::int64_t> cyclic_subgroup(std::int64_t N, std::int64_t order);

struct Metabolizer {
    std::int64_t generator = 0;
    std::int64_t order = 1;
    bool linking_vanishes = false;
    bool d_vanishes = false;
};

// Candidates of order sqrt(N) in Z_N (unique for a cyclic group), with the
// two vanishing conditions evaluated. If no candidate has both flags true,
// the manifold bounds no rational homology ball compatible with the tests.
// Requires table.N to be a perfect square.
std::vector<Metabolizer> metabolizer_obstruction(const DTable& table);

}  // namespace dcover

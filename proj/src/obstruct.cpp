#include "obstruct.hpp"

#include "alexpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace dcover {

SplitGrid split_obstruction(const DTable& table, std::int64_t p, std::int64_t q) {
    if (!is_odd_prime(p) || !is_odd_prime(q))
        throw std::invalid_argument("split_obstruction: p and q must be odd primes");
    if (p == q) throw std::invalid_argument("split_obstruction: p and q must be distinct");
    if (table.N() != p * p * q * q)
        throw std::invalid_argument("split_obstruction: table.N must equal (pq)^2");

    SplitGrid grid;
    grid.p = p;
    grid.q = q;
    grid.a = q * q;  // order p^2 in Z_{(pq)^2}
    grid.b = p * p;  // order q^2
    grid.D.assign(p, std::vector<std::int64_t>(q, 0));
    const std::int64_t pa = p * grid.a;
    const std::int64_t qb = q * grid.b;
    for (std::int64_t i = 0; i < p; ++i)
        for (std::int64_t j = 0; j < q; ++j)
            grid.D[i][j] =
                table.d_int(i * pa + j * qb) - table.d_int(i * pa) - table.d_int(j * qb);
    for (const auto& row : grid.D)
        for (std::int64_t v : row)
            if (v != grid.D[0][0]) grid.obstructed = true;
    return grid;
}

BigRat linking_form(std::int64_t x, std::int64_t y, std::int64_t N) {
    if (N < 1 || N % 2 == 0)
        throw std::invalid_argument("linking_form: N must be odd and positive");
    BigInt num = (BigInt(-x) * y) % N;
    if (num < 0) num += N;
    return BigRat(num, N);
}

std::vector<std::int64_t> cyclic_subgroup(std::int64_t N, std::int64_t order) {
    if (N < 1 || order < 1 || N % order != 0)
        throw std::invalid_argument("cyclic_subgroup: order must divide N");
    const std::int64_t gen = N / order;
    std::vector<std::int64_t> elems;
    elems.reserve(order);
    for (std::int64_t k = 0; k < order; ++k)
        elems.push_back(label_of_group_element(k * gen, N).m);
    std::sort(elems.begin(), elems.end());
    return elems;
}

std::vector<Metabolizer> metabolizer_obstruction(const DTable& table) {
    const std::int64_t N = table.N();
    std::int64_t root = 0;
    while (root * root < N) ++root;
    if (root * root != N)
        throw std::invalid_argument("metabolizer_obstruction: |H_1| must be a perfect square");

    // Z_N cyclic: a single subgroup of order root, generated by N/root.
    Metabolizer cand;
    cand.order = root;
    cand.generator = N == 1 ? 0 : N / root;
    cand.linking_vanishes = true;
    cand.d_vanishes = true;
    const auto elems = cyclic_subgroup(N, root);
    for (std::int64_t x : elems) {
        for (std::int64_t y : elems)
            if (linking_form(x, y, N) != 0) cand.linking_vanishes = false;
        if (table.d(x) != 0) cand.d_vanishes = false;
    }
    return {cand};
}

}  // namespace dcover

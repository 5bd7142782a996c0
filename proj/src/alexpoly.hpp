#pragma once

// Alexander polynomials of the torus knots T(2,n) and of the pretzel knots
// P(n,-n,n-1), cyclotomic polynomials, and the branched double cover
// homology order |H_1(M(K))| = |Delta_K(-1)|.

#include "laurent.hpp"

#include <cstdint>
#include <tuple>

namespace dcover {

bool is_odd_prime(std::int64_t n);

// phi_n(t), by iterated exact division of t^n - 1 by phi_d over the
// proper divisors d of n.
IntLaurentPoly cyclotomic(int n);

// Delta_{T(2,n)}(t) = (t^n + 1)/(t + 1), n odd.
IntLaurentPoly torus2_alexander(int n);

// Delta of P(n,-n,n-1) (= K_n with its polynomial-one companion erased):
// the square of torus2_alexander(n).
IntLaurentPoly pretzel_alexander(int n);

// (phi_2p, phi_2q, phi_2pq) for distinct odd primes; their product is
// (t^pq + 1)/(t + 1).
std::tuple<IntLaurentPoly, IntLaurentPoly, IntLaurentPoly> cyclotomic_split(int p, int q);

// |delta(-1)|
BigInt homology_order(const IntLaurentPoly& delta);

}  // namespace dcover

#include "alexpoly.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace dcover {

bool is_odd_prime(std::int64_t n) {
    if (n < 3 || n % 2 == 0) return false;
    for (std::int64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

namespace {

IntLaurentPoly t_power_minus_one(int n) {
    return IntLaurentPoly::from_terms({{n, 1}, {0, -1}});
}

}  // namespace

IntLaurentPoly cyclotomic(int n) {
    if (n < 1) throw std::invalid_argument("cyclotomic: n must be >= 1");
    // Bottom-up over the divisor lattice of n; no shared cache, so the
    // function stays safe for concurrent callers.
    std::map<int, IntLaurentPoly> phi;
    for (int d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        IntLaurentPoly f = t_power_minus_one(d);
        for (const auto& [e, p] : phi)
            if (d % e == 0) f = f.divide_exact(p);
        phi.emplace(d, std::move(f));
    }
    return phi.at(n);
}

IntLaurentPoly torus2_alexander(int n) {
    if (n < 1 || n % 2 == 0)
        throw std::invalid_argument("torus2_alexander: n must be odd and positive");
    // (t^n + 1)/(t + 1); exact since n is odd
    return IntLaurentPoly::from_terms({{n, 1}, {0, 1}})
        .divide_exact(IntLaurentPoly::from_terms({{1, 1}, {0, 1}}));
}

IntLaurentPoly pretzel_alexander(int n) {
    if (n < 1 || n % 2 == 0)
        throw std::invalid_argument("pretzel_alexander: n must be odd and positive");
    const IntLaurentPoly half = torus2_alexander(n);
    return half * half;
}

std::tuple<IntLaurentPoly, IntLaurentPoly, IntLaurentPoly> cyclotomic_split(int p, int q) {
    if (!is_odd_prime(p) || !is_odd_prime(q))
        throw std::invalid_argument("cyclotomic_split: p and q must be odd primes");
    if (p == q) throw std::invalid_argument("cyclotomic_split: p and q must be distinct");
    return {cyclotomic(2 * p), cyclotomic(2 * q), cyclotomic(2 * p * q)};
}

BigInt homology_order(const IntLaurentPoly& delta) {
    return abs(delta.normalized().eval(-1));
}

}  // namespace dcover

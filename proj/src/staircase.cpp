#include "staircase.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace dcover {

GenSet normalize_genset(GenSet s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

// keeps every downstream difference/sum (psi, delta, tensor) inside int64
constexpr std::int64_t kMaxLevel = std::int64_t(1) << 44;

Staircase Staircase::from_corners(GenSet corners) {
    GenSet g = normalize_genset(std::move(corners));
    if (g.empty()) throw std::invalid_argument("staircase: generator set must be nonempty");
    for (const auto& p : g) {
        if (p.alpha < 0 || p.beta < 0)
            throw std::invalid_argument("staircase: bifiltration levels must be nonnegative");
        if (p.alpha > kMaxLevel || p.beta > kMaxLevel)
            throw std::invalid_argument("staircase: bifiltration level too large");
        if (!std::binary_search(g.begin(), g.end(), BifiltGen{p.beta, p.alpha}))
            throw std::invalid_argument(
                "staircase: not symmetric under (alpha, beta) -> (beta, alpha): missing swap of (" +
                std::to_string(p.alpha) + ", " + std::to_string(p.beta) + ")");
    }
    for (std::size_t i = 1; i < g.size(); ++i) {
        if (g[i].alpha == g[i - 1].alpha || g[i].beta >= g[i - 1].beta)
            throw std::invalid_argument(
                "staircase: beta must strictly descend as alpha ascends (offending alpha = " +
                std::to_string(g[i].alpha) + ")");
    }
    Staircase s;
    s.gens_ = std::move(g);
    return s;
}

Staircase torus_14_15() {
    static constexpr std::int64_t half[][2] = {
        {0, 105}, {1, 91}, {3, 78}, {6, 66}, {10, 55}, {15, 45}, {21, 36}, {28, 28}};
    GenSet g;
    for (const auto& p : half) {
        g.push_back({p[0], p[1]});
        g.push_back({p[1], p[0]});
    }
    return Staircase::from_corners(std::move(g));
}

Staircase whitehead_sum_22() {
    GenSet g;
    for (std::int64_t j = 0; j <= 22; ++j) g.push_back({j, 22 - j});
    return Staircase::from_corners(std::move(g));
}

Staircase consecutive_torus_staircase(int n) {
    if (n % 2 == 0 || n < 15)
        throw std::invalid_argument(
            "consecutive_torus_staircase: n must be odd and >= 15 (the triangular pattern "
            "is not a valid generator list for smaller torus knots)");
    auto tri = [](std::int64_t k) { return k * (k + 1) / 2; };
    GenSet g;
    for (std::int64_t k = 0; k < n; ++k) g.push_back({tri(k), tri(n - 1 - k)});
    return Staircase::from_corners(std::move(g));
}

Staircase unit_staircase(int k) {
    if (k < 0) throw std::invalid_argument("unit_staircase: k must be nonnegative");
    GenSet g;
    for (std::int64_t j = 0; j <= k; ++j) g.push_back({j, k - j});
    return Staircase::from_corners(std::move(g));
}

GenSet tensor(const GenSet& s1, const GenSet& s2) {
    GenSet out;
    const std::size_t pairs = s1.size() * s2.size();
    if (pairs <= std::size_t(1) << 24) out.reserve(pairs);
    for (const auto& a : s1)
        for (const auto& b : s2) out.push_back({a.alpha + b.alpha, a.beta + b.beta});
    return normalize_genset(std::move(out));
}

GenSet tensor(const Staircase& s1, const Staircase& s2) {
    return tensor(s1.generators(), s2.generators());
}

GenSet pareto_min(const GenSet& s) {
    GenSet sorted = normalize_genset(s);
    GenSet out;
    std::int64_t best_beta = 0;
    for (const auto& p : sorted) {
        // sorted by (alpha, beta): p is dominated iff some kept point has beta <= p.beta
        if (out.empty() || p.beta < best_beta) {
            out.push_back(p);
            best_beta = p.beta;
        }
    }
    return out;
}

}  // namespace dcover

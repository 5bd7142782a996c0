#pragma once

// Staircase complexes, reduced to what the surgery correction terms need:
// the bifiltration levels (alpha, beta) of the grading-0 cycle generators.
// Acyclic summands and differentials never enter the d computation.

#include <compare>
#include <cstdint>
#include <vector>

namespace dcover {

struct BifiltGen {
    std::int64_t alpha = 0;
    std::int64_t beta = 0;
    friend auto operator<=>(const BifiltGen&, const BifiltGen&) = default;
};

// Sorted, duplicate-free set of bifiltration levels.
using GenSet = std::vector<BifiltGen>;

GenSet normalize_genset(GenSet s);

// A staircase: nonempty, swap-symmetric under (alpha, beta) -> (beta, alpha),
// and strictly monotone (sorted by alpha ascending, beta strictly descends).
class Staircase {
public:
    static Staircase from_corners(GenSet corners);  // throws std::invalid_argument

    const GenSet& generators() const { return gens_; }
    std::size_t size() const { return gens_.size(); }

private:
    Staircase() = default;
    GenSet gens_;
};

// The 15 grading-0 cycle generators of the T(14,15) staircase.
Staircase torus_14_15();

// The 23 generators of the staircase of the 22-fold connected sum of
// untwisted Whitehead doubles of the trefoil: {(j, 22-j)}.
Staircase whitehead_sum_22();

// T(n-1,n) model {(T_k, T_{n-1-k})} with T_k = k(k+1)/2. Only accepted for
// odd n >= 15: the triangular pattern is validated against the explicit
// T(14,15) list and provably overcounts for small torus knots, so smaller n
// is rejected rather than silently extrapolated.
Staircase consecutive_torus_staircase(int n);

// {(j, k-j) : 0 <= j <= k}
Staircase unit_staircase(int k);

// All pairwise sums of bifiltration levels, duplicates collapsed.
// The underlying pair count is size(s1) * size(s2).
GenSet tensor(const GenSet& s1, const GenSet& s2);
GenSet tensor(const Staircase& s1, const Staircase& s2);

// Pareto-minimal subset: drop x whenever some y != x has y.alpha <= x.alpha
// and y.beta <= x.beta. Psi is nondecreasing in both coordinates, so delta_m
// over the result equals delta_m over the input for every m.
GenSet pareto_min(const GenSet& s);

}  // namespace dcover

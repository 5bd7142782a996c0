#include "family.hpp"

#include <limits>
#include <stdexcept>

namespace dcover {

SurgeryComplex branched_cover_complex(std::int64_t n) {
    if (n == 1) return {{{0, 0}}, 1, "trivial complex"};
    if (n < 15 || n % 2 == 0 || n % 4 != 3)
        throw std::invalid_argument(
            "branched_cover_complex: n must be 1 or an odd integer >= 15 with n = 3 (mod 4)");
    const std::int64_t doubles = (3 * n - 1) / 2;
    if (doubles > std::numeric_limits<int>::max())
        throw std::invalid_argument("branched_cover_complex: n is too large");
    const Staircase torus = consecutive_torus_staircase(static_cast<int>(n));
    const Staircase whitehead = unit_staircase(static_cast<int>(doubles));
    SurgeryComplex c;
    c.generators = tensor(torus, whitehead);
    c.N = n * n;
    c.source = "S^3_" + std::to_string(n * n) + "(T(" + std::to_string(n - 1) + "," +
               std::to_string(n) + ") # " + std::to_string(doubles) + " Wh(T(2,3)))";
    return c;
}

}  // namespace dcover

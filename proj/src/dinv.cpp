#include "dinv.hpp"

#include "errors.hpp"

#include <limits>
#include <stdexcept>

namespace dcover {

const char* convention_name(Convention c) {
    return c == Convention::table1 ? "table1" : "appendix";
}

namespace {

void require_odd_positive(std::int64_t N, const char* who) {
    if (N < 1 || N % 2 == 0)
        throw std::invalid_argument(std::string(who) + ": N must be odd and positive");
}

}  // namespace

SpincLabel label_of_group_element(std::int64_t g, std::int64_t N) {
    require_odd_positive(N, "label_of_group_element");
    std::int64_t r = g % N;
    if (r < 0) r += N;
    if (r > (N - 1) / 2) r -= N;
    return {r, N};
}

std::int64_t psi(const BifiltGen& g, std::int64_t m) {
    return g.beta - g.alpha >= m ? g.beta - m : g.alpha;
}

std::int64_t delta(const GenSet& s, std::int64_t m) {
    if (s.empty()) throw std::invalid_argument("delta: generator set must be nonempty");
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    for (const auto& g : s) best = std::min(best, psi(g, m));
    return best;
}

BigRat lens_term(std::int64_t N, std::int64_t m) {
    require_odd_positive(N, "lens_term");
    const BigInt t = BigInt(2) * m - N;
    return BigRat(t * t - N, BigInt(4) * N);
}

BigRat d_surgery(const GenSet& s, std::int64_t N, std::int64_t m, Convention conv) {
    require_odd_positive(N, "d_surgery");
    if (m > (N - 1) / 2 || m < -(N - 1) / 2)
        throw std::invalid_argument("d_surgery: Spin^c label out of the symmetric range");
    BigRat v = BigRat(BigInt(2) * delta(s, m)) - lens_term(N, m);
    return conv == Convention::table1 ? v : -v;
}

std::int64_t d_surgery_int(const GenSet& s, std::int64_t N, std::int64_t m, Convention conv) {
    const BigRat v = d_surgery(s, N, m, conv);
    if (denominator(v) != 1)
        throw integrality_error("d(" + std::to_string(m) + ") is not an integer (" +
                                v.str() + "); inconsistent N for this complex?");
    return static_cast<std::int64_t>(numerator(v));
}

DTable::DTable(std::int64_t N, Convention conv, std::map<std::int64_t, BigRat> values,
               std::string source)
    : N_(N), conv_(conv), values_(std::move(values)), source_(std::move(source)) {
    require_odd_positive(N_, "DTable");
    if (values_.size() != static_cast<std::size_t>(N_))
        throw std::invalid_argument("DTable: a value is required for every residue mod N");
    for (const auto& [m, v] : values_) {
        (void)v;
        if (m > (N_ - 1) / 2 || m < -(N_ - 1) / 2)
            throw std::invalid_argument("DTable: label out of the symmetric range");
    }
}

BigRat DTable::d(std::int64_t g) const {
    return values_.at(label_of_group_element(g, N_).m);
}

std::int64_t DTable::d_int(std::int64_t g) const {
    const BigRat& v = d(g);
    if (denominator(v) != 1)
        throw integrality_error("d(" + std::to_string(g) + ") is not an integer (" + v.str() +
                                ")");
    return static_cast<std::int64_t>(numerator(v));
}

DTable d_table(const GenSet& s, std::int64_t N, Convention conv, std::string source) {
    require_odd_positive(N, "d_table");
    std::map<std::int64_t, BigRat> values;
    for (std::int64_t m = -(N - 1) / 2; m <= (N - 1) / 2; ++m)
        values.emplace(m, d_surgery(s, N, m, conv));
    return DTable(N, conv, std::move(values), std::move(source));
}

}  // namespace dcover

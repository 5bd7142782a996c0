#pragma once

// Correction terms of N-surgery from a staircase generator set:
//   Psi(alpha, beta) = beta - m  if beta - alpha >= m, else alpha
//   delta_m(S)       = min Psi over S
//   lens_term(N, m)  = ((2m - N)^2 - N) / (4N)
//   d(M, m)          = 2 delta_m - lens_term  (table convention; the
//                      appendix convention is the global negation)
// d is an exact rational; on the surgery instances used here it is an
// integer exactly on the Spin^c labels the obstructions consume.

#include "laurent.hpp"
#include "staircase.hpp"

#include <cstdint>
#include <map>
#include <string>

namespace dcover {

enum class Convention { table1, appendix };

const char* convention_name(Convention c);

struct SpincLabel {
    std::int64_t m = 0;  // symmetric representative, |m| <= (N-1)/2
    std::int64_t N = 1;
    friend bool operator==(const SpincLabel&, const SpincLabel&) = default;
};

// Reduce a group element of Z_N into the symmetric representative range.
SpincLabel label_of_group_element(std::int64_t g, std::int64_t N);

std::int64_t psi(const BifiltGen& g, std::int64_t m);

// min of psi over a nonempty generator set
std::int64_t delta(const GenSet& s, std::int64_t m);

BigRat lens_term(std::int64_t N, std::int64_t m);

// Requires |m| <= (N-1)/2.
BigRat d_surgery(const GenSet& s, std::int64_t N, std::int64_t m,
                 Convention conv = Convention::table1);

// Integer view; throws integrality_error when the exact value is not an
// integer (inconsistent N for the complex, or a label off the subgroup
// where integrality holds).
std::int64_t d_surgery_int(const GenSet& s, std::int64_t N, std::int64_t m,
                           Convention conv = Convention::table1);

class DTable {
public:
    DTable(std::int64_t N, Convention conv, std::map<std::int64_t, BigRat> values,
           std::string source = {});

    std::int64_t N() const { return N_; }
    Convention convention() const { return conv_; }
    const std::string& source() const { return source_; }

    // keyed by symmetric representative m, every residue present
    const std::map<std::int64_t, BigRat>& values() const { return values_; }

    BigRat d(std::int64_t g) const;       // g an arbitrary group element
    std::int64_t d_int(std::int64_t g) const;  // throws integrality_error if fractional

private:
    std::int64_t N_;
    Convention conv_;
    std::map<std::int64_t, BigRat> values_;
    std::string source_;
};

// d_surgery at every representative of Z_N (N odd).
DTable d_table(const GenSet& s, std::int64_t N, Convention conv = Convention::table1,
               std::string source = {});

}  // namespace dcover

#pragma once

// Formatting and file I/O: Markdown / CSV / JSON rendering for every
// artifact, and the JSON corner-list loader for staircases. All output is
// deterministic byte-for-byte; no floating point anywhere.

#include "dinv.hpp"
#include "laurent.hpp"
#include "obstruct.hpp"
#include "staircase.hpp"

#include <string>
#include <vector>

namespace dcover {

enum class Format { md, csv, json };

Format parse_format(const std::string& name);  // "md" | "csv" | "json"
const char* format_name(Format f);
Convention parse_convention(const std::string& name);  // "table1" | "appendix"

std::string rational_to_string(const BigRat& v);  // "22" or "506/225"

// "[[0,1],[1,-1],[2,1]]", ascending exponents
std::string poly_to_json(const IntLaurentPoly& p);

// polynomial + determinant |p(-1)| in the requested format
std::string render_alexander(const std::string& name, const IntLaurentPoly& p, Format f);

// JSON corner list, one "[alpha, beta]" per line; this is also the
// on-disk staircase file format.
std::string genset_to_json(const GenSet& s);
std::string render_genset(const GenSet& s, Format f);

Staircase staircase_from_json(const std::string& text);
Staircase load_staircase_file(const std::string& path);

std::string render_dtable(const DTable& t, Format f);
std::string render_splitgrid(const SplitGrid& g, Format f);
std::string render_metabolizers(const std::vector<Metabolizer>& ms, std::int64_t N, Format f);

// End-to-end reproduction for n = pq: the d grid at labels i*pa + j*qb and
// the sign-reversed second differences, in the published row/column layout
// (rows j, columns i), followed by the verdict line.
std::string render_reproduction(std::int64_t p, std::int64_t q, Format f, Convention conv);

}  // namespace dcover

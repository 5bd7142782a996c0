#include "io.hpp"

#include "alexpoly.hpp"
#include "errors.hpp"
#include "family.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace dcover {

Format parse_format(const std::string& name) {
    if (name == "md") return Format::md;
    if (name == "csv") return Format::csv;
    if (name == "json") return Format::json;
    throw std::invalid_argument("unknown format '" + name + "' (expected md, csv or json)");
}

const char* format_name(Format f) {
    switch (f) {
        case Format::md: return "md";
        case Format::csv: return "csv";
        default: return "json";
    }
}

Convention parse_convention(const std::string& name) {
    if (name == "table1") return Convention::table1;
    if (name == "appendix") return Convention::appendix;
    throw std::invalid_argument("unknown convention '" + name +
                                "' (expected table1 or appendix)");
}

std::string rational_to_string(const BigRat& v) {
    if (denominator(v) == 1) return numerator(v).str();
    return numerator(v).str() + "/" + denominator(v).str();
}

namespace {

std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default: out += c;
        }
    }
    return out;
}

// non-integral rationals are quoted so the JSON stays number-exact
std::string rational_to_json(const BigRat& v) {
    if (denominator(v) == 1) return numerator(v).str();
    return "\"" + rational_to_string(v) + "\"";
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

std::string grid_md(const std::string& title,
                    const std::vector<std::vector<std::int64_t>>& rows_j, std::int64_t p,
                    std::int64_t q) {
    std::ostringstream os;
    os << title << "\n\n";
    os << "|     |";
    for (std::int64_t i = 0; i < p; ++i) os << " i=" << i << " |";
    os << "\n| --- |";
    for (std::int64_t i = 0; i < p; ++i) os << " --- |";
    os << "\n";
    for (std::int64_t j = 0; j < q; ++j) {
        os << "| j=" << j << " |";
        for (std::int64_t i = 0; i < p; ++i) os << " " << rows_j[j][i] << " |";
        os << "\n";
    }
    return os.str();
}

std::string grid_json(const std::vector<std::vector<std::int64_t>>& rows, int indent) {
    const std::string pad(indent, ' ');
    std::ostringstream os;
    os << "[\n";
    for (std::size_t r = 0; r < rows.size(); ++r) {
        os << pad << "  [";
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
            if (c) os << ", ";
            os << rows[r][c];
        }
        os << "]" << (r + 1 < rows.size() ? "," : "") << "\n";
    }
    os << pad << "]";
    return os.str();
}

}  // namespace

std::string poly_to_json(const IntLaurentPoly& p) {
    std::ostringstream os;
    os << "[";
    bool first = true;
    for (const auto& [exp, c] : p.terms()) {
        if (!first) os << ",";
        os << "[" << exp << "," << c.str() << "]";
        first = false;
    }
    os << "]";
    return os.str();
}

std::string render_alexander(const std::string& name, const IntLaurentPoly& p, Format f) {
    const BigInt det = homology_order(p);
    std::ostringstream os;
    switch (f) {
        case Format::md:
            os << name << ": " << p.to_string() << "\n";
            os << "determinant: " << det.str() << "\n";
            break;
        case Format::csv:
            os << "exponent,coefficient\n";
            for (const auto& [exp, c] : p.terms()) os << exp << "," << c.str() << "\n";
            break;
        case Format::json:
            os << "{\n";
            os << "  \"name\": \"" << json_escape(name) << "\",\n";
            os << "  \"polynomial\": " << poly_to_json(p) << ",\n";
            os << "  \"human\": \"" << json_escape(p.to_string()) << "\",\n";
            os << "  \"determinant\": " << det.str() << "\n";
            os << "}\n";
            break;
    }
    return os.str();
}

std::string genset_to_json(const GenSet& s) {
    std::ostringstream os;
    os << "[\n";
    for (std::size_t k = 0; k < s.size(); ++k)
        os << "  [" << s[k].alpha << ", " << s[k].beta << "]" << (k + 1 < s.size() ? "," : "")
           << "\n";
    os << "]\n";
    return os.str();
}

std::string render_genset(const GenSet& s, Format f) {
    std::ostringstream os;
    switch (f) {
        case Format::md:
            os << "| alpha | beta |\n| --- | --- |\n";
            for (const auto& g : s) os << "| " << g.alpha << " | " << g.beta << " |\n";
            break;
        case Format::csv:
            os << "alpha,beta\n";
            for (const auto& g : s) os << g.alpha << "," << g.beta << "\n";
            break;
        case Format::json:
            return genset_to_json(s);
    }
    return os.str();
}

Staircase staircase_from_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw io_error(std::string("staircase file is not valid JSON: ") + e.what());
    }
    if (!doc.is_array())
        throw io_error("staircase file must be a JSON array of [alpha, beta] pairs");
    GenSet corners;
    for (const auto& item : doc) {
        if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() ||
            !item[1].is_number_integer())
            throw io_error("staircase entries must be integer pairs [alpha, beta]");
        corners.push_back({item[0].get<std::int64_t>(), item[1].get<std::int64_t>()});
    }
    return Staircase::from_corners(std::move(corners));
}

Staircase load_staircase_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot open staircase file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return staircase_from_json(buf.str());
}

std::string render_dtable(const DTable& t, Format f) {
    std::ostringstream os;
    switch (f) {
        case Format::md:
            os << "| m | d |\n| --- | --- |\n";
            for (const auto& [m, v] : t.values())
                os << "| " << m << " | " << rational_to_string(v) << " |\n";
            break;
        case Format::csv:
            os << "m,d\n";
            for (const auto& [m, v] : t.values())
                os << m << "," << rational_to_string(v) << "\n";
            break;
        case Format::json: {
            os << "{\n";
            os << "  \"N\": " << t.N() << ",\n";
            os << "  \"convention\": \"" << convention_name(t.convention()) << "\",\n";
            os << "  \"source\": \"" << json_escape(t.source()) << "\",\n";
            os << "  \"values\": [\n";
            std::size_t k = 0;
            for (const auto& [m, v] : t.values()) {
                os << "    [" << m << ", " << rational_to_json(v) << "]"
                   << (++k < t.values().size() ? "," : "") << "\n";
            }
            os << "  ]\n}\n";
            break;
        }
    }
    return os.str();
}

std::string render_splitgrid(const SplitGrid& g, Format f) {
    std::ostringstream os;
    switch (f) {
        case Format::md: {
            // published layout: rows j, columns i, sign reversed for readability
            std::vector<std::vector<std::int64_t>> neg(g.q, std::vector<std::int64_t>(g.p));
            for (std::int64_t i = 0; i < g.p; ++i)
                for (std::int64_t j = 0; j < g.q; ++j) neg[j][i] = -g.D[i][j];
            os << grid_md("-(d(" + std::to_string(g.p * g.a) + "i + " +
                              std::to_string(g.q * g.b) + "j) - d(" +
                              std::to_string(g.p * g.a) + "i) - d(" + std::to_string(g.q * g.b) +
                              "j)):",
                          neg, g.p, g.q);
            os << "\nobstructed: " << bool_str(g.obstructed) << "\n";
            break;
        }
        case Format::csv:
            os << "i,j,D\n";
            for (std::int64_t j = 0; j < g.q; ++j)
                for (std::int64_t i = 0; i < g.p; ++i)
                    os << i << "," << j << "," << g.D[i][j] << "\n";
            os << "obstructed: " << bool_str(g.obstructed) << "\n";
            break;
        case Format::json:
            os << "{\n";
            os << "  \"p\": " << g.p << ",\n";
            os << "  \"q\": " << g.q << ",\n";
            os << "  \"a\": " << g.a << ",\n";
            os << "  \"b\": " << g.b << ",\n";
            os << "  \"D\": " << grid_json(g.D, 2) << ",\n";
            os << "  \"verdict\": " << bool_str(g.obstructed) << "\n";
            os << "}\n";
            break;
    }
    return os.str();
}

std::string render_metabolizers(const std::vector<Metabolizer>& ms, std::int64_t N, Format f) {
    bool obstructed = true;
    for (const auto& m : ms)
        if (m.linking_vanishes && m.d_vanishes) obstructed = false;
    std::ostringstream os;
    switch (f) {
        case Format::md:
            os << "| generator | order | linking_vanishes | d_vanishes |\n";
            os << "| --- | --- | --- | --- |\n";
            for (const auto& m : ms)
                os << "| " << m.generator << " | " << m.order << " | "
                   << bool_str(m.linking_vanishes) << " | " << bool_str(m.d_vanishes) << " |\n";
            os << "\nobstructed: " << bool_str(obstructed) << "\n";
            break;
        case Format::csv:
            os << "generator,order,linking_vanishes,d_vanishes\n";
            for (const auto& m : ms)
                os << m.generator << "," << m.order << "," << bool_str(m.linking_vanishes) << ","
                   << bool_str(m.d_vanishes) << "\n";
            os << "obstructed: " << bool_str(obstructed) << "\n";
            break;
        case Format::json: {
            os << "{\n";
            os << "  \"N\": " << N << ",\n";
            os << "  \"candidates\": [\n";
            for (std::size_t k = 0; k < ms.size(); ++k) {
                os << "    {\"generator\": " << ms[k].generator << ", \"order\": " << ms[k].order
                   << ", \"linking_vanishes\": " << bool_str(ms[k].linking_vanishes)
                   << ", \"d_vanishes\": " << bool_str(ms[k].d_vanishes) << "}"
                   << (k + 1 < ms.size() ? "," : "") << "\n";
            }
            os << "  ],\n";
            os << "  \"verdict\": " << bool_str(obstructed) << "\n";
            os << "}\n";
            break;
        }
    }
    return os.str();
}

std::string render_reproduction(std::int64_t p, std::int64_t q, Format f, Convention conv) {
    const SurgeryComplex complex = branched_cover_complex(p * q);
    const DTable table = d_table(complex.generators, complex.N, conv, complex.source);
    const SplitGrid grid = split_obstruction(table, p, q);
    const std::int64_t pa = p * grid.a;
    const std::int64_t qb = q * grid.b;

    std::vector<std::vector<std::int64_t>> d_rows(q, std::vector<std::int64_t>(p));
    std::vector<std::vector<std::int64_t>> neg_rows(q, std::vector<std::int64_t>(p));
    for (std::int64_t j = 0; j < q; ++j)
        for (std::int64_t i = 0; i < p; ++i) {
            d_rows[j][i] = table.d_int(i * pa + j * qb);
            neg_rows[j][i] = -grid.D[i][j];
        }

    const std::string label = std::to_string(pa) + "i + " + std::to_string(qb) + "j";
    std::ostringstream os;
    switch (f) {
        case Format::md:
            os << grid_md("d(M, " + label + "), M = " + complex.source + ":", d_rows, p, q);
            os << "\n";
            os << grid_md("-(d(" + label + ") - d(" + std::to_string(pa) + "i) - d(" +
                              std::to_string(qb) + "j)):",
                          neg_rows, p, q);
            os << "\nobstructed: " << bool_str(grid.obstructed) << "\n";
            break;
        case Format::csv:
            os << "table,i,j,value\n";
            for (std::int64_t j = 0; j < q; ++j)
                for (std::int64_t i = 0; i < p; ++i)
                    os << "d," << i << "," << j << "," << d_rows[j][i] << "\n";
            for (std::int64_t j = 0; j < q; ++j)
                for (std::int64_t i = 0; i < p; ++i)
                    os << "negD," << i << "," << j << "," << neg_rows[j][i] << "\n";
            os << "obstructed: " << bool_str(grid.obstructed) << "\n";
            break;
        case Format::json:
            os << "{\n";
            os << "  \"n\": " << p * q << ",\n";
            os << "  \"N\": " << complex.N << ",\n";
            os << "  \"convention\": \"" << convention_name(conv) << "\",\n";
            os << "  \"source\": \"" << json_escape(complex.source) << "\",\n";
            os << "  \"d_grid\": " << grid_json(d_rows, 2) << ",\n";
            os << "  \"neg_second_differences\": " << grid_json(neg_rows, 2) << ",\n";
            os << "  \"verdict\": " << bool_str(grid.obstructed) << "\n";
            os << "}\n";
            break;
    }
    return os.str();
}

}  // namespace dcover

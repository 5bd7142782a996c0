// extern-C surface: opaque handles over the core types, exceptions mapped
// to status codes, per-thread error message.

#include "dcover/dcover.h"

#include "alexpoly.hpp"
#include "dinv.hpp"
#include "errors.hpp"
#include "family.hpp"
#include "io.hpp"
#include "laurent.hpp"
#include "obstruct.hpp"
#include "staircase.hpp"

#include <cstdlib>
#include <cstring>
#include <limits>
#include <string>
#include <utility>
#include <vector>

struct dcover_poly {
    dcover::IntLaurentPoly v;
};
struct dcover_staircase {
    dcover::Staircase v;
};
struct dcover_points {
    dcover::GenSet v;
};
struct dcover_dtable {
    dcover::DTable v;
};
struct dcover_splitgrid {
    dcover::SplitGrid v;
};
struct dcover_metab {
    std::vector<dcover::Metabolizer> v;
    std::int64_t N = 1;
};

namespace {

thread_local std::string g_last_error;

template <class F>
int guarded(F&& body) {
    try {
        g_last_error.clear();
        return body();
    } catch (const dcover::integrality_error& e) {
        g_last_error = e.what();
        return DCOVER_EINTERNAL;
    } catch (const dcover::io_error& e) {
        g_last_error = e.what();
        return DCOVER_EIO;
    } catch (const std::invalid_argument& e) {
        g_last_error = e.what();
        return DCOVER_EINVAL;
    } catch (const std::domain_error& e) {
        g_last_error = e.what();
        return DCOVER_EINVAL;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return DCOVER_EINTERNAL;
    }
}

int invalid(const char* msg) {
    g_last_error = msg;
    return DCOVER_EINVAL;
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

bool fits_i64(const dcover::BigInt& v) {
    return v >= std::numeric_limits<std::int64_t>::min() &&
           v <= std::numeric_limits<std::int64_t>::max();
}

int rational_out(int64_t* num, int64_t* den, const dcover::BigRat& v) {
    const dcover::BigInt n = numerator(v);
    const dcover::BigInt d = denominator(v);
    if (!fits_i64(n) || !fits_i64(d)) {
        g_last_error = "rational does not fit in int64";
        return DCOVER_ERANGE;
    }
    *num = static_cast<std::int64_t>(n);
    *den = static_cast<std::int64_t>(d);
    return DCOVER_OK;
}

int checked_format(int format, dcover::Format* out) {
    switch (format) {
        case DCOVER_FORMAT_MD: *out = dcover::Format::md; return DCOVER_OK;
        case DCOVER_FORMAT_CSV: *out = dcover::Format::csv; return DCOVER_OK;
        case DCOVER_FORMAT_JSON: *out = dcover::Format::json; return DCOVER_OK;
        default: return invalid("unknown format code");
    }
}

int checked_convention(int convention, dcover::Convention* out) {
    switch (convention) {
        case DCOVER_CONV_TABLE: *out = dcover::Convention::table1; return DCOVER_OK;
        case DCOVER_CONV_APPENDIX: *out = dcover::Convention::appendix; return DCOVER_OK;
        default: return invalid("unknown convention code");
    }
}

int fit_int(int64_t n, const char* who, int* out_ok) {
    if (n < std::numeric_limits<int>::min() || n > std::numeric_limits<int>::max()) {
        g_last_error = std::string(who) + ": argument out of range";
        *out_ok = 0;
        return DCOVER_EINVAL;
    }
    *out_ok = 1;
    return DCOVER_OK;
}

}  // namespace

extern "C" {

const char* dcover_last_error(void) { return g_last_error.c_str(); }

void dcover_string_free(char* s) { std::free(s); }

/* ---- polynomials ---- */

int dcover_poly_cyclotomic(dcover_poly** out, int64_t n) {
    if (!out) return invalid("null out pointer");
    return guarded([&] {
        int ok;
        if (int rc = fit_int(n, "cyclotomic", &ok); !ok) return rc;
        *out = new dcover_poly{dcover::cyclotomic(static_cast<int>(n))};
        return DCOVER_OK;
    });
}

int dcover_poly_torus2_alexander(dcover_poly** out, int64_t n) {
    if (!out) return invalid("null out pointer");
    return guarded([&] {
        int ok;
        if (int rc = fit_int(n, "torus2_alexander", &ok); !ok) return rc;
        *out = new dcover_poly{dcover::torus2_alexander(static_cast<int>(n))};
        return DCOVER_OK;
    });
}

int dcover_poly_pretzel_alexander(dcover_poly** out, int64_t n) {
    if (!out) return invalid("null out pointer");
    return guarded([&] {
        int ok;
        if (int rc = fit_int(n, "pretzel_alexander", &ok); !ok) return rc;
        *out = new dcover_poly{dcover::pretzel_alexander(static_cast<int>(n))};
        return DCOVER_OK;
    });
}

int dcover_poly_cyclotomic_split(dcover_poly** out_2p, dcover_poly** out_2q,
                                 dcover_poly** out_2pq, int64_t p, int64_t q) {
    if (!out_2p || !out_2q || !out_2pq) return invalid("null out pointer");
    return guarded([&] {
        int ok;
        if (int rc = fit_int(p, "cyclotomic_split", &ok); !ok) return rc;
        if (int rc = fit_int(q, "cyclotomic_split", &ok); !ok) return rc;
        auto [f1, f2, f3] =
            dcover::cyclotomic_split(static_cast<int>(p), static_cast<int>(q));
        *out_2p = new dcover_poly{std::move(f1)};
        *out_2q = new dcover_poly{std::move(f2)};
        *out_2pq = new dcover_poly{std::move(f3)};
        return DCOVER_OK;
    });
}

int dcover_poly_mul(dcover_poly** out, const dcover_poly* a, const dcover_poly* b) {
    if (!out || !a || !b) return invalid("null argument");
    return guarded([&] {
        *out = new dcover_poly{a->v * b->v};
        return DCOVER_OK;
    });
}

int dcover_poly_equal(int* out, const dcover_poly* a, const dcover_poly* b) {
    if (!out || !a || !b) return invalid("null argument");
    *out = a->v == b->v ? 1 : 0;
    return DCOVER_OK;
}

int dcover_poly_eval(int64_t* out, const dcover_poly* p, int64_t x) {
    if (!out || !p) return invalid("null argument");
    return guarded([&] {
        const dcover::BigInt v = p->v.eval(dcover::BigInt(x));
        if (!fits_i64(v)) {
            g_last_error = "evaluation does not fit in int64";
            return DCOVER_ERANGE;
        }
        *out = static_cast<std::int64_t>(v);
        return DCOVER_OK;
    });
}

int dcover_poly_homology_order(int64_t* out, const dcover_poly* p) {
    if (!out || !p) return invalid("null argument");
    return guarded([&] {
        const dcover::BigInt v = dcover::homology_order(p->v);
        if (!fits_i64(v)) {
            g_last_error = "homology order does not fit in int64";
            return DCOVER_ERANGE;
        }
        *out = static_cast<std::int64_t>(v);
        return DCOVER_OK;
    });
}

int dcover_poly_term_count(int64_t* out, const dcover_poly* p) {
    if (!out || !p) return invalid("null argument");
    *out = static_cast<std::int64_t>(p->v.terms().size());
    return DCOVER_OK;
}

int dcover_poly_term(int64_t* exp, int64_t* coeff, const dcover_poly* p, int64_t idx) {
    if (!exp || !coeff || !p) return invalid("null argument");
    if (idx < 0 || idx >= static_cast<std::int64_t>(p->v.terms().size()))
        return invalid("term index out of range");
    auto it = p->v.terms().begin();
    std::advance(it, idx);
    if (!fits_i64(it->second)) {
        g_last_error = "coefficient does not fit in int64";
        return DCOVER_ERANGE;
    }
    *exp = it->first;
    *coeff = static_cast<std::int64_t>(it->second);
    return DCOVER_OK;
}

int dcover_poly_to_string(char** out, const dcover_poly* p) {
    if (!out || !p) return invalid("null argument");
    return guarded([&] {
        *out = dup_string(p->v.to_string());
        return DCOVER_OK;
    });
}

int dcover_poly_to_json(char** out, const dcover_poly* p) {
    if (!out || !p) return invalid("null argument");
    return guarded([&] {
        *out = dup_string(dcover::poly_to_json(p->v));
        return DCOVER_OK;
    });
}

int dcover_poly_render(char** out, const char* name, const dcover_poly* p, int format) {
    if (!out || !name || !p) return invalid("null argument");
    return guarded([&] {
        dcover::Format f;
        if (int rc = checked_format(format, &f); rc != DCOVER_OK) return rc;
        *out = dup_string(dcover::render_alexander(name, p->v, f));
        return DCOVER_OK;
    });
}

void dcover_poly_free(dcover_poly* p) { delete p; }

/* ---- staircases and generator sets ---- */

int dcover_staircase_torus_14_15(dcover_staircase** out) {
    if (!out) return invalid("null out pointer");
    return guarded([&] {
        *out = new dcover_staircase{dcover::torus_14_15()};
        return DCOVER_OK;
    });
}

int dcover_staircase_whitehead_sum_22(dcover_staircase** out) {
    if (!out) return invalid("null out pointer");
    return guarded([&] {
        *out = new dcover_staircase{dcover::whitehead_sum_22()};
        return DCOVER_OK;
    });
}

int dcover_staircase_consecutive_torus(dcover_staircase** out, int64_t n) {
    if (!out) return invalid("null out pointer");
    return guarded([&] {
        int ok;
        if (int rc = fit_int(n, "consecutive_torus_staircase", &ok); !ok) return rc;
        *out = new dcover_staircase{dcover::consecutive_torus_staircase(static_cast<int>(n))};
        return DCOVER_OK;
    });
}

int dcover_staircase_unit(dcover_staircase** out, int64_t k) {
    if (!out) return invalid("null out pointer");
    return guarded([&] {
        int ok;
        if (int rc = fit_int(k, "unit_staircase", &ok); !ok) return rc;
        *out = new dcover_staircase{dcover::unit_staircase(static_cast<int>(k))};
        return DCOVER_OK;
    });
}

int dcover_staircase_parse_json(dcover_staircase** out, const char* json_text) {
    if (!out || !json_text) return invalid("null argument");
    return guarded([&] {
        *out = new dcover_staircase{dcover::staircase_from_json(json_text)};
        return DCOVER_OK;
    });
}

int dcover_staircase_load(dcover_staircase** out, const char* path) {
    if (!out || !path) return invalid("null argument");
    return guarded([&] {
        *out = new dcover_staircase{dcover::load_staircase_file(path)};
        return DCOVER_OK;
    });
}

int dcover_staircase_points(dcover_points** out, const dcover_staircase* s) {
    if (!out || !s) return invalid("null argument");
    return guarded([&] {
        *out = new dcover_points{s->v.generators()};
        return DCOVER_OK;
    });
}

void dcover_staircase_free(dcover_staircase* s) { delete s; }

int dcover_tensor(dcover_points** out, const dcover_staircase* s1, const dcover_staircase* s2) {
    if (!out || !s1 || !s2) return invalid("null argument");
    return guarded([&] {
        *out = new dcover_points{dcover::tensor(s1->v, s2->v)};
        return DCOVER_OK;
    });
}

int dcover_points_tensor(dcover_points** out, const dcover_points* a, const dcover_points* b) {
    if (!out || !a || !b) return invalid("null argument");
    return guarded([&] {
        *out = new dcover_points{dcover::tensor(a->v, b->v)};
        return DCOVER_OK;
    });
}

int dcover_pareto_min(dcover_points** out, const dcover_points* s) {
    if (!out || !s) return invalid("null argument");
    return guarded([&] {
        *out = new dcover_points{dcover::pareto_min(s->v)};
        return DCOVER_OK;
    });
}

int dcover_points_count(int64_t* out, const dcover_points* s) {
    if (!out || !s) return invalid("null argument");
    *out = static_cast<std::int64_t>(s->v.size());
    return DCOVER_OK;
}

int dcover_points_get(int64_t* alpha, int64_t* beta, const dcover_points* s, int64_t idx) {
    if (!alpha || !beta || !s) return invalid("null argument");
    if (idx < 0 || idx >= static_cast<std::int64_t>(s->v.size()))
        return invalid("point index out of range");
    *alpha = s->v[static_cast<std::size_t>(idx)].alpha;
    *beta = s->v[static_cast<std::size_t>(idx)].beta;
    return DCOVER_OK;
}

int dcover_points_render(char** out, const dcover_points* s, int format) {
    if (!out || !s) return invalid("null argument");
    return guarded([&] {
        dcover::Format f;
        if (int rc = checked_format(format, &f); rc != DCOVER_OK) return rc;
        *out = dup_string(dcover::render_genset(s->v, f));
        return DCOVER_OK;
    });
}

void dcover_points_free(dcover_points* s) { delete s; }

int dcover_branched_cover_complex(dcover_points** out, int64_t* out_N, char** out_source,
                                  int64_t n) {
    if (!out || !out_N) return invalid("null out pointer");
    return guarded([&] {
        dcover::SurgeryComplex c = dcover::branched_cover_complex(n);
        *out = new dcover_points{std::move(c.generators)};
        *out_N = c.N;
        if (out_source) *out_source = dup_string(c.source);
        return DCOVER_OK;
    });
}

/* ---- correction terms ---- */

int dcover_psi(int64_t* out, int64_t alpha, int64_t beta, int64_t m) {
    if (!out) return invalid("null out pointer");
    *out = dcover::psi({alpha, beta}, m);
    return DCOVER_OK;
}

int dcover_delta(int64_t* out, const dcover_points* s, int64_t m) {
    if (!out || !s) return invalid("null argument");
    return guarded([&] {
        *out = dcover::delta(s->v, m);
        return DCOVER_OK;
    });
}

int dcover_lens_term(int64_t* num, int64_t* den, int64_t N, int64_t m) {
    if (!num || !den) return invalid("null out pointer");
    return guarded([&] { return rational_out(num, den, dcover::lens_term(N, m)); });
}

int dcover_d_surgery(int64_t* num, int64_t* den, const dcover_points* s, int64_t N, int64_t m,
                     int convention) {
    if (!num || !den || !s) return invalid("null argument");
    return guarded([&] {
        dcover::Convention conv;
        if (int rc = checked_convention(convention, &conv); rc != DCOVER_OK) return rc;
        return rational_out(num, den, dcover::d_surgery(s->v, N, m, conv));
    });
}

int dcover_spinc_label(int64_t* m, int64_t g, int64_t N) {
    if (!m) return invalid("null out pointer");
    return guarded([&] {
        *m = dcover::label_of_group_element(g, N).m;
        return DCOVER_OK;
    });
}

int dcover_dtable_compute(dcover_dtable** out, const dcover_points* s, int64_t N,
                          int convention, const char* source) {
    if (!out || !s) return invalid("null argument");
    return guarded([&] {
        dcover::Convention conv;
        if (int rc = checked_convention(convention, &conv); rc != DCOVER_OK) return rc;
        *out = new dcover_dtable{
            dcover::d_table(s->v, N, conv, source ? std::string(source) : std::string())};
        return DCOVER_OK;
    });
}

int dcover_dtable_N(int64_t* out, const dcover_dtable* t) {
    if (!out || !t) return invalid("null argument");
    *out = t->v.N();
    return DCOVER_OK;
}

int dcover_dtable_get(int64_t* num, int64_t* den, const dcover_dtable* t, int64_t g) {
    if (!num || !den || !t) return invalid("null argument");
    return guarded([&] { return rational_out(num, den, t->v.d(g)); });
}

int dcover_dtable_get_int(int64_t* out, const dcover_dtable* t, int64_t g) {
    if (!out || !t) return invalid("null argument");
    return guarded([&] {
        *out = t->v.d_int(g);
        return DCOVER_OK;
    });
}

int dcover_dtable_render(char** out, const dcover_dtable* t, int format) {
    if (!out || !t) return invalid("null argument");
    return guarded([&] {
        dcover::Format f;
        if (int rc = checked_format(format, &f); rc != DCOVER_OK) return rc;
        *out = dup_string(dcover::render_dtable(t->v, f));
        return DCOVER_OK;
    });
}

void dcover_dtable_free(dcover_dtable* t) { delete t; }

/* ---- obstructions ---- */

int dcover_linking_form(int64_t* num, int64_t* den, int64_t x, int64_t y, int64_t N) {
    if (!num || !den) return invalid("null out pointer");
    return guarded([&] { return rational_out(num, den, dcover::linking_form(x, y, N)); });
}

int dcover_split_obstruction(dcover_splitgrid** out, const dcover_dtable* t, int64_t p,
                             int64_t q) {
    if (!out || !t) return invalid("null argument");
    return guarded([&] {
        *out = new dcover_splitgrid{dcover::split_obstruction(t->v, p, q)};
        return DCOVER_OK;
    });
}

int dcover_splitgrid_entry(int64_t* out, const dcover_splitgrid* g, int64_t i, int64_t j) {
    if (!out || !g) return invalid("null argument");
    if (i < 0 || i >= g->v.p || j < 0 || j >= g->v.q) return invalid("grid index out of range");
    *out = g->v.D[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    return DCOVER_OK;
}

int dcover_splitgrid_verdict(int* out, const dcover_splitgrid* g) {
    if (!out || !g) return invalid("null argument");
    *out = g->v.obstructed ? 1 : 0;
    return DCOVER_OK;
}

int dcover_splitgrid_render(char** out, const dcover_splitgrid* g, int format) {
    if (!out || !g) return invalid("null argument");
    return guarded([&] {
        dcover::Format f;
        if (int rc = checked_format(format, &f); rc != DCOVER_OK) return rc;
        *out = dup_string(dcover::render_splitgrid(g->v, f));
        return DCOVER_OK;
    });
}

void dcover_splitgrid_free(dcover_splitgrid* g) { delete g; }

int dcover_metabolizer_obstruction(dcover_metab** out, const dcover_dtable* t) {
    if (!out || !t) return invalid("null argument");
    return guarded([&] {
        *out = new dcover_metab{dcover::metabolizer_obstruction(t->v), t->v.N()};
        return DCOVER_OK;
    });
}

int dcover_metab_count(int64_t* out, const dcover_metab* m) {
    if (!out || !m) return invalid("null argument");
    *out = static_cast<std::int64_t>(m->v.size());
    return DCOVER_OK;
}

int dcover_metab_get(int64_t* generator, int64_t* order, int* linking_vanishes, int* d_vanishes,
                     const dcover_metab* m, int64_t idx) {
    if (!generator || !order || !linking_vanishes || !d_vanishes || !m)
        return invalid("null argument");
    if (idx < 0 || idx >= static_cast<std::int64_t>(m->v.size()))
        return invalid("candidate index out of range");
    const auto& c = m->v[static_cast<std::size_t>(idx)];
    *generator = c.generator;
    *order = c.order;
    *linking_vanishes = c.linking_vanishes ? 1 : 0;
    *d_vanishes = c.d_vanishes ? 1 : 0;
    return DCOVER_OK;
}

int dcover_metab_verdict(int* out, const dcover_metab* m) {
    if (!out || !m) return invalid("null argument");
    int obstructed = 1;
    for (const auto& c : m->v)
        if (c.linking_vanishes && c.d_vanishes) obstructed = 0;
    *out = obstructed;
    return DCOVER_OK;
}

int dcover_metab_render(char** out, const dcover_metab* m, int format) {
    if (!out || !m) return invalid("null argument");
    return guarded([&] {
        dcover::Format f;
        if (int rc = checked_format(format, &f); rc != DCOVER_OK) return rc;
        *out = dup_string(dcover::render_metabolizers(m->v, m->N, f));
        return DCOVER_OK;
    });
}

void dcover_metab_free(dcover_metab* m) { delete m; }

int dcover_reproduce(char** out, int64_t p, int64_t q, int format, int convention) {
    if (!out) return invalid("null out pointer");
    return guarded([&] {
        dcover::Format f;
        if (int rc = checked_format(format, &f); rc != DCOVER_OK) return rc;
        dcover::Convention conv;
        if (int rc = checked_convention(convention, &conv); rc != DCOVER_OK) return rc;
        *out = dup_string(dcover::render_reproduction(p, q, f, conv));
        return DCOVER_OK;
    });
}

}  // extern "C"

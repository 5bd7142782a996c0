// Command-line front end. Everything numeric goes through the C API in
// dcover/dcover.h; this file only parses flags and moves strings around.

#include <dcover/dcover.h>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

namespace {

// exit codes: 0 ok, 2 bad usage/input, 1 internal inconsistency
int exit_code_for(int rc) {
    return rc == DCOVER_EINVAL || rc == DCOVER_EIO ? 2 : 1;
}

int fail(int rc) {
    std::cerr << "error: " << dcover_last_error() << "\n";
    return exit_code_for(rc);
}

int fail_usage(const std::string& msg) {
    std::cerr << "error: " << msg << "\n";
    return 2;
}

struct string_deleter {
    void operator()(char* s) const { dcover_string_free(s); }
};
using api_string = std::unique_ptr<char, string_deleter>;

#define DCOVER_HANDLE(T)                                  \
    struct T##_deleter {                                  \
        void operator()(T* h) const { T##_free(h); }      \
    };                                                    \
    using T##_ptr = std::unique_ptr<T, T##_deleter>

DCOVER_HANDLE(dcover_poly);
DCOVER_HANDLE(dcover_staircase);
DCOVER_HANDLE(dcover_points);
DCOVER_HANDLE(dcover_dtable);
DCOVER_HANDLE(dcover_splitgrid);
DCOVER_HANDLE(dcover_metab);

struct CommonOpts {
    std::string format = "md";
    std::string convention = "table1";
    std::string out_path;
};

void add_common(CLI::App* cmd, CommonOpts* opts, bool with_convention = true) {
    cmd->add_option("--format", opts->format, "output format")
        ->check(CLI::IsMember({"md", "csv", "json"}));
    if (with_convention)
        cmd->add_option("--convention", opts->convention, "sign convention for d")
            ->check(CLI::IsMember({"table1", "appendix"}));
    cmd->add_option("--out", opts->out_path, "write output to a file instead of stdout");
}

int format_code(const std::string& f) {
    if (f == "csv") return DCOVER_FORMAT_CSV;
    if (f == "json") return DCOVER_FORMAT_JSON;
    return DCOVER_FORMAT_MD;
}

int convention_code(const std::string& c) {
    return c == "appendix" ? DCOVER_CONV_APPENDIX : DCOVER_CONV_TABLE;
}

int emit(const std::string& text, const CommonOpts& opts) {
    if (opts.out_path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream f(opts.out_path, std::ios::binary);
    if (!f) return fail_usage("cannot open output file '" + opts.out_path + "'");
    f << text;
    f.flush();
    return f ? 0 : fail_usage("failed writing output file '" + opts.out_path + "'");
}

// Build the generator set + N for a command taking --n and optional
// --staircase-file overrides (one file: use it as the whole complex;
// two files: tensor them; N stays n^2). Returns a process exit code,
// 0 on success.
int complex_for(dcover_points_ptr* out_points, int64_t* out_N, std::string* out_source,
                int64_t n, const std::vector<std::string>& staircase_files) {
    if (staircase_files.empty()) {
        dcover_points* pts = nullptr;
        int64_t N = 0;
        char* src = nullptr;
        if (int rc = dcover_branched_cover_complex(&pts, &N, &src, n); rc != DCOVER_OK)
            return fail(rc);
        out_points->reset(pts);
        *out_N = N;
        api_string src_owner(src);
        *out_source = src ? src : "";
        return 0;
    }
    if (staircase_files.size() > 2)
        return fail_usage("at most two --staircase-file inputs are supported");
    if (n < 1 || n % 2 == 0) return fail_usage("--n must be an odd positive integer");
    if (n > 3037000499LL) return fail_usage("--n is too large (n^2 must fit in 64 bits)");
    std::vector<dcover_staircase_ptr> loaded;
    for (const auto& path : staircase_files) {
        dcover_staircase* s = nullptr;
        if (int rc = dcover_staircase_load(&s, path.c_str()); rc != DCOVER_OK) return fail(rc);
        loaded.emplace_back(s);
    }
    dcover_points* pts = nullptr;
    int rc;
    if (loaded.size() == 1) {
        rc = dcover_staircase_points(&pts, loaded[0].get());
        *out_source = staircase_files[0];
    } else {
        rc = dcover_tensor(&pts, loaded[0].get(), loaded[1].get());
        *out_source = staircase_files[0] + " (x) " + staircase_files[1];
    }
    if (rc != DCOVER_OK) return fail(rc);
    out_points->reset(pts);
    *out_N = n * n;
    return 0;
}

int run_alexander(int64_t pretzel_n, int64_t torus_n, int64_t cyclo_n, int64_t plain_n,
                  int64_t p, int64_t q, const CommonOpts& opts) {
    const int fmt = format_code(opts.format);
    int selectors = 0;
    selectors += pretzel_n > 0 || plain_n > 0;
    selectors += torus_n > 0;
    selectors += cyclo_n > 0;
    selectors += (p > 0 || q > 0);
    if (selectors != 1)
        return fail_usage(
            "choose exactly one of --pretzel/--n, --torus, --cyclotomic, or --p with --q");

    if (p > 0 || q > 0) {
        if (p <= 0 || q <= 0) return fail_usage("--p and --q must be given together");
        dcover_poly *f1r = nullptr, *f2r = nullptr, *f3r = nullptr;
        if (int rc = dcover_poly_cyclotomic_split(&f1r, &f2r, &f3r, p, q); rc != DCOVER_OK)
            return fail(rc);
        dcover_poly_ptr f1(f1r), f2(f2r), f3(f3r);
        const std::string names[3] = {"phi_" + std::to_string(2 * p),
                                      "phi_" + std::to_string(2 * q),
                                      "phi_" + std::to_string(2 * p * q)};
        const dcover_poly* polys[3] = {f1.get(), f2.get(), f3.get()};
        std::string text;
        if (fmt == DCOVER_FORMAT_JSON) {
            text = "{\n  \"factors\": [\n";
            for (int k = 0; k < 3; ++k) {
                char *pj = nullptr, *ps = nullptr;
                int64_t det = 0;
                if (int rc = dcover_poly_to_json(&pj, polys[k]); rc != DCOVER_OK) return fail(rc);
                api_string pj_owner(pj);
                if (int rc = dcover_poly_to_string(&ps, polys[k]); rc != DCOVER_OK)
                    return fail(rc);
                api_string ps_owner(ps);
                if (int rc = dcover_poly_homology_order(&det, polys[k]); rc != DCOVER_OK)
                    return fail(rc);
                text += "    {\"name\": \"" + names[k] + "\", \"polynomial\": " + pj +
                        ", \"human\": \"" + ps + "\", \"determinant\": " + std::to_string(det) +
                        "}" + (k < 2 ? "," : "") + "\n";
            }
            text += "  ]\n}\n";
        } else if (fmt == DCOVER_FORMAT_CSV) {
            text = "name,exponent,coefficient\n";
            for (int k = 0; k < 3; ++k) {
                int64_t count = 0;
                dcover_poly_term_count(&count, polys[k]);
                for (int64_t t = 0; t < count; ++t) {
                    int64_t exp = 0, coeff = 0;
                    if (int rc = dcover_poly_term(&exp, &coeff, polys[k], t); rc != DCOVER_OK)
                        return fail(rc);
                    text += names[k] + "," + std::to_string(exp) + "," + std::to_string(coeff) +
                            "\n";
                }
            }
        } else {
            for (int k = 0; k < 3; ++k) {
                char* block = nullptr;
                if (int rc = dcover_poly_render(&block, names[k].c_str(), polys[k], fmt);
                    rc != DCOVER_OK)
                    return fail(rc);
                api_string owner(block);
                text += block;
            }
        }
        return emit(text, opts);
    }

    dcover_poly* raw = nullptr;
    std::string name;
    int rc;
    if (torus_n > 0) {
        rc = dcover_poly_torus2_alexander(&raw, torus_n);
        name = "T(2," + std::to_string(torus_n) + ")";
    } else if (cyclo_n > 0) {
        rc = dcover_poly_cyclotomic(&raw, cyclo_n);
        name = "phi_" + std::to_string(cyclo_n);
    } else {
        const int64_t n = pretzel_n > 0 ? pretzel_n : plain_n;
        rc = dcover_poly_pretzel_alexander(&raw, n);
        name = "P(" + std::to_string(n) + ",-" + std::to_string(n) + "," +
               std::to_string(n - 1) + ")";
    }
    if (rc != DCOVER_OK) return fail(rc);
    dcover_poly_ptr poly(raw);
    char* rendered = nullptr;
    if (int rc2 = dcover_poly_render(&rendered, name.c_str(), poly.get(), fmt);
        rc2 != DCOVER_OK)
        return fail(rc2);
    api_string owner(rendered);
    return emit(rendered, opts);
}

int run_staircase(int64_t n, int64_t torus_n, int64_t unit_k,
                  const std::vector<std::string>& files, const CommonOpts& opts) {
    const int fmt = format_code(opts.format);
    const int selectors = (n > 0) + (torus_n > 0) + (unit_k >= 0) + (int)!files.empty();
    if (selectors != 1)
        return fail_usage("choose exactly one of --n, --torus, --unit, or --staircase-file");

    dcover_points_ptr points;
    if (n > 0) {
        dcover_points* pts = nullptr;
        int64_t N = 0;
        if (int rc = dcover_branched_cover_complex(&pts, &N, nullptr, n); rc != DCOVER_OK)
            return fail(rc);
        points.reset(pts);
    } else {
        dcover_staircase* raw = nullptr;
        int rc;
        if (torus_n > 0)
            rc = dcover_staircase_consecutive_torus(&raw, torus_n);
        else if (unit_k >= 0)
            rc = dcover_staircase_unit(&raw, unit_k);
        else
            rc = dcover_staircase_load(&raw, files[0].c_str());
        if (rc != DCOVER_OK) return fail(rc);
        dcover_staircase_ptr stairs(raw);
        dcover_points* pts = nullptr;
        if (int rc2 = dcover_staircase_points(&pts, stairs.get()); rc2 != DCOVER_OK)
            return fail(rc2);
        points.reset(pts);
    }
    char* rendered = nullptr;
    if (int rc = dcover_points_render(&rendered, points.get(), fmt); rc != DCOVER_OK)
        return fail(rc);
    api_string owner(rendered);
    return emit(rendered, opts);
}

int run_dtable(int64_t n, const std::vector<std::string>& files, const CommonOpts& opts) {
    dcover_points_ptr points;
    int64_t N = 0;
    std::string source;
    if (int ec = complex_for(&points, &N, &source, n, files); ec) return ec;
    dcover_dtable* traw = nullptr;
    if (int rc = dcover_dtable_compute(&traw, points.get(), N, convention_code(opts.convention),
                                       source.c_str());
        rc != DCOVER_OK)
        return fail(rc);
    dcover_dtable_ptr table(traw);
    char* rendered = nullptr;
    if (int rc = dcover_dtable_render(&rendered, table.get(), format_code(opts.format));
        rc != DCOVER_OK)
        return fail(rc);
    api_string owner(rendered);
    return emit(rendered, opts);
}

int run_obstruct_split(int64_t p, int64_t q, int64_t n, const std::vector<std::string>& files,
                       const CommonOpts& opts) {
    if (n > 0 && n != p * q) return fail_usage("--n must equal p*q when given");
    dcover_points_ptr points;
    int64_t N = 0;
    std::string source;
    if (int ec = complex_for(&points, &N, &source, p * q, files); ec) return ec;
    dcover_dtable* traw = nullptr;
    if (int rc = dcover_dtable_compute(&traw, points.get(), N, convention_code(opts.convention),
                                       source.c_str());
        rc != DCOVER_OK)
        return fail(rc);
    dcover_dtable_ptr table(traw);
    dcover_splitgrid* graw = nullptr;
    if (int rc = dcover_split_obstruction(&graw, table.get(), p, q); rc != DCOVER_OK)
        return fail(rc);
    dcover_splitgrid_ptr grid(graw);
    char* rendered = nullptr;
    if (int rc = dcover_splitgrid_render(&rendered, grid.get(), format_code(opts.format));
        rc != DCOVER_OK)
        return fail(rc);
    api_string owner(rendered);
    return emit(rendered, opts);
}

int run_obstruct_metab(int64_t n, const std::vector<std::string>& files,
                       const CommonOpts& opts) {
    dcover_points_ptr points;
    int64_t N = 0;
    std::string source;
    if (int ec = complex_for(&points, &N, &source, n, files); ec) return ec;
    dcover_dtable* traw = nullptr;
    if (int rc = dcover_dtable_compute(&traw, points.get(), N, convention_code(opts.convention),
                                       source.c_str());
        rc != DCOVER_OK)
        return fail(rc);
    dcover_dtable_ptr table(traw);
    dcover_metab* mraw = nullptr;
    if (int rc = dcover_metabolizer_obstruction(&mraw, table.get()); rc != DCOVER_OK)
        return fail(rc);
    dcover_metab_ptr metab(mraw);
    char* rendered = nullptr;
    if (int rc = dcover_metab_render(&rendered, metab.get(), format_code(opts.format));
        rc != DCOVER_OK)
        return fail(rc);
    api_string owner(rendered);
    return emit(rendered, opts);
}

int run_reproduce(const CommonOpts& opts) {
    char* rendered = nullptr;
    if (int rc = dcover_reproduce(&rendered, 3, 5, format_code(opts.format),
                                  convention_code(opts.convention));
        rc != DCOVER_OK)
        return fail(rc);
    api_string owner(rendered);
    return emit(rendered, opts);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "exact correction terms of branched double covers and the splitting/metabolizer "
        "obstructions they carry"};
    app.require_subcommand(1);

    CommonOpts alex_opts, stair_opts, dtable_opts, split_opts, metab_opts, repro_opts;

    auto* alexander =
        app.add_subcommand("alexander", "Alexander and cyclotomic polynomials with determinant");
    int64_t alex_pretzel = 0, alex_torus = 0, alex_cyclo = 0, alex_n = 0, alex_p = 0, alex_q = 0;
    alexander->add_option("--pretzel", alex_pretzel, "Delta of P(n,-n,n-1) for odd n");
    alexander->add_option("--torus", alex_torus, "Delta of T(2,n) for odd n");
    alexander->add_option("--cyclotomic", alex_cyclo, "the cyclotomic polynomial phi_n");
    alexander->add_option("--n", alex_n, "same as --pretzel");
    alexander->add_option("--p", alex_p, "with --q: the factors phi_2p, phi_2q, phi_2pq");
    alexander->add_option("--q", alex_q, "see --p");
    add_common(alexander, &alex_opts, false);

    auto* staircase = app.add_subcommand("staircase", "staircase generator sets");
    int64_t stair_n = 0, stair_torus = 0, stair_unit = -1;
    std::vector<std::string> stair_files;
    staircase->add_option("--n", stair_n, "full surgery complex of K_n (n = 1 or n >= 15)");
    staircase->add_option("--torus", stair_torus, "T(n-1,n) staircase, odd n >= 15");
    staircase->add_option("--unit", stair_unit, "unit staircase {(j, k-j)}");
    staircase->add_option("--staircase-file", stair_files, "validate and reprint a corner list");
    add_common(staircase, &stair_opts, false);

    auto* dtable = app.add_subcommand("dtable", "d-invariant of every Spin^c structure");
    int64_t dtable_n = 0;
    std::vector<std::string> dtable_files;
    dtable->add_option("--n", dtable_n, "K_n (N = n^2)")->required();
    dtable->add_option("--staircase-file", dtable_files,
                       "override the complex (once: as is; twice: tensor)");
    add_common(dtable, &dtable_opts);

    auto* osplit = app.add_subcommand("obstruct-split",
                                      "second-difference grid over the p- and q-subgroups");
    int64_t split_p = 0, split_q = 0, split_n = 0;
    std::vector<std::string> split_files;
    osplit->add_option("--p", split_p, "odd prime")->required();
    osplit->add_option("--q", split_q, "odd prime, distinct from p")->required();
    osplit->add_option("--n", split_n, "optional; must equal p*q");
    osplit->add_option("--staircase-file", split_files,
                       "override the complex (once: as is; twice: tensor)");
    add_common(osplit, &split_opts);

    auto* ometab = app.add_subcommand("obstruct-metabolizer",
                                      "order-sqrt(N) subgroup with linking and d flags");
    int64_t metab_n = 0;
    std::vector<std::string> metab_files;
    ometab->add_option("--n", metab_n, "K_n (N = n^2)")->required();
    ometab->add_option("--staircase-file", metab_files,
                       "override the complex (once: as is; twice: tensor)");
    add_common(ometab, &metab_opts);

    auto* repro = app.add_subcommand("reproduce-paper",
                                     "the n = 15 value grids and the splitting verdict");
    add_common(repro, &repro_opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        std::cerr << "run with --help for usage\n";
        return 2;
    }

    if (alexander->parsed())
        return run_alexander(alex_pretzel, alex_torus, alex_cyclo, alex_n, alex_p, alex_q,
                             alex_opts);
    if (staircase->parsed())
        return run_staircase(stair_n, stair_torus, stair_unit, stair_files, stair_opts);
    if (dtable->parsed()) return run_dtable(dtable_n, dtable_files, dtable_opts);
    if (osplit->parsed())
        return run_obstruct_split(split_p, split_q, split_n, split_files, split_opts);
    if (ometab->parsed()) return run_obstruct_metab(metab_n, metab_files, metab_opts);
    if (repro->parsed()) return run_reproduce(repro_opts);
    return 2;
}

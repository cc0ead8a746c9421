// Command-line front end: spectra of eccentricity matrices, free-tree
// enumeration, closed-form evaluation, and the theorem verification suite.
//
// Exit codes: 0 success/verified, 1 falsified check, 2 input parse error,
// 3 validation error.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "eccmat/canonical.hpp"
#include "eccmat/closed_forms.hpp"
#include "eccmat/ecc_matrix.hpp"
#include "eccmat/families.hpp"
#include "eccmat/graph.hpp"
#include "eccmat/serialize.hpp"
#include "eccmat/spectra.hpp"
#include "eccmat/tree_enum.hpp"
#include "eccmat/verify.hpp"
#include "eccmat/version.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitFalsified = 1;
constexpr int kExitParse = 2;
constexpr int kExitValidation = 3;

bool is_parse_error(eccmat::errc code) {
    return code == eccmat::errc::malformed_graph6 ||
           code == eccmat::errc::malformed_json ||
           code == eccmat::errc::malformed_family;
}

// all numeric output carries 12 significant digits
ordered_json num12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return ordered_json::parse(buf);
}

std::string format12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

void write_output(const std::string& path, const std::string& content, bool append) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path, append ? std::ios::app : std::ios::trunc);
    if (!out)
        throw eccmat::error(eccmat::errc::parameter_out_of_range,
                            "cannot open output file " + path);
    out << content;
}

struct spectrum_config {
    std::string graph6_text;
    std::string file;
    std::string family;
    bool with_matrix = false;
    std::string output;
};

eccmat::graph load_graph(const spectrum_config& cfg) {
    int sources = !cfg.graph6_text.empty() + !cfg.file.empty() + !cfg.family.empty();
    if (sources != 1)
        throw eccmat::error(eccmat::errc::parameter_mismatch,
                            "exactly one of --graph6/--file/--family is required");
    if (!cfg.graph6_text.empty()) return eccmat::graph6_decode(cfg.graph6_text);
    if (!cfg.family.empty())
        return eccmat::build_family(eccmat::parse_family(cfg.family));
    std::ifstream in(cfg.file);
    if (!in)
        throw eccmat::error(eccmat::errc::parameter_out_of_range,
                            "cannot open " + cfg.file);
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    size_t first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos)
        throw eccmat::error(eccmat::errc::malformed_graph6, "empty input file");
    if (text[first] == '{') return eccmat::graph_from_json(text);
    size_t end = text.find_first_of("\r\n", first);
    return eccmat::graph6_decode(text.substr(first, end - first));
}

int run_spectrum(const spectrum_config& cfg) {
    auto g = load_graph(cfg);
    auto dp = eccmat::distances(g);
    auto em = eccmat::eccentricity_matrix(g);
    auto sp = eccmat::eigenvalues_symmetric(em);

    ordered_json j;
    j["n"] = g.order();
    j["diameter"] = dp.diameter;
    j["eccentricity"] = em.ecc;
    if (cfg.with_matrix) {
        auto rows = ordered_json::array();
        for (int u = 0; u < em.n; ++u) {
            auto row = ordered_json::array();
            for (int v = 0; v < em.n; ++v) row.push_back(em.at(u, v));
            rows.push_back(std::move(row));
        }
        j["matrix"] = std::move(rows);
    }
    auto values = ordered_json::array();
    for (double v : sp.values) values.push_back(num12(v));
    j["spectrum"] = std::move(values);
    j["eps1"] = num12(sp.largest());
    j["epsn"] = num12(sp.least());
    j["eps_spectral_radius"] = num12(std::max(std::abs(sp.largest()), std::abs(sp.least())));
    if (g.order() >= 2) j["support_connected"] = eccmat::support_is_connected(em);
    j["iterations"] = sp.iterations;
    j["tool_version"] = eccmat::version_string;

    write_output(cfg.output, j.dump() + "\n", false);
    return 0;
}

struct enumerate_config {
    int n = 0;
    std::optional<int> diameter;
    bool with_spectrum = false;
    std::string output;
};

int run_enumerate(const enumerate_config& cfg) {
    auto stream = cfg.diameter ? eccmat::trees_with_diameter(cfg.n, *cfg.diameter)
                               : eccmat::free_trees(cfg.n);
    std::string out;
    if (cfg.with_spectrum) out += "graph6,eps1,epsn\n";
    while (auto g = stream.next()) {
        out += eccmat::graph6_encode(*g);
        if (cfg.with_spectrum) {
            auto sp = eccmat::eigenvalues_symmetric(eccmat::eccentricity_matrix(*g));
            out += ',';
            out += format12(sp.largest());
            out += ',';
            out += format12(sp.least());
        }
        out += '\n';
    }
    write_output(cfg.output, out, false);
    return 0;
}

struct verify_config {
    std::string check;
    int n_max = 10;
    int d_max = 7;
    std::optional<int> n;
    std::optional<int> d;
    int samples = 200;
    int domination_samples = 100;
    std::uint64_t seed = 20240601;
    int jobs = 1;
    double tol = 1e-8;
    std::string output;
};

int run_verify(const verify_config& cfg) {
    static const std::set<std::string> known = {
        "bounds",     "diam3-max",    "odd-diam-max", "least-interval",
        "transforms", "closed-forms", "interlacing",  "all"};
    if (!known.count(cfg.check))
        throw eccmat::error(eccmat::errc::parameter_out_of_range,
                            "unknown check id '" + cfg.check + "'");
    if (cfg.tol < 1e-14)
        throw eccmat::error(eccmat::errc::parameter_out_of_range,
                            "tolerance overrides must be >= 1e-14");

    eccmat::verify_options opts;
    opts.jobs = cfg.jobs;
    opts.seed = cfg.seed;
    opts.eq_tol = cfg.tol;

    std::vector<eccmat::verification_report> reports;
    auto want = [&](const char* id) { return cfg.check == id || cfg.check == "all"; };

    if (want("bounds"))
        reports.push_back(eccmat::verify_basic_bounds(cfg.n_max, cfg.domination_samples, opts));
    if (want("diam3-max")) {
        if (cfg.n) reports.push_back(eccmat::verify_diam3_max(*cfg.n, opts));
        else
            for (int n = 4; n <= cfg.n_max; ++n)
                reports.push_back(eccmat::verify_diam3_max(n, opts));
    }
    if (want("odd-diam-max")) {
        if (cfg.d && cfg.d.value() % 2 == 0)
            throw eccmat::error(eccmat::errc::even_diameter,
                                "odd-diam-max needs an odd diameter");
        std::vector<int> ds = cfg.d ? std::vector<int>{*cfg.d} : std::vector<int>{5, 7, 9};
        for (int d : ds) {
            if (d > cfg.d_max && !cfg.d) continue;
            if (cfg.n) reports.push_back(eccmat::verify_odd_diam_max(*cfg.n, d, opts));
            else
                for (int n = d + 1; n <= cfg.n_max; ++n)
                    reports.push_back(eccmat::verify_odd_diam_max(n, d, opts));
        }
    }
    if (want("least-interval"))
        reports.push_back(eccmat::verify_least_interval(cfg.n_max, opts));
    if (want("transforms")) {
        if (cfg.d && cfg.d.value() % 2 == 0)
            throw eccmat::error(eccmat::errc::even_diameter,
                                "transforms need an odd diameter");
        std::vector<int> ds = cfg.d ? std::vector<int>{*cfg.d} : std::vector<int>{5, 7};
        for (int d : ds) {
            if (d > cfg.d_max && !cfg.d) continue;
            if (cfg.n) reports.push_back(eccmat::verify_transforms(*cfg.n, d, opts));
            else
                for (int n = d + 1; n <= std::min(cfg.n_max, 12); ++n)
                    reports.push_back(eccmat::verify_transforms(n, d, opts));
        }
    }
    if (want("closed-forms")) reports.push_back(eccmat::verify_closed_forms(opts));
    if (want("interlacing"))
        reports.push_back(eccmat::verify_interlacing(cfg.samples, opts));

    std::string lines;
    bool falsified = false;
    for (const auto& r : reports) {
        lines += r.to_json_line();
        lines += '\n';
        falsified = falsified || r.status == eccmat::check_status::falsified;
        std::fprintf(stderr, "%-16s %-9s instances=%lld skipped=%lld elapsed=%.3fs\n",
                     r.check_id.c_str(), std::string(eccmat::to_string(r.status)).c_str(),
                     r.instances_checked, r.instances_skipped, r.elapsed_seconds);
    }
    // verification history accumulates: reports are appended, never rewritten
    write_output(cfg.output, lines, true);
    return falsified ? kExitFalsified : 0;
}

struct formula_config {
    std::string id;
    std::optional<int> n, d, a, b, p, q;
};

int require(const std::optional<int>& v, const char* name) {
    if (!v)
        throw eccmat::error(eccmat::errc::parameter_mismatch,
                            std::string("missing --") + name);
    return *v;
}

int run_formula(const formula_config& cfg) {
    ordered_json j;
    if (cfg.id == "fa") {
        int n = require(cfg.n, "n"), a = require(cfg.a, "a");
        auto q = eccmat::f_a_quartic(n, a);
        auto roots = eccmat::quartic_roots(q);
        j["formula"] = "fa";
        j["n"] = n;
        j["a"] = a;
        j["coefficients"] = {{"c4", 1}, {"c2", num12(q.c2)}, {"c0", num12(q.c0)}};
        auto r = ordered_json::array();
        for (double v : roots) r.push_back(num12(v));
        j["roots"] = std::move(r);
        j["largest_root"] = num12(roots[0]);
    } else if (cfg.id == "gamma") {
        int d = require(cfg.d, "d");
        j["formula"] = "gamma";
        j["d"] = d;
        j["gamma"] = eccmat::gamma_d(d);
    } else if (cfg.id == "rho2") {
        int n = require(cfg.n, "n"), d = require(cfg.d, "d");
        int a = require(cfg.a, "a"), b = require(cfg.b, "b");
        auto data = eccmat::rho_squared_broom(n, d, a, b);
        j["formula"] = "rho2";
        j["n"] = n;
        j["d"] = d;
        j["a"] = a;
        j["b"] = b;
        j["gamma"] = data.gamma;
        j["x"] = data.x;
        j["base"] = data.base;
        j["delta"] = data.delta;
        j["rho_squared"] = num12(data.rho_squared);
        j["rho"] = num12(data.rho());
    } else if (cfg.id == "hpoly") {
        int p = require(cfg.p, "p"), q = require(cfg.q, "q");
        auto f = eccmat::h_eps_poly(p, q);
        j["formula"] = "hpoly";
        j["p"] = p;
        j["q"] = q;
        j["zero_multiplicity"] = f.zero_multiplicity;
        j["repeated_quadratic"] = {num12(f.repeated_quadratic[0]),
                                   num12(f.repeated_quadratic[1]),
                                   num12(f.repeated_quadratic[2])};
        j["repeated_multiplicity"] = f.repeated_multiplicity;
        j["main_quadratic"] = {num12(f.main_quadratic[0]), num12(f.main_quadratic[1]),
                               num12(f.main_quadratic[2])};
        auto r = ordered_json::array();
        for (double v : f.roots()) r.push_back(num12(v));
        j["roots"] = std::move(r);
    } else if (cfg.id == "hleast") {
        int p = require(cfg.p, "p"), q = require(cfg.q, "q");
        j["formula"] = "hleast";
        j["p"] = p;
        j["q"] = q;
        j["least_eigenvalue"] = num12(eccmat::h_least_eigenvalue(p, q));
    } else if (cfg.id == "hcond") {
        int p = require(cfg.p, "p"), q = require(cfg.q, "q");
        j["formula"] = "hcond";
        j["p"] = p;
        j["q"] = q;
        j["holds"] = eccmat::h_equality_condition(p, q);
        j["margin"] = num12(9.0 * p + 9.0 * q - 4.0 * std::sqrt(13.0) - 22.0);
    } else {
        throw eccmat::error(eccmat::errc::parameter_out_of_range,
                            "unknown formula id '" + cfg.id + "'");
    }
    std::cout << j.dump() << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"eccentricity-matrix spectra, extremal trees, and theorem checks"};
    app.set_version_flag("--version", eccmat::version_string);
    app.require_subcommand(1);

    spectrum_config sc;
    auto* spectrum = app.add_subcommand("spectrum", "eps-matrix and spectrum of one graph");
    spectrum->add_option("--graph6", sc.graph6_text, "inline graph6 string");
    spectrum->add_option("--file", sc.file, "file with graph6 or JSON edge list");
    spectrum->add_option("--family", sc.family,
                         "family spec: path:n | star:n | broom:n,d,a,b | spider:p,q");
    spectrum->add_flag("--matrix", sc.with_matrix, "include the eps matrix");
    spectrum->add_option("--output", sc.output, "write JSON here instead of stdout");

    enumerate_config ec;
    auto* enumerate = app.add_subcommand("enumerate", "stream non-isomorphic trees as graph6");
    enumerate->add_option("--n", ec.n, "tree order (1..20)")->required();
    int diam_opt = -1;
    enumerate->add_option("--diameter", diam_opt, "keep only trees of this diameter");
    enumerate->add_flag("--with-spectrum", ec.with_spectrum, "CSV with eps1/epsn columns");
    enumerate->add_option("--output", ec.output, "write here instead of stdout");

    verify_config vc;
    auto* verify = app.add_subcommand("verify", "run theorem checks, appending JSONL reports");
    verify->add_option("--check", vc.check,
                       "bounds | diam3-max | odd-diam-max | least-interval | transforms | "
                       "closed-forms | interlacing | all")
        ->required();
    verify->add_option("--n-max", vc.n_max, "sweep cap for orders (default 10)");
    verify->add_option("--d-max", vc.d_max, "sweep cap for diameters (default 7)");
    int verify_n = -1, verify_d = -1;
    verify->add_option("--n", verify_n, "single order");
    verify->add_option("--d", verify_d, "single diameter");
    verify->add_option("--samples", vc.samples, "interlacing samples (default 200)");
    verify->add_option("--domination-samples", vc.domination_samples,
                       "domination samples inside bounds (default 100)");
    verify->add_option("--seed", vc.seed, "seed for sampled checks");
    verify->add_option("--jobs", vc.jobs, "worker threads (0 = hardware)")
        ->envname("ECC_SPECTRA_JOBS");
    verify->add_option("--tol", vc.tol, "equality/boundary tolerance (>= 1e-14)");
    verify->add_option("--output", vc.output, "JSONL report path (appended)");

    formula_config fc;
    auto* formula = app.add_subcommand("formula", "evaluate one closed form as JSON");
    formula->add_option("id", fc.id, "fa | gamma | rho2 | hpoly | hleast | hcond")
        ->required();
    int fn = -1, fd = -1, fa = -1, fb = -1, fp = -1, fq = -1;
    auto* on = formula->add_option("--n", fn);
    auto* od = formula->add_option("--d", fd);
    auto* oa = formula->add_option("--a", fa);
    auto* ob = formula->add_option("--b", fb);
    auto* op = formula->add_option("--p", fp);
    auto* oq = formula->add_option("--q", fq);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitValidation;
    }

    try {
        if (*spectrum) return run_spectrum(sc);
        if (*enumerate) {
            if (enumerate->count("--diameter")) ec.diameter = diam_opt;
            return run_enumerate(ec);
        }
        if (*verify) {
            if (verify->count("--n")) vc.n = verify_n;
            if (verify->count("--d")) vc.d = verify_d;
            return run_verify(vc);
        }
        if (*formula) {
            if (on->count()) fc.n = fn;
            if (od->count()) fc.d = fd;
            if (oa->count()) fc.a = fa;
            if (ob->count()) fc.b = fb;
            if (op->count()) fc.p = fp;
            if (oq->count()) fc.q = fq;
            return run_formula(fc);
        }
    } catch (const eccmat::error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return is_parse_error(e.code()) ? kExitParse : kExitValidation;
    } catch (const nlohmann::json::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitParse;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitValidation;
    }
    return 0;
}

/*
   Copyright 2026 The cselab Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cselab/cselab.h"

// Exit codes: 0 verdict as expected, 1 usage or invalid parameters,
// 2 theorem-violating verdict for holomorphic input, 3 inconclusive, 4 internal.

namespace {

enum Exit { kOk = 0, kUsage = 1, kViolation = 2, kInconclusive = 3, kInternal = 4 };

struct FunctionDeleter {
    void operator()(cse_function* f) const { cse_function_free(f); }
};
struct ReportDeleter {
    void operator()(cse_report* r) const { cse_report_free(r); }
};
using FunctionPtr = std::unique_ptr<cse_function, FunctionDeleter>;
using ReportPtr = std::unique_ptr<cse_report, ReportDeleter>;

struct Failure {
    int code;
};

int exit_for(cse_status s) {
    switch (s) {
        case CSE_OK: return kOk;
        case CSE_ERR_INVALID_ARGUMENT:
        case CSE_ERR_PARSE:
        case CSE_ERR_HYPOTHESIS:
        case CSE_ERR_DIVERGENT:
        case CSE_ERR_IO: return kUsage;
        case CSE_ERR_INTERNAL: return kInternal;
    }
    return kInternal;
}

void check(cse_status s) {
    if (s == CSE_OK) return;
    std::cerr << "error: " << cse_last_error() << "\n";
    throw Failure{exit_for(s)};
}

FunctionPtr parse(const std::string& text) {
    cse_function* f = nullptr;
    check(cse_function_parse(text.c_str(), &f));
    return FunctionPtr(f);
}

std::vector<const char*> c_strings(const std::vector<std::string>& v) {
    std::vector<const char*> out;
    for (const auto& s : v) out.push_back(s.c_str());
    return out;
}

struct Output {
    std::string format = "json";
    std::string path;
};

struct Quadrature {
    cse_quadrature_config config{};
    std::string precision;
};

void add_output(CLI::App* app, Output& out) {
    app->add_option("--format", out.format, "json, csv or plot (alias plot-data)")
        ->check(CLI::IsMember({"json", "csv", "plot", "plot-data"}))
        ->capture_default_str();
    app->add_option("--out", out.path, "output file (default: stdout)");
}

void add_quadrature(CLI::App* app, Quadrature& q) {
    app->add_option("--radial-cells", q.config.radial_cells_per_decade, "initial radial cells per decade")
        ->capture_default_str();
    app->add_option("--angular-cells", q.config.angular_cells, "initial angular cells")->capture_default_str();
    app->add_option("--max-depth", q.config.max_refinement_depth, "refinement depth cap")->capture_default_str();
    app->add_option("--tol", q.config.target_rel_tolerance, "target relative tolerance")->capture_default_str();
    app->add_option("--max-cells", q.config.max_cells, "cell budget per integral")->capture_default_str();
    app->add_option("--precision", q.precision, "double or extended (default: CSE_LAB_PRECISION or double)")
        ->check(CLI::IsMember({"double", "extended"}));
}

cse_quadrature_config resolve(const Quadrature& q) {
    cse_quadrature_config c = q.config;
    if (!q.precision.empty()) c.extended_precision = q.precision == "extended" ? 1 : 0;
    return c;
}

void emit(cse_report* r, const Output& out) {
    cse_format format = CSE_FORMAT_JSON;
    if (out.format == "csv") format = CSE_FORMAT_CSV;
    if (out.format == "plot" || out.format == "plot-data") format = CSE_FORMAT_PLOT;
    char* text = nullptr;
    check(cse_report_render(r, format, &text));
    const std::string body(text);
    cse_string_free(text);
    if (out.path.empty()) {
        std::cout << body;
        std::cout.flush();
        return;
    }
    std::ofstream file(out.path, std::ios::binary);
    if (!(file << body) || !file.flush()) {
        std::cerr << "error: cannot write " << out.path << "\n";
        throw Failure{kUsage};
    }
}

int verdict_exit(cse_report* r) {
    if (cse_report_theorem_violation(r)) return kViolation;
    if (cse_report_verdict(r) == CSE_VERDICT_INCONCLUSIVE) return kInconclusive;
    return kOk;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << "error: cannot read " << path << "\n";
        throw Failure{kUsage};
    }
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Complex singularity exponents along the family xy = t"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(cse_version()));

    cse_quadrature_config defaults{};
    if (cse_quadrature_config_default(&defaults) != CSE_OK) {
        std::cerr << "error: " << cse_last_error() << "\n";
        return kUsage;
    }

    Output output;
    Quadrature quad{defaults, ""};
    std::string f_text;
    std::vector<std::string> t_values;
    double c = 0, R = 1, delta = 0.1, band = 0.05, R1 = 0;

    auto* exponent = app.add_subcommand("exponent", "central and fiber exponents with the semicontinuity verdict");
    exponent->add_option("--f", f_text, "F(x, y)")->required();
    exponent->add_option("--t", t_values, "fiber parameters (default 1/100 ... 1/100000)");
    exponent->add_option("--delta", delta, "polydisc radius")->capture_default_str();
    add_output(exponent, output);

    std::string catalog_path, entry;
    auto* lct = app.add_subcommand("lct", "resolution formula against the Newton polygon estimate");
    lct->add_option("--f", f_text, "F(x, y); adds its polygon estimate");
    lct->add_option("--catalog", catalog_path, "resolution catalog JSON (default: built-in)");
    lct->add_option("--entry", entry, "catalog entry name (default: all)");
    add_output(lct, output);

    auto* polygon = app.add_subcommand("polygon", "Newton polygon of F");
    polygon->add_option("--f", f_text, "F(x, y)")->required();
    add_output(polygon, output);

    auto* sweep = app.add_subcommand("sweep", "K_t(R) / K_0(R) along a decreasing t-sequence");
    sweep->add_option("--f", f_text, "F(x, y)")->required();
    sweep->add_option("--c", c, "exponent, 0 < c < c_0(f_0)")->required();
    sweep->add_option("--R", R, "polydisc radius")->capture_default_str();
    sweep->add_option("--t", t_values, "positive t values (default 10^-2 4^-j, j = 0..7)");
    sweep->add_option("--band", band, "acceptance band around ratio 1")->capture_default_str();
    sweep->add_option("--R1", R1, "split I_t at 1/R1 and R1 (JSON only; off by default)");
    add_quadrature(sweep, quad);
    add_output(sweep, output);

    std::vector<std::string> factor_texts;
    auto* bound = app.add_subcommand("bound", "sampled uniform bound of K_t(R), optionally against a Young bound");
    bound->add_option("--f", f_text, "F(x, y)")->required();
    bound->add_option("--c", c, "exponent, 0 < c < c_0(f_0)")->required();
    bound->add_option("--R", R, "polydisc radius")->capture_default_str();
    bound->add_option("--t", t_values, "t values (default 10^-2 4^-j, j = 0..7)");
    bound->add_option("--factor", factor_texts, "factor F_i of F (repeat)");
    add_quadrature(bound, quad);
    add_output(bound, output);

    std::optional<unsigned> n_single;
    unsigned n_min = 0, n_max = 0;
    std::vector<std::string> s_values;
    auto* counter = app.add_subcommand("counterexample", "exact non-holomorphic families F_n");
    auto* n_opt = counter->add_option("--n", n_single, "single n");
    counter->add_option("--n-min", n_min, "first n of a range")->excludes(n_opt);
    counter->add_option("--n-max", n_max, "last n of a range")->excludes(n_opt);
    counter->add_option("--s", s_values, "positive rationals s, fiber t = s^2 (default 1/10 1/7 1/3)");
    add_output(counter, output);

    std::string kind = "multiplicity", zero;
    double r_max = 0, scale = 1e-2;
    unsigned holder_n = 0;
    auto* probe = app.add_subcommand("probe", "numerical exponent and Hoelder probes");
    probe->add_option("--kind", kind, "multiplicity or holder")
        ->check(CLI::IsMember({"multiplicity", "holder"}))
        ->capture_default_str();
    probe->add_option("--f", f_text, "polynomial in z (multiplicity probe)");
    probe->add_option("--zero", zero, "root of the polynomial (multiplicity probe)");
    probe->add_option("--c", c, "exponent (multiplicity probe)");
    probe->add_option("--r-max", r_max, "outer probe radius, <= 0 for automatic")->capture_default_str();
    probe->add_option("--n", holder_n, "building block index (holder probe)")->capture_default_str();
    probe->add_option("--scale", scale, "sample range (holder probe)")->capture_default_str();
    add_quadrature(probe, quad);
    add_output(probe, output);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        cse_report* raw = nullptr;
        const std::vector<const char*> ts = c_strings(t_values);
        if (exponent->parsed()) {
            FunctionPtr f = parse(f_text);
            check(cse_exponent_report(f.get(), ts.data(), ts.size(), delta, &raw));
        } else if (lct->parsed()) {
            FunctionPtr f;
            if (!f_text.empty()) f = parse(f_text);
            const std::string catalog = catalog_path.empty() ? "" : read_file(catalog_path);
            check(cse_lct_report(f.get(), catalog_path.empty() ? nullptr : catalog.c_str(),
                                 entry.empty() ? nullptr : entry.c_str(), &raw));
        } else if (polygon->parsed()) {
            FunctionPtr f = parse(f_text);
            check(cse_polygon_report(f.get(), &raw));
        } else if (sweep->parsed()) {
            FunctionPtr f = parse(f_text);
            const cse_quadrature_config cfg = resolve(quad);
            check(cse_sweep_report(f.get(), c, R, ts.data(), ts.size(), band, R1, &cfg, &raw));
        } else if (bound->parsed()) {
            FunctionPtr f = parse(f_text);
            std::vector<FunctionPtr> owned;
            std::vector<const cse_function*> factors;
            for (const auto& text : factor_texts) {
                owned.push_back(parse(text));
                factors.push_back(owned.back().get());
            }
            const cse_quadrature_config cfg = resolve(quad);
            check(cse_bound_report(f.get(), c, R, ts.data(), ts.size(), factors.data(), factors.size(), &cfg, &raw));
        } else if (counter->parsed()) {
            if (n_single) n_min = n_max = *n_single;
            const std::vector<const char*> ss = c_strings(s_values);
            check(cse_counterexample_report(n_min, n_max, ss.data(), ss.size(), &raw));
        } else if (probe->parsed()) {
            if (kind == "holder") {
                check(cse_probe_holder_report(holder_n, scale, &raw));
            } else {
                if (f_text.empty() || zero.empty() || !(c > 0)) {
                    std::cerr << "error: the multiplicity probe needs --f, --zero and --c > 0\n";
                    return kUsage;
                }
                const cse_quadrature_config cfg = resolve(quad);
                check(cse_probe_multiplicity_report(f_text.c_str(), zero.c_str(), c, r_max, &cfg, &raw));
            }
        }
        ReportPtr report(raw);
        emit(report.get(), output);
        return verdict_exit(report.get());
    } catch (const Failure& f) {
        return f.code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInternal;
    }
}

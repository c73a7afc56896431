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

// Acceptance gate. Usage: cselab_acceptance [criterion ...]; no arguments runs
// all ten. One line per criterion; exit status 1 when any selected one fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "cselab/cselab.h"
#include "cselab/counterexamples.hpp"
#include "cselab/degeneration.hpp"
#include "cselab/expression.hpp"
#include "cselab/newton_polygon.hpp"
#include "cselab/quadrature.hpp"
#include "cselab/reports.hpp"
#include "oracles.hpp"

using namespace cselab;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

struct Collector {
    Outcome out;
    std::ostringstream notes;
    void require(bool ok, const std::string& what) {
        if (!ok) {
            out.pass = false;
            if (!failed.empty()) failed += "; ";
            failed += what;
        }
    }
    void note(const std::string& s) {
        if (notes.tellp() > 0) notes << "; ";
        notes << s;
    }
    Outcome finish() {
        out.detail = out.pass ? notes.str() : failed + (notes.tellp() > 0 ? " | " + notes.str() : "");
        return out;
    }
    std::string failed;
};

GaussianRational rat(long num, long den) {
    mpq_class v(num, den);
    v.canonicalize();
    return GaussianRational(v);
}

Exponent ex(long num, long den) {
    mpq_class v(num, den);
    v.canonicalize();
    return Exponent::of(v);
}

std::vector<GaussianRational> decades(int from, int to) {
    std::vector<GaussianRational> out;
    mpz_class d = 1;
    for (int i = 0; i < from; ++i) d *= 10;
    for (int e = from; e <= to; ++e, d *= 10) out.emplace_back(mpq_class(mpz_class(1), d));
    return out;
}

std::string num(double v) { return format_number(v); }

// ---------------------------------------------------------------------------

Outcome criterion1() {
    Collector c;
    const auto start = std::chrono::steady_clock::now();
    const CounterexampleRecord r = counterexample(0);
    const ViolationReport v = verify_violation(r, {rat(1, 10), rat(1, 7), rat(1, 3)});
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    c.require(r.P == UnivariatePoly::linear_power(1, 2), "P_0 is not (z-1)^2");
    c.require(r.F.to_string() == "x + y - 2*abs(x*y)^(1/2)", "F_0 printed as " + r.F.to_string());
    c.require(r.F == parse_function("x+y-2*abs(x*y)^(1/2)"), "F_0 differs from x+y-2|xy|^(1/2)");
    c.require(v.central == ex(1, 1), "central exponent " + v.central.to_string());
    for (const auto& s : v.samples)
        c.require(s.fiber_exponent == ex(1, 2) && s.identity_holds,
                  "fiber exponent at s = " + s.s.to_string() + " is " + s.fiber_exponent.to_string());
    c.require(v.violated, "verdict is not violated");
    c.require(secs < 1, "took " + num(secs) + " s");
    c.note("F_0 = " + r.F.to_string() + ", central 1, fiber 1/2 at s = 1/10, 1/7, 1/3, violated");
    return c.finish();
}

Outcome criterion2() {
    Collector c;
    const auto start = std::chrono::steady_clock::now();
    const std::vector<GaussianRational> ss = {rat(1, 10), rat(1, 7), rat(1, 3)};
    for (unsigned n = 0; n <= 5; ++n) {
        const Membership m = membership_N(n);
        c.require(m.member, "n = " + std::to_string(n) + " not in N");
        if (!m.member) continue;
        const CounterexampleRecord r = build_family(n, *m.witness);
        const ViolationReport v = verify_violation(r, ss);
        c.require(v.violated, "n = " + std::to_string(n) + " not violated");
        c.require(v.central == ex(1, 2 * n + 1), "n = " + std::to_string(n) + " central " + v.central.to_string());
        for (const auto& s : v.samples) {
            c.require(s.identity_holds, "fiber identity fails at n = " + std::to_string(n));
            c.require(s.fiber_exponent <= ex(1, 2 * n + 2), "fiber exponent above 1/(2n+2) at n = " + std::to_string(n));
        }
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    c.require(secs < 30, "took " + num(secs) + " s");
    c.note("n = 0..5 members, identities exact, exponents (1/(2n+1), <= 1/(2n+2)) in " + num(secs) + " s");
    return c.finish();
}

Outcome criterion3() {
    Collector c;
    // oracle first
    const auto reference = oracle::wn_basis(1);
    c.require(reference.size() == 1, "oracle kernel dimension " + std::to_string(reference.size()));
    const std::vector<mpq_class> golden = {1, 0, -9, 16, -9, 0, 1};
    if (reference.size() == 1) {
        const mpq_class scale = reference[0][6];
        bool same = scale != 0;
        for (std::size_t i = 0; same && i < golden.size(); ++i) same = reference[0][i] == golden[i] * scale;
        c.require(same, "oracle kernel is not spanned by z^6 - 9z^4 + 16z^3 - 9z^2 + 1");
        c.require(oracle::order_at_one(golden) == 4, "oracle order at z = 1 is not 4");
    }
    const auto kernel = solve_wn(1);
    c.require(kernel.size() == 1, "solve_wn(1) dimension " + std::to_string(kernel.size()));
    if (kernel.size() == 1) {
        c.require(kernel[0] == UnivariatePoly({1, 0, -9, 16, -9, 0, 1}), "solve_wn(1) = " + kernel[0].to_string('z'));
        c.require(kernel[0].vanishing_order(1) == 4u, "vanishing order at z = 1 is not 4");
        c.note("W_1 spanned by " + kernel[0].to_string('z') + ", ord_1 = 4, matches Gauss-Jordan oracle");
    }
    return c.finish();
}

Outcome criterion4() {
    Collector c;
    const auto start = std::chrono::steady_clock::now();
    const auto ts = decades(2, 5);
    for (const char* text : {"x + y", "y^2 - x^3", "y^2 - x^5", "(x+y)^2", "x + y + x^2", "x^2 - y^2"}) {
        const SemicontinuityReport r = semicontinuity_check(parse_function(text), ts);
        bool every = true;
        for (const auto& s : r.samples)
            for (const auto& z : s.zeros.zeros) every = every && r.central_max <= fiber_exponent(z);
        c.require(r.verdict == SemicontinuityVerdict::Holds && every, std::string(text) + " violates semicontinuity");
        c.require(r.samples.size() == ts.size(), std::string(text) + " lost samples");
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    c.require(secs < 60, "took " + num(secs) + " s");
    c.note("6 functions x 4 values of t hold in " + num(secs) + " s");
    return c.finish();
}

Outcome criterion5() {
    Collector c;
    const auto start = std::chrono::steady_clock::now();
    const QuadratureConfig cfg;
    const auto ts = decades(2, 6);
    struct Case {
        const char* f;
        double c;
    };
    for (const Case k : {Case{"y^2 - x^3", 0.3}, Case{"x + y", 0.5}}) {
        const SweepReport r = convergence_sweep(parse_function(k.f), k.c, 0.5, ts, cfg, 0.05);
        const double last = r.rows.back().ratio;
        std::string ratios;
        for (const auto& row : r.rows) ratios += (ratios.empty() ? "" : " ") + num(std::round(row.ratio * 1e4) / 1e4);
        c.require(std::abs(last - 1) <= 0.05,
                  std::string(k.f) + " ratio at t = 1e-6 is " + num(last) + ", outside [0.95, 1.05]");
        c.require(r.monotone_trend, std::string(k.f) + " has no monotone trend");
        c.note(std::string(k.f) + " ratios " + ratios);
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    c.require(secs < 300, "took " + num(secs) + " s");
    return c.finish();
}

Outcome criterion6() {
    Collector c;
    const QuadratureConfig cfg;
    struct Case {
        const char* f;
        double c;
    };
    const std::vector<Case> cases = {{"x + y", 0.5}, {"y^2 - x^3", 0.3}, {"x^2 - y^2", 0.2}};
    double worst = 0;
    for (const auto& k : cases)
        for (const auto& t : decades(2, 4)) {
            const FiberIntegral fi = fiber_integral_K(parse_function(k.f), t, k.c, 1, cfg);
            worst = std::max(worst, std::abs(fi.K.value - (fi.I.value + fi.J.value)) / fi.K.value);
        }
    c.require(worst <= 1e-6, "|K - (I + J)| / K reaches " + num(worst));
    c.note("max |K - (I+J)|/K = " + num(worst));

    for (const auto& k : cases) {
        const Decomposition d = decompose_I(parse_function(k.f), rat(1, 10000), k.c, 1, 4, cfg);
        c.require(std::abs(d.sum() - d.I.value) <= d.combined_error(),
                  std::string(k.f) + " partition misses I_t by " + num(std::abs(d.sum() - d.I.value)));
    }

    double prev1 = INFINITY, prev3 = INFINITY, I_last = 0;
    const MixedFunction node = parse_function("x + y");
    for (const auto& t : default_t_sequence(8)) {
        const Decomposition d = decompose_I(node, t, 0.5, 1, 4, cfg);
        c.require(d.I1.value < prev1 && d.I3.value < prev3, "I_{t,1} or I_{t,3} increased at t = " + t.to_string());
        prev1 = d.I1.value;
        prev3 = d.I3.value;
        I_last = d.I.value;
    }
    c.require(prev1 < 0.1 * I_last && prev3 < 0.1 * I_last, "final I_{t,1}, I_{t,3} not below 10% of I_t");
    c.note("x + y final I_{t,1}/I_t = " + num(prev1 / I_last) + ", I_{t,3}/I_t = " + num(prev3 / I_last));
    return c.finish();
}

Outcome criterion7() {
    Collector c;
    const auto start = std::chrono::steady_clock::now();
    const QuadratureConfig cfg;
    const auto ts = decades(2, 6);
    const double cval = 0.2, R = 1;
    const BoundReport main = uniform_bound_check(parse_function("x^2 - y^2"), cval, R, ts, cfg);
    std::vector<std::pair<unsigned, double>> parts;
    std::vector<std::pair<MixedFunction, unsigned>> factors;
    unsigned l = 0;
    for (const char* text : {"x + y", "x - y"}) {
        const MixedFunction f = parse_function(text);
        const Exponent c0 = central_exponent(f, AxisComponent::MinOverComponents);
        const unsigned li = static_cast<unsigned>(c0.value().get_den().get_ui());
        factors.emplace_back(f, li);
        l += li;
    }
    for (const auto& [f, li] : factors) {
        const BoundReport b = uniform_bound_check(f, cval * l / li, R, ts, cfg);
        parts.emplace_back(li, b.M);
    }
    const double young = young_combine(parts);
    c.require(std::isfinite(main.M), "sampled sup is not finite");
    c.require(!main.growth_trend, "growth trend in K_t");
    c.require(main.M <= young, "M = " + num(main.M) + " exceeds the Young bound " + num(young));
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    c.require(secs < 300, "took " + num(secs) + " s");
    c.note("M = " + num(main.M) + " <= Young bound " + num(young) + " from factors at c l / l_i = " + num(cval * l));
    return c.finish();
}

Outcome criterion8() {
    Collector c;
    const auto start = std::chrono::steady_clock::now();
    auto check = [&](const std::string& name, const Exponent& expected) {
        const ResolutionData& d = catalog_entry(name);
        const Exponent got = lct_from_resolution(d).value;
        const Exponent estimate = lct_polygon_estimate(parse_function(d.curve).holo());
        c.require(got == expected, name + " gives " + got.to_string() + ", expected " + expected.to_string());
        c.require(got == estimate, name + " disagrees with the polygon estimate " + estimate.to_string());
    };
    check("smooth", ex(1, 1));
    for (long m = 1; m <= 5; ++m) check("axis-order-" + std::to_string(m), ex(1, m));
    check("cusp", ex(5, 6));
    for (long a = 2; a <= 5; ++a)
        for (long b = 2; b <= 5; ++b) {
            mpq_class v = std::min(mpq_class(1), mpq_class(mpq_class(1, a) + mpq_class(1, b)));
            check("x^" + std::to_string(a) + "+y^" + std::to_string(b), Exponent::of(v));
        }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    c.require(secs < 1, "took " + num(secs) + " s");
    c.note("23 entries agree with closed forms and polygon estimates");
    return c.finish();
}

Outcome criterion9() {
    Collector c;
    const auto start = std::chrono::steady_clock::now();
    const QuadratureConfig cfg;
    std::string found;
    for (unsigned m = 1; m <= 3; ++m) {
        const UnivariatePoly p = UnivariatePoly::linear_power(1, m) * UnivariatePoly::linear_power(-2, 1);
        const ProbeReport r = exponent_probe_1d(FiberFunction::polynomial(p), 1.0L, 0.2, cfg);
        c.require(std::abs(r.multiplicity - m) <= 0.05 * m,
                  "multiplicity " + std::to_string(m) + " probed as " + num(r.multiplicity));
        found += (found.empty() ? "" : ", ") + num(std::round(r.multiplicity * 1e4) / 1e4);
    }
    for (unsigned n = 0; n <= 1; ++n) {
        const HolderReport h = holder_probe(n);
        c.require(std::abs(h.exponent - 0.5) <= 0.05, "Hoelder exponent for n = " + std::to_string(n) + " is " + num(h.exponent));
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    c.require(secs < 30, "took " + num(secs) + " s");
    c.note("multiplicities " + found + "; Hoelder 0.5 for n = 0, 1");
    return c.finish();
}

std::string render_all(cse_report* r) {
    std::string out;
    for (cse_format f : {CSE_FORMAT_JSON, CSE_FORMAT_CSV, CSE_FORMAT_PLOT}) {
        char* text = nullptr;
        if (cse_report_render(r, f, &text) == CSE_OK) {
            out += text;
            cse_string_free(text);
        }
        out += "\n--\n";
    }
    return out;
}

Outcome criterion10() {
    Collector c;
    for (const char* text : corpus::kExpressions) {
        const Expression e = parse_expression(text);
        const std::string printed = to_string(e);
        c.require(parse_expression(printed) == e && to_string(parse_expression(printed)) == printed,
                  std::string("round trip fails for ") + text);
    }

    cse_quadrature_config cfg;
    cse_quadrature_config_default(&cfg);
    using Run = std::function<cse_status(cse_report**)>;
    cse_function* cusp = nullptr;
    cse_function* node = nullptr;
    cse_function* lin[2] = {nullptr, nullptr};
    cse_function_parse("y^2 - x^3", &cusp);
    cse_function_parse("x^2 - y^2", &node);
    cse_function_parse("x + y", &lin[0]);
    cse_function_parse("x - y", &lin[1]);
    const char* ts[] = {"1/100", "1/10000"};
    const std::vector<std::pair<const char*, Run>> runs = {
        {"exponent", [&](cse_report** r) { return cse_exponent_report(cusp, ts, 2, 0.1, r); }},
        {"lct", [&](cse_report** r) { return cse_lct_report(cusp, nullptr, nullptr, r); }},
        {"polygon", [&](cse_report** r) { return cse_polygon_report(cusp, r); }},
        {"sweep", [&](cse_report** r) { return cse_sweep_report(cusp, 0.3, 0.5, ts, 2, 0.05, 0, &cfg, r); }},
        {"bound", [&](cse_report** r) { return cse_bound_report(node, 0.2, 1, ts, 2, lin, 2, &cfg, r); }},
        {"counterexample", [&](cse_report** r) { return cse_counterexample_report(0, 2, nullptr, 0, r); }},
        {"probe", [&](cse_report** r) { return cse_probe_multiplicity_report("(z-1)^2*(z+2)", "1", 0.2, 0, &cfg, r); }},
        {"probe-holder", [&](cse_report** r) { return cse_probe_holder_report(1, 1e-2, r); }},
    };
    for (const auto& [name, run] : runs) {
        std::string first, second;
        for (std::string* slot : {&first, &second}) {
            cse_report* r = nullptr;
            const cse_status s = run(&r);
            c.require(s == CSE_OK, std::string(name) + " failed: " + cse_last_error());
            if (s == CSE_OK) *slot = render_all(r);
            cse_report_free(r);
        }
        c.require(!first.empty() && first == second, std::string(name) + " reruns differ");
    }
    cse_function_free(cusp);
    cse_function_free(node);
    cse_function_free(lin[0]);
    cse_function_free(lin[1]);
    c.note("50 expressions round-trip; 8 report kinds byte-identical on rerun");
    return c.finish();
}

}  // namespace

int main(int argc, char** argv) {
    const std::vector<std::function<Outcome()>> criteria = {criterion1, criterion2, criterion3, criterion4, criterion5,
                                                             criterion6, criterion7, criterion8, criterion9, criterion10};
    std::vector<int> selected;
    for (int i = 1; i < argc; ++i) {
        const int k = std::atoi(argv[i]);
        if (k < 1 || k > static_cast<int>(criteria.size())) {
            std::fprintf(stderr, "unknown criterion '%s' (expected 1..10)\n", argv[i]);
            return 2;
        }
        selected.push_back(k);
    }
    if (selected.empty())
        for (int k = 1; k <= static_cast<int>(criteria.size()); ++k) selected.push_back(k);

    int failed = 0;
    for (const int k : selected) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[k - 1]();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("criterion %2d: %s  %s  [%.2f s]\n", k, o.pass ? "PASS" : "FAIL", o.detail.c_str(), secs);
        std::fflush(stdout);
        failed += o.pass ? 0 : 1;
    }
    std::printf("%zu criteria, %d failed\n", selected.size(), failed);
    return failed == 0 ? 0 : 1;
}

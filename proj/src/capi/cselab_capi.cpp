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

#include "cselab/cselab.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include "cselab/errors.hpp"
#include "cselab/expression.hpp"
#include "cselab/newton_polygon.hpp"
#include "cselab/reports.hpp"

struct cse_function {
    cselab::MixedFunction f;
};

struct cse_report {
    cselab::Report report;
};

namespace {

thread_local std::string last_error;

cse_status code_of(cselab::ErrorCode code) {
    switch (code) {
        case cselab::ErrorCode::InvalidArgument: return CSE_ERR_INVALID_ARGUMENT;
        case cselab::ErrorCode::Parse: return CSE_ERR_PARSE;
        case cselab::ErrorCode::Hypothesis: return CSE_ERR_HYPOTHESIS;
        case cselab::ErrorCode::Divergent: return CSE_ERR_DIVERGENT;
        case cselab::ErrorCode::Io: return CSE_ERR_IO;
        case cselab::ErrorCode::Internal: return CSE_ERR_INTERNAL;
    }
    return CSE_ERR_INTERNAL;
}

template <typename Body>
cse_status guarded(Body&& body) {
    try {
        body();
        last_error.clear();
        return CSE_OK;
    } catch (const cselab::Error& e) {
        last_error = e.what();
        return code_of(e.code());
    } catch (const std::bad_alloc&) {
        last_error = "out of memory";
        return CSE_ERR_INTERNAL;
    } catch (const std::exception& e) {
        last_error = e.what();
        return CSE_ERR_INTERNAL;
    }
}

void require(const void* p, const char* what) {
    if (p == nullptr) cselab::fail(cselab::ErrorCode::InvalidArgument, std::string(what) + " must not be NULL");
}

char* duplicate(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out == nullptr) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

std::vector<cselab::GaussianRational> scalars(const char* const* values, std::size_t count) {
    if (count > 0) require(values, "value list");
    std::vector<cselab::GaussianRational> out;
    for (std::size_t i = 0; i < count; ++i) {
        require(values[i], "value");
        out.push_back(cselab::parse_scalar(values[i]));
    }
    return out;
}

cselab::QuadratureConfig to_config(const cse_quadrature_config* c) {
    cselab::QuadratureConfig cfg = cselab::QuadratureConfig::from_environment();
    if (c != nullptr) {
        cfg.radial_cells_per_decade = c->radial_cells_per_decade;
        cfg.angular_cells = c->angular_cells;
        cfg.max_refinement_depth = c->max_refinement_depth;
        cfg.target_rel_tolerance = c->target_rel_tolerance;
        cfg.max_cells = c->max_cells;
        cfg.precision = c->extended_precision ? cselab::Precision::Extended : cselab::Precision::Double;
    }
    cfg.validate();
    return cfg;
}

cse_report* wrap(cselab::Report r) { return new cse_report{std::move(r)}; }

cselab::Exponent polygon_estimate_of(const std::string& curve) {
    return cselab::lct_polygon_estimate(cselab::parse_function(curve).holo());
}

}  // namespace

extern "C" {

const char* cse_last_error(void) { return last_error.c_str(); }

const char* cse_version(void) { return "0.1.0"; }

void cse_string_free(char* s) { std::free(s); }

cse_status cse_quadrature_config_default(cse_quadrature_config* out) {
    return guarded([&] {
        require(out, "out");
        const cselab::QuadratureConfig cfg = cselab::QuadratureConfig::from_environment();
        out->radial_cells_per_decade = cfg.radial_cells_per_decade;
        out->angular_cells = cfg.angular_cells;
        out->max_refinement_depth = cfg.max_refinement_depth;
        out->target_rel_tolerance = cfg.target_rel_tolerance;
        out->max_cells = cfg.max_cells;
        out->extended_precision = cfg.precision == cselab::Precision::Extended ? 1 : 0;
    });
}

cse_status cse_function_parse(const char* text, cse_function** out) {
    return guarded([&] {
        require(text, "text");
        require(out, "out");
        *out = new cse_function{cselab::parse_function(text)};
    });
}

cse_status cse_function_to_string(const cse_function* f, char** out) {
    return guarded([&] {
        require(f, "function");
        require(out, "out");
        *out = duplicate(f->f.to_string());
    });
}

int cse_function_is_holomorphic(const cse_function* f) { return f != nullptr && f->f.is_holomorphic() ? 1 : 0; }

void cse_function_free(cse_function* f) { delete f; }

cse_status cse_exponent_report(const cse_function* f, const char* const* t_values, size_t t_count, double delta,
                               cse_report** out) {
    return guarded([&] {
        require(f, "function");
        require(out, "out");
        if (!(delta > 0)) cselab::fail(cselab::ErrorCode::InvalidArgument, "delta must be positive");
        std::vector<cselab::GaussianRational> ts = scalars(t_values, t_count);
        if (ts.empty())
            for (long d : {100L, 1000L, 10000L, 100000L}) ts.emplace_back(mpq_class(1, d));
        cselab::FiberZeroOptions opts;
        opts.delta = delta;
        *out = wrap(cselab::exponent_report(f->f, cselab::semicontinuity_check(f->f, ts, opts)));
    });
}

cse_status cse_lct_report(const cse_function* f, const char* catalog_json, const char* entry, cse_report** out) {
    return guarded([&] {
        require(out, "out");
        const std::vector<cselab::ResolutionData> catalog = catalog_json != nullptr
                                                                ? cselab::parse_resolution_catalog(catalog_json)
                                                                : cselab::builtin_resolution_catalog();
        std::vector<cselab::LctEntryResult> rows;
        for (const auto& data : catalog) {
            if (entry != nullptr && data.name != entry) continue;
            cselab::LctEntryResult r{data, cselab::lct_from_resolution(data), std::nullopt};
            if (!data.curve.empty()) r.polygon_estimate = polygon_estimate_of(data.curve);
            rows.push_back(std::move(r));
        }
        if (entry != nullptr && rows.empty())
            cselab::fail(cselab::ErrorCode::InvalidArgument, std::string("no catalog entry named '") + entry + "'");
        std::optional<cselab::MixedFunction> fn;
        if (f != nullptr) fn = f->f;
        *out = wrap(cselab::lct_report(fn, rows));
    });
}

cse_status cse_polygon_report(const cse_function* f, cse_report** out) {
    return guarded([&] {
        require(f, "function");
        require(out, "out");
        *out = wrap(cselab::polygon_report(f->f));
    });
}

cse_status cse_sweep_report(const cse_function* f, double c, double R, const char* const* t_values, size_t t_count,
                            double band, double R1, const cse_quadrature_config* config, cse_report** out) {
    return guarded([&] {
        require(f, "function");
        require(out, "out");
        if (R1 > 0 && !(R1 > 1)) cselab::fail(cselab::ErrorCode::InvalidArgument, "the splitting radius R1 must exceed 1");
        std::vector<cselab::GaussianRational> ts = scalars(t_values, t_count);
        if (ts.empty()) ts = cselab::default_t_sequence(8);
        const cselab::QuadratureConfig cfg = to_config(config);
        const cselab::SweepReport r = cselab::convergence_sweep(f->f, c, R, ts, cfg, band);
        std::vector<std::optional<cselab::Decomposition>> split;
        if (R1 > 0) {
            for (const auto& row : r.rows) {
                try {
                    split.push_back(cselab::decompose_I(f->f, row.t, c, R, R1, cfg));
                } catch (const cselab::Error& e) {
                    if (e.code() != cselab::ErrorCode::InvalidArgument) throw;
                    split.push_back(std::nullopt);
                }
            }
        }
        *out = wrap(cselab::sweep_report(f->f, r, R1, split));
    });
}

cse_status cse_bound_report(const cse_function* f, double c, double R, const char* const* t_values, size_t t_count,
                            const cse_function* const* factors, size_t factor_count,
                            const cse_quadrature_config* config, cse_report** out) {
    return guarded([&] {
        require(f, "function");
        require(out, "out");
        if (factor_count > 0) require(factors, "factor list");
        const cselab::QuadratureConfig cfg = to_config(config);
        std::vector<cselab::GaussianRational> ts = scalars(t_values, t_count);
        if (ts.empty()) ts = cselab::default_t_sequence(8);
        const cselab::BoundReport main = cselab::uniform_bound_check(f->f, c, R, ts, cfg);

        std::vector<cselab::YoungFactor> young;
        unsigned l = 0;
        for (std::size_t i = 0; i < factor_count; ++i) {
            require(factors[i], "factor");
            const cselab::Exponent c0 = cselab::central_exponent(factors[i]->f, cselab::AxisComponent::MinOverComponents);
            if (c0.is_infinite() || c0.is_zero() || c0.value().get_num() != 1)
                cselab::fail(cselab::ErrorCode::Hypothesis,
                             "a Young factor needs c_0(f_i) = 1/l_i for a positive integer l_i, got c_0 = " +
                                 c0.to_string() + " for " + factors[i]->f.to_string());
            cselab::YoungFactor y;
            y.factor = factors[i]->f;
            y.order = static_cast<unsigned>(c0.value().get_den().get_ui());
            l += y.order;
            young.push_back(std::move(y));
        }
        for (auto& y : young) {
            y.exponent = c * l / y.order;
            y.bound = cselab::uniform_bound_check(y.factor, y.exponent, R, ts, cfg);
        }
        *out = wrap(cselab::bound_report(f->f, main, young));
    });
}

cse_status cse_counterexample_report(unsigned n_min, unsigned n_max, const char* const* s_values, size_t s_count,
                                     cse_report** out) {
    return guarded([&] {
        require(out, "out");
        if (n_min > n_max) cselab::fail(cselab::ErrorCode::InvalidArgument, "n_min exceeds n_max");
        if (n_max > 64) cselab::fail(cselab::ErrorCode::InvalidArgument, "n is capped at 64");
        std::vector<cselab::GaussianRational> ss = scalars(s_values, s_count);
        if (ss.empty()) ss = {mpq_class(1, 10), mpq_class(1, 7), mpq_class(1, 3)};
        std::vector<std::pair<cselab::CounterexampleRecord, cselab::ViolationReport>> records;
        for (unsigned n = n_min; n <= n_max; ++n) {
            cselab::CounterexampleRecord rec = cselab::counterexample(n);
            cselab::ViolationReport v = cselab::verify_violation(rec, ss);
            records.emplace_back(std::move(rec), std::move(v));
        }
        *out = wrap(cselab::counterexample_report(records));
    });
}

cse_status cse_probe_multiplicity_report(const char* poly, const char* zero, double c, double r_max,
                                         const cse_quadrature_config* config, cse_report** out) {
    return guarded([&] {
        require(poly, "polynomial");
        require(zero, "zero");
        require(out, "out");
        const cselab::UnivariatePoly p = cselab::parse_univariate(poly);
        const cselab::GaussianRational z0 = cselab::parse_scalar(zero);
        if (p.is_zero()) cselab::fail(cselab::ErrorCode::InvalidArgument, "the probe polynomial is identically zero");
        if (!p.evaluate(z0).is_zero())
            cselab::fail(cselab::ErrorCode::InvalidArgument, z0.to_string() + " is not a root of " + p.to_string('z'));
        const cselab::ProbeReport r = cselab::exponent_probe_1d(cselab::FiberFunction::polynomial(p), z0.to_complex_ld(), c,
                                                                to_config(config), r_max);
        *out = wrap(cselab::multiplicity_probe_report(p, z0, c, r));
    });
}

cse_status cse_probe_holder_report(unsigned n, double scale, cse_report** out) {
    return guarded([&] {
        require(out, "out");
        *out = wrap(cselab::holder_probe_report(n, scale, cselab::holder_probe(n, scale)));
    });
}

cse_verdict cse_report_verdict(const cse_report* r) {
    if (r == nullptr) return CSE_VERDICT_NONE;
    switch (r->report.verdict) {
        case cselab::Verdict::None: return CSE_VERDICT_NONE;
        case cselab::Verdict::Holds: return CSE_VERDICT_HOLDS;
        case cselab::Verdict::Violated: return CSE_VERDICT_VIOLATED;
        case cselab::Verdict::Converged: return CSE_VERDICT_CONVERGED;
        case cselab::Verdict::Inconclusive: return CSE_VERDICT_INCONCLUSIVE;
        case cselab::Verdict::Bounded: return CSE_VERDICT_BOUNDED;
        case cselab::Verdict::Growth: return CSE_VERDICT_GROWTH;
    }
    return CSE_VERDICT_NONE;
}

int cse_report_theorem_violation(const cse_report* r) { return r != nullptr && r->report.theorem_violation ? 1 : 0; }

cse_status cse_report_render(const cse_report* r, cse_format format, char** out) {
    return guarded([&] {
        require(r, "report");
        require(out, "out");
        cselab::ReportFormat f = cselab::ReportFormat::Json;
        switch (format) {
            case CSE_FORMAT_JSON: f = cselab::ReportFormat::Json; break;
            case CSE_FORMAT_CSV: f = cselab::ReportFormat::Csv; break;
            case CSE_FORMAT_PLOT: f = cselab::ReportFormat::PlotData; break;
            default: cselab::fail(cselab::ErrorCode::InvalidArgument, "unknown format code");
        }
        *out = duplicate(r->report.render(f));
    });
}

void cse_report_free(cse_report* r) { delete r; }

}  // extern "C"

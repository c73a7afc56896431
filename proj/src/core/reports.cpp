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

#include "cselab/reports.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "cselab/errors.hpp"
#include "cselab/expression.hpp"
#include "cselab/newton_polygon.hpp"

namespace cselab {

using nlohmann::json;

namespace {

json number(double v) {
    if (!std::isfinite(v)) return nullptr;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return std::strtod(buf, nullptr);
}

json integer(const mpz_class& z) {
    if (z.fits_slong_p()) return static_cast<std::int64_t>(z.get_si());
    return z.get_str();
}

json exponent(const Exponent& e) {
    if (e.is_infinite()) return "inf";
    return {{"num", integer(e.value().get_num())}, {"den", integer(e.value().get_den())}};
}

json scalar(const GaussianRational& q) { return q.to_string(); }

json point(ComplexLD z) { return {number(static_cast<double>(z.real())), number(static_cast<double>(z.imag()))}; }

// Ascending coefficients over a common denominator.
json coefficient_list(const UnivariatePoly& p) {
    mpz_class den = 1;
    for (const auto& c : p.coefficients()) {
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.re().get_den_mpz_t());
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.im().get_den_mpz_t());
    }
    json re = json::array(), im = json::array();
    for (const auto& c : p.coefficients()) {
        const mpq_class r = c.re() * den, i = c.im() * den;
        re.push_back(integer(r.get_num()));
        im.push_back(integer(i.get_num()));
    }
    return {{"den", integer(den)}, {"re", re}, {"im", im}, {"text", p.to_string('z')}};
}

json support(const BivariatePoly& p) {
    json out = json::array();
    for (const auto& [e, c] : p.terms()) out.push_back({e.m, e.n, scalar(c)});
    return out;
}

json integral(const IntegralReport& r) {
    return {{"value", r.divergent ? json(nullptr) : number(r.value)},
            {"error", number(r.error)},
            {"cells", r.cells},
            {"converged", r.converged},
            {"divergent", r.divergent},
            {"unresolved_singular_cells", r.unresolved_singular_cells},
            {"max_depth", r.max_depth}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string plot_rows(const std::vector<std::pair<double, double>>& rows) {
    std::string out;
    for (const auto& [a, b] : rows) out += format_number(a) + " " + format_number(b) + "\n";
    return out;
}

double as_double(const GaussianRational& t) { return std::abs(t.to_complex()); }

}  // namespace

std::string format_number(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

ReportFormat parse_report_format(std::string_view text) {
    if (text == "json") return ReportFormat::Json;
    if (text == "csv") return ReportFormat::Csv;
    if (text == "plot" || text == "plot-data") return ReportFormat::PlotData;
    fail(ErrorCode::InvalidArgument, "unknown format '" + std::string(text) + "' (expected json, csv or plot)");
}

const std::string& Report::render(ReportFormat format) const {
    switch (format) {
        case ReportFormat::Json: return json;
        case ReportFormat::Csv:
            if (csv.empty()) fail(ErrorCode::InvalidArgument, "the " + kind + " report has no csv form");
            return csv;
        case ReportFormat::PlotData:
            if (plot.empty()) fail(ErrorCode::InvalidArgument, "the " + kind + " report has no plot-data form");
            return plot;
    }
    return json;
}

GaussianRational parse_scalar(std::string_view text) {
    try {
        return GaussianRational::parse_real(text);
    } catch (const Error&) {
    }
    const MixedFunction f = parse_function(text);
    if (!f.is_holomorphic() || !f.holo().is_constant())
        fail(ErrorCode::InvalidArgument, "expected a number, got '" + std::string(text) + "'");
    return f.holo().constant_term();
}

Report exponent_report(const MixedFunction& f, const SemicontinuityReport& r) {
    json samples = json::array();
    for (const auto& s : r.samples) {
        json zeros = json::array();
        for (const auto& z : s.zeros.zeros) {
            json entry = {{"location", point(z.location)},
                          {"multiplicity", z.multiplicity},
                          {"exponent", exponent(fiber_exponent(z))},
                          {"exact", z.exactness == ZeroExactness::Exact}};
            if (z.exact_location) entry["exact_location"] = scalar(*z.exact_location);
            zeros.push_back(std::move(entry));
        }
        samples.push_back({{"t", scalar(s.t)},
                           {"identically_zero", s.zeros.identically_zero},
                           {"zeros", zeros},
                           {"min_fiber_exponent", exponent(s.min_fiber_exponent)},
                           {"holds", s.holds}});
    }
    const bool violated = r.verdict == SemicontinuityVerdict::Violated;
    json j = {{"kind", "exponent"},
              {"function", f.to_string()},
              {"holomorphic", r.holomorphic},
              {"delta", number(r.delta)},
              {"central", {{"x_axis", exponent(r.central_x)}, {"y_axis", exponent(r.central_y)}, {"max", exponent(r.central_max)}, {"min", exponent(std::min(r.central_x, r.central_y))}}},
              {"samples", samples},
              {"verdict", violated ? "violated" : "holds"},
              {"largest_t_held", r.largest_t_held ? scalar(*r.largest_t_held) : json(nullptr)}};
    if (r.witness)
        j["witness"] = {{"t", scalar(r.witness->t)},
                        {"zero", point(r.witness->zero.location)},
                        {"central", exponent(r.witness->central)},
                        {"fiber", exponent(r.witness->fiber)}};

    Report out;
    out.kind = "exponent";
    out.json = dump(j);
    out.verdict = violated ? Verdict::Violated : Verdict::Holds;
    out.theorem_violation = violated && r.holomorphic;
    return out;
}

Report lct_report(const std::optional<MixedFunction>& f, const std::vector<LctEntryResult>& entries) {
    json rows = json::array();
    std::string csv = "name,resolution,kind,polygon_estimate,agree\n";
    bool all_agree = true;
    for (const auto& e : entries) {
        json row = {{"name", e.data.name},
                    {"curve", e.data.curve},
                    {"resolution", exponent(e.bound.value)},
                    {"resolution_kind", e.bound.exact ? "equality" : "upper bound"}};
        std::string estimate = "", agree = "";
        if (e.polygon_estimate) {
            const bool same = *e.polygon_estimate == e.bound.value;
            all_agree = all_agree && same;
            row["polygon_estimate"] = {{"value", exponent(*e.polygon_estimate)}, {"label", "ESTIMATE"}};
            row["agree"] = same;
            estimate = e.polygon_estimate->to_string();
            agree = same ? "true" : "false";
        }
        rows.push_back(std::move(row));
        csv += e.data.name + "," + e.bound.value.to_string() + "," + (e.bound.exact ? "equality" : "upper bound") + "," +
               estimate + "," + agree + "\n";
    }
    json j = {{"kind", "lct"}, {"entries", rows}, {"all_agree", all_agree}};
    bool holomorphic_mismatch = false;
    if (f) {
        j["function"] = f->to_string();
        if (f->is_holomorphic()) {
            j["polygon_estimate"] = {{"value", exponent(lct_polygon_estimate(f->holo()))}, {"label", "ESTIMATE"}};
        }
    }
    for (const auto& e : entries) holomorphic_mismatch = holomorphic_mismatch || (e.polygon_estimate && e.bound.exact && !(*e.polygon_estimate == e.bound.value));

    Report out;
    out.kind = "lct";
    out.json = dump(j);
    out.csv = csv;
    out.verdict = all_agree ? Verdict::Holds : Verdict::Violated;
    out.theorem_violation = holomorphic_mismatch;
    return out;
}

Report polygon_report(const MixedFunction& f) {
    if (!f.is_holomorphic()) fail(ErrorCode::InvalidArgument, "the Newton polygon needs a holomorphic F, got " + f.to_string());
    const NewtonPolygon polygon = compute_polygon(f.holo());
    json vertices = json::array();
    std::string plot;
    for (const auto& v : polygon.vertices()) {
        vertices.push_back({v.m, v.n});
        plot += std::to_string(v.m) + " " + std::to_string(v.n) + "\n";
    }
    json segments = json::array();
    for (const auto& [a, b] : polygon.segments()) segments.push_back({{a.m, a.n}, {b.m, b.n}});
    json j = {{"kind", "polygon"},
              {"function", f.to_string()},
              {"support", support(f.holo())},
              {"vertices", vertices},
              {"segments", segments},
              {"single_segment", single_segment(polygon)},
              {"lct_estimate", {{"value", exponent(lct_polygon_estimate(f.holo()))}, {"label", "ESTIMATE"}}}};
    try {
        const AxisEndpoints kl = endpoints(polygon);
        j["endpoints"] = {{"k", kl.k}, {"l", kl.l}};
        j["principal_part"] = principal_part(f.holo(), kl).to_string();
    } catch (const Error&) {
        j["endpoints"] = nullptr;
        j["principal_part"] = nullptr;
    }
    Report out;
    out.kind = "polygon";
    out.json = dump(j);
    out.plot = plot;
    return out;
}

Report sweep_report(const MixedFunction& f, const SweepReport& r, double R1,
                    const std::vector<std::optional<Decomposition>>& split) {
    if (R1 > 0 && split.size() != r.rows.size()) fail(ErrorCode::Internal, "one split per sweep row is required");
    json rows = json::array();
    std::string csv = "t,K_t,err,I_t,J_t,ratio\n";
    std::vector<std::pair<double, double>> plot;
    for (const auto& row : r.rows) {
        rows.push_back({{"t", scalar(row.t)},
                        {"t_value", number(as_double(row.t))},
                        {"K", number(row.K)},
                        {"error", number(row.error)},
                        {"I", number(row.I)},
                        {"J", number(row.J)},
                        {"ratio", number(row.ratio)},
                        {"converged", row.converged},
                        {"divergent", row.divergent}});
        if (R1 > 0) {
            const auto& d = split[rows.size() - 1];
            rows.back()["split"] = d ? json{{"k", d->k},
                                            {"l", d->l},
                                            {"s", number(d->s)},
                                            {"I1", integral(d->I1)},
                                            {"I2", integral(d->I2)},
                                            {"I3", integral(d->I3)},
                                            {"sum", number(d->sum())},
                                            {"combined_error", number(d->combined_error())}}
                                     : json(nullptr);
        }
        csv += format_number(as_double(row.t)) + "," + format_number(row.K) + "," + format_number(row.error) + "," +
               format_number(row.I) + "," + format_number(row.J) + "," + format_number(row.ratio) + "\n";
        plot.emplace_back(as_double(row.t), row.ratio);
    }
    const bool converged = r.verdict == SweepVerdict::Converged;
    json j = {{"kind", "sweep"},
              {"function", f.to_string()},
              {"c", number(r.c)},
              {"R", number(r.R)},
              {"band", number(r.band)},
              {"K0", integral(r.K0)},
              {"rows", rows},
              {"monotone_trend", r.monotone_trend},
              {"single_segment", r.single_segment},
              {"hypothesis_note", r.hypothesis_note},
              {"verdict", converged ? "converged" : "inconclusive"}};
    if (R1 > 0) j["R1"] = number(R1);
    Report out;
    out.kind = "sweep";
    out.json = dump(j);
    out.csv = csv;
    out.plot = plot_rows(plot);
    out.verdict = converged ? Verdict::Converged : Verdict::Inconclusive;
    return out;
}

Report bound_report(const MixedFunction& f, const BoundReport& r, const std::vector<YoungFactor>& factors) {
    json samples = json::array();
    std::string csv = "t,K_t,err\n";
    std::vector<std::pair<double, double>> plot;
    for (const auto& s : r.samples) {
        samples.push_back({{"t", scalar(s.t)}, {"t_value", number(as_double(s.t))}, {"K", number(s.K)}, {"error", number(s.error)}});
        csv += format_number(as_double(s.t)) + "," + format_number(s.K) + "," + format_number(s.error) + "\n";
        plot.emplace_back(as_double(s.t), s.K);
    }
    json j = {{"kind", "bound"},
              {"function", f.to_string()},
              {"c", number(r.c)},
              {"R", number(r.R)},
              {"M", number(r.M)},
              {"samples", samples},
              {"growth_trend", r.growth_trend},
              {"verdict", r.growth_trend ? "growth" : "bounded"}};
    bool young_ok = true;
    if (!factors.empty()) {
        json fs = json::array();
        std::vector<std::pair<unsigned, double>> parts;
        for (const auto& y : factors) {
            fs.push_back({{"function", y.factor.to_string()},
                          {"l", y.order},
                          {"c", number(y.exponent)},
                          {"M", number(y.bound.M)},
                          {"growth_trend", y.bound.growth_trend}});
            parts.emplace_back(y.order, y.bound.M);
        }
        const double combined = young_combine(parts);
        young_ok = r.M <= combined;
        j["young"] = {{"factors", fs}, {"bound", number(combined)}, {"within_bound", young_ok}};
    }
    Report out;
    out.kind = "bound";
    out.json = dump(j);
    out.csv = csv;
    out.plot = plot_rows(plot);
    const bool bad = r.growth_trend || !young_ok;
    out.verdict = bad ? Verdict::Growth : Verdict::Bounded;
    out.theorem_violation = bad && f.is_holomorphic();
    return out;
}

Report counterexample_report(const std::vector<std::pair<CounterexampleRecord, ViolationReport>>& records) {
    json list = json::array();
    bool all_violated = true;
    for (const auto& [rec, v] : records) {
        json samples = json::array();
        for (const auto& s : v.samples)
            samples.push_back({{"s", scalar(s.s)},
                               {"identity_holds", s.identity_holds},
                               {"fiber_exponent", exponent(s.fiber_exponent)},
                               {"fiber_bound_holds", s.fiber_bound_holds},
                               {"central_holds", s.central_holds},
                               {"violated", s.violated}});
        all_violated = all_violated && v.violated;
        list.push_back({{"n", rec.n},
                        {"P", coefficient_list(rec.P)},
                        {"q", coefficient_list(rec.q)},
                        {"c", scalar(rec.c)},
                        {"Q", rec.Q.to_string()},
                        {"Q_support", support(rec.Q)},
                        {"F", rec.F.to_string()},
                        {"in_N", rec.in_N},
                        {"kernel_dimension", rec.kernel_dimension},
                        {"symmetrized", rec.symmetrized},
                        {"normalization", "z^(4n+2) coefficient 1, else constant term 1"},
                        {"order_at_one", rec.order_at_one},
                        {"exponents",
                         {{"central", exponent(rec.central_exponent)},
                          {"fiber_at_diagonal", exponent(rec.fiber_exponent_at_diagonal)}}},
                        {"samples", samples},
                        {"verdict", v.violated ? "violated" : "not violated"}});
    }
    json j = {{"kind", "counterexample"}, {"records", list}};
    Report out;
    out.kind = "counterexample";
    out.json = dump(j);
    // The families are non-holomorphic; "violated" is the expected outcome.
    out.verdict = all_violated ? Verdict::Violated : Verdict::Holds;
    return out;
}

Report multiplicity_probe_report(const UnivariatePoly& f, const GaussianRational& zero, double c, const ProbeReport& r) {
    json masses = json::array();
    for (const auto& [radius, mass] : r.masses) masses.push_back({number(radius), number(mass)});
    json j = {{"kind", "probe"},
              {"probe", "multiplicity"},
              {"function", f.to_string('z')},
              {"zero", scalar(zero)},
              {"c", number(c)},
              {"multiplicity", number(r.multiplicity)},
              {"slope", number(r.slope)},
              {"residual", number(r.residual)},
              {"masses", masses}};
    Report out;
    out.kind = "probe";
    out.json = dump(j);
    out.plot = plot_rows(r.masses);
    return out;
}

Report holder_probe_report(unsigned n, double scale, const HolderReport& r) {
    json moduli = json::array();
    for (const auto& [h, omega] : r.moduli) moduli.push_back({number(h), number(omega)});
    json j = {{"kind", "probe"},
              {"probe", "holder"},
              {"n", n},
              {"scale", number(scale)},
              {"exponent", number(r.exponent)},
              {"raw_slope", number(r.raw_slope)},
              {"residual", number(r.residual)},
              {"moduli", moduli}};
    Report out;
    out.kind = "probe";
    out.json = dump(j);
    out.plot = plot_rows(r.moduli);
    return out;
}

}  // namespace cselab

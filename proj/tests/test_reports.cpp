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

#include <doctest.h>
#include <json.hpp>

#include "cselab/errors.hpp"
#include "cselab/expression.hpp"
#include "cselab/newton_polygon.hpp"
#include "cselab/reports.hpp"

using namespace cselab;
using nlohmann::json;

namespace {

GaussianRational rat(long num, long den) {
    mpq_class v(num, den);
    v.canonicalize();
    return GaussianRational(v);
}

}  // namespace

TEST_SUITE("reports") {

TEST_CASE("number formatting") {
    CHECK(format_number(0.1) == "0.1");
    CHECK(format_number(1.0 / 3) == "0.333333333333");
    CHECK(format_number(12.5663706144) == "12.5663706144");
    CHECK(format_number(INFINITY) == "inf");
    CHECK(format_number(NAN) == "nan");
}

TEST_CASE("scalars accept decimals, fractions and Gaussian rationals") {
    CHECK(parse_scalar("1e-4") == rat(1, 10000));
    CHECK(parse_scalar("1/7") == rat(1, 7));
    CHECK(parse_scalar("i/100") == GaussianRational(0, mpq_class(1, 100)));
    CHECK_THROWS_AS(parse_scalar("x"), Error);
    CHECK_THROWS_AS(parse_scalar("1/"), Error);
}

TEST_CASE("exponent report encodes exponents as num/den") {
    const MixedFunction f = parse_function("y^2 - x^3");
    const Report r = exponent_report(f, semicontinuity_check(f, {rat(1, 10000)}));
    const json j = json::parse(r.json);
    CHECK(j["central"]["x_axis"] == json({{"num", 1}, {"den", 3}}));
    CHECK(j["central"]["min"] == json({{"num", 1}, {"den", 3}}));
    CHECK(j["verdict"] == "holds");
    for (const auto& z : j["samples"][0]["zeros"]) CHECK(z["exponent"] == json({{"num", 1}, {"den", 1}}));
    CHECK(r.verdict == Verdict::Holds);
    CHECK_FALSE(r.theorem_violation);
    CHECK(r.json.find("\"den\": 3,\n") != std::string::npos);  // keys sorted: den before num
    CHECK_THROWS_AS(r.render(ReportFormat::Csv), Error);
}

TEST_CASE("violations are theorem violations only for holomorphic input") {
    const MixedFunction f = parse_function("x + y - 2*abs(x*y)^(1/2)");
    const Report r = exponent_report(f, semicontinuity_check(f, {rat(1, 100)}));
    CHECK(r.verdict == Verdict::Violated);
    CHECK_FALSE(r.theorem_violation);
}

TEST_CASE("counterexample record for n = 1") {
    const CounterexampleRecord rec = counterexample(1);
    const ViolationReport v = verify_violation(rec, {rat(1, 10)});
    const Report r = counterexample_report({{rec, v}});
    const json j = json::parse(r.json);
    const json& p = j["records"][0]["P"];
    CHECK(p["re"] == json({1, 0, -9, 16, -9, 0, 1}));
    CHECK(p["den"] == 1);
    CHECK(j["records"][0]["verdict"] == "violated");
    CHECK(j["records"][0]["exponents"]["central"] == json({{"num", 1}, {"den", 3}}));
    CHECK(r.json.find("[\n          1,\n          0,\n          -9,") != std::string::npos);
}

TEST_CASE("sweep CSV and plot data") {
    const MixedFunction f = parse_function("x + y");
    const SweepReport s = convergence_sweep(f, 0.5, 1, {rat(1, 100), rat(1, 10000)}, QuadratureConfig{});
    const Report r = sweep_report(f, s);
    CHECK(r.csv.rfind("t,K_t,err,I_t,J_t,ratio\n", 0) == 0);
    CHECK(std::count(r.csv.begin(), r.csv.end(), '\n') == 3);
    CHECK(r.plot.rfind("0.01 0.954", 0) == 0);
    CHECK(json::parse(r.json)["K0"]["value"] == doctest::Approx(12.5663706144));
}

TEST_CASE("polygon report") {
    const Report r = polygon_report(parse_function("y^2 - x^3 + x^2*y^2"));
    const json j = json::parse(r.json);
    CHECK(j["vertices"] == json({{0, 2}, {3, 0}}));
    CHECK(j["endpoints"] == json({{"k", 3}, {"l", 2}}));
    CHECK(j["lct_estimate"]["label"] == "ESTIMATE");
    CHECK(r.plot == "0 2\n3 0\n");
    CHECK_THROWS_AS(polygon_report(parse_function("x + abs(x*y)^(1/2)")), Error);
}

TEST_CASE("lct report labels") {
    std::vector<LctEntryResult> rows;
    const ResolutionData& cusp = catalog_entry("cusp");
    rows.push_back({cusp, lct_from_resolution(cusp), lct_polygon_estimate(parse_function(cusp.curve).holo())});
    ResolutionData partial{"partial", "", {{1, 2, true}}, false};
    rows.push_back({partial, lct_from_resolution(partial), std::nullopt});
    const Report r = lct_report(std::nullopt, rows);
    const json j = json::parse(r.json);
    CHECK(j["entries"][0]["resolution_kind"] == "equality");
    CHECK(j["entries"][0]["polygon_estimate"]["label"] == "ESTIMATE");
    CHECK(j["entries"][0]["agree"] == true);
    CHECK(j["entries"][1]["resolution_kind"] == "upper bound");
    CHECK_FALSE(j["entries"][1].contains("agree"));
    CHECK(r.verdict == Verdict::Holds);
}

TEST_CASE("non-finite values become null") {
    const FiberFunction f = FiberFunction::polynomial(UnivariatePoly::linear_power(0, 2));
    ProbeReport p;
    p.multiplicity = NAN;
    p.masses = {{0.1, INFINITY}};
    const json j = json::parse(multiplicity_probe_report(UnivariatePoly({0, 0, 1}), 0, 0.5, p).json);
    CHECK(j["multiplicity"].is_null());
    CHECK(j["masses"][0][1].is_null());
}

TEST_CASE("format names") {
    CHECK(parse_report_format("plot-data") == ReportFormat::PlotData);
    CHECK(parse_report_format("csv") == ReportFormat::Csv);
    CHECK_THROWS_AS(parse_report_format("xml"), Error);
}

}  // TEST_SUITE

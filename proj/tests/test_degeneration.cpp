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

#include <algorithm>
#include <fstream>
#include <iterator>

#include "cselab/degeneration.hpp"
#include "cselab/errors.hpp"
#include "cselab/expression.hpp"
#include "cselab/newton_polygon.hpp"
#include "oracles.hpp"

using namespace cselab;

namespace {

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

std::vector<GaussianRational> corpus_ts() { return {rat(1, 100), rat(1, 1000), rat(1, 10000), rat(1, 100000)}; }

std::vector<std::pair<unsigned, unsigned>> pairs(const ResolutionData& d) {
    std::vector<std::pair<unsigned, unsigned>> out;
    for (const auto& div : d.divisors) out.emplace_back(div.discrepancy, div.multiplicity);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_SUITE("degeneration") {

TEST_CASE("volume density on the graph y = t/x") {
    CHECK(volume_density({1, 0}, {1, 0}) == doctest::Approx(2));
    CHECK(volume_density({2, 0}, {0, 1}) == doctest::Approx(1.25));
    CHECK(volume_density_y_chart({2, 0}, {0, 1}) == doctest::Approx(5));
    CHECK_THROWS_AS(volume_density({0, 0}, {1, 0}), Error);
}

TEST_CASE("zeros of x + y are the two square roots of -t") {
    const FiberZeroSet z = fiber_zeros(parse_function("x + y"), rat(1, 100));
    REQUIRE(z.zeros.size() == 2);
    for (const auto& zero : z.zeros) {
        CHECK(zero.exactness == ZeroExactness::Exact);
        CHECK(zero.multiplicity == 1);
        REQUIRE(zero.exact_location);
        CHECK(zero.exact_location->norm() == mpq_class(1, 100));
        CHECK(fiber_exponent(zero) == ex(1, 1));
    }
}

TEST_CASE("a square has double zeros") {
    const FiberZeroSet z = fiber_zeros(parse_function("(x+y)^2"), rat(1, 10000));
    REQUIRE(z.zeros.size() == 2);
    for (const auto& zero : z.zeros) CHECK(zero.multiplicity == 2);
}

TEST_CASE("cusp fibers have five simple zeros inside the polydisc") {
    const FiberZeroSet z = fiber_zeros(parse_function("y^2 - x^3"), rat(1, 10000));
    CHECK(z.zeros.size() == 5);
    for (const auto& zero : z.zeros) {
        CHECK(zero.multiplicity == 1);
        CHECK(std::abs(std::abs(zero.location) - std::pow(10.0L, -8.0L / 5)) < 1e-12L);
    }
    const auto clusters = numeric_fiber_zeros(parse_function("y^2 - x^3"), rat(1, 10000), 1e-6L);
    CHECK(clusters.size() == 5);
}

TEST_CASE("the polydisc filter drops zeros far from the origin") {
    const MixedFunction f = parse_function("x + y + x^2");
    FiberZeroOptions opts;
    const FiberZeroSet inside = fiber_zeros(f, rat(1, 10000), opts);
    const FiberZeroSet all = laurent_zeros(substitute_fiber(f, rat(1, 10000)), opts);
    CHECK(all.zeros.size() == 3);
    CHECK(inside.zeros.size() == 2);
    for (const auto& z : inside.zeros) {
        CHECK(std::abs(z.location) <= 0.1L * (1 + 1e-9L));
        CHECK(std::abs(ComplexLD(1e-4L) / z.location) <= 0.1L * (1 + 1e-9L));
    }
}

TEST_CASE("exact multiplicities agree with numeric clustering") {
    for (const char* text : {"(x+y)^2", "x^2 - y^2", "(x - y)^3 + x^5", "y^2 - x^5"}) {
        const MixedFunction f = parse_function(text);
        const auto exact = laurent_zeros(substitute_fiber(f, rat(1, 1000)));
        const auto numeric = numeric_fiber_zeros(f, rat(1, 1000), 1e-5L);
        unsigned total_exact = 0, total_numeric = 0;
        for (const auto& z : exact.zeros) total_exact += z.multiplicity;
        for (const auto& c : numeric) total_numeric += c.size;
        CHECK(total_exact == total_numeric);
        CHECK(exact.zeros.size() == numeric.size());
    }
}

TEST_CASE("fiber exponent at a point") {
    const MixedFunction f = parse_function("x + y - 2*abs(x*y)^(1/2)");
    CHECK(fiber_exponent(f, rat(1, 100), rat(1, 10)) == ex(1, 2));
    CHECK(fiber_exponent(f, rat(1, 100), rat(1, 5)).is_infinite());
    CHECK(fiber_exponent(parse_function("x*y - 1/100"), rat(1, 100), rat(1, 5)) == Exponent::zero());
}

TEST_CASE("central exponents per axis") {
    const MixedFunction f = parse_function("y^2 - x^3");
    CHECK(central_exponent(f, AxisComponent::XAxis) == ex(1, 3));
    CHECK(central_exponent(f, AxisComponent::YAxis) == ex(1, 2));
    CHECK(central_exponent(f, AxisComponent::MinOverComponents) == ex(1, 3));
    CHECK(central_exponent(parse_function("x*y"), AxisComponent::XAxis) == Exponent::zero());
    CHECK(central_exponent(parse_function("1 + x"), AxisComponent::XAxis).is_infinite());
    CHECK(central_exponent(parse_function("x + y - 2*abs(x*y)^(1/2)"), AxisComponent::MinOverComponents) == ex(1, 1));
}

TEST_CASE("semicontinuity holds on the holomorphic corpus") {
    for (const char* text : {"x + y", "y^2 - x^3", "y^2 - x^5", "(x+y)^2", "x + y + x^2", "x^2 - y^2"}) {
        CAPTURE(text);
        const SemicontinuityReport r = semicontinuity_check(parse_function(text), corpus_ts());
        CHECK(r.verdict == SemicontinuityVerdict::Holds);
        CHECK(r.samples.size() == 4);
        for (const auto& s : r.samples) {
            CHECK(s.holds);
            for (const auto& z : s.zeros.zeros) CHECK(r.central_max <= fiber_exponent(z));
        }
        REQUIRE(r.largest_t_held);
        CHECK(*r.largest_t_held == rat(1, 100));
    }
}

TEST_CASE("the square-root example violates semicontinuity") {
    const SemicontinuityReport r = semicontinuity_check(parse_function("x + y - 2*abs(x*y)^(1/2)"),
                                                        {rat(1, 100), rat(1, 10000), rat(1, 1000000)});
    CHECK(r.verdict == SemicontinuityVerdict::Violated);
    CHECK_FALSE(r.holomorphic);
    REQUIRE(r.witness);
    CHECK(r.witness->fiber == ex(1, 2));
    CHECK(r.witness->central == ex(1, 1));
    CHECK_FALSE(r.largest_t_held.has_value());
    CHECK_THROWS_AS(semicontinuity_check(parse_function("x + y - 2*abs(x*y)^(1/2)"), {rat(1, 1000)}), Error);
}

TEST_CASE("samples are sorted by decreasing |t| and deduplicated") {
    const auto r = semicontinuity_check(parse_function("x + y"), {rat(1, 1000), rat(1, 10), rat(1, 1000)});
    REQUIRE(r.samples.size() == 2);
    CHECK(r.samples[0].t == rat(1, 10));
}

TEST_CASE("semicontinuity rejects degenerate inputs") {
    CHECK_THROWS_AS(semicontinuity_check(parse_function("x + y"), {}), Error);
    CHECK_THROWS_AS(semicontinuity_check(parse_function("x + y"), {GaussianRational(0)}), Error);
    CHECK_THROWS_AS(semicontinuity_check(parse_function("x*y - 1/100"), {rat(1, 100)}), Error);
}

TEST_CASE("catalog entries agree with explicit blowups") {
    for (unsigned a = 2; a <= 5; ++a)
        for (unsigned b = 2; b <= 5; ++b) {
            const std::string name = "x^" + std::to_string(a) + "+y^" + std::to_string(b);
            CAPTURE(name);
            const ResolutionData& d = catalog_entry(name);
            std::vector<std::pair<unsigned, unsigned>> expected;
            for (const auto& div : oracle::blowup_resolution(a, b)) expected.emplace_back(div.k, div.a);
            std::sort(expected.begin(), expected.end());
            CHECK(pairs(d) == expected);
            const mpq_class closed = std::min(mpq_class(1), mpq_class(mpq_class(1, a) + mpq_class(1, b)));
            CHECK(lct_from_resolution(d).value == Exponent::of(closed));
            CHECK(lct_from_resolution(d).value == Exponent::of(oracle::lct_of(oracle::blowup_resolution(a, b))));
        }
    CHECK(pairs(catalog_entry("cusp")) == pairs(catalog_entry("x^3+y^2")));
}

TEST_CASE("named catalog values") {
    CHECK(lct_from_resolution(catalog_entry("smooth")).value == ex(1, 1));
    CHECK(lct_from_resolution(catalog_entry("node")).value == ex(1, 1));
    CHECK(lct_from_resolution(catalog_entry("cusp")).value == ex(5, 6));
    CHECK(lct_from_resolution(catalog_entry("tacnode")).value == ex(3, 4));
    for (long m = 1; m <= 5; ++m)
        CHECK(lct_from_resolution(catalog_entry("axis-order-" + std::to_string(m))).value == ex(1, m));
    CHECK_THROWS_AS(catalog_entry("no-such-entry"), Error);
}

TEST_CASE("every catalog curve matches its polygon estimate") {
    for (const auto& d : builtin_resolution_catalog()) {
        CAPTURE(d.name);
        CHECK(lct_polygon_estimate(parse_function(d.curve).holo()) == lct_from_resolution(d).value);
    }
}

TEST_CASE("resolution formula edge cases") {
    ResolutionData d{"t", "", {{1, 2, true}, {0, 1, false}}, false};
    const ResolutionBound b = lct_from_resolution(d);
    CHECK(b.value == ex(1, 1));
    CHECK_FALSE(b.exact);
    CHECK_THROWS_AS(lct_from_resolution(ResolutionData{"e", "", {}, true}), Error);
    CHECK_THROWS_AS(lct_from_resolution(ResolutionData{"z", "", {{0, 0, true}}, true}), Error);
    CHECK_THROWS_AS(lct_from_resolution(ResolutionData{"o", "", {{0, 1, false}}, true}), Error);
}

TEST_CASE("catalog JSON round trip") {
    const auto& cat = builtin_resolution_catalog();
    CHECK(parse_resolution_catalog(resolution_catalog_to_json(cat)) == cat);
    const auto minimal = parse_resolution_catalog(R"([{"name":"m","divisors":[{"k":1,"a":3,"through":true}]}])");
    REQUIRE(minimal.size() == 1);
    CHECK(minimal[0].log_resolution);
    CHECK(minimal[0].divisors[0].multiplicity == 3);
    CHECK_THROWS_AS(parse_resolution_catalog("[{"), Error);
    CHECK_THROWS_AS(parse_resolution_catalog(R"([{"name":"m"}])"), Error);
    CHECK_THROWS_AS(parse_resolution_catalog(R"([{"name":"m","divisors":[{"k":-1,"a":3,"through":true}]}])"), Error);
}

TEST_CASE("the shipped catalog file is the built-in catalog") {
    std::ifstream in(CSELAB_DATA_DIR "/resolution_catalog.json");
    REQUIRE(in.good());
    const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    CHECK(text == resolution_catalog_to_json(builtin_resolution_catalog()));
}

}  // TEST_SUITE

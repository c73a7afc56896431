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

#include <random>

#include "cselab/errors.hpp"
#include "cselab/expression.hpp"
#include "cselab/newton_polygon.hpp"
#include "oracles.hpp"

using namespace cselab;

namespace {

BivariatePoly poly(const char* text) { return parse_function(text).holo(); }

Exponent ex(long num, long den) {
    mpq_class v(num, den);
    v.canonicalize();
    return Exponent::of(v);
}

}  // namespace

TEST_SUITE("newton-polygon") {

TEST_CASE("vertices match the brute-force hull on random supports") {
    std::mt19937 rng(2026);
    std::uniform_int_distribution<int> coord(0, 9), count(1, 12), coef(1, 5);
    for (int trial = 0; trial < 300; ++trial) {
        BivariatePoly::Terms terms;
        std::vector<oracle::Point> support;
        const int n = count(rng);
        for (int i = 0; i < n; ++i) {
            const unsigned m = coord(rng), k = coord(rng);
            terms[{m, k}] = coef(rng);
        }
        for (const auto& [e, c] : terms) support.emplace_back(e.m, e.n);
        const NewtonPolygon p = compute_polygon(BivariatePoly(terms));
        std::vector<oracle::Point> got;
        for (const auto& v : p.vertices()) got.emplace_back(v.m, v.n);
        CHECK(got == oracle::polyhedron_vertices(support));
    }
}

TEST_CASE("segments have strictly increasing slopes") {
    const NewtonPolygon p = compute_polygon(poly("y^5 + x*y^2 + x^3*y + x^7"));
    REQUIRE(p.segment_count() == 3);
    const auto segs = p.segments();
    for (std::size_t i = 0; i + 1 < segs.size(); ++i) {
        const auto& [a, b] = segs[i];
        const auto& [c, d] = segs[i + 1];
        // slope (b.n - a.n) / (b.m - a.m), compared by cross-multiplication
        CHECK((b.n - a.n) * (d.m - c.m) < (d.n - c.n) * (b.m - a.m));
    }
}

TEST_CASE("single segment and endpoints") {
    const NewtonPolygon cusp = compute_polygon(poly("y^2 - x^3"));
    CHECK(single_segment(cusp));
    CHECK(endpoints(cusp) == AxisEndpoints{3, 2});
    CHECK_FALSE(single_segment(compute_polygon(poly("y^4 + x*y + x^4"))));
    CHECK_THROWS_AS(endpoints(compute_polygon(poly("x*y + x^3"))), Error);
    CHECK_THROWS_AS(compute_polygon(BivariatePoly()), Error);
}

TEST_CASE("principal part keeps the monomials on the segment") {
    const BivariatePoly f = poly("y^2 - x^3 + x^2*y + x^4");
    CHECK(principal_part(f, {3, 2}) == poly("y^2 - x^3"));
    CHECK(principal_part(poly("x^2 - y^2 + x*y"), {2, 2}) == poly("x^2 - y^2 + x*y"));
}

TEST_CASE("lct estimates on nondegenerate germs") {
    CHECK(lct_polygon_estimate(poly("y^2 - x^3")) == ex(5, 6));
    CHECK(lct_polygon_estimate(poly("x*y")) == ex(1, 1));
    CHECK(lct_polygon_estimate(poly("x^3")) == ex(1, 3));
    CHECK(lct_polygon_estimate(poly("x")) == ex(1, 1));
    CHECK(lct_polygon_estimate(poly("x^2 + y^5")) == ex(7, 10));
    CHECK(lct_polygon_estimate(poly("x^4 + y^4")) == ex(1, 2));
    CHECK(lct_polygon_estimate(poly("1 + x")).is_infinite());
}

TEST_CASE("the estimate is blind to degenerate principal parts") {
    // (x+y)^2 has threshold 1/2; its polygon cannot see the square.
    CHECK(lct_polygon_estimate(poly("(x+y)^2")) == ex(1, 1));
}

TEST_CASE("estimates never exceed one") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> coord(0, 6), coef(-3, 3);
    for (int trial = 0; trial < 100; ++trial) {
        BivariatePoly::Terms terms;
        for (int i = 0; i < 5; ++i) {
            const unsigned m = coord(rng), n = coord(rng);
            if (m + n == 0 || coef(rng) == 0) continue;
            terms[{m, n}] = 1 + coord(rng);
        }
        if (terms.empty()) continue;
        const Exponent e = lct_polygon_estimate(BivariatePoly(terms));
        CHECK_FALSE(e.is_infinite());
        CHECK(e <= ex(1, 1));
        CHECK(ex(0, 1) < e);
    }
}

}  // TEST_SUITE

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

#include "cselab/newton_polygon.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>

#include "cselab/errors.hpp"

namespace cselab {

namespace {

long cross(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
    return (a.m - o.m) * (b.n - o.n) - (a.n - o.n) * (b.m - o.m);
}

}  // namespace

std::vector<std::pair<LatticePoint, LatticePoint>> NewtonPolygon::segments() const {
    std::vector<std::pair<LatticePoint, LatticePoint>> out;
    for (std::size_t i = 0; i + 1 < vertices_.size(); ++i) out.emplace_back(vertices_[i], vertices_[i + 1]);
    return out;
}

NewtonPolygon compute_polygon(const BivariatePoly& f) {
    if (f.is_zero()) fail(ErrorCode::InvalidArgument, "zero polynomial has no polygon");

    // Only the lowest point in each column can reach the lower-left boundary.
    std::map<long, long> lowest;
    for (const auto& [e, c] : f.terms()) {
        const long m = e.m, n = e.n;
        auto [it, inserted] = lowest.try_emplace(m, n);
        if (!inserted) it->second = std::min(it->second, n);
    }

    // Monotone chain lower hull, strictly convex.
    std::vector<LatticePoint> hull;
    for (const auto& [m, n] : lowest) {
        const LatticePoint p{m, n};
        while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) <= 0) hull.pop_back();
        hull.push_back(p);
    }

    // Keep the part with negative slopes: stop at the first vertex of minimal height.
    const auto lowest_vertex = std::min_element(hull.begin(), hull.end(),
                                                [](const LatticePoint& a, const LatticePoint& b) { return a.n < b.n; });
    hull.erase(lowest_vertex + 1, hull.end());
    return NewtonPolygon(std::move(hull));
}

bool single_segment(const NewtonPolygon& polygon) { return polygon.segment_count() == 1; }

AxisEndpoints endpoints(const NewtonPolygon& polygon) {
    const auto& v = polygon.vertices();
    if (v.empty() || v.front().m != 0 || v.back().n != 0)
        fail(ErrorCode::InvalidArgument,
             "restriction to an axis component is identically zero: the polygon does not reach both axes");
    if (v.size() == 1)
        fail(ErrorCode::InvalidArgument, "degenerate polygon: F does not vanish at the origin");
    return {static_cast<unsigned>(v.back().m), static_cast<unsigned>(v.front().n)};
}

BivariatePoly principal_part(const BivariatePoly& f, const AxisEndpoints& kl) {
    BivariatePoly::Terms terms;
    const unsigned long target = static_cast<unsigned long>(kl.k) * kl.l;
    for (const auto& [e, c] : f.terms())
        if (static_cast<unsigned long>(kl.l) * e.m + static_cast<unsigned long>(kl.k) * e.n == target) terms.emplace(e, c);
    return BivariatePoly(std::move(terms));
}

Exponent lct_polygon_estimate(const BivariatePoly& f) {
    if (f.is_zero()) return Exponent::zero();
    if (!f.constant_term().is_zero()) return Exponent::infinity();

    const NewtonPolygon polygon = compute_polygon(f);
    std::vector<std::pair<long, long>> normals;
    for (const auto& [p, q] : polygon.segments()) {
        long a = p.n - q.n, b = q.m - p.m;
        const long g = std::gcd(a, b);
        normals.emplace_back(a / g, b / g);
    }
    // The two unbounded facets; their normals matter when F is divisible by x or y.
    if (polygon.vertices().front().m > 0) normals.emplace_back(1, 0);
    if (polygon.vertices().back().n > 0) normals.emplace_back(0, 1);

    mpq_class best = 1;
    for (const auto& [a, b] : normals) {
        long height = std::numeric_limits<long>::max();
        for (const auto& [e, c] : f.terms()) height = std::min(height, a * static_cast<long>(e.m) + b * static_cast<long>(e.n));
        const mpq_class candidate(a + b, height);
        if (candidate < best) best = candidate;
    }
    best.canonicalize();
    return Exponent::of(best);
}

}  // namespace cselab

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

#ifndef CSELAB_NEWTON_POLYGON_HPP
#define CSELAB_NEWTON_POLYGON_HPP

#include <utility>
#include <vector>

#include "cselab/exponent.hpp"
#include "cselab/polynomial.hpp"

namespace cselab {

struct LatticePoint {
    long m = 0;
    long n = 0;
    friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

/// Compact boundary of the Newton polyhedron conv(supp F) + R^2_{>=0}.
///
/// Vertices run by increasing m (and strictly decreasing n); consecutive
/// vertices are the compact segments, with strictly increasing slopes.
class NewtonPolygon {
   public:
    explicit NewtonPolygon(std::vector<LatticePoint> vertices) : vertices_(std::move(vertices)) {}

    const std::vector<LatticePoint>& vertices() const noexcept { return vertices_; }
    std::vector<std::pair<LatticePoint, LatticePoint>> segments() const;
    std::size_t segment_count() const noexcept { return vertices_.empty() ? 0 : vertices_.size() - 1; }

    friend bool operator==(const NewtonPolygon&, const NewtonPolygon&) = default;

   private:
    std::vector<LatticePoint> vertices_;
};

/// Axis endpoints (k, 0) and (0, l) of the polygon.
struct AxisEndpoints {
    unsigned k = 0;
    unsigned l = 0;
    friend bool operator==(const AxisEndpoints&, const AxisEndpoints&) = default;
};

NewtonPolygon compute_polygon(const BivariatePoly& f);

/// True iff the polygon has exactly one compact segment. A germ that is
/// irreducible in C{x,y} has a single segment; two or more segments therefore
/// certify reducibility, while one segment certifies nothing.
bool single_segment(const NewtonPolygon& polygon);

/// Throws when the polygon misses an axis (the restriction of F to that axis
/// vanishes identically, exponent 0 there).
AxisEndpoints endpoints(const NewtonPolygon& polygon);

/// Monomials a_{mn} x^m y^n of F with l*m + k*n == k*l.
BivariatePoly principal_part(const BivariatePoly& f, const AxisEndpoints& kl);

/// ESTIMATE of the log canonical threshold at the origin from the Newton
/// polyhedron: min over facet normals (a,b) of (a+b)/min_{supp F}(a m + b n),
/// clamped to 1. Exact for Newton-nondegenerate F; nondegeneracy is not checked.
/// Returns +infinity when F(0,0) != 0.
Exponent lct_polygon_estimate(const BivariatePoly& f);

}  // namespace cselab

#endif

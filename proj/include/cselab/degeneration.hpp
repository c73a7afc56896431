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

#ifndef CSELAB_DEGENERATION_HPP
#define CSELAB_DEGENERATION_HPP

#include <complex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cselab/exponent.hpp"
#include "cselab/mixed_function.hpp"
#include "cselab/roots.hpp"

// The family pi(x, y) = x y over a disc around 0. Smooth fibers X_t (t != 0)
// are parametrized by x via y = t / x; the central fiber X_0 is the union of
// the two coordinate axes, and p_0 is always the origin.

namespace cselab {

/// Density of dV_t against dV_x on the graph y = t/x: (|x|^2 + |y|^2) / |x|^2.
double volume_density(std::complex<double> x, std::complex<double> y);
/// Same density in the y-chart: (|x|^2 + |y|^2) / |y|^2.
double volume_density_y_chart(std::complex<double> x, std::complex<double> y);

enum class ZeroExactness { Exact, NumericClustered };

struct FiberZero {
    ComplexLD location;                          // x-coordinate on X_t
    std::optional<GaussianRational> exact_location;
    unsigned multiplicity = 1;
    ZeroExactness exactness = ZeroExactness::NumericClustered;
    long double cluster_radius = 0;  // 0 for exact zeros
};

struct FiberZeroOptions {
    double delta = 0.1;                      // polydisc radius around the origin
    long double cluster_rel_tol = 1e-6L;     // numeric cross-check clustering
    unsigned long max_denominator = 1000000; // search bound for exact root recognition
};

struct FiberZeroSet {
    bool identically_zero = false;
    std::vector<FiberZero> zeros;
};

/// Every zero of the fiber function with x != 0, multiplicities from an exact
/// squarefree decomposition; locations are recognized as Gaussian rationals
/// where possible and verified by exact division.
FiberZeroSet laurent_zeros(const LaurentNormalForm& f, const FiberZeroOptions& options = {});

/// Zeros of x -> F(x, t/x) lying in the polydisc |x| <= delta, |t/x| <= delta.
FiberZeroSet fiber_zeros(const MixedFunction& f, const GaussianRational& t, const FiberZeroOptions& options = {});

/// Pure floating-point route: companion roots of the fiber numerator merged by
/// cluster_roots. Used to cross-check the exact multiplicities.
std::vector<RootCluster> numeric_fiber_zeros(const MixedFunction& f, const GaussianRational& t, long double rel_tol);

/// c_p(f_t) at p = (x0, t/x0): 1/ord_{x0} of the fiber function (fibers are smooth curves).
Exponent fiber_exponent(const MixedFunction& f, const GaussianRational& t, const GaussianRational& x0);
Exponent fiber_exponent(const FiberZero& zero);

enum class AxisComponent { XAxis, YAxis, MinOverComponents };

/// Exponent at the origin of F restricted to a component of X_0. The radial
/// term vanishes on X_0, so only the holomorphic part matters.
Exponent central_exponent(const MixedFunction& f, AxisComponent component);

// ---------------------------------------------------------------------------
// Resolution data

struct ResolutionDivisor {
    unsigned discrepancy = 0;   // k_i in K_{Y/X} = sum k_i E_i
    unsigned multiplicity = 1;  // a_i in V(f o g) = sum a_i E_i
    bool passes_through_point = true;
    friend bool operator==(const ResolutionDivisor&, const ResolutionDivisor&) = default;
};

struct ResolutionData {
    std::string name;
    std::string curve;  // optional defining polynomial, for cross-checks
    std::vector<ResolutionDivisor> divisors;
    bool log_resolution = true;  // false: the divisors are not SNC, result is only an upper bound
    friend bool operator==(const ResolutionData&, const ResolutionData&) = default;
};

struct ResolutionBound {
    Exponent value = Exponent::infinity();
    bool exact = true;  // equality holds only for a genuine log resolution
};

/// min over divisors through the point of (k_i + 1) / a_i.
ResolutionBound lct_from_resolution(const ResolutionData& data);

/// smooth, node, cusp, tacnode, ord-m axis (m <= 5) and x^a+y^b for 2 <= a,b <= 5.
const std::vector<ResolutionData>& builtin_resolution_catalog();
const ResolutionData& catalog_entry(std::string_view name);

/// JSON list of {name, divisors: [{k, a, through}], curve?, log_resolution?}.
std::vector<ResolutionData> parse_resolution_catalog(std::string_view json_text);
std::string resolution_catalog_to_json(const std::vector<ResolutionData>& catalog);

// ---------------------------------------------------------------------------
// Semicontinuity

struct FiberSample {
    GaussianRational t;
    FiberZeroSet zeros;  // within the polydisc
    Exponent min_fiber_exponent = Exponent::infinity();
    bool holds = true;
};

struct SemicontinuityWitness {
    GaussianRational t;
    FiberZero zero;
    Exponent central;
    Exponent fiber;
};

enum class SemicontinuityVerdict { Holds, Violated };

struct SemicontinuityReport {
    Exponent central_x = Exponent::infinity();
    Exponent central_y = Exponent::infinity();
    Exponent central_max = Exponent::infinity();  // binding side of the inequality
    std::vector<FiberSample> samples;             // sorted by decreasing |t|
    SemicontinuityVerdict verdict = SemicontinuityVerdict::Holds;
    std::optional<SemicontinuityWitness> witness;
    /// Largest sampled |t| such that the inequality held at every sample with |t'| <= |t|.
    std::optional<GaussianRational> largest_t_held;
    double delta = 0.1;
    bool holomorphic = true;
};

/// Checks max_i c_0(f_0^(i)) <= c_{p_t}(f_t) at every fiber zero near the
/// origin, for every sampled t. Holomorphic F must satisfy it; non-holomorphic
/// families may not.
SemicontinuityReport semicontinuity_check(const MixedFunction& f, const std::vector<GaussianRational>& t_samples,
                                          const FiberZeroOptions& options = {});

}  // namespace cselab

#endif

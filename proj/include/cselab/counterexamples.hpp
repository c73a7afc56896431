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

#ifndef CSELAB_COUNTEREXAMPLES_HPP
#define CSELAB_COUNTEREXAMPLES_HPP

#include <functional>
#include <optional>
#include <vector>

#include "cselab/exponent.hpp"
#include "cselab/mixed_function.hpp"

namespace cselab {

/// Exponents of the monomial basis of V_n = {q(z^2) + c z^(2n+1) : deg q <= 2n+1}:
/// 0, 2, ..., 4n+2 followed by 2n+1.
std::vector<unsigned> vn_basis(unsigned n);

/// Exact kernel of P -> (P(1), P'(1), ..., P^(2n+1)(1)) on V_n, i.e. a basis of
/// W_n = {P in V_n : (z-1)^(2n+2) | P}. Each element is scaled so that its
/// z^(4n+2) coefficient is 1, or, when that coefficient vanishes, so that the
/// constant term is 1.
std::vector<UnivariatePoly> solve_wn(unsigned n);

/// P(z) + z^(4n+2) P(1/z).
UnivariatePoly symmetrize(const UnivariatePoly& p, unsigned n);

struct Membership {
    bool member = false;
    std::optional<UnivariatePoly> witness;
    bool symmetrized = false;  // witness came from a symmetrized kernel element
    unsigned kernel_dimension = 0;
};

/// Whether W_n has an element with nonzero constant and z^(4n+2) coefficients.
Membership membership_N(unsigned n);

struct CounterexampleRecord {
    unsigned n = 0;
    UnivariatePoly P;
    UnivariatePoly q;
    GaussianRational c;
    BivariatePoly Q;
    MixedFunction F;
    bool in_N = false;
    unsigned kernel_dimension = 0;
    bool symmetrized = false;
    Exponent central_exponent = Exponent::infinity();
    Exponent fiber_exponent_at_diagonal = Exponent::infinity();
    unsigned order_at_one = 0;  // ord_{z=1} P
};

/// Q_n(x, y) = q_n(x/y) y^(2n+1) and F_n = Q_n + c_n |xy|^((2n+1)/2) from P_n = q_n(z^2) + c_n z^(2n+1).
CounterexampleRecord build_family(unsigned n, const UnivariatePoly& p);

/// membership_N(n) followed by build_family on its witness.
CounterexampleRecord counterexample(unsigned n);

struct ViolationSample {
    GaussianRational s;
    bool identity_holds = false;      // x^(2n+1) F_n(x, s^2/x) == s^(4n+2) P_n(x/s)
    Exponent fiber_exponent = Exponent::infinity();  // at (s, s) on X_{s^2}
    bool fiber_bound_holds = false;   // fiber exponent <= 1/(2n+2)
    bool central_holds = false;       // central exponent == 1/(2n+1)
    bool violated = false;            // central > fiber
};

struct ViolationReport {
    unsigned n = 0;
    Exponent central = Exponent::infinity();
    std::vector<ViolationSample> samples;
    bool violated = false;  // every sample passes all four checks
};

/// The exact checks on X_t, t = s^2 for positive rationals s. A failed fiber
/// identity is a construction bug and raises ErrorCode::Internal.
ViolationReport verify_violation(const CounterexampleRecord& record, const std::vector<GaussianRational>& s_samples);

struct HolderReport {
    double exponent = 0;  // clamped to [0, 1]
    double raw_slope = 0;
    double residual = 0;
    std::vector<std::pair<double, double>> moduli;  // (h, sampled modulus of continuity)
};

/// Sampled Hoelder exponent of g on [0, scale]: slope of log omega(h) against log h
/// with omega(h) = max |g(a + h) - g(a)| over base points a in [0, scale].
HolderReport holder_exponent_estimate(const std::function<double(double)>& g, double scale, unsigned levels = 12);

/// The n-th radial derivative of the building block r^((2n+1)/2), probed near 0.
HolderReport holder_probe(unsigned n, double sample_scale = 1e-2);

}  // namespace cselab

#endif

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

#ifndef CSELAB_QUADRATURE_HPP
#define CSELAB_QUADRATURE_HPP

#include <complex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cselab/mixed_function.hpp"
#include "cselab/roots.hpp"

namespace cselab {

enum class Precision { Double, Extended };

struct QuadratureConfig {
    unsigned radial_cells_per_decade = 8;
    unsigned angular_cells = 16;
    unsigned max_refinement_depth = 30;
    double target_rel_tolerance = 1e-7;
    std::size_t max_cells = 400000;
    Precision precision = Precision::Double;

    /// Defaults, with the precision taken from CSE_LAB_PRECISION (double | extended) when set.
    static QuadratureConfig from_environment();
    /// Throws InvalidArgument unless all counts are >= 4 and the tolerance lies in (0, 0.1).
    void validate() const;
};

Precision parse_precision(std::string_view text);
std::string to_string(Precision precision);

/// A(r_in, r_out) around `center`; r_in = 0 means the punctured disc.
struct Annulus {
    ComplexLD center;
    double r_in = 0;
    double r_out = 1;
};

/// x -> numerator(x) / x^pole_order with floating coefficients, together with its
/// zeros (x != 0) and their multiplicities.
class FiberFunction {
   public:
    struct Zero {
        ComplexLD location;
        unsigned multiplicity = 1;
    };

    /// f_t(x) = F(x, t/x). Exact Laurent form and exact multiplicities whenever
    /// possible (F holomorphic, or t a positive rational square); otherwise the
    /// radial constant is taken in floating point and zeros are clustered.
    FiberFunction(const MixedFunction& f, const GaussianRational& t);
    explicit FiberFunction(const LaurentNormalForm& form);
    static FiberFunction polynomial(const UnivariatePoly& p);

    /// z -> scale_value * f(scale_argument * z)
    FiberFunction rescaled(ComplexLD scale_argument, ComplexLD scale_value) const;

    const std::vector<ComplexLD>& numerator() const noexcept { return numerator_; }
    unsigned pole_order() const noexcept { return pole_order_; }
    const std::vector<Zero>& zeros() const noexcept { return zeros_; }
    ComplexLD t() const noexcept { return t_; }

    template <typename Real>
    std::complex<Real> evaluate(const std::complex<Real>& x) const {
        std::complex<Real> acc(0);
        for (auto it = numerator_.rbegin(); it != numerator_.rend(); ++it)
            acc = acc * x + std::complex<Real>(static_cast<Real>(it->real()), static_cast<Real>(it->imag()));
        for (unsigned i = 0; i < pole_order_; ++i) acc /= x;
        return acc;
    }

    /// Leading behaviour a * (x - point)^order near `point` (order may be negative at x = 0).
    std::pair<ComplexLD, int> local_leading_term(ComplexLD point) const;

   private:
    FiberFunction() = default;
    std::vector<ComplexLD> numerator_;
    unsigned pole_order_ = 0;
    std::vector<Zero> zeros_;
    ComplexLD t_ = 0;
};

enum class Weight {
    XChart,  // dV_x
    YChart,  // dV_y = |t|^2 / |x|^4 dV_x on the fiber
    Fiber,   // dV_t = (1 + |t|^2 / |x|^4) dV_x
};

struct IntegralReport {
    double value = 0;
    double error = 0;
    std::size_t cells = 0;
    bool converged = false;
    bool divergent = false;
    std::size_t unresolved_singular_cells = 0;  // singular cells frozen at the depth cap
    unsigned max_depth = 0;
    Annulus domain;
};

/// Adaptive log-polar quadrature of |f|^{-2c} against the chosen weight.
IntegralReport annulus_integral(const FiberFunction& f, double c, const Annulus& domain, Weight weight,
                                const QuadratureConfig& config);

/// K_t(R) = I_t(R) + J_t(R), all three computed on one grid (t != 0), or the
/// central integral over the two axis components (t = 0).
struct FiberIntegral {
    GaussianRational t;
    IntegralReport K;
    IntegralReport I;
    IntegralReport J;
};

FiberIntegral fiber_integral_K(const MixedFunction& f, const GaussianRational& t, double c, double R,
                               const QuadratureConfig& config);

/// Rejects c outside (0, c_0(f_0)) with a message naming the hypothesis.
void require_stability_hypothesis(const MixedFunction& f, double c);

struct Decomposition {
    unsigned k = 0;
    unsigned l = 0;
    double s = 0;  // positive real root of t = s^(k+l)
    IntegralReport I1;  // middle annulus A(1/R1, R1)
    IntegralReport I2;  // outer annulus A(R1, R/s^l)
    IntegralReport I3;  // inner annulus A(s^k/R, 1/R1)
    IntegralReport I;   // direct I_t(R) in the x variable
    double sum() const { return I1.value + I2.value + I3.value; }
    double combined_error() const { return I1.error + I2.error + I3.error + I.error; }
};

Decomposition decompose_I(const MixedFunction& f, const GaussianRational& t, double c, double R, double R1,
                          const QuadratureConfig& config);

struct SweepRow {
    GaussianRational t;
    double K = 0;
    double error = 0;
    double I = 0;
    double J = 0;
    double ratio = 0;
    bool divergent = false;
    bool converged = true;
};

enum class SweepVerdict { Converged, Inconclusive };

struct SweepReport {
    std::vector<SweepRow> rows;  // strictly decreasing t
    IntegralReport K0;
    double K0_error = 0;
    double c = 0;
    double R = 0;
    double band = 0.05;
    bool monotone_trend = false;
    SweepVerdict verdict = SweepVerdict::Inconclusive;
    bool single_segment = false;
    std::string hypothesis_note;
};

/// Default t-sequence t_j = 10^-2 * 4^-j.
std::vector<GaussianRational> default_t_sequence(unsigned count);

SweepReport convergence_sweep(const MixedFunction& f, double c, double R, const std::vector<GaussianRational>& t_sequence,
                              const QuadratureConfig& config, double band = 0.05);

struct BoundSample {
    GaussianRational t;
    double K = 0;
    double error = 0;
};

struct BoundReport {
    double M = 0;  // max over samples of K_t + error
    std::vector<BoundSample> samples;  // decreasing |t|
    bool growth_trend = false;
    double c = 0;
    double R = 0;
};

BoundReport uniform_bound_check(const MixedFunction& f, double c, double R, const std::vector<GaussianRational>& t_samples,
                                const QuadratureConfig& config);

/// sum (l_i / l) M_i with l = sum l_i.
double young_combine(const std::vector<std::pair<unsigned, double>>& bounds);

struct ProbeReport {
    double multiplicity = 0;  // (2 - slope) / (2c)
    double slope = 0;
    double residual = 0;  // RMS deviation of the log-log fit
    std::vector<std::pair<double, double>> masses;  // (r, mass of A(r, 2r))
};

/// Slope of log mass(A(r, 2r)) against log r around `zero`, for r_j = r_max / 2^j.
/// r_max <= 0 picks a quarter of the distance to the nearest other singular point.
ProbeReport exponent_probe_1d(const FiberFunction& f, ComplexLD zero, double c, const QuadratureConfig& config,
                              double r_max = 0, unsigned annuli = 8);

}  // namespace cselab

#endif

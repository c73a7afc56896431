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

#include "cselab/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <future>
#include <numbers>
#include <queue>

#include "cselab/degeneration.hpp"
#include "cselab/errors.hpp"
#include "cselab/newton_polygon.hpp"

namespace cselab {

namespace {

constexpr long double kTwoPi = 2 * std::numbers::pi_v<long double>;

// 5-point Gauss-Legendre rule on [-1, 1].
constexpr std::array<long double, 5> kNodes = {-0.9061798459386639927976269L, -0.5384693101056830910363144L, 0.0L,
                                               0.5384693101056830910363144L, 0.9061798459386639927976269L};
constexpr std::array<long double, 5> kWeights = {0.2369268850561890875142640L, 0.4786286704993664680412915L,
                                                 0.5688888888888888888888889L, 0.4786286704993664680412915L,
                                                 0.2369268850561890875142640L};

template <std::size_t N>
struct EngineResult {
    std::array<double, N> value{};
    std::array<double, N> error{};
    std::size_t cells = 0;
    bool converged = false;
    std::size_t unresolved = 0;
    unsigned max_depth = 0;
};

// A cell in (rho, theta) = (log r, arg) coordinates around the annulus center.
template <typename Real, std::size_t N>
struct Cell {
    Real rho0, rho1, th0, th1;
    unsigned depth = 0;
    bool singular = false;
    std::array<Real, N> coarse{};                 // one rule over the whole cell
    std::array<std::array<Real, N>, 4> quarter{};  // the rule on each quarter
    std::array<Real, N> value{};                  // sum of the quarters
    std::array<Real, N> error{};
};

struct SingularPoint {
    long double rho;
    long double theta;
};

template <typename Real, std::size_t N, typename Fn>
class Engine {
   public:
    Engine(const Annulus& domain, Fn fn, const std::vector<ComplexLD>& singular, const QuadratureConfig& config)
        : center_(static_cast<Real>(domain.center.real()), static_cast<Real>(domain.center.imag())),
          fn_(std::move(fn)),
          config_(config) {
        for (const auto& p : singular) {
            const ComplexLD d = p - domain.center;
            if (std::abs(d) == 0) continue;
            long double th = std::arg(d);
            if (th < 0) th += kTwoPi;
            singular_.push_back({std::log(std::abs(d)), th});
        }
        rho_lo_ = std::log(static_cast<Real>(domain.r_in));
        rho_hi_ = std::log(static_cast<Real>(domain.r_out));
    }

    EngineResult<N> run() {
        const Real decades = (rho_hi_ - rho_lo_) / std::log(Real(10));
        const unsigned n_rho = std::max<unsigned>(
            1, static_cast<unsigned>(std::ceil(static_cast<double>(decades) * config_.radial_cells_per_decade)));
        const unsigned n_th = config_.angular_cells;

        auto cmp = [](const Cell<Real, N>& a, const Cell<Real, N>& b) {
            if (a.error[0] != b.error[0]) return a.error[0] < b.error[0];
            if (a.rho0 != b.rho0) return a.rho0 > b.rho0;
            return a.th0 > b.th0;
        };
        std::priority_queue<Cell<Real, N>, std::vector<Cell<Real, N>>, decltype(cmp)> heap(cmp);
        std::vector<Cell<Real, N>> frozen;

        Real total = 0, total_err = 0;
        for (unsigned i = 0; i < n_rho; ++i)
            for (unsigned j = 0; j < n_th; ++j) {
                Cell<Real, N> c;
                c.rho0 = rho_lo_ + (rho_hi_ - rho_lo_) * Real(i) / Real(n_rho);
                c.rho1 = i + 1 == n_rho ? rho_hi_ : rho_lo_ + (rho_hi_ - rho_lo_) * Real(i + 1) / Real(n_rho);
                c.th0 = Real(kTwoPi) * Real(j) / Real(n_th);
                c.th1 = Real(kTwoPi) * Real(j + 1) / Real(n_th);
                c.coarse = rule(c.rho0, c.rho1, c.th0, c.th1, c.singular);
                finish(c);
                total += c.value[0];
                total_err += c.error[0];
                heap.push(std::move(c));
            }
        std::size_t cells = n_rho * n_th;

        EngineResult<N> out;
        while (!heap.empty()) {
            if (total_err <= Real(config_.target_rel_tolerance) * std::abs(total)) break;
            if (cells + 3 > config_.max_cells) break;
            Cell<Real, N> c = heap.top();
            heap.pop();
            if (c.depth >= config_.max_refinement_depth) {
                if (c.singular) ++out.unresolved;
                frozen.push_back(std::move(c));
                continue;
            }
            total -= c.value[0];
            total_err -= c.error[0];
            const Real rm = (c.rho0 + c.rho1) / 2, tm = (c.th0 + c.th1) / 2;
            const std::array<std::array<Real, 4>, 4> boxes = {{{c.rho0, rm, c.th0, tm},
                                                                {rm, c.rho1, c.th0, tm},
                                                                {c.rho0, rm, tm, c.th1},
                                                                {rm, c.rho1, tm, c.th1}}};
            for (std::size_t q = 0; q < 4; ++q) {
                Cell<Real, N> child;
                child.rho0 = boxes[q][0];
                child.rho1 = boxes[q][1];
                child.th0 = boxes[q][2];
                child.th1 = boxes[q][3];
                child.depth = c.depth + 1;
                child.coarse = c.quarter[q];
                child.singular = contains_singular(child.rho0, child.rho1, child.th0, child.th1);
                finish(child);
                out.max_depth = std::max(out.max_depth, child.depth);
                total += child.value[0];
                total_err += child.error[0];
                heap.push(std::move(child));
            }
            cells += 3;
        }
        while (!heap.empty()) {
            frozen.push_back(heap.top());
            heap.pop();
        }

        // Sum in a canonical cell order so the result does not depend on the refinement history.
        std::sort(frozen.begin(), frozen.end(), [](const Cell<Real, N>& a, const Cell<Real, N>& b) {
            if (a.rho0 != b.rho0) return a.rho0 < b.rho0;
            if (a.th0 != b.th0) return a.th0 < b.th0;
            return a.depth < b.depth;
        });
        std::array<Real, N> value{}, error{};
        for (const auto& c : frozen)
            for (std::size_t k = 0; k < N; ++k) {
                value[k] += c.value[k];
                error[k] += c.error[k];
            }
        for (std::size_t k = 0; k < N; ++k) {
            out.value[k] = static_cast<double>(value[k]);
            out.error[k] = static_cast<double>(error[k]);
        }
        out.cells = cells;
        out.converged = error[0] <= Real(config_.target_rel_tolerance) * std::abs(value[0]);
        return out;
    }

   private:
    bool contains_singular(Real rho0, Real rho1, Real th0, Real th1) const {
        const long double eps = 1e-12L;
        for (const auto& p : singular_) {
            if (p.rho < rho0 - eps || p.rho > rho1 + eps) continue;
            for (long double shift : {0.0L, kTwoPi, -kTwoPi}) {
                const long double th = p.theta + shift;
                if (th >= th0 - eps && th <= th1 + eps) return true;
            }
        }
        return false;
    }

    std::array<Real, N> rule(Real rho0, Real rho1, Real th0, Real th1, bool& nonfinite) const {
        std::array<Real, N> acc{};
        const Real hr = (rho1 - rho0) / 2, cr = (rho0 + rho1) / 2;
        const Real ht = (th1 - th0) / 2, ct = (th0 + th1) / 2;
        for (std::size_t i = 0; i < kNodes.size(); ++i) {
            const Real rho = cr + hr * static_cast<Real>(kNodes[i]);
            const Real r = std::exp(rho);
            const Real wr = static_cast<Real>(kWeights[i]) * r * r;
            for (std::size_t j = 0; j < kNodes.size(); ++j) {
                const Real th = ct + ht * static_cast<Real>(kNodes[j]);
                const std::complex<Real> x = center_ + std::polar(r, th);
                const std::array<Real, N> v = fn_(x);
                const Real w = wr * static_cast<Real>(kWeights[j]);
                for (std::size_t k = 0; k < N; ++k) {
                    if (!std::isfinite(v[k])) {
                        nonfinite = true;
                        continue;
                    }
                    acc[k] += w * v[k];
                }
            }
        }
        for (auto& a : acc) a *= hr * ht;
        return acc;
    }

    void finish(Cell<Real, N>& c) const {
        bool nonfinite = false;
        const Real rm = (c.rho0 + c.rho1) / 2, tm = (c.th0 + c.th1) / 2;
        c.quarter[0] = rule(c.rho0, rm, c.th0, tm, nonfinite);
        c.quarter[1] = rule(rm, c.rho1, c.th0, tm, nonfinite);
        c.quarter[2] = rule(c.rho0, rm, tm, c.th1, nonfinite);
        c.quarter[3] = rule(rm, c.rho1, tm, c.th1, nonfinite);
        if (c.depth == 0) c.singular = c.singular || contains_singular(c.rho0, c.rho1, c.th0, c.th1);
        c.singular = c.singular || nonfinite;
        for (std::size_t k = 0; k < N; ++k) {
            c.value[k] = c.quarter[0][k] + c.quarter[1][k] + c.quarter[2][k] + c.quarter[3][k];
            c.error[k] = std::abs(c.value[k] - c.coarse[k]);
            // Two levels of a smooth rule can agree by accident next to an
            // integrable singularity; such cells keep their whole mass as error.
            if (c.singular) c.error[k] = std::max(c.error[k], std::abs(c.value[k]));
        }
    }

    std::complex<Real> center_;
    Fn fn_;
    const QuadratureConfig& config_;
    std::vector<SingularPoint> singular_;
    Real rho_lo_ = 0, rho_hi_ = 0;
};

template <typename Real, std::size_t N, typename Fn>
EngineResult<N> integrate(const Annulus& domain, Fn fn, const std::vector<ComplexLD>& singular,
                          const QuadratureConfig& config) {
    Engine<Real, N, Fn> engine(domain, std::move(fn), singular, config);
    return engine.run();
}

std::vector<ComplexLD> singular_points(const FiberFunction& f) {
    std::vector<ComplexLD> out;
    for (const auto& z : f.zeros()) out.push_back(z.location);
    if (f.pole_order() > 0) out.push_back(0);
    return out;
}

// Integrand |f|^{-2c} against one weight; returned as a single component.
template <typename Real>
struct WeightedIntegrand {
    const FiberFunction* f;
    Real c;
    Weight weight;
    Real t_norm;
    std::array<Real, 1> operator()(const std::complex<Real>& x) const {
        const Real g = std::pow(std::norm(f->evaluate(x)), -c);
        Real w = 1;
        if (weight != Weight::XChart) {
            const Real nx = std::norm(x);
            const Real jy = t_norm / (nx * nx);
            w = weight == Weight::YChart ? jy : 1 + jy;
        }
        return {g * w};
    }
};

// K, I, J on the fiber over A(|t|/R, R): dV_t density, dV_x, dV_y.
template <typename Real>
struct FiberIntegrand {
    const FiberFunction* f;
    Real c;
    std::complex<Real> t;
    std::array<Real, 3> operator()(const std::complex<Real>& x) const {
        const std::complex<Real> y = t / x;
        const Real g = std::pow(std::norm(f->evaluate(x)), -c);
        const Real nx = std::norm(x), ny = std::norm(y);
        return {g * (nx + ny) / nx, g, g * ny / nx};
    }
};

bool divergent_in(const FiberFunction& f, double c, const Annulus& domain, Weight weight) {
    const long double lo = domain.r_in * (1 - 1e-12L), hi = domain.r_out * (1 + 1e-12L);
    auto inside = [&](ComplexLD p) {
        const long double d = std::abs(p - domain.center);
        return d >= lo && d <= hi;
    };
    for (const auto& z : f.zeros()) {
        if (z.location == ComplexLD(0)) continue;
        if (inside(z.location) && 2 * c * z.multiplicity >= 2) return true;
    }
    // The origin: a possible pole or zero of f, and the |x|^-4 factor of the y-chart weight.
    if (inside(0) && std::abs(domain.center) > 0) {
        const int order = f.local_leading_term(0).second;
        const double weight_order = weight == Weight::XChart ? 0 : 4;
        if (2 * c * order + weight_order >= 2) return true;
    }
    return false;
}

template <typename Real>
IntegralReport annulus_integral_impl(const FiberFunction& f, double c, const Annulus& domain, Weight weight,
                                     const QuadratureConfig& config) {
    IntegralReport report;
    report.domain = domain;
    if (divergent_in(f, c, domain, weight)) {
        report.divergent = true;
        report.value = INFINITY;
        report.error = INFINITY;
        return report;
    }

    Annulus grid = domain;
    double tail = 0, tail_error = 0;
    if (domain.r_in == 0) {
        if (weight != Weight::XChart)
            fail(ErrorCode::InvalidArgument, "a punctured-disc integral needs the x-chart weight");
        const auto [a, order] = f.local_leading_term(domain.center);
        if (2 * c * order >= 2) {
            report.divergent = true;
            report.value = INFINITY;
            report.error = INFINITY;
            return report;
        }
        long double reach = domain.r_out;
        for (const auto& p : singular_points(f)) {
            const long double d = std::abs(p - domain.center);
            if (d > 0) reach = std::min(reach, d);
        }
        const long double r0 = reach * 1e-8L;
        const long double e = 2 - 2 * c * order;
        tail = static_cast<double>(kTwoPi * std::pow(std::norm(a), -static_cast<long double>(c)) * std::pow(r0, e) / e);
        tail_error = tail * 1e-6;
        grid.r_in = static_cast<double>(r0);
    }
    if (!(grid.r_in > 0) || !(grid.r_out > grid.r_in))
        fail(ErrorCode::InvalidArgument, "annulus radii must satisfy 0 <= r_in < r_out");

    WeightedIntegrand<Real> fn{&f, static_cast<Real>(c), weight, static_cast<Real>(std::norm(f.t()))};
    const auto r = integrate<Real, 1>(grid, fn, singular_points(f), config);
    report.value = r.value[0] + tail;
    report.error = r.error[0] + tail_error;
    report.cells = r.cells;
    report.converged = r.converged;
    report.unresolved_singular_cells = r.unresolved;
    report.max_depth = r.max_depth;
    return report;
}

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

}  // namespace

// ---------------------------------------------------------------------------

Precision parse_precision(std::string_view text) {
    if (text == "double") return Precision::Double;
    if (text == "extended") return Precision::Extended;
    fail(ErrorCode::InvalidArgument, "precision must be 'double' or 'extended', got '" + std::string(text) + "'");
}

std::string to_string(Precision precision) { return precision == Precision::Double ? "double" : "extended"; }

QuadratureConfig QuadratureConfig::from_environment() {
    QuadratureConfig config;
    if (const char* env = std::getenv("CSE_LAB_PRECISION"); env && *env) config.precision = parse_precision(env);
    return config;
}

void QuadratureConfig::validate() const {
    if (radial_cells_per_decade < 4 || angular_cells < 4 || max_refinement_depth < 4)
        fail(ErrorCode::InvalidArgument, "quadrature cell counts and refinement depth must be at least 4");
    if (!(target_rel_tolerance > 0 && target_rel_tolerance < 0.1))
        fail(ErrorCode::InvalidArgument, "quadrature tolerance must lie in (0, 0.1)");
    if (max_cells < 64) fail(ErrorCode::InvalidArgument, "quadrature cell budget is too small");
}

// ---------------------------------------------------------------------------

FiberFunction::FiberFunction(const LaurentNormalForm& form) {
    if (form.is_zero()) fail(ErrorCode::InvalidArgument, "the fiber function vanishes identically");
    numerator_ = form.numerator.to_complex_ld();
    pole_order_ = form.pole_order;
    const FiberZeroSet set = laurent_zeros(form);
    for (const auto& z : set.zeros) zeros_.push_back({z.location, z.multiplicity});
    unsigned at_origin = 0;
    while (at_origin < form.numerator.coefficients().size() && form.numerator.coeff(at_origin).is_zero()) ++at_origin;
    if (at_origin > 0) zeros_.push_back({0, at_origin});
}

FiberFunction FiberFunction::polynomial(const UnivariatePoly& p) { return FiberFunction(LaurentNormalForm{p, 0}); }

FiberFunction::FiberFunction(const MixedFunction& f, const GaussianRational& t) {
    if (t.is_zero()) fail(ErrorCode::InvalidArgument, "t = 0 is the central fiber; it is not a graph over x");
    t_ = t.to_complex_ld();
    const bool exact = f.is_holomorphic() || (t.is_real() && sgn(t.re()) > 0 && exact_sqrt(t.re()));
    if (exact) {
        *this = FiberFunction(substitute_fiber(f, t));
        t_ = t.to_complex_ld();
        return;
    }

    unsigned d = 0;
    for (const auto& [e, a] : f.holo().terms())
        if (e.n > e.m) d = std::max(d, e.n - e.m);
    std::vector<ComplexLD> num(1);
    auto add = [&num](unsigned power, ComplexLD v) {
        if (num.size() <= power) num.resize(power + 1);
        num[power] += v;
    };
    for (const auto& [e, a] : f.holo().terms()) add(e.m + d - e.n, a.to_complex_ld() * std::pow(t_, static_cast<int>(e.n)));
    const long double radial = std::pow(std::abs(t_), static_cast<long double>(f.radial_half_exp()) / 2);
    add(d, f.radial_coeff().to_complex_ld() * radial);
    while (!num.empty() && num.back() == ComplexLD(0)) num.pop_back();
    if (num.empty()) fail(ErrorCode::InvalidArgument, "the fiber function vanishes identically");
    while (d > 0 && num.front() == ComplexLD(0)) {
        num.erase(num.begin());
        --d;
    }
    numerator_ = num;
    pole_order_ = d;

    std::size_t low = 0;
    while (num[low] == ComplexLD(0)) ++low;
    if (low > 0) zeros_.push_back({0, static_cast<unsigned>(low)});
    std::vector<ComplexLD> stripped(num.begin() + static_cast<long>(low), num.end());
    if (stripped.size() > 1)
        for (const auto& cl : cluster_roots(companion_roots(stripped), 1e-6L)) zeros_.push_back({cl.center, cl.size});
}

FiberFunction FiberFunction::rescaled(ComplexLD scale_argument, ComplexLD scale_value) const {
    if (scale_argument == ComplexLD(0) || scale_value == ComplexLD(0))
        fail(ErrorCode::InvalidArgument, "rescaling factors must be nonzero");
    FiberFunction out;
    out.pole_order_ = pole_order_;
    out.t_ = t_ / (scale_argument * scale_argument);
    ComplexLD power = scale_value / std::pow(scale_argument, static_cast<int>(pole_order_));
    for (const auto& a : numerator_) {
        out.numerator_.push_back(a * power);
        power *= scale_argument;
    }
    for (const auto& z : zeros_) out.zeros_.push_back({z.location / scale_argument, z.multiplicity});
    return out;
}

std::pair<ComplexLD, int> FiberFunction::local_leading_term(ComplexLD point) const {
    // Taylor coefficients of the numerator at `point` by repeated synthetic division.
    std::vector<ComplexLD> rem = numerator_;
    std::vector<ComplexLD> taylor;
    while (!rem.empty()) {
        std::vector<ComplexLD> q(rem.size() > 1 ? rem.size() - 1 : 0);
        ComplexLD acc = 0;
        for (std::size_t i = rem.size(); i-- > 0;) {
            acc = acc * point + rem[i];
            if (i > 0) q[i - 1] = acc;
        }
        taylor.push_back(acc);
        rem = std::move(q);
    }
    unsigned order = 0;
    for (const auto& z : zeros_)
        if (std::abs(z.location - point) <= 1e-9L * std::max(1.0L, std::abs(point))) order = z.multiplicity;
    if (point == ComplexLD(0)) {
        unsigned m = 0;
        while (m < taylor.size() && taylor[m] == ComplexLD(0)) ++m;
        return {taylor[m], static_cast<int>(m) - static_cast<int>(pole_order_)};
    }
    const ComplexLD a = taylor[std::min<std::size_t>(order, taylor.size() - 1)] /
                        std::pow(point, static_cast<int>(pole_order_));
    return {a, static_cast<int>(order)};
}

// ---------------------------------------------------------------------------

IntegralReport annulus_integral(const FiberFunction& f, double c, const Annulus& domain, Weight weight,
                                const QuadratureConfig& config) {
    config.validate();
    if (!(c >= 0)) fail(ErrorCode::InvalidArgument, "the exponent parameter c must be nonnegative");
    if (!(domain.r_in >= 0) || !(domain.r_out > domain.r_in))
        fail(ErrorCode::InvalidArgument, "annulus radii must satisfy 0 <= r_in < r_out");
    if (config.precision == Precision::Extended)
        return annulus_integral_impl<long double>(f, c, domain, weight, config);
    return annulus_integral_impl<double>(f, c, domain, weight, config);
}

void require_stability_hypothesis(const MixedFunction& f, double c) {
    const Exponent c0 = central_exponent(f, AxisComponent::MinOverComponents);
    if (c0.is_zero())
        fail(ErrorCode::Hypothesis, "the stability statement needs F nonzero on both axis components; c_0(f_0) = 0");
    if (!(c > 0) || (!c0.is_infinite() && !(c < c0.to_double())))
        fail(ErrorCode::Hypothesis, "the stability statement requires 0 < c < c_0(f_0) = " + c0.to_string() +
                                        ", got c = " + format_double(c));
}

namespace {

template <typename Real>
FiberIntegral fiber_integral_impl(const MixedFunction& f, const GaussianRational& t, double c, double R,
                                  const QuadratureConfig& config) {
    FiberIntegral out;
    out.t = t;
    const FiberFunction fiber(f, t);
    const double abs_t = static_cast<double>(std::abs(t.to_complex_ld()));
    const Annulus domain{0, abs_t / R, R};
    if (!(domain.r_in < domain.r_out)) fail(ErrorCode::InvalidArgument, "|t| must be smaller than R^2");
    out.K.domain = out.I.domain = out.J.domain = domain;

    bool divergent = false;
    for (const auto& z : fiber.zeros()) {
        const long double d = std::abs(z.location);
        if (d >= domain.r_in && d <= domain.r_out && 2 * c * z.multiplicity >= 2) divergent = true;
    }
    if (divergent) {
        for (IntegralReport* r : {&out.K, &out.I, &out.J}) {
            r->divergent = true;
            r->value = r->error = INFINITY;
        }
        return out;
    }

    const ComplexLD tl = t.to_complex_ld();
    FiberIntegrand<Real> fn{&fiber, static_cast<Real>(c),
                            std::complex<Real>(static_cast<Real>(tl.real()), static_cast<Real>(tl.imag()))};
    const auto r = integrate<Real, 3>(domain, fn, singular_points(fiber), config);
    IntegralReport* parts[3] = {&out.K, &out.I, &out.J};
    for (std::size_t k = 0; k < 3; ++k) {
        parts[k]->value = r.value[k];
        parts[k]->error = r.error[k];
        parts[k]->cells = r.cells;
        parts[k]->converged = r.converged;
        parts[k]->unresolved_singular_cells = r.unresolved;
        parts[k]->max_depth = r.max_depth;
    }
    return out;
}

}  // namespace

FiberIntegral fiber_integral_K(const MixedFunction& f, const GaussianRational& t, double c, double R,
                               const QuadratureConfig& config) {
    config.validate();
    require_stability_hypothesis(f, c);
    if (!(R > 0)) fail(ErrorCode::InvalidArgument, "the polydisc radius R must be positive");

    if (t.is_zero()) {
        FiberIntegral out;
        const Annulus disc{0, 0, R};
        out.I = annulus_integral(FiberFunction::polynomial(f.holo().restrict_to_x_axis()), c, disc, Weight::XChart, config);
        out.J = annulus_integral(FiberFunction::polynomial(f.holo().restrict_to_y_axis()), c, disc, Weight::XChart, config);
        out.K = out.I;
        out.K.value = out.I.value + out.J.value;
        out.K.error = out.I.error + out.J.error;
        out.K.cells = out.I.cells + out.J.cells;
        out.K.converged = out.I.converged && out.J.converged;
        out.K.divergent = out.I.divergent || out.J.divergent;
        out.K.unresolved_singular_cells = out.I.unresolved_singular_cells + out.J.unresolved_singular_cells;
        out.K.max_depth = std::max(out.I.max_depth, out.J.max_depth);
        return out;
    }
    if (config.precision == Precision::Extended) return fiber_integral_impl<long double>(f, t, c, R, config);
    return fiber_integral_impl<double>(f, t, c, R, config);
}

Decomposition decompose_I(const MixedFunction& f, const GaussianRational& t, double c, double R, double R1,
                          const QuadratureConfig& config) {
    config.validate();
    require_stability_hypothesis(f, c);
    if (!(R1 > 1)) fail(ErrorCode::InvalidArgument, "the splitting radius R1 must exceed 1");
    if (!t.is_real() || sgn(t.re()) <= 0)
        fail(ErrorCode::InvalidArgument, "the decomposition uses the real root s = t^(1/(k+l)); t must be a positive real");
    const AxisEndpoints kl = endpoints(compute_polygon(f.holo()));

    Decomposition out;
    out.k = kl.k;
    out.l = kl.l;
    const long double tv = to_long_double(t.re());
    const long double s = std::pow(tv, 1.0L / (kl.k + kl.l));
    out.s = static_cast<double>(s);
    const long double sl = std::pow(s, static_cast<long double>(kl.l));
    const long double sk = std::pow(s, static_cast<long double>(kl.k));
    const double outer = static_cast<double>(R / sl), inner = static_cast<double>(sk / R);
    if (!(outer > R1) || !(inner < 1 / R1))
        fail(ErrorCode::InvalidArgument, "t is too large for the splitting radius R1: need s^k/R < 1/R1 and R1 < R/s^l");

    const FiberFunction fiber(f, t);
    const FiberFunction scaled = fiber.rescaled(sl, 1 / std::pow(s, static_cast<long double>(kl.k * kl.l)));
    const double prefactor = static_cast<double>(
        std::pow(s, 2.0L * kl.l - 2.0L * kl.k * kl.l * static_cast<long double>(c)));
    auto piece = [&](double a, double b) {
        IntegralReport r = annulus_integral(scaled, c, Annulus{0, a, b}, Weight::XChart, config);
        r.value *= prefactor;
        r.error *= prefactor;
        return r;
    };
    out.I1 = piece(1 / R1, R1);
    out.I2 = piece(R1, outer);
    out.I3 = piece(inner, 1 / R1);
    out.I = annulus_integral(fiber, c, Annulus{0, static_cast<double>(tv / R), R}, Weight::XChart, config);
    return out;
}

// ---------------------------------------------------------------------------

std::vector<GaussianRational> default_t_sequence(unsigned count) {
    std::vector<GaussianRational> out;
    mpq_class t(1, 100);
    for (unsigned j = 0; j < count; ++j) {
        out.emplace_back(t);
        t /= 4;
    }
    return out;
}

namespace {

std::vector<GaussianRational> sorted_positive(const std::vector<GaussianRational>& ts, bool require_real) {
    std::vector<GaussianRational> out = ts;
    for (const auto& t : out) {
        if (t.is_zero()) fail(ErrorCode::InvalidArgument, "sample t = 0 is the central fiber, not a sample of the family");
        if (require_real && (!t.is_real() || sgn(t.re()) <= 0))
            fail(ErrorCode::InvalidArgument, "sweeps use positive real t, got " + t.to_string());
    }
    std::sort(out.begin(), out.end(), [](const GaussianRational& a, const GaussianRational& b) {
        if (a.norm() != b.norm()) return a.norm() > b.norm();
        if (a.re() != b.re()) return a.re() > b.re();
        return a.im() > b.im();
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<FiberIntegral> integrate_all(const MixedFunction& f, const std::vector<GaussianRational>& ts, double c,
                                         double R, const QuadratureConfig& config) {
    std::vector<std::future<FiberIntegral>> jobs;
    jobs.reserve(ts.size());
    for (const auto& t : ts)
        jobs.push_back(std::async(std::launch::async, [&f, t, c, R, &config] { return fiber_integral_K(f, t, c, R, config); }));
    std::vector<FiberIntegral> out;
    out.reserve(ts.size());
    for (auto& j : jobs) out.push_back(j.get());
    return out;
}

}  // namespace

SweepReport convergence_sweep(const MixedFunction& f, double c, double R, const std::vector<GaussianRational>& t_sequence,
                              const QuadratureConfig& config, double band) {
    config.validate();
    require_stability_hypothesis(f, c);
    if (t_sequence.empty()) fail(ErrorCode::InvalidArgument, "the t-sequence is empty");
    if (!(band > 0)) fail(ErrorCode::InvalidArgument, "the convergence band must be positive");

    SweepReport report;
    report.c = c;
    report.R = R;
    report.band = band;
    const NewtonPolygon polygon = compute_polygon(f.holo());
    report.single_segment = single_segment(polygon);
    report.hypothesis_note =
        report.single_segment
            ? "hypothesis unverified: the single-segment Newton polygon is necessary for irreducibility, not sufficient"
            : "hypothesis unverified: the Newton polygon has " + std::to_string(polygon.segment_count()) +
                  " segments, so F is reducible in C{x,y}";

    const std::vector<GaussianRational> ts = sorted_positive(t_sequence, true);
    const FiberIntegral central = fiber_integral_K(f, GaussianRational(), c, R, config);
    report.K0 = central.K;
    report.K0_error = central.K.error;

    const std::vector<FiberIntegral> fibers = integrate_all(f, ts, c, R, config);
    bool all_good = report.K0.converged && !report.K0.divergent;
    for (const auto& fi : fibers) {
        SweepRow row;
        row.t = fi.t;
        row.K = fi.K.value;
        row.error = fi.K.error;
        row.I = fi.I.value;
        row.J = fi.J.value;
        row.ratio = fi.K.value / report.K0.value;
        row.divergent = fi.K.divergent;
        row.converged = fi.K.converged;
        all_good = all_good && row.converged && !row.divergent;
        report.rows.push_back(row);
    }

    // |ratio - 1| must not grow as t shrinks, beyond the quadrature uncertainty.
    report.monotone_trend = report.rows.size() >= 2;
    const double rel0 = report.K0.error / report.K0.value;
    for (std::size_t j = 0; j + 1 < report.rows.size(); ++j) {
        const SweepRow& a = report.rows[j];
        const SweepRow& b = report.rows[j + 1];
        const double slack = a.error / a.K + b.error / b.K + 2 * rel0 + 1e-12;
        if (std::abs(b.ratio - 1) > std::abs(a.ratio - 1) + slack) report.monotone_trend = false;
    }
    const bool in_band = !report.rows.empty() && std::abs(report.rows.back().ratio - 1) <= band;
    report.verdict = all_good && report.monotone_trend && in_band ? SweepVerdict::Converged : SweepVerdict::Inconclusive;
    return report;
}

BoundReport uniform_bound_check(const MixedFunction& f, double c, double R, const std::vector<GaussianRational>& t_samples,
                                const QuadratureConfig& config) {
    config.validate();
    if (t_samples.empty()) fail(ErrorCode::InvalidArgument, "the sample list for the uniform bound is empty");
    require_stability_hypothesis(f, c);
    BoundReport report;
    report.c = c;
    report.R = R;
    const std::vector<GaussianRational> ts = sorted_positive(t_samples, false);
    const std::vector<FiberIntegral> fibers = integrate_all(f, ts, c, R, config);
    for (const auto& fi : fibers) {
        if (fi.K.divergent) fail(ErrorCode::Divergent, "K_t diverges at t = " + fi.t.to_string());
        report.samples.push_back({fi.t, fi.K.value, fi.K.error});
        report.M = std::max(report.M, fi.K.value + fi.K.error);
    }

    // Growth without deceleration per unit of log|t| suggests an unbounded family.
    if (report.samples.size() >= 3) {
        bool increasing = true;
        std::vector<double> rate;
        for (std::size_t j = 0; j + 1 < report.samples.size(); ++j) {
            const auto& a = report.samples[j];
            const auto& b = report.samples[j + 1];
            if (!(b.K - b.error > a.K + a.error)) increasing = false;
            const double dlog = std::log(std::abs(static_cast<double>(to_long_double(a.t.norm())))) / 2 -
                                std::log(std::abs(static_cast<double>(to_long_double(b.t.norm())))) / 2;
            rate.push_back((b.K - a.K) / dlog);
        }
        report.growth_trend = increasing && rate.back() >= 0.9 * rate.front();
    }
    return report;
}

double young_combine(const std::vector<std::pair<unsigned, double>>& bounds) {
    if (bounds.empty()) fail(ErrorCode::InvalidArgument, "no factor bounds to combine");
    unsigned long l = 0;
    for (const auto& [li, Mi] : bounds) {
        if (li == 0) fail(ErrorCode::InvalidArgument, "factor orders l_i must be at least 1");
        if (!std::isfinite(Mi) || Mi < 0) fail(ErrorCode::InvalidArgument, "factor bounds M_i must be finite");
        l += li;
    }
    double out = 0;
    for (const auto& [li, Mi] : bounds) out += static_cast<double>(li) / static_cast<double>(l) * Mi;
    return out;
}

ProbeReport exponent_probe_1d(const FiberFunction& f, ComplexLD zero, double c, const QuadratureConfig& config,
                              double r_max, unsigned annuli) {
    if (!(c > 0)) fail(ErrorCode::InvalidArgument, "the probe needs c > 0");
    if (r_max <= 0) {
        long double reach = 1;
        for (const auto& p : singular_points(f)) {
            const long double d = std::abs(p - zero);
            if (d > 1e-12L * std::max(1.0L, std::abs(zero))) reach = std::min(reach, d);
        }
        r_max = static_cast<double>(reach / 4);
    }

    ProbeReport report;
    std::vector<double> xs, ys;
    double r = r_max;
    for (unsigned j = 0; j < annuli; ++j, r /= 2) {
        const IntegralReport m = annulus_integral(f, c, Annulus{zero, r, 2 * r}, Weight::XChart, config);
        if (m.divergent || !m.converged || !(m.value > 0) || !std::isfinite(m.value)) continue;
        report.masses.emplace_back(r, m.value);
        xs.push_back(std::log(r));
        ys.push_back(std::log(m.value));
    }
    if (xs.size() < 4) fail(ErrorCode::InvalidArgument, "fewer than 4 usable annuli for the exponent probe");

    const double n = static_cast<double>(xs.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    report.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    const double intercept = (sy - report.slope * sx) / n;
    double ss = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double e = ys[i] - (intercept + report.slope * xs[i]);
        ss += e * e;
    }
    report.residual = std::sqrt(ss / n);
    report.multiplicity = (2 - report.slope) / (2 * c);
    return report;
}

}  // namespace cselab

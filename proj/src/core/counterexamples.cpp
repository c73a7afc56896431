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

#include "cselab/counterexamples.hpp"

#include <algorithm>
#include <cmath>

#include "cselab/degeneration.hpp"
#include "cselab/errors.hpp"

namespace cselab {

std::vector<unsigned> vn_basis(unsigned n) {
    std::vector<unsigned> out;
    for (unsigned e = 0; e <= 4 * n + 2; e += 2) out.push_back(e);
    out.push_back(2 * n + 1);
    return out;
}

namespace {

// d^j/dz^j z^e at z = 1, the falling factorial e (e-1) ... (e-j+1).
mpz_class falling(unsigned e, unsigned j) {
    if (j > e) return 0;
    mpz_class out = 1;
    for (unsigned i = 0; i < j; ++i) out *= e - i;
    return out;
}

// Kernel of an integer matrix: Bareiss elimination to echelon form, then
// exact back-substitution for each free column.
std::vector<std::vector<mpq_class>> integer_kernel(std::vector<std::vector<mpz_class>> a) {
    const std::size_t rows = a.size(), cols = a.empty() ? 0 : a[0].size();
    std::vector<std::size_t> pivots;
    mpz_class prev = 1;
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t p = r;
        while (p < rows && a[p][col] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j) {
                a[i][j] = a[r][col] * a[i][j] - a[i][col] * a[r][j];
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            a[i][col] = 0;
        }
        prev = a[r][col];
        pivots.push_back(col);
        ++r;
    }

    std::vector<std::vector<mpq_class>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
        std::vector<mpq_class> v(cols, 0);
        v[free] = 1;
        for (std::size_t i = pivots.size(); i-- > 0;) {
            const std::size_t pc = pivots[i];
            mpq_class acc = 0;
            for (std::size_t j = pc + 1; j < cols; ++j) acc += mpq_class(a[i][j]) * v[j];
            v[pc] = -acc / mpq_class(a[i][pc]);
            v[pc].canonicalize();
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

UnivariatePoly normalized(const UnivariatePoly& p, unsigned top) {
    const GaussianRational lead = p.coeff(top);
    if (!lead.is_zero()) return (GaussianRational(1) / lead) * p;
    return (GaussianRational(1) / p.coeff(0)) * p;
}

bool extremes_nonzero(const UnivariatePoly& p, unsigned n) {
    return !p.coeff(0).is_zero() && !p.coeff(4 * n + 2).is_zero();
}

}  // namespace

std::vector<UnivariatePoly> solve_wn(unsigned n) {
    const std::vector<unsigned> basis = vn_basis(n);
    std::vector<std::vector<mpz_class>> m(2 * n + 2, std::vector<mpz_class>(basis.size()));
    for (unsigned j = 0; j < 2 * n + 2; ++j)
        for (std::size_t b = 0; b < basis.size(); ++b) m[j][b] = falling(basis[b], j);

    std::vector<UnivariatePoly> out;
    for (const auto& v : integer_kernel(std::move(m))) {
        std::vector<GaussianRational> coeffs(4 * n + 3);
        for (std::size_t b = 0; b < basis.size(); ++b) coeffs[basis[b]] += GaussianRational(v[b]);
        out.push_back(normalized(UnivariatePoly(std::move(coeffs)), 4 * n + 2));
    }
    return out;
}

UnivariatePoly symmetrize(const UnivariatePoly& p, unsigned n) {
    if (p.degree() > static_cast<int>(4 * n + 2))
        fail(ErrorCode::InvalidArgument, "symmetrize needs deg P <= 4n+2");
    return p + p.reversed(4 * n + 3);
}

Membership membership_N(unsigned n) {
    Membership out;
    const std::vector<UnivariatePoly> kernel = solve_wn(n);
    out.kernel_dimension = static_cast<unsigned>(kernel.size());
    for (const auto& p : kernel)
        if (extremes_nonzero(p, n)) {
            out.member = true;
            out.witness = p;
            return out;
        }
    std::vector<UnivariatePoly> candidates;
    for (const auto& p : kernel) candidates.push_back(symmetrize(p, n));
    for (std::size_t i = 0; i < kernel.size(); ++i)
        for (std::size_t j = i + 1; j < kernel.size(); ++j) candidates.push_back(symmetrize(kernel[i] + kernel[j], n));
    for (const auto& p : candidates)
        if (!p.is_zero() && extremes_nonzero(p, n)) {
            out.member = true;
            out.witness = normalized(p, 4 * n + 2);
            out.symmetrized = true;
            return out;
        }
    return out;
}

CounterexampleRecord build_family(unsigned n, const UnivariatePoly& p) {
    const unsigned top = 4 * n + 2, odd = 2 * n + 1;
    if (p.degree() > static_cast<int>(top)) fail(ErrorCode::InvalidArgument, "P_n has degree above 4n+2");
    for (unsigned e = 1; e <= top; e += 2)
        if (e != odd && !p.coeff(e).is_zero())
            fail(ErrorCode::InvalidArgument, "P_n is not in V_n: odd power z^" + std::to_string(e) + " present");
    if (!extremes_nonzero(p, n))
        fail(ErrorCode::InvalidArgument, "P_n needs nonzero constant and z^(4n+2) coefficients");

    CounterexampleRecord r;
    r.n = n;
    r.P = p;
    r.in_N = true;
    r.order_at_one = *p.vanishing_order(GaussianRational(1));

    std::vector<GaussianRational> q(odd + 1);
    for (unsigned j = 0; j <= odd; ++j) q[j] = p.coeff(2 * j);
    r.q = UnivariatePoly(q);
    r.c = p.coeff(odd);
    BivariatePoly::Terms terms;
    for (unsigned j = 0; j <= odd; ++j)
        if (!q[j].is_zero()) terms.emplace(Exponents{j, odd - j}, q[j]);
    r.Q = BivariatePoly(std::move(terms));
    r.F = MixedFunction(r.Q, r.c, odd);
    r.central_exponent = central_exponent(r.F, AxisComponent::MinOverComponents);
    r.fiber_exponent_at_diagonal = Exponent::reciprocal_of_order(r.order_at_one);
    return r;
}

CounterexampleRecord counterexample(unsigned n) {
    const Membership m = membership_N(n);
    if (!m.member) fail(ErrorCode::Hypothesis, "n = " + std::to_string(n) + " is not in N: no witness in W_n");
    CounterexampleRecord r = build_family(n, *m.witness);
    r.kernel_dimension = m.kernel_dimension;
    r.symmetrized = m.symmetrized;
    return r;
}

ViolationReport verify_violation(const CounterexampleRecord& record, const std::vector<GaussianRational>& s_samples) {
    if (s_samples.empty()) fail(ErrorCode::InvalidArgument, "no sample values s were given");
    const unsigned n = record.n, odd = 2 * n + 1;
    ViolationReport out;
    out.n = n;
    out.central = central_exponent(record.F, AxisComponent::MinOverComponents);
    const Exponent expected_central = Exponent::reciprocal_of_order(odd);
    const Exponent fiber_cap = Exponent::reciprocal_of_order(odd + 1);
    out.violated = true;

    for (const auto& s : s_samples) {
        if (!s.is_real() || sgn(s.re()) <= 0) fail(ErrorCode::InvalidArgument, "s must be a positive rational, got " + s.to_string());
        const GaussianRational t = s * s;
        ViolationSample v;
        v.s = s;

        const LaurentNormalForm form = substitute_fiber(record.F, t, s);
        if (form.pole_order > odd) fail(ErrorCode::Internal, "fiber form has a pole above x^(2n+1)");
        const UnivariatePoly lhs = form.numerator * UnivariatePoly::monomial(1, odd - form.pole_order);
        const UnivariatePoly rhs = s.pow(4 * n + 2) * record.P.scale_argument(GaussianRational(1) / s);
        v.identity_holds = lhs == rhs;
        if (!v.identity_holds)
            fail(ErrorCode::Internal, "fiber identity fails for n = " + std::to_string(n) + ", s = " + s.to_string() +
                                          ": " + lhs.to_string('x') + " != " + rhs.to_string('x'));

        v.fiber_exponent = fiber_exponent(record.F, t, s);
        v.fiber_bound_holds = v.fiber_exponent <= fiber_cap;
        v.central_holds = out.central == expected_central;
        v.violated = out.central > v.fiber_exponent;
        out.violated = out.violated && v.identity_holds && v.fiber_bound_holds && v.central_holds && v.violated;
        out.samples.push_back(v);
    }
    return out;
}

HolderReport holder_exponent_estimate(const std::function<double(double)>& g, double scale, unsigned levels) {
    if (!(scale > 0) || !std::isfinite(scale) || levels < 4)
        fail(ErrorCode::InvalidArgument, "degenerate sample range for the Hoelder probe");
    HolderReport out;
    std::vector<double> xs, ys;
    constexpr unsigned kBase = 32;
    double h = scale / 4;
    for (unsigned j = 0; j < levels; ++j, h /= 2) {
        double omega = 0;
        for (unsigned b = 0; b <= kBase; ++b) {
            const double a = (scale - h) * b / kBase;
            omega = std::max(omega, std::abs(g(a + h) - g(a)));
        }
        out.moduli.emplace_back(h, omega);
        if (omega > 0 && std::isfinite(omega)) {
            xs.push_back(std::log(h));
            ys.push_back(std::log(omega));
        }
    }
    if (xs.size() < 4) {
        // g is constant on the samples: Lipschitz with constant 0.
        out.exponent = 1;
        out.raw_slope = INFINITY;
        return out;
    }
    const double n = static_cast<double>(xs.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    out.raw_slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    const double intercept = (sy - out.raw_slope * sx) / n;
    double ss = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double e = ys[i] - (intercept + out.raw_slope * xs[i]);
        ss += e * e;
    }
    out.residual = std::sqrt(ss / n);
    out.exponent = std::clamp(out.raw_slope, 0.0, 1.0);
    return out;
}

HolderReport holder_probe(unsigned n, double sample_scale) {
    // d^n/dr^n r^(n + 1/2) = C r^(1/2), C = (n + 1/2)(n - 1/2) ... (3/2).
    const double power = n + 0.5;
    double coeff = 1;
    for (unsigned i = 0; i < n; ++i) coeff *= power - i;
    const double residual_power = power - n;
    return holder_exponent_estimate([=](double r) { return coeff * std::pow(r, residual_power); }, sample_scale);
}

}  // namespace cselab

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

#include "cselab/degeneration.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>

#include "cselab/errors.hpp"

namespace cselab {

double volume_density(std::complex<double> x, std::complex<double> y) {
    const double nx = std::norm(x);
    if (nx == 0) fail(ErrorCode::InvalidArgument, "the x-chart density is undefined at x = 0; use the y-chart");
    return (nx + std::norm(y)) / nx;
}

double volume_density_y_chart(std::complex<double> x, std::complex<double> y) {
    const double ny = std::norm(y);
    if (ny == 0) fail(ErrorCode::InvalidArgument, "the y-chart density is undefined at y = 0; use the x-chart");
    return (std::norm(x) + ny) / ny;
}

namespace {

UnivariatePoly strip_x_factors(const UnivariatePoly& p) {
    const auto& c = p.coefficients();
    std::size_t low = 0;
    while (low < c.size() && c[low].is_zero()) ++low;
    return UnivariatePoly(std::vector<GaussianRational>(c.begin() + static_cast<long>(low), c.end()));
}

std::optional<GaussianRational> recognize(const UnivariatePoly& factor, const ComplexLD& root,
                                          unsigned long max_denominator) {
    const mpq_class re = rational_approximation(root.real(), max_denominator);
    const mpq_class im = rational_approximation(root.imag(), max_denominator);
    const GaussianRational candidate(re, im);
    if (factor.evaluate(candidate).is_zero()) return candidate;
    return std::nullopt;
}

bool in_polydisc(const ComplexLD& x, const GaussianRational& t, double delta) {
    const long double slack = 1 + 1e-9L;
    const long double ax = std::abs(x);
    const long double ay = std::abs(t.to_complex_ld()) / ax;
    return ax <= delta * slack && ay <= delta * slack;
}

bool in_polydisc_exact(const GaussianRational& x, const GaussianRational& t, double delta) {
    // |x|^2 <= delta^2 and |t|^2 <= delta^2 |x|^2, both compared in exact arithmetic.
    const mpq_class d2 = mpq_class(delta) * mpq_class(delta) * mpq_class(1 + 1e-9);
    const mpq_class nx = x.norm();
    return nx <= d2 && t.norm() <= d2 * nx;
}

}  // namespace

FiberZeroSet laurent_zeros(const LaurentNormalForm& f, const FiberZeroOptions& options) {
    FiberZeroSet out;
    if (f.is_zero()) {
        out.identically_zero = true;
        return out;
    }
    const UnivariatePoly numerator = strip_x_factors(f.numerator);
    const auto factors = square_free_decomposition(numerator);

    std::vector<RootCluster> clusters;
    if (numerator.degree() > 0) clusters = cluster_roots(companion_roots(numerator), options.cluster_rel_tol);

    for (std::size_t i = 0; i < factors.size(); ++i) {
        const UnivariatePoly& g = factors[i];
        if (g.degree() <= 0) continue;
        for (ComplexLD root : companion_roots(g)) {
            const long double step = newton_polish(g, root);
            FiberZero zero;
            zero.location = root;
            zero.multiplicity = static_cast<unsigned>(i + 1);
            if (auto exact = recognize(g, root, options.max_denominator)) {
                zero.exact_location = exact;
                zero.location = exact->to_complex_ld();
                zero.exactness = ZeroExactness::Exact;
            } else {
                long double radius = step;
                long double best = INFINITY;
                for (const auto& c : clusters) {
                    const long double d = std::abs(c.center - root);
                    if (d < best) {
                        best = d;
                        radius = std::max(step, c.radius);
                    }
                }
                zero.cluster_radius = radius;
            }
            out.zeros.push_back(zero);
        }
    }
    std::sort(out.zeros.begin(), out.zeros.end(), [](const FiberZero& a, const FiberZero& b) {
        return a.location.real() != b.location.real() ? a.location.real() < b.location.real()
                                                      : a.location.imag() < b.location.imag();
    });
    return out;
}

FiberZeroSet fiber_zeros(const MixedFunction& f, const GaussianRational& t, const FiberZeroOptions& options) {
    if (!(options.delta > 0)) fail(ErrorCode::InvalidArgument, "the polydisc radius delta must be positive");
    FiberZeroSet all = laurent_zeros(substitute_fiber(f, t), options);
    if (all.identically_zero) return all;
    FiberZeroSet out;
    for (auto& z : all.zeros) {
        const bool inside =
            z.exact_location ? in_polydisc_exact(*z.exact_location, t, options.delta) : in_polydisc(z.location, t, options.delta);
        if (inside) out.zeros.push_back(std::move(z));
    }
    return out;
}

std::vector<RootCluster> numeric_fiber_zeros(const MixedFunction& f, const GaussianRational& t, long double rel_tol) {
    const LaurentNormalForm form = substitute_fiber(f, t);
    if (form.is_zero()) fail(ErrorCode::InvalidArgument, "the fiber function vanishes identically");
    const UnivariatePoly numerator = strip_x_factors(form.numerator);
    if (numerator.degree() <= 0) return {};
    return cluster_roots(companion_roots(numerator), rel_tol);
}

Exponent fiber_exponent(const MixedFunction& f, const GaussianRational& t, const GaussianRational& x0) {
    if (x0.is_zero()) fail(ErrorCode::InvalidArgument, "points of X_t have x != 0");
    const auto order = substitute_fiber(f, t).vanishing_order(x0);
    if (!order) return Exponent::zero();
    return Exponent::reciprocal_of_order(*order);
}

Exponent fiber_exponent(const FiberZero& zero) { return Exponent::reciprocal_of_order(zero.multiplicity); }

Exponent central_exponent(const MixedFunction& f, AxisComponent component) {
    auto on_axis = [](const UnivariatePoly& restriction) {
        const auto order = restriction.vanishing_order(GaussianRational());
        if (!order) return Exponent::zero();
        return Exponent::reciprocal_of_order(*order);
    };
    switch (component) {
        case AxisComponent::XAxis:
            return on_axis(f.holo().restrict_to_x_axis());
        case AxisComponent::YAxis:
            return on_axis(f.holo().restrict_to_y_axis());
        case AxisComponent::MinOverComponents:
            break;
    }
    return std::min(on_axis(f.holo().restrict_to_x_axis()), on_axis(f.holo().restrict_to_y_axis()));
}

// ---------------------------------------------------------------------------

ResolutionBound lct_from_resolution(const ResolutionData& data) {
    if (data.divisors.empty()) fail(ErrorCode::InvalidArgument, "resolution data has no divisors");
    ResolutionBound out;
    bool any = false;
    for (const auto& d : data.divisors) {
        if (d.multiplicity == 0) fail(ErrorCode::InvalidArgument, "divisor multiplicity a_i must be at least 1");
        if (!d.passes_through_point) continue;
        any = true;
        const Exponent candidate = Exponent::of(mpq_class(d.discrepancy + 1, d.multiplicity));
        if (candidate < out.value) out.value = candidate;
    }
    if (!any) fail(ErrorCode::InvalidArgument, "no divisor of the resolution data passes through the point");
    out.exact = data.log_resolution;
    return out;
}

namespace {

ResolutionData make_entry(std::string name, std::string curve, std::initializer_list<std::pair<unsigned, unsigned>> ka) {
    ResolutionData d;
    d.name = std::move(name);
    d.curve = std::move(curve);
    for (const auto& [k, a] : ka) d.divisors.push_back({k, a, true});
    return d;
}

std::vector<ResolutionData> build_catalog() {
    std::vector<ResolutionData> c;
    c.push_back(make_entry("smooth", "x", {{0, 1}}));
    c.push_back(make_entry("node", "x*y", {{0, 1}, {0, 1}}));
    c.push_back(make_entry("cusp", "y^2 - x^3", {{0, 1}, {1, 2}, {2, 3}, {4, 6}}));
    c.push_back(make_entry("tacnode", "y^2 - x^4", {{0, 1}, {0, 1}, {1, 2}, {2, 4}}));
    for (unsigned m = 1; m <= 5; ++m) {
        const std::string curve = m == 1 ? "x" : "x^" + std::to_string(m);
        c.push_back(make_entry("axis-order-" + std::to_string(m), curve, {{0, m}}));
    }

    // x^a + y^b, from point blowups until the total transform is SNC.
    using List = std::initializer_list<std::pair<unsigned, unsigned>>;
    auto brieskorn = [&c](unsigned a, unsigned b, List ka) {
        c.push_back(make_entry("x^" + std::to_string(a) + "+y^" + std::to_string(b),
                               "x^" + std::to_string(a) + " + y^" + std::to_string(b), ka));
    };
    const List l22 = {{0, 1}, {0, 1}, {1, 2}};
    const List l23 = {{0, 1}, {1, 2}, {2, 3}, {4, 6}};
    const List l24 = {{0, 1}, {0, 1}, {1, 2}, {2, 4}};
    const List l25 = {{0, 1}, {1, 2}, {2, 4}, {3, 5}, {6, 10}};
    const List l33 = {{0, 1}, {0, 1}, {0, 1}, {1, 3}};
    const List l34 = {{0, 1}, {1, 3}, {2, 4}, {4, 8}, {6, 12}};
    const List l35 = {{0, 1}, {1, 3}, {2, 5}, {4, 9}, {7, 15}};
    const List l44 = {{0, 1}, {0, 1}, {0, 1}, {0, 1}, {1, 4}};
    const List l45 = {{0, 1}, {1, 4}, {2, 5}, {4, 10}, {6, 15}, {8, 20}};
    const List l55 = {{0, 1}, {0, 1}, {0, 1}, {0, 1}, {0, 1}, {1, 5}};
    brieskorn(2, 2, l22);
    brieskorn(2, 3, l23);
    brieskorn(2, 4, l24);
    brieskorn(2, 5, l25);
    brieskorn(3, 2, l23);
    brieskorn(3, 3, l33);
    brieskorn(3, 4, l34);
    brieskorn(3, 5, l35);
    brieskorn(4, 2, l24);
    brieskorn(4, 3, l34);
    brieskorn(4, 4, l44);
    brieskorn(4, 5, l45);
    brieskorn(5, 2, l25);
    brieskorn(5, 3, l35);
    brieskorn(5, 4, l45);
    brieskorn(5, 5, l55);
    return c;
}

}  // namespace

const std::vector<ResolutionData>& builtin_resolution_catalog() {
    static const std::vector<ResolutionData> catalog = build_catalog();
    return catalog;
}

const ResolutionData& catalog_entry(std::string_view name) {
    for (const auto& d : builtin_resolution_catalog())
        if (d.name == name) return d;
    fail(ErrorCode::InvalidArgument, "no catalog entry named '" + std::string(name) + "'");
}

std::vector<ResolutionData> parse_resolution_catalog(std::string_view json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("resolution catalog: ") + e.what(), e.byte);
    }
    if (!doc.is_array()) fail(ErrorCode::Parse, "resolution catalog must be a JSON list");
    std::vector<ResolutionData> out;
    try {
        for (const auto& item : doc) {
            ResolutionData d;
            d.name = item.at("name").get<std::string>();
            d.curve = item.value("curve", std::string());
            d.log_resolution = item.value("log_resolution", true);
            for (const auto& div : item.at("divisors")) {
                const long k = div.at("k").get<long>();
                const long a = div.at("a").get<long>();
                if (k < 0) fail(ErrorCode::Parse, "catalog entry '" + d.name + "': discrepancy k must be >= 0");
                if (a < 1) fail(ErrorCode::Parse, "catalog entry '" + d.name + "': multiplicity a must be >= 1");
                d.divisors.push_back({static_cast<unsigned>(k), static_cast<unsigned>(a), div.value("through", true)});
            }
            if (std::none_of(d.divisors.begin(), d.divisors.end(), [](const auto& x) { return x.passes_through_point; }))
                fail(ErrorCode::Parse, "catalog entry '" + d.name + "': no divisor passes through the point");
            out.push_back(std::move(d));
        }
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorCode::Parse, std::string("resolution catalog: ") + e.what());
    }
    return out;
}

std::string resolution_catalog_to_json(const std::vector<ResolutionData>& catalog) {
    nlohmann::json doc = nlohmann::json::array();
    for (const auto& d : catalog) {
        nlohmann::json item;
        item["name"] = d.name;
        if (!d.curve.empty()) item["curve"] = d.curve;
        if (!d.log_resolution) item["log_resolution"] = false;
        item["divisors"] = nlohmann::json::array();
        for (const auto& div : d.divisors)
            item["divisors"].push_back({{"k", div.discrepancy}, {"a", div.multiplicity}, {"through", div.passes_through_point}});
        doc.push_back(std::move(item));
    }
    return doc.dump(2) + "\n";
}

// ---------------------------------------------------------------------------

SemicontinuityReport semicontinuity_check(const MixedFunction& f, const std::vector<GaussianRational>& t_samples,
                                          const FiberZeroOptions& options) {
    if (t_samples.empty()) fail(ErrorCode::InvalidArgument, "no fiber parameters t were given");
    SemicontinuityReport report;
    report.delta = options.delta;
    report.holomorphic = f.is_holomorphic();
    report.central_x = central_exponent(f, AxisComponent::XAxis);
    report.central_y = central_exponent(f, AxisComponent::YAxis);
    report.central_max = std::max(report.central_x, report.central_y);

    std::vector<GaussianRational> ts = t_samples;
    std::sort(ts.begin(), ts.end(), [](const GaussianRational& a, const GaussianRational& b) {
        if (a.norm() != b.norm()) return a.norm() > b.norm();
        if (a.re() != b.re()) return a.re() > b.re();
        return a.im() > b.im();
    });
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());

    bool any_nonzero = false;
    for (const auto& t : ts) {
        if (t.is_zero()) fail(ErrorCode::InvalidArgument, "t = 0 is the central fiber; sample t != 0");
        FiberSample sample;
        sample.t = t;
        sample.zeros = fiber_zeros(f, t, options);
        if (sample.zeros.identically_zero) {
            sample.min_fiber_exponent = Exponent::zero();
        } else {
            any_nonzero = true;
            for (const auto& z : sample.zeros.zeros)
                sample.min_fiber_exponent = std::min(sample.min_fiber_exponent, fiber_exponent(z));
        }
        sample.holds = report.central_max <= sample.min_fiber_exponent;
        if (!sample.holds && !report.witness) {
            report.verdict = SemicontinuityVerdict::Violated;
            SemicontinuityWitness w{t, FiberZero{}, report.central_max, sample.min_fiber_exponent};
            for (const auto& z : sample.zeros.zeros)
                if (fiber_exponent(z) == sample.min_fiber_exponent) {
                    w.zero = z;
                    break;
                }
            report.witness = w;
        }
        report.samples.push_back(std::move(sample));
    }
    if (!any_nonzero) fail(ErrorCode::InvalidArgument, "F vanishes on the family");

    for (auto it = report.samples.rbegin(); it != report.samples.rend() && it->holds; ++it) report.largest_t_held = it->t;
    return report;
}

}  // namespace cselab

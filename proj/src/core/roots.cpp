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

#include "cselab/roots.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <numeric>

#include "cselab/errors.hpp"

namespace cselab {

std::vector<ComplexLD> companion_roots(const std::vector<ComplexLD>& ascending_coeffs) {
    std::vector<ComplexLD> c = ascending_coeffs;
    while (!c.empty() && c.back() == ComplexLD(0)) c.pop_back();
    if (c.empty()) fail(ErrorCode::InvalidArgument, "the zero polynomial has no finite root set");
    const int degree = static_cast<int>(c.size()) - 1;
    if (degree == 0) return {};

    using Matrix = Eigen::Matrix<ComplexLD, Eigen::Dynamic, Eigen::Dynamic>;
    Matrix companion = Matrix::Zero(degree, degree);
    for (int i = 1; i < degree; ++i) companion(i, i - 1) = 1;
    for (int i = 0; i < degree; ++i) companion(i, degree - 1) = -c[static_cast<std::size_t>(i)] / c.back();

    Eigen::ComplexEigenSolver<Matrix> solver(companion, false);
    if (solver.info() != Eigen::Success) fail(ErrorCode::Internal, "companion eigenvalue iteration did not converge");
    std::vector<ComplexLD> roots(solver.eigenvalues().data(), solver.eigenvalues().data() + degree);
    std::sort(roots.begin(), roots.end(), [](const ComplexLD& a, const ComplexLD& b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    return roots;
}

std::vector<ComplexLD> companion_roots(const UnivariatePoly& p) { return companion_roots(p.to_complex_ld()); }

std::vector<RootCluster> cluster_roots(std::vector<ComplexLD> roots, long double rel_tol) {
    const std::size_t n = roots.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&parent](std::size_t i) {
        while (parent[i] != i) i = parent[i] = parent[parent[i]];
        return i;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const long double scale = std::max({1.0L, std::abs(roots[i]), std::abs(roots[j])});
            if (std::abs(roots[i] - roots[j]) <= rel_tol * scale) parent[find(i)] = find(j);
        }

    std::vector<RootCluster> clusters;
    std::vector<std::size_t> owner(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t r = find(i);
        if (owner[r] == n) {
            owner[r] = clusters.size();
            clusters.push_back({});
        }
        RootCluster& c = clusters[owner[r]];
        c.center += roots[i];
        ++c.size;
    }
    for (auto& c : clusters) c.center /= static_cast<long double>(c.size);
    for (std::size_t i = 0; i < n; ++i) {
        RootCluster& c = clusters[owner[find(i)]];
        c.radius = std::max(c.radius, std::abs(roots[i] - c.center));
    }
    std::sort(clusters.begin(), clusters.end(), [](const RootCluster& a, const RootCluster& b) {
        return a.center.real() != b.center.real() ? a.center.real() < b.center.real() : a.center.imag() < b.center.imag();
    });
    return clusters;
}

long double newton_polish(const UnivariatePoly& p, ComplexLD& root, int iterations) {
    const UnivariatePoly dp = p.derivative();
    long double step = 0;
    for (int i = 0; i < iterations; ++i) {
        const ComplexLD value = p.evaluate(root);
        const ComplexLD slope = dp.evaluate(root);
        if (slope == ComplexLD(0)) break;
        const ComplexLD delta = value / slope;
        step = std::abs(delta);
        root -= delta;
        if (step == 0) break;
    }
    return step;
}

}  // namespace cselab

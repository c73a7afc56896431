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

#ifndef CSELAB_ROOTS_HPP
#define CSELAB_ROOTS_HPP

#include <complex>
#include <vector>

#include "cselab/polynomial.hpp"

namespace cselab {

using ComplexLD = std::complex<long double>;

/// All complex roots (with repetition) from the companion matrix eigenvalues.
std::vector<ComplexLD> companion_roots(const std::vector<ComplexLD>& ascending_coeffs);
std::vector<ComplexLD> companion_roots(const UnivariatePoly& p);

struct RootCluster {
    ComplexLD center;
    unsigned size = 0;
    long double radius = 0;  // max distance of a member root from the center
};

/// Greedy single-linkage clustering: roots within rel_tol * max(1, |root|) merge.
std::vector<RootCluster> cluster_roots(std::vector<ComplexLD> roots, long double rel_tol);

/// Newton iterations on a squarefree polynomial; returns the last step size.
long double newton_polish(const UnivariatePoly& p, ComplexLD& root, int iterations = 4);

}  // namespace cselab

#endif

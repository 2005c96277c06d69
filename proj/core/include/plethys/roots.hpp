/*
   Copyright 2026 The plethys authors

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

#ifndef PLETHYS_ROOTS_HPP
#define PLETHYS_ROOTS_HPP

#include <numeric>
#include <vector>

#include "plethys/series.hpp"

namespace plethys {

template <class T>
struct PolynomialRealization;

struct RootSolveConfig {
    enum class Method { Aberth, Companion };

    Method method = Method::Aberth;
    unsigned max_iterations = 200;
    /// Residual acceptance factor: every reported root must satisfy
    /// |P(rho)| <= convergence_tol * sum_j |a_j| |rho|^j.
    double convergence_tol = 1e-14;
    /// Working precision of BIGCOMPLEX solves (ignored for COMPLEX64).
    unsigned precision_bits = 256;
};

/// Roots closer than kClusterThreshold * (largest root magnitude) are merged
/// into one root with multiplicity.
inline constexpr double kClusterThreshold = 1e-7;

template <class T>
struct RootMultiset {
    std::vector<T> roots;
    std::vector<unsigned> multiplicities;
    std::vector<magnitude_t<T>> residuals;  // |P(rho_i)| per reported root

    unsigned total_multiplicity() const {
        return std::accumulate(multiplicities.begin(), multiplicities.end(), 0u);
    }
};

/// All effective_degree roots of the realization, sorted by (re, im).
/// Degree 0 yields an empty multiset. Float backends only.
template <class T>
RootMultiset<T> find_roots(const PolynomialRealization<T>& real, const RootSolveConfig& cfg = {});

/// Expands prod (1 - x/rho_i)^m_i; order equals the total multiplicity.
template <class T>
Series<T> reconstruct_from_roots(const RootMultiset<T>& rm);

}  // namespace plethys

#endif

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

#ifndef PLETHYS_CONSTRUCT_HPP
#define PLETHYS_CONSTRUCT_HPP

#include <optional>
#include <utility>
#include <vector>

#include "plethys/alpha.hpp"
#include "plethys/roots.hpp"
#include "plethys/series.hpp"

namespace plethys {

/// Relative magnitude below which a float-backend coefficient counts as zero
/// when determining the effective degree. Near-zero leading coefficients
/// would otherwise inject spurious huge roots. Exact backends use an exact
/// zero test instead.
inline constexpr double kDegeneracyThreshold = 1e-12;

/// A truncated polynomial P_n: coefficients a_0..a_n with a_0 = 1 exactly,
/// its effective degree (index of the last nonzero coefficient), and an
/// optional root multiset attached by the root solver.
template <class T>
struct PolynomialRealization {
    Series<T> poly;
    unsigned nominal_degree = 0;
    unsigned effective_degree = 0;
    std::optional<RootMultiset<T>> roots;
};

template <class T>
unsigned compute_effective_degree(const Series<T>& p) {
    if constexpr (backend_of_v<T> == Backend::Rational) {
        for (unsigned j = p.order(); j > 0; --j) {
            if (!is_zero(p[j])) {
                return j;
            }
        }
        return 0;
    } else {
        double max_mag = 0.0;
        for (unsigned j = 0; j <= p.order(); ++j) {
            max_mag = std::max(max_mag, magnitude_to_double(abs_value(p[j])));
        }
        const double threshold = kDegeneracyThreshold * max_mag;
        for (unsigned j = p.order(); j > 0; --j) {
            if (magnitude_to_double(abs_value(p[j])) > threshold) {
                return j;
            }
        }
        return 0;
    }
}

/// Wraps a coefficient series as a realization; a_0 must be exactly one.
template <class T>
PolynomialRealization<T> make_realization(Series<T> poly) {
    if (!is_one(poly[0])) {
        throw ContractError("polynomial constant term must be exactly one");
    }
    const unsigned n = poly.order();
    const unsigned eff = compute_effective_degree(poly);
    return PolynomialRealization<T>{std::move(poly), n, eff, std::nullopt};
}

/// P_n from power-sum targets by the coefficient recurrence
/// a_0 = 1, a_k = -(1/k) sum_{j=1..k} alpha_j a_{k-j}; Theta(n^2) multiply-adds.
template <class T>
PolynomialRealization<T> build_polynomial(const AlphaSequence<T>& alpha, unsigned n) {
    const std::vector<T> al = alpha.terms(n);
    std::vector<T> a;
    a.reserve(n + 1);
    a.push_back(one_like(alpha.prototype()));
    for (unsigned k = 1; k <= n; ++k) {
        T acc = zero_like(a[0]);
        for (unsigned j = 1; j <= k; ++j) {
            acc += al[j - 1] * a[k - j];
        }
        acc = -acc;
        a.push_back(div_ui(acc, k));
    }
    return make_realization(Series<T>(std::move(a)));
}

/// Same output contract as build_polynomial, via the series route:
/// truncate exp(-sum alpha_k x^k / k) at degree n. Cross-check path.
template <class T>
PolynomialRealization<T> build_via_series(const AlphaSequence<T>& alpha, unsigned n) {
    if (n == 0) {
        return build_polynomial(alpha, 0);
    }
    const std::vector<T> al = alpha.terms(n);
    std::vector<T> h;
    h.reserve(n + 1);
    h.push_back(zero_like(al[0]));
    for (unsigned k = 1; k <= n; ++k) {
        T t = div_ui(al[k - 1], k);
        t = -t;
        h.push_back(std::move(t));
    }
    return make_realization(series_exp(Series<T>(std::move(h))));
}

/// Factorial-scaled coefficients b_j = j! a_j, which the polylog family
/// guarantees to be integers for integer s <= 0.
std::vector<Integer> scaled_integer_coefficients(const PolynomialRealization<Rational>& real);

/// The map sending (alpha_1..alpha_n) to the root multiset of P_n:
/// build_polynomial composed with root extraction. Float backends only.
template <class T>
PolynomialRealization<T> phi_embedding(std::vector<T> alpha_values,
                                       const RootSolveConfig& cfg = {});

}  // namespace plethys

#endif

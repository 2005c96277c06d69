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

#ifndef PLETHYS_VERIFY_HPP
#define PLETHYS_VERIFY_HPP

#include <vector>

#include "plethys/construct.hpp"

namespace plethys {

/// One row of the verification grid: p_{-k} against alpha_k for k = 1..k_max.
/// A bounded explicit alpha source may supply fewer than k_max targets; the
/// targets/deviations vectors stop where the source does, values never do.
template <class T>
struct PowerSumReport {
    unsigned n = 0;
    unsigned k_max = 0;
    std::vector<T> values;                   // p_{-k}, k = 1..k_max
    std::vector<T> targets;                  // alpha_k, as far as available
    std::vector<magnitude_t<T>> deviations;  // |p_{-k} - alpha_k|, same length
};

/// Grid of log10 |p_{-k}^(n) - alpha_k| over n = 1..n_max, k = 1..k_max.
/// Deviations at or below 10^floor_log10 (including exact zeros) are clamped
/// to the floor sentinel; failed root solves leave their row as NaN.
struct ErrorMatrix {
    unsigned n_max = 0;
    unsigned k_max = 0;
    double floor_log10 = -16.0;
    std::vector<double> entries;  // row-major, (n-1)*k_max + (k-1)

    double& at(unsigned n, unsigned k) { return entries.at((n - 1) * k_max + (k - 1)); }
    double at(unsigned n, unsigned k) const { return entries.at((n - 1) * k_max + (k - 1)); }
};

/// Entry k is sum_i m_i rho_i^{-k}, built by iterated multiplication of the
/// reciprocals (no powering through logarithms).
template <class T>
std::vector<T> power_sums_from_roots(const RootMultiset<T>& rm, unsigned k_max);

/// Root-free power sums: Newton's identities applied to the reversed
/// polynomial y^d P(1/y), whose roots are the reciprocals 1/rho_i. Exact in
/// the rational backend.
template <class T>
std::vector<T> power_sums_newton(const PolynomialRealization<T>& real, unsigned k_max);

struct LogSeriesCheck {
    bool pass = false;
    unsigned witness_k = 0;  // first failing k when !pass
};

/// Asserts [log P_n]_k == -alpha_k / k for k = 1..n, exactly.
LogSeriesCheck log_series_check(const PolynomialRealization<Rational>& real,
                                const AlphaSequence<Rational>& alpha);

/// One report per requested degree; Newton sums in the rational backend,
/// root-based sums in the float backends.
template <class T>
std::vector<PowerSumReport<T>> verification_table(const AlphaSequence<T>& alpha,
                                                  const std::vector<unsigned>& n_list,
                                                  unsigned k_max,
                                                  const RootSolveConfig& cfg = {});

/// threads = 0 picks the hardware concurrency; rows are independent, so the
/// result does not depend on the schedule.
template <class T>
ErrorMatrix error_matrix(const AlphaSequence<T>& alpha, unsigned n_max, unsigned k_max,
                         const RootSolveConfig& cfg = {}, unsigned threads = 0);

}  // namespace plethys

#endif

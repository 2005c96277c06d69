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

#include "plethys/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <thread>
#include <utility>

#include "plethys/errors.hpp"

namespace plethys {

namespace {

template <class T>
std::vector<T> zero_sums(unsigned k_max, const T& proto) {
    return std::vector<T>(k_max, zero_like(proto));
}

template <class T>
double deviation_log10(const magnitude_t<T>& dev, double floor_log10) {
    if constexpr (backend_of_v<T> == Backend::BigComplex) {
        if (dev.is_zero()) {
            return floor_log10;
        }
        return std::max(log10(dev).to_double(), floor_log10);
    } else {
        if (dev == 0.0) {
            return floor_log10;
        }
        return std::max(std::log10(dev), floor_log10);
    }
}

}  // namespace

template <class T>
std::vector<T> power_sums_from_roots(const RootMultiset<T>& rm, unsigned k_max) {
    static_assert(is_float_backend_v<T>, "root-based power sums need a float backend");
    if (rm.roots.empty()) {
        if constexpr (backend_of_v<T> == Backend::BigComplex) {
            return zero_sums(k_max, BigComplex(kMinPrecisionBits));
        } else {
            return zero_sums(k_max, T{});
        }
    }
    const T& proto = rm.roots.front();
    std::vector<T> reciprocal;
    std::vector<T> power;
    reciprocal.reserve(rm.roots.size());
    for (const T& r : rm.roots) {
        reciprocal.push_back(one_like(proto) / r);
    }
    power = reciprocal;
    std::vector<T> sums;
    sums.reserve(k_max);
    for (unsigned k = 1; k <= k_max; ++k) {
        if (k > 1) {
            for (std::size_t i = 0; i < power.size(); ++i) {
                power[i] = power[i] * reciprocal[i];
            }
        }
        T acc = zero_like(proto);
        for (std::size_t i = 0; i < power.size(); ++i) {
            acc += mul_ui(power[i], rm.multiplicities[i]);
        }
        sums.push_back(std::move(acc));
    }
    return sums;
}

template <class T>
std::vector<T> power_sums_newton(const PolynomialRealization<T>& real, unsigned k_max) {
    // The reversed polynomial y^d P(1/y) is monic with coefficient a_i on
    // y^(d-i), so Newton's identities read
    //   p_k = -(sum_{i=1..min(k-1,d)} a_i p_{k-i}) - k a_k   (a_k term for k <= d).
    const unsigned d = real.effective_degree;
    const Series<T>& a = real.poly;
    std::vector<T> p;
    p.reserve(k_max);
    for (unsigned k = 1; k <= k_max; ++k) {
        T acc = zero_like(a[0]);
        const unsigned m = std::min(k - 1, d);
        for (unsigned i = 1; i <= m; ++i) {
            acc += a[i] * p[k - i - 1];
        }
        if (k <= d) {
            acc += mul_ui(a[k], k);
        }
        acc = -acc;
        p.push_back(std::move(acc));
    }
    return p;
}

LogSeriesCheck log_series_check(const PolynomialRealization<Rational>& real,
                                const AlphaSequence<Rational>& alpha) {
    const Series<Rational> g = series_log(real.poly);
    for (unsigned k = 1; k <= real.nominal_degree; ++k) {
        Rational expected = -div_ui(alpha.term(k), k);
        if (!(g[k] == expected)) {
            return {false, k};
        }
    }
    return {true, 0};
}

template <class T>
std::vector<PowerSumReport<T>> verification_table(const AlphaSequence<T>& alpha,
                                                  const std::vector<unsigned>& n_list,
                                                  unsigned k_max, const RootSolveConfig& cfg) {
    if (n_list.empty()) {
        throw InputError("verification needs a non-empty degree list");
    }
    std::vector<PowerSumReport<T>> reports;
    reports.reserve(n_list.size());
    const unsigned k_targets =
        alpha.bounded() ? std::min<unsigned>(k_max, static_cast<unsigned>(alpha.size())) : k_max;
    const std::vector<T> targets = alpha.terms(k_targets);
    for (unsigned n : n_list) {
        auto real = build_polynomial(alpha, n);
        std::vector<T> values;
        if constexpr (backend_of_v<T> == Backend::Rational) {
            values = power_sums_newton(real, k_max);
        } else {
            try {
                const RootMultiset<T> rm = find_roots(real, cfg);
                values = rm.roots.empty() ? zero_sums(k_max, alpha.prototype())
                                          : power_sums_from_roots(rm, k_max);
            } catch (ConvergenceError& e) {
                throw ConvergenceError("degree " + std::to_string(n) + ": " + e.what(),
                                       std::move(e.best_roots), std::move(e.residuals));
            }
        }
        PowerSumReport<T> report;
        report.n = n;
        report.k_max = k_max;
        report.deviations.reserve(k_targets);
        for (unsigned k = 0; k < k_targets; ++k) {
            report.deviations.push_back(abs_value(values[k] - targets[k]));
        }
        report.values = std::move(values);
        report.targets = targets;
        reports.push_back(std::move(report));
    }
    return reports;
}

template <class T>
ErrorMatrix error_matrix(const AlphaSequence<T>& alpha, unsigned n_max, unsigned k_max,
                         const RootSolveConfig& cfg, unsigned threads) {
    static_assert(is_float_backend_v<T>, "the error matrix is a float-backend object");
    ErrorMatrix em;
    em.n_max = n_max;
    em.k_max = k_max;
    em.entries.assign(static_cast<std::size_t>(n_max) * k_max,
                      std::numeric_limits<double>::quiet_NaN());

    const std::vector<T> targets = alpha.terms(k_max);

    auto fill_row = [&](unsigned n) {
        try {
            const auto real = build_polynomial(alpha, n);
            const RootMultiset<T> rm = find_roots(real, cfg);
            const std::vector<T> sums = rm.roots.empty()
                                            ? zero_sums(k_max, alpha.prototype())
                                            : power_sums_from_roots(rm, k_max);
            for (unsigned k = 1; k <= k_max; ++k) {
                const magnitude_t<T> dev = abs_value(sums[k - 1] - targets[k - 1]);
                em.at(n, k) = deviation_log10<T>(dev, em.floor_log10);
            }
        } catch (const ConvergenceError&) {
            // Row stays at the NaN sentinel; the sweep carries on.
        }
    };

    unsigned worker_count = threads == 0 ? std::thread::hardware_concurrency() : threads;
    worker_count = std::max(1u, std::min(worker_count, n_max));
    if (worker_count == 1) {
        for (unsigned n = 1; n <= n_max; ++n) {
            fill_row(n);
        }
        return em;
    }

    std::atomic<unsigned> next{1};
    std::vector<std::thread> pool;
    pool.reserve(worker_count);
    for (unsigned w = 0; w < worker_count; ++w) {
        pool.emplace_back([&] {
            for (unsigned n = next.fetch_add(1); n <= n_max; n = next.fetch_add(1)) {
                fill_row(n);
            }
        });
    }
    for (auto& t : pool) {
        t.join();
    }
    return em;
}

template std::vector<Complex64> power_sums_from_roots(const RootMultiset<Complex64>&, unsigned);
template std::vector<BigComplex> power_sums_from_roots(const RootMultiset<BigComplex>&, unsigned);

template std::vector<Rational> power_sums_newton(const PolynomialRealization<Rational>&, unsigned);
template std::vector<Complex64> power_sums_newton(const PolynomialRealization<Complex64>&,
                                                  unsigned);
template std::vector<BigComplex> power_sums_newton(const PolynomialRealization<BigComplex>&,
                                                   unsigned);

template std::vector<PowerSumReport<Rational>> verification_table(
    const AlphaSequence<Rational>&, const std::vector<unsigned>&, unsigned,
    const RootSolveConfig&);
template std::vector<PowerSumReport<Complex64>> verification_table(
    const AlphaSequence<Complex64>&, const std::vector<unsigned>&, unsigned,
    const RootSolveConfig&);
template std::vector<PowerSumReport<BigComplex>> verification_table(
    const AlphaSequence<BigComplex>&, const std::vector<unsigned>&, unsigned,
    const RootSolveConfig&);

template ErrorMatrix error_matrix(const AlphaSequence<Complex64>&, unsigned, unsigned,
                                  const RootSolveConfig&, unsigned);
template ErrorMatrix error_matrix(const AlphaSequence<BigComplex>&, unsigned, unsigned,
                                  const RootSolveConfig&, unsigned);

}  // namespace plethys

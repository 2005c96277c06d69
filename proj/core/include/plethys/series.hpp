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

#ifndef PLETHYS_SERIES_HPP
#define PLETHYS_SERIES_HPP

#include <string>
#include <utility>
#include <vector>

#include "plethys/scalar.hpp"

namespace plethys {

/// Formal power series truncated at a fixed order: coeffs[j] holds the
/// coefficient of x^j for j = 0..order. Immutable in practice; operations
/// return new values.
template <class T>
class Series {
  public:
    explicit Series(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) {
            throw ContractError("series needs at least the constant coefficient");
        }
        if constexpr (backend_of_v<T> == Backend::BigComplex) {
            const unsigned bits = coeffs_.front().precision_bits();
            for (const T& c : coeffs_) {
                if (c.precision_bits() != bits) {
                    throw ContractError("series coefficients at mixed precisions");
                }
            }
        }
    }

    static Series zero(unsigned order, const T& proto) {
        return Series(std::vector<T>(order + 1, zero_like(proto)));
    }

    unsigned order() const { return static_cast<unsigned>(coeffs_.size()) - 1; }
    const T& operator[](unsigned j) const { return coeffs_[j]; }
    T& operator[](unsigned j) { return coeffs_[j]; }
    const std::vector<T>& coeffs() const { return coeffs_; }
    static constexpr Backend backend() { return backend_of_v<T>; }

  private:
    std::vector<T> coeffs_;
};

namespace detail {

template <class T>
void check_same_order(const Series<T>& a, const Series<T>& b, const char* op) {
    if (a.order() != b.order()) {
        throw ContractError(std::string(op) + ": order mismatch (" + std::to_string(a.order()) +
                            " vs " + std::to_string(b.order()) + ")");
    }
}

}  // namespace detail

/// Product truncated at the common order: c_j = sum_{i<=j} a_i b_{j-i}.
template <class T>
Series<T> series_mul(const Series<T>& a, const Series<T>& b) {
    detail::check_same_order(a, b, "series_mul");
    const unsigned n = a.order();
    std::vector<T> c(n + 1, zero_like(a[0]));
    for (unsigned j = 0; j <= n; ++j) {
        T acc = zero_like(a[0]);
        for (unsigned i = 0; i <= j; ++i) {
            acc += a[i] * b[j - i];
        }
        c[j] = std::move(acc);
    }
    return Series<T>(std::move(c));
}

/// exp(h) for h with zero constant term, via the differential recurrence
/// f' = h'.f, i.e. k f_k = sum_{j=1..k} j h_j f_{k-j}.
template <class T>
Series<T> series_exp(const Series<T>& h) {
    if (!is_zero(h[0])) {
        throw DomainError("series_exp: constant term must be zero");
    }
    const unsigned n = h.order();
    std::vector<T> f;
    f.reserve(n + 1);
    f.push_back(one_like(h[0]));
    for (unsigned k = 1; k <= n; ++k) {
        T acc = zero_like(h[0]);
        for (unsigned j = 1; j <= k; ++j) {
            acc += mul_ui(h[j], j) * f[k - j];
        }
        f.push_back(div_ui(acc, k));
    }
    return Series<T>(std::move(f));
}

/// log(f) for f with constant term one; inverse of series_exp. From
/// f' = (log f)'.f: g_k = f_k - (1/k) sum_{j=1..k-1} j g_j f_{k-j}.
template <class T>
Series<T> series_log(const Series<T>& f) {
    if (!is_one(f[0])) {
        throw DomainError("series_log: constant term must be one");
    }
    const unsigned n = f.order();
    std::vector<T> g;
    g.reserve(n + 1);
    g.push_back(zero_like(f[0]));
    for (unsigned k = 1; k <= n; ++k) {
        T acc = zero_like(f[0]);
        for (unsigned j = 1; j + 1 <= k; ++j) {
            acc += mul_ui(g[j], j) * f[k - j];
        }
        g.push_back(f[k] - div_ui(acc, k));
    }
    return Series<T>(std::move(g));
}

/// Termwise derivative; the order drops by one. Order-0 input yields the
/// order-0 zero series.
template <class T>
Series<T> series_derivative(const Series<T>& f) {
    if (f.order() == 0) {
        return Series<T>::zero(0, f[0]);
    }
    std::vector<T> d;
    d.reserve(f.order());
    for (unsigned j = 1; j <= f.order(); ++j) {
        d.push_back(mul_ui(f[j], j));
    }
    return Series<T>(std::move(d));
}

// -- backend conversions (RATIONAL->COMPLEX64, RATIONAL->BIGCOMPLEX,
//    BIGCOMPLEX->COMPLEX64; other directions do not exist) ------------------

inline Series<Complex64> to_complex64(const Series<Rational>& f) {
    std::vector<Complex64> c;
    c.reserve(f.order() + 1);
    for (const Rational& q : f.coeffs()) {
        c.push_back(to_complex64(q));
    }
    return Series<Complex64>(std::move(c));
}

inline Series<BigComplex> to_bigcomplex(const Series<Rational>& f, unsigned precision_bits) {
    std::vector<BigComplex> c;
    c.reserve(f.order() + 1);
    for (const Rational& q : f.coeffs()) {
        c.push_back(to_bigcomplex(q, precision_bits));
    }
    return Series<BigComplex>(std::move(c));
}

inline Series<Complex64> to_complex64(const Series<BigComplex>& f) {
    std::vector<Complex64> c;
    c.reserve(f.order() + 1);
    for (const BigComplex& z : f.coeffs()) {
        c.push_back(z.to_complex64());
    }
    return Series<Complex64>(std::move(c));
}

}  // namespace plethys

#endif

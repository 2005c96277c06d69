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

#include "plethys/roots.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "plethys/construct.hpp"
#include "plethys/errors.hpp"

namespace plethys {

namespace {

template <class T>
T make_complex(double re, double im, const T& proto) {
    if constexpr (backend_of_v<T> == Backend::BigComplex) {
        return BigComplex(re, im, proto.precision_bits());
    } else {
        (void)proto;
        return Complex64{re, im};
    }
}

// Unit roundoff of the backend, used to detect step stagnation.
template <class T>
double backend_epsilon(const T& proto) {
    if constexpr (backend_of_v<T> == Backend::BigComplex) {
        return std::ldexp(1.0, -static_cast<int>(proto.precision_bits()) + 1);
    } else {
        (void)proto;
        return std::ldexp(1.0, -52);
    }
}

// P(z) and P'(z) by one Horner pass over the trimmed coefficients.
template <class T>
void eval_with_derivative(const std::vector<T>& a, const T& z, T& p, T& dp) {
    const unsigned d = static_cast<unsigned>(a.size()) - 1;
    p = a[d];
    dp = zero_like(z);
    for (unsigned j = d; j > 0; --j) {
        dp = dp * z + p;
        p = p * z + a[j - 1];
    }
}

// sum_j |a_j| |z|^j, the scale of the backward-stable residual bound.
template <class T>
magnitude_t<T> residual_scale(const std::vector<magnitude_t<T>>& a_mag, const magnitude_t<T>& z_mag) {
    const unsigned d = static_cast<unsigned>(a_mag.size()) - 1;
    magnitude_t<T> s = a_mag[d];
    for (unsigned j = d; j > 0; --j) {
        s = s * z_mag + a_mag[j - 1];
    }
    return s;
}

// |P(z)| with the evaluation noise pushed well below the acceptance bound:
// COMPLEX64 residuals are re-evaluated at 128 bits, BIGCOMPLEX ones natively
// (their working precision already dwarfs any measurable tolerance).
template <class T>
magnitude_t<T> final_residual(const std::vector<T>& a, const T& z) {
    if constexpr (backend_of_v<T> == Backend::Complex64) {
        constexpr unsigned bits = 128;
        const unsigned d = static_cast<unsigned>(a.size()) - 1;
        BigComplex zz = BigComplex::from_complex64(z, bits);
        BigComplex acc = BigComplex::from_complex64(a[d], bits);
        for (unsigned j = d; j > 0; --j) {
            acc = acc * zz + BigComplex::from_complex64(a[j - 1], bits);
        }
        return abs(acc).to_double();
    } else {
        T p = a[static_cast<unsigned>(a.size()) - 1];
        for (unsigned j = static_cast<unsigned>(a.size()) - 1; j > 0; --j) {
            p = p * z + a[j - 1];
        }
        return abs_value(p);
    }
}

template <class T>
bool complex_less(const T& a, const T& b) {
    if constexpr (backend_of_v<T> == Backend::BigComplex) {
        if (a.real() != b.real()) {
            return a.real() < b.real();
        }
        return a.imag() < b.imag();
    } else {
        if (a.real() != b.real()) {
            return a.real() < b.real();
        }
        return a.imag() < b.imag();
    }
}

template <class T>
void throw_convergence(const char* what, const std::vector<T>& iterates,
                       const std::vector<magnitude_t<T>>& residuals) {
    std::vector<std::complex<double>> best;
    best.reserve(iterates.size());
    for (const T& z : iterates) {
        best.push_back(to_reference_complex(z));
    }
    std::vector<double> res;
    res.reserve(residuals.size());
    for (const auto& r : residuals) {
        res.push_back(magnitude_to_double(r));
    }
    throw ConvergenceError(what, std::move(best), std::move(res));
}

// Simultaneous Aberth-Ehrlich iteration, sequential update order. A root
// counts as settled once the step it just took falls below sqrt(eps)
// relative to its magnitude: with third-order convergence the remaining
// error is then far below the backend roundoff. Multiple roots never settle
// by that test; they keep iterating into the evaluation noise floor, which
// is what lets the cluster pass the multiplicity merge. The sweep loop ends
// when nothing moved, and the caller re-checks every residual either way.
template <class T>
std::vector<T> aberth_iterate(const std::vector<T>& a, const RootSolveConfig& cfg) {
    const unsigned d = static_cast<unsigned>(a.size()) - 1;
    const T& proto = a[0];

    // Initial guesses on a circle through the geometric root-magnitude
    // estimate, at distinct angles offset from the axes.
    const double radius = std::pow(magnitude_to_double(abs_value(a[0])) /
                                       magnitude_to_double(abs_value(a[d])),
                                   1.0 / d);
    std::vector<T> z;
    z.reserve(d);
    for (unsigned i = 0; i < d; ++i) {
        const double angle = 2.0 * std::numbers::pi * i / d + 0.4;
        z.push_back(make_complex(radius * std::cos(angle), radius * std::sin(angle), proto));
    }

    const double stall = std::sqrt(backend_epsilon(proto));

    for (unsigned iter = 0; iter < cfg.max_iterations; ++iter) {
        unsigned moved = 0;
        for (unsigned i = 0; i < d; ++i) {
            T p = zero_like(proto);
            T dp = zero_like(proto);
            eval_with_derivative(a, z[i], p, dp);
            if (is_zero(p)) {
                continue;
            }
            if (is_zero(dp)) {
                // Landed on a critical point; nudge deterministically.
                z[i] = z[i] + make_complex(0.001 * radius + 1e-6, 0.002 * radius + 1e-6, proto);
                ++moved;
                continue;
            }
            T newton = p / dp;
            T repulsion = zero_like(proto);
            for (unsigned j = 0; j < d; ++j) {
                if (j != i) {
                    repulsion += one_like(proto) / (z[i] - z[j]);
                }
            }
            T denom = one_like(proto) - newton * repulsion;
            T step = is_zero(denom) ? newton : newton / denom;
            const double step_mag = magnitude_to_double(abs_value(step));
            z[i] = z[i] - step;
            if (step_mag > stall * std::max(magnitude_to_double(abs_value(z[i])), 1e-300)) {
                ++moved;
            }
        }
        if (moved == 0) {
            return z;
        }
    }

    // Out of sweeps. The finalize step still accepts if the true residuals
    // meet the bound; hand the iterates back either way.
    return z;
}

template <class T>
std::vector<T> companion_eigenvalues(const std::vector<T>& a) {
    if constexpr (backend_of_v<T> == Backend::Complex64) {
        const unsigned d = static_cast<unsigned>(a.size()) - 1;
        Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
        for (unsigned i = 1; i < d; ++i) {
            m(i, i - 1) = 1.0;
        }
        for (unsigned i = 0; i < d; ++i) {
            m(i, d - 1) = -(a[i] / a[d]);
        }
        Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m, /*computeEigenvectors=*/false);
        if (solver.info() != Eigen::Success) {
            throw ConvergenceError("companion eigenvalue iteration failed", {}, {});
        }
        std::vector<T> z(d);
        for (unsigned i = 0; i < d; ++i) {
            z[i] = solver.eigenvalues()(i);
        }
        return z;
    } else {
        throw ContractError("companion method supports the complex64 backend only");
    }
}

}  // namespace

template <class T>
RootMultiset<T> find_roots(const PolynomialRealization<T>& real, const RootSolveConfig& cfg) {
    static_assert(is_float_backend_v<T>, "root extraction needs a float backend");
    const unsigned d = real.effective_degree;
    if (d == 0) {
        return RootMultiset<T>{};
    }

    std::vector<T> a(real.poly.coeffs().begin(), real.poly.coeffs().begin() + d + 1);
    std::vector<T> z = cfg.method == RootSolveConfig::Method::Aberth
                           ? aberth_iterate(a, cfg)
                           : companion_eigenvalues(a);

    std::vector<magnitude_t<T>> a_mag;
    a_mag.reserve(d + 1);
    for (const T& c : a) {
        a_mag.push_back(abs_value(c));
    }

    // Backward-stable acceptance on the true residuals.
    std::vector<magnitude_t<T>> resid;
    resid.reserve(d);
    for (const T& zi : z) {
        resid.push_back(final_residual(a, zi));
    }
    for (unsigned i = 0; i < d; ++i) {
        const magnitude_t<T> bound = residual_scale<T>(a_mag, abs_value(z[i])) * cfg.convergence_tol;
        if (!(resid[i] <= bound)) {
            throw_convergence("root iteration missed the residual bound", z, resid);
        }
    }

    // Deterministic order, then multiplicity clustering.
    std::sort(z.begin(), z.end(), [](const T& x, const T& y) { return complex_less(x, y); });

    double scale = 0.0;
    for (const T& zi : z) {
        scale = std::max(scale, magnitude_to_double(abs_value(zi)));
    }
    const double cluster_dist = kClusterThreshold * scale;

    std::vector<unsigned> parent(d);
    for (unsigned i = 0; i < d; ++i) {
        parent[i] = i;
    }
    auto find = [&parent](unsigned x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (unsigned i = 0; i < d; ++i) {
        for (unsigned j = i + 1; j < d; ++j) {
            if (magnitude_to_double(abs_value(z[i] - z[j])) <= cluster_dist) {
                parent[find(i)] = find(j);
            }
        }
    }

    RootMultiset<T> rm;
    for (unsigned i = 0; i < d; ++i) {
        if (find(i) != i) {
            continue;
        }
        T centroid = zero_like(a[0]);
        unsigned count = 0;
        for (unsigned j = 0; j < d; ++j) {
            if (find(j) == i) {
                centroid += z[j];
                ++count;
            }
        }
        centroid = div_ui(centroid, count);
        if (is_zero(centroid)) {
            throw_convergence("root iteration produced a zero root", z, resid);
        }
        rm.roots.push_back(std::move(centroid));
        rm.multiplicities.push_back(count);
        rm.residuals.push_back(final_residual(a, rm.roots.back()));
    }

    // Cluster centroids can reorder relative to their members.
    std::vector<unsigned> idx(rm.roots.size());
    for (unsigned i = 0; i < idx.size(); ++i) {
        idx[i] = i;
    }
    std::sort(idx.begin(), idx.end(),
              [&rm](unsigned x, unsigned y) { return complex_less(rm.roots[x], rm.roots[y]); });
    RootMultiset<T> sorted;
    for (unsigned i : idx) {
        sorted.roots.push_back(std::move(rm.roots[i]));
        sorted.multiplicities.push_back(rm.multiplicities[i]);
        sorted.residuals.push_back(std::move(rm.residuals[i]));
    }
    return sorted;
}

template <class T>
Series<T> reconstruct_from_roots(const RootMultiset<T>& rm) {
    for (const T& r : rm.roots) {
        if (is_zero(r)) {
            throw DomainError("cannot reconstruct from a zero root");
        }
    }
    const unsigned total = rm.total_multiplicity();
    if (total == 0) {
        if constexpr (backend_of_v<T> == Backend::BigComplex) {
            return Series<T>({BigComplex(1.0, 0.0, kMinPrecisionBits)});
        } else {
            return Series<T>({one_like(T{})});
        }
    }
    const T& proto = rm.roots.front();
    std::vector<T> c(total + 1, zero_like(proto));
    c[0] = one_like(proto);
    unsigned cur = 0;
    for (unsigned i = 0; i < rm.roots.size(); ++i) {
        const T w = one_like(proto) / rm.roots[i];
        for (unsigned m = 0; m < rm.multiplicities[i]; ++m) {
            ++cur;
            for (unsigned j = cur; j > 0; --j) {
                c[j] = c[j] - c[j - 1] * w;
            }
        }
    }
    return Series<T>(std::move(c));
}

template RootMultiset<Complex64> find_roots(const PolynomialRealization<Complex64>&,
                                            const RootSolveConfig&);
template RootMultiset<BigComplex> find_roots(const PolynomialRealization<BigComplex>&,
                                             const RootSolveConfig&);
template Series<Complex64> reconstruct_from_roots(const RootMultiset<Complex64>&);
template Series<BigComplex> reconstruct_from_roots(const RootMultiset<BigComplex>&);

}  // namespace plethys

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

#ifndef PLETHYS_ALPHA_HPP
#define PLETHYS_ALPHA_HPP

#include <cmath>
#include <complex>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "plethys/scalar.hpp"

namespace plethys {

enum class AlphaKind { Explicit, Constant, Polylog };

/// Provider of power-sum targets alpha_1, alpha_2, ... in one backend.
/// Explicit lists are bounded; requesting past their end is an input error.
/// The polylog family is alpha_k = k^(1-s): integer s in the rational
/// backend (terms are exact rationals), arbitrary complex s in the float
/// backends via the principal branch of k^(1-s) = exp((1-s) ln k).
template <class T>
class AlphaSequence {
  public:
    static AlphaSequence explicit_values(std::vector<T> values) {
        AlphaSequence a;
        a.kind_ = AlphaKind::Explicit;
        if constexpr (backend_of_v<T> == Backend::BigComplex) {
            if (!values.empty()) {
                a.bits_ = values.front().precision_bits();
            }
        }
        a.values_ = std::move(values);
        return a;
    }

    static AlphaSequence constant(T value) {
        AlphaSequence a;
        a.kind_ = AlphaKind::Constant;
        if constexpr (backend_of_v<T> == Backend::BigComplex) {
            a.bits_ = value.precision_bits();
        }
        a.constant_ = std::move(value);
        return a;
    }

    AlphaKind kind() const { return kind_; }
    bool bounded() const { return kind_ == AlphaKind::Explicit; }
    std::size_t size() const { return values_.size(); }

    T term(unsigned k) const {
        if (k == 0) {
            throw ContractError("alpha terms are indexed from 1");
        }
        switch (kind_) {
            case AlphaKind::Explicit:
                if (k > values_.size()) {
                    throw InputError("alpha sequence has " + std::to_string(values_.size()) +
                                     " terms, term " + std::to_string(k) + " requested");
                }
                return values_[k - 1];
            case AlphaKind::Constant:
                return *constant_;
            case AlphaKind::Polylog:
                return polylog_term(k);
        }
        throw ContractError("unreachable alpha kind");
    }

    std::vector<T> terms(unsigned n) const {
        std::vector<T> out;
        out.reserve(n);
        for (unsigned k = 1; k <= n; ++k) {
            out.push_back(term(k));
        }
        return out;
    }

    /// Zero value carrying this sequence's backend parameters (precision).
    T prototype() const {
        if constexpr (backend_of_v<T> == Backend::BigComplex) {
            if (kind_ == AlphaKind::Explicit && !values_.empty()) {
                return zero_like(values_.front());
            }
            if (kind_ == AlphaKind::Constant) {
                return zero_like(*constant_);
            }
            return BigComplex(bits_);
        } else {
            return T{};
        }
    }

  private:
    template <class U>
    friend AlphaSequence<U> polylog_alpha_rational(long s);
    friend AlphaSequence<Complex64> polylog_alpha(std::complex<double> s);
    friend AlphaSequence<BigComplex> polylog_alpha(std::complex<double> s,
                                                   unsigned precision_bits);

    T polylog_term(unsigned k) const {
        if constexpr (backend_of_v<T> == Backend::Rational) {
            // k^(1-s) for integer s: an integer when s <= 1, else 1/k^(s-1).
            const long e = 1 - s_int_;
            Integer p;
            mpz_ui_pow_ui(p.get_mpz_t(), k, static_cast<unsigned long>(e < 0 ? -e : e));
            if (e >= 0) {
                return Rational(p);
            }
            Rational q(1, p);
            q.canonicalize();
            return q;
        } else if constexpr (backend_of_v<T> == Backend::Complex64) {
            const std::complex<double> w = 1.0 - s_;
            if (w.imag() == 0.0) {
                return {std::pow(static_cast<double>(k), w.real()), 0.0};
            }
            return std::exp(w * std::log(static_cast<double>(k)));
        } else {
            const BigFloat ln_k = BigFloat::log_of_uint(k, bits_);
            const BigFloat exponent_re = ln_k * (1.0 - s_.real());
            const BigFloat exponent_im = ln_k * (-s_.imag());
            const BigFloat mag = exp(exponent_re);
            BigFloat s_im(bits_);
            BigFloat c_im(bits_);
            sin_cos(s_im, c_im, exponent_im);
            return BigComplex(mag * c_im, mag * s_im);
        }
    }

    AlphaKind kind_ = AlphaKind::Explicit;
    std::vector<T> values_;
    std::optional<T> constant_;
    std::complex<double> s_ = 0.0;  // float-backend polylog parameter
    long s_int_ = 0;                // rational-backend polylog parameter
    unsigned bits_ = kMinPrecisionBits;
};

/// Rational-backend polylog family; s must be an integer so that every
/// term k^(1-s) is an exact rational.
template <class U = Rational>
AlphaSequence<U> polylog_alpha_rational(long s) {
    static_assert(backend_of_v<U> == Backend::Rational);
    AlphaSequence<U> a;
    a.kind_ = AlphaKind::Polylog;
    a.s_int_ = s;
    return a;
}

inline AlphaSequence<Complex64> polylog_alpha(std::complex<double> s) {
    AlphaSequence<Complex64> a;
    a.kind_ = AlphaKind::Polylog;
    a.s_ = s;
    return a;
}

inline AlphaSequence<BigComplex> polylog_alpha(std::complex<double> s, unsigned precision_bits) {
    AlphaSequence<BigComplex> a;
    a.kind_ = AlphaKind::Polylog;
    a.s_ = s;
    a.bits_ = precision_bits;
    return a;
}

}  // namespace plethys

#endif

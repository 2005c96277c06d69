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

#ifndef PLETHYS_SCALAR_HPP
#define PLETHYS_SCALAR_HPP

#include <complex>

#include "plethys/bigcomplex.hpp"
#include "plethys/errors.hpp"
#include "plethys/rational.hpp"

namespace plethys {

/// Coefficient backends. The backend is the C++ scalar type, so mixing
/// backends in one expression does not compile; BIGCOMPLEX precision
/// mismatches are caught at run time by the scalar operations.
enum class Backend { Rational, Complex64, BigComplex };

const char* backend_name(Backend b);

using Complex64 = std::complex<double>;

template <class T>
struct backend_of;
template <>
struct backend_of<Rational> {
    static constexpr Backend value = Backend::Rational;
};
template <>
struct backend_of<Complex64> {
    static constexpr Backend value = Backend::Complex64;
};
template <>
struct backend_of<BigComplex> {
    static constexpr Backend value = Backend::BigComplex;
};

template <class T>
inline constexpr Backend backend_of_v = backend_of<T>::value;

template <class T>
inline constexpr bool is_float_backend_v =
    backend_of_v<T> == Backend::Complex64 || backend_of_v<T> == Backend::BigComplex;

/// Type of |x| per backend: exact for rationals, real float otherwise.
template <class T>
struct magnitude_of;
template <>
struct magnitude_of<Rational> {
    using type = Rational;
};
template <>
struct magnitude_of<Complex64> {
    using type = double;
};
template <>
struct magnitude_of<BigComplex> {
    using type = BigFloat;
};

template <class T>
using magnitude_t = typename magnitude_of<T>::type;

// -- uniform scalar helpers ------------------------------------------------

inline bool is_zero(const Rational& q) {
    return sgn(q) == 0;
}
inline bool is_zero(const Complex64& z) {
    return z.real() == 0.0 && z.imag() == 0.0;
}
inline bool is_zero(const BigComplex& z) {
    return z.is_zero();
}

inline bool is_one(const Rational& q) {
    return q == 1;
}
inline bool is_one(const Complex64& z) {
    return z.real() == 1.0 && z.imag() == 0.0;
}
inline bool is_one(const BigComplex& z) {
    return z.real() == BigFloat(1.0, z.precision_bits()) && z.imag().is_zero();
}

/// Zero/one carrying the prototype's backend parameters (precision).
inline Rational zero_like(const Rational&) {
    return Rational(0);
}
inline Complex64 zero_like(const Complex64&) {
    return {0.0, 0.0};
}
inline BigComplex zero_like(const BigComplex& proto) {
    return BigComplex(proto.precision_bits());
}

inline Rational one_like(const Rational&) {
    return Rational(1);
}
inline Complex64 one_like(const Complex64&) {
    return {1.0, 0.0};
}
inline BigComplex one_like(const BigComplex& proto) {
    return BigComplex(1.0, 0.0, proto.precision_bits());
}

inline Rational mul_ui(const Rational& q, unsigned long k) {
    return q * Rational(k);
}
inline Complex64 mul_ui(const Complex64& z, unsigned long k) {
    return z * static_cast<double>(k);
}
inline BigComplex mul_ui(const BigComplex& z, unsigned long k) {
    return z * k;
}

inline Rational div_ui(const Rational& q, unsigned long k) {
    return q / Rational(k);
}
inline Complex64 div_ui(const Complex64& z, unsigned long k) {
    return z / static_cast<double>(k);
}
inline BigComplex div_ui(const BigComplex& z, unsigned long k) {
    return z / k;
}

inline Rational abs_value(const Rational& q) {
    return abs(q);
}
inline double abs_value(const Complex64& z) {
    return std::abs(z);
}
inline BigFloat abs_value(const BigComplex& z) {
    return abs(z);
}

inline double magnitude_to_double(const Rational& m) {
    return to_double_nearest(m);
}
inline double magnitude_to_double(double m) {
    return m;
}
inline double magnitude_to_double(const BigFloat& m) {
    return m.to_double();
}

// -- explicit backend conversions -------------------------------------------
// Supported directions only; anything else does not exist, by contract.

inline Complex64 to_complex64(const Rational& q) {
    return {to_double_nearest(q), 0.0};
}
inline Complex64 to_complex64(const BigComplex& z) {
    return z.to_complex64();
}
inline BigComplex to_bigcomplex(const Rational& q, unsigned precision_bits) {
    return BigComplex::from_rational(q, precision_bits);
}

inline std::complex<double> to_reference_complex(const Rational& q) {
    return {to_double_nearest(q), 0.0};
}
inline std::complex<double> to_reference_complex(const Complex64& z) {
    return z;
}
inline std::complex<double> to_reference_complex(const BigComplex& z) {
    return z.to_complex64();
}

}  // namespace plethys

#endif

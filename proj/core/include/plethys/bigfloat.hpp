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

#ifndef PLETHYS_BIGFLOAT_HPP
#define PLETHYS_BIGFLOAT_HPP

#include <mpfr.h>

#include <string>

#include "plethys/rational.hpp"

namespace plethys {

inline constexpr unsigned kMinPrecisionBits = 64;

/// Real value at a fixed MPFR precision. Binary operations require equal
/// precision on both sides; the second operand may instead be an exact
/// machine integer or double, which adopts the precision of the first.
/// All rounding is to nearest.
class BigFloat {
  public:
    explicit BigFloat(unsigned precision_bits);
    BigFloat(double value, unsigned precision_bits);
    BigFloat(const BigFloat& other);
    BigFloat(BigFloat&& other) noexcept;
    BigFloat& operator=(const BigFloat& other);
    BigFloat& operator=(BigFloat&& other) noexcept;
    ~BigFloat();

    static BigFloat from_rational(const Rational& q, unsigned precision_bits);
    static BigFloat from_string(const std::string& text, unsigned precision_bits);
    static BigFloat pi(unsigned precision_bits);
    static BigFloat log_of_uint(unsigned long k, unsigned precision_bits);

    unsigned precision_bits() const { return prec_; }
    double to_double() const;
    std::string to_string() const;  // enough digits to round-trip at this precision
    bool is_zero() const;
    int sign() const;  // -1, 0, +1

    BigFloat& operator+=(const BigFloat& rhs);
    BigFloat& operator-=(const BigFloat& rhs);
    BigFloat& operator*=(const BigFloat& rhs);
    BigFloat& operator/=(const BigFloat& rhs);
    BigFloat& operator+=(double rhs);
    BigFloat& operator-=(double rhs);
    BigFloat& operator*=(double rhs);
    BigFloat& operator/=(double rhs);
    BigFloat& operator*=(unsigned long rhs);
    BigFloat& operator/=(unsigned long rhs);
    BigFloat operator-() const;

    friend bool operator==(const BigFloat& a, const BigFloat& b);
    friend bool operator!=(const BigFloat& a, const BigFloat& b);
    friend bool operator<(const BigFloat& a, const BigFloat& b);
    friend bool operator<=(const BigFloat& a, const BigFloat& b);
    friend bool operator>(const BigFloat& a, const BigFloat& b);
    friend bool operator>=(const BigFloat& a, const BigFloat& b);
    friend bool operator<(const BigFloat& a, double b);
    friend bool operator<=(const BigFloat& a, double b);
    friend bool operator>(const BigFloat& a, double b);
    friend bool operator>=(const BigFloat& a, double b);

    friend BigFloat abs(const BigFloat& x);
    friend BigFloat sqrt(const BigFloat& x);
    friend BigFloat exp(const BigFloat& x);
    friend BigFloat log(const BigFloat& x);
    friend BigFloat log10(const BigFloat& x);
    friend BigFloat pow(const BigFloat& base, const BigFloat& exponent);
    friend BigFloat hypot(const BigFloat& x, const BigFloat& y);
    friend void sin_cos(BigFloat& sin_out, BigFloat& cos_out, const BigFloat& angle);

    mpfr_srcptr raw() const { return v_; }
    mpfr_ptr raw() { return v_; }

  private:
    static void check_same_precision(const BigFloat& a, const BigFloat& b);

    mpfr_t v_;
    unsigned prec_;
};

BigFloat operator+(BigFloat a, const BigFloat& b);
BigFloat operator-(BigFloat a, const BigFloat& b);
BigFloat operator*(BigFloat a, const BigFloat& b);
BigFloat operator/(BigFloat a, const BigFloat& b);
BigFloat operator+(BigFloat a, double b);
BigFloat operator-(BigFloat a, double b);
BigFloat operator*(BigFloat a, double b);
BigFloat operator/(BigFloat a, double b);
BigFloat operator*(BigFloat a, unsigned long b);
BigFloat operator/(BigFloat a, unsigned long b);

BigFloat max(const BigFloat& a, const BigFloat& b);

}  // namespace plethys

#endif

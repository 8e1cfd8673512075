/*
   Copyright 2026 the linfield authors

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

#ifndef LINFIELD_SCALAR_HPP
#define LINFIELD_SCALAR_HPP

#include <compare>
#include <string>

#include <gmpxx.h>

namespace linfield {

/// An exact rational number: element of the scalar field K.
///
/// Always kept canonical: gcd(|numerator|, denominator) = 1 and
/// denominator >= 1. All operations are exact.
class Scalar {
  public:
    Scalar() : v_(0) {}
    Scalar(long n) : v_(n) {}  // NOLINT: implicit by design, K contains the integers
    Scalar(long num, long den);

    /// Parses "p" or "p/q" with arbitrary-precision integers p, q.
    static Scalar from_string(const std::string& text);

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    Scalar inverse() const;
    Scalar pow(long e) const;

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }

    /// The numerator as an integer-valued Scalar.
    Scalar numerator() const;
    /// The denominator as a positive integer-valued Scalar.
    Scalar denominator() const;

    bool operator==(const Scalar& o) const { return v_ == o.v_; }
    std::strong_ordering operator<=>(const Scalar& o) const {
        const int c = cmp(v_, o.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    /// Canonical text form, "p" or "p/q".
    std::string str() const { return v_.get_str(); }

  private:
    explicit Scalar(mpq_class v) : v_(std::move(v)) {}

    mpq_class v_;
};

}  // namespace linfield

#endif  // LINFIELD_SCALAR_HPP

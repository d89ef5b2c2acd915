// Copyright 2026 The hopfkit Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace hopfkit {

/// Coefficient field selector. `prime == 0` selects the rationals, any
/// other value selects the prime field of that order.
struct Field {
  std::uint64_t prime = 0;

  static Field rationals() { return {}; }
  /// Throws InputError when `p` is not a prime in [2, 2^62).
  static Field prime_field(std::uint64_t p);
  /// Accepts "q" or "fp:<prime>". A bare "fp" reads the prime from the
  /// HOPFKIT_PRIME environment variable.
  static Field parse(std::string_view text);

  bool is_rational() const { return prime == 0; }
  std::string name() const;
  friend bool operator==(const Field&, const Field&) = default;
};

bool is_prime(std::uint64_t n);

/// Exact field element: a reduced rational, or a residue modulo a prime.
///
/// Rational scalars mix freely with prime-field scalars (the rational is
/// mapped into F_p first); mixing two different primes is an InputError.
/// Integer literals therefore work unchanged in both modes.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  explicit Scalar(mpq_class value);
  Scalar(long num, long den);

  static Scalar residue(std::uint64_t value, std::uint64_t prime);
  /// Parses "p/q" or "p" (q > 0) and maps the value into `field`.
  static Scalar parse(std::string_view text, Field field = {});

  bool is_zero() const;
  bool is_one() const;
  std::uint64_t prime() const { return prime_; }
  Field field() const { return Field{prime_}; }
  const mpq_class& rational() const { return q_; }
  std::uint64_t residue_value() const { return residue_; }

  /// Maps this value into `field`; rational to F_p needs an invertible
  /// denominator. F_p to rationals is not supported.
  Scalar to_field(Field field) const;

  /// Canonical text: "p/q" with q omitted when 1, or the residue in [0, p).
  std::string str() const;

  Scalar inverse() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  Scalar& operator/=(const Scalar& other);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

 private:
  // Brings both operands into a common field in place.
  void unify(Scalar& other);

  mpq_class q_;
  std::uint64_t prime_ = 0;
  std::uint64_t residue_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace hopfkit

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

#include "hopfkit/scalar.hpp"

#include <cstdlib>
#include <ostream>
#include <regex>

#include "hopfkit/errors.hpp"

namespace hopfkit {
namespace {

using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % p);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1U) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    exp >>= 1U;
  }
  return result;
}

std::uint64_t reduce(const mpz_class& z, std::uint64_t p) {
  mpz_class r = z % mpz_class(std::to_string(p));
  if (r < 0) r += mpz_class(std::to_string(p));
  return std::stoull(r.get_str());
}

constexpr std::uint64_t kMaxPrime = std::uint64_t{1} << 62;

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  // Deterministic witness set for 64-bit integers.
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Field Field::prime_field(std::uint64_t p) {
  if (p >= kMaxPrime || !is_prime(p)) {
    throw InputError("field modulus " + std::to_string(p) + " is not a supported prime");
  }
  return Field{p};
}

Field Field::parse(std::string_view text) {
  if (text == "q" || text == "Q") return rationals();
  if (text == "fp") {
    const char* env = std::getenv("HOPFKIT_PRIME");
    if (env == nullptr) throw InputError("--field fp requires HOPFKIT_PRIME to be set");
    text = env;
  } else if (text.substr(0, 3) == "fp:") {
    text.remove_prefix(3);
  } else {
    throw InputError("unknown field '" + std::string(text) + "' (expected q or fp:<prime>)");
  }
  if (text.empty() || text.find_first_not_of("0123456789") != std::string_view::npos ||
      text.size() > 19) {
    throw InputError("invalid prime modulus '" + std::string(text) + "'");
  }
  return prime_field(std::stoull(std::string(text)));
}

std::string Field::name() const {
  return is_rational() ? "q" : "fp:" + std::to_string(prime);
}

Scalar::Scalar(mpq_class value) : q_(std::move(value)) { q_.canonicalize(); }

Scalar::Scalar(long num, long den) : q_(num, den) {
  if (den == 0) throw InputError("zero denominator");
  q_.canonicalize();
}

Scalar Scalar::residue(std::uint64_t value, std::uint64_t prime) {
  Scalar s;
  s.prime_ = prime;
  s.residue_ = value % prime;
  return s;
}

Scalar Scalar::parse(std::string_view text, Field field) {
  static const std::regex kPattern(R"(^-?[0-9]+(/[0-9]+)?$)");
  std::string owned(text);
  if (!std::regex_match(owned, kPattern)) {
    throw InputError("malformed scalar '" + owned + "'");
  }
  mpq_class q;
  auto slash = owned.find('/');
  if (slash == std::string::npos) {
    q = mpq_class(mpz_class(owned));
  } else {
    mpz_class den(owned.substr(slash + 1));
    if (den == 0) throw InputError("zero denominator in scalar '" + owned + "'");
    q = mpq_class(mpz_class(owned.substr(0, slash)), den);
    q.canonicalize();
  }
  return Scalar(std::move(q)).to_field(field);
}

bool Scalar::is_zero() const { return prime_ == 0 ? q_ == 0 : residue_ == 0; }

bool Scalar::is_one() const { return prime_ == 0 ? q_ == 1 : residue_ == 1 % prime_; }

Scalar Scalar::to_field(Field field) const {
  if (field.prime == prime_) return *this;
  if (field.is_rational()) {
    throw CapabilityError("cannot lift an F_p element to the rationals");
  }
  if (prime_ != 0) {
    throw InputError("mixed prime fields " + std::to_string(prime_) + " and " +
                     std::to_string(field.prime));
  }
  std::uint64_t den = reduce(q_.get_den(), field.prime);
  if (den == 0) {
    throw CapabilityError("denominator of " + q_.get_str() + " vanishes modulo " +
                          std::to_string(field.prime));
  }
  std::uint64_t num = reduce(q_.get_num(), field.prime);
  return residue(mul_mod(num, pow_mod(den, field.prime - 2, field.prime), field.prime),
                 field.prime);
}

std::string Scalar::str() const {
  return prime_ == 0 ? q_.get_str() : std::to_string(residue_);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw InputError("division by zero");
  if (prime_ == 0) return Scalar(mpq_class(1) / q_);
  return residue(pow_mod(residue_, prime_ - 2, prime_), prime_);
}

Scalar Scalar::operator-() const {
  if (prime_ == 0) return Scalar(mpq_class(-q_));
  return residue(residue_ == 0 ? 0 : prime_ - residue_, prime_);
}

void Scalar::unify(Scalar& other) {
  if (prime_ == other.prime_) return;
  if (prime_ == 0) {
    *this = to_field(other.field());
  } else {
    other = other.to_field(field());
  }
}

Scalar& Scalar::operator+=(const Scalar& other) {
  if (prime_ == other.prime_) {
    if (prime_ == 0) {
      q_ += other.q_;
    } else {
      residue_ = (residue_ + other.residue_) % prime_;
    }
    return *this;
  }
  Scalar rhs = other;
  unify(rhs);
  return *this += rhs;
}

Scalar& Scalar::operator-=(const Scalar& other) { return *this += -other; }

Scalar& Scalar::operator*=(const Scalar& other) {
  if (prime_ == other.prime_) {
    if (prime_ == 0) {
      q_ *= other.q_;
    } else {
      residue_ = mul_mod(residue_, other.residue_, prime_);
    }
    return *this;
  }
  Scalar rhs = other;
  unify(rhs);
  return *this *= rhs;
}

Scalar& Scalar::operator/=(const Scalar& other) { return *this *= other.inverse(); }

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.prime_ == b.prime_) {
    return a.prime_ == 0 ? a.q_ == b.q_ : a.residue_ == b.residue_;
  }
  Scalar lhs = a;
  Scalar rhs = b;
  lhs.unify(rhs);
  return lhs == rhs;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace hopfkit

// Copyright 2026 The ncoh Authors
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
#include <ostream>
#include <string>
#include <string_view>

namespace ncoh {

// Two exact coefficient fields. Every algorithm in the library is a template
// over one of these; nothing ever touches floating point.

/// Arbitrary-precision rational number.
class Rational {
 public:
  Rational() = default;
  Rational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  static Rational from_rational(const mpq_class& q) { return Rational(q); }
  static Rational zero() { return Rational(); }
  static Rational one() { return Rational(1L); }
  static std::string field_name() { return "Q"; }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }
  const mpq_class& value() const { return q_; }
  std::string to_string() const { return q_.get_str(); }
  Rational inverse() const;

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ + b.q_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ - b.q_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ * b.q_)); }
  friend Rational operator/(const Rational& a, const Rational& b) { return a * b.inverse(); }
  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }

  /// Largest absolute numerator or denominator, used by the Q-vs-Fp audit.
  mpz_class height() const;

 private:
  mpq_class q_;
};

/// Residue modulo a word-sized prime. The modulus is process-wide and set once
/// per session (see FieldScope); all residues in flight share it.
class ModP {
 public:
  ModP() = default;
  ModP(long v) : v_(reduce(v)) {}  // NOLINT(google-explicit-constructor)

  static ModP from_rational(const mpq_class& q);
  static ModP zero() { return ModP(); }
  static ModP one() { return ModP(1L); }
  static std::string field_name() { return "Fp " + std::to_string(p_); }

  static std::uint32_t modulus() { return p_; }
  /// Throws Error(InvalidArgument) unless p is a prime below 2^31.
  static void set_modulus(std::uint32_t p);

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }
  std::uint32_t value() const { return v_; }
  /// Symmetric representative in (-p/2, p/2], for readable output.
  std::string to_string() const;
  ModP inverse() const;

  friend ModP operator+(ModP a, ModP b) { return raw(add(a.v_, b.v_)); }
  friend ModP operator-(ModP a, ModP b) { return raw(add(a.v_, p_ - b.v_)); }
  friend ModP operator*(ModP a, ModP b) {
    return raw(static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.v_) * b.v_ % p_));
  }
  friend ModP operator/(ModP a, ModP b) { return a * b.inverse(); }
  ModP operator-() const { return raw(v_ == 0 ? 0 : p_ - v_); }
  ModP& operator+=(ModP o) { return *this = *this + o; }
  ModP& operator-=(ModP o) { return *this = *this - o; }
  ModP& operator*=(ModP o) { return *this = *this * o; }
  friend bool operator==(ModP a, ModP b) { return a.v_ == b.v_; }

 private:
  static ModP raw(std::uint32_t v) {
    ModP r;
    r.v_ = v;
    return r;
  }
  static std::uint32_t add(std::uint32_t a, std::uint32_t b) {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  static std::uint32_t reduce(long v);

  std::uint32_t v_ = 0;
  static inline std::uint32_t p_ = 32003;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }
inline std::ostream& operator<<(std::ostream& os, const ModP& r) { return os << r.to_string(); }

bool is_prime(std::uint32_t n);

/// Which coefficient field a session runs over.
struct FieldSpec {
  enum class Kind { Rational, Prime };
  Kind kind = Kind::Prime;
  std::uint32_t prime = 32003;

  static FieldSpec rationals() { return {Kind::Rational, 0}; }
  static FieldSpec prime_field(std::uint32_t p) { return {Kind::Prime, p}; }

  /// Accepts "Q", "Fp 32003", "Fp:32003" and "Fp32003".
  static FieldSpec parse(std::string_view text);
  std::string to_string() const;
  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// Sets the ModP modulus for the lifetime of the scope and restores the
/// previous one afterwards.
class FieldScope {
 public:
  explicit FieldScope(const FieldSpec& spec);
  ~FieldScope();
  FieldScope(const FieldScope&) = delete;
  FieldScope& operator=(const FieldScope&) = delete;

 private:
  std::uint32_t saved_;
};

/// Runs `fn.template operator()<K>()` with K the scalar type for `spec`.
template <class Fn>
decltype(auto) with_field(const FieldSpec& spec, Fn&& fn) {
  FieldScope scope(spec);
  if (spec.kind == FieldSpec::Kind::Rational) return fn.template operator()<Rational>();
  return fn.template operator()<ModP>();
}

}  // namespace ncoh

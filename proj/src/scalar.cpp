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

#include "ncoh/scalar.hpp"

#include <charconv>
#include <stdexcept>

#include "ncoh/errors.hpp"

namespace ncoh {

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero in Q");
  return Rational(mpq_class(1 / q_));
}

mpz_class Rational::height() const {
  mpz_class n = abs(q_.get_num());
  const mpz_class& d = q_.get_den();
  return n > d ? n : d;
}

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

void ModP::set_modulus(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime(p))
    throw Error(ErrorKind::InvalidArgument, "modulus " + std::to_string(p) + " is not a prime below 2^31");
  p_ = p;
}

std::uint32_t ModP::reduce(long v) {
  long r = v % static_cast<long>(p_);
  if (r < 0) r += p_;
  return static_cast<std::uint32_t>(r);
}

ModP ModP::from_rational(const mpq_class& q) {
  mpz_class pz(p_);
  mpz_class num = q.get_num() % pz;
  mpz_class den = q.get_den() % pz;
  if (den == 0)
    throw Error(ErrorKind::InvalidArgument,
                "coefficient " + q.get_str() + " has a denominator divisible by " + std::to_string(p_));
  if (num < 0) num += pz;
  return ModP(num.get_si()) / ModP(den.get_si());
}

ModP ModP::inverse() const {
  if (v_ == 0) throw std::domain_error("division by zero in Fp");
  // extended Euclid on (v, p)
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = v_;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p_;
  return raw(static_cast<std::uint32_t>(t));
}

std::string ModP::to_string() const {
  if (v_ > p_ / 2) return "-" + std::to_string(p_ - v_);
  return std::to_string(v_);
}

FieldSpec FieldSpec::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text == "Q" || text == "QQ") return rationals();
  if (text.starts_with("Fp") || text.starts_with("GF")) {
    std::string_view rest = text.substr(2);
    if (!rest.empty() && rest.front() == ':') rest.remove_prefix(1);
    rest = trim(rest);
    std::uint32_t p = 0;
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), p);
    if (ec != std::errc() || ptr != rest.data() + rest.size() || rest.empty())
      throw Error(ErrorKind::InvalidArgument, "bad field modulus in '" + std::string(text) + "'");
    if (!is_prime(p) || p >= (1u << 31))
      throw Error(ErrorKind::InvalidArgument, "field modulus " + std::to_string(p) + " is not a prime below 2^31");
    return prime_field(p);
  }
  throw Error(ErrorKind::InvalidArgument, "unknown field '" + std::string(text) + "' (expected Q or Fp <prime>)");
}

std::string FieldSpec::to_string() const {
  return kind == Kind::Rational ? "Q" : "Fp " + std::to_string(prime);
}

FieldScope::FieldScope(const FieldSpec& spec) : saved_(ModP::modulus()) {
  if (spec.kind == FieldSpec::Kind::Prime) ModP::set_modulus(spec.prime);
}

FieldScope::~FieldScope() { ModP::set_modulus(saved_); }

}  // namespace ncoh

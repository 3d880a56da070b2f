#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

#include "jordanlab/errors.hpp"

namespace jordanlab {

/// The coefficient field: the rationals, or Z/p for an odd prime p.
/// Characteristic 2 is rejected at construction.
class Field {
 public:
  static Field rationals() { return Field(0); }

  /// Throws InputError unless p is an odd prime (3 <= p < 2^31).
  static Field prime(std::uint64_t p);

  bool is_rational() const { return modulus_ == 0; }
  bool is_prime() const { return modulus_ != 0; }

  /// Modulus for prime fields, 0 for the rationals.
  std::uint64_t modulus() const { return modulus_; }

  bool operator==(const Field&) const = default;

  std::string str() const;

 private:
  friend class Scalar;
  // Bypasses the primality check; for moduli already validated.
  static Field trusted(std::uint64_t p) { return Field(p); }

  explicit Field(std::uint64_t p) : modulus_(p) {}
  std::uint64_t modulus_;
};

/// An exact field element. Rationals are arbitrary-precision and always kept
/// in lowest terms with positive denominator (mpq invariant); prime-field
/// values are stored reduced to [0, p).
class Scalar {
 public:
  /// Rational zero. Prefer Scalar::zero(field) wherever a field is in scope.
  Scalar() : value_(mpq_class(0)) {}

  static Scalar zero(const Field& f);
  static Scalar one(const Field& f);
  static Scalar of_int(long n, const Field& f);

  /// num/den over the rationals; den must be nonzero.
  static Scalar rational(long num, long den);

  /// Parses "n" or "n/d" (base 10). Over a prime field the value is reduced
  /// mod p; a denominator divisible by p is an InputError.
  static Scalar parse(std::string_view text, const Field& f);

  Field field() const;

  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  /// Throws Error on zero.
  Scalar inverse() const;

  /// Same-field equality; comparing across fields is a FieldMismatchError.
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// "n" or "n/d" for rationals, the canonical representative for Z/p.
  std::string str() const;

  const mpq_class& rational_value() const;
  std::uint64_t prime_value() const;

 private:
  struct Fp {
    std::uint64_t v;
    std::uint64_t p;
  };

  explicit Scalar(mpq_class q) : value_(std::move(q)) {}
  Scalar(std::uint64_t v, std::uint64_t p) : value_(Fp{v, p}) {}

  static void check_same_field(const Scalar& a, const Scalar& b);

  std::variant<mpq_class, Fp> value_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace jordanlab

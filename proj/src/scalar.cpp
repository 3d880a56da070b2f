#include "jordanlab/scalar.hpp"

#include <ostream>

namespace jordanlab {

namespace {

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint64_t mod_add(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  std::uint64_t s = a + b;
  return s >= p ? s - p : s;
}

std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  // p < 2^31, so the product fits in 64 bits.
  return (a * b) % p;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
  // Extended Euclid on (a, p); a in [1, p).
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (p == 2) throw InputError("field characteristic 2 is not supported");
  if (p < 3 || p >= (1ull << 31) || !is_prime_u64(p)) {
    throw InputError("prime-field modulus must be an odd prime below 2^31, got " + std::to_string(p));
  }
  return Field(p);
}

std::string Field::str() const {
  return is_rational() ? "Q" : "F_" + std::to_string(modulus_);
}

Scalar Scalar::zero(const Field& f) {
  return f.is_rational() ? Scalar(mpq_class(0)) : Scalar(0, f.modulus());
}

Scalar Scalar::one(const Field& f) {
  return f.is_rational() ? Scalar(mpq_class(1)) : Scalar(1, f.modulus());
}

Scalar Scalar::of_int(long n, const Field& f) {
  if (f.is_rational()) return Scalar(mpq_class(n));
  std::uint64_t p = f.modulus();
  std::int64_t r = n % static_cast<std::int64_t>(p);
  if (r < 0) r += static_cast<std::int64_t>(p);
  return Scalar(static_cast<std::uint64_t>(r), p);
}

Scalar Scalar::rational(long num, long den) {
  if (den == 0) throw InputError("zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return Scalar(std::move(q));
}

Scalar Scalar::parse(std::string_view text, const Field& f) {
  mpq_class q;
  if (mpq_set_str(q.get_mpq_t(), std::string(text).c_str(), 10) != 0) {
    throw InputError("cannot parse scalar '" + std::string(text) + "'");
  }
  if (q.get_den() == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  q.canonicalize();
  if (f.is_rational()) return Scalar(std::move(q));

  std::uint64_t p = f.modulus();
  std::uint64_t num = mpz_fdiv_ui(q.get_num().get_mpz_t(), p);
  std::uint64_t den = mpz_fdiv_ui(q.get_den().get_mpz_t(), p);
  if (den == 0) {
    throw InputError("denominator of '" + std::string(text) + "' vanishes mod " + std::to_string(p));
  }
  return Scalar(mod_mul(num, mod_inverse(den, p), p), p);
}

Field Scalar::field() const {
  if (std::holds_alternative<mpq_class>(value_)) return Field::rationals();
  return Field::trusted(std::get<Fp>(value_).p);
}

void Scalar::check_same_field(const Scalar& a, const Scalar& b) {
  bool ok = a.value_.index() == b.value_.index();
  if (ok && std::holds_alternative<Fp>(a.value_)) {
    ok = std::get<Fp>(a.value_).p == std::get<Fp>(b.value_).p;
  }
  if (!ok) {
    throw FieldMismatchError("scalar fields differ: " + a.field().str() + " vs " + b.field().str());
  }
}

bool Scalar::is_zero() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return sgn(*q) == 0;
  return std::get<Fp>(value_).v == 0;
}

bool Scalar::is_one() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return *q == 1;
  return std::get<Fp>(value_).v == 1;
}

Scalar Scalar::operator-() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return Scalar(mpq_class(-*q));
  const Fp& a = std::get<Fp>(value_);
  return Scalar(a.v == 0 ? 0 : a.p - a.v, a.p);
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same_field(*this, o);
  if (const auto* q = std::get_if<mpq_class>(&value_)) {
    return Scalar(mpq_class(*q + std::get<mpq_class>(o.value_)));
  }
  const Fp& a = std::get<Fp>(value_);
  const Fp& b = std::get<Fp>(o.value_);
  return Scalar(mod_add(a.v, b.v, a.p), a.p);
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  check_same_field(*this, o);
  if (const auto* q = std::get_if<mpq_class>(&value_)) {
    return Scalar(mpq_class(*q * std::get<mpq_class>(o.value_)));
  }
  const Fp& a = std::get<Fp>(value_);
  const Fp& b = std::get<Fp>(o.value_);
  return Scalar(mod_mul(a.v, b.v, a.p), a.p);
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error("division by zero");
  if (const auto* q = std::get_if<mpq_class>(&value_)) {
    return Scalar(mpq_class(1 / *q));
  }
  const Fp& a = std::get<Fp>(value_);
  return Scalar(mod_inverse(a.v, a.p), a.p);
}

bool Scalar::operator==(const Scalar& o) const {
  check_same_field(*this, o);
  if (const auto* q = std::get_if<mpq_class>(&value_)) {
    return *q == std::get<mpq_class>(o.value_);
  }
  return std::get<Fp>(value_).v == std::get<Fp>(o.value_).v;
}

std::string Scalar::str() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return q->get_str();
  return std::to_string(std::get<Fp>(value_).v);
}

const mpq_class& Scalar::rational_value() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return *q;
  throw FieldMismatchError("not a rational scalar");
}

std::uint64_t Scalar::prime_value() const {
  if (const auto* fp = std::get_if<Fp>(&value_)) return fp->v;
  throw FieldMismatchError("not a prime-field scalar");
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace jordanlab

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace matquot {

// Either the rationals or a prime field GF(p).
class Field {
 public:
  static Field rationals() { return Field(0); }
  static Field prime(std::int64_t p);

  bool is_rational() const { return p_ == 0; }
  std::int64_t characteristic() const { return p_; }

  bool operator==(const Field& other) const { return p_ == other.p_; }
  bool operator!=(const Field& other) const { return p_ != other.p_; }

 private:
  explicit Field(std::int64_t p) : p_(p) {}
  std::int64_t p_;
};

// An exact field element: an arbitrary-precision rational in canonical
// reduced form, or a residue mod p. Elements of different fields never mix.
class Scalar {
 public:
  Scalar() : field_(Field::rationals()) {}
  static Scalar zero(const Field& f);
  static Scalar one(const Field& f);
  static Scalar from_int(const Field& f, std::int64_t v);
  static Scalar from_mpq(mpq_class q);
  // Accepts "a" or "a/b"; for GF(p) the value is reduced mod p.
  static Scalar parse(const Field& f, const std::string& text);

  const Field& field() const { return field_; }
  bool is_zero() const;
  const mpq_class& rational() const { return q_; }
  std::int64_t residue() const { return r_; }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  void check_same(const Scalar& o) const;

  Field field_;
  mpq_class q_;        // rational payload
  std::int64_t r_ = 0; // GF(p) payload, in [0, p)
};

}  // namespace matquot

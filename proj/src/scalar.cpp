#include "matquot/scalar.hpp"

#include "matquot/errors.hpp"

namespace matquot {

namespace {

std::int64_t mod_pos(std::int64_t v, std::int64_t p) {
  std::int64_t r = v % p;
  return r < 0 ? r + p : r;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
  std::int64_t t = 0, new_t = 1, r = p, new_r = mod_pos(a, p);
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  if (r != 1) throw InvalidInputs("element has no inverse mod p");
  return mod_pos(t, p);
}

}  // namespace

Field Field::prime(std::int64_t p) {
  if (p < 2) throw InvalidInputs("field characteristic must be a prime >= 2");
  for (std::int64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) throw InvalidInputs(std::to_string(p) + " is not prime");
  }
  if (p > (std::int64_t{1} << 31)) throw InvalidInputs("prime fields supported up to 2^31");
  return Field(p);
}

Scalar Scalar::zero(const Field& f) { return from_int(f, 0); }
Scalar Scalar::one(const Field& f) { return from_int(f, 1); }

Scalar Scalar::from_int(const Field& f, std::int64_t v) {
  Scalar s;
  s.field_ = f;
  if (f.is_rational()) {
    s.q_ = mpq_class(static_cast<long>(v));
  } else {
    s.r_ = mod_pos(v, f.characteristic());
  }
  return s;
}

Scalar Scalar::from_mpq(mpq_class q) {
  Scalar s;
  s.field_ = Field::rationals();
  q.canonicalize();
  s.q_ = std::move(q);
  return s;
}

Scalar Scalar::parse(const Field& f, const std::string& text) {
  if (text.empty()) throw ParseError("empty scalar");
  mpq_class q;
  if (q.set_str(text, 10) != 0) throw ParseError("bad scalar '" + text + "'");
  q.canonicalize();
  if (f.is_rational()) return from_mpq(std::move(q));
  const std::int64_t p = f.characteristic();
  if (!q.get_den().fits_slong_p() || !q.get_num().fits_slong_p()) {
    // Reduce num and den mod p first.
    const mpz_class num = q.get_num() % p;
    const mpz_class den = q.get_den() % p;
    const std::int64_t n = num.get_si(), d = den.get_si();
    if (mod_pos(d, p) == 0) throw ParseError("denominator divisible by p");
    Scalar s;
    s.field_ = f;
    s.r_ = mod_pos(n, p) * mod_inverse(d, p) % p;
    return s;
  }
  const std::int64_t n = q.get_num().get_si(), d = q.get_den().get_si();
  if (mod_pos(d, p) == 0) throw ParseError("denominator divisible by p");
  Scalar s;
  s.field_ = f;
  s.r_ = mod_pos(n, p) * mod_inverse(d, p) % p;
  return s;
}

bool Scalar::is_zero() const {
  return field_.is_rational() ? q_ == 0 : r_ == 0;
}

void Scalar::check_same(const Scalar& o) const {
  if (field_ != o.field_) throw FieldMismatch();
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same(o);
  Scalar s;
  s.field_ = field_;
  if (field_.is_rational()) {
    s.q_ = q_ + o.q_;
  } else {
    s.r_ = (r_ + o.r_) % field_.characteristic();
  }
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_same(o);
  Scalar s;
  s.field_ = field_;
  if (field_.is_rational()) {
    s.q_ = q_ - o.q_;
  } else {
    s.r_ = mod_pos(r_ - o.r_, field_.characteristic());
  }
  return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same(o);
  Scalar s;
  s.field_ = field_;
  if (field_.is_rational()) {
    s.q_ = q_ * o.q_;
  } else {
    s.r_ = (r_ * o.r_) % field_.characteristic();
  }
  return s;
}

Scalar Scalar::operator/(const Scalar& o) const {
  check_same(o);
  if (o.is_zero()) throw InvalidInputs("division by zero");
  Scalar s;
  s.field_ = field_;
  if (field_.is_rational()) {
    s.q_ = q_ / o.q_;
  } else {
    s.r_ = (r_ * mod_inverse(o.r_, field_.characteristic())) % field_.characteristic();
  }
  return s;
}

Scalar Scalar::operator-() const {
  Scalar s;
  s.field_ = field_;
  if (field_.is_rational()) {
    s.q_ = -q_;
  } else {
    s.r_ = mod_pos(-r_, field_.characteristic());
  }
  return s;
}

bool Scalar::operator==(const Scalar& o) const {
  if (field_ != o.field_) return false;
  return field_.is_rational() ? q_ == o.q_ : r_ == o.r_;
}

std::string Scalar::to_string() const {
  if (field_.is_rational()) return q_.get_str();
  return std::to_string(r_);
}

}  // namespace matquot

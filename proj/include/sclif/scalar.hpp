#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "sclif/error.hpp"

namespace sclif {

// The two coefficient fields. Real is modelled by Q, Complex by Q(i).
enum class Field : std::uint8_t { Real, Complex };

const char* field_name(Field f);

// Exact element of Q or Q(i). Both parts are kept canonical by GMP; a Real
// scalar always has a zero imaginary part. Mixing fields in arithmetic is an
// error rather than an implicit promotion.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value, Field field = Field::Real) : re_(value), field_(field) {}
  explicit Scalar(mpq_class re, Field field = Field::Real);
  Scalar(mpq_class re, mpq_class im);

  static Scalar zero(Field f) { return Scalar(0L, f); }
  static Scalar one(Field f) { return Scalar(1L, f); }
  static Scalar imag_unit() { return Scalar(mpq_class(0), mpq_class(1)); }
  static Scalar rational(long num, long den, Field f = Field::Real);

  // Accepts "n", "p/q", "a+b*i", "b*i", "i", "-i" (the last forms only for
  // Complex).
  static Scalar parse(std::string_view text, Field f);

  Field field() const noexcept { return field_; }
  const mpq_class& re() const noexcept { return re_; }
  const mpq_class& im() const noexcept { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  Scalar inverse() const;

  // Rewrites the scalar into the other field. Complex -> Real requires a zero
  // imaginary part.
  Scalar in_field(Field f) const;

  std::string str() const;

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.field_ == b.field_ && a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

 private:
  void check_field(const Scalar& o) const;

  mpq_class re_;
  mpq_class im_;
  Field field_ = Field::Real;
};

inline Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
inline Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
inline Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
inline Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

std::ostream& operator<<(std::ostream& os, const Scalar& s);

enum class ArithOp { Add, Sub, Mul, Div };

Scalar scalar_arith(const Scalar& a, const Scalar& b, ArithOp op);
Scalar conjugate(const Scalar& a);

// Square root inside the scalar's own field, when one exists.
bool exact_sqrt(const Scalar& a, Scalar& root);

}  // namespace sclif

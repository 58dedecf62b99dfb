#include "sclif/scalar.hpp"

#include <cctype>
#include <ostream>

namespace sclif {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::InvalidBlade: return "InvalidBlade";
    case Errc::TooLarge: return "TooLarge";
    case Errc::AlgebraMismatch: return "AlgebraMismatch";
    case Errc::NotIdempotent: return "NotIdempotent";
    case Errc::DimMismatch: return "DimMismatch";
    case Errc::UnrecognizedBasic: return "UnrecognizedBasic";
    case Errc::UnknownTable: return "UnknownTable";
    case Errc::Syntax: return "SyntaxError";
    case Errc::GeneratorOutOfRange: return "GeneratorOutOfRange";
    case Errc::OutOfScope: return "OutOfScope";
    case Errc::UnknownCheck: return "UnknownCheck";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Error";
}

const char* field_name(Field f) { return f == Field::Real ? "real" : "complex"; }

Scalar::Scalar(mpq_class re, Field field) : re_(std::move(re)), field_(field) {
  re_.canonicalize();
}

Scalar::Scalar(mpq_class re, mpq_class im)
    : re_(std::move(re)), im_(std::move(im)), field_(Field::Complex) {
  re_.canonicalize();
  im_.canonicalize();
}

Scalar Scalar::rational(long num, long den, Field f) {
  if (den == 0) throw Error(Errc::DivisionByZero, "zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return Scalar(q, f);
}

void Scalar::check_field(const Scalar& o) const {
  if (field_ != o.field_)
    throw Error(Errc::FieldMismatch, std::string("cannot combine ") + field_name(field_) +
                                         " and " + field_name(o.field_) + " scalars");
}

Scalar Scalar::operator-() const {
  Scalar r(*this);
  r.re_ = -r.re_;
  if (field_ == Field::Complex) r.im_ = -r.im_;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_field(o);
  re_ += o.re_;
  if (field_ == Field::Complex) im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_field(o);
  re_ -= o.re_;
  if (field_ == Field::Complex) im_ -= o.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_field(o);
  if (field_ == Field::Real) {
    re_ *= o.re_;
    return *this;
  }
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero");
  if (sgn(im_) == 0) return Scalar(mpq_class(1) / re_, field_);
  mpq_class norm = re_ * re_ + im_ * im_;
  return Scalar(mpq_class(re_ / norm), mpq_class(-im_ / norm));
}

Scalar& Scalar::operator/=(const Scalar& o) {
  check_field(o);
  if (o.is_zero()) throw Error(Errc::DivisionByZero, "division by zero");
  if (sgn(o.im_) == 0) {
    re_ /= o.re_;
    if (field_ == Field::Complex) im_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

Scalar Scalar::in_field(Field f) const {
  if (f == field_) return *this;
  if (f == Field::Complex) return Scalar(re_, mpq_class(0));
  if (sgn(im_) != 0) throw Error(Errc::FieldMismatch, "complex scalar " + str() + " is not real");
  return Scalar(re_, Field::Real);
}

namespace {

std::string rat_str(const mpq_class& q) { return q.get_str(); }

// Coefficient of i: "i", "-i", "3*i", "3/2*i".
std::string imag_str(const mpq_class& q) {
  if (q == 1) return "i";
  if (q == -1) return "-i";
  return rat_str(q) + "*i";
}

}  // namespace

std::string Scalar::str() const {
  if (sgn(im_) == 0) return rat_str(re_);
  if (sgn(re_) == 0) return imag_str(im_);
  std::string s = rat_str(re_);
  if (sgn(im_) > 0) return s + "+" + imag_str(im_);
  return s + "-" + imag_str(mpq_class(-im_));
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

Scalar Scalar::parse(std::string_view text, Field f) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  if (t.empty()) throw ParseError(Errc::Syntax, 0, "empty scalar");

  mpq_class re, im;
  std::size_t pos = 0;
  bool any = false;
  while (pos < t.size()) {
    int sign = 1;
    if (t[pos] == '+' || t[pos] == '-') {
      sign = t[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (any) {
      throw ParseError(Errc::Syntax, pos, "expected '+' or '-'");
    }
    if (pos >= t.size()) throw ParseError(Errc::Syntax, pos, "dangling sign");

    mpq_class value(1);
    bool have_number = false;
    if (std::isdigit(static_cast<unsigned char>(t[pos]))) {
      std::size_t start = pos;
      while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) ++pos;
      mpz_class num(t.substr(start, pos - start));
      mpz_class den(1);
      if (pos < t.size() && t[pos] == '/') {
        std::size_t dstart = ++pos;
        while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) ++pos;
        if (dstart == pos) throw ParseError(Errc::Syntax, pos, "missing denominator");
        den = mpz_class(t.substr(dstart, pos - dstart));
        if (den == 0) throw Error(Errc::DivisionByZero, "zero denominator in '" + t + "'");
      }
      value = mpq_class(num, den);
      value.canonicalize();
      have_number = true;
    }
    bool imaginary = false;
    if (pos < t.size() && (t[pos] == '*' || t[pos] == 'i')) {
      if (t[pos] == '*') {
        if (!have_number) throw ParseError(Errc::Syntax, pos, "unexpected '*'");
        ++pos;
      }
      if (pos >= t.size() || t[pos] != 'i') throw ParseError(Errc::Syntax, pos, "expected 'i'");
      ++pos;
      imaginary = true;
    } else if (!have_number) {
      throw ParseError(Errc::Syntax, pos, "expected a number");
    }
    if (imaginary) {
      if (f != Field::Complex)
        throw ParseError(Errc::FieldMismatch, pos, "imaginary unit in a real scalar");
      im += sign * value;
    } else {
      re += sign * value;
    }
    any = true;
  }
  if (f == Field::Real) return Scalar(re, Field::Real);
  return Scalar(re, im);
}

Scalar scalar_arith(const Scalar& a, const Scalar& b, ArithOp op) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    case ArithOp::Div: return a / b;
  }
  throw Error(Errc::InvalidArgument, "unknown arithmetic op");
}

Scalar conjugate(const Scalar& a) {
  if (a.field() == Field::Real) return a;
  return Scalar(a.re(), mpq_class(-a.im()));
}

namespace {

bool rational_sqrt(const mpq_class& q, mpq_class& root) {
  if (sgn(q) < 0) return false;
  mpz_class n = q.get_num(), d = q.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  root = mpq_class(rn, rd);
  root.canonicalize();
  return true;
}

}  // namespace

bool exact_sqrt(const Scalar& a, Scalar& root) {
  if (a.field() == Field::Real) {
    mpq_class r;
    if (!rational_sqrt(a.re(), r)) return false;
    root = Scalar(r, Field::Real);
    return true;
  }
  if (a.is_zero()) {
    root = Scalar::zero(Field::Complex);
    return true;
  }
  // (x + y i)^2 = a + b i  =>  x^2 = (a + |z|) / 2, y = b / (2x).
  mpq_class norm2 = a.re() * a.re() + a.im() * a.im();
  mpq_class modulus;
  if (!rational_sqrt(norm2, modulus)) return false;
  mpq_class x2 = (a.re() + modulus) / 2;
  mpq_class x;
  if (sgn(x2) == 0) {
    // purely negative real: sqrt = i * sqrt(-a)
    mpq_class y;
    if (!rational_sqrt(mpq_class(-a.re()), y)) return false;
    root = Scalar(mpq_class(0), y);
    return true;
  }
  if (!rational_sqrt(x2, x)) return false;
  mpq_class y = a.im() / (2 * x);
  root = Scalar(x, y);
  return true;
}

}  // namespace sclif

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sclif/scalar.hpp"

namespace sclif {

// Dense univariate polynomial over Q or Q(i); coefficients low degree first,
// no trailing zeros.
class Polynomial {
 public:
  explicit Polynomial(Field field = Field::Real) : field_(field) {}
  Polynomial(std::vector<Scalar> coeffs, Field field);

  static Polynomial constant(const Scalar& c);
  // t - root
  static Polynomial linear_factor(const Scalar& root);

  Field field() const noexcept { return field_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Scalar>& coeffs() const noexcept { return c_; }
  Scalar coeff(int i) const;
  Scalar leading() const { return coeff(degree()); }

  Polynomial monic() const;
  Polynomial derivative() const;
  Scalar evaluate(const Scalar& x) const;

  std::string str(const std::string& var = "t") const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.field_ == b.field_ && a.c_ == b.c_;
  }

 private:
  void trim();

  std::vector<Scalar> c_;
  Field field_;
};

Polynomial operator+(const Polynomial& a, const Polynomial& b);
Polynomial operator-(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Polynomial& a, const Polynomial& b);

struct DivMod {
  Polynomial quotient;
  Polynomial remainder;
};
DivMod divmod(const Polynomial& a, const Polynomial& b);

// Monic gcd.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

// s*a + t*b = g with g the monic gcd.
struct Bezout {
  Polynomial g, s, t;
};
Bezout ext_gcd(const Polynomial& a, const Polynomial& b);

// p / gcd(p, p')
Polynomial squarefree_part(const Polynomial& p);

// Distinct roots lying in the polynomial's own field (Q or Q(i)). Candidates
// come from floating-point root isolation and every returned root is checked
// exactly.
std::vector<Scalar> roots_in_field(const Polynomial& p);

// A monic quadratic factor of p over its field, when one exists and p has
// degree at least 3. Found the same way as roots_in_field.
std::optional<Polynomial> quadratic_factor(const Polynomial& p);

// Multiplicity of root in p (0 if not a root).
int root_multiplicity(const Polynomial& p, const Scalar& root);

}  // namespace sclif

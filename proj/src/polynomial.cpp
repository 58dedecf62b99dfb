#include "sclif/polynomial.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <complex>
#include <optional>
#include <sstream>

namespace sclif {

Polynomial::Polynomial(std::vector<Scalar> coeffs, Field field) : c_(std::move(coeffs)), field_(field) {
  for (const auto& c : c_)
    if (c.field() != field_) throw Error(Errc::FieldMismatch, "polynomial coefficient field");
  trim();
}

Polynomial Polynomial::constant(const Scalar& c) { return Polynomial({c}, c.field()); }

Polynomial Polynomial::linear_factor(const Scalar& root) {
  return Polynomial({-root, Scalar::one(root.field())}, root.field());
}

void Polynomial::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Scalar Polynomial::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return Scalar::zero(field_);
  return c_[static_cast<std::size_t>(i)];
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  Scalar inv = leading().inverse();
  std::vector<Scalar> out;
  out.reserve(c_.size());
  for (const auto& c : c_) out.push_back(c * inv);
  return Polynomial(std::move(out), field_);
}

Polynomial Polynomial::derivative() const {
  std::vector<Scalar> out;
  for (std::size_t i = 1; i < c_.size(); ++i) out.push_back(c_[i] * Scalar(static_cast<long>(i), field_));
  return Polynomial(std::move(out), field_);
}

Scalar Polynomial::evaluate(const Scalar& x) const {
  Scalar acc = Scalar::zero(field_);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

std::string Polynomial::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    Scalar c = coeff(i);
    if (c.is_zero()) continue;
    bool negative = c.is_real() && sgn(c.re()) < 0;
    Scalar mag = negative ? -c : c;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    bool complex_coeff = !mag.is_real() && sgn(mag.re()) != 0;
    std::string ms = complex_coeff ? "(" + mag.str() + ")" : mag.str();
    if (i == 0) {
      os << ms;
      continue;
    }
    if (!mag.is_one()) os << ms << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  if (a.field() != b.field()) throw Error(Errc::FieldMismatch, "polynomial fields");
  std::size_t n = std::max(a.coeffs().size(), b.coeffs().size());
  std::vector<Scalar> out(n, Scalar::zero(a.field()));
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) out[i] += a.coeffs()[i];
  for (std::size_t i = 0; i < b.coeffs().size(); ++i) out[i] += b.coeffs()[i];
  return Polynomial(std::move(out), a.field());
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  std::vector<Scalar> neg;
  for (const auto& c : b.coeffs()) neg.push_back(-c);
  return a + Polynomial(std::move(neg), b.field());
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.field() != b.field()) throw Error(Errc::FieldMismatch, "polynomial fields");
  if (a.is_zero() || b.is_zero()) return Polynomial(a.field());
  std::vector<Scalar> out(a.coeffs().size() + b.coeffs().size() - 1, Scalar::zero(a.field()));
  for (std::size_t i = 0; i < a.coeffs().size(); ++i)
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) out[i + j] += a.coeffs()[i] * b.coeffs()[j];
  return Polynomial(std::move(out), a.field());
}

DivMod divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw Error(Errc::DivisionByZero, "polynomial division by zero");
  Field f = a.field();
  std::vector<Scalar> rem = a.coeffs();
  int db = b.degree();
  int dq = a.degree() - db;
  if (dq < 0) return {Polynomial(f), a};
  std::vector<Scalar> quo(static_cast<std::size_t>(dq + 1), Scalar::zero(f));
  Scalar inv = b.leading().inverse();
  for (int k = dq; k >= 0; --k) {
    Scalar c = rem[static_cast<std::size_t>(k + db)] * inv;
    quo[static_cast<std::size_t>(k)] = c;
    if (c.is_zero()) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k + j)] -= c * b.coeffs()[static_cast<std::size_t>(j)];
  }
  return {Polynomial(std::move(quo), f), Polynomial(std::move(rem), f)};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) { return ext_gcd(a, b).g; }

Bezout ext_gcd(const Polynomial& a, const Polynomial& b) {
  Field f = a.field();
  Polynomial r0 = a, r1 = b;
  Polynomial s0 = Polynomial::constant(Scalar::one(f)), s1(f);
  Polynomial t0(f), t1 = Polynomial::constant(Scalar::one(f));
  while (!r1.is_zero()) {
    DivMod qr = divmod(r0, r1);
    Polynomial r2 = qr.remainder;
    Polynomial s2 = s0 - qr.quotient * s1;
    Polynomial t2 = t0 - qr.quotient * t1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Polynomial lead = Polynomial::constant(r0.leading().inverse());
  return {r0 * lead, s0 * lead, t0 * lead};
}

Polynomial squarefree_part(const Polynomial& p) {
  if (p.degree() <= 0) return p.monic();
  Polynomial g = gcd(p, p.derivative());
  return divmod(p, g).quotient.monic();
}

int root_multiplicity(const Polynomial& p, const Scalar& root) {
  int m = 0;
  Polynomial cur = p;
  Polynomial lin = Polynomial::linear_factor(root);
  while (!cur.is_zero() && cur.degree() >= 1) {
    DivMod qr = divmod(cur, lin);
    if (!qr.remainder.is_zero()) break;
    cur = qr.quotient;
    ++m;
  }
  return m;
}

namespace {

constexpr int kMaxNumericDegree = 64;

// Eigenvalues of the companion matrix of the monic integral polynomial
// L^n p(s / L), where L is the lcm of the coefficient denominators of p.
struct ScaledRoots {
  mpz_class scale;
  std::vector<std::complex<double>> values;
};

std::optional<ScaledRoots> scaled_roots(const Polynomial& monic_p) {
  const int n = monic_p.degree();
  if (n < 1 || n > kMaxNumericDegree) return std::nullopt;
  ScaledRoots out;
  out.scale = 1;
  for (const auto& c : monic_p.coeffs()) {
    mpz_lcm(out.scale.get_mpz_t(), out.scale.get_mpz_t(), c.re().get_den_mpz_t());
    mpz_lcm(out.scale.get_mpz_t(), out.scale.get_mpz_t(), c.im().get_den_mpz_t());
  }
  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) {
    const Scalar& c = monic_p.coeffs()[static_cast<std::size_t>(i)];
    companion(i, n - 1) = std::complex<double>(-c.re().get_d(), -c.im().get_d());
  }
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
  if (solver.info() != Eigen::Success) return std::nullopt;
  const double s = out.scale.get_d();
  for (int i = 0; i < n; ++i) out.values.push_back(solver.eigenvalues()(i) * s);
  return out;
}

bool representable(std::complex<double> z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag()) && std::abs(z) < 4.0e15;
}

// Nearest (Gaussian) integer to z, divided by d.
Scalar rounded_over(std::complex<double> z, const mpz_class& d, Field f) {
  mpq_class re(mpz_class(static_cast<long>(std::llround(z.real()))), d);
  re.canonicalize();
  if (f == Field::Real) return Scalar(re, Field::Real);
  mpq_class im(mpz_class(static_cast<long>(std::llround(z.imag()))), d);
  im.canonicalize();
  return Scalar(re, im);
}

}  // namespace

std::vector<Scalar> roots_in_field(const Polynomial& p) {
  std::vector<Scalar> roots;
  if (p.degree() < 1) return roots;
  Polynomial sf = squarefree_part(p);
  auto sr = scaled_roots(sf);
  if (!sr) return roots;
  for (const auto& z : sr->values) {
    if (!representable(z)) continue;
    Scalar cand = rounded_over(z, sr->scale, sf.field());
    if (!sf.evaluate(cand).is_zero()) continue;
    bool seen = false;
    for (const auto& x : roots) seen = seen || x == cand;
    if (!seen) roots.push_back(cand);
  }
  return roots;
}

std::optional<Polynomial> quadratic_factor(const Polynomial& p) {
  if (p.degree() < 3) return std::nullopt;
  Polynomial sf = squarefree_part(p);
  if (sf.degree() < 2) return std::nullopt;
  auto sr = scaled_roots(sf);
  if (!sr) return std::nullopt;
  const Field f = sf.field();
  const mpz_class s2 = sr->scale * sr->scale;
  const auto& z = sr->values;
  for (std::size_t i = 0; i < z.size(); ++i)
    for (std::size_t j = i + 1; j < z.size(); ++j) {
      std::complex<double> sum = z[i] + z[j], prod = z[i] * z[j];
      if (!representable(sum) || !representable(prod)) continue;
      if (f == Field::Real && (std::abs(sum.imag()) > 1e-6 || std::abs(prod.imag()) > 1e-6)) continue;
      Polynomial q({rounded_over(prod, s2, f), -rounded_over(sum, sr->scale, f), Scalar::one(f)}, f);
      if (divmod(sf, q).remainder.is_zero()) return q;
    }
  return std::nullopt;
}

}  // namespace sclif

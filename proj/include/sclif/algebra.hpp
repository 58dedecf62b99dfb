#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sclif/blade.hpp"
#include "sclif/linalg.hpp"
#include "sclif/scalar.hpp"

namespace sclif {

// The two grading shifts of graded modules: suspension sigma (pure regrading)
// and parity change pi (regrading plus a sign on the odd action).
enum class Functor { Sigma, Pi };

const char* functor_name(Functor s);

// Element of a specific superalgebra: a sparse combination of its basis.
class Element {
 public:
  Element() = default;
  Element(std::uint64_t algebra_id, Field field, SparseVec terms);

  std::uint64_t algebra_id() const noexcept { return algebra_; }
  Field field() const noexcept { return field_; }
  const SparseVec& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Scalar coeff(std::uint32_t index) const { return sparse::get(terms_, index, field_); }

  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element& operator*=(const Scalar& s);

  friend bool operator==(const Element& a, const Element& b) {
    return a.algebra_ == b.algebra_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

 private:
  void check_same(const Element& o) const;

  std::uint64_t algebra_ = 0;
  Field field_ = Field::Real;
  SparseVec terms_;
};

inline Element operator+(Element a, const Element& b) { return a += b; }
inline Element operator-(Element a, const Element& b) { return a -= b; }
inline Element operator*(const Scalar& s, Element a) { return a *= s; }
inline Element operator-(Element a) { return a *= -Scalar::one(a.field()); }

// Shared immutable description of a superalgebra. Two tiers: Monomial (a
// Clifford signature, optionally hatted, where basis products are sign times
// basis element and are never tabulated) and General (explicit structure
// constants).
struct AlgebraData {
  std::uint64_t id = 0;
  std::string label;
  Field field = Field::Real;
  std::size_t dim = 0;
  std::vector<std::uint8_t> parity;

  std::optional<Signature> signature;  // Monomial tier
  bool hatted = false;

  std::vector<SparseVec> table;  // General tier, row-major dim x dim
  SparseVec unit;

  std::vector<SparseVec> generators;
  std::vector<std::string> basis_labels;

  // Basis expressed in a parent algebra (corners, subalgebras).
  std::uint64_t parent_id = 0;
  std::vector<SparseVec> embedding;
};

class SuperAlgebra {
 public:
  SuperAlgebra() = default;

  static SuperAlgebra monomial(Signature sig, bool hatted, std::string label);
  // Takes ownership of a General-tier description; id is assigned here.
  static SuperAlgebra general(AlgebraData data);

  std::uint64_t id() const { return d_->id; }
  const std::string& label() const { return d_->label; }
  Field field() const { return d_->field; }
  std::size_t dim() const { return d_->dim; }
  int parity(std::size_t i) const { return d_->parity[i]; }
  const std::vector<std::uint8_t>& parities() const { return d_->parity; }
  // (dim A_0, dim A_1)
  std::pair<std::size_t, std::size_t> graded_dims() const;

  bool is_monomial() const { return d_->signature.has_value(); }
  bool is_hatted() const { return d_->hatted; }
  const Signature* signature() const { return d_->signature ? &*d_->signature : nullptr; }
  const AlgebraData& data() const { return *d_; }

  Element zero() const { return Element(id(), field(), {}); }
  Element unit() const;
  Element basis(std::size_t i) const;
  Element scalar(const Scalar& s) const;
  Element element(SparseVec terms) const;
  Element from_dense(const std::vector<Scalar>& coords) const;

  Element mul(const Element& x, const Element& y) const;
  SparseVec basis_product(std::size_t i, std::size_t j) const;

  bool owns(const Element& x) const { return x.algebra_id() == id(); }
  void check_owns(const Element& x) const;

  // 0 or 1; nullopt when the element mixes parities. Zero counts as even.
  std::optional<int> parity_of(const Element& x) const;
  bool is_homogeneous(const Element& x) const { return parity_of(x).has_value(); }
  Element even_part(const Element& x) const;
  Element odd_part(const Element& x) const;

  const std::vector<Element>& generators() const { return generators_; }
  std::string basis_label(std::size_t i) const;
  std::string format(const Element& x) const;

  // Coordinates in the parent algebra when this algebra was cut out of one.
  std::optional<Element> embed(const Element& x, const SuperAlgebra& parent) const;

 private:
  explicit SuperAlgebra(std::shared_ptr<const AlgebraData> d);

  std::shared_ptr<const AlgebraData> d_;
  std::vector<Element> generators_;
};

Element mul(const SuperAlgebra& A, const Element& x, const Element& y);
Element power(const SuperAlgebra& A, const Element& x, int k);

// Constructors for the algebras of the classification.
SuperAlgebra clifford_real(int p, int q, int r);
SuperAlgebra clifford_complex(int p, int q);
SuperAlgebra clifford(const Signature& sig, std::string label = {});
SuperAlgebra ground_field(Field f);

// A ⊗̂ B with basis index i + dim(A)*j for a_i ⊗ b_j.
SuperAlgebra skew_tensor(const SuperAlgebra& A, const SuperAlgebra& B);
// a ⊗ b inside AB = skew_tensor(A, B).
Element tensor_element(const SuperAlgebra& AB, const SuperAlgebra& A, const SuperAlgebra& B,
                       const Element& a, const Element& b);

SuperAlgebra hat(const SuperAlgebra& A);
// Same coefficients, viewed in hat(A) (or back).
Element transport(const SuperAlgebra& to, const Element& x);

Element grade_involution(const SuperAlgebra& A, const Element& x);

// The subalgebra spanned by `basis` (homogeneous elements, closed under
// multiplication, containing `unit`), as a General-tier algebra.
SuperAlgebra span_subalgebra(const SuperAlgebra& A, const std::vector<Element>& basis, const Element& unit,
                             std::string label);

SuperAlgebra corner(const SuperAlgebra& A, const Element& f);

// Quaternions as the even span <1, i+, j+, k+> of D+^3, generated by i and j.
SuperAlgebra quaternions();

// A / I for a graded two-sided ideal given by a basis.
SuperAlgebra quotient(const SuperAlgebra& A, const std::vector<Element>& ideal_basis);

// Basis of (f A g)_parity drawn from the products f·b·g of basis elements.
std::vector<Element> sandwich_basis(const SuperAlgebra& A, const Element& f, const Element& g, int parity);
// (dim (fAg)_0, dim (fAg)_1)
std::pair<std::size_t, std::size_t> hom_space_dims(const SuperAlgebra& A, const Element& f, const Element& g);

bool is_idempotent(const SuperAlgebra& A, const Element& f);

// Checks that T(a⊗b) = (-1)^{|a||b|} b⊗a is a multiplicative, even bijection
// A⊗̂B -> B⊗̂A on all basis pairs. With signed=false the sign is dropped.
bool supertwist_check(const SuperAlgebra& A, const SuperAlgebra& B, bool signed_twist = true);

// Structure constants and grading agree index for index.
bool same_structure(const SuperAlgebra& A, const SuperAlgebra& B);

// Closure of `gens` under multiplication; returns a basis of the generated
// unital subalgebra.
std::vector<Element> generated_span(const SuperAlgebra& A, const std::vector<Element>& gens);
// Small generating set: the algebra's own generators when known, otherwise a
// greedy selection from the basis.
std::vector<Element> generating_set(const SuperAlgebra& A);

// True iff gens[k] -> images[k] extends to a graded algebra isomorphism A -> B.
bool is_isomorphic_via(const SuperAlgebra& A, const std::vector<Element>& gens, const SuperAlgebra& B,
                       const std::vector<Element>& images);
bool is_isomorphic_via(const SuperAlgebra& A, const SuperAlgebra& B, const std::vector<Element>& images);

// Bounded search for images of generating_set(A) in B over scaled signed
// monomials (and two-term combinations of basis elements).
std::optional<std::vector<Element>> find_isomorphism(const SuperAlgebra& A, const SuperAlgebra& B);

}  // namespace sclif

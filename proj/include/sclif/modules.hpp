#pragma once

#include <cstdint>
#include <vector>

#include "sclif/algebra.hpp"
#include "sclif/linalg.hpp"

namespace sclif {

// Finite-dimensional graded left module, given by one action matrix per
// algebra basis element (columns are images of module basis vectors).
class GradedModule {
 public:
  GradedModule(SuperAlgebra A, std::vector<std::uint8_t> parity, std::vector<Matrix> action);

  const SuperAlgebra& algebra() const { return A_; }
  std::size_t dim() const { return parity_.size(); }
  int parity(std::size_t i) const { return parity_[i]; }
  const std::vector<std::uint8_t>& parities() const { return parity_; }
  std::pair<std::size_t, std::size_t> graded_dims() const;
  const Matrix& action(std::size_t basis_index) const { return action_[basis_index]; }
  const std::vector<Matrix>& actions() const { return action_; }
  // Action of an arbitrary algebra element.
  Matrix act(const Element& a) const;

  friend bool operator==(const GradedModule& a, const GradedModule& b) {
    return a.A_.id() == b.A_.id() && a.parity_ == b.parity_ && a.action_ == b.action_;
  }

 private:
  SuperAlgebra A_;
  std::vector<std::uint8_t> parity_;
  std::vector<Matrix> action_;
};

// Unit acts as identity, products act through the structure constants, odd
// elements shift parity. Exhaustive over basis pairs.
bool check_module_axioms(const GradedModule& M);

// Left module Af on a graded basis of products b·f.
GradedModule module_from_idempotent(const SuperAlgebra& A, const Element& f);
GradedModule regular_module(const SuperAlgebra& A);
GradedModule direct_sum(const GradedModule& M, const GradedModule& N);

// pi: parities flipped, odd action negated. sigma: parities flipped only.
GradedModule parity_change(const GradedModule& M);
GradedModule suspension(const GradedModule& M);
GradedModule apply_functor(Functor S, const GradedModule& M);

// The same space as a module over hat(A) (A_hat must be hat(M.algebra())),
// with b acting on m by (-1)^{|b||m|} b·m.
GradedModule hat_module(const GradedModule& M, const SuperAlgebra& A_hat);

// Basis of Hom(M, N)_i: maps F with F(M_j) in N_{i+j} and
// F(a m) = (-1)^{i|a|} a F(m).
std::vector<Matrix> hom_basis(const GradedModule& M, const GradedModule& N, int i);

// Even part Hom_Gr(M, M), odd part Hom_Gr(S(M), M), product = composition.
SuperAlgebra twisted_end(const GradedModule& M, Functor S);

}  // namespace sclif

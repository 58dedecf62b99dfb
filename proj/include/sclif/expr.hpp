#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "sclif/algebra.hpp"

namespace sclif {

// expr := term (('+'|'-') term)*
// term := factor ('*' factor)*
// factor := rational | 'i' | 'e'INT | '(' expr ')' | '-' factor
struct ExprAst {
  enum class Kind { Sum, Product, Neg, ScalarLit, GeneratorRef, Imag, Paren };

  Kind kind = Kind::ScalarLit;
  std::vector<ExprAst> children;
  std::vector<char> ops;  // Sum only: '+' or '-' before children[1..]
  mpq_class value;        // ScalarLit
  int index = 0;          // GeneratorRef, 1-based
  std::size_t position = 0;

  friend bool operator==(const ExprAst& a, const ExprAst& b) {
    return a.kind == b.kind && a.children == b.children && a.ops == b.ops && a.value == b.value &&
           a.index == b.index;
  }
};

ExprAst parse_expr(std::string_view text, const Signature& sig);
std::string print_expr(const ExprAst& ast);
Element eval_expr(const ExprAst& ast, const SuperAlgebra& A);
// Builds clifford(sig) and evaluates there.
Element eval_expr(const ExprAst& ast, const Signature& sig);

}  // namespace sclif

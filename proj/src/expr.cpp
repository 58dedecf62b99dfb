#include "sclif/expr.hpp"

#include <cctype>

namespace sclif {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const Signature& sig) : s_(text), sig_(sig) {}

  ExprAst parse() {
    ExprAst e = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what, Errc code = Errc::Syntax) { throw ParseError(code, pos_, what); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  ExprAst expr() {
    skip();
    std::size_t start = pos_;
    ExprAst first = term();
    if (!peek('+') && !peek('-')) return first;
    ExprAst sum;
    sum.kind = ExprAst::Kind::Sum;
    sum.position = start;
    sum.children.push_back(std::move(first));
    while (peek('+') || peek('-')) {
      sum.ops.push_back(s_[pos_++]);
      sum.children.push_back(term());
    }
    return sum;
  }

  ExprAst term() {
    skip();
    std::size_t start = pos_;
    ExprAst first = factor();
    if (!peek('*')) return first;
    ExprAst prod;
    prod.kind = ExprAst::Kind::Product;
    prod.position = start;
    prod.children.push_back(std::move(first));
    while (peek('*')) {
      ++pos_;
      prod.children.push_back(factor());
    }
    return prod;
  }

  std::string digits() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(s_.substr(start, pos_ - start));
  }

  ExprAst factor() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    ExprAst node;
    node.position = pos_;
    char c = s_[pos_];
    if (c == '-') {
      ++pos_;
      node.kind = ExprAst::Kind::Neg;
      node.children.push_back(factor());
      return node;
    }
    if (c == '(') {
      ++pos_;
      node.kind = ExprAst::Kind::Paren;
      node.children.push_back(expr());
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return node;
    }
    if (c == 'i') {
      if (sig_.field() != Field::Complex) fail("imaginary unit needs the complex field");
      ++pos_;
      node.kind = ExprAst::Kind::Imag;
      return node;
    }
    if (c == 'e') {
      ++pos_;
      if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected generator index");
      std::string d = digits();
      node.kind = ExprAst::Kind::GeneratorRef;
      node.index = d.size() > 3 ? 1000 : std::stoi(d);
      if (node.index < 1 || node.index > sig_.n()) {
        pos_ = node.position;
        fail("generator e" + d + " outside e1..e" + std::to_string(sig_.n()), Errc::GeneratorOutOfRange);
      }
      return node;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class num(digits());
      mpz_class den(1);
      skip();
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        den = mpz_class(digits());
        if (den == 0) fail("zero denominator");
      }
      node.kind = ExprAst::Kind::ScalarLit;
      node.value = mpq_class(num, den);
      node.value.canonicalize();
      return node;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  const Signature& sig_;
  std::size_t pos_ = 0;
};

}  // namespace

ExprAst parse_expr(std::string_view text, const Signature& sig) { return Parser(text, sig).parse(); }

std::string print_expr(const ExprAst& ast) {
  switch (ast.kind) {
    case ExprAst::Kind::Sum: {
      std::string out = print_expr(ast.children[0]);
      for (std::size_t k = 1; k < ast.children.size(); ++k)
        out += std::string(" ") + ast.ops[k - 1] + " " + print_expr(ast.children[k]);
      return out;
    }
    case ExprAst::Kind::Product: {
      std::string out = print_expr(ast.children[0]);
      for (std::size_t k = 1; k < ast.children.size(); ++k) out += "*" + print_expr(ast.children[k]);
      return out;
    }
    case ExprAst::Kind::Neg: return "-" + print_expr(ast.children[0]);
    case ExprAst::Kind::ScalarLit: return ast.value.get_str();
    case ExprAst::Kind::GeneratorRef: return "e" + std::to_string(ast.index);
    case ExprAst::Kind::Imag: return "i";
    case ExprAst::Kind::Paren: return "(" + print_expr(ast.children[0]) + ")";
  }
  return "";
}

Element eval_expr(const ExprAst& ast, const SuperAlgebra& A) {
  const Field F = A.field();
  switch (ast.kind) {
    case ExprAst::Kind::Sum: {
      Element acc = eval_expr(ast.children[0], A);
      for (std::size_t k = 1; k < ast.children.size(); ++k) {
        Element t = eval_expr(ast.children[k], A);
        if (ast.ops[k - 1] == '+')
          acc += t;
        else
          acc -= t;
      }
      return acc;
    }
    case ExprAst::Kind::Product: {
      Element acc = eval_expr(ast.children[0], A);
      for (std::size_t k = 1; k < ast.children.size(); ++k) acc = A.mul(acc, eval_expr(ast.children[k], A));
      return acc;
    }
    case ExprAst::Kind::Neg: return -eval_expr(ast.children[0], A);
    case ExprAst::Kind::ScalarLit: return A.scalar(Scalar(ast.value, F));
    case ExprAst::Kind::GeneratorRef: {
      if (!A.is_monomial() || ast.index < 1 || ast.index > A.signature()->n())
        throw Error(Errc::GeneratorOutOfRange, "e" + std::to_string(ast.index));
      return A.basis(std::size_t{1} << (ast.index - 1));
    }
    case ExprAst::Kind::Imag:
      if (F != Field::Complex) throw Error(Errc::FieldMismatch, "imaginary unit over the real field");
      return A.scalar(Scalar::imag_unit());
    case ExprAst::Kind::Paren: return eval_expr(ast.children[0], A);
  }
  throw Error(Errc::Syntax, "malformed expression tree");
}

Element eval_expr(const ExprAst& ast, const Signature& sig) { return eval_expr(ast, clifford(sig)); }

}  // namespace sclif

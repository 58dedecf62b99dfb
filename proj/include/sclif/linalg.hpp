#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "sclif/scalar.hpp"

namespace sclif {

// Sorted by index, no explicit zeros.
using SparseVec = std::vector<std::pair<std::uint32_t, Scalar>>;

namespace sparse {

Scalar get(const SparseVec& v, std::uint32_t index, Field f);
// y += a * x
void axpy(SparseVec& y, const Scalar& a, const SparseVec& x);
SparseVec scaled(const SparseVec& v, const Scalar& a);
SparseVec from_dense(const std::vector<Scalar>& v);
std::vector<Scalar> to_dense(const SparseVec& v, std::size_t n, Field f);

}  // namespace sparse

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, Field field = Field::Real);

  static Matrix identity(std::size_t n, Field field = Field::Real);
  static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows, Field field);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Field field() const noexcept { return field_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Scalar> row(std::size_t r) const;
  bool is_zero() const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Field field_ = Field::Real;
  std::vector<Scalar> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix scaled(const Matrix& m, const Scalar& s);
std::vector<Scalar> operator*(const Matrix& m, const std::vector<Scalar>& v);

struct RrefResult {
  Matrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
};

RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);

// Basis of {v : m v = 0}, one vector per free column.
std::vector<std::vector<Scalar>> nullspace(const Matrix& m);

struct Solution {
  std::vector<Scalar> x;
};
struct NoSolution {};
struct SolutionSpace {
  std::vector<Scalar> particular;
  std::vector<std::vector<Scalar>> nullspace;
};
using SolveResult = std::variant<Solution, NoSolution, SolutionSpace>;

SolveResult solve(const Matrix& m, const std::vector<Scalar>& b);

// (positive, negative) counts of a real symmetric matrix's inertia, by
// symmetric Gaussian elimination (Sylvester's law).
std::pair<std::size_t, std::size_t> inertia(const Matrix& symmetric);

// Incrementally built basis of a subspace of a sparse coordinate space.
// Vectors passed to add() that are independent of the current span are kept
// as "originals"; coordinates() expresses a vector in terms of them.
class EchelonBasis {
 public:
  explicit EchelonBasis(Field field) : field_(field) {}

  // True when v was independent (and is now original #size()-1).
  bool add(const SparseVec& v);
  bool contains(const SparseVec& v) const;
  std::optional<SparseVec> coordinates(const SparseVec& v) const;

  std::size_t size() const noexcept { return originals_.size(); }
  const std::vector<SparseVec>& originals() const noexcept { return originals_; }
  Field field() const noexcept { return field_; }

 private:
  struct Row {
    std::uint32_t pivot;
    SparseVec v;      // pivot entry is 1
    SparseVec combo;  // v as a combination of originals
  };

  // Reduces v against the rows; returns residual and (optionally) the
  // combination of originals that was subtracted.
  SparseVec reduce(SparseVec v, SparseVec* combo) const;

  Field field_;
  std::vector<Row> rows_;
  std::vector<SparseVec> originals_;
};

}  // namespace sclif

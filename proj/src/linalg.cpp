#include "sclif/linalg.hpp"

#include <algorithm>

namespace sclif {

namespace sparse {

Scalar get(const SparseVec& v, std::uint32_t index, Field f) {
  auto it = std::lower_bound(v.begin(), v.end(), index,
                             [](const auto& e, std::uint32_t i) { return e.first < i; });
  if (it != v.end() && it->first == index) return it->second;
  return Scalar::zero(f);
}

void axpy(SparseVec& y, const Scalar& a, const SparseVec& x) {
  if (a.is_zero() || x.empty()) return;
  SparseVec out;
  out.reserve(y.size() + x.size());
  auto iy = y.begin();
  auto ix = x.begin();
  while (iy != y.end() || ix != x.end()) {
    if (ix == x.end() || (iy != y.end() && iy->first < ix->first)) {
      out.push_back(std::move(*iy));
      ++iy;
    } else if (iy == y.end() || ix->first < iy->first) {
      out.emplace_back(ix->first, a * ix->second);
      ++ix;
    } else {
      Scalar s = std::move(iy->second);
      s += a * ix->second;
      if (!s.is_zero()) out.emplace_back(iy->first, std::move(s));
      ++iy;
      ++ix;
    }
  }
  y = std::move(out);
}

SparseVec scaled(const SparseVec& v, const Scalar& a) {
  SparseVec out;
  if (a.is_zero()) return out;
  out.reserve(v.size());
  for (const auto& [i, c] : v) out.emplace_back(i, c * a);
  return out;
}

SparseVec from_dense(const std::vector<Scalar>& v) {
  SparseVec out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) out.emplace_back(static_cast<std::uint32_t>(i), v[i]);
  return out;
}

std::vector<Scalar> to_dense(const SparseVec& v, std::size_t n, Field f) {
  std::vector<Scalar> out(n, Scalar::zero(f));
  for (const auto& [i, c] : v) out.at(i) = c;
  return out;
}

}  // namespace sparse

Matrix::Matrix(std::size_t rows, std::size_t cols, Field field)
    : rows_(rows), cols_(cols), field_(field), data_(rows * cols, Scalar::zero(field)) {}

Matrix Matrix::identity(std::size_t n, Field field) {
  Matrix m(n, n, field);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(field);
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows, Field field) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(rows.size(), cols, field);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(Errc::DimMismatch, "ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

std::vector<Scalar> Matrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw Error(Errc::DimMismatch, "matrix product shape");
  Matrix out(a.rows(), b.cols(), a.field());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (!b(k, j).is_zero()) out(i, j) += aik * b(k, j);
    }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error(Errc::DimMismatch, "matrix sum shape");
  Matrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) += b(i, j);
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) { return a + scaled(b, -Scalar::one(b.field())); }

Matrix scaled(const Matrix& m, const Scalar& s) {
  Matrix out = m;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) *= s;
  return out;
}

std::vector<Scalar> operator*(const Matrix& m, const std::vector<Scalar>& v) {
  if (m.cols() != v.size()) throw Error(Errc::DimMismatch, "matrix-vector shape");
  std::vector<Scalar> out(m.rows(), Scalar::zero(m.field()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero() && !v[j].is_zero()) out[i] += m(i, j) * v[j];
  return out;
}

RrefResult rref(const Matrix& m) {
  RrefResult res{m, 0, {}};
  Matrix& a = res.reduced;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t piv = row;
    while (piv < a.rows() && a(piv, col).is_zero()) ++piv;
    if (piv == a.rows()) continue;
    if (piv != row)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(piv, j), a(row, j));
    Scalar inv = a(row, col).inverse();
    for (std::size_t j = col; j < a.cols(); ++j) a(row, j) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col).is_zero()) continue;
      Scalar factor = a(r, col);
      for (std::size_t j = col; j < a.cols(); ++j)
        if (!a(row, j).is_zero()) a(r, j) -= factor * a(row, j);
    }
    res.pivot_cols.push_back(col);
    ++row;
  }
  res.rank = row;
  return res;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

std::vector<std::vector<Scalar>> nullspace(const Matrix& m) {
  RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : r.pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(m.cols(), Scalar::zero(m.field()));
    v[free] = Scalar::one(m.field());
    for (std::size_t i = 0; i < r.rank; ++i) v[r.pivot_cols[i]] = -r.reduced(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

SolveResult solve(const Matrix& m, const std::vector<Scalar>& b) {
  if (b.size() != m.rows()) throw Error(Errc::DimMismatch, "right-hand side length");
  Matrix aug(m.rows(), m.cols() + 1, m.field());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  RrefResult r = rref(aug);
  if (!r.pivot_cols.empty() && r.pivot_cols.back() == m.cols()) return NoSolution{};
  std::vector<Scalar> x(m.cols(), Scalar::zero(m.field()));
  for (std::size_t i = 0; i < r.rank; ++i) x[r.pivot_cols[i]] = r.reduced(i, m.cols());
  if (r.rank == m.cols()) return Solution{std::move(x)};
  return SolutionSpace{std::move(x), nullspace(m)};
}

std::pair<std::size_t, std::size_t> inertia(const Matrix& symmetric) {
  if (symmetric.rows() != symmetric.cols()) throw Error(Errc::DimMismatch, "inertia needs a square matrix");
  if (symmetric.field() != Field::Real) throw Error(Errc::FieldMismatch, "inertia needs a real matrix");
  Matrix a = symmetric;
  std::size_t n = a.rows(), pos = 0, neg = 0;
  std::vector<bool> done(n, false);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t piv = n;
    for (std::size_t i = 0; i < n && piv == n; ++i)
      if (!done[i] && !a(i, i).is_zero()) piv = i;
    if (piv == n) {
      // Zero diagonal: make one with the congruence row_i += row_j, col_i += col_j.
      std::size_t pi = n, pj = n;
      for (std::size_t i = 0; i < n && pi == n; ++i)
        for (std::size_t j = 0; j < n && pi == n; ++j)
          if (i != j && !done[i] && !done[j] && !a(i, j).is_zero()) {
            pi = i;
            pj = j;
          }
      if (pi == n) break;
      for (std::size_t k = 0; k < n; ++k) a(pi, k) += a(pj, k);
      for (std::size_t k = 0; k < n; ++k) a(k, pi) += a(k, pj);
      piv = pi;
    }
    const Scalar d = a(piv, piv);
    if (sgn(d.re()) > 0) ++pos; else ++neg;
    done[piv] = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i] || a(i, piv).is_zero()) continue;
      Scalar f = a(i, piv) / d;
      for (std::size_t k = 0; k < n; ++k) a(i, k) -= f * a(piv, k);
      for (std::size_t k = 0; k < n; ++k) a(k, i) -= f * a(k, piv);
    }
  }
  return {pos, neg};
}

SparseVec EchelonBasis::reduce(SparseVec v, SparseVec* combo) const {
  for (const Row& row : rows_) {
    if (v.empty()) break;
    Scalar c = sparse::get(v, row.pivot, field_);
    if (c.is_zero()) continue;
    sparse::axpy(v, -c, row.v);
    if (combo) sparse::axpy(*combo, c, row.combo);
  }
  return v;
}

bool EchelonBasis::add(const SparseVec& v) {
  SparseVec subtracted;
  SparseVec residual = reduce(v, &subtracted);
  if (residual.empty()) return false;
  auto index = static_cast<std::uint32_t>(originals_.size());
  // residual = original - subtracted
  SparseVec combo{{index, Scalar::one(field_)}};
  sparse::axpy(combo, -Scalar::one(field_), subtracted);
  Scalar inv = residual.front().second.inverse();
  Row row{residual.front().first, sparse::scaled(residual, inv), sparse::scaled(combo, inv)};
  rows_.push_back(std::move(row));
  originals_.push_back(v);
  return true;
}

bool EchelonBasis::contains(const SparseVec& v) const { return reduce(v, nullptr).empty(); }

std::optional<SparseVec> EchelonBasis::coordinates(const SparseVec& v) const {
  SparseVec combo;
  SparseVec residual = reduce(v, &combo);
  if (!residual.empty()) return std::nullopt;
  return combo;
}

}  // namespace sclif

#include "sclif/modules.hpp"

namespace sclif {

namespace {

SparseVec flatten(const Matrix& m) {
  SparseVec out;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!m(r, c).is_zero()) out.emplace_back(static_cast<std::uint32_t>(r * m.cols() + c), m(r, c));
  return out;
}

}  // namespace

GradedModule::GradedModule(SuperAlgebra A, std::vector<std::uint8_t> parity, std::vector<Matrix> action)
    : A_(std::move(A)), parity_(std::move(parity)), action_(std::move(action)) {
  if (action_.size() != A_.dim()) throw Error(Errc::DimMismatch, "one action matrix per algebra basis element");
  for (const auto& m : action_)
    if (m.rows() != dim() || m.cols() != dim()) throw Error(Errc::DimMismatch, "action matrix shape");
}

std::pair<std::size_t, std::size_t> GradedModule::graded_dims() const {
  std::size_t odd = 0;
  for (auto p : parity_) odd += p;
  return {dim() - odd, odd};
}

Matrix GradedModule::act(const Element& a) const {
  A_.check_owns(a);
  Matrix out(dim(), dim(), A_.field());
  for (const auto& [k, c] : a.terms()) out = out + scaled(action_[k], c);
  return out;
}

bool check_module_axioms(const GradedModule& M) {
  const SuperAlgebra& A = M.algebra();
  if (M.act(A.unit()) != Matrix::identity(M.dim(), A.field())) return false;
  for (std::size_t i = 0; i < A.dim(); ++i) {
    const Matrix& a = M.action(i);
    for (std::size_t r = 0; r < M.dim(); ++r)
      for (std::size_t c = 0; c < M.dim(); ++c)
        if (!a(r, c).is_zero() && M.parity(r) != ((M.parity(c) + A.parity(i)) & 1)) return false;
    for (std::size_t j = 0; j < A.dim(); ++j)
      if (a * M.action(j) != M.act(A.element(A.basis_product(i, j)))) return false;
  }
  return true;
}

GradedModule module_from_idempotent(const SuperAlgebra& A, const Element& f) {
  A.check_owns(f);
  auto p = A.parity_of(f);
  if (f.is_zero() || !p || *p != 0 || A.mul(f, f) != f) throw Error(Errc::NotIdempotent, "need a nonzero even idempotent");
  EchelonBasis eb(A.field());
  std::vector<Element> basis;
  std::vector<std::uint8_t> parity;
  for (int par = 0; par < 2; ++par)
    for (std::size_t k = 0; k < A.dim(); ++k) {
      if (A.parity(k) != par) continue;
      Element v = A.mul(A.basis(k), f);
      if (!v.is_zero() && eb.add(v.terms())) {
        basis.push_back(std::move(v));
        parity.push_back(static_cast<std::uint8_t>(par));
      }
    }
  const std::size_t n = basis.size();
  std::vector<Matrix> action;
  action.reserve(A.dim());
  for (std::size_t k = 0; k < A.dim(); ++k) {
    Matrix m(n, n, A.field());
    for (std::size_t c = 0; c < n; ++c) {
      auto coords = eb.coordinates(A.mul(A.basis(k), basis[c]).terms());
      for (const auto& [r, s] : *coords) m(r, c) = s;
    }
    action.push_back(std::move(m));
  }
  return GradedModule(A, std::move(parity), std::move(action));
}

GradedModule regular_module(const SuperAlgebra& A) { return module_from_idempotent(A, A.unit()); }

GradedModule direct_sum(const GradedModule& M, const GradedModule& N) {
  if (M.algebra().id() != N.algebra().id()) throw Error(Errc::AlgebraMismatch, "direct sum over different algebras");
  const SuperAlgebra& A = M.algebra();
  const std::size_t n = M.dim() + N.dim();
  std::vector<std::uint8_t> parity = M.parities();
  parity.insert(parity.end(), N.parities().begin(), N.parities().end());
  std::vector<Matrix> action;
  for (std::size_t k = 0; k < A.dim(); ++k) {
    Matrix m(n, n, A.field());
    for (std::size_t r = 0; r < M.dim(); ++r)
      for (std::size_t c = 0; c < M.dim(); ++c) m(r, c) = M.action(k)(r, c);
    for (std::size_t r = 0; r < N.dim(); ++r)
      for (std::size_t c = 0; c < N.dim(); ++c) m(M.dim() + r, M.dim() + c) = N.action(k)(r, c);
    action.push_back(std::move(m));
  }
  return GradedModule(A, std::move(parity), std::move(action));
}

GradedModule parity_change(const GradedModule& M) {
  std::vector<std::uint8_t> parity = M.parities();
  for (auto& p : parity) p ^= 1;
  std::vector<Matrix> action = M.actions();
  const SuperAlgebra& A = M.algebra();
  for (std::size_t k = 0; k < A.dim(); ++k)
    if (A.parity(k)) action[k] = scaled(action[k], -Scalar::one(A.field()));
  return GradedModule(A, std::move(parity), std::move(action));
}

GradedModule suspension(const GradedModule& M) {
  std::vector<std::uint8_t> parity = M.parities();
  for (auto& p : parity) p ^= 1;
  return GradedModule(M.algebra(), std::move(parity), M.actions());
}

GradedModule apply_functor(Functor S, const GradedModule& M) {
  return S == Functor::Pi ? parity_change(M) : suspension(M);
}

GradedModule hat_module(const GradedModule& M, const SuperAlgebra& A_hat) {
  const SuperAlgebra& A = M.algebra();
  if (A_hat.dim() != A.dim() || A_hat.parities() != A.parities())
    throw Error(Errc::AlgebraMismatch, "target is not the hat of the module's algebra");
  std::vector<Matrix> action = M.actions();
  for (std::size_t k = 0; k < A.dim(); ++k) {
    if (!A.parity(k)) continue;
    for (std::size_t r = 0; r < M.dim(); ++r)
      for (std::size_t c = 0; c < M.dim(); ++c)
        if (M.parity(c)) action[k](r, c) = -action[k](r, c);
  }
  return GradedModule(A_hat, M.parities(), std::move(action));
}

std::vector<Matrix> hom_basis(const GradedModule& M, const GradedModule& N, int i) {
  if (M.algebra().id() != N.algebra().id()) throw Error(Errc::AlgebraMismatch, "Hom between modules over different algebras");
  const SuperAlgebra& A = M.algebra();
  const Field F = A.field();
  const std::size_t m = M.dim(), n = N.dim();

  // Unknowns: entries F[r][c] with parity_N[r] = parity_M[c] + i.
  std::vector<long> var(n * m, -1);
  std::vector<std::pair<std::size_t, std::size_t>> pos;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < m; ++c)
      if (N.parity(r) == ((M.parity(c) + i) & 1)) {
        var[r * m + c] = static_cast<long>(pos.size());
        pos.emplace_back(r, c);
      }
  if (pos.empty()) return {};

  const std::vector<Element> gens = generating_set(A);
  Matrix sys(gens.size() * n * m, pos.size(), F);
  for (std::size_t g = 0; g < gens.size(); ++g) {
    Matrix gm = M.act(gens[g]);
    Matrix gn = N.act(gens[g]);
    bool negate = (i & 1) && *A.parity_of(gens[g]) == 1;
    // (F gm)[r][c2] - s (gn F)[r][c2] = 0
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c2 = 0; c2 < m; ++c2) {
        std::size_t row = (g * n + r) * m + c2;
        for (std::size_t c = 0; c < m; ++c) {
          long v = var[r * m + c];
          if (v >= 0 && !gm(c, c2).is_zero()) sys(row, static_cast<std::size_t>(v)) += gm(c, c2);
        }
        for (std::size_t r2 = 0; r2 < n; ++r2) {
          long v = var[r2 * m + c2];
          if (v < 0 || gn(r, r2).is_zero()) continue;
          if (negate)
            sys(row, static_cast<std::size_t>(v)) += gn(r, r2);
          else
            sys(row, static_cast<std::size_t>(v)) -= gn(r, r2);
        }
      }
  }
  std::vector<Matrix> out;
  for (const auto& v : nullspace(sys)) {
    Matrix h(n, m, F);
    for (std::size_t k = 0; k < pos.size(); ++k) h(pos[k].first, pos[k].second) = v[k];
    out.push_back(std::move(h));
  }
  return out;
}

SuperAlgebra twisted_end(const GradedModule& M, Functor S) {
  const Field F = M.algebra().field();
  std::vector<Matrix> even = hom_basis(M, M, 0);
  std::vector<Matrix> odd = hom_basis(apply_functor(S, M), M, 0);
  std::vector<Matrix> basis = even;
  basis.insert(basis.end(), odd.begin(), odd.end());
  EchelonBasis eb(F);
  for (const auto& b : basis) eb.add(flatten(b));
  AlgebraData d;
  d.label = std::string("End^") + functor_name(S) + "(M)";
  d.field = F;
  d.dim = basis.size();
  d.parity.assign(even.size(), 0);
  d.parity.insert(d.parity.end(), odd.size(), 1);
  d.table.resize(d.dim * d.dim);
  for (std::size_t a = 0; a < d.dim; ++a)
    for (std::size_t b = 0; b < d.dim; ++b) {
      auto c = eb.coordinates(flatten(basis[a] * basis[b]));
      if (!c) throw Error(Errc::InvalidArgument, "twisted endomorphisms not closed under composition");
      d.table[a * d.dim + b] = std::move(*c);
    }
  auto u = eb.coordinates(flatten(Matrix::identity(M.dim(), F)));
  if (!u) throw Error(Errc::InvalidArgument, "identity missing from twisted endomorphisms");
  d.unit = std::move(*u);
  for (std::size_t k = 0; k < d.dim; ++k) d.basis_labels.push_back("h" + std::to_string(k));
  return SuperAlgebra::general(std::move(d));
}

}  // namespace sclif

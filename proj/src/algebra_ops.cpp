#include <algorithm>
#include <functional>

#include "algebra_internal.hpp"
#include "sclif/algebra.hpp"

namespace sclif {

namespace detail {

AlgebraData span_data(const SuperAlgebra& A, const std::vector<Element>& basis, const Element& unit,
                      std::string label) {
  EchelonBasis eb(A.field());
  AlgebraData d;
  d.label = std::move(label);
  d.field = A.field();
  d.dim = basis.size();
  for (const auto& b : basis) {
    auto p = A.parity_of(b);
    if (!p) throw Error(Errc::InvalidArgument, "span basis element is not homogeneous");
    if (b.is_zero() || !eb.add(b.terms())) throw Error(Errc::InvalidArgument, "span basis is not independent");
    d.parity.push_back(static_cast<std::uint8_t>(*p));
  }
  d.table.resize(d.dim * d.dim);
  for (std::size_t i = 0; i < d.dim; ++i)
    for (std::size_t j = 0; j < d.dim; ++j) {
      auto c = eb.coordinates(A.mul(basis[i], basis[j]).terms());
      if (!c) throw Error(Errc::InvalidArgument, "span is not closed under multiplication");
      d.table[i * d.dim + j] = std::move(*c);
    }
  auto u = eb.coordinates(unit.terms());
  if (!u) throw Error(Errc::InvalidArgument, "unit outside the span");
  d.unit = std::move(*u);
  d.parent_id = A.id();
  for (const auto& b : basis) d.embedding.push_back(b.terms());
  for (std::size_t i = 0; i < d.dim; ++i) d.basis_labels.push_back("c" + std::to_string(i));
  return d;
}

}  // namespace detail

SuperAlgebra span_subalgebra(const SuperAlgebra& A, const std::vector<Element>& basis, const Element& unit,
                             std::string label) {
  return SuperAlgebra::general(detail::span_data(A, basis, unit, std::move(label)));
}

bool is_idempotent(const SuperAlgebra& A, const Element& f) { return A.mul(f, f) == f; }

namespace {

void check_even_idempotent(const SuperAlgebra& A, const Element& f) {
  A.check_owns(f);
  if (f.is_zero()) throw Error(Errc::NotIdempotent, "zero is not a usable idempotent");
  auto p = A.parity_of(f);
  if (!p || *p != 0) throw Error(Errc::NotIdempotent, "idempotent must be even");
  if (!is_idempotent(A, f)) throw Error(Errc::NotIdempotent, "f*f != f");
}

void check_even(const SuperAlgebra& A, const Element& f) {
  auto p = A.parity_of(f);
  if (!p || *p != 0) throw Error(Errc::NotIdempotent, "idempotent must be even");
}

}  // namespace

SuperAlgebra corner(const SuperAlgebra& A, const Element& f) {
  check_even_idempotent(A, f);
  EchelonBasis eb(A.field());
  std::vector<Element> basis;
  eb.add(f.terms());
  basis.push_back(f);
  for (int par = 0; par < 2; ++par)
    for (std::size_t k = 0; k < A.dim(); ++k) {
      if (A.parity(k) != par) continue;
      Element v = A.mul(A.mul(f, A.basis(k)), f);
      if (!v.is_zero() && eb.add(v.terms())) basis.push_back(std::move(v));
    }
  std::string fs = A.format(f);
  if (fs.size() > 48) fs = "f";
  return span_subalgebra(A, basis, f, "corner(" + fs + ", " + A.label() + ")");
}

SuperAlgebra quaternions() {
  SuperAlgebra d3 = clifford_real(3, 0, 0);
  std::vector<Element> basis = {d3.unit(), d3.basis(0b110), d3.basis(0b101), d3.basis(0b011)};
  AlgebraData d = detail::span_data(d3, basis, d3.unit(), "H");
  d.basis_labels = {"1", "i", "j", "k"};
  d.generators = {{{1u, Scalar::one(Field::Real)}}, {{2u, Scalar::one(Field::Real)}}};
  return SuperAlgebra::general(std::move(d));
}

SuperAlgebra quotient(const SuperAlgebra& A, const std::vector<Element>& ideal_basis) {
  EchelonBasis eb(A.field());
  for (const auto& x : ideal_basis) {
    A.check_owns(x);
    if (!eb.add(x.terms())) throw Error(Errc::InvalidArgument, "ideal basis is not independent");
  }
  const std::size_t nj = eb.size();
  std::vector<std::size_t> reps;
  for (std::size_t k = 0; k < A.dim(); ++k)
    if (eb.add(A.basis(k).terms())) reps.push_back(k);
  const std::size_t dim = reps.size();
  auto project = [&](const SparseVec& v) {
    auto c = eb.coordinates(v);
    SparseVec out;
    for (auto& [i, s] : *c)
      if (i >= nj) out.emplace_back(static_cast<std::uint32_t>(i - nj), std::move(s));
    return out;
  };
  AlgebraData d;
  d.label = A.label() + "/J";
  d.field = A.field();
  d.dim = dim;
  for (auto k : reps) {
    d.parity.push_back(static_cast<std::uint8_t>(A.parity(k)));
    d.basis_labels.push_back(A.basis_label(k));
    d.embedding.push_back(A.basis(k).terms());
  }
  d.table.resize(dim * dim);
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t b = 0; b < dim; ++b) d.table[a * dim + b] = project(A.basis_product(reps[a], reps[b]));
  d.unit = project(A.unit().terms());
  for (const auto& g : A.generators()) {
    SparseVec img = project(g.terms());
    if (!img.empty()) d.generators.push_back(std::move(img));
  }
  // Lifts of the complement basis; not an algebra embedding.
  d.parent_id = 0;
  return SuperAlgebra::general(std::move(d));
}

std::vector<Element> sandwich_basis(const SuperAlgebra& A, const Element& f, const Element& g, int parity) {
  A.check_owns(f);
  A.check_owns(g);
  check_even(A, f);
  check_even(A, g);
  EchelonBasis eb(A.field());
  std::vector<Element> out;
  for (std::size_t k = 0; k < A.dim(); ++k) {
    if (A.parity(k) != parity) continue;
    Element v = A.mul(A.mul(f, A.basis(k)), g);
    if (!v.is_zero() && eb.add(v.terms())) out.push_back(std::move(v));
  }
  return out;
}

std::pair<std::size_t, std::size_t> hom_space_dims(const SuperAlgebra& A, const Element& f, const Element& g) {
  check_even_idempotent(A, f);
  check_even_idempotent(A, g);
  return {sandwich_basis(A, f, g, 0).size(), sandwich_basis(A, f, g, 1).size()};
}

bool supertwist_check(const SuperAlgebra& A, const SuperAlgebra& B, bool signed_twist) {
  if (A.field() != B.field()) throw Error(Errc::FieldMismatch, "supertwist over different fields");
  SuperAlgebra ab = skew_tensor(A, B);
  SuperAlgebra ba = skew_tensor(B, A);
  const std::size_t da = A.dim(), db = B.dim();
  std::vector<std::uint32_t> target(ab.dim());
  std::vector<bool> negate(ab.dim());
  for (std::size_t j = 0; j < db; ++j)
    for (std::size_t i = 0; i < da; ++i) {
      target[i + da * j] = static_cast<std::uint32_t>(j + db * i);
      negate[i + da * j] = signed_twist && (A.parity(i) & B.parity(j));
    }
  auto T = [&](const Element& x) {
    SparseVec out;
    for (const auto& [k, c] : x.terms()) out.emplace_back(target[k], negate[k] ? -c : c);
    return ba.element(std::move(out));
  };
  for (std::size_t k = 0; k < ab.dim(); ++k)
    if (ab.parity(k) != ba.parity(target[k])) return false;
  if (T(ab.unit()) != ba.unit()) return false;
  for (std::size_t u = 0; u < ab.dim(); ++u) {
    Element tu = T(ab.basis(u));
    for (std::size_t v = 0; v < ab.dim(); ++v)
      if (T(ab.mul(ab.basis(u), ab.basis(v))) != ba.mul(tu, T(ab.basis(v)))) return false;
  }
  return true;
}

bool same_structure(const SuperAlgebra& A, const SuperAlgebra& B) {
  if (A.dim() != B.dim() || A.field() != B.field() || A.parities() != B.parities()) return false;
  if (A.unit().terms() != B.unit().terms()) return false;
  for (std::size_t i = 0; i < A.dim(); ++i)
    for (std::size_t j = 0; j < A.dim(); ++j)
      if (A.basis_product(i, j) != B.basis_product(i, j)) return false;
  return true;
}

std::vector<Element> generated_span(const SuperAlgebra& A, const std::vector<Element>& gens) {
  EchelonBasis eb(A.field());
  std::vector<Element> basis;
  eb.add(A.unit().terms());
  basis.push_back(A.unit());
  for (std::size_t idx = 0; idx < basis.size(); ++idx)
    for (const auto& g : gens) {
      Element w = A.mul(basis[idx], g);
      if (!w.is_zero() && eb.add(w.terms())) basis.push_back(std::move(w));
    }
  return basis;
}

std::vector<Element> generating_set(const SuperAlgebra& A) {
  if (!A.generators().empty() && generated_span(A, A.generators()).size() == A.dim()) return A.generators();
  std::vector<Element> gens;
  std::vector<Element> span = generated_span(A, gens);
  auto in_span = [&](const Element& x) {
    EchelonBasis eb(A.field());
    for (const auto& s : span) eb.add(s.terms());
    return eb.contains(x.terms());
  };
  for (int par = 1; par >= 0 && span.size() < A.dim(); --par)
    for (std::size_t k = 0; k < A.dim() && span.size() < A.dim(); ++k) {
      if (A.parity(k) != par) continue;
      Element b = A.basis(k);
      if (in_span(b)) continue;
      gens.push_back(b);
      span = generated_span(A, gens);
    }
  return gens;
}

bool is_isomorphic_via(const SuperAlgebra& A, const std::vector<Element>& gens, const SuperAlgebra& B,
                       const std::vector<Element>& images) {
  if (A.dim() != B.dim()) throw Error(Errc::DimMismatch, "algebras of different dimension");
  if (A.field() != B.field()) throw Error(Errc::FieldMismatch, "algebras over different fields");
  if (gens.size() != images.size()) throw Error(Errc::InvalidArgument, "generator and image counts differ");
  for (std::size_t k = 0; k < gens.size(); ++k) {
    A.check_owns(gens[k]);
    B.check_owns(images[k]);
    auto pa = A.parity_of(gens[k]);
    auto pb = B.parity_of(images[k]);
    if (!pa || !pb || *pa != *pb) return false;
  }
  // Closure over right multiplication by generators, checking that the
  // induced map on the word basis is well defined.
  EchelonBasis eb(A.field());
  std::vector<Element> words{A.unit()};
  std::vector<Element> imgs{B.unit()};
  eb.add(A.unit().terms());
  for (std::size_t idx = 0; idx < words.size(); ++idx)
    for (std::size_t k = 0; k < gens.size(); ++k) {
      Element w = A.mul(words[idx], gens[k]);
      Element wi = B.mul(imgs[idx], images[k]);
      auto c = eb.coordinates(w.terms());
      if (!c) {
        eb.add(w.terms());
        words.push_back(std::move(w));
        imgs.push_back(std::move(wi));
        continue;
      }
      Element expect = B.zero();
      for (const auto& [m, s] : *c) expect += s * imgs[m];
      if (expect != wi) return false;
    }
  if (words.size() != A.dim()) return false;
  EchelonBasis ebb(B.field());
  for (const auto& x : imgs)
    if (!ebb.add(x.terms())) return false;

  // Linear map on the standard basis: phi(b_i) = sum_m c_m imgs[m].
  std::vector<Element> phi;
  phi.reserve(A.dim());
  for (std::size_t i = 0; i < A.dim(); ++i) {
    auto c = eb.coordinates(A.basis(i).terms());
    Element x = B.zero();
    for (const auto& [m, s] : *c) x += s * imgs[m];
    auto p = B.parity_of(x);
    if (!p || *p != A.parity(i)) return false;
    phi.push_back(std::move(x));
  }
  auto apply = [&](const SparseVec& v) {
    Element x = B.zero();
    for (const auto& [i, s] : v) x += s * phi[i];
    return x;
  };
  if (A.dim() <= 64) {
    for (std::size_t i = 0; i < A.dim(); ++i)
      for (std::size_t j = 0; j < A.dim(); ++j)
        if (apply(A.basis_product(i, j)) != B.mul(phi[i], phi[j])) return false;
  }
  return true;
}

bool is_isomorphic_via(const SuperAlgebra& A, const SuperAlgebra& B, const std::vector<Element>& images) {
  return is_isomorphic_via(A, A.generators(), B, images);
}

std::optional<std::vector<Element>> find_isomorphism(const SuperAlgebra& A, const SuperAlgebra& B) {
  if (A.dim() != B.dim() || A.field() != B.field() || A.graded_dims() != B.graded_dims()) return std::nullopt;
  const std::vector<Element> gens = generating_set(A);
  if (gens.empty()) {
    if (is_isomorphic_via(A, gens, B, {})) return std::vector<Element>{};
    return std::nullopt;
  }
  const Field F = A.field();
  auto scalar_multiple_of_unit = [](const SuperAlgebra& X, const Element& x) -> std::optional<Scalar> {
    Element u = X.unit();
    if (x.is_zero()) return Scalar::zero(X.field());
    const auto& [i0, c0] = u.terms().front();
    Scalar lambda = x.coeff(i0) / c0;
    if (lambda * u == x) return lambda;
    return std::nullopt;
  };

  const std::size_t n = gens.size();
  std::vector<std::optional<Scalar>> sq(n);
  std::vector<int> par(n);
  for (std::size_t k = 0; k < n; ++k) {
    sq[k] = scalar_multiple_of_unit(A, A.mul(gens[k], gens[k]));
    par[k] = *A.parity_of(gens[k]);
  }
  // rel[a][b]: +1 commute, -1 anticommute, 0 neither.
  std::vector<std::vector<int>> rel(n, std::vector<int>(n, 0));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < a; ++b) {
      Element ab = A.mul(gens[a], gens[b]), ba = A.mul(gens[b], gens[a]);
      if (ab == ba) rel[a][b] = 1;
      else if (ab == -ba) rel[a][b] = -1;
    }

  // Candidate images per parity: signed basis elements and two-term sums.
  std::vector<std::vector<Element>> pool(2);
  for (std::size_t i = 0; i < B.dim(); ++i) {
    int p = B.parity(i);
    pool[p].push_back(B.basis(i));
    pool[p].push_back(-B.basis(i));
  }
  for (std::size_t i = 0; i < B.dim(); ++i)
    for (std::size_t j = i + 1; j < B.dim(); ++j) {
      if (B.parity(i) != B.parity(j)) continue;
      int p = B.parity(i);
      for (int si : {1, -1})
        for (int sj : {1, -1}) pool[p].push_back(Scalar(static_cast<long>(si), F) * B.basis(i) +
                                                 Scalar(static_cast<long>(sj), F) * B.basis(j));
    }

  // Per generator, the admissible (scaled) images.
  std::vector<std::vector<Element>> cands(n);
  for (std::size_t k = 0; k < n; ++k) {
    for (const auto& c : pool[par[k]]) {
      if (!sq[k]) {
        cands[k].push_back(c);
        continue;
      }
      auto mu = scalar_multiple_of_unit(B, B.mul(c, c));
      if (!mu) continue;
      if (sq[k]->is_zero() != mu->is_zero()) continue;
      if (sq[k]->is_zero()) {
        cands[k].push_back(c);
        continue;
      }
      Scalar root;
      if (!exact_sqrt(*sq[k] / *mu, root)) continue;
      cands[k].push_back(root * c);
    }
    if (cands[k].empty()) return std::nullopt;
  }

  std::vector<Element> chosen(n);
  std::size_t budget = 200000;
  std::function<bool(std::size_t)> search = [&](std::size_t k) -> bool {
    if (k == n) return is_isomorphic_via(A, gens, B, chosen);
    for (const auto& c : cands[k]) {
      if (budget == 0) return false;
      --budget;
      bool ok = true;
      for (std::size_t b = 0; b < k && ok; ++b) {
        if (rel[k][b] == 0) continue;
        Element x = B.mul(c, chosen[b]), y = B.mul(chosen[b], c);
        ok = rel[k][b] == 1 ? x == y : x == -y;
      }
      if (!ok) continue;
      chosen[k] = c;
      if (search(k + 1)) return true;
    }
    return false;
  };
  if (search(0)) return chosen;
  return std::nullopt;
}

}  // namespace sclif

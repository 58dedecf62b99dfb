#include "sclif/morita.hpp"

#include <optional>

#include "sclif/minpoly.hpp"
#include "sclif/polynomial.hpp"

namespace sclif {

namespace {

void require_even_idempotent(const SuperAlgebra& A, const Element& f) {
  A.check_owns(f);
  auto p = A.parity_of(f);
  if (f.is_zero() || !p || *p != 0 || A.mul(f, f) != f) throw Error(Errc::NotIdempotent, "need a nonzero even idempotent");
}

Element random_combination(const SuperAlgebra& A, const std::vector<Element>& basis, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> coeff(-2, 2);
  const Field F = A.field();
  for (;;) {
    Element x = A.zero();
    if (basis.size() <= 8) {
      for (const auto& b : basis) x += Scalar(coeff(rng), F) * b;
    } else {
      std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
      for (int t = 0; t < 4; ++t) x += Scalar(coeff(rng), F) * basis[pick(rng)];
    }
    if (!x.is_zero()) return x;
  }
}

std::size_t even_count(const SuperAlgebra& A, const std::vector<Element>& xs) {
  std::size_t n = 0;
  for (const auto& x : xs) n += A.parity_of(x).value_or(1) == 0;
  return n;
}

}  // namespace

bool verify_witnesses(const SuperAlgebra& A, const Element& f, const Element& g, const Equivalent& w) {
  auto px = A.parity_of(w.x), py = A.parity_of(w.y);
  if (!px || !py || *px != w.parity || *py != w.parity) return false;
  if (A.mul(A.mul(f, w.x), g) != w.x || A.mul(A.mul(g, w.y), f) != w.y) return false;
  return A.mul(w.x, w.y) == f && A.mul(w.y, w.x) == g;
}

EquivalenceVerdict s_equivalent(const SuperAlgebra& A, const Element& f, const Element& g, Functor S,
                                std::uint64_t seed, int trials) {
  require_even_idempotent(A, f);
  require_even_idempotent(A, g);
  if (f == g) return Equivalent{f, f, 0};

  auto dims = [&](const Element& a, const Element& b) { return hom_space_dims(A, a, b); };
  auto ff = dims(f, f), gg = dims(g, g), fg = dims(f, g), gf = dims(g, f);
  if (ff != gg) return NotEquivalent{"graded dims of fAf and gAg differ"};
  if (fg.first + fg.second == 0) return NotEquivalent{"fAg = 0"};
  if (fg.first + fg.second != ff.first + ff.second || gf.first + gf.second != ff.first + ff.second)
    return NotEquivalent{"dim fAg or dim gAf differs from dim fAf"};

  // Both functors search both parities. An odd witness pair for pi in hat(A)
  // differs from one in A only by the sign of y, which the solve absorbs.
  (void)S;
  std::mt19937_64 rng(seed);
  int used = 0;
  for (int parity = 0; parity < 2 && used < trials; ++parity) {
    std::vector<Element> X = sandwich_basis(A, f, g, parity);
    std::vector<Element> Y = sandwich_basis(A, g, f, parity);
    if (X.empty() || Y.empty()) continue;
    int budget = (trials - used + 1) / (2 - parity);
    for (int t = 0; t < budget; ++t, ++used) {
      Element x = t < static_cast<int>(X.size()) ? X[static_cast<std::size_t>(t)] : random_combination(A, X, rng);
      EchelonBasis cols(A.field());
      std::vector<std::size_t> which;
      for (std::size_t k = 0; k < Y.size(); ++k)
        if (cols.add(A.mul(x, Y[k]).terms())) which.push_back(k);
      auto c = cols.coordinates(f.terms());
      if (!c) continue;
      Element y = A.zero();
      for (const auto& [m, s] : *c) y += s * Y[which[m]];
      if (A.mul(y, x) != g) continue;
      Equivalent w{x, y, parity};
      if (verify_witnesses(A, f, g, w)) return w;
    }
  }
  return Undetermined{used};
}

std::vector<Element> jacobson_radical(const SuperAlgebra& A) {
  std::vector<Element> out;
  const std::size_t n = A.dim();
  if (A.is_monomial()) {
    BladeMask null_mask = 0;
    const auto& sq = A.signature()->squares();
    for (std::size_t i = 0; i < sq.size(); ++i)
      if (sq[i] == 0) null_mask |= BladeMask{1} << i;
    for (int par = 0; par < 2; ++par)
      for (std::size_t k = 0; k < n; ++k)
        if (A.parity(k) == par && (k & null_mask)) out.push_back(A.basis(k));
    return out;
  }
  const Field F = A.field();
  std::vector<Scalar> tr(n, Scalar::zero(F));
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l) tr[k] += sparse::get(A.basis_product(k, l), static_cast<std::uint32_t>(l), F);
  for (int par = 0; par < 2; ++par) {
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k < n; ++k)
      if (A.parity(k) == par) idx.push_back(k);
    if (idx.empty()) continue;
    Matrix G(idx.size(), idx.size(), F);
    for (std::size_t a = 0; a < idx.size(); ++a)
      for (std::size_t b = 0; b < idx.size(); ++b) {
        Scalar s = Scalar::zero(F);
        for (const auto& [k, c] : A.basis_product(idx[a], idx[b])) s += c * tr[k];
        G(a, b) = s;
      }
    for (const auto& v : nullspace(G)) {
      SparseVec t;
      for (std::size_t a = 0; a < idx.size(); ++a)
        if (!v[a].is_zero()) t.emplace_back(static_cast<std::uint32_t>(idx[a]), v[a]);
      out.push_back(A.element(std::move(t)));
    }
  }
  return out;
}

Element random_homogeneous(const SuperAlgebra& A, int parity, std::mt19937_64& rng) {
  std::vector<Element> basis;
  for (std::size_t k = 0; k < A.dim(); ++k)
    if (A.parity(k) == parity) basis.push_back(A.basis(k));
  if (basis.empty()) throw Error(Errc::InvalidArgument, "no basis elements of that parity");
  return random_combination(A, basis, rng);
}

const char* primitivity_name(Primitivity p) {
  switch (p) {
    case Primitivity::Certified: return "certified";
    case Primitivity::NoSplitFound: return "no-split-found";
    case Primitivity::Unconfirmed: return "unconfirmed";
  }
  return "?";
}

bool IdempotentDecomposition::confirmed() const {
  if (undetermined != 0) return false;
  for (auto s : status)
    if (s == Primitivity::Unconfirmed) return false;
  return true;
}

namespace {

// Proper factor a of m with gcd(a, m/a) = 1, from a root or a quadratic factor.
std::optional<Polynomial> coprime_factor(const Polynomial& m) {
  for (const auto& lambda : roots_in_field(m)) {
    Polynomial lin = Polynomial::linear_factor(lambda);
    Polynomial a = lin;
    for (int k = root_multiplicity(m, lambda); k > 1; --k) a = a * lin;
    if (a.degree() < m.degree()) return a;
  }
  if (auto q = quadratic_factor(m)) {
    Polynomial a = *q;
    while (divmod(m, a * *q).remainder.is_zero()) a = a * *q;
    if (a.degree() < m.degree()) return a;
  }
  return std::nullopt;
}

// Largest degree for which "no linear or quadratic factor" proves a monic
// squarefree polynomial irreducible.
constexpr int kIrreducibleProofDegree = 5;

class Splitter {
 public:
  Splitter(const SuperAlgebra& A, std::uint64_t seed, int budget) : A_(A), rng_(seed), budget_(budget) {}

  void run(const Element& e) {
    std::vector<Element> E0 = sandwich_basis(A_, e, e, 0);
    if (E0.size() == 1 || radical_certifies(e, E0.size())) {
      leaves.push_back(e);
      status.push_back(Primitivity::Certified);
      return;
    }
    bool irreducible = true;
    for (int t = 0; t < budget_; ++t) {
      Element u = t < static_cast<int>(E0.size()) ? E0[static_cast<std::size_t>(t)] : random_combination(A_, E0, rng_);
      Polynomial m = minimal_polynomial(A_, u, e);
      if (m.degree() <= 1) continue;
      if (auto a = coprime_factor(m)) {
        Polynomial h = divmod(m, *a).quotient;
        Bezout bz = ext_gcd(*a, h);
        Element e1 = evaluate_at(A_, bz.t * h, u, e);
        Element e2 = e - e1;
        run(e1);
        run(e2);
        return;
      }
      int sf = squarefree_part(m).degree();
      if (sf > kIrreducibleProofDegree) irreducible = false;
    }
    leaves.push_back(e);
    status.push_back(irreducible ? Primitivity::NoSplitFound : Primitivity::Unconfirmed);
  }

  std::vector<Element> leaves;
  std::vector<Primitivity> status;

 private:
  // Even part of eAe is one-dimensional modulo the radical of eAe.
  bool radical_certifies(const Element& e, std::size_t even_dim) {
    if (even_dim > 64) return false;
    SuperAlgebra C = corner(A_, e);
    return even_dim - even_count(C, jacobson_radical(C)) == 1;
  }

  const SuperAlgebra& A_;
  std::mt19937_64 rng_;
  int budget_;
};

}  // namespace

IdempotentDecomposition primitive_decomposition(const SuperAlgebra& A, std::uint64_t seed, int budget, Functor S) {
  Splitter sp(A, seed, budget);
  sp.run(A.unit());
  IdempotentDecomposition d;
  d.idempotents = std::move(sp.leaves);
  d.status = std::move(sp.status);
  for (std::size_t i = 0; i < d.idempotents.size(); ++i) {
    bool placed = false;
    for (std::size_t c = 0; c < d.classes.size() && !placed; ++c) {
      const Element& rep = d.idempotents[d.classes[c][0]];
      EquivalenceVerdict v = s_equivalent(A, d.idempotents[i], rep, S, seed, budget);
      if (auto* w = std::get_if<Equivalent>(&v)) {
        d.classes[c].push_back(i);
        d.witnesses[c].push_back(*w);
        placed = true;
      } else if (std::holds_alternative<Undetermined>(v)) {
        ++d.undetermined;
      }
    }
    if (!placed) {
      d.classes.push_back({i});
      d.witnesses.emplace_back();
    }
  }
  return d;
}

bool gr_divisional_check(const SuperAlgebra& A, std::uint64_t seed, int samples) {
  if (!jacobson_radical(A).empty()) return false;
  if (primitive_decomposition(A, seed, samples).idempotents.size() != 1) return false;
  auto [d0, d1] = A.graded_dims();
  std::mt19937_64 rng(seed);
  for (int s = 0; s < samples; ++s) {
    int parity = (s % 2 == 1 && d1 > 0) || d0 == 0 ? 1 : 0;
    Element x = random_homogeneous(A, parity, rng);
    if (minimal_polynomial(A, x).coeff(0).is_zero()) return false;
  }
  return true;
}

bool gr_local_check(const SuperAlgebra& A, std::uint64_t seed, int samples) {
  auto [d0, d1] = A.graded_dims();
  std::mt19937_64 rng(seed);
  for (int s = 0; s < samples; ++s) {
    int parity = (s % 2 == 1 && d1 > 0) || d0 == 0 ? 1 : 0;
    Element x = random_homogeneous(A, parity, rng);
    Polynomial m = minimal_polynomial(A, x);
    if (!m.coeff(0).is_zero()) continue;
    for (int i = 0; i < m.degree(); ++i)
      if (!m.coeff(i).is_zero()) return false;
  }
  return gr_divisional_check(quotient(A, jacobson_radical(A)), seed, samples);
}

BasicReduction basic_reduction(const SuperAlgebra& A, Functor S, std::uint64_t seed, int budget) {
  IdempotentDecomposition d = primitive_decomposition(A, seed, budget, S);
  Element e = A.zero();
  for (const auto& cls : d.classes) e += d.idempotents[cls[0]];
  SuperAlgebra B = corner(A, e);
  if (S == Functor::Pi) B = hat(B);
  bool confirmed = d.confirmed();
  return BasicReduction{std::move(B), std::move(e), std::move(d), confirmed};
}

}  // namespace sclif

#include "sclif/algebra.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>

#include "algebra_internal.hpp"

namespace sclif {

namespace {

std::atomic<std::uint64_t> next_algebra_id{1};

// Reusable dense accumulator for products; entries are assigned on first
// touch so the ambient field never has to be known up front.
class Accumulator {
 public:
  void reset(std::size_t dim) {
    if (vals_.size() < dim) {
      vals_.resize(dim);
      used_.resize(dim, 0);
    }
  }

  void add(std::uint32_t k, Scalar s, bool negate) {
    if (!used_[k]) {
      vals_[k] = negate ? -s : std::move(s);
      used_[k] = 1;
      touched_.push_back(k);
    } else if (negate) {
      vals_[k] -= s;
    } else {
      vals_[k] += s;
    }
  }

  SparseVec collect() {
    std::sort(touched_.begin(), touched_.end());
    SparseVec out;
    out.reserve(touched_.size());
    for (auto k : touched_) {
      if (!vals_[k].is_zero()) out.emplace_back(k, std::move(vals_[k]));
      used_[k] = 0;
    }
    touched_.clear();
    return out;
  }

 private:
  std::vector<Scalar> vals_;
  std::vector<char> used_;
  std::vector<std::uint32_t> touched_;
};

thread_local Accumulator accumulator;

}  // namespace

const char* functor_name(Functor s) { return s == Functor::Sigma ? "sigma" : "pi"; }

Element::Element(std::uint64_t algebra_id, Field field, SparseVec terms)
    : algebra_(algebra_id), field_(field), terms_(std::move(terms)) {}

void Element::check_same(const Element& o) const {
  if (algebra_ != o.algebra_) throw Error(Errc::AlgebraMismatch, "elements of different algebras");
}

Element& Element::operator+=(const Element& o) {
  check_same(o);
  sparse::axpy(terms_, Scalar::one(field_), o.terms_);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  check_same(o);
  sparse::axpy(terms_, -Scalar::one(field_), o.terms_);
  return *this;
}

Element& Element::operator*=(const Scalar& s) {
  terms_ = sparse::scaled(terms_, s);
  return *this;
}

SuperAlgebra::SuperAlgebra(std::shared_ptr<const AlgebraData> d) : d_(std::move(d)) {
  for (const auto& g : d_->generators) generators_.push_back(Element(d_->id, d_->field, g));
}

SuperAlgebra SuperAlgebra::monomial(Signature sig, bool hatted, std::string label) {
  auto d = std::make_shared<AlgebraData>();
  d->id = next_algebra_id++;
  d->label = std::move(label);
  d->field = sig.field();
  d->dim = sig.dim();
  d->parity.resize(d->dim);
  for (std::size_t m = 0; m < d->dim; ++m) d->parity[m] = static_cast<std::uint8_t>(blade_parity(static_cast<BladeMask>(m)));
  d->unit = {{0u, Scalar::one(sig.field())}};
  for (int i = 0; i < sig.n(); ++i) d->generators.push_back({{BladeMask{1} << i, Scalar::one(sig.field())}});
  d->signature = std::move(sig);
  d->hatted = hatted;
  return SuperAlgebra(std::move(d));
}

SuperAlgebra SuperAlgebra::general(AlgebraData data) {
  if (data.table.size() != data.dim * data.dim) throw Error(Errc::DimMismatch, "structure table size");
  if (data.parity.size() != data.dim) throw Error(Errc::DimMismatch, "parity vector size");
  data.id = next_algebra_id++;
  data.signature.reset();
  data.hatted = false;
  return SuperAlgebra(std::make_shared<AlgebraData>(std::move(data)));
}

std::pair<std::size_t, std::size_t> SuperAlgebra::graded_dims() const {
  std::size_t odd = static_cast<std::size_t>(std::count(d_->parity.begin(), d_->parity.end(), 1));
  return {dim() - odd, odd};
}

Element SuperAlgebra::unit() const { return Element(id(), field(), d_->unit); }

Element SuperAlgebra::basis(std::size_t i) const {
  if (i >= dim()) throw Error(Errc::InvalidArgument, "basis index out of range");
  return Element(id(), field(), {{static_cast<std::uint32_t>(i), Scalar::one(field())}});
}

Element SuperAlgebra::scalar(const Scalar& s) const { return s * unit(); }

Element SuperAlgebra::element(SparseVec terms) const {
  for (const auto& [i, c] : terms) {
    if (i >= dim()) throw Error(Errc::InvalidArgument, "basis index out of range");
    if (c.field() != field()) throw Error(Errc::FieldMismatch, "coefficient field");
  }
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVec clean;
  for (auto& t : terms) {
    if (!clean.empty() && clean.back().first == t.first) {
      clean.back().second += t.second;
      if (clean.back().second.is_zero()) clean.pop_back();
    } else if (!t.second.is_zero()) {
      clean.push_back(std::move(t));
    }
  }
  return Element(id(), field(), std::move(clean));
}

Element SuperAlgebra::from_dense(const std::vector<Scalar>& coords) const {
  if (coords.size() != dim()) throw Error(Errc::DimMismatch, "coordinate vector length");
  return Element(id(), field(), sparse::from_dense(coords));
}

void SuperAlgebra::check_owns(const Element& x) const {
  if (!owns(x)) throw Error(Errc::AlgebraMismatch, "element does not belong to " + label());
}

Element SuperAlgebra::mul(const Element& x, const Element& y) const {
  check_owns(x);
  check_owns(y);
  if (x.is_zero() || y.is_zero()) return zero();
  accumulator.reset(dim());
  if (is_monomial()) {
    const int* squares = d_->signature->squares().data();
    for (const auto& [i, a] : x.terms()) {
      for (const auto& [j, b] : y.terms()) {
        BladeProduct bp = blade_mul_raw(i, j, squares);
        if (bp.coeff == 0) continue;
        bool negate = bp.coeff < 0;
        if (d_->hatted && (d_->parity[i] & d_->parity[j])) negate = !negate;
        accumulator.add(bp.mask, a * b, negate);
      }
    }
  } else {
    for (const auto& [i, a] : x.terms()) {
      for (const auto& [j, b] : y.terms()) {
        const SparseVec& t = d_->table[static_cast<std::size_t>(i) * dim() + j];
        if (t.empty()) continue;
        Scalar ab = a * b;
        for (const auto& [k, c] : t) accumulator.add(k, ab * c, false);
      }
    }
  }
  return Element(id(), field(), accumulator.collect());
}

SparseVec SuperAlgebra::basis_product(std::size_t i, std::size_t j) const {
  if (i >= dim() || j >= dim()) throw Error(Errc::InvalidArgument, "basis index out of range");
  if (!is_monomial()) return d_->table[i * dim() + j];
  BladeProduct bp = blade_mul_raw(static_cast<BladeMask>(i), static_cast<BladeMask>(j), d_->signature->squares().data());
  if (bp.coeff == 0) return {};
  int sign = bp.coeff;
  if (d_->hatted && (d_->parity[i] & d_->parity[j])) sign = -sign;
  return {{bp.mask, Scalar(static_cast<long>(sign), field())}};
}

std::optional<int> SuperAlgebra::parity_of(const Element& x) const {
  check_owns(x);
  if (x.is_zero()) return 0;
  int p = d_->parity[x.terms().front().first];
  for (const auto& [i, c] : x.terms())
    if (d_->parity[i] != p) return std::nullopt;
  return p;
}

Element SuperAlgebra::even_part(const Element& x) const {
  check_owns(x);
  SparseVec t;
  for (const auto& e : x.terms())
    if (d_->parity[e.first] == 0) t.push_back(e);
  return Element(id(), field(), std::move(t));
}

Element SuperAlgebra::odd_part(const Element& x) const {
  check_owns(x);
  SparseVec t;
  for (const auto& e : x.terms())
    if (d_->parity[e.first] == 1) t.push_back(e);
  return Element(id(), field(), std::move(t));
}

std::string SuperAlgebra::basis_label(std::size_t i) const {
  if (is_monomial()) return blade_name(static_cast<BladeMask>(i));
  if (i < d_->basis_labels.size()) return d_->basis_labels[i];
  return "b" + std::to_string(i);
}

std::string SuperAlgebra::format(const Element& x) const {
  check_owns(x);
  if (x.is_zero()) return "0";
  // Terms on the unit come first when the unit is a basis element.
  std::ostringstream os;
  bool first = true;
  for (const auto& [i, c] : x.terms()) {
    std::string lbl = basis_label(i);
    std::string term;
    bool negative = false;
    Scalar mag = c;
    if (c.is_real() && sgn(c.re()) < 0) {
      negative = true;
      mag = -c;
    } else if (sgn(c.re()) == 0 && sgn(c.im()) < 0) {
      negative = true;
      mag = -c;
    }
    bool compound = !mag.is_real() && sgn(mag.re()) != 0;
    std::string ms = compound ? "(" + mag.str() + ")" : mag.str();
    if (lbl == "1")
      term = ms;
    else if (mag.is_one())
      term = lbl;
    else
      term = ms + "*" + lbl;
    if (first)
      os << (negative ? "-" : "") << term;
    else
      os << (negative ? " - " : " + ") << term;
    first = false;
  }
  return os.str();
}

std::optional<Element> SuperAlgebra::embed(const Element& x, const SuperAlgebra& parent) const {
  check_owns(x);
  if (d_->parent_id != parent.id() || d_->embedding.size() != dim()) return std::nullopt;
  Element out = parent.zero();
  for (const auto& [i, c] : x.terms()) out += c * Element(parent.id(), parent.field(), d_->embedding[i]);
  return out;
}

Element mul(const SuperAlgebra& A, const Element& x, const Element& y) { return A.mul(x, y); }

Element power(const SuperAlgebra& A, const Element& x, int k) {
  Element r = A.unit();
  for (int i = 0; i < k; ++i) r = A.mul(r, x);
  return r;
}

SuperAlgebra clifford(const Signature& sig, std::string label) {
  if (label.empty()) {
    std::ostringstream os;
    if (sig.field() == Field::Real && sig == Signature::real(sig.p(), sig.q(), sig.r()))
      os << "R(" << sig.p() << "," << sig.q() << "," << sig.r() << ")";
    else if (sig.field() == Field::Complex && sig == Signature::complex(sig.p(), sig.r()))
      os << "C(" << sig.p() << "," << sig.r() << ")";
    else {
      os << (sig.field() == Field::Real ? "Cl_R[" : "Cl_C[");
      for (int i = 0; i < sig.n(); ++i) os << (i ? "," : "") << sig.square(i);
      os << "]";
    }
    label = os.str();
  }
  return SuperAlgebra::monomial(sig, false, std::move(label));
}

SuperAlgebra clifford_real(int p, int q, int r) { return clifford(Signature::real(p, q, r)); }

SuperAlgebra clifford_complex(int p, int q) { return clifford(Signature::complex(p, q)); }

SuperAlgebra ground_field(Field f) {
  return clifford(Signature({}, f), f == Field::Real ? "R" : "C");
}

SuperAlgebra skew_tensor(const SuperAlgebra& A, const SuperAlgebra& B) {
  if (A.field() != B.field()) throw Error(Errc::FieldMismatch, "skew tensor of algebras over different fields");
  std::string label = A.label() + " ⊗ " + B.label();
  if (A.is_monomial() && B.is_monomial() && !A.is_hatted() && !B.is_hatted()) {
    std::vector<int> squares = A.signature()->squares();
    const auto& sb = B.signature()->squares();
    squares.insert(squares.end(), sb.begin(), sb.end());
    if (squares.size() > static_cast<std::size_t>(kMaxGenerators))
      throw Error(Errc::TooLarge, "skew tensor exceeds " + std::to_string(kMaxGenerators) + " generators");
    return SuperAlgebra::monomial(Signature(std::move(squares), A.field()), false, std::move(label));
  }
  const std::size_t da = A.dim(), db = B.dim(), dim = da * db;
  if (dim > 4096) throw Error(Errc::TooLarge, "general-tier skew tensor larger than 4096");
  AlgebraData d;
  d.label = std::move(label);
  d.field = A.field();
  d.dim = dim;
  d.parity.resize(dim);
  for (std::size_t j = 0; j < db; ++j)
    for (std::size_t i = 0; i < da; ++i) d.parity[i + da * j] = static_cast<std::uint8_t>((A.parity(i) + B.parity(j)) & 1);
  d.table.resize(dim * dim);
  std::vector<SparseVec> pa(da * da), pb(db * db);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t k = 0; k < da; ++k) pa[i * da + k] = A.basis_product(i, k);
  for (std::size_t j = 0; j < db; ++j)
    for (std::size_t l = 0; l < db; ++l) pb[j * db + l] = B.basis_product(j, l);
  for (std::size_t j = 0; j < db; ++j)
    for (std::size_t i = 0; i < da; ++i)
      for (std::size_t l = 0; l < db; ++l)
        for (std::size_t k = 0; k < da; ++k) {
          const SparseVec& x = pa[i * da + k];
          const SparseVec& y = pb[j * db + l];
          if (x.empty() || y.empty()) continue;
          bool negate = B.parity(j) & A.parity(k);
          SparseVec out;
          for (const auto& [u, cu] : y)
            for (const auto& [t, ct] : x) {
              Scalar c = ct * cu;
              out.emplace_back(static_cast<std::uint32_t>(t + da * u), negate ? -c : c);
            }
          std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
          d.table[(i + da * j) * dim + (k + da * l)] = std::move(out);
        }
  auto tensor_terms = [&](const SparseVec& a, const SparseVec& b) {
    SparseVec out;
    for (const auto& [u, cu] : b)
      for (const auto& [t, ct] : a) out.emplace_back(static_cast<std::uint32_t>(t + da * u), ct * cu);
    std::sort(out.begin(), out.end(), [](const auto& a2, const auto& b2) { return a2.first < b2.first; });
    return out;
  };
  d.unit = tensor_terms(A.unit().terms(), B.unit().terms());
  for (const auto& g : A.generators()) d.generators.push_back(tensor_terms(g.terms(), B.unit().terms()));
  for (const auto& g : B.generators()) d.generators.push_back(tensor_terms(A.unit().terms(), g.terms()));
  d.basis_labels.resize(dim);
  for (std::size_t j = 0; j < db; ++j)
    for (std::size_t i = 0; i < da; ++i) d.basis_labels[i + da * j] = A.basis_label(i) + "⊗" + B.basis_label(j);
  return SuperAlgebra::general(std::move(d));
}

Element tensor_element(const SuperAlgebra& AB, const SuperAlgebra& A, const SuperAlgebra& B, const Element& a,
                       const Element& b) {
  A.check_owns(a);
  B.check_owns(b);
  if (AB.dim() != A.dim() * B.dim()) throw Error(Errc::DimMismatch, "not a tensor of these factors");
  SparseVec out;
  for (const auto& [u, cu] : b.terms())
    for (const auto& [t, ct] : a.terms()) out.emplace_back(static_cast<std::uint32_t>(t + A.dim() * u), ct * cu);
  return AB.element(std::move(out));
}

SuperAlgebra hat(const SuperAlgebra& A) {
  std::string label = "hat(" + A.label() + ")";
  if (A.is_monomial()) return SuperAlgebra::monomial(*A.signature(), !A.is_hatted(), std::move(label));
  AlgebraData d = A.data();
  d.label = std::move(label);
  d.parent_id = 0;
  d.embedding.clear();
  for (std::size_t i = 0; i < d.dim; ++i)
    for (std::size_t j = 0; j < d.dim; ++j)
      if (d.parity[i] & d.parity[j]) d.table[i * d.dim + j] = sparse::scaled(d.table[i * d.dim + j], -Scalar::one(d.field));
  return SuperAlgebra::general(std::move(d));
}

Element transport(const SuperAlgebra& to, const Element& x) {
  return to.element(x.terms());
}

Element grade_involution(const SuperAlgebra& A, const Element& x) {
  return A.even_part(x) - A.odd_part(x);
}

}  // namespace sclif

#include "sclif/classify.hpp"

#include <array>
#include <vector>

namespace sclif {

namespace {

int mod(int a, int m) { return ((a % m) + m) % m; }

std::string rank_suffix(int r) { return r > 0 ? " ⊗ Λ(" + std::to_string(r) + ")" : ""; }

// Inertia of the trace form tr(L_{xy}) on each graded piece.
std::array<std::pair<std::size_t, std::size_t>, 2> trace_inertia(const SuperAlgebra& A) {
  const std::size_t n = A.dim();
  const Field F = A.field();
  std::vector<Scalar> tr(n, Scalar::zero(F));
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l) tr[k] += sparse::get(A.basis_product(k, l), static_cast<std::uint32_t>(l), F);
  std::array<std::pair<std::size_t, std::size_t>, 2> out{};
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
    out[static_cast<std::size_t>(par)] = inertia(G);
  }
  return out;
}

}  // namespace

RealClass RealClass::from_index(int residue, int rank) {
  int d = mod(residue, 8);
  RealClass c;
  c.grassmann_rank = rank;
  if (d == 0) {
    c.core = Core::Triv;
  } else if (d == 4) {
    c.core = Core::Quat;
  } else if (d < 4) {
    c.core = Core::DPlus;
    c.k = d;
  } else {
    c.core = Core::DMinus;
    c.k = 8 - d;
  }
  return c;
}

int RealClass::index() const {
  switch (core) {
    case Core::Triv: return 0;
    case Core::Quat: return 4;
    case Core::DPlus: return k;
    case Core::DMinus: return 8 - k;
  }
  return 0;
}

std::string RealClass::core_name() const {
  switch (core) {
    case Core::Triv: return "R";
    case Core::Quat: return "H";
    case Core::DPlus: return k == 1 ? "D+" : "D+^" + std::to_string(k);
    case Core::DMinus: return k == 1 ? "D-" : "D-^" + std::to_string(k);
  }
  return "?";
}

std::string RealClass::name() const { return core_name() + rank_suffix(grassmann_rank); }

std::string ComplexClass::name() const { return core_name() + rank_suffix(grassmann_rank); }

std::string class_name(const BasicClass& c) {
  return std::visit([](const auto& x) { return x.name(); }, c);
}

RealClass real_basic_class(int p, int q, int r, Functor S) {
  if (p < 0 || q < 0 || r < 0) throw Error(Errc::InvalidArgument, "negative signature entry");
  int d = mod(p - q, 8);
  if (S == Functor::Pi) d = mod(-d, 8);
  return RealClass::from_index(d, r);
}

ComplexClass complex_basic_class(int p, int q) {
  if (p < 0 || q < 0) throw Error(Errc::InvalidArgument, "negative signature entry");
  return ComplexClass{p % 2 ? ComplexClass::Core::DOdd : ComplexClass::Core::TrivC, q};
}

std::string printed_table_class(int residue) {
  static const char* printed[8] = {"R", "D+", "D+^2", "D+^3", "H", "D-", "D-^2", "D-^3"};
  return printed[mod(residue, 8)];
}

RealClass theorem_display_class(int residue, Functor S) {
  int d = mod(residue, 8);
  if (S == Functor::Pi) d = mod(-d, 8);
  RealClass c;
  if (d == 0) return c;
  if (d == 4) {
    c.core = RealClass::Core::Quat;
    return c;
  }
  // D+^i at 4 - i, D-^i at 4 + i.
  if (d < 4) {
    c.core = RealClass::Core::DPlus;
    c.k = 4 - d;
  } else {
    c.core = RealClass::Core::DMinus;
    c.k = d - 4;
  }
  return c;
}

SuperAlgebra realize(const RealClass& c) {
  const int r = c.grassmann_rank;
  switch (c.core) {
    case RealClass::Core::Triv:
      return r == 0 ? ground_field(Field::Real) : clifford(Signature::real(0, 0, r), c.name());
    case RealClass::Core::DPlus: return clifford(Signature::real(c.k, 0, r), c.name());
    case RealClass::Core::DMinus: return clifford(Signature::real(0, c.k, r), c.name());
    case RealClass::Core::Quat:
      return r == 0 ? quaternions() : skew_tensor(quaternions(), clifford_real(0, 0, r));
  }
  throw Error(Errc::InvalidArgument, "unknown class");
}

SuperAlgebra realize(const ComplexClass& c) {
  int p = c.core == ComplexClass::Core::DOdd ? 1 : 0;
  if (p == 0 && c.grassmann_rank == 0) return ground_field(Field::Complex);
  return clifford(Signature::complex(p, c.grassmann_rank), c.name());
}

Identification identify(const SuperAlgebra& B) {
  std::vector<Element> J = jacobson_radical(B);
  SuperAlgebra Q = J.empty() ? B : quotient(B, J);
  if (Q.dim() == 0 || B.dim() % Q.dim() != 0) throw Error(Errc::UnrecognizedBasic, "radical quotient of " + B.label());
  std::size_t ratio = B.dim() / Q.dim();
  int rank = 0;
  while ((std::size_t{1} << rank) < ratio) ++rank;
  if ((std::size_t{1} << rank) != ratio) throw Error(Errc::UnrecognizedBasic, "dim B / dim B/J is not a power of 2");
  if (Q.dim() > 8) throw Error(Errc::UnrecognizedBasic, "semisimple quotient larger than 8");

  std::vector<BasicClass> cands;
  if (B.field() == Field::Real) {
    for (int d = 0; d < 8; ++d) cands.push_back(RealClass::from_index(d));
  } else {
    cands.push_back(ComplexClass{ComplexClass::Core::TrivC, 0});
    cands.push_back(ComplexClass{ComplexClass::Core::DOdd, 0});
  }
  auto with_rank = [rank](BasicClass c) {
    std::visit([rank](auto& x) { x.grassmann_rank = rank; }, c);
    return c;
  };
  std::vector<BasicClass> matching_dims;
  for (const auto& c : cands) {
    SuperAlgebra R = std::visit([](const auto& x) { return realize(x); }, c);
    if (R.graded_dims() != Q.graded_dims()) continue;
    if (find_isomorphism(R, Q)) return {with_rank(c), true};
    matching_dims.push_back(c);
  }
  if (B.field() == Field::Real) {
    auto inv = trace_inertia(Q);
    for (const auto& c : matching_dims) {
      SuperAlgebra R = std::visit([](const auto& x) { return realize(x); }, c);
      if (trace_inertia(R) == inv) return {with_rank(c), false};
    }
  } else if (matching_dims.size() == 1) {
    return {with_rank(matching_dims.front()), false};
  }
  throw Error(Errc::UnrecognizedBasic, "no representative matches " + B.label());
}

OracleResult oracle_classify_real(int p, int q, int r, Functor S, std::uint64_t seed) {
  Signature sig = Signature::real(p, q, r);
  if (sig.dim() > kOracleMaxDim) throw Error(Errc::TooLarge, "oracle limited to dimension " + std::to_string(kOracleMaxDim));
  BasicReduction br = basic_reduction(clifford(sig), S, seed);
  OracleResult out{identify(br.basic), br.confirmed, br.decomposition.idempotents.size(), br.basic.dim()};
  return out;
}

OracleResult oracle_classify_complex(int p, int q, Functor S, std::uint64_t seed) {
  Signature sig = Signature::complex(p, q);
  if (sig.dim() > kOracleMaxDim) throw Error(Errc::TooLarge, "oracle limited to dimension " + std::to_string(kOracleMaxDim));
  BasicReduction br = basic_reduction(clifford(sig), S, seed);
  OracleResult out{identify(br.basic), br.confirmed, br.decomposition.idempotents.size(), br.basic.dim()};
  return out;
}

}  // namespace sclif

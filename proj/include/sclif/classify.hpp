#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include "sclif/algebra.hpp"
#include "sclif/morita.hpp"

namespace sclif {

// One of the eight real graded basic cores, tensored with a Grassmann algebra.
// index() is the residue (p - q) mod 8 at which the core occurs under sigma.
struct RealClass {
  enum class Core { Triv, DPlus, Quat, DMinus };
  Core core = Core::Triv;
  int k = 0;  // 1..3 for DPlus / DMinus
  int grassmann_rank = 0;

  static RealClass from_index(int residue, int rank = 0);
  int index() const;
  std::string core_name() const;
  std::string name() const;

  friend bool operator==(const RealClass&, const RealClass&) = default;
};

struct ComplexClass {
  enum class Core { TrivC, DOdd };
  Core core = Core::TrivC;
  int grassmann_rank = 0;

  int index() const { return core == Core::DOdd ? 1 : 0; }
  std::string core_name() const { return core == Core::DOdd ? "D" : "C"; }
  std::string name() const;

  friend bool operator==(const ComplexClass&, const ComplexClass&) = default;
};

using BasicClass = std::variant<RealClass, ComplexClass>;
std::string class_name(const BasicClass& c);

RealClass real_basic_class(int p, int q, int r, Functor S = Functor::Sigma);
ComplexClass complex_basic_class(int p, int q);

// Class entries of the printed Grothendieck table, residue 0..7 (names as in
// RealClass::core_name).
std::string printed_table_class(int residue);
// Alternative reading of the class map: D+^i at residue 4 - i, D-^i at 4 + i
// under sigma, swapped under pi.
RealClass theorem_display_class(int residue, Functor S = Functor::Sigma);

SuperAlgebra realize(const RealClass& c);
SuperAlgebra realize(const ComplexClass& c);

struct Identification {
  BasicClass cls;
  // True when an explicit generator isomorphism onto the realized core was
  // found; false when only the real invariants (graded dims and trace-form
  // inertia) matched.
  bool exact = true;
};

// Names B by its semisimple quotient B/J(B) and the radical size.
Identification identify(const SuperAlgebra& B);

struct OracleResult {
  Identification id;
  bool confirmed = true;  // basic reduction fully confirmed
  std::size_t idempotents = 0;
  std::size_t basic_dim = 0;
};

// Brute-force path: build, reduce, identify. No class arithmetic.
OracleResult oracle_classify_real(int p, int q, int r, Functor S = Functor::Sigma, std::uint64_t seed = kDefaultSeed);
OracleResult oracle_classify_complex(int p, int q, Functor S = Functor::Sigma, std::uint64_t seed = kDefaultSeed);

inline constexpr std::size_t kOracleMaxDim = 256;

}  // namespace sclif

#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "sclif/algebra.hpp"

namespace sclif {

inline constexpr std::uint64_t kDefaultSeed = 1;
inline constexpr int kDefaultTrials = 200;

// x in fAg, y in gAf homogeneous of the same parity with x·y = f, y·x = g.
struct Equivalent {
  Element x, y;
  int parity = 0;
};
struct NotEquivalent {
  std::string certificate;
};
struct Undetermined {
  int trials = 0;
};
using EquivalenceVerdict = std::variant<Equivalent, NotEquivalent, Undetermined>;

// Witness search. NotEquivalent is only returned with an invariant
// certificate; a failed search is Undetermined.
EquivalenceVerdict s_equivalent(const SuperAlgebra& A, const Element& f, const Element& g, Functor S,
                                std::uint64_t seed = kDefaultSeed, int trials = kDefaultTrials);

// Witnesses satisfy the defining equations exactly.
bool verify_witnesses(const SuperAlgebra& A, const Element& f, const Element& g, const Equivalent& w);

// Graded basis of J(A) from the trace form b_i, b_j -> tr(L_{b_i b_j}).
std::vector<Element> jacobson_radical(const SuperAlgebra& A);

// Random nonzero homogeneous element with small integer coordinates.
Element random_homogeneous(const SuperAlgebra& A, int parity, std::mt19937_64& rng);

enum class Primitivity {
  Certified,     // even part of the corner is one-dimensional modulo its radical
  NoSplitFound,  // every sampled minimal polynomial had an irreducible squarefree part
  Unconfirmed,   // budget exhausted with an unresolved sample
};
const char* primitivity_name(Primitivity p);

struct IdempotentDecomposition {
  std::vector<Element> idempotents;
  std::vector<Primitivity> status;
  // Partition of indices into S-equivalence classes; classes[c][0] is the
  // representative.
  std::vector<std::vector<std::size_t>> classes;
  // witnesses[c][k] links classes[c][k+1] to the representative.
  std::vector<std::vector<Equivalent>> witnesses;
  // Pairs whose comparison ended Undetermined.
  std::size_t undetermined = 0;

  bool confirmed() const;
};

IdempotentDecomposition primitive_decomposition(const SuperAlgebra& A, std::uint64_t seed = kDefaultSeed,
                                                int budget = kDefaultTrials, Functor S = Functor::Sigma);

bool gr_divisional_check(const SuperAlgebra& A, std::uint64_t seed = kDefaultSeed, int samples = kDefaultTrials);
bool gr_local_check(const SuperAlgebra& A, std::uint64_t seed = kDefaultSeed, int samples = kDefaultTrials);

struct BasicReduction {
  SuperAlgebra basic;
  Element idempotent;  // in A
  IdempotentDecomposition decomposition;
  bool confirmed = true;  // false flags an unconfirmed basic algebra
};

// corner(A, e) for e a sum of one primitive idempotent per class; for pi the
// corner is returned hatted, since pi-modules over A are sigma-modules over
// hat(A).
BasicReduction basic_reduction(const SuperAlgebra& A, Functor S = Functor::Sigma, std::uint64_t seed = kDefaultSeed,
                               int budget = kDefaultTrials);

}  // namespace sclif

#include "sclif/verify.hpp"

#include <algorithm>
#include <chrono>
#include <random>

#include "sclif/classify.hpp"
#include "sclif/modules.hpp"

namespace sclif {

const char* check_status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Undetermined: return "undetermined";
  }
  return "?";
}

void VerifyReport::expect(bool ok, std::string what) {
  items.push_back({std::move(what), ok ? CheckStatus::Pass : CheckStatus::Fail});
  if (!ok) status = CheckStatus::Fail;
}

void VerifyReport::undetermined(std::string what) {
  items.push_back({std::move(what), CheckStatus::Undetermined});
  if (status == CheckStatus::Pass) status = CheckStatus::Undetermined;
}

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = {"complex-dd", "d8", "dc", "dd", "dddd", "hh", "modules", "tensor-law"};
  return names;
}

namespace {

Scalar half(Field f) { return Scalar::rational(1, 2, f); }

bool same_class(const BasicClass& a, const BasicClass& b) { return a == b; }

void decomposition_witnesses(VerifyReport& rep, const SuperAlgebra& A, const IdempotentDecomposition& d) {
  for (std::size_t i = 0; i < d.idempotents.size(); ++i)
    rep.witness("idempotent " + std::to_string(i) + " [" + primitivity_name(d.status[i]) + "]: " +
                A.format(d.idempotents[i]));
}

// Orthogonal, even, complete.
bool decomposition_sound(const SuperAlgebra& A, const IdempotentDecomposition& d) {
  Element sum = A.zero();
  for (std::size_t i = 0; i < d.idempotents.size(); ++i) {
    const Element& e = d.idempotents[i];
    if (e.is_zero() || A.parity_of(e) != std::optional<int>(0) || A.mul(e, e) != e) return false;
    for (std::size_t j = 0; j < d.idempotents.size(); ++j)
      if (i != j && !A.mul(e, d.idempotents[j]).is_zero()) return false;
    sum += e;
  }
  if (sum != A.unit()) return false;
  for (std::size_t c = 0; c < d.classes.size(); ++c)
    for (std::size_t k = 0; k < d.witnesses[c].size(); ++k)
      if (!verify_witnesses(A, d.idempotents[d.classes[c][k + 1]], d.idempotents[d.classes[c][0]], d.witnesses[c][k]))
        return false;
  return true;
}

void equivalence_item(VerifyReport& rep, const SuperAlgebra& A, const Element& f, const Element& g,
                      const std::string& label, std::uint64_t seed, int trials) {
  EquivalenceVerdict v = s_equivalent(A, f, g, Functor::Sigma, seed, trials);
  if (auto* w = std::get_if<Equivalent>(&v)) {
    rep.expect(verify_witnesses(A, f, g, *w), label + " sigma-equivalent, witnesses re-verified");
    rep.witness("solved x = " + A.format(w->x));
    rep.witness("solved y = " + A.format(w->y));
  } else if (auto* n = std::get_if<NotEquivalent>(&v)) {
    rep.expect(false, label + " sigma-equivalent (got NotEquivalent: " + n->certificate + ")");
  } else {
    rep.undetermined(label + " sigma-equivalence undetermined after " +
                     std::to_string(std::get<Undetermined>(v).trials) + " trials");
  }
}

void check_dc(VerifyReport& rep, std::uint64_t seed, int trials) {
  SuperAlgebra Dp = clifford_real(1, 0, 0), Dm = clifford_real(0, 1, 0);
  SuperAlgebra A = skew_tensor(Dp, Dm);
  const Field F = Field::Real;
  Element ep = tensor_element(A, Dp, Dm, Dp.basis(1), Dm.unit());
  Element em = tensor_element(A, Dp, Dm, Dp.unit(), Dm.basis(1));
  Element epm = tensor_element(A, Dp, Dm, Dp.basis(1), Dm.basis(1));
  Element fp = half(F) * (A.unit() + epm), fm = half(F) * (A.unit() - epm);
  rep.witness("f+ = " + A.format(fp));
  rep.witness("f- = " + A.format(fm));
  rep.expect(A.parity_of(fp) == std::optional<int>(0) && A.parity_of(fm) == std::optional<int>(0), "f+, f- even");
  rep.expect(is_idempotent(A, fp) && is_idempotent(A, fm), "f+, f- idempotent");
  rep.expect(A.mul(fp, fm).is_zero() && A.mul(fm, fp).is_zero(), "f+ f- = f- f+ = 0");
  rep.expect(fp + fm == A.unit(), "f+ + f- = 1");

  Element x = half(F) * (ep - em), y = half(F) * (ep + em);
  rep.witness("x = " + A.format(x));
  rep.witness("y = " + A.format(y));
  rep.expect(A.mul(x, y) == fp, "x y = f+");
  rep.expect(A.mul(y, x) == fm, "y x = f-");
  rep.expect(A.mul(A.mul(fp, x), fm) == x && A.mul(A.mul(fm, y), fp) == y, "x in f+ A f-, y in f- A f+");

  auto dims = hom_space_dims(A, fp, fm);
  rep.expect(dims == std::make_pair(std::size_t{0}, std::size_t{1}), "f+ A f- has graded dims (0,1)");
  std::vector<Element> span = sandwich_basis(A, fp, fm, 1);
  EchelonBasis eb(F);
  for (const auto& s : span) eb.add(s.terms());
  rep.expect(eb.contains((ep - em).terms()), "f+ A f- spanned by e+⊗1 - 1⊗e-");

  SuperAlgebra C = corner(A, fp);
  rep.expect(C.dim() == 1 && C.graded_dims().first == 1, "corner(f+) has dim 1, even");
  Identification id = identify(C);
  rep.expect(same_class(id.cls, RealClass{}), "corner(f+) identified as " + class_name(id.cls));

  IdempotentDecomposition d = primitive_decomposition(A, seed, trials);
  rep.expect(d.idempotents.size() == 2 && d.classes.size() == 1 && decomposition_sound(A, d),
             "primitive decomposition: 2 idempotents, 1 class");
  equivalence_item(rep, A, fp, fm, "f+, f-", seed, trials);
}

void check_complex_dd(VerifyReport& rep, std::uint64_t seed, int trials) {
  SuperAlgebra D = clifford_complex(1, 0);
  SuperAlgebra A = skew_tensor(D, D);
  const Field F = Field::Complex;
  Element e1 = tensor_element(A, D, D, D.basis(1), D.unit());
  Element e2 = tensor_element(A, D, D, D.unit(), D.basis(1));
  Element ee = tensor_element(A, D, D, D.basis(1), D.basis(1));
  Scalar i = Scalar::imag_unit();
  Element ep = half(F) * (A.unit() + i * ee), em = half(F) * (A.unit() - i * ee);
  rep.witness("ε+ = " + A.format(ep));
  rep.witness("ε- = " + A.format(em));
  rep.expect(A.parity_of(ep) == std::optional<int>(0) && A.parity_of(em) == std::optional<int>(0), "ε± even");
  rep.expect(is_idempotent(A, ep) && is_idempotent(A, em), "ε± idempotent");
  rep.expect(A.mul(ep, em).is_zero() && A.mul(em, ep).is_zero(), "ε+ ε- = ε- ε+ = 0");
  rep.expect(ep + em == A.unit(), "ε+ + ε- = 1");

  auto dims = hom_space_dims(A, ep, em);
  rep.expect(dims == std::make_pair(std::size_t{0}, std::size_t{1}), "ε+ A ε- has graded dims (0,1)");
  std::vector<Element> span = sandwich_basis(A, ep, em, 1);
  EchelonBasis eb(F);
  for (const auto& s : span) eb.add(s.terms());
  rep.expect(eb.contains((e1 - i * e2).terms()), "ε+ A ε- spanned by ε⊗1 - i(1⊗ε) (solved)");
  rep.expect(!eb.contains(e2.terms()), "1⊗ε is not in ε+ A ε-");
  rep.witness("ε+ A ε- basis: " + A.format(span.front()));

  equivalence_item(rep, A, ep, em, "ε+, ε-", seed, trials);

  SuperAlgebra C = corner(A, ep);
  rep.expect(C.dim() == 1 && C.field() == Field::Complex, "corner(ε+) has dim 1 over Q(i)");
  Identification id = identify(C);
  rep.expect(same_class(id.cls, ComplexClass{}), "corner(ε+) identified as " + class_name(id.cls));

  IdempotentDecomposition d = primitive_decomposition(A, seed, trials);
  rep.expect(d.idempotents.size() == 2 && d.classes.size() == 1 && decomposition_sound(A, d),
             "primitive decomposition: 2 idempotents, 1 class");
}

void check_dd(VerifyReport& rep, std::uint64_t seed, int trials) {
  for (int n = 1; n <= 3; ++n)
    for (int sign : {1, -1}) {
      SuperAlgebra A = sign > 0 ? clifford_real(n, 0, 0) : clifford_real(0, n, 0);
      std::string name = std::string(sign > 0 ? "D+" : "D-") + "^" + std::to_string(n);
      rep.expect(jacobson_radical(A).empty(), name + ": radical 0");
      rep.expect(primitive_decomposition(A, seed, trials).idempotents.size() == 1, name + ": unit is primitive");
      rep.expect(gr_divisional_check(A, seed, trials),
                 name + ": gr-divisional (" + std::to_string(trials) + " seeded homogeneous samples invertible)");
    }

  SuperAlgebra H = quaternions();
  Element one = H.unit(), i = H.basis(1), j = H.basis(2), k = H.basis(3);
  rep.expect(H.mul(i, i) == -one && H.mul(j, j) == -one && H.mul(k, k) == -one, "H: i² = j² = k² = -1");
  rep.expect(H.mul(i, j) == k && H.mul(j, k) == i && H.mul(k, i) == j, "H: ij = k, jk = i, ki = j");
  rep.expect(H.mul(j, i) == -k, "H: ji = -k");
  rep.expect(H.graded_dims() == std::make_pair(std::size_t{4}, std::size_t{0}), "H purely even");

  for (int sign : {1, -1}) {
    SuperAlgebra D3 = sign > 0 ? clifford_real(3, 0, 0) : clifford_real(0, 3, 0);
    std::string s = sign > 0 ? "+" : "-";
    Element th = D3.basis(0b111), u = D3.unit();
    rep.expect(D3.mul(th, th) == (sign > 0 ? -u : u), "θ" + s + "² = " + (sign > 0 ? "-1" : "+1"));
    bool central = true;
    for (BladeMask m : {0b110u, 0b101u, 0b011u}) central = central && D3.mul(th, D3.basis(m)) == D3.mul(D3.basis(m), th);
    rep.expect(central, "θ" + s + " commutes with i" + s + ", j" + s + ", k" + s);
    Element anti = D3.mul(th, D3.basis(0b110)) + D3.mul(D3.basis(0b110), th);
    rep.witness("θ" + s + "i" + s + " + i" + s + "θ" + s + " = " + D3.format(anti));
    rep.expect(D3.mul(D3.basis(0b110), D3.basis(0b101)) == (sign > 0 ? D3.basis(0b011) : -D3.basis(0b011)),
               "i" + s + "j" + s + " = " + (sign > 0 ? "" : "-") + "k" + s);
  }
}

void check_dddd(VerifyReport& rep, std::uint64_t seed, int trials) {
  SuperAlgebra H = quaternions();
  for (int sign : {-1, 1}) {
    // D∓ ⊗̂ H -> D±^3 with e ↦ θ, i ↦ i, j ↦ j.
    SuperAlgebra D = sign < 0 ? clifford_real(0, 1, 0) : clifford_real(1, 0, 0);
    SuperAlgebra target = sign < 0 ? clifford_real(3, 0, 0) : clifford_real(0, 3, 0);
    SuperAlgebra A = skew_tensor(D, H);
    std::vector<Element> images = {target.basis(0b111), target.basis(0b110), target.basis(0b101)};
    std::string lhs = sign < 0 ? "D- ⊗̂ H" : "D+ ⊗̂ H", rhs = sign < 0 ? "D+^3" : "D-^3";
    rep.expect(is_isomorphic_via(A, target, images), lhs + " ≅ " + rhs + " via e ↦ θ, i ↦ i, j ↦ j");
  }
  for (int sign : {1, -1}) {
    SuperAlgebra A = sign > 0 ? clifford_real(4, 0, 0) : clifford_real(0, 4, 0);
    std::string name = sign > 0 ? "D+^4" : "D-^4";
    BasicReduction br = basic_reduction(A, Functor::Sigma, seed, trials);
    rep.expect(br.basic.dim() == 4 && br.basic.graded_dims().second == 0, name + ": basic corner dim 4, purely even");
    Identification id = identify(br.basic);
    rep.expect(same_class(id.cls, RealClass::from_index(4)) && id.exact, name + ": identified as " + class_name(id.cls));
    rep.expect(br.confirmed, name + ": decomposition confirmed");
    rep.witness(name + " basic idempotent: " + A.format(br.idempotent));
  }
}

void check_hh(VerifyReport& rep, std::uint64_t seed, int trials) {
  SuperAlgebra H = quaternions();
  SuperAlgebra A = skew_tensor(H, H);
  IdempotentDecomposition d = primitive_decomposition(A, seed, trials);
  rep.expect(d.idempotents.size() == 4, "H ⊗̂ H: " + std::to_string(d.idempotents.size()) + " primitive idempotents");
  rep.expect(decomposition_sound(A, d), "orthogonal, even, complete; witnesses re-verified");
  rep.expect(d.classes.size() == 1, "all pairwise sigma-equivalent");
  bool corners = true;
  for (const auto& e : d.idempotents) corners = corners && corner(A, e).dim() == 1;
  rep.expect(corners, "every corner has dim 1");
  rep.expect(A.graded_dims().second == 0, "H ⊗̂ H concentrated in degree 0");
  decomposition_witnesses(rep, A, d);
}

void check_d8(VerifyReport& rep, std::uint64_t seed, int trials) {
  SuperAlgebra A = clifford_real(8, 0, 0);
  BasicReduction br = basic_reduction(A, Functor::Sigma, seed, trials);
  rep.expect(br.basic.dim() == 1 && br.basic.graded_dims().first == 1, "D+^8 reduces to a dim-1 even corner");
  rep.expect(decomposition_sound(A, br.decomposition),
             std::to_string(br.decomposition.idempotents.size()) + " orthogonal primitive idempotents, sum 1");
  Identification id = identify(br.basic);
  rep.expect(same_class(id.cls, real_basic_class(8, 0, 0)), "identified as " + class_name(id.cls) +
                                                                 ", class arithmetic gives " +
                                                                 real_basic_class(8, 0, 0).name());
  rep.expect(br.confirmed, "decomposition confirmed");
  rep.witness("basic idempotent: " + A.format(br.idempotent));
}

std::vector<SuperAlgebra> small_algebras() {
  return {clifford_real(1, 0, 0), clifford_real(0, 1, 0), clifford_real(2, 0, 0), clifford_real(0, 2, 0),
          clifford_real(1, 1, 0), clifford_real(0, 0, 2), clifford_real(3, 0, 0), clifford_real(1, 1, 1),
          quaternions(),          clifford_complex(1, 0), clifford_complex(2, 0), clifford_complex(1, 1)};
}

void check_modules(VerifyReport& rep, std::uint64_t seed, int trials) {
  std::mt19937_64 rng(seed);
  std::vector<SuperAlgebra> algs = small_algebras();

  bool axioms = true, involutions = true, lbass = true, hom_vs_fag = true, twisted = true;
  for (const auto& A : algs) {
    GradedModule R = regular_module(A);
    axioms = axioms && check_module_axioms(R);
    IdempotentDecomposition d = primitive_decomposition(A, seed, trials);
    for (const auto& f : d.idempotents)
      for (const auto& g : d.idempotents) {
        GradedModule Mf = module_from_idempotent(A, f), Mg = module_from_idempotent(A, g);
        auto dims = hom_space_dims(A, f, g);
        hom_vs_fag = hom_vs_fag && hom_basis(Mf, Mg, 0).size() == dims.first &&
                     hom_basis(suspension(Mf), Mg, 0).size() == dims.second;
      }
    SuperAlgebra Ah = hat(A);
    GradedModule Rh = hat_module(R, Ah);
    axioms = axioms && check_module_axioms(Rh);
    SuperAlgebra Tpi = twisted_end(R, Functor::Pi), Tsig = twisted_end(Rh, Functor::Sigma);
    twisted = twisted && Tpi.graded_dims() == Tsig.graded_dims();
  }
  rep.expect(axioms, "module axioms hold for regular modules and their hats");
  rep.expect(hom_vs_fag, "dim Hom_Gr(Af, Ag) = dim (fAg)_0 and dim Hom_Gr(σAf, Ag) = dim (fAg)_1");
  rep.expect(twisted, "twisted_end(M, π) over A has the graded dims of twisted_end(M̂, σ) over hat(A)");

  // Random modules: sums of projectives Af under random shifts.
  std::uniform_int_distribution<std::size_t> pick_alg(0, algs.size() - 1);
  std::uniform_int_distribution<int> coin(0, 3);
  for (int t = 0; t < 20; ++t) {
    const SuperAlgebra& A = algs[pick_alg(rng)];
    IdempotentDecomposition d = primitive_decomposition(A, seed, trials);
    std::uniform_int_distribution<std::size_t> pick_idem(0, d.idempotents.size() - 1);
    GradedModule M = module_from_idempotent(A, d.idempotents[pick_idem(rng)]);
    int extra = coin(rng);
    for (int s = 0; s < extra; ++s) {
      GradedModule P = module_from_idempotent(A, d.idempotents[pick_idem(rng)]);
      int c = coin(rng);
      M = direct_sum(M, c == 0 ? parity_change(P) : c == 1 ? suspension(P) : P);
    }
    GradedModule N = module_from_idempotent(A, d.idempotents[pick_idem(rng)]);
    if (coin(rng) == 0) N = suspension(N);
    axioms = axioms && check_module_axioms(M);
    involutions = involutions && parity_change(parity_change(M)) == M && suspension(suspension(M)) == M;
    auto pd = parity_change(M).graded_dims(), md = M.graded_dims();
    involutions = involutions && pd.first == md.second && pd.second == md.first;
    SuperAlgebra Ah = hat(A);
    std::size_t over_a = hom_basis(parity_change(M), N, 0).size();
    lbass = lbass && over_a == hom_basis(M, N, 1).size() &&
            over_a == hom_basis(suspension(hat_module(M, Ah)), hat_module(N, Ah), 0).size();
  }
  rep.expect(axioms, "module axioms hold for 20 random modules");
  rep.expect(involutions, "π(π(M)) = M and σ(σ(M)) = M on 20 random modules, parity dims swapped");
  rep.expect(lbass, "dim Hom_Gr(πM, N) = dim Hom(M, N)_1 = dim Hom_Gr(σM̂, N̂) over hat(A)");

  SuperAlgebra Dp = clifford_real(1, 0, 0);
  SuperAlgebra T = twisted_end(regular_module(Dp), Functor::Sigma);
  rep.expect(T.dim() == 2 && gr_divisional_check(T, seed, trials), "twisted_end(regular D+, σ): dim 2, gr-divisional");
  bool local = true;
  for (int n = 1; n <= 3; ++n) local = local && gr_local_check(twisted_end(regular_module(clifford_real(n, 0, 0)), Functor::Sigma), seed, trials);
  rep.expect(local, "twisted_end of the regular module of D+^1..3 is gr-local");
}

void check_tensor_law(VerifyReport& rep, std::uint64_t seed, int trials) {
  std::vector<SuperAlgebra> algs = {clifford_real(1, 0, 0), clifford_real(0, 1, 0), clifford_real(2, 0, 0),
                                    clifford_real(0, 2, 0), clifford_real(1, 1, 0), clifford_real(0, 0, 1),
                                    clifford_real(3, 0, 0), clifford_real(0, 3, 0), quaternions()};
  std::size_t exact = 0, total = 0;
  for (std::size_t a = 0; a < algs.size(); ++a)
    for (std::size_t b = a; b < algs.size(); ++b) {
      const SuperAlgebra &A = algs[a], &B = algs[b];
      ++total;
      BasicReduction lhs = basic_reduction(skew_tensor(A, B), Functor::Sigma, seed, trials);
      BasicReduction ba = basic_reduction(A, Functor::Sigma, seed, trials);
      BasicReduction bb = basic_reduction(B, Functor::Sigma, seed, trials);
      BasicReduction rhs = basic_reduction(skew_tensor(ba.basic, bb.basic), Functor::Sigma, seed, trials);
      std::string pair = A.label() + " ⊗̂ " + B.label();
      if (find_isomorphism(lhs.basic, rhs.basic)) {
        ++exact;
        continue;
      }
      Identification l = identify(lhs.basic), r = identify(rhs.basic);
      rep.expect(l.cls == r.cls, pair + ": basic reductions agree as " + class_name(l.cls) + " / " + class_name(r.cls));
    }
  rep.expect(exact == total, std::to_string(exact) + "/" + std::to_string(total) +
                                 " pairs: basic(A ⊗̂ B) ≅ basic(basic(A) ⊗̂ basic(B)) by explicit isomorphism");
}

}  // namespace

VerifyReport run_check(const std::string& name, std::uint64_t seed, int trials) {
  VerifyReport rep;
  rep.check = name;
  auto t0 = std::chrono::steady_clock::now();
  if (name == "dc") check_dc(rep, seed, trials);
  else if (name == "complex-dd") check_complex_dd(rep, seed, trials);
  else if (name == "dd") check_dd(rep, seed, trials);
  else if (name == "dddd") check_dddd(rep, seed, trials);
  else if (name == "hh") check_hh(rep, seed, trials);
  else if (name == "d8") check_d8(rep, seed, trials);
  else if (name == "modules") check_modules(rep, seed, trials);
  else if (name == "tensor-law") check_tensor_law(rep, seed, trials);
  else throw Error(Errc::UnknownCheck, "unknown check '" + name + "'");
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

std::vector<VerifyReport> run_checks(const std::string& name, std::uint64_t seed, int trials) {
  std::vector<VerifyReport> out;
  if (name == "all") {
    for (const auto& n : check_names()) out.push_back(run_check(n, seed, trials));
  } else {
    out.push_back(run_check(name, seed, trials));
  }
  return out;
}

}  // namespace sclif

#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <utility>

#include "sclif/classify.hpp"
#include "sclif/expr.hpp"
#include "sclif/grothendieck.hpp"
#include "sclif/modules.hpp"
#include "sclif/verify.hpp"

using namespace sclif;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

struct Criterion {
  int id;
  const char* title;
  double limit_s;
  std::function<void(Outcome&)> body;
};

void require_check(Outcome& o, const std::string& name) {
  VerifyReport r = run_check(name);
  for (const auto& it : r.items) o.require(it.status == CheckStatus::Pass, name + ": " + it.what);
  o.require(r.status == CheckStatus::Pass, name + " not passing");
}

void c1_tables(Outcome& o) {
  const int v_row[8] = {2, 1, 1, 1, 2, 1, 1, 1};
  auto k = table_columns(TableKind::RealK);
  o.require(k.size() == 8, "real-k has 8 columns");
  for (int d = 0; d < 8 && o.ok; ++d) {
    o.require(k[static_cast<std::size_t>(d)].v == v_row[d], "v at residue " + std::to_string(d));
    o.require(k[static_cast<std::size_t>(d)].k_rank == v_row[d], "K rank at residue " + std::to_string(d));
  }
  // The emitted CSV carries the same row.
  std::istringstream csv(emit_table(TableKind::RealK, Format::Csv));
  std::string line, vs;
  std::getline(csv, line);
  while (std::getline(csv, line)) {
    std::vector<std::string> f;
    std::string cell;
    bool quoted = false;
    for (char c : line) {
      if (c == '"') quoted = !quoted;
      else if (c == ',' && !quoted) f.push_back(std::exchange(cell, {}));
      else cell += c;
    }
    f.push_back(cell);
    vs += f[4];
  }
  o.require(vs == "21112111", "CSV v row " + vs);

  const char* classes[8] = {"R", "D+", "D+^2", "D+^3", "H", "D-^3", "D-^2", "D-"};
  auto b = table_columns(TableKind::RealBasic);
  for (int d = 0; d < 8; ++d) {
    const auto& c = b[static_cast<std::size_t>(d)];
    o.require(c.basic_class == classes[d], "class at residue " + std::to_string(d) + " is " + c.basic_class);
    o.require(c.paper_discrepancy_flag == (d == 5 || d == 7), "flag at residue " + std::to_string(d));
  }
}

void c2_oracle_grid(Outcome& o) {
  auto agree = [&](int p, int q, int r) {
    for (Functor S : {Functor::Sigma, Functor::Pi}) {
      OracleResult res = oracle_classify_real(p, q, r, S);
      std::string at = "(" + std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(r) + ") " + functor_name(S);
      o.require(res.id.cls == BasicClass{real_basic_class(p, q, r, S)}, "oracle " + class_name(res.id.cls) + " at " + at);
      o.require(res.confirmed, "unconfirmed reduction at " + at);
    }
  };
  for (int n = 0; n <= 6; ++n)
    for (int p = 0; p <= n; ++p)
      for (int q = 0; p + q <= n; ++q) agree(p, q, n - p - q);
  for (auto [p, q, r] : std::vector<std::array<int, 3>>{{8, 0, 0}, {0, 8, 0}, {4, 4, 0}, {7, 1, 0}, {2, 5, 1}, {3, 3, 2}})
    agree(p, q, r);
}

void c4_complex_dd(Outcome& o) {
  require_check(o, "complex-dd");
  // The span is computed rather than transcribed.
  SuperAlgebra D = clifford_complex(1, 0);
  SuperAlgebra A = skew_tensor(D, D);
  Element ee = tensor_element(A, D, D, D.basis(1), D.basis(1));
  Scalar h = Scalar::rational(1, 2, Field::Complex);
  Element ep = h * (A.unit() + Scalar::imag_unit() * ee), em = h * (A.unit() - Scalar::imag_unit() * ee);
  auto v = s_equivalent(A, ep, em, Functor::Sigma);
  o.require(std::holds_alternative<Equivalent>(v) && verify_witnesses(A, ep, em, std::get<Equivalent>(v)),
            "s_equivalent witnesses for ε±");
  o.require(identify(corner(A, ep)).cls == BasicClass{ComplexClass{}}, "corner(ε+) is C");
}

void c5_dd(Outcome& o) {
  require_check(o, "dd");
  for (int n = 1; n <= 3; ++n) {
    o.require(gr_divisional_check(clifford_real(n, 0, 0)), "D+^" + std::to_string(n));
    o.require(gr_divisional_check(clifford_real(0, n, 0)), "D-^" + std::to_string(n));
  }
}

void c6_dddd(Outcome& o) {
  require_check(o, "dddd");
  SuperAlgebra H = quaternions();
  SuperAlgebra Dp3 = clifford_real(3, 0, 0), Dm3 = clifford_real(0, 3, 0);
  o.require(is_isomorphic_via(skew_tensor(clifford_real(0, 1, 0), H), Dp3, {Dp3.basis(7), Dp3.basis(6), Dp3.basis(5)}),
            "D- ⊗̂ H ≅ D+^3");
  o.require(is_isomorphic_via(skew_tensor(clifford_real(1, 0, 0), H), Dm3, {Dm3.basis(7), Dm3.basis(6), Dm3.basis(5)}),
            "D+ ⊗̂ H ≅ D-^3");
  for (auto A : {clifford_real(4, 0, 0), clifford_real(0, 4, 0)}) {
    BasicReduction br = basic_reduction(A);
    o.require(br.basic.dim() == 4 && br.basic.graded_dims().second == 0, A.label() + " corner shape");
    o.require(identify(br.basic).cls == BasicClass{RealClass::from_index(4)}, A.label() + " corner is H");
  }
}

void c7_hh(Outcome& o) {
  require_check(o, "hh");
  SuperAlgebra A = skew_tensor(quaternions(), quaternions());
  IdempotentDecomposition d = primitive_decomposition(A);
  o.require(d.idempotents.size() == 4 && d.classes.size() == 1, "4 idempotents in one class");
  for (const auto& e : d.idempotents) o.require(corner(A, e).dim() == 1, "dim-1 corner");
}

void c8_d8(Outcome& o) {
  BasicReduction br = basic_reduction(clifford_real(8, 0, 0));
  o.require(br.basic.dim() == 1 && br.basic.graded_dims().first == 1, "dim-1 even corner");
  o.require(identify(br.basic).cls == BasicClass{real_basic_class(8, 0, 0)}, "class arithmetic cross-check");
  o.require(real_basic_class(8, 0, 0).core == RealClass::Core::Triv, "class Triv");
  o.require(br.confirmed, "reduction confirmed");
}

Element sparse_random(const SuperAlgebra& A, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> idx(0, A.dim() - 1);
  std::uniform_int_distribution<long> coef(-3, 3);
  Element x = A.zero();
  for (int t = 0; t < 3; ++t) x += Scalar(coef(rng), A.field()) * A.basis(idx(rng));
  return x;
}

bool associative(const SuperAlgebra& A) {
  for (std::size_t i = 0; i < A.dim(); ++i)
    for (std::size_t j = 0; j < A.dim(); ++j) {
      Element ij = A.mul(A.basis(i), A.basis(j));
      if (!ij.is_zero() && A.parity_of(ij) != std::optional<int>((A.parity(i) + A.parity(j)) % 2)) return false;
      for (std::size_t k = 0; k < A.dim(); ++k)
        if (A.mul(ij, A.basis(k)) != A.mul(A.basis(i), A.mul(A.basis(j), A.basis(k)))) return false;
    }
  return true;
}

void c9_properties(Outcome& o) {
  for (int n = 0; n <= 6; ++n)
    for (int p = 0; p <= n; p += 2)
      for (int q = 0; p + q <= n; q += 3) {
        SuperAlgebra A = clifford_real(p, q, n - p - q);
        o.require(associative(A), "associativity/parity " + A.label());
      }
  o.require(associative(skew_tensor(quaternions(), quaternions())), "associativity H ⊗̂ H");
  o.require(associative(hat(clifford_real(1, 2, 1))), "associativity hat");

  std::mt19937_64 rng(kDefaultSeed);
  for (auto A : {clifford_real(5, 2, 1), skew_tensor(skew_tensor(quaternions(), quaternions()), clifford_real(3, 1, 0))}) {
    for (int t = 0; t < 1000; ++t) {
      Element x = sparse_random(A, rng), y = sparse_random(A, rng), z = sparse_random(A, rng);
      if (A.mul(A.mul(x, y), z) != A.mul(x, A.mul(y, z))) {
        o.require(false, "random triple associativity in " + A.label());
        break;
      }
    }
  }

  std::vector<SuperAlgebra> small = {ground_field(Field::Real), clifford_real(1, 0, 0), clifford_real(0, 1, 0),
                                     clifford_real(0, 0, 1),   clifford_real(1, 1, 0), clifford_real(2, 0, 0),
                                     clifford_real(0, 1, 1),   quaternions()};
  for (const auto& A : small)
    for (const auto& B : small)
      if (A.dim() * B.dim() <= 16) o.require(supertwist_check(A, B), "supertwist " + A.label() + " " + B.label());

  for (int n = 0; n <= 4; ++n)
    for (int p = 0; p <= n; ++p)
      for (int q = 0; p + q <= n; ++q) {
        int r = n - p - q;
        SuperAlgebra A = clifford_real(p, q, r);
        o.require(same_structure(hat(hat(A)), A), "hat involution " + A.label());
        SuperAlgebra B = clifford_real(q, p, r);
        std::vector<Element> img;
        for (int k = 0; k < p; ++k) img.push_back(B.basis(std::size_t{1} << (q + k)));
        for (int k = 0; k < q; ++k) img.push_back(B.basis(std::size_t{1} << k));
        for (int k = 0; k < r; ++k) img.push_back(B.basis(std::size_t{1} << (p + q + k)));
        o.require(is_isomorphic_via(hat(A), B, img), "hat(" + A.label() + ") ≅ " + B.label());
      }

  require_check(o, "modules");
  require_check(o, "tensor-law");
}

void c10_v_oracle(Outcome& o) {
  for (int n = 0; n <= 5; ++n)
    for (int p = 0; p <= n; ++p) {
      int q = n - p;
      BasicReduction br = basic_reduction(clifford_real(p, q, 0));
      int v = module_oracle_v(br.basic);
      std::string at = "R(" + std::to_string(p) + "," + std::to_string(q) + ")";
      o.require(v == v_real(p, q), "module count at " + at);
      o.require((v == 2) == (br.basic.graded_dims().second == 0), "v = 2 iff purely even at " + at);
    }
  for (int p = 0; p <= 5; ++p) {
    BasicReduction br = basic_reduction(clifford_complex(p, 0));
    int v = module_oracle_v(br.basic);
    o.require(v == v_complex(p), "module count at C(" + std::to_string(p) + ")");
    o.require((v == 2) == (br.basic.graded_dims().second == 0), "v = 2 iff purely even at C(" + std::to_string(p) + ")");
  }
}

void c11_parser(Outcome& o) {
  std::ifstream in(SCLIF_TEST_DATA "/expr_corpus.tsv");
  o.require(bool(in), "corpus readable");
  std::string line;
  int count = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream cols(line);
    std::string head, text;
    std::getline(cols, head, '\t');
    std::getline(cols, text, '\t');
    std::istringstream hs(head);
    std::string field;
    int p, q, r;
    hs >> field >> p >> q >> r;
    Signature sig = field == "real" ? Signature::real(p, q, r) : Signature::complex(p, q);
    ExprAst a = parse_expr(text, sig);
    o.require(parse_expr(print_expr(a), sig) == a, "round trip " + text);
    ++count;
  }
  o.require(count == 50, "corpus size " + std::to_string(count));
  SuperAlgebra A = clifford_real(2, 0, 0);
  Element v = eval_expr(parse_expr("(e1*e2+1)*(e1*e2-1)", Signature::real(2, 0, 0)), A);
  o.require(v == Scalar(-2L) * A.unit(), "(e1*e2+1)*(e1*e2-1) = -2");
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "Grothendieck table (i): v row, K ranks, classes and flags", 5, c1_tables},
      {2, "oracle/formula agreement, 2^n <= 64 plus spot set to 256, both functors", 120, c2_oracle_grid},
      {3, "R(1,1) idempotents, witnesses and corner", 1, [](Outcome& o) { require_check(o, "dc"); }},
      {4, "C(2,0) idempotents, solved witnesses and corner", 1, c4_complex_dd},
      {5, "D±^{1,2,3} gr-divisional, quaternion and θ relations", 5, c5_dd},
      {6, "D∓ ⊗̂ H ≅ D±^3 and basic(D±^4) = H", 5, c6_dddd},
      {7, "H ⊗̂ H: four equivalent idempotents", 10, c7_hh},
      {8, "D+^8 reduces to a dim-1 even corner", 120, c8_d8},
      {9, "property suites", 60, c9_properties},
      {10, "module-level v oracle", 30, c10_v_oracle},
      {11, "parser golden corpus", 1, c11_parser},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    try {
      c.body(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (o.ok && s >= c.limit_s) o.require(false, "time limit exceeded");
    if (!o.ok) ++failures;
    std::printf("CRITERION %2d: %s  %.2fs / %.0fs  %s%s%s\n", c.id, o.ok ? "PASS" : "FAIL", s, c.limit_s, c.title,
                o.ok ? "" : "  -- ", o.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}

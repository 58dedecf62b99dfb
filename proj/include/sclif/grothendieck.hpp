#pragma once

#include <string>
#include <vector>

#include "sclif/classify.hpp"
#include "sclif/modules.hpp"

namespace sclif {

int v_real(int p, int q);
int v_complex(int p);

struct GrothendieckData {
  int v = 1;
  std::vector<std::string> irr_labels;
  int k_rank = 1;  // K is free abelian of this rank
  BasicClass basic_class;

  std::string group() const;  // "Z" or "Z⊕Z"
};

// Only R_{p,q} (r = 0) and C_{p,0} are in scope; anything else is OutOfScope.
GrothendieckData grothendieck_real(int p, int q, int r = 0);
GrothendieckData grothendieck_complex(int p, int q = 0);

// Number of classes of gr-simple modules over a gr-divisional basic algebra
// B: the regular module M and sigma(M), identified when Hom_Gr(sigma M, M)
// contains an isomorphism.
int module_oracle_v(const SuperAlgebra& B);

enum class TableKind { RealBasic, RealK, ComplexBasic, ComplexK };
enum class Format { Text, Json, Csv, Md };

TableKind parse_table_kind(const std::string& s);
Format parse_format(const std::string& s);
const char* table_kind_name(TableKind k);

struct TableColumn {
  int residue = 0;
  std::string basic_class;
  std::string paper_class;  // as printed
  std::vector<std::string> irr;
  int v = 1;
  int k_rank = 1;
  bool paper_discrepancy_flag = false;
  std::string note;
};

std::vector<TableColumn> table_columns(TableKind kind);
std::string emit_table(TableKind kind, Format format);

}  // namespace sclif

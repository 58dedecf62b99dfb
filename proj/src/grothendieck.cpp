#include "sclif/grothendieck.hpp"

#include <json.hpp>

#include <sstream>

namespace sclif {

namespace {

int mod(int a, int m) { return ((a % m) + m) % m; }

std::vector<std::string> irr_for(int v) {
  return v == 2 ? std::vector<std::string>{"M", "σ(M)"} : std::vector<std::string>{"M"};
}

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + xs[i];
  return out;
}

std::string k_group(int rank) { return rank == 2 ? "Z⊕Z" : "Z"; }

}  // namespace

int v_real(int p, int q) { return mod(p - q, 4) == 0 ? 2 : 1; }

int v_complex(int p) { return mod(p, 2) == 0 ? 2 : 1; }

std::string GrothendieckData::group() const { return k_group(k_rank); }

GrothendieckData grothendieck_real(int p, int q, int r) {
  if (p < 0 || q < 0 || r < 0) throw Error(Errc::InvalidArgument, "negative signature entry");
  if (r > 0) throw Error(Errc::OutOfScope, "Grothendieck groups are computed for r = 0 only");
  int v = v_real(p, q);
  return GrothendieckData{v, irr_for(v), v, real_basic_class(p, q, 0)};
}

GrothendieckData grothendieck_complex(int p, int q) {
  if (p < 0 || q < 0) throw Error(Errc::InvalidArgument, "negative signature entry");
  if (q > 0) throw Error(Errc::OutOfScope, "complex Grothendieck groups are computed for q = 0 only");
  int v = v_complex(p);
  return GrothendieckData{v, irr_for(v), v, complex_basic_class(p, 0)};
}

int module_oracle_v(const SuperAlgebra& B) {
  GradedModule M = regular_module(B);
  std::vector<Matrix> homs = hom_basis(suspension(M), M, 0);
  Matrix sum(M.dim(), M.dim(), B.field());
  for (std::size_t k = 0; k < homs.size(); ++k) {
    if (rank(homs[k]) == M.dim()) return 1;
    sum = sum + scaled(homs[k], Scalar(static_cast<long>(k + 1), B.field()));
  }
  if (!homs.empty() && rank(sum) == M.dim()) return 1;
  return 2;
}

TableKind parse_table_kind(const std::string& s) {
  if (s == "real-basic") return TableKind::RealBasic;
  if (s == "real-k") return TableKind::RealK;
  if (s == "complex-basic") return TableKind::ComplexBasic;
  if (s == "complex-k") return TableKind::ComplexK;
  throw Error(Errc::UnknownTable, "unknown table '" + s + "'");
}

Format parse_format(const std::string& s) {
  if (s == "text") return Format::Text;
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  if (s == "md") return Format::Md;
  throw Error(Errc::InvalidArgument, "unknown format '" + s + "'");
}

const char* table_kind_name(TableKind k) {
  switch (k) {
    case TableKind::RealBasic: return "real-basic";
    case TableKind::RealK: return "real-k";
    case TableKind::ComplexBasic: return "complex-basic";
    case TableKind::ComplexK: return "complex-k";
  }
  return "?";
}

std::vector<TableColumn> table_columns(TableKind kind) {
  std::vector<TableColumn> cols;
  if (kind == TableKind::RealBasic || kind == TableKind::RealK) {
    for (int d = 0; d < 8; ++d) {
      TableColumn c;
      c.residue = d;
      c.basic_class = RealClass::from_index(d).name();
      c.paper_class = printed_table_class(d);
      c.v = v_real(d, 0);
      c.irr = irr_for(c.v);
      c.k_rank = c.v;
      c.paper_discrepancy_flag = c.basic_class != c.paper_class;
      if (c.paper_discrepancy_flag) c.note = "printed table lists " + c.paper_class;
      cols.push_back(std::move(c));
    }
  } else {
    for (int d = 0; d < 2; ++d) {
      TableColumn c;
      c.residue = d;
      c.basic_class = complex_basic_class(d, 0).name();
      c.paper_class = c.basic_class;
      c.v = v_complex(d);
      c.irr = irr_for(c.v);
      c.k_rank = c.v;
      if (kind == TableKind::ComplexK) {
        c.paper_discrepancy_flag = true;
        c.note = std::string("the counting statement gives v = ") + (d == 0 ? "1" : "2");
      }
      cols.push_back(std::move(c));
    }
  }
  return cols;
}

std::string emit_table(TableKind kind, Format format) {
  const std::vector<TableColumn> cols = table_columns(kind);
  const bool real = kind == TableKind::RealBasic || kind == TableKind::RealK;
  const bool basic = kind == TableKind::RealBasic || kind == TableKind::ComplexBasic;
  const std::string residue_head = real ? "p-q mod 8" : "p mod 2";
  std::ostringstream os;

  if (format == Format::Json) {
    nlohmann::ordered_json doc;
    doc["table"] = table_kind_name(kind);
    doc["columns"] = nlohmann::ordered_json::array();
    for (const auto& c : cols) {
      nlohmann::ordered_json j;
      j["residue"] = c.residue;
      j["basic_class"] = c.basic_class;
      j["paper_class"] = c.paper_class;
      j["irr"] = c.irr;
      j["v"] = c.v;
      j["k_rank"] = c.k_rank;
      j["paper_discrepancy_flag"] = c.paper_discrepancy_flag;
      if (!c.note.empty()) j["note"] = c.note;
      doc["columns"].push_back(std::move(j));
    }
    os << doc.dump(2) << "\n";
    return os.str();
  }

  if (format == Format::Csv) {
    os << "residue,basic_class,paper_class,irr,v,k_rank,paper_discrepancy_flag\n";
    for (const auto& c : cols)
      os << c.residue << "," << c.basic_class << "," << c.paper_class << "," << join(c.irr, ";") << "," << c.v << ","
         << c.k_rank << "," << (c.paper_discrepancy_flag ? "true" : "false") << "\n";
    return os.str();
  }

  // Text and Markdown share the transposed layout: one row per field.
  std::vector<std::vector<std::string>> rows;
  auto row = [&](std::string head, auto field) {
    std::vector<std::string> r{std::move(head)};
    for (const auto& c : cols) r.push_back(field(c));
    rows.push_back(std::move(r));
  };
  row(residue_head, [](const TableColumn& c) { return std::to_string(c.residue); });
  if (basic) {
    row("basic class", [](const TableColumn& c) { return c.basic_class; });
    if (real) {
      row("printed", [](const TableColumn& c) { return c.paper_class; });
      row("flag", [](const TableColumn& c) { return std::string(c.paper_discrepancy_flag ? "*" : "-"); });
    }
  } else {
    row("Irr", [](const TableColumn& c) { return "{" + join(c.irr, ", ") + "}"; });
    row("v", [](const TableColumn& c) { return std::to_string(c.v); });
    row("K", [](const TableColumn& c) { return k_group(c.k_rank); });
  }

  if (format == Format::Md) {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      os << "| " << join(rows[i], " | ") << " |\n";
      if (i == 0) {
        os << "|";
        for (std::size_t k = 0; k < rows[i].size(); ++k) os << "---|";
        os << "\n";
      }
    }
  } else {
    // Column widths in code points so the UTF-8 labels align.
    auto width = [](const std::string& s) {
      std::size_t w = 0;
      for (unsigned char ch : s) w += (ch & 0xC0) != 0x80;
      return w;
    };
    std::vector<std::size_t> w(rows[0].size(), 0);
    for (const auto& r : rows)
      for (std::size_t k = 0; k < r.size(); ++k) w[k] = std::max(w[k], width(r[k]));
    for (const auto& r : rows) {
      for (std::size_t k = 0; k < r.size(); ++k) {
        os << r[k];
        if (k + 1 < r.size()) os << std::string(w[k] - width(r[k]) + 2, ' ');
      }
      os << "\n";
    }
  }
  for (const auto& c : cols)
    if (c.paper_discrepancy_flag && !c.note.empty())
      os << (format == Format::Md ? "\n- " : "note: ") << "column " << c.residue << ": " << c.note << "\n";
  return os.str();
}

}  // namespace sclif

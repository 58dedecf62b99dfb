#include <algorithm>
#include <future>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "sclif/classify.hpp"
#include "sclif/expr.hpp"
#include "sclif/grothendieck.hpp"
#include "sclif/verify.hpp"

using namespace sclif;
using json = nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kFail = 1, kUsage = 2 };

bool usage_error(Errc c) {
  switch (c) {
    case Errc::InvalidArgument:
    case Errc::UnknownTable:
    case Errc::UnknownCheck:
    case Errc::Syntax:
    case Errc::GeneratorOutOfRange:
    case Errc::TooLarge:
    case Errc::InvalidBlade:
      return true;
    default:
      return false;
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string md_cell(std::string s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += '\\';
    out += c;
  }
  return out;
}

struct ClassifyOpts {
  std::string field = "real", functor = "sigma", format = "text";
  int p = 0, q = 0, r = 0;
  bool oracle = false;
  std::uint64_t seed = kDefaultSeed;
};

int cmd_classify(const ClassifyOpts& o) {
  const bool real = o.field == "real";
  const Functor S = o.functor == "pi" ? Functor::Pi : Functor::Sigma;
  if (!real && o.r != 0) throw Error(Errc::InvalidArgument, "-r applies to the real field only");
  Signature sig = real ? Signature::real(o.p, o.q, o.r) : Signature::complex(o.p, o.q);
  BasicClass cls = real ? BasicClass{real_basic_class(o.p, o.q, o.r, S)} : BasicClass{complex_basic_class(o.p, o.q)};
  SuperAlgebra R = std::visit([](const auto& c) { return realize(c); }, cls);
  std::string label = real ? "R(" + std::to_string(o.p) + "," + std::to_string(o.q) + "," + std::to_string(o.r) + ")"
                           : "C(" + std::to_string(o.p) + "," + std::to_string(o.q) + ")";

  json doc;
  doc["algebra"] = label;
  doc["field"] = o.field;
  doc["p"] = o.p;
  doc["q"] = o.q;
  doc["r"] = o.r;
  doc["dim"] = sig.dim();
  doc["functor"] = functor_name(S);
  doc["basic_class"] = class_name(cls);
  doc["realized"] = {{"dim", R.dim()}, {"even", R.graded_dims().first}, {"odd", R.graded_dims().second}};
  try {
    GrothendieckData g = real ? grothendieck_real(o.p, o.q, o.r) : grothendieck_complex(o.p, o.q);
    doc["grothendieck"] = {{"v", g.v}, {"irr", g.irr_labels}, {"k_rank", g.k_rank}, {"k", g.group()}};
  } catch (const Error& e) {
    if (e.code() != Errc::OutOfScope) throw;
    doc["grothendieck"] = nullptr;
    doc["scope_note"] = e.what();
  }
  bool agrees = true;
  if (o.oracle) {
    OracleResult res = real ? oracle_classify_real(o.p, o.q, o.r, S, o.seed) : oracle_classify_complex(o.p, o.q, S, o.seed);
    agrees = res.id.cls == cls;
    doc["oracle"] = {{"basic_class", class_name(res.id.cls)}, {"exact_isomorphism", res.id.exact},
                     {"confirmed", res.confirmed},         {"idempotents", res.idempotents},
                     {"basic_dim", res.basic_dim},         {"seed", o.seed},
                     {"agrees", agrees}};
  }

  if (o.format == "json") {
    std::cout << doc.dump(2) << "\n";
  } else if (o.format == "csv") {
    std::cout << "algebra,functor,basic_class,realized_dim,v,k,oracle_class,agrees\n";
    const json& g = doc["grothendieck"];
    std::cout << label << "," << functor_name(S) << "," << csv_field(class_name(cls)) << "," << R.dim() << ","
              << (g.is_null() ? "" : std::to_string(g["v"].get<int>())) << ","
              << (g.is_null() ? "" : g["k"].get<std::string>()) << ","
              << (o.oracle ? csv_field(doc["oracle"]["basic_class"].get<std::string>()) : "") << ","
              << (o.oracle ? (agrees ? "true" : "false") : "") << "\n";
  } else {
    const bool md = o.format == "md";
    auto row = [&](const std::string& k, const std::string& v) {
      if (md) std::cout << "| " << k << " | " << md_cell(v) << " |\n";
      else std::cout << k << ": " << v << "\n";
    };
    if (md) std::cout << "| field | value |\n|---|---|\n";
    row("algebra", label);
    row("functor", functor_name(S));
    row("basic class", class_name(cls));
    row("realized", "dim " + std::to_string(R.dim()) + " (" + std::to_string(R.graded_dims().first) + " even, " +
                        std::to_string(R.graded_dims().second) + " odd)");
    const json& g = doc["grothendieck"];
    if (g.is_null()) {
      row("K", doc["scope_note"].get<std::string>());
    } else {
      row("v", std::to_string(g["v"].get<int>()));
      row("K", g["k"].get<std::string>());
    }
    if (o.oracle) {
      const json& x = doc["oracle"];
      row("oracle", x["basic_class"].get<std::string>() + (x["exact_isomorphism"].get<bool>() ? " (isomorphism)" : " (invariants)") +
                        ", " + std::to_string(x["idempotents"].get<std::size_t>()) + " idempotents, basic dim " +
                        std::to_string(x["basic_dim"].get<std::size_t>()) + (x["confirmed"].get<bool>() ? "" : ", unconfirmed"));
      row("agreement", agrees ? "yes" : "NO");
    }
  }
  return agrees ? kOk : kFail;
}

struct VerifyOpts {
  std::string check = "all", format = "text";
  std::uint64_t seed = kDefaultSeed;
  int trials = kDefaultTrials;
  unsigned jobs = 1;
};

int cmd_verify(const VerifyOpts& o) {
  std::vector<std::string> names;
  if (o.check == "all") names = check_names();
  else names.push_back(o.check);
  for (const auto& n : names)
    if (std::find(check_names().begin(), check_names().end(), n) == check_names().end())
      throw Error(Errc::UnknownCheck, "unknown check '" + n + "'");

  std::vector<VerifyReport> reports(names.size());
  if (o.jobs <= 1) {
    for (std::size_t k = 0; k < names.size(); ++k) reports[k] = run_check(names[k], o.seed, o.trials);
  } else {
    // Results are written back by index, so output order stays sorted.
    for (std::size_t next = 0; next < names.size();) {
      std::vector<std::pair<std::size_t, std::future<VerifyReport>>> batch;
      for (unsigned j = 0; j < o.jobs && next < names.size(); ++j, ++next)
        batch.emplace_back(next, std::async(std::launch::async, [&o, &names, next] {
                             return run_check(names[next], o.seed, o.trials);
                           }));
      for (auto& [k, f] : batch) reports[k] = f.get();
    }
  }

  bool failed = false;
  for (const auto& r : reports) failed = failed || r.status == CheckStatus::Fail;

  if (o.format == "json") {
    json doc;
    doc["seed"] = o.seed;
    doc["trials"] = o.trials;
    doc["status"] = failed ? "fail" : "pass";
    doc["checks"] = json::array();
    for (const auto& r : reports) {
      json c;
      c["check"] = r.check;
      c["status"] = check_status_name(r.status);
      c["seconds"] = r.seconds;
      c["items"] = json::array();
      for (const auto& it : r.items) c["items"].push_back({{"what", it.what}, {"status", check_status_name(it.status)}});
      c["witnesses"] = r.witnesses;
      doc["checks"].push_back(std::move(c));
    }
    std::cout << doc.dump(2) << "\n";
  } else if (o.format == "csv") {
    std::cout << "check,status,item,item_status\n";
    for (const auto& r : reports)
      for (const auto& it : r.items)
        std::cout << r.check << "," << check_status_name(r.status) << "," << csv_field(it.what) << ","
                  << check_status_name(it.status) << "\n";
  } else if (o.format == "md") {
    std::cout << "| check | status | item | result |\n|---|---|---|---|\n";
    for (const auto& r : reports)
      for (const auto& it : r.items)
        std::cout << "| " << r.check << " | " << check_status_name(r.status) << " | " << md_cell(it.what) << " | "
                  << check_status_name(it.status) << " |\n";
    for (const auto& r : reports)
      for (const auto& w : r.witnesses) std::cout << "\n- " << r.check << ": `" << w << "`";
    std::cout << "\n";
  } else {
    for (const auto& r : reports) {
      std::ostringstream t;
      t.precision(3);
      t << std::fixed << r.seconds;
      std::cout << r.check << ": " << check_status_name(r.status) << " (" << t.str() << " s)\n";
      for (const auto& it : r.items) std::cout << "  " << check_status_name(it.status) << "  " << it.what << "\n";
      for (const auto& w : r.witnesses) std::cout << "  witness  " << w << "\n";
    }
    std::cout << (failed ? "FAIL" : "PASS") << "\n";
  }
  return failed ? kFail : kOk;
}

struct CalcOpts {
  std::string field = "real", format = "text", expr;
  int p = 0, q = 0, r = 0;
};

int cmd_calc(const CalcOpts& o) {
  const bool real = o.field == "real";
  if (!real && o.r != 0) throw Error(Errc::InvalidArgument, "-r applies to the real field only");
  Signature sig = real ? Signature::real(o.p, o.q, o.r) : Signature::complex(o.p, o.q);
  SuperAlgebra A = clifford(sig);
  ExprAst ast = parse_expr(o.expr, sig);
  Element x = eval_expr(ast, A);
  std::string value = A.format(x);
  std::optional<int> par = A.parity_of(x);
  std::string parity = par ? std::to_string(*par) : "mixed";
  if (o.format == "json") {
    json doc;
    doc["algebra"] = A.label();
    doc["input"] = o.expr;
    doc["parsed"] = print_expr(ast);
    doc["value"] = value;
    doc["parity"] = par ? json(*par) : json("mixed");
    std::cout << doc.dump(2) << "\n";
  } else if (o.format == "csv") {
    std::cout << "algebra,input,parsed,value,parity\n"
              << csv_field(A.label()) << "," << csv_field(o.expr) << "," << csv_field(print_expr(ast)) << ","
              << csv_field(value) << "," << parity << "\n";
  } else if (o.format == "md") {
    std::cout << "| algebra | input | value | parity |\n|---|---|---|---|\n| " << A.label() << " | `" << md_cell(o.expr)
              << "` | `" << md_cell(value) << "` | " << parity << " |\n";
  } else {
    std::cout << value << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Clifford superalgebra toolkit: basic reduction, named checks, Grothendieck tables"};
  app.require_subcommand(1);
  const std::vector<std::string> formats = {"text", "json", "csv", "md"};

  ClassifyOpts co;
  auto* classify = app.add_subcommand("classify", "Basic superalgebra class of a Clifford superalgebra");
  classify->add_option("--field", co.field)->check(CLI::IsMember({"real", "complex"}));
  classify->add_option("-p", co.p)->check(CLI::NonNegativeNumber);
  classify->add_option("-q", co.q)->check(CLI::NonNegativeNumber);
  classify->add_option("-r", co.r)->check(CLI::NonNegativeNumber);
  classify->add_option("--functor", co.functor)->check(CLI::IsMember({"sigma", "pi"}));
  classify->add_flag("--oracle", co.oracle, "Also reduce and identify by brute force");
  classify->add_option("--seed", co.seed);
  classify->add_option("--format", co.format)->check(CLI::IsMember(formats));

  VerifyOpts vo;
  std::vector<std::string> checks = check_names();
  checks.insert(checks.begin(), "all");
  auto* verify = app.add_subcommand("verify", "Run the named machine checks");
  verify->add_option("--check", vo.check)->check(CLI::IsMember(checks));
  verify->add_option("--seed", vo.seed);
  verify->add_option("--trials", vo.trials)->check(CLI::PositiveNumber);
  verify->add_option("--jobs,-j", vo.jobs)->check(CLI::PositiveNumber);
  verify->add_option("--format", vo.format)->check(CLI::IsMember(formats));

  std::string table_kind, table_format = "text";
  auto* table = app.add_subcommand("table", "Emit a classification or Grothendieck table");
  table->add_option("kind", table_kind, "real-basic, real-k, complex-basic or complex-k")->required();
  table->add_option("fmt", table_format, "Output format (same as --format)")->check(CLI::IsMember(formats));
  table->add_option("--format", table_format)->check(CLI::IsMember(formats));

  CalcOpts ko;
  auto* calc = app.add_subcommand("calc", "Evaluate an expression in a Clifford superalgebra");
  calc->add_option("--field", ko.field)->check(CLI::IsMember({"real", "complex"}));
  calc->add_option("-p", ko.p)->check(CLI::NonNegativeNumber);
  calc->add_option("-q", ko.q)->check(CLI::NonNegativeNumber);
  calc->add_option("-r", ko.r)->check(CLI::NonNegativeNumber);
  calc->add_option("--format", ko.format)->check(CLI::IsMember(formats));
  calc->add_option("expr", ko.expr)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*classify) return cmd_classify(co);
    if (*verify) return cmd_verify(vo);
    if (*table) {
      std::cout << emit_table(parse_table_kind(table_kind), parse_format(table_format));
      return kOk;
    }
    if (*calc) return cmd_calc(ko);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return usage_error(e.code()) ? kUsage : kFail;
  }
  return kUsage;
}

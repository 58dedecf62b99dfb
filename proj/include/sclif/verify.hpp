#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sclif/morita.hpp"

namespace sclif {

enum class CheckStatus { Pass, Fail, Undetermined };
const char* check_status_name(CheckStatus s);

struct CheckItem {
  std::string what;
  CheckStatus status = CheckStatus::Pass;
};

struct VerifyReport {
  std::string check;
  CheckStatus status = CheckStatus::Pass;
  std::vector<CheckItem> items;
  std::vector<std::string> witnesses;
  double seconds = 0;

  void expect(bool ok, std::string what);
  void undetermined(std::string what);
  void witness(std::string w) { witnesses.push_back(std::move(w)); }
};

// Sorted names accepted by run_check ("all" expands to these).
const std::vector<std::string>& check_names();

VerifyReport run_check(const std::string& name, std::uint64_t seed = kDefaultSeed, int trials = kDefaultTrials);
std::vector<VerifyReport> run_checks(const std::string& name, std::uint64_t seed = kDefaultSeed,
                                     int trials = kDefaultTrials);

}  // namespace sclif

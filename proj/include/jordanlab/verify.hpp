#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "jordanlab/catalog.hpp"

namespace jordanlab {

struct CheckResult {
  std::string id;
  std::string statement;
  bool pass = false;
  std::string details;
};

struct VerificationReport {
  std::vector<CheckResult> results;
  bool all_pass() const;
};

/// Every known check id, in canonical order.
std::vector<std::string> all_check_ids();

/// Runs the selected checks (all of them when `ids` is empty) over the
/// rational catalog. Unknown ids raise InputError.
VerificationReport run_verification(const std::vector<std::string>& ids);

std::string report_table(const VerificationReport& rep);
nlohmann::json report_json(const VerificationReport& rep);

}  // namespace jordanlab

#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "tint/ideal.hpp"
#include "tint/interior.hpp"

namespace tint {

enum class Verdict { Pass, Fail, Uncheckable, NotStabilized };

std::string to_string(Verdict v);

struct CheckRecord {
  std::string name;
  Verdict verdict = Verdict::Pass;
  std::vector<std::string> lhs;
  std::vector<std::string> rhs;
  std::string note;
};

CheckRecord compare_ideals(std::string name, const Ideal& lhs, const Ideal& rhs);
/// lhs ⊆ rhs.
CheckRecord compare_containment(std::string name, const Ideal& lhs, const Ideal& rhs);
CheckRecord boolean_check(std::string name, bool holds, std::string note = "");

nlohmann::ordered_json to_json(const CheckRecord& r);
nlohmann::ordered_json trace_json(const TauResult& r);
/// {"ideal", "stabilized_at", "trace", "checks"}.
nlohmann::ordered_json result_document(const TauResult& r,
                                       const std::vector<CheckRecord>& checks = {});
nlohmann::ordered_json checks_document(const std::vector<CheckRecord>& checks);

/// Plain-text rendering of a result document.
std::string pretty(const nlohmann::ordered_json& doc);

}  // namespace tint

#include "tint/report.hpp"

#include <sstream>

namespace tint {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass:
      return "PASS";
    case Verdict::Fail:
      return "FAIL";
    case Verdict::Uncheckable:
      return "UNCHECKABLE";
    case Verdict::NotStabilized:
      return "NOT_STABILIZED";
  }
  return "FAIL";
}

CheckRecord compare_ideals(std::string name, const Ideal& lhs, const Ideal& rhs) {
  return {std::move(name), lhs == rhs ? Verdict::Pass : Verdict::Fail, lhs.canonical_strings(),
          rhs.canonical_strings(), ""};
}

CheckRecord compare_containment(std::string name, const Ideal& lhs, const Ideal& rhs) {
  return {std::move(name), rhs.contains(lhs) ? Verdict::Pass : Verdict::Fail,
          lhs.canonical_strings(), rhs.canonical_strings(), "lhs contained in rhs"};
}

CheckRecord boolean_check(std::string name, bool holds, std::string note) {
  return {std::move(name), holds ? Verdict::Pass : Verdict::Fail, {}, {}, std::move(note)};
}

nlohmann::ordered_json to_json(const CheckRecord& r) {
  nlohmann::ordered_json j;
  j["name"] = r.name;
  j["verdict"] = to_string(r.verdict);
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

nlohmann::ordered_json trace_json(const TauResult& r) {
  nlohmann::ordered_json trace = nlohmann::ordered_json::array();
  for (const auto& [e, ideal] : r.partial_sums) {
    trace.push_back({{"e", e}, {"ideal", ideal.canonical_strings()}});
  }
  return trace;
}

nlohmann::ordered_json result_document(const TauResult& r, const std::vector<CheckRecord>& checks) {
  nlohmann::ordered_json doc;
  doc["ideal"] = r.ideal.canonical_strings();
  if (r.stabilized_at) {
    doc["stabilized_at"] = *r.stabilized_at;
  } else {
    doc["stabilized_at"] = "NOT_STABILIZED";
  }
  doc["test_element"] = r.certificate.to_string();
  doc["trace"] = trace_json(r);
  doc["checks"] = checks_document(checks);
  return doc;
}

nlohmann::ordered_json checks_document(const std::vector<CheckRecord>& checks) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const CheckRecord& c : checks) arr.push_back(to_json(c));
  return arr;
}

namespace {

std::string join(const nlohmann::ordered_json& arr) {
  std::string out = "(";
  bool first = true;
  for (const auto& s : arr) {
    if (!first) out += ", ";
    out += s.get<std::string>();
    first = false;
  }
  return out + ")";
}

}  // namespace

std::string pretty(const nlohmann::ordered_json& doc) {
  std::ostringstream out;
  for (const auto& [key, value] : doc.items()) {
    if (key == "trace") {
      out << "trace:\n";
      for (const auto& step : value) {
        const char* key_name = step.contains("e") ? "e" : "step";
        out << "  " << key_name << "=" << step[key_name].get<std::size_t>() << "  "
            << join(step["ideal"]) << "\n";
      }
    } else if (key == "checks") {
      if (value.empty()) continue;
      out << "checks:\n";
      for (const auto& c : value) {
        out << "  " << c["verdict"].get<std::string>() << "  " << c["name"].get<std::string>();
        if (!c["lhs"].empty() || !c["rhs"].empty()) {
          out << "  lhs=" << join(c["lhs"]) << " rhs=" << join(c["rhs"]);
        }
        if (c.contains("note")) out << "  [" << c["note"].get<std::string>() << "]";
        out << "\n";
      }
    } else if (value.is_array() && (value.empty() || value.front().is_string())) {
      out << key << ": " << join(value) << "\n";
    } else if (value.is_string()) {
      out << key << ": " << value.get<std::string>() << "\n";
    } else {
      out << key << ": " << value.dump() << "\n";
    }
  }
  return out.str();
}

}  // namespace tint

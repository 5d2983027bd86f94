#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tint/corpus.hpp"
#include "tint/report.hpp"

namespace tint {

/// A ring plus the optional inputs some identities need.
struct VerifyCell {
  RingPresentation ring;
  std::optional<std::vector<std::string>> conductor;
  std::vector<std::string> localize_at;
  std::vector<std::vector<std::string>> finite_length_quotients;

  static VerifyCell from_entry(const CorpusEntry& entry);
};

/// Records named "<identity>:<ring>[<detail>]" for every identity that
/// applies to the ring. A degree cap adds oracle agreement records at e = 1.
std::vector<CheckRecord> verify_ring(const VerifyCell& cell, unsigned e_max,
                                     std::optional<unsigned> degree_cap = std::nullopt);

bool is_known_suite(const std::string& name);

struct SuiteResult {
  std::vector<CheckRecord> checks;
  /// 0 all PASS or UNCHECKABLE, 4 any FAIL, else 3 on NOT_STABILIZED.
  int exit_code = 0;
};

/// Runs the cells concurrently; the output is sorted by record name.
SuiteResult run_verify_suite(const std::vector<VerifyCell>& cells, unsigned e_max,
                             std::optional<unsigned> degree_cap = std::nullopt);

/// The identity suite (CLI name "paper") over the bundled corpus.
SuiteResult run_identity_suite(unsigned e_max, std::optional<unsigned> degree_cap = std::nullopt);

}  // namespace tint

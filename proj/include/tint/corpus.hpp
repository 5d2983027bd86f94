#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tint/ring.hpp"
#include "tint/ringspec.hpp"

namespace tint {

/// A bundled ring with the extra inputs the verify suite uses.
struct CorpusEntry {
  std::string name;
  std::string spec_text;
  /// Known conductor, for rings without a structural conductor method.
  std::optional<std::vector<std::string>> conductor;
  /// Elements f for the localization identity.
  std::vector<std::string> localize_at;
  /// Ideals J with R/J of finite length, for the duality identity.
  std::vector<std::vector<std::string>> finite_length_quotients;

  RingSpec spec() const { return parse_ring_spec(spec_text); }
  RingPresentation ring() const { return to_presentation(spec(), name); }
};

/// The bundled corpus, sorted by name. The same specs ship as rings/*.ring.
const std::vector<CorpusEntry>& bundled_corpus();

/// Throws PreconditionError for an unknown name.
const CorpusEntry& corpus_entry(const std::string& name);

}  // namespace tint

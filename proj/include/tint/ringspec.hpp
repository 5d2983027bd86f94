#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tint/ring.hpp"

namespace tint {

/// Contents of a `.ring` file. Polynomials are kept as canonical strings.
///
///   p = <int>
///   vars = <name>(, <name>)*
///   I = <poly>(; <poly>)*
///   minimal_primes = [<poly list>] (| [<poly list>])*
///   semigroup = <int>(, <int>)*
///   reduced = true|false
///   test_element = <poly>
///
/// `#` starts a comment. `p`, `vars` and `I` are required.
struct RingSpec {
  std::uint32_t p = 0;
  std::vector<std::string> vars;
  std::vector<std::string> generators;
  std::optional<std::vector<std::vector<std::string>>> minimal_primes;
  std::vector<std::uint32_t> semigroup;
  std::optional<bool> reduced;
  std::optional<std::string> test_element;

  bool operator==(const RingSpec&) const = default;
};

/// Throws ParseError with line and column on syntax or semantic errors.
RingSpec parse_ring_spec(std::string_view text);

std::string render_ring_spec(const RingSpec& spec);

RingPresentation to_presentation(const RingSpec& spec, const std::string& name);

/// Reads and parses a file; the ring is named after the file stem.
RingPresentation load_ring_file(const std::string& path);

}  // namespace tint

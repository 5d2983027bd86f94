#include "tint/ringspec.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "tint/errors.hpp"
#include "tint/field.hpp"
#include "tint/parse.hpp"

namespace tint {

namespace {

struct Located {
  std::string text;
  std::size_t line;
  std::size_t column;  // 1-based column of text[0]
};

Located trim(const Located& in) {
  std::size_t b = 0;
  while (b < in.text.size() && std::isspace(static_cast<unsigned char>(in.text[b]))) ++b;
  std::size_t e = in.text.size();
  while (e > b && std::isspace(static_cast<unsigned char>(in.text[e - 1]))) --e;
  return {in.text.substr(b, e - b), in.line, in.column + b};
}

std::vector<Located> split(const Located& in, const std::string& seps) {
  std::vector<Located> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= in.text.size(); ++i) {
    if (i == in.text.size() || seps.find(in.text[i]) != std::string::npos) {
      out.push_back(trim({in.text.substr(start, i - start), in.line, in.column + start}));
      start = i + 1;
    }
  }
  return out;
}

std::uint32_t parse_uint(const Located& v, std::uint64_t max) {
  std::uint64_t x = 0;
  const char* end = v.text.data() + v.text.size();
  auto [ptr, ec] = std::from_chars(v.text.data(), end, x);
  if (v.text.empty() || ec != std::errc() || ptr != end) {
    throw ParseError("expected a non-negative integer, got '" + v.text + "'", v.line, v.column);
  }
  if (x > max) throw ParseError("integer " + v.text + " is too large", v.line, v.column);
  return static_cast<std::uint32_t>(x);
}

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

std::string parse_poly(const Located& v, const RingPtr& ring) {
  if (v.text.empty()) throw ParseError("empty polynomial", v.line, v.column);
  return parse_polynomial(v.text, ring, v.line, v.column - 1).to_string();
}

std::vector<std::string> parse_poly_list(const Located& v, const RingPtr& ring,
                                         const std::string& seps) {
  std::vector<std::string> out;
  for (const Located& part : split(v, seps)) {
    std::string s = parse_poly(part, ring);
    if (s != "0") out.push_back(s);
  }
  return out;
}

std::vector<std::vector<std::string>> parse_prime_lists(const Located& v, const RingPtr& ring) {
  std::vector<std::vector<std::string>> out;
  for (const Located& part : split(v, "|")) {
    if (part.text.size() < 2 || part.text.front() != '[' || part.text.back() != ']') {
      throw ParseError("expected [<poly list>]", part.line, part.column);
    }
    Located inner{part.text.substr(1, part.text.size() - 2), part.line, part.column + 1};
    std::vector<std::string> gens = parse_poly_list(inner, ring, ",;");
    if (gens.empty()) throw ParseError("a minimal prime needs a generator", part.line, part.column);
    out.push_back(std::move(gens));
  }
  return out;
}

}  // namespace

RingSpec parse_ring_spec(std::string_view text) {
  std::map<std::string, Located> values;
  std::map<std::string, std::size_t> key_lines;
  static const std::vector<std::string> kKeys = {"p",         "vars",    "I",           "minimal_primes",
                                                 "semigroup", "reduced", "test_element"};
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    std::size_t hash = raw.find('#');
    if (hash != std::string::npos) raw.resize(hash);
    Located line = trim({raw, line_no, 1});
    if (line.text.empty()) continue;
    std::size_t eq = raw.find('=');
    if (eq == std::string::npos) throw ParseError("expected 'key = value'", line.line, line.column);
    Located key = trim({raw.substr(0, eq), line_no, 1});
    Located value = trim({raw.substr(eq + 1), line_no, eq + 2});
    if (std::find(kKeys.begin(), kKeys.end(), key.text) == kKeys.end()) {
      throw ParseError("unknown key '" + key.text + "'", key.line, key.column);
    }
    if (values.count(key.text)) throw ParseError("duplicate key '" + key.text + "'", key.line, key.column);
    values.emplace(key.text, value);
    key_lines.emplace(key.text, line_no);
  }
  for (const char* required : {"p", "vars", "I"}) {
    if (!values.count(required)) {
      throw ParseError(std::string("missing key '") + required + "'", line_no + 1, 1);
    }
  }
  RingSpec spec;
  const Located& pv = values.at("p");
  spec.p = parse_uint(pv, 1u << 13);
  if (!is_prime(spec.p)) throw ParseError("p must be prime", pv.line, pv.column);

  for (const Located& v : split(values.at("vars"), ",")) {
    if (!is_identifier(v.text)) throw ParseError("bad variable name '" + v.text + "'", v.line, v.column);
    if (std::find(spec.vars.begin(), spec.vars.end(), v.text) != spec.vars.end()) {
      throw ParseError("duplicate variable '" + v.text + "'", v.line, v.column);
    }
    spec.vars.push_back(v.text);
  }
  if (spec.vars.size() > kMaxVars) {
    const Located& v = values.at("vars");
    throw ParseError("at most " + std::to_string(kMaxVars) + " variables", v.line, v.column);
  }
  RingPtr ring = make_ring(spec.p, spec.vars);
  spec.generators = parse_poly_list(values.at("I"), ring, ";");
  if (values.count("minimal_primes")) {
    spec.minimal_primes = parse_prime_lists(values.at("minimal_primes"), ring);
  }
  if (values.count("semigroup")) {
    for (const Located& v : split(values.at("semigroup"), ",")) {
      std::uint32_t a = parse_uint(v, 1u << 16);
      if (a == 0) throw ParseError("semigroup generators must be positive", v.line, v.column);
      spec.semigroup.push_back(a);
    }
  }
  if (values.count("reduced")) {
    const Located& v = values.at("reduced");
    if (v.text == "true") {
      spec.reduced = true;
    } else if (v.text == "false") {
      spec.reduced = false;
    } else {
      throw ParseError("reduced must be true or false", v.line, v.column);
    }
  }
  if (values.count("test_element")) spec.test_element = parse_poly(values.at("test_element"), ring);
  try {
    to_presentation(spec, "");
  } catch (const PreconditionError& e) {
    throw ParseError(e.what(), key_lines.at("I"), 1);
  } catch (const UnsupportedInputError& e) {
    throw ParseError(e.what(), key_lines.at("I"), 1);
  }
  return spec;
}

namespace {

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

}  // namespace

std::string render_ring_spec(const RingSpec& spec) {
  std::ostringstream out;
  out << "p = " << spec.p << "\n";
  out << "vars = " << join(spec.vars, ", ") << "\n";
  out << "I = " << (spec.generators.empty() ? "0" : join(spec.generators, "; ")) << "\n";
  if (spec.minimal_primes) {
    std::vector<std::string> lists;
    for (const auto& gens : *spec.minimal_primes) lists.push_back("[" + join(gens, ", ") + "]");
    out << "minimal_primes = " << join(lists, " | ") << "\n";
  }
  if (!spec.semigroup.empty()) {
    std::vector<std::string> nums;
    for (std::uint32_t a : spec.semigroup) nums.push_back(std::to_string(a));
    out << "semigroup = " << join(nums, ", ") << "\n";
  }
  if (spec.reduced) out << "reduced = " << (*spec.reduced ? "true" : "false") << "\n";
  if (spec.test_element) out << "test_element = " << *spec.test_element << "\n";
  return out.str();
}

RingPresentation to_presentation(const RingSpec& spec, const std::string& name) {
  RingPtr ring = make_ring(spec.p, spec.vars);
  std::vector<Polynomial> gens;
  for (const std::string& g : spec.generators) gens.push_back(parse_polynomial(g, ring));
  std::optional<std::vector<Ideal>> primes;
  if (spec.minimal_primes) {
    primes.emplace();
    for (const auto& list : *spec.minimal_primes) {
      std::vector<Polynomial> pg;
      for (const std::string& g : list) pg.push_back(parse_polynomial(g, ring));
      primes->push_back(Ideal(ring, pg));
    }
  }
  std::optional<Polynomial> c;
  if (spec.test_element) c = parse_polynomial(*spec.test_element, ring);
  return RingPresentation(ring, gens, primes, spec.semigroup, spec.reduced, c, name);
}

RingPresentation load_ring_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read ring file " + path, 0, 0);
  std::stringstream buf;
  buf << in.rdbuf();
  return to_presentation(parse_ring_spec(buf.str()),
                         std::filesystem::path(path).stem().string());
}

}  // namespace tint

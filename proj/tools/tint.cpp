// tint: test ideals and tight interiors of F_p[x]/I from the command line.

#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "tint/cartier.hpp"
#include "tint/checks.hpp"
#include "tint/conductor.hpp"
#include "tint/errors.hpp"
#include "tint/interior.hpp"
#include "tint/report.hpp"
#include "tint/ringspec.hpp"
#include "tint/verify.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace tint;

struct Options {
  std::string ring_file;
  unsigned e_max = kDefaultEMax;
  unsigned window = kDefaultWindow;
  std::string test_element;
  std::string module_ideal;
  std::string method;
  bool json = true;
  bool pretty = false;
  std::optional<unsigned> degree_cap;
  std::string suite = "paper";
};

std::vector<std::string> split_exprs(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : text) {
    if (ch == ';' || ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

std::optional<Polynomial> test_element(const Options& o, const RingPresentation& ring) {
  if (o.test_element.empty()) return std::nullopt;
  return ring.parse(o.test_element);
}

std::optional<Ideal> module_ideal(const Options& o, const RingPresentation& ring) {
  if (o.module_ideal.empty()) return std::nullopt;
  std::vector<Polynomial> gens;
  for (const std::string& s : split_exprs(o.module_ideal)) gens.push_back(ring.parse(s));
  return Ideal(ring.ambient(), gens);
}

void emit(const Options& o, const json& doc) {
  if (o.pretty) {
    std::cout << pretty(doc);
  } else {
    std::cout << doc.dump() << "\n";
  }
}

int emit_tau(const Options& o, const TauResult& r, const std::vector<CheckRecord>& checks = {}) {
  emit(o, result_document(r, checks));
  return r.stabilized() ? 0 : 3;
}

Polynomial chosen_test_element(const Options& o, const RingPresentation& ring) {
  if (auto c = test_element(o, ring)) return *c;
  if (ring.declared_test_element()) return *ring.declared_test_element();
  return find_test_element(ring);
}

int cmd_tau(const Options& o) {
  RingPresentation ring = load_ring_file(o.ring_file);
  return emit_tau(o, big_test_ideal(ring, test_element(o, ring), o.e_max, o.window));
}

int cmd_interior(const Options& o) {
  RingPresentation ring = load_ring_file(o.ring_file);
  InteriorQuery q{ring, module_ideal(o, ring), chosen_test_element(o, ring), 0, o.e_max, o.window};
  return emit_tau(o, tight_interior(q));
}

int cmd_chain(const Options& o) {
  RingPresentation ring = load_ring_file(o.ring_file);
  Ideal start = module_ideal(o, ring).value_or(ring.unit_ideal());
  ChainTrace chain = blickle_chain_down(start, ring, o.e_max);
  json doc;
  doc["ideal"] = chain.fixed_point.canonical_strings();
  if (chain.stabilized) {
    doc["stabilized_at"] = chain.steps.size() - 1;
  } else {
    doc["stabilized_at"] = "NOT_STABILIZED";
  }
  json trace = json::array();
  for (std::size_t i = 0; i < chain.steps.size(); ++i) {
    trace.push_back({{"step", i}, {"ideal", chain.steps[i].canonical_strings()}});
  }
  doc["trace"] = trace;
  doc["checks"] = checks_document({boolean_check("descending", chain.descending)});
  emit(o, doc);
  return chain.stabilized ? 0 : 3;
}

int cmd_fpure(const Options& o) {
  RingPresentation ring = load_ring_file(o.ring_file);
  bool pure = is_f_pure_fedder(ring, module_ideal(o, ring));
  json doc;
  doc["f_pure"] = pure;
  doc["checks"] = checks_document({boolean_check("fedder_criterion", pure)});
  emit(o, doc);
  return 0;
}

int cmd_sfr(const Options& o) {
  RingPresentation ring = load_ring_file(o.ring_file);
  TauResult tau = big_test_ideal(ring, test_element(o, ring), o.e_max, o.window);
  if (!tau.stabilized()) return emit_tau(o, tau);
  json doc;
  doc["strongly_f_regular"] = tau.ideal.is_unit();
  json tau_doc = result_document(tau);
  for (const auto& [key, value] : tau_doc.items()) doc[key] = value;
  emit(o, doc);
  return 0;
}

int cmd_conductor(const Options& o) {
  RingPresentation ring = load_ring_file(o.ring_file);
  std::optional<Ideal> supplied = module_ideal(o, ring);
  std::optional<ConductorMethod> method;
  if (!o.method.empty()) {
    method = parse_conductor_method(o.method);
  } else if (supplied) {
    method = ConductorMethod::Supplied;
  } else {
    method = default_conductor_method(ring);
  }
  if (!method) {
    throw UnsupportedInputError("no conductor method applies; pass --method supplied --module-ideal");
  }
  if (*method == ConductorMethod::Supplied && !supplied) {
    throw PreconditionError("--method supplied needs --module-ideal");
  }
  Ideal cond = conductor(ring, *method, supplied);
  json doc;
  doc["ideal"] = cond.canonical_strings();
  doc["method"] = to_string(*method);
  std::optional<Ideal> pass_on = *method == ConductorMethod::Supplied ? supplied : std::nullopt;
  doc["checks"] = checks_document(conductor_identities_check(ring, pass_on, o.e_max));
  emit(o, doc);
  return 0;
}

int cmd_transform(const Options& o) {
  RingPresentation ring = load_ring_file(o.ring_file);
  CheckRecord r = finite_transform_check(ring, o.e_max);
  json doc;
  doc["ideal"] = r.lhs;
  doc["checks"] = checks_document({r});
  emit(o, doc);
  return 0;
}

int cmd_verify(const Options& o) {
  if (!is_known_suite(o.suite)) {
    std::cerr << "error: unknown suite '" << o.suite << "'\n";
    return 1;
  }
  SuiteResult result;
  if (!o.ring_file.empty()) {
    result = run_verify_suite({VerifyCell{load_ring_file(o.ring_file), std::nullopt, {}, {}}},
                              o.e_max, o.degree_cap);
  } else {
    result = run_identity_suite(o.e_max, o.degree_cap);
  }
  json doc;
  doc["suite"] = o.suite;
  doc["checks"] = checks_document(result.checks);
  emit(o, doc);
  for (const CheckRecord& r : result.checks) {
    if (r.verdict == Verdict::Fail) {
      std::cerr << "FAIL " << r.name << " lhs=" << json(r.lhs).dump() << " rhs=" << json(r.rhs).dump()
                << "\n";
    }
  }
  return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Test ideals and tight interiors over F_p[x]/I"};
  app.require_subcommand(1);
  Options o;

  auto common = [&o](CLI::App* sub, bool ring_required) {
    CLI::Option* ring = sub->add_option("--ring", o.ring_file, "ring spec file");
    if (ring_required) ring->required();
    sub->add_option("--emax", o.e_max, "largest Frobenius exponent")->capture_default_str();
    sub->add_option("--window", o.window, "equal partial sums needed to stop")->capture_default_str();
    sub->add_option("--test-element", o.test_element, "test element c");
    sub->add_option("--module-ideal", o.module_ideal, "generators separated by ';' or ','");
    sub->add_option("--method", o.method, "conductor method: stanley_reisner, semigroup, supplied");
    sub->add_flag("--json", o.json, "JSON output (default)");
    sub->add_flag("--pretty", o.pretty, "plain-text output");
    sub->add_option("--degree-cap", o.degree_cap, "degree cap for the brute-force oracle");
  };

  struct Command {
    const char* name;
    const char* help;
    int (*run)(const Options&);
  };
  const Command commands[] = {
      {"tau", "big test ideal", cmd_tau},
      {"interior", "tight interior of an ideal module", cmd_interior},
      {"chain", "descending chain of Cartier images", cmd_chain},
      {"fpure", "Fedder's criterion", cmd_fpure},
      {"sfr", "strong F-regularity", cmd_sfr},
      {"conductor", "conductor and its identities", cmd_conductor},
      {"transform", "finite transform check for semigroup rings", cmd_transform},
      {"verify", "identity suite", cmd_verify},
  };
  for (const Command& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    common(sub, std::string(c.name) != "verify");
    if (std::string(c.name) == "verify") sub->add_option("suite", o.suite, "suite name")->capture_default_str();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  if (o.e_max == 0 || o.window == 0) {
    std::cerr << "error: --emax and --window must be positive\n";
    return 1;
  }
  try {
    for (const Command& c : commands) {
      if (app.got_subcommand(c.name)) return c.run(o);
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const UnsupportedInputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const NotStabilizedError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

#include "tint/corpus.hpp"

#include <algorithm>

#include "tint/errors.hpp"

namespace tint {

namespace {

std::string node_spec(unsigned p) {
  return "# node\np = " + std::to_string(p) +
         "\nvars = x, y\nI = x*y\nminimal_primes = [x] | [y]\n";
}

std::string cusp_spec(unsigned p) {
  return "# cusp, semigroup <2,3>\np = " + std::to_string(p) +
         "\nvars = x, y\nI = y^2 - x^3\nminimal_primes = [y^2 - x^3]\nsemigroup = 2, 3\n";
}

std::string quadric_spec(unsigned p) {
  return "# quadric cone\np = " + std::to_string(p) +
         "\nvars = x, y, z\nI = x*y - z^2\nminimal_primes = [x*y - z^2]\n";
}

std::vector<CorpusEntry> build() {
  std::vector<CorpusEntry> out;
  for (unsigned p : {2u, 3u, 5u}) {
    CorpusEntry node{"node_p" + std::to_string(p), node_spec(p), std::nullopt, {"x + y + 1", "x + y"}, {}};
    node.finite_length_quotients = {{"x", "y"}, {"x^2", "y^2"}, {"x^3", "y^3"}, {"x", "y^2"}};
    out.push_back(node);
    out.push_back({"cusp_p" + std::to_string(p), cusp_spec(p), std::nullopt, {"x", "x + 1"}, {}});
  }
  for (unsigned p : {3u, 5u}) {
    out.push_back({"quadric_p" + std::to_string(p), quadric_spec(p), std::vector<std::string>{"1"}, {}, {}});
  }
  out.push_back({"semigroup345_p2",
                 "# semigroup <3,4,5>\np = 2\nvars = x, y, z\n"
                 "I = x^3 - y*z; y^2 - x*z; z^2 - x^2*y\n"
                 "minimal_primes = [x^3 - y*z, y^2 - x*z, z^2 - x^2*y]\nsemigroup = 3, 4, 5\n",
                 std::nullopt, {}, {}});
  out.push_back({"stanley_reisner_xy_xz_p3",
                 "# Stanley-Reisner ring of (xy, xz)\np = 3\nvars = x, y, z\nI = x*y; x*z\n"
                 "minimal_primes = [x] | [y, z]\n",
                 std::nullopt, {}, {}});
  out.push_back({"nonreduced_x2_p2", "p = 2\nvars = x\nI = x^2\nreduced = false\n", std::nullopt, {}, {}});
  out.push_back({"nonreduced_x2y_p3", "p = 3\nvars = x, y\nI = x^2*y\nreduced = false\n", std::nullopt, {}, {}});
  for (unsigned p : {2u, 3u, 5u}) {
    out.push_back({"regular_x_p" + std::to_string(p), "p = " + std::to_string(p) + "\nvars = x\nI = 0\n",
                   std::nullopt, {}, {{"x"}, {"x^2"}}});
    out.push_back({"regular_xy_p" + std::to_string(p), "p = " + std::to_string(p) + "\nvars = x, y\nI = 0\n",
                   std::nullopt, {}, {}});
  }
  std::sort(out.begin(), out.end(),
            [](const CorpusEntry& a, const CorpusEntry& b) { return a.name < b.name; });
  return out;
}

}  // namespace

const std::vector<CorpusEntry>& bundled_corpus() {
  static const std::vector<CorpusEntry> corpus = build();
  return corpus;
}

const CorpusEntry& corpus_entry(const std::string& name) {
  for (const CorpusEntry& e : bundled_corpus()) {
    if (e.name == name) return e;
  }
  throw PreconditionError("no bundled ring named " + name);
}

}  // namespace tint

// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <cstdio>
#include <optional>
#include <vector>
#include <exception>
#include <functional>
#include <string>

#include "nil/harness.hpp"

using namespace nil;

namespace {

struct Verdict {
  bool ok = false;
  std::string detail;
};

std::int64_t tag_count(const SuiteReport& r, const std::string& tag) {
  return r.params.at("case_tags").value(tag, std::int64_t{0});
}

std::size_t failures_with_tag(const SuiteReport& r, const std::string& tag) {
  std::size_t k = 0;
  for (const Failure& f : r.failures) k += f.tag == tag;
  return k;
}

std::string summary(const SuiteReport& r) {
  return std::to_string(r.cases) + " cases, " + std::to_string(r.failures.size()) + " failures, " +
         std::to_string(r.elapsed_ms) + " ms";
}

SuiteReport run(const std::string& suite, std::optional<int> n, std::optional<std::uint32_t> cross = {}) {
  SuiteOptions o;
  o.n_max = n;
  o.p = 2;
  o.cross_p = cross;
  return run_suite(suite, o);
}

Verdict forest_equality() {
  SuiteReport r = run("forest-equality", 8);
  const json& classes = r.params.at("tree_classes");
  int upto8 = 0;
  for (int n = 2; n <= 8; ++n) upto8 += classes.value(std::to_string(n), 0);
  const int at8 = classes.value("8", 0);
  bool ok = r.passed() && at8 == 23 && upto8 == 47 && r.elapsed_ms < 60'000;
  return {ok, summary(r) + "; tree classes at n=8: " + std::to_string(at8) +
                  ", n=2..8: " + std::to_string(upto8)};
}

Verdict lower_bound() {
  SuiteReport r = run("lower-bound", 6);
  const int at6 = r.params.at("graph_classes").value("6", 0);
  bool ok = r.passed() && at6 == 156 && r.elapsed_ms < 600'000;
  return {ok, summary(r) + "; graph classes at n=6: " + std::to_string(at6)};
}

Verdict closed_forms() {
  SuiteReport r = run("closed-forms", std::nullopt);
  bool ok = r.passed();
  for (const char* tag : {"cycle", "wheel", "complete", "whiskered", "bipartite_n2", "c7", "c5"}) {
    ok = ok && tag_count(r, tag) > 0;
  }
  return {ok, summary(r) + "; cycles " + std::to_string(tag_count(r, "cycle")) + ", wheels " +
                  std::to_string(tag_count(r, "wheel")) + ", whiskered " +
                  std::to_string(tag_count(r, "whiskered"))};
}

Verdict splitting() {
  SuiteReport r = run("structural-identities", 6);
  const auto cases = tag_count(r, "split");
  const auto bad = failures_with_tag(r, "split");
  return {cases > 0 && bad == 0,
          std::to_string(cases) + " chordal classes, " + std::to_string(bad) + " failures"};
}

Verdict oracle() {
  SuiteReport r = run("oracle-equivalence", 5, 32003);
  return {r.passed() && r.cases == 1099, summary(r) + " (ni, edge, path3 at p=2 and p=32003)"};
}

Verdict table_identities() {
  SuiteReport r = run("structural-identities", 6);
  const auto shift = tag_count(r, "shift");
  const auto comps = tag_count(r, "components");
  const auto bad = failures_with_tag(r, "shift") + failures_with_tag(r, "components");
  return {shift >= 50 && comps > 0 && bad == 0,
          std::to_string(shift) + " shift ideals, " + std::to_string(comps) +
              " disconnected graphs, " + std::to_string(bad) + " failures"};
}

Verdict stanley_reisner() {
  SuiteReport r = run("stanley-reisner", 5);
  return {r.passed() && r.cases == 1099, summary(r)};
}

Verdict froberg() {
  SuiteReport r = run("froberg", 6);
  return {r.passed() && r.cases == 208, summary(r) + "; " + std::to_string(r.findings.size()) +
                                           " complete graphs with zero complement ideal"};
}

Verdict properties() {
  SuiteReport r = run("properties", std::nullopt);
  return {r.passed() && r.cases >= 200, summary(r) + ", seed " + std::to_string(r.seed)};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"forest equality, trees n<=8", forest_equality},
      {"lower bound chain, graphs n<=6", lower_bound},
      {"closed forms", closed_forms},
      {"betti splitting at simplicial vertices", splitting},
      {"hochster/taylor oracle, graphs n<=5", oracle},
      {"convolution and extra-variable shift", table_identities},
      {"stanley-reisner round trips", stanley_reisner},
      {"froberg cross-check", froberg},
      {"property suite", properties},
  };
  int failed = 0;
  int k = 0;
  for (const auto& [name, check] : criteria) {
    ++k;
    Verdict v;
    try {
      v = check();
    } catch (const std::exception& e) {
      v = {false, std::string("error: ") + e.what()};
    }
    failed += !v.ok;
    std::printf("%s criterion %d: %s (%s)\n", v.ok ? "PASS" : "FAIL", k, name.c_str(), v.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}

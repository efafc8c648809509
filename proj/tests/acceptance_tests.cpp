// Acceptance suite: one pass/fail line per criterion, exit code equals the
// number of failing criteria. Criteria 1 and 9 exercise the CLI binary
// directly; the sweeps call the same predicate machinery the CLI exposes
// through `check`.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "hmat/enumerate.hpp"
#include "hmat/hmatroid.hpp"
#include "hmat/io.hpp"
#include "subprocess.hpp"

using namespace hmat;
using subprocess::run_command;

namespace {

std::string cli;
std::string fixtures;

struct Outcome {
  bool pass = false;
  std::string detail;
};

Outcome ok() { return {true, ""}; }
Outcome failed(std::string detail) { return {false, std::move(detail)}; }

std::string render(const Counterexample& ce) {
  std::string out = ce.summary;
  for (const auto& [key, value] : ce.details) out += "; " + key + "=" + value;
  return out;
}

Outcome expect_clean(const std::string& predicate, const EnumerationBudget& budget) {
  auto ce = find_counterexample(predicate, budget);
  if (!ce) return ok();
  return failed("counterexample: " + render(*ce));
}

// 1. The bundled example: three families accepted as H-matroids over
//    {empty, E}, all with the identical eight-value rank table.
Outcome criterion_example_reproduction() {
  const std::string doc = fixtures + "/example-3-1.json";
  for (const char* family : {"I1", "I2", "I3"}) {
    auto r = run_command(cli + " verify --family " + family + " --h H0 --input " + doc);
    if (r.exit_code != 0)
      return failed(std::string("verify ") + family + " exited " +
                    std::to_string(r.exit_code));
  }

  const std::vector<std::int32_t> expected = {0, 1, 1, 2, 1, 1, 2, 2};
  std::string first_table;
  for (const char* family : {"I1", "I2", "I3"}) {
    auto r = run_command(cli + " rank --family " + family + " --emit json --input " + doc);
    if (r.exit_code != 0)
      return failed(std::string("rank ") + family + " exited " +
                    std::to_string(r.exit_code));
    Json parsed = Json::parse(r.out);
    const Json& table = parsed.at("output").at("table");
    if (table.size() != expected.size()) return failed("table size mismatch");
    for (std::size_t i = 0; i < expected.size(); ++i)
      if (table[i][1].get<int>() != expected[i])
        return failed(std::string("rank value mismatch for ") + family + " at entry " +
                      std::to_string(i));
    if (first_table.empty())
      first_table = table.dump();
    else if (first_table != table.dump())
      return failed(std::string("tables differ between families (") + family + ")");
  }
  return ok();
}

// 2. Every simplicial complex on n=3 that forms an H-matroid for one of the
//    64 constraint families has a normalized unit-increasing rank table
//    satisfying the extension property.
Outcome criterion_forward() {
  return expect_clean("theorem-1.1-forward", {3, 0, 1});
}

// 3. Every normalized unit-increasing table on n=3 satisfying the extension
//    property for a constraint family rebuilds into a simplicial H-matroid
//    whose rank table equals the input entrywise.
Outcome criterion_backward() {
  return expect_clean("theorem-1.1-backward", {3, 0, 1});
}

// 4. Downward closure preserves maximal members and rank on 1000 seeded
//    random families at n=4; on n=3 the rank table depends only on the
//    maximal members, exhaustively.
Outcome criterion_closure_and_max() {
  auto sampled = expect_clean("claim-3.2", {4, 1000, 1});
  if (!sampled.pass) return sampled;
  return expect_clean("prop-3.1", {3, 0, 1});
}

// 5. For every simplicial complex on n=3: bases equal maximal members,
//    membership is rank-equals-cardinality, and every restriction stays
//    simplicial.
Outcome criterion_simplicial_lemmas() {
  for (const SetFamily& f : all_simplicial_complexes(3)) {
    if (!(bases(f) == maximal_members(f)))
      return failed("bases != maximal members for " + f.format());
    RankTable rho = rank_from_family(f);
    if (!(independence_family_of(rho) == f))
      return failed("membership/rank mismatch for " + f.format());
    for (subset_t a = 0; a <= f.ground().full(); ++a)
      if (!is_simplicial(restriction(f, a)).ok)
        return failed("non-simplicial restriction of " + f.format() + " to " +
                      f.ground().format_subset(a));
  }
  return ok();
}

// 6. Every H-matroid rank table on n=3 passes the quadruple submodularity
//    inequality over its own constraint family.
Outcome criterion_rank_submodularity() {
  return expect_clean("lemma-4.2", {3, 0, 1});
}

// 7. For every integer function on n=3 with f(empty)=0 and values in 0..3,
//    the polymatroid verdict agrees with H-submodularity for all 64
//    constraint families.
Outcome criterion_polymatroid_equivalence() {
  return expect_clean("prop-4.4", {3, 0, 1});
}

// 8. The H-supermatroid verdict on the boolean-lattice poset agrees with the
//    H-matroid verdict for every (family, H) pair on n=3.
Outcome criterion_boolean_correspondence() {
  return expect_clean("boolean-supermatroid-agreement", {3, 0, 1});
}

// 9. The negative fixtures produce their documented witnesses and exit codes.
Outcome criterion_negative_fixtures() {
  auto m = run_command(cli + " verify --family F --h H0 --input " + fixtures +
                       "/negated-m.json");
  if (m.exit_code != 1) return failed("negated-m exit " + std::to_string(m.exit_code));
  if (m.out.find("H={1,2,3}") == std::string::npos ||
      m.out.find("base {1}") == std::string::npos)
    return failed("negated-m witness missing: " + m.out);

  auto e = run_command(cli + " construct --rank rho --h H0 --input " + fixtures +
                       "/negated-e.json");
  if (e.exit_code != 1) return failed("negated-e exit " + std::to_string(e.exit_code));
  if (e.out.find("X={}, H={1,2}") == std::string::npos)
    return failed("negated-e witness missing: " + e.out);

  auto s = run_command(cli + " submodular --function f --h H1 --input " + fixtures +
                       "/non-monotone.json");
  if (s.exit_code != 1) return failed("non-monotone exit " + std::to_string(s.exit_code));
  if (s.out.find("X={1,2}, Y={1,2}, H1={1}, H2={1}") == std::string::npos)
    return failed("non-monotone witness missing: " + s.out);

  auto p = run_command(cli + " poset --poset P --family I --h H --input " + fixtures +
                       "/inaccessible-chain.json");
  if (p.exit_code != 1)
    return failed("inaccessible-chain exit " + std::to_string(p.exit_code));
  if (p.out.find("member b") == std::string::npos)
    return failed("inaccessible-chain witness missing: " + p.out);

  auto fixture_check = run_command(cli + " check --predicate fixture-negated-M --n 3");
  if (fixture_check.exit_code != 2)
    return failed("fixture-negated-M exit " + std::to_string(fixture_check.exit_code));
  return ok();
}

// 10. Equal seeds give byte-identical JSON reports from `check`.
Outcome criterion_determinism() {
  const std::vector<std::string> commands = {
      cli + " check --predicate claim-3.2 --n 4 --seed 7 --samples 200 --emit json",
      cli + " check --predicate prop-3.1 --n 4 --seed 9 --samples 100 --emit json",
      cli + " check --predicate fixture-negated-M --n 3 --emit json",
      cli + " check --predicate theorem-1.1-forward --n 3 --emit json",
  };
  for (const std::string& command : commands) {
    auto first = run_command(command);
    auto second = run_command(command);
    if (first.exit_code != second.exit_code)
      return failed("exit codes differ for: " + command);
    if (first.out != second.out) return failed("reports differ for: " + command);
    if (first.out.empty()) return failed("no output from: " + command);
  }
  return ok();
}

struct Criterion {
  int number;
  std::string label;
  std::function<Outcome()> run;
  double limit_seconds;  // 0 = no stated limit
};

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::fprintf(stderr, "usage: acceptance_tests <hmat-binary> <fixtures-dir>\n");
    return 64;
  }
  cli = argv[1];
  fixtures = argv[2];

  const std::vector<Criterion> criteria = {
      {1, "example reproduction", criterion_example_reproduction, 1.0},
      {2, "rank characterization, forward, exhaustive n=3", criterion_forward, 60.0},
      {3, "rank characterization, backward, exhaustive n=3", criterion_backward, 300.0},
      {4, "closure preserves max and rank", criterion_closure_and_max, 0.0},
      {5, "simplicial-complex lemmas, exhaustive n=3", criterion_simplicial_lemmas, 0.0},
      {6, "rank quadruple submodularity, exhaustive n=3", criterion_rank_submodularity,
       0.0},
      {7, "polymatroid equivalence, exhaustive n=3", criterion_polymatroid_equivalence,
       600.0},
      {8, "boolean-lattice correspondence, exhaustive n=3",
       criterion_boolean_correspondence, 0.0},
      {9, "negative fixtures", criterion_negative_fixtures, 0.0},
      {10, "deterministic check reports", criterion_determinism, 0.0},
  };

  int failures = 0;
  for (const Criterion& criterion : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome = criterion.run();
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (outcome.pass && criterion.limit_seconds > 0 && seconds > criterion.limit_seconds)
      outcome = failed("runtime " + std::to_string(seconds) + "s exceeds " +
                       std::to_string(criterion.limit_seconds) + "s");
    std::printf("criterion %2d (%s): %s (%.2f s)%s%s\n", criterion.number,
                criterion.label.c_str(), outcome.pass ? "PASS" : "FAIL", seconds,
                outcome.pass ? "" : " -- ", outcome.detail.c_str());
    std::fflush(stdout);
    if (!outcome.pass) ++failures;
  }
  return failures;
}

#include "hmat/io.hpp"

#include <fstream>
#include <sstream>

#include "test_support.hpp"

using namespace hmat;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  CHECK_MSG(static_cast<bool>(in), "missing fixture " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::string fixtures_dir = "fixtures";

void parse_example_fixture() {
  InstanceDocument doc = parse_document(slurp(fixtures_dir + "/example-3-1.json"));
  CHECK(doc.ground.size() == 3);
  CHECK(doc.families.size() == 4);
  CHECK(resolve_family(doc, "I1") == make_family(3, {{}, {2}, {1, 2}, {2, 3}}));
  CHECK(resolve_family(doc, "I3") ==
        make_family(3, {{}, {1}, {2}, {3}, {1, 2}, {2, 3}}));

  HSpec h = resolve_h_spec(doc, "H0");
  CHECK(h.members().size() == 2);

  const RankTable& rho = resolve_rank_table(doc, "rho");
  CHECK(rho.values() == (std::vector<std::int32_t>{0, 1, 1, 2, 1, 1, 2, 2}));

  CHECK_THROWS(resolve_family(doc, "missing"), ErrorKind::unresolved_name);
  CHECK_THROWS(resolve_h_spec(doc, "missing"), ErrorKind::unresolved_name);
  CHECK_THROWS(resolve_rank_table(doc, "missing"), ErrorKind::unresolved_name);
}

void parse_function_and_vectors() {
  InstanceDocument doc = parse_document(slurp(fixtures_dir + "/non-monotone.json"));
  const ValuedSetFunction& f = resolve_function(doc, "f");
  CHECK(f.value(0) == Rational(0));
  CHECK(f.value(make_subset({1})) == Rational(2));
  CHECK(f.value(make_subset({1, 2})) == Rational(1));

  const RationalVector& x = resolve_vector(doc, "x");
  CHECK(x.coord(0) == Rational(1) && x.coord(1) == Rational(0));
  CHECK(x.sum_over(make_subset({1, 2})) == Rational(1));
  CHECK_THROWS(resolve_function(doc, "missing"), ErrorKind::unresolved_name);
  CHECK_THROWS(resolve_vector(doc, "missing"), ErrorKind::unresolved_name);
}

void parse_posets() {
  InstanceDocument doc = parse_document(slurp(fixtures_dir + "/inaccessible-chain.json"));
  const auto& entry = resolve_poset(doc, "P");
  CHECK(entry.poset.size() == 3);
  CHECK(entry.poset.bottom() == 0);
  CHECK(entry.poset.leq(0, 2));  // transitive closure of the generators
  CHECK(entry.poset.height(2) == 2);
  CHECK(resolve_poset_subset(entry, "I").members().size() == 2);
  CHECK_THROWS(resolve_poset_subset(entry, "missing"), ErrorKind::unresolved_name);
  CHECK_THROWS(resolve_poset(doc, "missing"), ErrorKind::unresolved_name);
}

// Canonical printing is a fixed point: print(parse(print(parse(text)))) is
// byte-identical to print(parse(text)).
void round_trip_fixed_point() {
  for (const char* name : {"example-3-1.json", "negated-m.json", "negated-e.json",
                           "non-monotone.json", "inaccessible-chain.json",
                           "boolean-lattice-3.json"}) {
    InstanceDocument doc = parse_document(slurp(fixtures_dir + "/" + name));
    const std::string once = document_to_json(doc).dump(2);
    InstanceDocument again = parse_document(once);
    CHECK_MSG(document_to_json(again).dump(2) == once, name);
  }

  // A document exercising every section at once, with multi-character labels
  // and subsets listed out of canonical order.
  const char* everything = R"({
    "ground": ["left", "right"],
    "families": {
      "D": [["left", "right"], ["right"], ["left"], []],
      "H": [["left", "right"], []]
    },
    "h_specs": { "H": "H" },
    "rank_tables": { "r": [[["left","right"], 1], [[], 0], [["right"], 1], [["left"], 1]] },
    "functions": { "f": { "domain": "D",
      "values": [[[], "0"], [["left"], "1/2"], [["right"], "2/4"], [["left","right"], "1"]] } },
    "posets": { "P": { "elements": ["bot", "top"], "leq": [["bot", "top"]],
                       "subsets": { "all": ["top", "bot"] } } },
    "vectors": { "v": { "right": "-1/3" } }
  })";
  InstanceDocument doc = parse_document(everything);
  CHECK(resolve_family(doc, "D").size() == 4);
  CHECK(resolve_function(doc, "f").value(make_subset({1})) == Rational(1, 2));
  CHECK(resolve_vector(doc, "v").coord(0) == Rational(0));
  CHECK(resolve_vector(doc, "v").coord(1) == Rational(-1, 3));
  const std::string once = document_to_json(doc).dump(2);
  CHECK(document_to_json(parse_document(once)).dump(2) == once);
  CHECK(once.find("\"1/2\"") != std::string::npos);  // 2/4 canonicalized
}

void parse_errors() {
  CHECK_THROWS(parse_document("{"), ErrorKind::parse_error);
  CHECK_THROWS(parse_document("[]"), ErrorKind::parse_error);
  CHECK_THROWS(parse_document("{\"families\": {}}"), ErrorKind::parse_error);

  // Unknown label inside a subset.
  CHECK_THROWS(parse_document(R"({"ground": ["1"], "families": {"F": [["2"]]}})"),
               ErrorKind::parse_error);
  // Repeated label inside one subset.
  CHECK_THROWS(parse_document(R"({"ground": ["1"], "families": {"F": [["1","1"]]}})"),
               ErrorKind::parse_error);
  // Duplicate subset in a family.
  CHECK_THROWS(parse_document(R"({"ground": ["1"], "families": {"F": [["1"],["1"]]}})"),
               ErrorKind::parse_error);
  // Incomplete rank table.
  CHECK_THROWS(parse_document(R"({"ground": ["1"], "rank_tables": {"r": [[[],0]]}})"),
               ErrorKind::parse_error);
  // Negative rank value.
  CHECK_THROWS(
      parse_document(R"({"ground": ["1"], "rank_tables": {"r": [[[],0],[["1"],-1]]}})"),
      ErrorKind::parse_error);
  // h_spec referencing an unknown family.
  CHECK_THROWS(parse_document(R"({"ground": ["1"], "h_specs": {"H": "F"}})"),
               ErrorKind::unresolved_name);
  // h_spec family missing the full set.
  CHECK_THROWS(
      parse_document(
          R"({"ground": ["1"], "families": {"F": [[]]}, "h_specs": {"H": "F"}})"),
      ErrorKind::invalid_h_spec);
  // Function on a non-lattice domain.
  CHECK_THROWS(
      parse_document(
          R"({"ground": ["1","2"], "families": {"D": [[],["1"]]},
              "functions": {"f": {"domain": "D", "values": [[[],"0"],[["1"],"1"]]}}})"),
      ErrorKind::not_a_lattice);
  // Function value with a zero denominator.
  CHECK_THROWS(
      parse_document(
          R"({"ground": ["1"], "families": {"D": [[],["1"]]},
              "functions": {"f": {"domain": "D", "values": [[[],"0"],[["1"],"1/0"]]}}})"),
      ErrorKind::parse_error);
  // Poset with a cycle.
  CHECK_THROWS(
      parse_document(
          R"({"ground": ["1"], "posets": {"P": {"elements": ["a","b"],
              "leq": [["a","b"],["b","a"]]}}})"),
      ErrorKind::invalid_poset);
  // Poset without a minimum.
  CHECK_THROWS(parse_document(R"({"ground": ["1"], "posets": {"P": {"elements":
                                 ["a","b"], "leq": []}}})"),
               ErrorKind::invalid_poset);
  // Vector with an unknown label.
  CHECK_THROWS(parse_document(R"({"ground": ["1"], "vectors": {"x": {"2": "1"}}})"),
               ErrorKind::parse_error);
  // Ground-set cap.
  CHECK_THROWS(parse_document(R"({"ground": ["1","2","3"]})", 2),
               ErrorKind::budget_exceeded);
}

void redundant_poset_pairs_are_fine() {
  InstanceDocument doc = parse_document(
      R"({"ground": ["1"], "posets": {"P": {"elements": ["0","a","b"],
          "leq": [["0","a"],["a","b"],["0","b"]]}}})");
  const auto& entry = resolve_poset(doc, "P");
  CHECK(entry.poset.leq(0, 2) && entry.poset.covers(0, 1) && !entry.poset.covers(0, 2));
}

void report_json_shape() {
  VerificationReport report;
  report.command = "verify";
  report.argument("family", "I1");
  report.add(CheckRecord{"constructible", anchor::c, Verdict::pass, "", nullptr});
  report.add(CheckRecord{"axiom-m", anchor::m, Verdict::fail, "witness",
                         Json{{"H", Json::array()}}});
  report.ok = false;
  report.elapsed_ms = 12.5;

  Json j = report_to_json(report);
  CHECK(j["command"] == "verify");
  CHECK(j["arguments"]["family"] == "I1");
  CHECK(j["checks"].size() == 2);
  CHECK(j["checks"][0]["anchor"] == "(C)");
  CHECK(j["checks"][1]["verdict"] == "fail");
  CHECK(j["verdict"] == "fail");
  CHECK(!j.contains("elapsed_ms"));  // timing never serializes

  std::string text = report_to_text(report);
  CHECK(text.find("axiom-m (M): witness") != std::string::npos);
  CHECK(text.find("12.5 ms") != std::string::npos);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) fixtures_dir = argv[1];
  parse_example_fixture();
  parse_function_and_vectors();
  parse_posets();
  round_trip_fixed_point();
  parse_errors();
  redundant_poset_pairs_are_fine();
  report_json_shape();
  return test_summary("io_tests");
}

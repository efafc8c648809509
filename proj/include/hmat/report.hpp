#pragma once

#include <json.hpp>
#include <string>
#include <utility>
#include <vector>

namespace hmat {

using Json = nlohmann::json;  // object keys stay sorted, output is canonical

// The closed vocabulary of anchors carried by verification records.
namespace anchor {
inline constexpr const char* c = "(C)";
inline constexpr const char* i = "(I)";
inline constexpr const char* m = "(M)";
inline constexpr const char* e = "(E)";
inline constexpr const char* ui = "(UI)";
inline constexpr const char* s = "(S)";
inline constexpr const char* lemma_4_2 = "Lemma 4.2";
inline constexpr const char* accessibility = "accessibility";
inline constexpr const char* height_equality = "height-equality";
inline constexpr const char* rank_characterization = "rank-characterization";
inline constexpr const char* rank_depends_on_max = "rank-depends-on-max";
inline constexpr const char* simplicialization = "simplicialization";
inline constexpr const char* polymatroid_equivalence = "polymatroid-equivalence";
inline constexpr const char* polymatroid = "polymatroid";
inline constexpr const char* lattice = "lattice";
inline constexpr const char* p_of_f = "P(f)";
inline constexpr const char* b_of_f = "B(f)";
inline constexpr const char* correspondence = "correspondence";
}  // namespace anchor

enum class Verdict { pass, fail, skipped };

std::string to_string(Verdict v);

struct CheckRecord {
  std::string name;
  std::string anchor;
  Verdict verdict = Verdict::skipped;
  std::string witness_text;   // one line, empty when there is no witness
  Json witness = nullptr;     // structured form of the same witness
};

struct VerificationReport {
  std::string command;
  std::vector<std::pair<std::string, std::string>> arguments;
  std::vector<CheckRecord> checks;
  Json output = nullptr;  // command payload (families, tables), if any
  bool ok = false;
  double elapsed_ms = 0.0;  // shown in text only; JSON stays byte-stable

  void add(CheckRecord record) { checks.push_back(std::move(record)); }
  void argument(std::string key, std::string value) {
    arguments.emplace_back(std::move(key), std::move(value));
  }
};

Json report_to_json(const VerificationReport& report);
std::string report_to_text(const VerificationReport& report);

}  // namespace hmat

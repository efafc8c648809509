#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hmat/enumerate.hpp"
#include "hmat/hmatroid.hpp"
#include "hmat/io.hpp"
#include "hmat/poset.hpp"
#include "hmat/submodular.hpp"

using namespace hmat;

namespace {

struct Options {
  std::string emit = "text";
  std::string input;
  std::uint64_t seed = 1;
  std::uint64_t samples = 1000;
  int n = 3;

  std::string family;
  std::string h;
  std::string rank;
  std::string predicate;
  std::string function;
  std::string vector_name;
  std::string poset;
  std::string prop_check;
  std::string polyhedron = "submodular";
  bool list_predicates = false;
};

std::optional<int> env_max_n() {
  const char* raw = std::getenv("HMAT_MAX_N");
  if (raw == nullptr) return std::nullopt;
  try {
    return std::stoi(raw);
  } catch (...) {
    fail(ErrorKind::parse_error, std::string("invalid HMAT_MAX_N value '") + raw + "'");
  }
}

std::string read_input(const std::string& path) {
  std::ostringstream buffer;
  if (path.empty() || path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::parse_error, "cannot open input file '" + path + "'");
    buffer << in.rdbuf();
  }
  return buffer.str();
}

InstanceDocument load_document(const Options& opt) {
  return parse_document(read_input(opt.input), env_max_n());
}

void emit_report(const VerificationReport& report, const Options& opt) {
  if (opt.emit == "json")
    std::cout << report_to_json(report).dump(2) << "\n";
  else
    std::cout << report_to_text(report);
}

class Timer {
 public:
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// Record builders shared by the subcommands.

CheckRecord constructible_record(const GroundSet& g, const ConstructibleCheck& c) {
  CheckRecord r{"constructible", anchor::c, c.ok ? Verdict::pass : Verdict::fail, "",
                nullptr};
  if (!c.ok) {
    if (c.empty_family) {
      r.witness_text = "EmptyFamily";
      r.witness = Json{{"tag", "EmptyFamily"}};
    } else {
      r.witness_text = "no extreme points at " + g.format_subset(c.violator);
      r.witness = Json{{"member", labels_from_subset(g, c.violator)}};
    }
  }
  return r;
}

CheckRecord skipped(const char* name, const char* anchor_id) {
  return CheckRecord{name, anchor_id, Verdict::skipped, "", nullptr};
}

CheckRecord axiom_i_record(const GroundSet& g, const AxiomICheck& c) {
  CheckRecord r{"axiom-i", anchor::i, c.ok ? Verdict::pass : Verdict::fail, "", nullptr};
  if (!c.ok) {
    r.witness_text = "no member of rank size inside H=" + g.format_subset(c.h);
    r.witness = Json{{"H", labels_from_subset(g, c.h)}};
  }
  return r;
}

CheckRecord axiom_m_record(const GroundSet& g, const AxiomMCheck& c) {
  CheckRecord r{"axiom-m", anchor::m, c.ok ? Verdict::pass : Verdict::fail, "", nullptr};
  if (!c.ok) {
    r.witness_text = "H=" + g.format_subset(c.h) + ", base " + g.format_subset(c.base) +
                     " has the wrong cardinality";
    r.witness =
        Json{{"H", labels_from_subset(g, c.h)}, {"base", labels_from_subset(g, c.base)}};
  }
  return r;
}

CheckRecord unit_increase_record(const GroundSet& g, const UnitIncreaseCheck& c) {
  CheckRecord r{"normalized-unit-increasing", anchor::ui,
                c.ok ? Verdict::pass : Verdict::fail, "", nullptr};
  if (!c.ok) {
    if (c.normalization_failed) {
      r.witness_text = "value at {} is nonzero";
      r.witness = Json{{"tag", "NotNormalized"}};
    } else {
      r.witness_text = "unit step broken at X=" + g.format_subset(c.set) +
                       ", element " + g.label(c.element);
      r.witness = Json{{"X", labels_from_subset(g, c.set)}, {"element", g.label(c.element)}};
    }
  }
  return r;
}

CheckRecord extension_record(const GroundSet& g, const ExtensionCheck& c) {
  CheckRecord r{"extension-property", anchor::e, c.ok ? Verdict::pass : Verdict::fail,
                "", nullptr};
  if (!c.ok) {
    r.witness_text =
        "X=" + g.format_subset(c.set) + ", H=" + g.format_subset(c.h) + " cannot extend";
    r.witness = Json{{"X", labels_from_subset(g, c.set)}, {"H", labels_from_subset(g, c.h)}};
  }
  return r;
}

void add_matroid_records(VerificationReport& report, const GroundSet& g,
                         const HMatroidReport& matroid) {
  report.add(constructible_record(g, matroid.constructible));
  if (matroid.axiom_i)
    report.add(axiom_i_record(g, *matroid.axiom_i));
  else
    report.add(skipped("axiom-i", anchor::i));
  if (matroid.axiom_m)
    report.add(axiom_m_record(g, *matroid.axiom_m));
  else
    report.add(skipped("axiom-m", anchor::m));
}

int run_verify(const Options& opt) {
  Timer timer;
  InstanceDocument doc = load_document(opt);
  const SetFamily& family = resolve_family(doc, opt.family);
  HSpec h = resolve_h_spec(doc, opt.h);

  HMatroidReport matroid = is_h_matroid(family, h);
  VerificationReport report;
  report.command = "verify";
  report.argument("family", opt.family);
  report.argument("h", opt.h);
  add_matroid_records(report, family.ground(), matroid);
  report.ok = matroid.ok;
  report.elapsed_ms = timer.elapsed_ms();
  emit_report(report, opt);
  return report.ok ? 0 : 1;
}

int run_rank(const Options& opt) {
  Timer timer;
  InstanceDocument doc = load_document(opt);
  const SetFamily& family = resolve_family(doc, opt.family);
  RankTable rho = rank_from_family(family);  // rejects non-constructible input

  VerificationReport report;
  report.command = "rank";
  report.argument("family", opt.family);
  report.add(constructible_record(family.ground(), is_constructible(family)));
  Json table = Json::array();
  for (std::size_t s = 0; s < family.ground().subset_count(); ++s)
    table.push_back(Json::array(
        {labels_from_subset(family.ground(), static_cast<subset_t>(s)),
         rho[static_cast<subset_t>(s)]}));
  report.output = Json{{"family", opt.family}, {"table", table}};
  report.ok = true;
  report.elapsed_ms = timer.elapsed_ms();

  if (opt.emit == "json") {
    emit_report(report, opt);
  } else {
    for (std::size_t s = 0; s < family.ground().subset_count(); ++s)
      std::cout << family.ground().format_subset(static_cast<subset_t>(s)) << "\t"
                << rho[static_cast<subset_t>(s)] << "\n";
  }
  return 0;
}

int run_construct(const Options& opt) {
  Timer timer;
  InstanceDocument doc = load_document(opt);
  const RankTable& rho = resolve_rank_table(doc, opt.rank);
  HSpec h = resolve_h_spec(doc, opt.h);
  const GroundSet& g = rho.ground();

  CharacterizationRoundtrip roundtrip = characterization_roundtrip(rho, h);
  VerificationReport report;
  report.command = "construct";
  report.argument("rank", opt.rank);
  report.argument("h", opt.h);
  report.add(unit_increase_record(g, roundtrip.unit_increasing));
  if (roundtrip.extension)
    report.add(extension_record(g, *roundtrip.extension));
  else
    report.add(skipped("extension-property", anchor::e));

  if (roundtrip.independence) {
    add_matroid_records(report, g, is_h_matroid(*roundtrip.independence, h));

    CheckRecord recovered{"rank-recovered", anchor::rank_characterization,
                          roundtrip.rank_mismatch ? Verdict::fail : Verdict::pass, "",
                          nullptr};
    if (roundtrip.rank_mismatch) {
      RankTable rebuilt = rank_from_family(*roundtrip.independence);
      const subset_t at = *roundtrip.rank_mismatch;
      recovered.witness_text = "rank differs at " + g.format_subset(at) + ": table " +
                               std::to_string(rho[at]) + ", rebuilt family " +
                               std::to_string(rebuilt[at]);
      recovered.witness = Json{{"at", labels_from_subset(g, at)},
                               {"table", rho[at]},
                               {"rebuilt", rebuilt[at]}};
    }
    report.add(std::move(recovered));

    CheckRecord simplicial{"simplicial", anchor::rank_characterization,
                           roundtrip.simplicial->ok ? Verdict::pass : Verdict::fail, "",
                           nullptr};
    if (!roundtrip.simplicial->ok) {
      simplicial.witness_text =
          "member " + g.format_subset(roundtrip.simplicial->member) +
          " missing a one-element deletion";
      simplicial.witness =
          Json{{"member", labels_from_subset(g, roundtrip.simplicial->member)},
               {"element", g.label(roundtrip.simplicial->element)}};
    }
    report.add(std::move(simplicial));
    report.output = Json{{"independence_family", family_to_json(*roundtrip.independence)}};
  } else {
    report.add(skipped("constructible", anchor::c));
    report.add(skipped("axiom-i", anchor::i));
    report.add(skipped("axiom-m", anchor::m));
    report.add(skipped("rank-recovered", anchor::rank_characterization));
    report.add(skipped("simplicial", anchor::rank_characterization));
  }

  report.ok = roundtrip.ok;
  report.elapsed_ms = timer.elapsed_ms();
  emit_report(report, opt);
  if (opt.emit != "json" && roundtrip.independence)
    std::cout << "independence family: " << roundtrip.independence->format() << "\n";
  return report.ok ? 0 : 1;
}

int run_simplicialize(const Options& opt) {
  Timer timer;
  InstanceDocument doc = load_document(opt);
  const SetFamily& family = resolve_family(doc, opt.family);
  SetFamily closed = downward_closure(family);  // rejects the empty family

  VerificationReport report;
  report.command = "simplicialize";
  report.argument("family", opt.family);

  CheckRecord simplicial{"closure-simplicial", anchor::simplicialization,
                         is_simplicial(closed).ok ? Verdict::pass : Verdict::fail, "",
                         nullptr};
  report.add(std::move(simplicial));

  const bool max_same = maximal_members(family) == maximal_members(closed);
  CheckRecord max_record{"max-preserved", anchor::simplicialization,
                         max_same ? Verdict::pass : Verdict::fail, "", nullptr};
  report.add(std::move(max_record));

  if (is_constructible(family).ok) {
    const bool rank_same = rank_from_family(family) == rank_from_family(closed);
    report.add(CheckRecord{"rank-preserved", anchor::simplicialization,
                           rank_same ? Verdict::pass : Verdict::fail, "", nullptr});
  } else {
    CheckRecord r = skipped("rank-preserved", anchor::simplicialization);
    r.witness_text = "input family is not constructible; rank is undefined";
    report.add(std::move(r));
  }

  report.output = Json{{"closure", family_to_json(closed)}};
  report.ok = true;
  for (const CheckRecord& r : report.checks)
    if (r.verdict == Verdict::fail) report.ok = false;
  report.elapsed_ms = timer.elapsed_ms();

  if (opt.emit == "json") {
    emit_report(report, opt);
  } else {
    std::cout << "closure: " << closed.format() << "\n";
    emit_report(report, opt);
  }
  return report.ok ? 0 : 1;
}

int run_check(const Options& opt) {
  Timer timer;
  if (auto cap = env_max_n(); cap && opt.n > *cap)
    fail(ErrorKind::budget_exceeded,
         "requested n " + std::to_string(opt.n) + " exceeds the HMAT_MAX_N cap of " +
             std::to_string(*cap));

  const PredicateInfo& info = predicate_info(opt.predicate);
  EnumerationBudget budget{opt.n, opt.samples, opt.seed};
  std::optional<Counterexample> ce = find_counterexample(opt.predicate, budget);

  VerificationReport report;
  report.command = "check";
  report.argument("predicate", opt.predicate);
  report.argument("n", std::to_string(opt.n));
  report.argument("seed", std::to_string(opt.seed));
  report.argument("samples", std::to_string(opt.samples));

  CheckRecord record{info.id, info.anchor, ce ? Verdict::fail : Verdict::pass, "",
                     nullptr};
  if (ce) {
    std::string text = ce->summary;
    Json witness;
    witness["summary"] = ce->summary;
    for (const auto& [key, value] : ce->details) {
      text += "; " + key + "=" + value;
      witness[key] = value;
    }
    record.witness_text = std::move(text);
    record.witness = std::move(witness);
  } else {
    record.witness_text = "no counterexample";
  }
  report.add(std::move(record));
  report.ok = !ce;
  report.elapsed_ms = timer.elapsed_ms();
  emit_report(report, opt);
  if (!ce) return 0;
  return info.fixture ? 2 : 1;
}

int run_submodular(const Options& opt, bool has_h, bool has_prop, bool has_vector) {
  Timer timer;
  if (static_cast<int>(has_h) + static_cast<int>(has_prop) + static_cast<int>(has_vector) != 1)
    fail(ErrorKind::parse_error,
         "choose exactly one of --h, --prop-check, --vector for submodular");

  InstanceDocument doc = load_document(opt);
  const ValuedSetFunction& f = resolve_function(doc, opt.function);
  const GroundSet& g = f.ground();

  VerificationReport report;
  report.command = "submodular";
  report.argument("function", opt.function);
  report.add(CheckRecord{"domain-lattice", anchor::lattice, Verdict::pass, "", nullptr});

  if (has_h) {
    report.argument("h", opt.h);
    HSpec h = resolve_h_spec(doc, opt.h);
    HSubmodularCheck check = is_h_submodular(f, h);
    CheckRecord record{"h-submodular", anchor::s,
                       check.ok ? Verdict::pass : Verdict::fail, "", nullptr};
    if (!check.ok) {
      record.witness_text = "X=" + g.format_subset(check.x) + ", Y=" +
                            g.format_subset(check.y) + ", H1=" +
                            g.format_subset(check.h1) + ", H2=" +
                            g.format_subset(check.h2) + ", violation " +
                            format_rational(check.violation);
      record.witness = Json{{"X", labels_from_subset(g, check.x)},
                            {"Y", labels_from_subset(g, check.y)},
                            {"H1", labels_from_subset(g, check.h1)},
                            {"H2", labels_from_subset(g, check.h2)},
                            {"violation", format_rational(check.violation)}};
    }
    report.add(std::move(record));
    report.ok = check.ok;
  } else if (has_prop) {
    report.argument("prop-check", opt.prop_check);
    PropCheckMode mode = opt.prop_check == "exhaustive" ? PropCheckMode::exhaustive
                                                        : PropCheckMode::witness;
    PolymatroidEquivalenceReport eq = polymatroid_equivalence_check(f, mode);

    CheckRecord poly{"polymatroid", anchor::polymatroid,
                     eq.polymatroid.ok ? Verdict::pass : Verdict::fail, "", nullptr};
    if (!eq.polymatroid.ok) {
      poly.witness_text = "condition (" + std::to_string(eq.polymatroid.condition) +
                          ") fails at X=" + g.format_subset(eq.polymatroid.x) +
                          ", Y=" + g.format_subset(eq.polymatroid.y);
      poly.witness = Json{{"condition", eq.polymatroid.condition},
                          {"X", labels_from_subset(g, eq.polymatroid.x)},
                          {"Y", labels_from_subset(g, eq.polymatroid.y)}};
    }
    report.add(std::move(poly));

    CheckRecord conjunction{"h-submodular-conjunction", anchor::s,
                            eq.all_h_pass ? Verdict::pass : Verdict::fail, "", nullptr};
    if (!eq.all_h_pass && eq.failing_h) {
      conjunction.witness_text = "fails for H=" + eq.failing_h->format();
      conjunction.witness = Json{{"H", family_to_json(*eq.failing_h)}};
      if (eq.s_witness)
        conjunction.witness["quadruple"] =
            Json{{"X", labels_from_subset(g, eq.s_witness->x)},
                 {"Y", labels_from_subset(g, eq.s_witness->y)},
                 {"H1", labels_from_subset(g, eq.s_witness->h1)},
                 {"H2", labels_from_subset(g, eq.s_witness->h2)}};
    }
    report.add(std::move(conjunction));

    report.add(CheckRecord{"equivalence", anchor::polymatroid_equivalence,
                           eq.equivalent ? Verdict::pass : Verdict::fail, "", nullptr});
    report.ok = eq.equivalent;
  } else {
    report.argument("vector", opt.vector_name);
    report.argument("polyhedron", opt.polyhedron);
    const RationalVector& x = resolve_vector(doc, opt.vector_name);
    if (opt.polyhedron == "base") {
      BasePolyhedronCheck check = in_base_polyhedron(x, f);
      CheckRecord membership{"p-of-f-membership", anchor::p_of_f,
                             check.polyhedron.ok ? Verdict::pass : Verdict::fail, "",
                             nullptr};
      if (!check.polyhedron.ok) {
        membership.witness_text =
            "x(" + g.format_subset(check.polyhedron.set) + ") exceeds f by " +
            format_rational(check.polyhedron.excess);
        membership.witness = Json{{"X", labels_from_subset(g, check.polyhedron.set)},
                                  {"excess", format_rational(check.polyhedron.excess)}};
      }
      report.add(std::move(membership));
      CheckRecord total{"base-total", anchor::b_of_f,
                        check.total_matches ? Verdict::pass : Verdict::fail, "", nullptr};
      if (!check.total_matches) {
        total.witness_text = "x(E)=" + format_rational(check.total) +
                             " but f(E)=" + format_rational(check.required);
        total.witness = Json{{"total", format_rational(check.total)},
                             {"required", format_rational(check.required)}};
      }
      report.add(std::move(total));
      report.ok = check.ok;
    } else {
      PolyhedronCheck check = in_submodular_polyhedron(x, f);
      CheckRecord membership{"p-of-f-membership", anchor::p_of_f,
                             check.ok ? Verdict::pass : Verdict::fail, "", nullptr};
      if (!check.ok) {
        membership.witness_text = "x(" + g.format_subset(check.set) + ") exceeds f by " +
                                  format_rational(check.excess);
        membership.witness = Json{{"X", labels_from_subset(g, check.set)},
                                  {"excess", format_rational(check.excess)}};
      }
      report.add(std::move(membership));
      report.ok = check.ok;
    }
  }

  report.elapsed_ms = timer.elapsed_ms();
  emit_report(report, opt);
  return report.ok ? 0 : 1;
}

int run_poset(const Options& opt) {
  Timer timer;
  InstanceDocument doc = load_document(opt);
  const InstanceDocument::PosetEntry& entry = resolve_poset(doc, opt.poset);
  const PosetSubset& family = resolve_poset_subset(entry, opt.family);
  const PosetSubset& h = resolve_poset_subset(entry, opt.h);

  SupermatroidReport result = is_h_supermatroid(entry.poset, family, h);

  VerificationReport report;
  report.command = "poset";
  report.argument("poset", opt.poset);
  report.argument("family", opt.family);
  report.argument("h", opt.h);

  CheckRecord accessible{"accessible", anchor::accessibility,
                         !result.empty_family && result.accessible.ok ? Verdict::pass
                                                                      : Verdict::fail,
                         "", nullptr};
  if (result.empty_family) {
    accessible.witness_text = "EmptyFamily: the family contains no minimum";
    accessible.witness = Json{{"tag", "EmptyFamily"}};
  } else if (!result.accessible.ok) {
    accessible.witness_text =
        "member " + entry.poset.name(result.accessible.violator) +
        " covers no member of the family";
    accessible.witness = Json{{"member", entry.poset.name(result.accessible.violator)}};
  }
  report.add(std::move(accessible));

  if (result.heights) {
    CheckRecord heights{"height-equality", anchor::height_equality,
                        result.heights->ok ? Verdict::pass : Verdict::fail, "", nullptr};
    if (!result.heights->ok) {
      heights.witness_text =
          "below " + entry.poset.name(result.heights->at) + ": " +
          entry.poset.name(result.heights->first) + " has height " +
          std::to_string(entry.poset.height(result.heights->first)) + ", " +
          entry.poset.name(result.heights->second) + " has height " +
          std::to_string(entry.poset.height(result.heights->second));
      heights.witness = Json{{"a", entry.poset.name(result.heights->at)},
                             {"first", entry.poset.name(result.heights->first)},
                             {"second", entry.poset.name(result.heights->second)}};
    }
    report.add(std::move(heights));
  } else {
    report.add(skipped("height-equality", anchor::height_equality));
  }

  report.ok = result.ok;
  report.elapsed_ms = timer.elapsed_ms();
  emit_report(report, opt);
  return report.ok ? 0 : 1;
}

int run_list_predicates() {
  for (const PredicateInfo& info : registered_predicates())
    std::cout << info.id << (info.fixture ? " [fixture]" : "") << "  " << info.description
              << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"H-matroid verification toolkit"};
  app.require_subcommand(1);
  app.set_help_flag("--help", "print help");  // --h stays free for constraint families

  Options opt;
  app.add_option("--emit", opt.emit, "output format")
      ->check(CLI::IsMember({"text", "json", "table"}))
      ->capture_default_str();
  app.add_option("--input", opt.input, "input document (default: standard input)");
  app.add_option("--seed", opt.seed, "seed for sampled sweeps")->capture_default_str();
  app.add_option("--samples", opt.samples, "sample count for sampled sweeps")
      ->capture_default_str();
  app.add_option("--n", opt.n, "ground-set size for check sweeps")->capture_default_str();

  auto add_subcommand = [&](const char* name, const char* description) {
    CLI::App* sub = app.add_subcommand(name, description);
    sub->set_help_flag("--help", "print help");
    sub->fallthrough();
    return sub;
  };

  CLI::App* verify = add_subcommand("verify", "check the H-matroid axioms");
  verify->add_option("--family", opt.family)->required();
  verify->add_option("--h", opt.h)->required();

  CLI::App* rank = add_subcommand("rank", "print a family's rank table");
  rank->add_option("--family", opt.family)->required();

  CLI::App* construct =
      add_subcommand("construct", "rebuild an independence family from a rank table");
  construct->add_option("--rank", opt.rank)->required();
  construct->add_option("--h", opt.h)->required();

  CLI::App* simplicialize =
      add_subcommand("simplicialize", "downward closure with preservation checks");
  simplicialize->add_option("--family", opt.family)->required();

  CLI::App* check = add_subcommand("check", "sweep a registered predicate");
  check->add_option("--predicate", opt.predicate);
  check->add_flag("--list", opt.list_predicates, "list registered predicates");

  CLI::App* submodular =
      add_subcommand("submodular", "H-submodularity, polymatroid and polyhedron checks");
  submodular->add_option("--function", opt.function)->required();
  auto* h_opt = submodular->add_option("--h", opt.h);
  auto* prop_opt = submodular->add_option("--prop-check", opt.prop_check)
                       ->check(CLI::IsMember({"exhaustive", "witness"}));
  auto* vec_opt = submodular->add_option("--vector", opt.vector_name);
  submodular->add_option("--polyhedron", opt.polyhedron)
      ->check(CLI::IsMember({"submodular", "base"}))
      ->capture_default_str();

  CLI::App* poset = add_subcommand("poset", "H-supermatroid check on a finite poset");
  poset->add_option("--poset", opt.poset)->required();
  poset->add_option("--family", opt.family)->required();
  poset->add_option("--h", opt.h)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 3;
  }

  try {
    if (verify->parsed()) return run_verify(opt);
    if (rank->parsed()) return run_rank(opt);
    if (construct->parsed()) return run_construct(opt);
    if (simplicialize->parsed()) return run_simplicialize(opt);
    if (check->parsed()) {
      if (opt.list_predicates) return run_list_predicates();
      if (opt.predicate.empty())
        fail(ErrorKind::parse_error, "check requires --predicate or --list");
      return run_check(opt);
    }
    if (submodular->parsed())
      return run_submodular(opt, h_opt->count() > 0, prop_opt->count() > 0,
                            vec_opt->count() > 0);
    if (poset->parsed()) return run_poset(opt);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 3;
}

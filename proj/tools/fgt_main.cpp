// fgt — a finite group theory toolkit: word and law checking, equation
// solving, closedness audits, monolith and retraction machinery, plus the
// consolidated verify-paper suite.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "fgt/catalog.hpp"
#include "fgt/equations.hpp"
#include "fgt/group_ops.hpp"
#include "fgt/law.hpp"
#include "fgt/report.hpp"
#include "fgt/retracts.hpp"
#include "fgt/structure.hpp"
#include "fgt/verify_paper.hpp"

namespace {

using fgt::Check;
using fgt::FiniteGroup;
using fgt::Report;
using fgt::Subgroup;
using json = nlohmann::ordered_json;

struct GlobalOptions {
  std::string format = "text";
  int threads = 1;
  std::uint64_t budget = 100'000'000;
  std::string catalog_file;
  bool timings = false;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const fgt::Catalog* load_catalog(const GlobalOptions& opts, fgt::Catalog& storage) {
  if (opts.catalog_file.empty()) return &fgt::default_catalog();
  std::ifstream in(opts.catalog_file);
  if (!in) throw UsageError("cannot open catalog file " + opts.catalog_file);
  std::stringstream buf;
  buf << in.rdbuf();
  storage = fgt::parse_catalog(buf.str());
  return &storage;
}

FiniteGroup resolve(const std::string& ref, const fgt::Catalog* catalog) {
  try {
    return fgt::resolve_group_ref(ref, catalog);
  } catch (const std::exception& e) {
    throw UsageError("cannot resolve group '" + ref + "': " + e.what());
  }
}

Subgroup resolve_subgroup(const FiniteGroup& g, const std::string& ref,
                          const fgt::Catalog* catalog) {
  FiniteGroup h = resolve(ref, catalog);
  try {
    return fgt::embed_as_subgroup(g, h);
  } catch (const std::exception& e) {
    throw UsageError("'" + ref + "' does not embed as a subgroup (padded by fixed points): " +
                     e.what());
  }
}

int emit(const Report& report, const GlobalOptions& opts) {
  if (opts.format == "json")
    std::cout << report.to_json_text(opts.timings);
  else
    std::cout << report.to_text(opts.timings);
  return report.all_pass() ? 0 : 1;
}

json subgroup_json(const Subgroup& s) {
  json j;
  j["order"] = s.order();
  json gens = json::array();
  for (auto i : s.generating_indices()) gens.push_back(s.parent().element(i).cycle_string());
  j["generators"] = gens;
  return j;
}

int cmd_analyze(const std::string& ref, const GlobalOptions& opts, const fgt::Catalog* catalog) {
  FiniteGroup g = resolve(ref, catalog);
  Report report;
  report.command = "analyze";
  report.options["group"] = ref;

  Check c = Check::passing("analyze " + ref);
  c.details["order"] = g.order();
  c.details["degree"] = g.degree();
  c.details["abelian"] = g.is_abelian();
  c.details["nilpotent"] = fgt::is_nilpotent(g);
  c.details["exponent"] = g.exponent();

  auto normals = fgt::normal_subgroups(g);
  json norm = json::array();
  for (const auto& n : normals) norm.push_back(n.order());
  c.details["normal_subgroup_orders"] = norm;

  fgt::MonolithReport mono = fgt::monolith(g);
  c.details["monolithic"] = mono.is_monolithic;
  c.details["monolith"] = subgroup_json(mono.monolith);
  c.details["monolith_abelian"] = mono.monolith_abelian;

  json sylows = json::object();
  for (auto [p, e] : fgt::factorize(static_cast<long long>(g.order())))
    sylows["p=" + std::to_string(p)] = subgroup_json(fgt::sylow_subgroup(g, p));
  c.details["sylow_subgroups"] = sylows;

  report.checks.push_back(std::move(c));
  return emit(report, opts);
}

int cmd_law_check(const std::string& group_ref, const std::string& law_text,
                  const GlobalOptions& opts, const fgt::Catalog* catalog) {
  FiniteGroup g = resolve(group_ref, catalog);
  fgt::Law law;
  try {
    law = fgt::parse_law(law_text);
  } catch (const fgt::ParseError& e) {
    throw UsageError("law parse error at position " + std::to_string(e.position()) + ": " +
                     e.what());
  }
  fgt::LawCheckResult r = fgt::holds_law(g, law, opts.budget);

  Report report;
  report.command = "law";
  report.options["group"] = group_ref;
  report.options["law"] = law.display();
  report.options["budget"] = opts.budget;
  Check c;
  c.name = "law holds in " + group_ref;
  c.pass = r.holds();
  c.details["status"] = r.status == fgt::LawCheckResult::Status::Holds     ? "holds"
                        : r.status == fgt::LawCheckResult::Status::Fails   ? "fails"
                                                                           : "exhausted";
  c.details["assignments"] = r.assignments_total;
  c.details["evaluations"] = r.evaluations;
  if (!r.counterexample.empty()) {
    json w;
    for (const auto& [v, p] : r.counterexample) w[v] = p.cycle_string();
    c.details["counterexample"] = w;
  }
  report.checks.push_back(std::move(c));
  return emit(report, opts);
}

int cmd_solve(const std::string& group_ref, const std::string& system_text,
              const GlobalOptions& opts, const fgt::Catalog* catalog) {
  FiniteGroup g = resolve(group_ref, catalog);
  fgt::EquationSystem sys;
  try {
    sys = fgt::EquationSystem::parse(system_text, g);
  } catch (const fgt::ParseError& e) {
    throw UsageError("system parse error at position " + std::to_string(e.position()) + ": " +
                     e.what());
  }
  fgt::SolveOutcome out = fgt::solve(sys, g, opts.budget);

  Report report;
  report.command = "solve";
  report.options["group"] = group_ref;
  report.options["system"] = sys.display();
  report.options["budget"] = opts.budget;
  Check c;
  c.name = "solvable in " + group_ref;
  c.pass = out.solved();
  c.details["outcome"] = out.kind == fgt::SolveOutcome::Kind::Solution     ? "solution"
                         : out.kind == fgt::SolveOutcome::Kind::NoSolution ? "no-solution"
                                                                           : "exhausted";
  c.details["evaluations"] = out.evaluations;
  if (out.solved()) {
    json a;
    for (const auto& [v, p] : out.assignment) a[v] = p.cycle_string();
    c.details["solution"] = a;
  }
  report.checks.push_back(std::move(c));
  return emit(report, opts);
}

int cmd_closedness(const std::string& group_ref, const std::string& sub_ref, int max_len,
                   int max_vars, const std::vector<std::string>& systems,
                   const GlobalOptions& opts, const fgt::Catalog* catalog) {
  FiniteGroup g = resolve(group_ref, catalog);
  Subgroup h = resolve_subgroup(g, sub_ref, catalog);

  Report report;
  report.command = "closedness";
  report.options["group"] = group_ref;
  report.options["subgroup"] = sub_ref;
  report.options["max_word_length"] = max_len;
  report.options["max_variables"] = max_vars;
  report.options["budget"] = opts.budget;

  fgt::VerbalAudit audit = fgt::is_verbally_closed(g, h, max_len, max_vars, opts.budget);
  Check c;
  c.name = "verbally closed (bounded audit)";
  c.pass = audit.verbally_closed && !audit.exhausted;
  c.details["exhausted"] = audit.exhausted;
  c.details["words_checked"] = audit.words_checked;
  c.details["evaluations"] = audit.evaluations;
  if (audit.witness_word) {
    c.details["witness_equation"] =
        audit.witness_word->to_string() + " = " + audit.witness_target->cycle_string();
  }
  report.checks.push_back(std::move(c));

  if (!systems.empty()) {
    std::vector<fgt::EquationSystem> parsed;
    for (const auto& text : systems) {
      try {
        parsed.push_back(fgt::EquationSystem::parse(text, h.as_group()));
      } catch (const fgt::ParseError& e) {
        throw UsageError("system parse error: " + std::string(e.what()));
      }
    }
    fgt::AlgebraicAudit alg = fgt::is_algebraically_closed_sample(g, h, parsed, opts.budget);
    Check ac;
    ac.name = "algebraically closed on the sampled systems";
    ac.pass = alg.closed && !alg.exhausted;
    ac.details["systems_checked"] = alg.systems_checked;
    ac.details["exhausted"] = alg.exhausted;
    if (alg.violating_index) {
      ac.details["violating_system"] = alg.violating_system;
      json sol;
      for (const auto& [v, p] : alg.g_solution) sol[v] = p.cycle_string();
      ac.details["solution_in_g"] = sol;
    }
    report.checks.push_back(std::move(ac));
  }
  return emit(report, opts);
}

int cmd_retract(const std::string& group_ref, const std::string& sub_ref,
                const std::string& method, const GlobalOptions& opts,
                const fgt::Catalog* catalog) {
  FiniteGroup g = resolve(group_ref, catalog);
  Subgroup h = resolve_subgroup(g, sub_ref, catalog);

  Report report;
  report.command = "retract";
  report.options["group"] = group_ref;
  report.options["subgroup"] = sub_ref;
  report.options["method"] = method;

  if (method == "lemma" || method == "both") {
    Check c;
    c.name = "lemma retraction";
    try {
      fgt::LemmaOutcome out = fgt::find_retraction_lemma(g, h);
      c.pass = out.certificate.has_value();
      if (out.certificate) {
        c.details["kernel_order"] = out.certificate->kernel.order();
        c.details["kernel"] = subgroup_json(out.certificate->kernel);
      } else {
        json cands = json::array();
        for (const auto& cand : out.candidates)
          cands.push_back({{"kernel_order", cand.kernel_order},
                           {"quotient_order", cand.quotient_order}});
        c.details["maximal_candidates"] = cands;
      }
    } catch (const std::invalid_argument& e) {
      c.pass = false;
      c.details["error"] = e.what();
    }
    report.checks.push_back(std::move(c));
  }
  if (method == "brute" || method == "both") {
    Check c;
    c.name = "brute-force retraction";
    fgt::BruteOutcome out = fgt::find_retraction_brute(g, h, opts.budget);
    c.pass = out.status == fgt::BruteOutcome::Status::Found;
    c.details["status"] = out.status == fgt::BruteOutcome::Status::Found    ? "found"
                          : out.status == fgt::BruteOutcome::Status::Absent ? "absent"
                                                                            : "exhausted";
    if (out.certificate) c.details["kernel_order"] = out.certificate->kernel.order();
    report.checks.push_back(std::move(c));
  }
  return emit(report, opts);
}

int cmd_variety(const std::string& group_ref, const std::string& gen_ref, int k_max,
                const std::string& laws_choice, const GlobalOptions& opts,
                const fgt::Catalog* catalog) {
  FiniteGroup g = resolve(group_ref, catalog);
  FiniteGroup h = resolve(gen_ref, catalog);

  fgt::LawSet law_db;
  if (laws_choice == "s4") {
    law_db = fgt::s4_laws();
  } else if (laws_choice == "d") {
    law_db = fgt::dihedral8_variety_laws();
  } else if (laws_choice == "auto") {
    if (fgt::are_isomorphic(h, fgt::builtin("S(4)")))
      law_db = fgt::s4_laws();
    else if (fgt::are_isomorphic(h, fgt::builtin("Dih(4)")) ||
             fgt::are_isomorphic(h, fgt::builtin("Q8")))
      law_db = fgt::dihedral8_variety_laws();
  }

  fgt::VarietyOptions vopts;
  vopts.mono_step_budget = opts.budget;
  fgt::VarietyCertificate cert = fgt::variety_membership(g, h, k_max, law_db, vopts);

  Report report;
  report.command = "variety";
  report.options["group"] = group_ref;
  report.options["generator"] = gen_ref;
  report.options["k_max"] = k_max;
  report.options["laws"] = law_db.name.empty() ? "none" : law_db.name;
  Check c;
  c.name = group_ref + " in var " + gen_ref;
  c.pass = cert.verdict == fgt::VarietyCertificate::Verdict::Member;
  c.details["verdict"] = cert.verdict == fgt::VarietyCertificate::Verdict::Member ? "member"
                         : cert.verdict == fgt::VarietyCertificate::Verdict::NonMember
                             ? "non-member"
                             : "unknown";
  if (cert.verdict == fgt::VarietyCertificate::Verdict::Member) {
    c.details["k"] = cert.k;
    c.details["section_order"] = cert.section_s->order();
    c.details["section_kernel_order"] = cert.section_t->order();
  }
  if (cert.failing_law) {
    c.details["failing_law"] = cert.failing_law->display();
    json w;
    for (const auto& [v, p] : cert.law_witness) w[v] = p.cycle_string();
    c.details["witness"] = w;
  }
  if (!cert.notes.empty()) c.details["notes"] = cert.notes;
  report.checks.push_back(std::move(c));
  return emit(report, opts);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fgt — finite group theory toolkit"};
  app.require_subcommand(1);

  GlobalOptions opts;
  app.add_option("--format", opts.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--threads", opts.threads, "Worker thread cap")->check(CLI::PositiveNumber);
  app.add_option("--budget", opts.budget, "Evaluation/search budget");
  app.add_option("--catalog", opts.catalog_file, "Catalog file with named groups");
  app.add_flag("--timings", opts.timings, "Include wall-clock timings in reports");

  std::string group_ref, sub_ref, law_text, system_text, gen_ref;
  int max_len = 4, max_vars = 2, k_max = 2, star_power = 1;
  std::string method = "both", laws_choice = "auto";
  std::vector<std::string> sample_systems;

  auto* analyze = app.add_subcommand("analyze", "Structural summary of a group");
  analyze->add_option("group", group_ref)->required();

  auto* law = app.add_subcommand("law", "Law (identity) utilities");
  law->require_subcommand(1);
  auto* law_check = law->add_subcommand("check", "Check a law on a group");
  law_check->add_option("group", group_ref)->required();
  law_check->add_option("law", law_text, "e.g. \"[[x,y]^3,y^3,y^2] = 1\"")->required();

  auto* solve_cmd = app.add_subcommand("solve", "Solve an equation system over a group");
  solve_cmd->add_option("group", group_ref)->required();
  solve_cmd->add_option("system", system_text, "e.g. \"x^2 = <(1 2 3)>\"")->required();

  auto* closed = app.add_subcommand("closedness", "Verbal closedness audit for H <= G");
  closed->add_option("group", group_ref)->required();
  closed->add_option("subgroup", sub_ref)->required();
  closed->add_option("--max-len", max_len, "Maximum reduced word length");
  closed->add_option("--max-vars", max_vars, "Maximum number of variables");
  closed->add_option("--system", sample_systems,
                     "Equation system (repeatable) for the algebraic-closedness sample");

  auto* retract = app.add_subcommand("retract", "Find a retraction of G onto H");
  retract->add_option("group", group_ref)->required();
  retract->add_option("subgroup", sub_ref)->required();
  retract->add_option("--method", method)->check(CLI::IsMember({"lemma", "brute", "both"}));

  auto* variety = app.add_subcommand("variety", "Bounded variety membership: G in var H");
  variety->add_option("group", group_ref)->required();
  variety->add_option("generator", gen_ref)->required();
  variety->add_option("--kmax", k_max, "Largest direct power of H to search");
  variety->add_option("--laws", laws_choice)->check(CLI::IsMember({"auto", "s4", "d", "none"}));

  auto* vp = app.add_subcommand("verify-paper", "Run the consolidated verification suite");
  vp->add_option("--star-power", star_power,
                 "2 adds the extended S4^2 classification sweep")
      ->check(CLI::Range(1, 2));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    fgt::Catalog storage;
    const fgt::Catalog* catalog = load_catalog(opts, storage);

    if (*analyze) return cmd_analyze(group_ref, opts, catalog);
    if (*law_check) return cmd_law_check(group_ref, law_text, opts, catalog);
    if (*solve_cmd) return cmd_solve(group_ref, system_text, opts, catalog);
    if (*closed)
      return cmd_closedness(group_ref, sub_ref, max_len, max_vars, sample_systems, opts, catalog);
    if (*retract) return cmd_retract(group_ref, sub_ref, method, opts, catalog);
    if (*variety) return cmd_variety(group_ref, gen_ref, k_max, laws_choice, opts, catalog);
    if (*vp) {
      fgt::VerifyPaperOptions vp_opts;
      vp_opts.star_power = star_power;
      vp_opts.threads = opts.threads;
      Report report = fgt::verify_paper(vp_opts);
      return emit(report, opts);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const fgt::ParseError& e) {
    std::cerr << "parse error at position " << e.position() << ": " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

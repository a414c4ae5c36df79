#include "cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "urysohn/axiom_harness.hpp"
#include "urysohn/distance_monoid.hpp"
#include "urysohn/dms.hpp"
#include "urysohn/errors.hpp"
#include "urysohn/independence.hpp"
#include "urysohn/random_space.hpp"
#include "urysohn/space.hpp"

namespace urysohn::cli {
namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw StructuralError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw StructuralError("cannot write '" + path + "'");
  file << text;
}

const char* boolstr(bool b) { return b ? "true" : "false"; }

std::string join_witness(const std::vector<std::string>& w) {
  std::string s;
  for (const auto& x : w) {
    if (!s.empty()) s += ' ';
    s += x;
  }
  return s;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Distance monoids, extended metric spaces and independence relations"};
  app.name("urysohn");
  app.require_subcommand(1);

  std::string monoid_text;
  std::string rel_text;
  std::string out_path;
  std::uint64_t seed = 0;

  // check-monoid
  std::size_t bound = 20;
  auto* check_monoid = app.add_subcommand("check-monoid", "Check the distance-monoid axioms");
  check_monoid->add_option("--monoid", monoid_text, "Monoid designator")->required();
  check_monoid->add_option("--bound", bound, "Sample bound for infinite carriers")
      ->capture_default_str();

  // sauer
  std::string set_text;
  auto* sauer = app.add_subcommand("sauer", "Is the truncated sum on a distance set associative?");
  sauer->add_option("--set", set_text, "Ascending distances, e.g. 0,1,2,3,5")->required();

  // gen
  std::size_t points = 0;
  RandomSpaceParams params;
  auto* gen = app.add_subcommand("gen", "Sample a random valid space");
  gen->add_option("--monoid", monoid_text)->required();
  gen->add_option("--points", points)->required();
  gen->add_option("--seed", seed)->required();
  gen->add_option("--components", params.max_components, "Largest component count")
      ->capture_default_str();
  gen->add_option("--max-dist", params.max_finite, "Largest finite distance")
      ->capture_default_str();
  gen->add_option("--denominator", params.denominator, "Grid spacing 1/q for q-star")
      ->capture_default_str();
  gen->add_option("-o,--output", out_path);

  // validate
  std::string file_path;
  auto* validate = app.add_subcommand("validate", "Check the metric axioms of a .dms file");
  validate->add_option("file", file_path)->required();

  // amalgamate
  std::string left_path, right_path, common_text;
  auto* amalgamate = app.add_subcommand("amalgamate", "Free amalgamation of two spaces");
  amalgamate->add_option("--left", left_path)->required();
  amalgamate->add_option("--right", right_path)->required();
  amalgamate->add_option("--common", common_text)->required();
  amalgamate->add_option("-o,--output", out_path);

  // indep
  std::string space_path, a_text, b_text, c_text, bhat_text;
  auto* indep_cmd = app.add_subcommand("indep", "Evaluate a relation on a configuration");
  indep_cmd->add_option("--rel", rel_text)->required();
  indep_cmd->add_option("--space", space_path)->required();
  indep_cmd->add_option("--A", a_text)->required();
  indep_cmd->add_option("--B", b_text)->required();
  indep_cmd->add_option("--C", c_text)->required();

  // local-character
  auto* local = app.add_subcommand("local-character", "Small base witnessing local character");
  local->add_option("--rel", rel_text)->required();
  local->add_option("--space", space_path)->required();
  local->add_option("--A", a_text)->required();
  local->add_option("--B", b_text)->required();

  // extend
  auto* extend = app.add_subcommand("extend", "Extension witness for infty-independence");
  extend->add_option("--space", space_path)->required();
  extend->add_option("--A", a_text)->required();
  extend->add_option("--B", b_text)->required();
  extend->add_option("--C", c_text)->required();
  extend->add_option("--bhat", bhat_text)->required();
  extend->add_option("-o,--output", out_path);

  // axioms
  std::size_t trials = 1000, size = 12;
  unsigned threads = 1;
  std::vector<std::string> only_axioms;
  auto* axioms = app.add_subcommand("axioms", "Property sweep of the nine axioms");
  axioms->add_option("--rel", rel_text)->required();
  axioms->add_option("--monoid", monoid_text)->required();
  axioms->add_option("--trials", trials)->capture_default_str();
  axioms->add_option("--size", size)->capture_default_str();
  axioms->add_option("--seed", seed)->required();
  axioms->add_option("--axiom", only_axioms, "Restrict to these axioms (id or name)");
  axioms->add_option("--threads", threads)->capture_default_str();

  // replay
  std::string axiom_text;
  std::uint64_t trial_seed_value = 0;
  auto* replay = app.add_subcommand("replay", "Re-run a single trial from its reported seed");
  replay->add_option("--rel", rel_text)->required();
  replay->add_option("--monoid", monoid_text)->required();
  replay->add_option("--axiom", axiom_text)->required();
  replay->add_option("--size", size)->capture_default_str();
  replay->add_option("--trial-seed", trial_seed_value)->required();

  // counterexample
  auto* counter = app.add_subcommand("counterexample", "Configuration separating alg from infty");
  counter->add_option("--monoid", monoid_text)->required();

  // threshold
  std::string r_text;
  std::size_t n = 0;
  auto* threshold = app.add_subcommand("threshold", "Is d(x,y) <= (n-1)r an equivalence?");
  threshold->add_option("--monoid", monoid_text)->required();
  threshold->add_option("--r", r_text)->required();
  threshold->add_option("--n", n)->required();

  // sop
  std::size_t search = 64;
  auto* sop = app.add_subcommand("sop", "Find r > 0 with (n-1)r < nr");
  sop->add_option("--monoid", monoid_text)->required();
  sop->add_option("--n", n)->required();
  sop->add_option("--bound", search, "Values searched")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitInputError;
  }

  try {
    if (check_monoid->parsed()) {
      const auto report = validate_monoid(parse_monoid(monoid_text), bound);
      for (const auto& c : report.checks) {
        out << (c.passed ? "PASS " : "FAIL ") << c.property;
        if (!c.passed) out << " witness " << join_witness(c.witness);
        out << '\n';
      }
      return report.ok() ? kExitOk : kExitViolation;
    }

    if (sauer->parsed()) {
      const auto set = DistanceSet::parse(set_text);
      const auto check = is_fraisse_distance_set(set);
      out << "associative=" << boolstr(check.associative) << '\n';
      if (!check.associative) {
        const auto& w = *check.witness;
        out << "witness " << format_rational(w[0]) << ' ' << format_rational(w[1]) << ' '
            << format_rational(w[2]) << '\n';
        return kExitViolation;
      }
      return kExitOk;
    }

    if (gen->parsed()) {
      const auto sp = random_space(parse_monoid(monoid_text), points, params, seed);
      emit(serialize_dms(sp), out_path, out);
      return kExitOk;
    }

    if (validate->parsed()) {
      const auto report = validate_space(parse_dms(read_file(file_path)));
      for (const auto& c : report.checks) {
        out << (c.passed ? "PASS " : "FAIL ") << c.property;
        if (!c.passed) out << " witness " << join_witness(c.witness);
        out << '\n';
      }
      return report.ok() ? kExitOk : kExitViolation;
    }

    if (amalgamate->parsed()) {
      const auto left = parse_dms(read_file(left_path));
      const auto right = parse_dms(read_file(right_path));
      emit(serialize_dms(free_amalgam(left, right, SubsetRef::parse(common_text))), out_path,
           out);
      return kExitOk;
    }

    if (indep_cmd->parsed()) {
      const auto sp = parse_dms(read_file(space_path));
      const bool v = indep(parse_relation(rel_text), sp, SubsetRef::parse(a_text),
                           SubsetRef::parse(b_text), SubsetRef::parse(c_text));
      out << boolstr(v) << '\n';
      return v ? kExitOk : kExitViolation;
    }

    if (local->parsed()) {
      const auto sp = parse_dms(read_file(space_path));
      const auto base = local_character_base(parse_relation(rel_text), SubsetRef::parse(a_text),
                                             SubsetRef::parse(b_text), sp);
      out << "C " << base.to_string() << '\n';
      return kExitOk;
    }

    if (extend->parsed()) {
      Config cfg{parse_dms(read_file(space_path)), SubsetRef::parse(a_text),
                 SubsetRef::parse(b_text), SubsetRef::parse(c_text), {}};
      const auto w = extension_witness(cfg, SubsetRef::parse(bhat_text));
      emit(serialize_dms(w.ambient) + "A' " + w.A.to_string() + "\n", out_path, out);
      return kExitOk;
    }

    if (axioms->parsed()) {
      const auto rel = parse_relation(rel_text);
      const auto m = parse_monoid(monoid_text);
      std::vector<Axiom> selected;
      for (const auto& a : only_axioms) selected.push_back(parse_axiom(a));
      if (selected.empty()) selected.assign(kAllAxioms.begin(), kAllAxioms.end());
      SweepOptions opts;
      opts.trials = trials;
      opts.size = size;
      opts.seed = seed;
      opts.threads = threads;
      bool all_pass = true;
      for (Axiom ax : selected) {
        const auto report = check_axiom(standard_relation(rel), ax, m, opts);
        out << format_report(report);
        all_pass = all_pass && report.passed();
      }
      return all_pass ? kExitOk : kExitViolation;
    }

    if (replay->parsed()) {
      const auto outcome =
          run_trial(standard_relation(parse_relation(rel_text)), parse_axiom(axiom_text),
                    parse_monoid(monoid_text), size, RandomSpaceParams{}, trial_seed_value);
      if (!outcome.violation) {
        out << "no violation (antecedent " << (outcome.antecedent ? "held" : "did not hold")
            << ")\n";
        return kExitOk;
      }
      out << "# " << *outcome.violation << '\n' << outcome.config;
      return kExitViolation;
    }

    if (counter->parsed()) {
      const auto ce = distinguishing_counterexample(parse_monoid(monoid_text));
      out << "alg=" << boolstr(ce.verdict_alg) << " infty=" << boolstr(ce.verdict_infty) << '\n';
      return ce.verdict_alg != ce.verdict_infty ? kExitOk : kExitViolation;
    }

    if (threshold->parsed()) {
      const auto m = parse_monoid(monoid_text);
      const auto r = ExtValue::parse(r_text);
      const bool eq = threshold_is_equivalence(m, r, n);
      out << "(n-1)r=" << multiple(m, r, n - 1).to_string()
          << " nr=" << multiple(m, r, n).to_string() << " equivalence=" << boolstr(eq) << '\n';
      return kExitOk;
    }

    if (sop->parsed()) {
      const auto w = sop_scalar_witness(parse_monoid(monoid_text), n, search);
      if (!w) {
        out << "r=none\n";
        return kExitViolation;
      }
      out << "r=" << w->to_string() << '\n';
      return kExitOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  err << app.help();
  return kExitInputError;
}

}  // namespace urysohn::cli

// semitrace: command-line front end for canonical trace ideals and residues of
// numerical semigroups.
//
// Exit codes: 0 clean, 1 violation of a proved statement (a bug), 2 usage.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "commands.hpp"

namespace {

  using semitrace::Int;
  namespace cli = semitrace::cli;

  struct Output {
    bool        json = false;
    bool        csv  = false;
    std::string path;
  };

  void add_output_flags(CLI::App& app, Output& out, cli::CommonOptions& common) {
    auto* json = app.add_flag("--json", out.json, "Emit one JSON document");
    app.add_flag("--csv", out.csv, "Emit CSV rows")->excludes(json);
    app.add_option("--out", out.path, "Write the report to PATH");
    app.add_option("--jobs", common.jobs, "Worker threads")
        ->check(CLI::Range(1u, 1024u));
    app.add_option("--seed", common.seed, "Seed for sampled corpora");
  }

  void add_corpus_flags(CLI::App& app, cli::CorpusOptions& corpus) {
    app.add_option("--kind", corpus.kind, "Corpus: threegen or bounded")
        ->check(CLI::IsMember({"threegen", "bounded"}));
    app.add_option("--n", corpus.bound, "Largest generator")
        ->check(CLI::PositiveNumber);
    app.add_option("--e", corpus.max_edim, "Largest embedding dimension")
        ->check(CLI::PositiveNumber);
    app.add_option("--sample", corpus.sample,
                   "Random sample of this many instances (see --seed)");
  }

  int emit(cli::CommandResult const& result, Output const& out) {
    auto const format = out.json  ? cli::Format::json
                        : out.csv ? cli::Format::csv
                                  : cli::Format::text;
    std::cerr << result.notice;
    std::string const text = cli::render(result, format);
    if (out.path.empty()) {
      std::cout << text;
    } else {
      std::ofstream file(out.path, std::ios::binary);
      if (!file) {
        std::cerr << "error: cannot write " << out.path << '\n';
        return cli::exit_usage;
      }
      file << text;
    }
    return result.exit_code;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Canonical trace ideals and residues of numerical semigroups"};
  app.require_subcommand(1);

  cli::CommonOptions common;
  Output             out;
  std::vector<Int>   gens;
  std::optional<Int> window;

  cli::CommandResult result;
  std::function<cli::CommandResult()> action;

  for (auto const& [name, help] :
       std::vector<std::pair<std::string, std::string>>{
           {"info", "All invariants of <GENS>"},
           {"trace", "Trace ideal, canonical and anti-canonical ideals"},
           {"residue", "res(H) = |H \\ tr(H)|"},
           {"classify", "Symmetry classes and residue bounds"},
           {"matrix3", "Structure matrix of a 3-generated semigroup"}}) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("gens", gens, "Generators")->required();
    sub->add_option("--window-override", window,
                    "End of the anti-canonical scan window (stress hook)");
    add_output_flags(*sub, out, common);
    sub->callback([&, name = name] {
      common.window_override = window;
      if (name == "info") {
        action = [&] { return cli::cmd_info(gens, common); };
      } else if (name == "trace") {
        action = [&] { return cli::cmd_trace(gens, common); };
      } else if (name == "residue") {
        action = [&] { return cli::cmd_residue(gens, common); };
      } else if (name == "classify") {
        action = [&] { return cli::cmd_classify(gens, common); };
      } else {
        action = [&] { return cli::cmd_matrix3(gens, common); };
      }
    });
  }

  cli::FamilyOptions family;
  auto* fam = app.add_subcommand("family", "Parametrized families");
  fam->add_option("--kind", family.kind)
      ->required()
      ->check(CLI::IsMember({"arithmetic", "med", "tm1", "tm2", "conductor"}));
  fam->add_option("--a", family.a);
  fam->add_option("--b", family.b);
  fam->add_option("--c", family.c);
  fam->add_option("--d", family.d);
  fam->add_option("--e", family.e);
  fam->add_option("--m", family.m);
  fam->add_option("--q", family.q);
  add_output_flags(*fam, out, common);
  fam->callback([&] { action = [&] { return cli::cmd_family(family, common); }; });

  cli::ShiftOptions shift;
  std::string       general;
  auto* sh = app.add_subcommand("shift-scan", "Residues along <j, j+a, j+b>");
  sh->add_option("--a", shift.a);
  sh->add_option("--b", shift.b);
  sh->add_option("--jmax", shift.j_max)->required();
  sh->add_option("--general", general,
                 "Comma-separated offsets a1,...,ae (evidence mode)");
  add_output_flags(*sh, out, common);
  sh->callback([&] {
    if (!general.empty()) {
      std::stringstream in(general);
      std::string       item;
      while (std::getline(in, item, ',')) {
        shift.general.push_back(std::stoll(item));
      }
    }
    action = [&] { return cli::cmd_shift_scan(shift, common); };
  });

  cli::CorpusOptions     corpus;
  cli::EnumerateFilters  filters;
  auto* en = app.add_subcommand("enumerate", "Enumerate a corpus");
  add_corpus_flags(*en, corpus);
  en->add_flag("--non-symmetric", filters.non_symmetric_only);
  en->add_option("--min-residue", filters.min_residue);
  add_output_flags(*en, out, common);
  en->callback([&] {
    action = [&] { return cli::cmd_enumerate(corpus, filters, common); };
  });

  std::string experiment;
  cli::CorpusOptions experiment_corpus;
  auto* ex = app.add_subcommand("experiment", "Check a bound over a corpus");
  ex->add_option("name", experiment)
      ->required()
      ->check(CLI::IsMember({"q12", "cor13", "prop11", "prop22"}));
  add_corpus_flags(*ex, experiment_corpus);
  add_output_flags(*ex, out, common);
  ex->callback([&] {
    // q12 defaults to the bounded corpus N = 25, E = 5.
    if (experiment == "q12" && ex->count("--kind") == 0) {
      experiment_corpus.kind = "bounded";
      if (ex->count("--n") == 0) {
        experiment_corpus.bound = 25;
      }
    }
    action = [&] {
      return cli::cmd_experiment(experiment, experiment_corpus, common);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::CallForAllHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return cli::exit_usage;
  }

  try {
    return emit(action(), out);
  } catch (semitrace::Error const& e) {
    std::cerr << "error: " << e.what() << '\n';
    switch (e.code()) {
      case semitrace::ErrorCode::InternalInconsistency:
      case semitrace::ErrorCode::LabelMismatch: return cli::exit_violation;
      default: return cli::exit_usage;
    }
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::exit_usage;
  }
}

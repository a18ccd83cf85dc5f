#include "dichord/cli.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "dichord/campaign.hpp"
#include "dichord/chordality.hpp"
#include "dichord/classes.hpp"
#include "dichord/decomposition.hpp"
#include "dichord/errors.hpp"
#include "dichord/forbidden.hpp"
#include "dichord/generators.hpp"
#include "dichord/render.hpp"
#include "dichord/text_format.hpp"

namespace dichord {

namespace {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Digraph load(const std::string& path, std::istream& in) {
  try {
    if (path == "-") return read_digraph(in);
    std::ifstream file(path);
    if (!file) throw InputError("cannot open " + path);
    return read_digraph(file);
  } catch (const ParseError& e) {
    throw InputError((path == "-" ? std::string("<stdin>") : path) + ": " + e.what());
  }
}

Format parse_format(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "dot") return Format::Dot;
  return Format::Text;
}

const std::map<std::string, ClassLabel> kCharacterized = {
    {"semicomplete", ClassLabel::Semicomplete},
    {"lsd", ClassLabel::LocallySemicomplete},
    {"wqt", ClassLabel::WeaklyQuasiTransitive},
};

ForbiddenCheck characterize(const Digraph& d, ClassLabel c) {
  switch (c) {
    case ClassLabel::Semicomplete:
      return semicomplete_chordal_characterization(d);
    case ClassLabel::LocallySemicomplete:
      return lsd_chordal_characterization(d);
    default:
      return wqt_chordal_characterization(d);
  }
}

Digraph generate(const std::string& cls, const GenConfig& cfg, const std::string& strategy) {
  if (cls == "semicomplete") return gen_semicomplete(cfg);
  if (cls == "symmetric") return gen_symmetric(cfg);
  if (cls == "transitive-oriented") return gen_transitive_oriented(cfg);
  if (cls == "wqt") return gen_wqt(cfg);
  if (cls == "qt") return gen_qt(cfg);
  if (cls == "lsd") {
    return gen_locally_semicomplete(cfg, strategy == "rejection" ? LsdStrategy::Rejection
                                                                 : LsdStrategy::Round);
  }
  Rng rng(cfg.seed, cfg.stream);
  return gen_uniform(rng, cfg.n);
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::istream& in, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"Chordality of digraphs: recognition, certificates, forbidden patterns, "
               "decomposition, and verification campaigns."};
  app.name("dichord");
  app.require_subcommand(1);

  std::string input = "-";
  std::string format = "text";
  app.add_option("--input", input, "Digraph file, or - for standard input")->capture_default_str();
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json", "dot"}))
      ->capture_default_str();

  auto* classify_cmd = app.add_subcommand("classify", "Report every class and a witness for each failure");
  auto* chordal_cmd = app.add_subcommand("chordal", "Greedy elimination; PEO or stuck certificate");

  auto* characterize_cmd =
      app.add_subcommand("characterize", "Forbidden-subdigraph characterization within a class");
  std::string char_class;
  characterize_cmd->add_option("--class", char_class, "Class the characterization is stated for")
      ->required()
      ->check(CLI::IsMember({"semicomplete", "lsd", "wqt"}));

  auto* decompose_cmd =
      app.add_subcommand("decompose", "Substitution tree of a weakly quasi-transitive digraph");

  auto* generate_cmd = app.add_subcommand("generate", "Random digraph in a class, text format");
  std::string gen_class;
  GenConfig cfg;
  std::string strategy = "round";
  generate_cmd->add_option("--class", gen_class, "Class to sample")
      ->required()
      ->check(CLI::IsMember(
          {"semicomplete", "symmetric", "transitive-oriented", "wqt", "qt", "lsd", "uniform"}));
  generate_cmd->add_option("--n", cfg.n, "Vertex count")->required()->check(CLI::Range(0, kMaxVertices));
  generate_cmd->add_option("--seed", cfg.seed, "RNG seed")->capture_default_str();
  generate_cmd->add_option("--p", cfg.p, "Arc density")->check(CLI::Range(0.0, 1.0))->capture_default_str();
  generate_cmd->add_option("--depth", cfg.depth, "Nesting depth for substitution generators")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  generate_cmd->add_option("--strategy", strategy, "Locally semicomplete strategy")
      ->check(CLI::IsMember({"round", "rejection"}))
      ->capture_default_str();

  auto* verify_cmd = app.add_subcommand("verify", "Run a verification campaign");
  std::string theorem;
  Population pop;
  unsigned workers = 0;
  std::vector<std::string> theorem_names;
  for (TheoremId t : kAllTheorems) theorem_names.emplace_back(to_string(t));
  verify_cmd->add_option("--theorem", theorem, "Property to check")
      ->required()
      ->check(CLI::IsMember(theorem_names));
  auto* max_n_opt = verify_cmd->add_option("--max-n", pop.max_n, "Exhaustive: all digraphs on 1..K vertices");
  auto* samples_opt = verify_cmd->add_option("--samples", pop.samples, "Sampled: number of instances");
  verify_cmd->add_option("--seed", pop.seed, "Sampled: RNG seed");
  verify_cmd->add_option("--n-max", pop.n_max, "Sampled: largest vertex count (default per property)");
  verify_cmd->add_option("--workers", workers, "Worker threads (default: DICHORD_WORKERS or all cores)");
  max_n_opt->excludes(samples_opt);

  auto* enumerate_cmd = app.add_subcommand("enumerate", "Every labeled digraph on K vertices");
  int enum_n = 1;
  bool count_only = false;
  enumerate_cmd->add_option("--n", enum_n, "Vertex count (1..5)")->required();
  enumerate_cmd->add_flag("--count", count_only, "Print only how many there are");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const Format fmt = parse_format(format);
  try {
    if (classify_cmd->parsed()) {
      const Digraph d = load(input, in);
      out << render_classification(d, fmt);
      return kExitOk;
    }
    if (chordal_cmd->parsed()) {
      const Digraph d = load(input, in);
      const auto cert = greedy_eliminate(d);
      out << render_chordality(d, cert, fmt);
      return std::holds_alternative<PerfectEliminationOrdering>(cert) ? kExitOk : kExitProperty;
    }
    if (characterize_cmd->parsed()) {
      const Digraph d = load(input, in);
      const ClassLabel c = kCharacterized.at(char_class);
      try {
        const auto r = characterize(d, c);
        out << render_characterization(d, c, r, fmt);
        return r.holds ? kExitOk : kExitProperty;
      } catch (const NotInClassError& e) {
        out << render_not_in_class(d, e.witness(), fmt);
        return kExitProperty;
      }
    }
    if (decompose_cmd->parsed()) {
      const Digraph d = load(input, in);
      try {
        out << render_decomposition(d, decompose_wqt(d), fmt);
        return kExitOk;
      } catch (const NotInClassError& e) {
        out << render_not_in_class(d, e.witness(), fmt);
        return kExitProperty;
      }
    }
    if (generate_cmd->parsed()) {
      out << render_digraph(generate(gen_class, cfg, strategy), fmt);
      return kExitOk;
    }
    if (verify_cmd->parsed()) {
      if (samples_opt->count() > 0) {
        pop.mode = Population::Mode::Samples;
      } else if (max_n_opt->count() == 0) {
        throw UsageError("verify needs --max-n K or --samples M --seed S");
      }
      const auto report = run_campaign(*parse_theorem(theorem), pop, workers);
      out << render_report(report, fmt == Format::Dot ? Format::Text : fmt);
      return report.ok() ? kExitOk : kExitProperty;
    }
    if (enumerate_cmd->parsed()) {
      const std::uint64_t count = digraph_count(enum_n);
      if (count_only) {
        out << count << "\n";
        return kExitOk;
      }
      for (std::uint64_t i = 0; i < count; ++i) {
        if (fmt == Format::Text) out << "# index " << i << "\n";
        out << render_digraph(digraph_at(enum_n, i), fmt);
      }
      return kExitOk;
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const GenerationFailure& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvariantViolation& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}

}  // namespace dichord

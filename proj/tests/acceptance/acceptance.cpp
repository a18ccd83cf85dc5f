// Acceptance suite: one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>

#include "dichord/campaign.hpp"
#include "dichord/chordality.hpp"
#include "dichord/classes.hpp"
#include "dichord/forbidden.hpp"
#include "dichord/render.hpp"
#include "dichord/text_format.hpp"

using namespace dichord;

namespace {

// Time limits in seconds.
constexpr double kT11Limit = 10;
constexpr double kExhaustiveFiveLimit = 300;
constexpr double kSampledT33Limit = 60;

int failures = 0;

void report(const char* id, bool pass, const std::string& detail) {
  std::printf("%s %s: %s\n", pass ? "PASS" : "FAIL", id, detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

Population exhaustive(int max_n) {
  Population p;
  p.max_n = max_n;
  return p;
}

Population sampled(std::uint64_t m, std::uint64_t seed, int n_max) {
  Population p;
  p.mode = Population::Mode::Samples;
  p.samples = m;
  p.seed = seed;
  p.n_max = n_max;
  return p;
}

std::string summary(const CampaignReport& r) {
  std::ostringstream s;
  s << to_string(r.theorem) << " [" << r.population << "] checked " << r.checked << ", "
    << r.discrepancies.size() << " discrepancies, " << r.wall_seconds << " s";
  return s.str();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void criterion(const char* id, const std::function<void()>& body) {
  try {
    body();
  } catch (const std::exception& e) {
    report(id, false, std::string("exception: ") + e.what());
  }
}

}  // namespace

int main() {
  criterion("C1 semicomplete equivalence (n<=4)", [] {
    const auto r = run_campaign(TheoremId::T11, exhaustive(4));
    report("C1 semicomplete equivalence (n<=4)", r.ok() && r.checked == 760 && r.wall_seconds < kT11Limit,
           summary(r));
  });

  criterion("C2 locally semicomplete equivalence (n<=5)", [] {
    const auto r = run_campaign(TheoremId::T24, exhaustive(5));
    report("C2 locally semicomplete equivalence (n<=5)",
           r.ok() && r.checked > 0 && r.wall_seconds < kExhaustiveFiveLimit, summary(r));
  });

  CampaignReport t33_all;
  CampaignReport t33_gen;
  criterion("C3 weakly quasi-transitive equivalence", [&] {
    t33_all = run_campaign(TheoremId::T33, exhaustive(5));
    t33_gen = run_campaign(TheoremId::T33, sampled(10000, 1, 12));
    const bool pass = t33_all.ok() && t33_gen.ok() && t33_all.checked > 0 &&
                      t33_gen.checked == 10000 && t33_all.wall_seconds < kExhaustiveFiveLimit &&
                      t33_gen.wall_seconds < kSampledT33Limit;
    report("C3 weakly quasi-transitive equivalence", pass, summary(t33_all) + "; " + summary(t33_gen));
  });

  criterion("C4 quasi-transitive / extended semicomplete specialization", [&] {
    bool pass = t33_all.subpopulations.size() == 2 && t33_gen.subpopulations.size() == 2;
    std::ostringstream s;
    for (const auto* r : {&t33_all, &t33_gen}) {
      for (const auto& sub : r->subpopulations) {
        pass = pass && sub.checked > 0 && sub.discrepancies == 0;
        s << sub.name << " [" << r->population << "] checked " << sub.checked << ", "
          << sub.discrepancies << " discrepancies; ";
      }
    }
    report("C4 quasi-transitive / extended semicomplete specialization", pass, s.str());
  });

  criterion("C5 figure 1 goldens", [] {
    bool pass = true;
    std::ostringstream s;
    const std::pair<const char*, WitnessKind> cases[] = {
        {"fig1_a", WitnessKind::Fig1A},
        {"fig1_b", WitnessKind::Fig1B},
        {"fig1_c", WitnessKind::Fig1C},
        {"fig1_d", WitnessKind::Fig1D},
    };
    for (const auto& [name, kind] : cases) {
      const Digraph d = parse_digraph(slurp(std::string(DICHORD_DATA_DIR) + "/" + name + ".txt"));
      const auto r = semicomplete_chordal_characterization(d);
      const bool ok =
          is_semicomplete(d) && !is_chordal(d) && !r.holds && r.witness->kind == kind &&
          render_chordality(d, greedy_eliminate(d), Format::Text) ==
              slurp(std::string(DICHORD_GOLDEN_DIR) + "/" + name + ".chordal.txt") &&
          render_characterization(d, ClassLabel::Semicomplete, r, Format::Text) ==
              slurp(std::string(DICHORD_GOLDEN_DIR) + "/" + name + ".characterize.txt");
      pass = pass && ok;
      s << name << (ok ? " ok" : " MISMATCH") << " (" << (r.witness ? to_string(r.witness->kind) : "none")
        << "); ";
    }
    report("C5 figure 1 goldens", pass, s.str());
  });

  criterion("C6 di-simplicial in D implies di-simplicial in S(D)", [] {
    const auto all = run_campaign(TheoremId::Lemma22, exhaustive(4));
    const auto gen = run_campaign(TheoremId::Lemma22, sampled(100000, 2, 7));
    report("C6 di-simplicial in D implies di-simplicial in S(D)",
           all.ok() && gen.ok() && gen.checked == 100000, summary(all) + "; " + summary(gen));
  });

  criterion("C7 violating-triple canonicalization", [] {
    // Keep sampling until at least 1000 digraphs met the hypotheses and had
    // a triple to canonicalize.
    CampaignReport r;
    for (std::uint64_t m = 4000; m <= (1U << 22); m *= 2) {
      r = run_campaign(TheoremId::Lemma23, sampled(m, 3, 8));
      if (r.checked >= 1000 || !r.ok()) break;
    }
    report("C7 violating-triple canonicalization", r.ok() && r.checked >= 1000, summary(r));
  });

  criterion("C8 decomposition round trip", [] {
    const auto all = run_campaign(TheoremId::RoundTrip, exhaustive(5));
    const auto gen = run_campaign(TheoremId::RoundTrip, sampled(10000, 4, 30));
    report("C8 decomposition round trip", all.ok() && gen.ok() && gen.checked == 10000,
           summary(all) + "; " + summary(gen));
  });

  criterion("C9 substitution closure", [] {
    const auto r = run_campaign(TheoremId::Closure, sampled(1000, 5, 4));
    report("C9 substitution closure", r.ok() && r.checked == 1000, summary(r));
  });

  criterion("C10 greedy elimination vs definition", [] {
    const auto all = run_campaign(TheoremId::Oracle, exhaustive(4));
    const auto gen = run_campaign(TheoremId::Oracle, sampled(10000, 6, 7));
    report("C10 greedy elimination vs definition",
           all.ok() && gen.ok() && all.checked == 4165 && gen.checked == 10000,
           summary(all) + "; " + summary(gen));
  });

  criterion("C11 symmetric digraphs vs induced long cycles", [] {
    const auto r = run_campaign(TheoremId::Symmetric, exhaustive(5));
    // 2^(n(n-1)/2) symmetric labeled digraphs for n = 1..5.
    report("C11 symmetric digraphs vs induced long cycles",
           r.ok() && r.checked == 1 + 2 + 8 + 64 + 1024, summary(r));
  });

  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}

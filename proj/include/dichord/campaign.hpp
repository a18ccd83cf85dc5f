#ifndef DICHORD_CAMPAIGN_HPP
#define DICHORD_CAMPAIGN_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dichord {

/// Properties checked instance by instance.
///   t11        semicomplete: chordal iff forbidden-pattern characterization
///   t24        locally semicomplete: same, with the cycle condition
///   t33        weakly quasi-transitive: same; quasi-transitive and
///              extended semicomplete instances also tallied separately
///   lemma22    a vertex di-simplicial in D is di-simplicial in S(D)
///   lemma23    violating triples canonicalize under the lemma hypotheses
///   roundtrip  decompose then recompose reproduces a weakly
///              quasi-transitive digraph; every tree node is valid
///   closure    substituting weakly quasi-transitive digraphs into one
///              stays weakly quasi-transitive
///   oracle     greedy elimination agrees with the definition of chordality
///   symmetric  a symmetric digraph is chordal iff its graph has no induced
///              cycle of length >= 4
enum class TheoremId { T11, T24, T33, Lemma22, Lemma23, RoundTrip, Closure, Oracle, Symmetric };

inline constexpr TheoremId kAllTheorems[] = {
    TheoremId::T11,       TheoremId::T24,     TheoremId::T33,
    TheoremId::Lemma22,   TheoremId::Lemma23, TheoremId::RoundTrip,
    TheoremId::Closure,   TheoremId::Oracle,  TheoremId::Symmetric,
};

std::string_view to_string(TheoremId t);
std::optional<TheoremId> parse_theorem(std::string_view s);

struct Population {
  enum class Mode { Exhaustive, Samples };
  Mode mode = Mode::Exhaustive;
  /// Exhaustive: every labeled digraph on 1..max_n vertices.
  int max_n = 4;
  /// Samples: sample i uses RNG stream i under `seed`, with 1..n_max vertices.
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  /// 0 picks the per-theorem default.
  int n_max = 0;
};

std::string describe(TheoremId t, const Population& p);

struct Discrepancy {
  /// Text format; closure instances list the host and then each part.
  std::string digraph;
  std::string reference;
  std::string candidate;
};

struct SubPopulation {
  std::string name;
  std::uint64_t checked = 0;
  std::uint64_t discrepancies = 0;
};

struct CampaignReport {
  TheoremId theorem = TheoremId::T11;
  std::string population;
  /// Instances generated or enumerated.
  std::uint64_t visited = 0;
  /// Instances inside the theorem's population.
  std::uint64_t checked = 0;
  std::vector<Discrepancy> discrepancies;
  std::vector<SubPopulation> subpopulations;
  double wall_seconds = 0;

  bool ok() const { return discrepancies.empty(); }
};

/// Worker count: DICHORD_WORKERS if set to a positive integer, otherwise
/// the hardware concurrency (at least 1).
unsigned campaign_workers();

/// Runs the campaign. Results are merged in enumeration order, so the
/// report is the same for any worker count apart from wall time. Throws
/// UsageError for unsupported ranges (exhaustive n beyond 5, or beyond 4
/// for closure; sampled n beyond 64).
CampaignReport run_campaign(TheoremId t, const Population& p, unsigned workers = 0);

}  // namespace dichord

#endif  // DICHORD_CAMPAIGN_HPP

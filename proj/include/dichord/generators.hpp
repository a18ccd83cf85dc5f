#ifndef DICHORD_GENERATORS_HPP
#define DICHORD_GENERATORS_HPP

#include <cstdint>
#include <functional>
#include <random>
#include <span>

#include "dichord/digraph.hpp"

namespace dichord {

/// Seeded RNG stream. (seed, stream) pairs give independent, reproducible
/// sequences; campaigns use the sample index as the stream id.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [lo, hi].
  int between(int lo, int hi);
  bool chance(double p);
  double unit();

 private:
  std::mt19937_64 engine_;
};

struct GenConfig {
  int n = 1;
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;
  /// Arc density where the generator uses one.
  double p = 0.5;
  /// Nesting budget for substitution-based generators.
  int depth = 2;
};

// Exhaustive enumeration. Digraphs on n vertices are indexed by base-4
// numbers with one digit per pair (0,1), (0,2), ..., (n-2,n-1), most
// significant first; the digit is the PairRelation value.

/// 4^(n(n-1)/2). Throws UsageError unless 1 <= n <= 5.
std::uint64_t digraph_count(int n);
Digraph digraph_at(int n, std::uint64_t index);
/// Visits every labeled digraph on n vertices once, in index order.
void enumerate_digraphs(int n, const std::function<void(const Digraph&)>& visit);

/// Each pair independently NonAdjacent / Forward / Backward / Symmetric.
Digraph gen_uniform(Rng& rng, int n);

Digraph gen_semicomplete(const GenConfig& cfg);
Digraph gen_symmetric(const GenConfig& cfg);
/// Random strict partial order: pairs along a random permutation kept with
/// probability p, then transitively closed.
Digraph gen_transitive_oriented(const GenConfig& cfg);

/// Random substitution tree over the three base classes, recomposed.
/// Always weakly quasi-transitive.
Digraph gen_wqt(const GenConfig& cfg);
/// Substitution over transitive oriented / semicomplete quotients, placing
/// non-trivial parts only at vertices without symmetric arcs. Always
/// quasi-transitive.
Digraph gen_qt(const GenConfig& cfg);

/// Round digraph on 0..n-1 in circular order: vertex i points to the next
/// lengths[i] vertices. Lengths must be in [0, n-1].
Digraph round_digraph(std::span<const int> lengths);

enum class LsdStrategy { Round, Rejection };

/// Round: random circular order and interval lengths that keep every in-
/// and out-neighbourhood an interval of semicomplete vertices. Rejection:
/// uniform digraphs until one is locally semicomplete (n <= 6). Every
/// output is checked; GenerationFailure if the attempt budget runs out.
Digraph gen_locally_semicomplete(const GenConfig& cfg, LsdStrategy strategy = LsdStrategy::Round);

}  // namespace dichord

#endif  // DICHORD_GENERATORS_HPP

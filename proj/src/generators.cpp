#include "dichord/generators.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "dichord/classes.hpp"
#include "dichord/errors.hpp"

namespace dichord {

Rng::Rng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  engine_.seed(seq);
}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw UsageError("empty range");
  const std::uint64_t threshold = (0 - bound) % bound;
  while (true) {
    const std::uint64_t r = engine_();
    if (r >= threshold) return r % bound;
  }
}

int Rng::between(int lo, int hi) {
  return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

double Rng::unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

bool Rng::chance(double p) { return unit() < p; }

namespace {

int pair_count(int n) { return n * (n - 1) / 2; }

void check_n(int n) {
  if (n < 0 || n > kMaxVertices) {
    throw UsageError("vertex count " + std::to_string(n) + " outside [0, " +
                     std::to_string(kMaxVertices) + "]");
  }
}

std::vector<int> random_permutation(Rng& rng, int n) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  for (int i = n - 1; i > 0; --i) {
    std::swap(perm[i], perm[rng.below(static_cast<std::uint64_t>(i) + 1)]);
  }
  return perm;
}

Digraph semicomplete(Rng& rng, int n) {
  Digraph d(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      d.set_relation(u, v, static_cast<PairRelation>(1 + rng.below(3)));
    }
  }
  return d;
}

Digraph symmetric(Rng& rng, int n, double p) {
  Digraph d(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (rng.chance(p)) d.set_relation(u, v, PairRelation::Symmetric);
    }
  }
  return d;
}

Digraph transitive_oriented(Rng& rng, int n, double p) {
  const auto perm = random_permutation(rng, n);
  std::vector<std::uint64_t> reach(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (rng.chance(p)) reach[perm[i]] |= std::uint64_t{1} << perm[j];
    }
  }
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      if ((reach[i] >> k) & 1U) reach[i] |= reach[k];
    }
  }
  Digraph d(n);
  for (int i = 0; i < n; ++i) {
    for (int j : VertexSet(reach[i])) d.add_arc(i, j);
  }
  return d;
}

Digraph random_base(Rng& rng, int n) {
  const double p = rng.unit();
  switch (rng.below(3)) {
    case 0:
      return transitive_oriented(rng, n, p);
    case 1:
      return semicomplete(rng, n);
    default:
      return symmetric(rng, n, p);
  }
}

/// Block sizes summing to n, at least two blocks. Sizes are geometric with
/// a per-split success rate, clipped to what is left.
std::vector<int> split(Rng& rng, int n) {
  const double grow = 0.3 + 0.5 * rng.unit();
  std::vector<int> sizes;
  int remaining = n;
  while (remaining > 0) {
    const int cap = sizes.empty() ? remaining - 1 : remaining;
    int s = 1;
    while (s < cap && rng.chance(grow)) ++s;
    sizes.push_back(s);
    remaining -= s;
  }
  return sizes;
}

Digraph shuffled(Rng& rng, const Digraph& d) {
  const auto perm = random_permutation(rng, d.order());
  return relabeled(d, perm);
}

Digraph wqt_tree(Rng& rng, int n, int depth) {
  if (n == 1) return Digraph(1);
  if (depth <= 0 || rng.chance(0.25)) return random_base(rng, n);
  const auto sizes = split(rng, n);
  const Digraph quotient = random_base(rng, static_cast<int>(sizes.size()));
  std::vector<Digraph> parts;
  for (int s : sizes) parts.push_back(wqt_tree(rng, s, depth - 1));
  return substitution(quotient, parts);
}

Digraph qt_tree(Rng& rng, int n, int depth) {
  if (n == 1) return Digraph(1);
  const auto base = [&](int k) {
    return rng.chance(0.5) ? transitive_oriented(rng, k, rng.unit()) : semicomplete(rng, k);
  };
  if (depth <= 0 || rng.chance(0.25)) return base(n);

  const int k = rng.between(2, n);
  Digraph quotient = base(k);
  std::vector<int> free;
  for (int v = 0; v < k; ++v) {
    if (quotient.sym_nbrs(v).empty()) free.push_back(v);
  }
  if (free.empty() && k < n) {
    // Nowhere to put the extra vertices; an oriented quotient has no digons.
    quotient = transitive_oriented(rng, k, rng.unit());
    free.resize(static_cast<std::size_t>(k));
    std::iota(free.begin(), free.end(), 0);
  }
  std::vector<int> sizes(static_cast<std::size_t>(k), 1);
  for (int extra = n - k; extra > 0; --extra) ++sizes[free[rng.below(free.size())]];

  std::vector<Digraph> parts;
  for (int s : sizes) parts.push_back(qt_tree(rng, s, depth - 1));
  return substitution(quotient, parts);
}

/// Interval lengths whose reach i + len[i] never decreases around the circle.
std::vector<int> round_lengths(Rng& rng, int n) {
  std::vector<int> len(static_cast<std::size_t>(n));
  for (int attempt = 0; attempt < 10000; ++attempt) {
    len[0] = rng.between(0, n - 1);
    for (int i = 1; i < n; ++i) len[i] = std::clamp(len[i - 1] + rng.between(-1, 1), 0, n - 1);
    if (len[0] >= len[n - 1] - 1) return len;
  }
  throw GenerationFailure("could not draw round interval lengths; try another seed");
}

}  // namespace

std::uint64_t digraph_count(int n) {
  if (n < 1 || n > 5) throw UsageError("exhaustive enumeration supports 1 <= n <= 5");
  return std::uint64_t{1} << (2 * pair_count(n));
}

Digraph digraph_at(int n, std::uint64_t index) {
  if (index >= digraph_count(n)) throw UsageError("enumeration index out of range");
  Digraph d(n);
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  for (auto it = pairs.rbegin(); it != pairs.rend(); ++it) {
    d.set_relation(it->first, it->second, static_cast<PairRelation>(index & 3U));
    index >>= 2;
  }
  return d;
}

void enumerate_digraphs(int n, const std::function<void(const Digraph&)>& visit) {
  const std::uint64_t count = digraph_count(n);
  for (std::uint64_t i = 0; i < count; ++i) visit(digraph_at(n, i));
}

Digraph gen_uniform(Rng& rng, int n) {
  check_n(n);
  Digraph d(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) d.set_relation(u, v, static_cast<PairRelation>(rng.below(4)));
  }
  return d;
}

Digraph gen_semicomplete(const GenConfig& cfg) {
  check_n(cfg.n);
  Rng rng(cfg.seed, cfg.stream);
  return semicomplete(rng, cfg.n);
}

Digraph gen_symmetric(const GenConfig& cfg) {
  check_n(cfg.n);
  Rng rng(cfg.seed, cfg.stream);
  return symmetric(rng, cfg.n, cfg.p);
}

Digraph gen_transitive_oriented(const GenConfig& cfg) {
  check_n(cfg.n);
  Rng rng(cfg.seed, cfg.stream);
  return transitive_oriented(rng, cfg.n, cfg.p);
}

Digraph gen_wqt(const GenConfig& cfg) {
  check_n(cfg.n);
  if (cfg.n == 0) return Digraph(0);
  Rng rng(cfg.seed, cfg.stream);
  return shuffled(rng, wqt_tree(rng, cfg.n, cfg.depth));
}

Digraph gen_qt(const GenConfig& cfg) {
  check_n(cfg.n);
  if (cfg.n == 0) return Digraph(0);
  Rng rng(cfg.seed, cfg.stream);
  return shuffled(rng, qt_tree(rng, cfg.n, cfg.depth));
}

Digraph round_digraph(std::span<const int> lengths) {
  const auto n = static_cast<int>(lengths.size());
  check_n(n);
  Digraph d(n);
  for (int i = 0; i < n; ++i) {
    if (lengths[i] < 0 || lengths[i] > n - 1) throw UsageError("round interval length out of range");
    for (int j = 1; j <= lengths[i]; ++j) d.add_arc(i, (i + j) % n);
  }
  return d;
}

Digraph gen_locally_semicomplete(const GenConfig& cfg, LsdStrategy strategy) {
  check_n(cfg.n);
  Rng rng(cfg.seed, cfg.stream);
  if (cfg.n <= 1) return Digraph(cfg.n);

  if (strategy == LsdStrategy::Round) {
    const auto lengths = round_lengths(rng, cfg.n);
    Digraph d = shuffled(rng, round_digraph(lengths));
    if (!is_locally_semicomplete(d)) {
      throw InvariantViolation("round construction produced a digraph that is not locally semicomplete");
    }
    return d;
  }

  if (cfg.n > 6) throw UsageError("rejection sampling supports n <= 6");
  constexpr int kBudget = 1 << 20;
  for (int attempt = 0; attempt < kBudget; ++attempt) {
    Digraph d = gen_uniform(rng, cfg.n);
    if (is_locally_semicomplete(d)) return d;
  }
  throw GenerationFailure("rejection sampling found no locally semicomplete digraph on " +
                          std::to_string(cfg.n) +
                          " vertices; retry with another seed or the round strategy");
}

}  // namespace dichord

#include "dichord/forbidden.hpp"

#include <algorithm>
#include <array>
#include <functional>

#include "dichord/chordality.hpp"
#include "dichord/classes.hpp"
#include "dichord/errors.hpp"
#include "dichord/fixtures.hpp"

namespace dichord {

std::string_view to_string(WitnessKind k) {
  switch (k) {
    case WitnessKind::Fig1A:
      return "Fig1A";
    case WitnessKind::Fig1B:
      return "Fig1B";
    case WitnessKind::Fig1C:
      return "Fig1C";
    case WitnessKind::Fig1D:
      return "Fig1D";
    case WitnessKind::NonSymmetricInducedCycle:
      return "NonSymmetricInducedCycle";
    case WitnessKind::SymmetricInducedLongCycle:
      return "SymmetricInducedLongCycle";
  }
  return "?";
}

const Digraph& figure1_pattern(WitnessKind k) {
  static const Digraph a = fixtures::fig1_a();
  static const Digraph b = fixtures::fig1_b();
  static const Digraph c = fixtures::fig1_c();
  static const Digraph d = fixtures::fig1_d();
  switch (k) {
    case WitnessKind::Fig1A:
      return a;
    case WitnessKind::Fig1B:
      return b;
    case WitnessKind::Fig1C:
      return c;
    case WitnessKind::Fig1D:
      return d;
    default:
      throw UsageError("not a Figure-1 witness kind");
  }
}

namespace {

constexpr std::array kFigureKinds = {WitnessKind::Fig1A, WitnessKind::Fig1B, WitnessKind::Fig1C,
                                     WitnessKind::Fig1D};

bool embeds(const Digraph& d, const Digraph& pattern, const std::vector<int>& at) {
  const int k = pattern.order();
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      if (d.relation(at[i], at[j]) != pattern.relation(i, j)) return false;
    }
  }
  return true;
}

bool is_clique(const Digraph& d, const std::vector<int>& vs) {
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (!d.adjacent(vs[i], vs[j])) return false;
    }
  }
  return true;
}

/// Calls visit(kind, embedding) for each vertex set inducing a pattern;
/// stops when visit returns false.
void for_each_figure1(const Digraph& d,
                      const std::function<bool(WitnessKind, const std::vector<int>&)>& visit) {
  const int n = d.order();
  for (WitnessKind kind : kFigureKinds) {
    const Digraph& pattern = figure1_pattern(kind);
    const int k = pattern.order();
    if (k > n) continue;
    // Lexicographic k-combinations of 0..n-1.
    std::vector<int> combo(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) combo[i] = i;
    while (true) {
      if (is_clique(d, combo)) {
        std::vector<int> perm = combo;
        do {
          if (embeds(d, pattern, perm)) {
            if (!visit(kind, perm)) return;
            break;
          }
        } while (std::next_permutation(perm.begin(), perm.end()));
      }
      int i = k - 1;
      while (i >= 0 && combo[i] == n - k + i) --i;
      if (i < 0) break;
      ++combo[i];
      for (int j = i + 1; j < k; ++j) combo[j] = combo[j - 1] + 1;
    }
  }
}

/// Rotates so the smallest vertex comes first; for undirected cycles also
/// picks the direction with the smaller second vertex.
std::vector<int> normalize_cycle(std::vector<int> cycle, bool undirected) {
  auto smallest = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), smallest, cycle.end());
  if (undirected && cycle.size() > 2 && cycle.back() < cycle[1]) {
    std::reverse(cycle.begin() + 1, cycle.end());
  }
  return cycle;
}

VertexSet nonsym_out(const Digraph& d, int v) { return d.out(v) - d.in(v); }

bool extend_cycle(const Digraph& d, int length, std::vector<int>& path, VertexSet on_path,
                  VertexSet settled) {
  // `settled` holds every path vertex except the last one; a new vertex must
  // avoid all of them, apart from the start when it closes the cycle.
  const int start = path.front();
  const int last = path.back();
  const auto pos = static_cast<int>(path.size());
  const VertexSet above = d.vertices() - VertexSet::range(start + 1);
  for (int x : (nonsym_out(d, last) & above) - on_path) {
    if (pos == length - 1) {
      if (!nonsym_out(d, x).contains(start)) continue;
      if (d.nbrs(x).intersects(settled - VertexSet::single(start))) continue;
      path.push_back(x);
      return true;
    }
    if (d.nbrs(x).intersects(settled)) continue;
    path.push_back(x);
    if (extend_cycle(d, length, path, on_path | VertexSet::single(x),
                     settled | VertexSet::single(last))) {
      return true;
    }
    path.pop_back();
  }
  return false;
}

/// Shortest path from a to b inside `allowed`, BFS in ascending label order.
std::vector<int> shortest_path(const Digraph& g, int a, int b, VertexSet allowed) {
  std::vector<int> parent(static_cast<std::size_t>(g.order()), -1);
  VertexSet seen = VertexSet::single(a);
  std::vector<int> queue{a};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int x = queue[head];
    for (int y : (g.nbrs(x) & allowed) - seen) {
      seen.insert(y);
      parent[y] = x;
      queue.push_back(y);
    }
  }
  if (!seen.contains(b)) return {};
  std::vector<int> path;
  for (int x = b; x != -1; x = parent[x]) path.push_back(x);
  std::reverse(path.begin(), path.end());
  return path;
}

/// Induced cycle of length >= 4 in a symmetric digraph known to be
/// non-chordal: close a shortest a-b path around v that avoids the rest of
/// N[v], for non-adjacent neighbours a, b of v.
std::vector<int> long_induced_cycle(const Digraph& g) {
  for (int v = 0; v < g.order(); ++v) {
    const VertexSet nb = g.nbrs(v);
    for (int a : nb) {
      for (int b : nb - g.nbrs(a) - VertexSet::range(a + 1)) {
        VertexSet allowed = g.vertices() - nb - VertexSet::single(v);
        allowed.insert(a);
        allowed.insert(b);
        auto path = shortest_path(g, a, b, allowed);
        if (path.empty()) continue;
        path.insert(path.begin(), v);
        return normalize_cycle(std::move(path), true);
      }
    }
  }
  return {};
}

}  // namespace

std::vector<ForbiddenWitness> scan_figure1(const Digraph& d) {
  std::vector<ForbiddenWitness> found;
  for_each_figure1(d, [&](WitnessKind kind, const std::vector<int>& at) {
    found.push_back({kind, at});
    return true;
  });
  return found;
}

std::optional<ForbiddenWitness> first_figure1(const Digraph& d) {
  std::optional<ForbiddenWitness> found;
  for_each_figure1(d, [&](WitnessKind kind, const std::vector<int>& at) {
    found = ForbiddenWitness{kind, at};
    return false;
  });
  return found;
}

std::optional<ForbiddenWitness> find_induced_nonsymmetric_cycle(const Digraph& d, int min_len) {
  if (min_len < 3) throw UsageError("cycle length bound must be at least 3");
  for (int length = min_len; length <= d.order(); ++length) {
    for (int start = 0; start < d.order(); ++start) {
      std::vector<int> path{start};
      if (extend_cycle(d, length, path, VertexSet::single(start), VertexSet{})) {
        return ForbiddenWitness{WitnessKind::NonSymmetricInducedCycle, std::move(path)};
      }
    }
  }
  return std::nullopt;
}

ForbiddenCheck is_sd_chordal(const Digraph& d) {
  const Digraph s = symmetric_part(d);
  if (is_chordal(s)) return {};
  auto cycle = long_induced_cycle(s);
  if (cycle.empty()) {
    throw InvariantViolation("S(D) failed elimination but no induced long cycle was found");
  }
  return {false, ForbiddenWitness{WitnessKind::SymmetricInducedLongCycle, std::move(cycle)}};
}

bool is_chordal_graph(const Digraph& g) {
  const int n = g.order();
  std::vector<int> weight(static_cast<std::size_t>(n), 0);
  std::vector<int> visit;
  VertexSet unvisited = g.vertices();
  while (!unvisited.empty()) {
    int best = unvisited.min();
    for (int v : unvisited) {
      if (weight[v] > weight[best]) best = v;
    }
    visit.push_back(best);
    unvisited.erase(best);
    for (int u : g.nbrs(best) & unvisited) ++weight[u];
  }
  // Eliminate in reverse visit order: the neighbours still present must be
  // pairwise adjacent.
  VertexSet remaining = g.vertices();
  for (auto it = visit.rbegin(); it != visit.rend(); ++it) {
    remaining.erase(*it);
    const VertexSet later = g.nbrs(*it) & remaining;
    for (int x : later) {
      if (!(later - VertexSet::single(x)).subset_of(g.nbrs(x))) return false;
    }
  }
  return true;
}

bool verify_witness(const Digraph& d, const ForbiddenWitness& w) {
  const auto& vs = w.vertices;
  for (int v : vs) {
    if (v < 0 || v >= d.order()) return false;
  }
  if (VertexSet::from(vs).size() != static_cast<int>(vs.size())) return false;
  const auto k = static_cast<int>(vs.size());

  switch (w.kind) {
    case WitnessKind::Fig1A:
    case WitnessKind::Fig1B:
    case WitnessKind::Fig1C:
    case WitnessKind::Fig1D: {
      const Digraph& pattern = figure1_pattern(w.kind);
      return k == pattern.order() && embeds(d, pattern, vs);
    }
    case WitnessKind::NonSymmetricInducedCycle:
    case WitnessKind::SymmetricInducedLongCycle: {
      const bool sym = w.kind == WitnessKind::SymmetricInducedLongCycle;
      if (k < (sym ? 4 : 3)) return false;
      for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
          const bool consecutive = j == i + 1 || (i == 0 && j == k - 1);
          const PairRelation r = d.relation(vs[i], vs[j]);
          if (sym) {
            if (consecutive != (r == PairRelation::Symmetric)) return false;
          } else if (!consecutive) {
            if (r != PairRelation::NonAdjacent) return false;
          } else {
            // The cycle runs vs[i] -> vs[i+1] and vs[k-1] -> vs[0].
            const PairRelation want = j == i + 1 ? PairRelation::Forward : PairRelation::Backward;
            if (r != want) return false;
          }
        }
      }
      return true;
    }
  }
  return false;
}

namespace {

ForbiddenCheck characterize(const Digraph& d, bool with_cycles) {
  if (auto sd = is_sd_chordal(d); !sd) return sd;
  if (auto fig = first_figure1(d)) return {false, std::move(fig)};
  if (with_cycles) {
    // Length-3 non-symmetric cycles are Fig1D and were reported above.
    if (auto cycle = find_induced_nonsymmetric_cycle(d, 3)) return {false, std::move(cycle)};
  }
  return {};
}

}  // namespace

ForbiddenCheck semicomplete_chordal_characterization(const Digraph& d) {
  require_class(d, ClassLabel::Semicomplete);
  return characterize(d, false);
}

ForbiddenCheck lsd_chordal_characterization(const Digraph& d) {
  require_class(d, ClassLabel::LocallySemicomplete);
  return characterize(d, true);
}

ForbiddenCheck wqt_chordal_characterization(const Digraph& d) {
  require_class(d, ClassLabel::WeaklyQuasiTransitive);
  return characterize(d, false);
}

}  // namespace dichord

#include "dichord/chordality.hpp"

#include <string>

#include "dichord/classes.hpp"
#include "dichord/errors.hpp"
#include "dichord/forbidden.hpp"

namespace dichord {

namespace {

void check_vertex(const Digraph& d, int v) {
  if (v < 0 || v >= d.order()) {
    throw UsageError("vertex " + std::to_string(v) + " out of range for n = " +
                     std::to_string(d.order()));
  }
}

/// Out-neighbours of v (within `within`) that u fails to reach.
VertexSet missed_by(const Digraph& d, int u, int v, VertexSet within) {
  return (d.out(v) & within) - VertexSet::single(u) - d.out(u);
}

std::optional<ViolatingTriple> first_triple(const Digraph& d, int v, VertexSet within) {
  for (int u : d.in(v) & within) {
    if (VertexSet missed = missed_by(d, u, v, within); !missed.empty()) {
      return ViolatingTriple{u, v, missed.min()};
    }
  }
  return std::nullopt;
}

bool is_violating(const Digraph& d, const ViolatingTriple& t) {
  const int n = d.order();
  if (t.u < 0 || t.u >= n || t.v < 0 || t.v >= n || t.w < 0 || t.w >= n) return false;
  if (t.u == t.w || t.u == t.v || t.v == t.w) return false;
  return d.has_arc(t.u, t.v) && d.has_arc(t.v, t.w) && !d.has_arc(t.u, t.w);
}

std::string describe(const ViolatingTriple& t) {
  return "(" + std::to_string(t.u) + ", " + std::to_string(t.v) + ", " + std::to_string(t.w) + ")";
}

/// Replaces u by a vertex that is di-simplicial in S(D), walking through
/// S(D) - (N-[w] & N+[w]). Leaves the triple alone when uv is symmetric.
ViolatingTriple canonical_tail(const Digraph& d, const Digraph& sym, ViolatingTriple t) {
  if (d.symmetric_pair(t.u, t.v)) return t;
  if (is_di_simplicial(sym, t.u)) return t;

  const VertexSet allowed = d.vertices() - sym.nbrs(t.w) - VertexSet::single(t.w);
  std::vector<int> parent(static_cast<std::size_t>(d.order()), -1);
  std::vector<int> queue{t.u};
  VertexSet seen = VertexSet::single(t.u);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (int y : (sym.nbrs(queue[head]) & allowed) - seen) {
      seen.insert(y);
      parent[y] = queue[head];
      queue.push_back(y);
    }
  }

  // Pick the first vertex of the component of u that is di-simplicial
  // in all of S(D).
  int target = -1;
  for (int c : seen) {
    if (is_di_simplicial(sym, c)) {
      target = c;
      break;
    }
  }
  if (target < 0) {
    throw InvariantViolation("no vertex of the component of " + std::to_string(t.u) +
                             " is di-simplicial in S(D)");
  }

  std::vector<int> path;
  for (int x = target; x != -1; x = parent[x]) path.push_back(x);
  // path runs target .. u; walk it from u.
  for (auto it = path.rbegin(); it != path.rend(); ++it) {
    const ViolatingTriple step{*it, t.v, t.w};
    if (!is_violating(d, step) || d.symmetric_pair(step.u, step.v)) {
      throw InvariantViolation("walk from " + describe(t) + " lost the violating triple at " +
                               describe(step));
    }
  }
  return {target, t.v, t.w};
}

void check_hypotheses(const Digraph& d, const Digraph& sym, const ViolatingTriple& t) {
  if (auto lsd = is_locally_semicomplete(d); !lsd) throw NotInClassError(*lsd.witness);
  if (!is_sd_chordal(d)) throw PreconditionError("S(D) is not chordal");
  if (auto fig = first_figure1(d)) {
    throw PreconditionError("digraph contains the induced pattern " +
                            std::string(to_string(fig->kind)));
  }
  if (find_induced_nonsymmetric_cycle(d, 3)) {
    throw PreconditionError("digraph contains an induced non-symmetric directed cycle");
  }
  if (!is_di_simplicial(sym, t.v)) {
    throw PreconditionError("vertex " + std::to_string(t.v) + " is not di-simplicial in S(D)");
  }
}

}  // namespace

DiSimplicialCheck is_di_simplicial(const Digraph& d, int v) {
  check_vertex(d, v);
  if (auto t = first_triple(d, v, d.vertices())) return {false, t};
  return {};
}

bool is_di_simplicial_within(const Digraph& d, int v, VertexSet within) {
  for (int u : d.in(v) & within) {
    if (!missed_by(d, u, v, within).empty()) return false;
  }
  return true;
}

std::vector<ViolatingTriple> violating_triples(const Digraph& d, int v) {
  check_vertex(d, v);
  std::vector<ViolatingTriple> result;
  for (int u : d.in(v)) {
    for (int w : missed_by(d, u, v, d.vertices())) result.push_back({u, v, w});
  }
  return result;
}

std::string_view to_string(VertexType t) {
  switch (t) {
    case VertexType::Type1:
      return "Type1";
    case VertexType::Type2:
      return "Type2";
    case VertexType::NoViolation:
      return "NoViolation";
  }
  return "?";
}

VertexType vertex_type(const Digraph& d, int v) {
  const auto triples = violating_triples(d, v);
  if (triples.empty()) return VertexType::NoViolation;
  for (const auto& t : triples) {
    if (d.symmetric_pair(t.u, t.v) || d.symmetric_pair(t.v, t.w)) return VertexType::Type2;
  }
  return VertexType::Type1;
}

ChordalityCertificate greedy_eliminate(const Digraph& d) {
  VertexSet residual = d.vertices();
  PerfectEliminationOrdering peo;
  while (!residual.empty()) {
    int chosen = -1;
    for (int v : residual) {
      if (is_di_simplicial_within(d, v, residual)) {
        chosen = v;
        break;
      }
    }
    if (chosen < 0) {
      StuckCertificate stuck{residual, {}};
      for (int v : residual) stuck.triples.push_back(*first_triple(d, v, residual));
      return stuck;
    }
    peo.order.push_back(chosen);
    residual.erase(chosen);
  }
  return peo;
}

bool is_chordal(const Digraph& d) {
  return std::holds_alternative<PerfectEliminationOrdering>(greedy_eliminate(d));
}

PeoCheck verify_peo(const Digraph& d, std::span<const int> order) {
  VertexSet seen;
  for (int v : order) {
    if (v < 0 || v >= d.order() || seen.contains(v)) {
      throw UsageError("ordering is not a permutation of the vertices");
    }
    seen.insert(v);
  }
  if (seen != d.vertices()) throw UsageError("ordering is not a permutation of the vertices");

  VertexSet residual = d.vertices();
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (!is_di_simplicial_within(d, order[i], residual)) return {false, i};
    residual.erase(order[i]);
  }
  return {};
}

bool is_canonical(const Digraph& d, const ViolatingTriple& t) {
  if (!is_violating(d, t)) return false;
  const Digraph sym = symmetric_part(d);
  const bool tail_ok = d.symmetric_pair(t.u, t.v) || is_di_simplicial(sym, t.u);
  const bool head_ok = d.symmetric_pair(t.v, t.w) || is_di_simplicial(sym, t.w);
  return tail_ok && head_ok;
}

ViolatingTriple canonicalize_violating_triple(const Digraph& d, ViolatingTriple t,
                                              CanonicalizeOptions opts) {
  if (!is_violating(d, t)) throw UsageError(describe(t) + " is not a violating triple");
  const Digraph sym = symmetric_part(d);
  if (opts.verify_preconditions) check_hypotheses(d, sym, t);

  t = canonical_tail(d, sym, t);

  // Head side: in the reversed digraph (w, v, u) is violating and S is unchanged.
  const ViolatingTriple flipped =
      canonical_tail(reversed(d), sym, ViolatingTriple{t.w, t.v, t.u});
  t = {flipped.w, flipped.v, flipped.u};

  if (!is_canonical(d, t)) {
    throw InvariantViolation("canonicalization produced non-canonical triple " + describe(t));
  }
  return t;
}

}  // namespace dichord

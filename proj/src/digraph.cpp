#include "dichord/digraph.hpp"

#include <algorithm>
#include <string>

#include "dichord/errors.hpp"

namespace dichord {

std::string_view to_string(PairRelation r) {
  switch (r) {
    case PairRelation::NonAdjacent:
      return "NonAdjacent";
    case PairRelation::Forward:
      return "Forward";
    case PairRelation::Backward:
      return "Backward";
    case PairRelation::Symmetric:
      return "Symmetric";
  }
  return "?";
}

Digraph::Digraph(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices) {
    throw UsageError("vertex count " + std::to_string(n) + " outside [0, " +
                     std::to_string(kMaxVertices) + "]");
  }
  out_.assign(static_cast<std::size_t>(n), 0);
  in_.assign(static_cast<std::size_t>(n), 0);
}

Digraph Digraph::from_arcs(int n, std::span<const Arc> arcs) {
  Digraph d(n);
  for (const Arc& a : arcs) d.add_arc(a.tail, a.head);
  return d;
}

void Digraph::check_pair(int u, int v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_) {
    throw UsageError("vertex pair (" + std::to_string(u) + ", " + std::to_string(v) +
                     ") out of range for n = " + std::to_string(n_));
  }
  if (u == v) throw UsageError("loop at vertex " + std::to_string(u));
}

void Digraph::add_arc(int u, int v) {
  check_pair(u, v);
  out_[u] |= std::uint64_t{1} << v;
  in_[v] |= std::uint64_t{1} << u;
}

void Digraph::remove_arc(int u, int v) {
  check_pair(u, v);
  out_[u] &= ~(std::uint64_t{1} << v);
  in_[v] &= ~(std::uint64_t{1} << u);
}

void Digraph::set_relation(int u, int v, PairRelation r) {
  remove_arc(u, v);
  remove_arc(v, u);
  if (r == PairRelation::Forward || r == PairRelation::Symmetric) add_arc(u, v);
  if (r == PairRelation::Backward || r == PairRelation::Symmetric) add_arc(v, u);
}

std::vector<Arc> Digraph::arcs() const {
  std::vector<Arc> result;
  for (int u = 0; u < n_; ++u) {
    for (int v : out(u)) result.push_back({u, v});
  }
  return result;
}

int Digraph::arc_count() const {
  int total = 0;
  for (auto row : out_) total += std::popcount(row);
  return total;
}

namespace {

void check_vertex(const Digraph& d, int v) {
  if (v < 0 || v >= d.order()) {
    throw UsageError("vertex " + std::to_string(v) + " out of range for n = " +
                     std::to_string(d.order()));
  }
}

}  // namespace

PairRelation pair_relation(const Digraph& d, int u, int v) {
  check_vertex(d, u);
  check_vertex(d, v);
  if (u == v) throw UsageError("pair_relation needs two distinct vertices");
  return d.relation(u, v);
}

VertexSet in_nbrs(const Digraph& d, int v) {
  check_vertex(d, v);
  return d.in(v);
}

VertexSet out_nbrs(const Digraph& d, int v) {
  check_vertex(d, v);
  return d.out(v);
}

Digraph symmetric_part(const Digraph& d) {
  Digraph s(d.order());
  for (int u = 0; u < d.order(); ++u) {
    for (int v : d.sym_nbrs(u)) s.add_arc(u, v);
  }
  return s;
}

Digraph underlying_graph(const Digraph& d) {
  Digraph g(d.order());
  for (int u = 0; u < d.order(); ++u) {
    for (int v : d.nbrs(u)) g.add_arc(u, v);
  }
  return g;
}

Digraph complement_graph(const Digraph& d) {
  Digraph g(d.order());
  for (int u = 0; u < d.order(); ++u) {
    for (int v : d.vertices() - d.nbrs(u) - VertexSet::single(u)) g.add_arc(u, v);
  }
  return g;
}

Digraph reversed(const Digraph& d) {
  Digraph r(d.order());
  for (const Arc& a : d.arcs()) r.add_arc(a.head, a.tail);
  return r;
}

InducedSubdigraph induced_subdigraph(const Digraph& d, VertexSet s) {
  if (!s.subset_of(d.vertices())) {
    throw UsageError("vertex set is not contained in the digraph's vertices");
  }
  InducedSubdigraph result{Digraph(s.size()), s.to_vector()};
  const auto& labels = result.labels;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    for (std::size_t j = 0; j < labels.size(); ++j) {
      if (i != j && d.has_arc(labels[i], labels[j])) {
        result.digraph.add_arc(static_cast<int>(i), static_cast<int>(j));
      }
    }
  }
  return result;
}

Digraph substitution(const Digraph& host, std::span<const Digraph> parts) {
  if (static_cast<int>(parts.size()) != host.order()) {
    throw UsageError("substitution needs one part per host vertex (" +
                     std::to_string(host.order()) + "), got " + std::to_string(parts.size()));
  }
  std::vector<int> offset(parts.size() + 1, 0);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].order() == 0) {
      throw UsageError("substituted part " + std::to_string(i) + " is empty");
    }
    offset[i + 1] = offset[i] + parts[i].order();
  }
  if (offset.back() > kMaxVertices) {
    throw UsageError("substitution result exceeds " + std::to_string(kMaxVertices) + " vertices");
  }
  Digraph result(offset.back());
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (const Arc& a : parts[i].arcs()) result.add_arc(offset[i] + a.tail, offset[i] + a.head);
  }
  for (const Arc& a : host.arcs()) {
    for (int x = offset[a.tail]; x < offset[a.tail + 1]; ++x) {
      for (int y = offset[a.head]; y < offset[a.head + 1]; ++y) result.add_arc(x, y);
    }
  }
  return result;
}

Digraph relabeled(const Digraph& d, std::span<const int> labels) {
  if (static_cast<int>(labels.size()) != d.order()) {
    throw UsageError("relabeling has the wrong length");
  }
  VertexSet seen;
  for (int l : labels) {
    if (l < 0 || l >= d.order() || seen.contains(l)) {
      throw UsageError("relabeling is not a permutation");
    }
    seen.insert(l);
  }
  Digraph r(d.order());
  for (const Arc& a : d.arcs()) r.add_arc(labels[a.tail], labels[a.head]);
  return r;
}

bool synchronous(const Digraph& d, int v, int u, int w) {
  check_vertex(d, v);
  check_vertex(d, u);
  check_vertex(d, w);
  if (u == w) throw UsageError("synchronous needs two distinct neighbours");
  if (!d.adjacent(v, u) || !d.adjacent(v, w)) {
    throw UsageError("synchronous: both vertices must be neighbours of " + std::to_string(v));
  }
  // Both vertices lie in the same cell iff they see v through the same relation.
  return d.relation(v, u) == d.relation(v, w);
}

}  // namespace dichord

#ifndef DICHORD_DIGRAPH_HPP
#define DICHORD_DIGRAPH_HPP

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "dichord/vertex_set.hpp"

namespace dichord {

struct Arc {
  int tail;
  int head;
  friend bool operator==(const Arc&, const Arc&) = default;
};

/// State of an unordered pair {u, v}, read from u's side: Forward means only
/// u->v, Backward only v->u.
enum class PairRelation : std::uint8_t { NonAdjacent, Forward, Backward, Symmetric };

std::string_view to_string(PairRelation r);

constexpr PairRelation mirror(PairRelation r) {
  switch (r) {
    case PairRelation::Forward:
      return PairRelation::Backward;
    case PairRelation::Backward:
      return PairRelation::Forward;
    default:
      return r;
  }
}

/// Loop-free digraph on vertices 0..n-1 stored as a dense adjacency bit
/// matrix (one word per row, both directions). Digons are allowed.
///
/// Member accessors do not range-check; the free functions below do.
class Digraph {
 public:
  Digraph() = default;
  /// Edgeless digraph on n vertices; n in [0, kMaxVertices].
  explicit Digraph(int n);
  static Digraph from_arcs(int n, std::span<const Arc> arcs);
  static Digraph from_arcs(int n, std::initializer_list<Arc> arcs) {
    return from_arcs(n, std::span<const Arc>(arcs.begin(), arcs.size()));
  }

  int order() const { return n_; }
  VertexSet vertices() const { return VertexSet::range(n_); }

  bool has_arc(int u, int v) const { return (out_[u] >> v) & 1U; }
  bool adjacent(int u, int v) const { return ((out_[u] | in_[u]) >> v) & 1U; }
  bool symmetric_pair(int u, int v) const { return ((out_[u] & in_[u]) >> v) & 1U; }
  PairRelation relation(int u, int v) const {
    return static_cast<PairRelation>(static_cast<int>(has_arc(u, v)) |
                                     (static_cast<int>(has_arc(v, u)) << 1));
  }

  VertexSet out(int v) const { return VertexSet(out_[v]); }
  VertexSet in(int v) const { return VertexSet(in_[v]); }
  /// Vertices joined to v by at least one arc.
  VertexSet nbrs(int v) const { return VertexSet(out_[v] | in_[v]); }
  /// Vertices joined to v by a digon.
  VertexSet sym_nbrs(int v) const { return VertexSet(out_[v] & in_[v]); }

  /// Throws UsageError on loops or out-of-range endpoints. Idempotent.
  void add_arc(int u, int v);
  void remove_arc(int u, int v);
  void set_relation(int u, int v, PairRelation r);

  std::vector<Arc> arcs() const;
  int arc_count() const;

  friend bool operator==(const Digraph&, const Digraph&) = default;

 private:
  void check_pair(int u, int v) const;

  int n_ = 0;
  std::vector<std::uint64_t> out_;
  std::vector<std::uint64_t> in_;
};

// Checked queries. Out-of-range vertices (and u == v for pairs) raise UsageError.
PairRelation pair_relation(const Digraph& d, int u, int v);
VertexSet in_nbrs(const Digraph& d, int v);
VertexSet out_nbrs(const Digraph& d, int v);

/// Spanning subdigraph of the symmetric arcs.
Digraph symmetric_part(const Digraph& d);
/// Symmetric digraph with a digon on every adjacent pair of d.
Digraph underlying_graph(const Digraph& d);
/// Symmetric digraph with a digon on every non-adjacent pair of d.
Digraph complement_graph(const Digraph& d);
/// Every arc reversed.
Digraph reversed(const Digraph& d);

/// Induced subdigraph together with the original label of each new vertex
/// (labels[i] is the host vertex that became vertex i; labels ascend).
struct InducedSubdigraph {
  Digraph digraph;
  std::vector<int> labels;
};

InducedSubdigraph induced_subdigraph(const Digraph& d, VertexSet s);

/// d[parts[0], ..., parts[n-1]]. The vertices of parts[i] occupy a
/// contiguous block, blocks in host order.
Digraph substitution(const Digraph& host, std::span<const Digraph> parts);

/// Relabel: vertex i of d becomes labels[i]. labels must be a permutation.
Digraph relabeled(const Digraph& d, std::span<const int> labels);

/// True iff u and w fall in the same cell of {N-(v)\N+(v), N+(v)\N-(v),
/// N-(v) & N+(v)}. Both must be neighbours of v and distinct.
bool synchronous(const Digraph& d, int v, int u, int w);

}  // namespace dichord

#endif  // DICHORD_DIGRAPH_HPP

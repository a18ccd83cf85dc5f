#ifndef DICHORD_CHORDALITY_HPP
#define DICHORD_CHORDALITY_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "dichord/digraph.hpp"

namespace dichord {

/// u in N-(v), w in N+(v), u != w, and u->w missing.
struct ViolatingTriple {
  int u;
  int v;
  int w;
  friend bool operator==(const ViolatingTriple&, const ViolatingTriple&) = default;
};

struct DiSimplicialCheck {
  bool holds = true;
  std::optional<ViolatingTriple> triple;
  explicit operator bool() const { return holds; }
};

/// On failure returns the lexicographically first violating triple (by u, then w).
DiSimplicialCheck is_di_simplicial(const Digraph& d, int v);

/// Di-simplicial in the subdigraph induced by `within` (v must be a member).
bool is_di_simplicial_within(const Digraph& d, int v, VertexSet within);

/// All violating triples for v, ordered by (u, w).
std::vector<ViolatingTriple> violating_triples(const Digraph& d, int v);

enum class VertexType { Type1, Type2, NoViolation };
std::string_view to_string(VertexType t);

/// Type1: every violating triple has uv and vw non-symmetric.
/// Type2: some violating triple has uv or vw symmetric.
VertexType vertex_type(const Digraph& d, int v);

struct PerfectEliminationOrdering {
  std::vector<int> order;
  friend bool operator==(const PerfectEliminationOrdering&,
                         const PerfectEliminationOrdering&) = default;
};

/// Elimination got stuck: no vertex of `residual` is di-simplicial in the
/// subdigraph it induces. One triple per residual vertex, ascending v.
struct StuckCertificate {
  VertexSet residual;
  std::vector<ViolatingTriple> triples;
  friend bool operator==(const StuckCertificate&, const StuckCertificate&) = default;
};

using ChordalityCertificate = std::variant<PerfectEliminationOrdering, StuckCertificate>;

/// Repeatedly removes the smallest di-simplicial vertex of what is left.
///
/// Any tie-break works: every induced subdigraph of a chordal digraph is
/// chordal, so elimination cannot stall on one; and when it finishes, the
/// first-eliminated vertex of any induced subdigraph H is di-simplicial in H
/// because its neighbourhoods within H shrink. So the result is a PEO
/// exactly when d is chordal.
ChordalityCertificate greedy_eliminate(const Digraph& d);

bool is_chordal(const Digraph& d);

struct PeoCheck {
  bool valid = true;
  std::optional<std::size_t> failing_index;
  explicit operator bool() const { return valid; }
};

/// Checks position by position. Throws UsageError if `order` is not a
/// permutation of the vertices.
PeoCheck verify_peo(const Digraph& d, std::span<const int> order);

/// u is di-simplicial in S(D) whenever uv is non-symmetric, and w is
/// di-simplicial in S(D) whenever vw is non-symmetric.
bool is_canonical(const Digraph& d, const ViolatingTriple& t);

struct CanonicalizeOptions {
  /// Check the full hypotheses first (locally semicomplete, S(D) chordal,
  /// no induced non-symmetric directed cycle, no Figure-1 pattern, v
  /// di-simplicial in S(D)). Exponential; off by default.
  bool verify_preconditions = false;
};

/// Moves a violating triple for v to a canonical one for the same v.
///
/// The u-side walks inside S(D) minus the digon-closed neighbourhood of w
/// from u to a vertex of u's component that is di-simplicial in S(D),
/// checking that the triple survives every step. The w-side reruns the same
/// walk on the reversed digraph. Throws PreconditionError when verification
/// is on and a hypothesis fails, and InvariantViolation if the walk breaks.
ViolatingTriple canonicalize_violating_triple(const Digraph& d, ViolatingTriple t,
                                              CanonicalizeOptions opts = {});

}  // namespace dichord

#endif  // DICHORD_CHORDALITY_HPP

#ifndef DICHORD_FORBIDDEN_HPP
#define DICHORD_FORBIDDEN_HPP

#include <optional>
#include <string_view>
#include <vector>

#include "dichord/digraph.hpp"

namespace dichord {

enum class WitnessKind {
  Fig1A,
  Fig1B,
  Fig1C,
  Fig1D,
  NonSymmetricInducedCycle,
  SymmetricInducedLongCycle,
};

std::string_view to_string(WitnessKind k);

/// An induced copy of a forbidden digraph. For the Figure-1 kinds, vertex i
/// of the pattern (see fixtures::fig1_*) maps to vertices[i]. For the cycle
/// kinds, vertices lists the cycle starting at its smallest vertex.
struct ForbiddenWitness {
  WitnessKind kind;
  std::vector<int> vertices;
  friend bool operator==(const ForbiddenWitness&, const ForbiddenWitness&) = default;
};

struct ForbiddenCheck {
  bool holds = true;
  std::optional<ForbiddenWitness> witness;
  explicit operator bool() const { return holds; }
};

/// Pattern digraph for the four Figure-1 kinds.
const Digraph& figure1_pattern(WitnessKind k);

/// Every induced occurrence of patterns a, b, c (4 vertices) and d (3
/// vertices), one witness per vertex set, ordered by kind then by vertex
/// set. Within a set the lexicographically first embedding is reported.
std::vector<ForbiddenWitness> scan_figure1(const Digraph& d);
std::optional<ForbiddenWitness> first_figure1(const Digraph& d);

/// Shortest induced directed cycle of non-symmetric arcs with length at
/// least min_len (>= 3), lexicographically least among the shortest.
/// Worst-case exponential.
std::optional<ForbiddenWitness> find_induced_nonsymmetric_cycle(const Digraph& d, int min_len);

/// Whether S(D) is chordal; the witness is an induced cycle of length >= 4
/// in S(D) when it is not.
ForbiddenCheck is_sd_chordal(const Digraph& d);

/// Classical check for a symmetric digraph viewed as a graph: maximum
/// cardinality search, then test that the reversed visit order is a
/// simplicial elimination ordering. Kept as a cross-check for is_sd_chordal.
bool is_chordal_graph(const Digraph& g);

/// Re-checks a witness against d by direct inspection.
bool verify_witness(const Digraph& d, const ForbiddenWitness& w);

// Forbidden-subdigraph characterizations. Each throws NotInClassError when
// d is outside the class it is stated for.

/// Semicomplete d: S(D) chordal and no Figure-1 pattern.
ForbiddenCheck semicomplete_chordal_characterization(const Digraph& d);
/// Locally semicomplete d: additionally no induced non-symmetric directed cycle.
ForbiddenCheck lsd_chordal_characterization(const Digraph& d);
/// Weakly quasi-transitive d: S(D) chordal and no Figure-1 pattern.
ForbiddenCheck wqt_chordal_characterization(const Digraph& d);

}  // namespace dichord

#endif  // DICHORD_FORBIDDEN_HPP

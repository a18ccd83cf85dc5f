#ifndef DICHORD_ORACLES_HPP
#define DICHORD_ORACLES_HPP

#include "dichord/digraph.hpp"

// Brute-force restatements of definitions. They share no code with the
// algorithms they cross-check, and are exponential in n.
namespace dichord::oracles {

/// Every non-empty vertex subset induces a digraph with a di-simplicial vertex.
bool chordal_by_definition(const Digraph& d);

/// Some subset of >= 4 vertices induces a cycle in the graph of adjacent
/// pairs of g.
bool has_induced_long_cycle(const Digraph& g);

/// Some partition of V into independent blocks has every pair of blocks
/// joined uniformly, with at least one arc direction present.
bool extended_semicomplete_by_partition(const Digraph& d);

}  // namespace dichord::oracles

#endif  // DICHORD_ORACLES_HPP

#ifndef DICHORD_FIXTURES_HPP
#define DICHORD_FIXTURES_HPP

#include "dichord/digraph.hpp"

// Named small digraphs used throughout tests, goldens and the CLI.
namespace dichord::fixtures {

// The four minimal semicomplete non-chordal digraphs, 0-based.
//   a: 0->1, 1->2, 2<->3, 3->0, 0<->2, 1<->3
//   b: 0->1, 1->2, 2->3,  3->0, 0<->2, 1<->3
//   c: 0->1, 1->2, 3->2,  3->0, 0<->2, 1<->3
//   d: 0->1, 1->2, 2->0
Digraph fig1_a();
Digraph fig1_b();
Digraph fig1_c();
Digraph fig1_d();

Digraph single_vertex();
Digraph edgeless(int n);
/// Two vertices joined by a digon.
Digraph digon();
/// Transitive tournament 0->1, 1->2, 0->2.
Digraph tt3();
/// Directed cycle 0->1->...->n-1->0 of non-symmetric arcs.
Digraph directed_cycle(int n);
/// Cycle 0-1-...-(n-1)-0 of digons.
Digraph symmetric_cycle(int n);
/// Path 0-1-...-(n-1) of digons.
Digraph symmetric_path(int n);
/// Transitive tournament on n vertices, i->j for i<j.
Digraph transitive_tournament(int n);

inline Digraph c3o() { return fig1_d(); }
inline Digraph c4o() { return directed_cycle(4); }
inline Digraph c4s() { return symmetric_cycle(4); }

}  // namespace dichord::fixtures

#endif  // DICHORD_FIXTURES_HPP

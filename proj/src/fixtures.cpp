#include "dichord/fixtures.hpp"

namespace dichord::fixtures {

Digraph fig1_a() {
  return Digraph::from_arcs(
      4, {{0, 1}, {1, 2}, {2, 3}, {3, 2}, {3, 0}, {0, 2}, {2, 0}, {1, 3}, {3, 1}});
}

Digraph fig1_b() {
  return Digraph::from_arcs(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}, {2, 0}, {1, 3}, {3, 1}});
}

Digraph fig1_c() {
  return Digraph::from_arcs(4, {{0, 1}, {1, 2}, {3, 2}, {3, 0}, {0, 2}, {2, 0}, {1, 3}, {3, 1}});
}

Digraph fig1_d() { return Digraph::from_arcs(3, {{0, 1}, {1, 2}, {2, 0}}); }

Digraph single_vertex() { return Digraph(1); }

Digraph edgeless(int n) { return Digraph(n); }

Digraph digon() { return Digraph::from_arcs(2, {{0, 1}, {1, 0}}); }

Digraph tt3() { return transitive_tournament(3); }

Digraph directed_cycle(int n) {
  Digraph d(n);
  for (int i = 0; i < n; ++i) d.add_arc(i, (i + 1) % n);
  return d;
}

Digraph symmetric_cycle(int n) {
  Digraph d(n);
  for (int i = 0; i < n; ++i) d.set_relation(i, (i + 1) % n, PairRelation::Symmetric);
  return d;
}

Digraph symmetric_path(int n) {
  Digraph d(n);
  for (int i = 0; i + 1 < n; ++i) d.set_relation(i, i + 1, PairRelation::Symmetric);
  return d;
}

Digraph transitive_tournament(int n) {
  Digraph d(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) d.add_arc(i, j);
  }
  return d;
}

}  // namespace dichord::fixtures

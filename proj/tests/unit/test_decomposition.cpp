#include <doctest.h>

#include <map>

#include "dichord/classes.hpp"
#include "dichord/decomposition.hpp"
#include "dichord/errors.hpp"
#include "dichord/fixtures.hpp"
#include "dichord/generators.hpp"

using namespace dichord;

namespace {

bool def_module(const Digraph& d, VertexSet s) {
  for (int x = 0; x < d.order(); ++x) {
    if (s.contains(x)) continue;
    for (int a : s) {
      for (int b : s) {
        if (d.has_arc(x, a) != d.has_arc(x, b) || d.has_arc(a, x) != d.has_arc(b, x)) return false;
      }
    }
  }
  return true;
}

/// Every subset module check, for the minimality oracle.
VertexSet brute_smallest_module(const Digraph& d, VertexSet seed) {
  VertexSet best = d.vertices();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << d.order()); ++mask) {
    const VertexSet s(mask);
    if (seed.subset_of(s) && def_module(d, s) && s.size() < best.size()) best = s;
  }
  return best;
}

void check_round_trip(const Digraph& d) {
  const DecompTree t = decompose_wqt(d);
  CHECK(tree_is_valid(t));
  CHECK(tree_order(t) == d.order());
  CHECK(recompose(t) == d);
}

const std::vector<Digraph>& digon_example_parts() {
  static const std::vector<Digraph> parts{fixtures::edgeless(2), Digraph(1)};
  return parts;
}

}  // namespace

TEST_CASE("module checks") {
  const Digraph c4 = fixtures::c4o();
  CHECK(is_module(c4, VertexSet{2}));
  CHECK(is_module(c4, c4.vertices()));
  const auto r = is_module(c4, VertexSet{0, 1});
  CHECK_FALSE(r);
  CHECK(*r.splitter == 2);

  const Digraph s = substitution(fixtures::digon(), digon_example_parts());
  CHECK(is_module(s, VertexSet{0, 1}));
  CHECK_THROWS_AS(is_module(s, VertexSet{}), UsageError);
  CHECK_THROWS_AS(is_module(s, VertexSet{3}), UsageError);
}

TEST_CASE("smallest module containing a seed") {
  const Digraph c4 = fixtures::c4o();
  CHECK(smallest_module_containing(c4, VertexSet{1}).vertices == VertexSet{1});
  CHECK(smallest_module_containing(c4, VertexSet{0, 1}).vertices == c4.vertices());
  const Digraph s = substitution(fixtures::digon(), digon_example_parts());
  CHECK(smallest_module_containing(s, VertexSet{0, 1}).vertices == VertexSet{0, 1});

  Rng rng(14);
  for (int trial = 0; trial < 500; ++trial) {
    const Digraph d = gen_uniform(rng, rng.between(2, 7));
    const int a = rng.between(0, d.order() - 1);
    int b = rng.between(0, d.order() - 1);
    if (a == b) b = (a + 1) % d.order();
    const VertexSet seed{a, b};
    const Module m = smallest_module_containing(d, seed);
    CHECK(def_module(d, m.vertices));
    CHECK(m.vertices == brute_smallest_module(d, seed));
  }
}

TEST_CASE("non-trivial modules") {
  CHECK_FALSE(find_nontrivial_module(fixtures::c3o()));
  CHECK_FALSE(find_nontrivial_module(fixtures::c4o()));
  const Digraph s = substitution(fixtures::digon(), digon_example_parts());
  const auto m = find_nontrivial_module(s);
  REQUIRE(m.has_value());
  CHECK(m->vertices == VertexSet{0, 1});
  CHECK_THROWS_AS(find_nontrivial_module(Digraph(1)), UsageError);

  Rng rng(15);
  for (int trial = 0; trial < 500; ++trial) {
    const Digraph d = gen_uniform(rng, rng.between(2, 6));
    bool brute = false;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << d.order()) && !brute; ++mask) {
      const VertexSet s(mask);
      brute = s.size() >= 2 && s != d.vertices() && def_module(d, s);
    }
    const auto found = find_nontrivial_module(d);
    CHECK(found.has_value() == brute);
    if (found) {
      CHECK(def_module(d, found->vertices));
      CHECK(found->vertices.size() >= 2);
      CHECK(found->vertices != d.vertices());
    }
  }
}

TEST_CASE("module construction for weakly quasi-transitive digraphs") {
  CHECK_THROWS_AS(find_module_wqt(fixtures::c4s()), PreconditionError);
  CHECK_THROWS_AS(find_module_wqt(fixtures::tt3()), PreconditionError);
  CHECK_THROWS_AS(find_module_wqt(fixtures::c4o()), NotInClassError);

  // Symmetric path 0-1-2 dominated one-way by 3; then 0 is blown up into
  // an independent pair.
  const Digraph host =
      Digraph::from_arcs(4, {{0, 1}, {1, 0}, {1, 2}, {2, 1}, {3, 0}, {3, 1}, {3, 2}});
  REQUIRE(is_weakly_quasi_transitive(host));
  REQUIRE_FALSE(is_quasi_transitive(host));
  const std::vector<Digraph> parts{fixtures::edgeless(2), Digraph(1), Digraph(1), Digraph(1)};
  const Digraph blown = substitution(host, parts);
  REQUIRE(is_weakly_quasi_transitive(blown));
  const WqtModule m = find_module_wqt(blown);
  CHECK(def_module(blown, m.module.vertices));
  CHECK(m.module.vertices.size() >= 2);
  CHECK(m.module.vertices != blown.vertices());
  CHECK(def_module(blown, VertexSet{0, 1}));

  std::map<ModuleConstruction, int> seen;
  int tested = 0;
  for (std::uint64_t i = 0; i < 20000 && tested < 2000; ++i) {
    GenConfig cfg;
    cfg.n = 3 + static_cast<int>(i % 10);
    cfg.seed = 1;
    cfg.stream = i;
    cfg.depth = static_cast<int>(i % 4);
    const Digraph d = gen_wqt(cfg);
    if (is_quasi_transitive(d) || is_symmetric(d)) continue;
    ++tested;
    const WqtModule m = find_module_wqt(d);
    ++seen[m.construction];
    CHECK(def_module(d, m.module.vertices));
    CHECK(m.module.vertices.size() >= 2);
    CHECK(m.module.vertices != d.vertices());
    CHECK(find_nontrivial_module(d).has_value());
  }
  CHECK(tested >= 500);
  MESSAGE("constructions: CoComponent=", seen[ModuleConstruction::CoComponent],
          " OrientedFromCenter=", seen[ModuleConstruction::OrientedFromCenter],
          " SymmetricClosure=", seen[ModuleConstruction::SymmetricClosure],
          " OrientedFromArc=", seen[ModuleConstruction::OrientedFromArc]);
}

TEST_CASE("module construction on every eligible digraph up to five vertices") {
  for (int n = 3; n <= 5; ++n) {
    enumerate_digraphs(n, [](const Digraph& d) {
      if (!is_weakly_quasi_transitive(d) || is_quasi_transitive(d) || is_symmetric(d)) return;
      const WqtModule m = find_module_wqt(d);
      CHECK(def_module(d, m.module.vertices));
      CHECK(m.module.vertices.size() >= 2);
      CHECK(m.module.vertices != d.vertices());
    });
  }
}

TEST_CASE("leaf decompositions") {
  const DecompTree tt = decompose_wqt(fixtures::tt3());
  REQUIRE(tt.is_leaf());
  CHECK(tt.leaf().kind == LeafKind::TransitiveOriented);
  const DecompTree c4 = decompose_wqt(fixtures::c4s());
  REQUIRE(c4.is_leaf());
  CHECK(c4.leaf().kind == LeafKind::Symmetric);
  CHECK(leaf_kind(Digraph(1)) == LeafKind::TransitiveOriented);
  CHECK_THROWS_AS(decompose_wqt(fixtures::c4o()), NotInClassError);
}

TEST_CASE("the digon example is itself a symmetric leaf") {
  // Digon with one end replaced by an independent pair is the symmetric
  // path 0-2-1, so the leaf check fires before any module search.
  const Digraph s = substitution(fixtures::digon(), digon_example_parts());
  CHECK(is_symmetric(s));
  const DecompTree t = decompose_wqt(s);
  REQUIRE(t.is_leaf());
  CHECK(t.leaf().kind == LeafKind::Symmetric);
  CHECK(recompose(t) == s);

  const DecompTree node{DecompTree::Node{
      LeafKind::Symmetric,
      fixtures::digon(),
      {DecompTree{DecompTree::Leaf{LeafKind::TransitiveOriented, fixtures::edgeless(2), {0, 1}}},
       DecompTree{DecompTree::Leaf{LeafKind::TransitiveOriented, Digraph(1), {2}}}}}};
  CHECK(tree_is_valid(node));
  CHECK(recompose(node) == s);
}

TEST_CASE("a node decomposition") {
  // C3O with vertex 0 replaced by an independent pair: semicomplete quotient,
  // not a leaf class itself.
  const std::vector<Digraph> parts{fixtures::edgeless(2), Digraph(1), Digraph(1)};
  const Digraph d = substitution(fixtures::c3o(), parts);
  REQUIRE(leaf_kind(d) == std::nullopt);
  const DecompTree t = decompose_wqt(d);
  REQUIRE_FALSE(t.is_leaf());
  const auto& node = t.node();
  CHECK(node.quotient_kind == LeafKind::Semicomplete);
  CHECK(node.quotient == fixtures::c3o());
  REQUIRE(node.children.size() == 3);
  REQUIRE(node.children[0].is_leaf());
  CHECK(node.children[0].leaf().kind == LeafKind::TransitiveOriented);
  CHECK(node.children[0].leaf().digraph == fixtures::edgeless(2));
  CHECK(node.children[0].leaf().labels == std::vector<int>{0, 1});
  CHECK(tree_labels(t) == std::vector<int>{0, 1, 2, 3});
  CHECK(tree_depth(t) == 1);
  CHECK(recompose(t) == d);
}

TEST_CASE("malformed trees") {
  const DecompTree one_child{DecompTree::Node{
      LeafKind::TransitiveOriented, Digraph(1),
      {DecompTree{DecompTree::Leaf{LeafKind::TransitiveOriented, Digraph(1), {0}}}}}};
  CHECK_THROWS_AS(recompose(one_child), UsageError);
  CHECK_FALSE(tree_is_valid(one_child));

  const DecompTree arity{DecompTree::Node{
      LeafKind::Semicomplete, fixtures::c3o(),
      {DecompTree{DecompTree::Leaf{LeafKind::TransitiveOriented, Digraph(1), {0}}},
       DecompTree{DecompTree::Leaf{LeafKind::TransitiveOriented, Digraph(1), {1}}}}}};
  CHECK_THROWS_AS(recompose(arity), UsageError);

  const DecompTree labels{DecompTree::Node{
      LeafKind::Symmetric, fixtures::digon(),
      {DecompTree{DecompTree::Leaf{LeafKind::TransitiveOriented, Digraph(1), {0}}},
       DecompTree{DecompTree::Leaf{LeafKind::TransitiveOriented, Digraph(1), {0}}}}}};
  CHECK_THROWS_AS(recompose(labels), UsageError);

  const DecompTree wrong_kind{DecompTree::Leaf{LeafKind::Semicomplete, fixtures::edgeless(2), {0, 1}}};
  CHECK_FALSE(tree_is_valid(wrong_kind));
}

TEST_CASE("round trip on every weakly quasi-transitive digraph up to four vertices") {
  for (int n = 1; n <= 4; ++n) {
    enumerate_digraphs(n, [](const Digraph& d) {
      if (is_weakly_quasi_transitive(d)) check_round_trip(d);
    });
  }
}

TEST_CASE("round trip on generated digraphs") {
  for (std::uint64_t i = 0; i < 2000; ++i) {
    GenConfig cfg;
    cfg.n = 1 + static_cast<int>(i % 30);
    cfg.seed = 2;
    cfg.stream = i;
    cfg.depth = static_cast<int>(i % 4);
    check_round_trip(gen_wqt(cfg));
  }
}

TEST_CASE("recomposed random trees are weakly quasi-transitive") {
  // Build trees directly, independent of the generator's own recursion.
  Rng rng(16);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<DecompTree> children;
    int next_label = 0;
    const int k = rng.between(2, 4);
    GenConfig qcfg;
    qcfg.n = k;
    qcfg.seed = rng.next();
    qcfg.p = rng.unit();
    const Digraph quotient = rng.chance(0.5) ? gen_semicomplete(qcfg) : gen_symmetric(qcfg);
    for (int i = 0; i < k; ++i) {
      GenConfig cfg;
      cfg.n = rng.between(1, 3);
      cfg.seed = rng.next();
      cfg.p = rng.unit();
      const Digraph leaf = gen_transitive_oriented(cfg);
      std::vector<int> labels;
      for (int j = 0; j < leaf.order(); ++j) labels.push_back(next_label++);
      children.push_back(DecompTree{DecompTree::Leaf{*leaf_kind(leaf), leaf, labels}});
    }
    const DecompTree t{DecompTree::Node{*leaf_kind(quotient), quotient, std::move(children)}};
    REQUIRE(tree_is_valid(t));
    CHECK(is_weakly_quasi_transitive(recompose(t)));
  }
}

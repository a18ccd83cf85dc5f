#include "dichord/decomposition.hpp"

#include <algorithm>
#include <string>

#include "dichord/classes.hpp"
#include "dichord/errors.hpp"

namespace dichord {

std::string_view to_string(ModuleConstruction c) {
  switch (c) {
    case ModuleConstruction::CoComponent:
      return "CoComponent";
    case ModuleConstruction::OrientedFromCenter:
      return "OrientedFromCenter";
    case ModuleConstruction::SymmetricClosure:
      return "SymmetricClosure";
    case ModuleConstruction::OrientedFromArc:
      return "OrientedFromArc";
  }
  return "?";
}

std::string_view to_string(LeafKind k) {
  switch (k) {
    case LeafKind::TransitiveOriented:
      return "TransitiveOriented";
    case LeafKind::Semicomplete:
      return "Semicomplete";
    case LeafKind::Symmetric:
      return "Symmetric";
  }
  return "?";
}

namespace {

bool uniform_over(const Digraph& d, int x, VertexSet s) {
  const VertexSet out = d.out(x) & s;
  const VertexSet in = d.in(x) & s;
  return (out.empty() || out == s) && (in.empty() || in == s);
}

VertexSet splitters(const Digraph& d, VertexSet s) {
  VertexSet found;
  for (int x : d.vertices() - s) {
    if (!uniform_over(d, x, s)) found.insert(x);
  }
  return found;
}

/// Component of `from` under "joined by a non-symmetric arc".
VertexSet oriented_component(const Digraph& d, int from) {
  VertexSet seen = VertexSet::single(from);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    for (int x : frontier) next |= d.nbrs(x) - d.sym_nbrs(x);
    frontier = next - seen;
    seen |= next;
  }
  return seen;
}

/// Component of u in the complement of the underlying graph of d[within].
VertexSet co_component(const Digraph& d, int u, VertexSet within) {
  VertexSet seen = VertexSet::single(u);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    for (int x : frontier) next |= within - d.nbrs(x) - VertexSet::single(x);
    frontier = next - seen;
    seen |= next;
  }
  return seen;
}

VertexSet symmetric_closure(const Digraph& d, int u, VertexSet both) {
  VertexSet grown = VertexSet::single(u);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int h : d.vertices() - grown) {
      const bool joins = both.contains(h) ? !(grown - d.nbrs(h)).empty()
                                          : d.sym_nbrs(h).intersects(grown);
      if (joins) {
        grown.insert(h);
        changed = true;
      }
    }
  }
  return grown;
}

WqtModule checked(const Digraph& d, VertexSet m, ModuleConstruction how) {
  if (m.size() < 2 || m == d.vertices() || !is_module(d, m)) {
    throw InvariantViolation(std::string(to_string(how)) +
                             " construction did not yield a non-trivial module");
  }
  return {Module{m}, how};
}

}  // namespace

ModuleCheck is_module(const Digraph& d, VertexSet s) {
  if (s.empty()) throw UsageError("module candidate is empty");
  if (!s.subset_of(d.vertices())) throw UsageError("module candidate is not inside the digraph");
  for (int x : d.vertices() - s) {
    if (!uniform_over(d, x, s)) return {false, x};
  }
  return {};
}

Module smallest_module_containing(const Digraph& d, VertexSet seed) {
  if (seed.empty()) throw UsageError("seed is empty");
  if (!seed.subset_of(d.vertices())) throw UsageError("seed is not inside the digraph");
  VertexSet m = seed;
  for (VertexSet extra = splitters(d, m); !extra.empty(); extra = splitters(d, m)) m |= extra;
  return {m};
}

std::optional<Module> find_nontrivial_module(const Digraph& d) {
  if (d.order() < 2) throw UsageError("module search needs at least two vertices");
  for (int a = 0; a < d.order(); ++a) {
    for (int b = a + 1; b < d.order(); ++b) {
      Module m = smallest_module_containing(d, VertexSet{a, b});
      if (m.vertices != d.vertices()) return m;
    }
  }
  return std::nullopt;
}

WqtModule find_module_wqt(const Digraph& d) {
  require_class(d, ClassLabel::WeaklyQuasiTransitive);
  if (is_symmetric(d)) throw PreconditionError("digraph is symmetric");
  const auto qt = is_quasi_transitive(d);
  if (qt) throw PreconditionError("digraph is quasi-transitive");

  // u -> v -> w with u, w non-adjacent; weak quasi-transitivity forces both
  // into N+(v) & N-(v).
  const int u = qt.witness->vertices[0];
  const int v = qt.witness->vertices[1];
  const VertexSet both = d.sym_nbrs(v);
  if (!both.contains(u) || !both.contains(qt.witness->vertices[2])) {
    throw InvariantViolation("non-adjacent neighbours of " + std::to_string(v) +
                             " are not both symmetric neighbours");
  }

  const VertexSet m1 = co_component(d, u, both);
  if (is_module(d, m1)) return checked(d, m1, ModuleConstruction::CoComponent);

  const VertexSet closed = d.nbrs(v) | VertexSet::single(v);
  bool partial_outsider = false;
  for (int x : d.vertices() - closed) {
    const VertexSet seen = d.nbrs(x) & m1;
    if (!seen.empty() && seen != m1) {
      partial_outsider = true;
      break;
    }
  }
  if (!partial_outsider) {
    throw InvariantViolation("co-component is not a module, yet no outside vertex splits it");
  }

  const VertexSet async = d.nbrs(v) - both;
  if (async.empty()) {
    for (const Arc& a : d.arcs()) {
      if (!d.has_arc(a.head, a.tail)) {
        return checked(d, oriented_component(d, a.tail), ModuleConstruction::OrientedFromArc);
      }
    }
    throw InvariantViolation("non-symmetric digraph without a non-symmetric arc");
  }

  bool all_symmetric = true;
  for (int a : async) {
    if (!(d.nbrs(a) & m1).subset_of(d.sym_nbrs(a))) {
      all_symmetric = false;
      break;
    }
  }
  if (all_symmetric) {
    return checked(d, oriented_component(d, v), ModuleConstruction::OrientedFromCenter);
  }
  return checked(d, symmetric_closure(d, u, both), ModuleConstruction::SymmetricClosure);
}

bool satisfies(const Digraph& d, LeafKind k) {
  switch (k) {
    case LeafKind::TransitiveOriented:
      return static_cast<bool>(is_transitive_oriented(d));
    case LeafKind::Semicomplete:
      return static_cast<bool>(is_semicomplete(d));
    case LeafKind::Symmetric:
      return static_cast<bool>(is_symmetric(d));
  }
  return false;
}

std::optional<LeafKind> leaf_kind(const Digraph& d) {
  for (LeafKind k : {LeafKind::TransitiveOriented, LeafKind::Semicomplete, LeafKind::Symmetric}) {
    if (satisfies(d, k)) return k;
  }
  return std::nullopt;
}

namespace {

DecompTree singleton(int label) {
  return {DecompTree::Leaf{LeafKind::TransitiveOriented, Digraph(1), {label}}};
}

/// Replaces the leaf vertex carrying `label` with `child`. A one-vertex
/// leaf is swapped out; a larger leaf becomes a node over its digraph.
bool plug(DecompTree& tree, int label, DecompTree& child) {
  if (auto* leaf = std::get_if<DecompTree::Leaf>(&tree.content)) {
    auto at = std::find(leaf->labels.begin(), leaf->labels.end(), label);
    if (at == leaf->labels.end()) return false;
    if (leaf->labels.size() == 1) {
      tree = std::move(child);
      return true;
    }
    DecompTree::Node node{leaf->kind, std::move(leaf->digraph), {}};
    for (int l : leaf->labels) {
      node.children.push_back(l == label ? std::move(child) : singleton(l));
    }
    tree.content = std::move(node);
    return true;
  }
  for (auto& c : std::get<DecompTree::Node>(tree.content).children) {
    if (plug(c, label, child)) return true;
  }
  return false;
}

std::vector<int> lift(const std::vector<int>& local, const std::vector<int>& labels) {
  std::vector<int> out;
  out.reserve(local.size());
  for (int i : local) out.push_back(labels[i]);
  return out;
}

DecompTree decompose_labeled(const Digraph& d, const std::vector<int>& labels) {
  if (auto kind = leaf_kind(d)) return {DecompTree::Leaf{*kind, d, labels}};

  VertexSet m;
  if (!is_quasi_transitive(d)) {
    m = find_module_wqt(d).module.vertices;
  } else if (auto found = find_nontrivial_module(d)) {
    m = found->vertices;
  } else {
    throw InvariantViolation("weakly quasi-transitive digraph outside the leaf classes is prime");
  }

  const auto inner = induced_subdigraph(d, m);
  DecompTree child = decompose_labeled(inner.digraph, lift(inner.labels, labels));

  const auto outer = induced_subdigraph(d, (d.vertices() - m) | VertexSet::single(m.min()));
  DecompTree tree = decompose_labeled(outer.digraph, lift(outer.labels, labels));
  if (!plug(tree, labels[m.min()], child)) {
    throw InvariantViolation("contracted vertex missing from quotient tree");
  }
  return tree;
}

void collect_labels(const DecompTree& t, std::vector<int>& out) {
  if (t.is_leaf()) {
    out.insert(out.end(), t.leaf().labels.begin(), t.leaf().labels.end());
    return;
  }
  for (const auto& c : t.node().children) collect_labels(c, out);
}

}  // namespace

std::vector<int> tree_labels(const DecompTree& t) {
  std::vector<int> out;
  collect_labels(t, out);
  return out;
}

int tree_order(const DecompTree& t) { return static_cast<int>(tree_labels(t).size()); }

int tree_depth(const DecompTree& t) {
  if (t.is_leaf()) return 0;
  int deepest = 0;
  for (const auto& c : t.node().children) deepest = std::max(deepest, tree_depth(c));
  return deepest + 1;
}

bool tree_is_valid(const DecompTree& t) {
  if (t.is_leaf()) {
    const auto& leaf = t.leaf();
    return leaf.digraph.order() >= 1 &&
           static_cast<int>(leaf.labels.size()) == leaf.digraph.order() &&
           satisfies(leaf.digraph, leaf.kind);
  }
  const auto& node = t.node();
  if (node.children.size() < 2 ||
      static_cast<int>(node.children.size()) != node.quotient.order() ||
      !satisfies(node.quotient, node.quotient_kind)) {
    return false;
  }
  return std::all_of(node.children.begin(), node.children.end(), tree_is_valid);
}

DecompTree decompose_wqt(const Digraph& d) {
  require_class(d, ClassLabel::WeaklyQuasiTransitive);
  if (d.order() == 0) throw UsageError("cannot decompose the empty digraph");
  std::vector<int> labels(static_cast<std::size_t>(d.order()));
  for (int i = 0; i < d.order(); ++i) labels[i] = i;
  return decompose_labeled(d, labels);
}

Digraph recompose_blocks(const DecompTree& t) {
  if (t.is_leaf()) {
    const auto& leaf = t.leaf();
    if (static_cast<int>(leaf.labels.size()) != leaf.digraph.order() || leaf.digraph.order() == 0) {
      throw UsageError("leaf labels do not match its digraph");
    }
    return leaf.digraph;
  }
  const auto& node = t.node();
  if (node.children.size() < 2) throw UsageError("tree node has fewer than two children");
  if (static_cast<int>(node.children.size()) != node.quotient.order()) {
    throw UsageError("tree node arity differs from its quotient order");
  }
  std::vector<Digraph> parts;
  parts.reserve(node.children.size());
  for (const auto& c : node.children) parts.push_back(recompose_blocks(c));
  return substitution(node.quotient, parts);
}

Digraph recompose(const DecompTree& t) {
  const Digraph blocks = recompose_blocks(t);
  const auto labels = tree_labels(t);
  VertexSet seen;
  for (int l : labels) {
    if (l < 0 || l >= blocks.order() || seen.contains(l)) {
      throw UsageError("tree labels are not a permutation of the vertices");
    }
    seen.insert(l);
  }
  return relabeled(blocks, labels);
}

}  // namespace dichord

#ifndef DICHORD_DECOMPOSITION_HPP
#define DICHORD_DECOMPOSITION_HPP

#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "dichord/digraph.hpp"

namespace dichord {

/// A vertex set that every outside vertex sees through one pair relation.
struct Module {
  VertexSet vertices;
  friend bool operator==(const Module&, const Module&) = default;
};

struct ModuleCheck {
  bool holds = true;
  /// Smallest outside vertex whose relation to the set is not uniform.
  std::optional<int> splitter;
  explicit operator bool() const { return holds; }
};

/// Throws UsageError if s is empty or not inside d.
ModuleCheck is_module(const Digraph& d, VertexSet s);

/// Inclusion-minimal module containing seed: keeps absorbing splitters.
Module smallest_module_containing(const Digraph& d, VertexSet seed);

/// First pair closure (pairs in lexicographic order) that is not all of V;
/// nullopt iff d is prime. Requires n >= 2.
std::optional<Module> find_nontrivial_module(const Digraph& d);

/// Which of the four module constructions produced a module.
enum class ModuleConstruction {
  /// Co-component of u among the common in/out-neighbours of v.
  CoComponent,
  /// Vertices joined to v by oriented paths.
  OrientedFromCenter,
  /// Closure from u over non-adjacent shared neighbours and outside digons.
  SymmetricClosure,
  /// Vertices joined to the tail of some non-symmetric arc by oriented paths.
  OrientedFromArc,
};

std::string_view to_string(ModuleConstruction c);

struct WqtModule {
  Module module;
  ModuleConstruction construction;
};

/// Builds a non-trivial module of a weakly quasi-transitive digraph that is
/// neither quasi-transitive nor symmetric.
///
/// Let v have non-adjacent u, w in N+(v) & N-(v) =: B.
///  1. M1 = vertices of B reachable from u through non-adjacent pairs.
///     Return it if it is a module.
///  2. Otherwise some x outside N+[v] | N-[v] sees M1 partially. Let
///     A = N+(v) ^ N-(v). If A is non-empty and every arc between A and M1
///     is symmetric, return the oriented-path component of v.
///  3. If A is non-empty and some such arc is non-symmetric, grow a set from
///     {u}: add members of B non-adjacent to it, and non-members of B joined
///     to it by a digon, until stable.
///  4. If A is empty, return the oriented-path component of the tail of the
///     first non-symmetric arc.
/// "Oriented path" steps along non-symmetric arcs in either direction.
///
/// The result is always checked with is_module; a failure throws
/// InvariantViolation. Throws NotInClassError / PreconditionError when d is
/// outside the required class.
WqtModule find_module_wqt(const Digraph& d);

enum class LeafKind { TransitiveOriented, Semicomplete, Symmetric };

std::string_view to_string(LeafKind k);

/// First of TransitiveOriented, Semicomplete, Symmetric that d satisfies.
std::optional<LeafKind> leaf_kind(const Digraph& d);
bool satisfies(const Digraph& d, LeafKind k);

/// Substitution tree. A leaf stores its digraph plus the original label of
/// each of its vertices; a node substitutes its children, in order, for the
/// quotient's vertices. The quotient itself is a leaf-class digraph.
struct DecompTree {
  struct Leaf {
    LeafKind kind;
    Digraph digraph;
    std::vector<int> labels;
  };
  struct Node {
    LeafKind quotient_kind;
    Digraph quotient;
    std::vector<DecompTree> children;
  };

  std::variant<Leaf, Node> content;

  bool is_leaf() const { return std::holds_alternative<Leaf>(content); }
  const Leaf& leaf() const { return std::get<Leaf>(content); }
  const Node& node() const { return std::get<Node>(content); }
};

/// Original labels in block order (leaves left to right).
std::vector<int> tree_labels(const DecompTree& t);
int tree_order(const DecompTree& t);
int tree_depth(const DecompTree& t);

/// Leaf and quotient predicates hold, every node has as many children as
/// its quotient has vertices and at least two.
bool tree_is_valid(const DecompTree& t);

/// Requires d weakly quasi-transitive (NotInClassError otherwise). A module
/// is contracted to its smallest vertex and both parts are decomposed;
/// the module's tree is then substituted at that vertex.
DecompTree decompose_wqt(const Digraph& d);

/// Folds the tree through substitution and maps vertices back to their
/// recorded labels, so recompose(decompose_wqt(d)) == d. Throws UsageError
/// on a malformed tree (arity mismatch, fewer than two children, labels
/// that are not a permutation of 0..n-1).
Digraph recompose(const DecompTree& t);

/// Substitution result in block order, without relabeling.
Digraph recompose_blocks(const DecompTree& t);

}  // namespace dichord

#endif  // DICHORD_DECOMPOSITION_HPP

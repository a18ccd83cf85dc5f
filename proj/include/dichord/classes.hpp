#ifndef DICHORD_CLASSES_HPP
#define DICHORD_CLASSES_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dichord/digraph.hpp"
#include "dichord/errors.hpp"

namespace dichord {

enum class ClassLabel {
  Symmetric,
  Oriented,
  TransitiveOriented,
  Semicomplete,
  LocallySemicomplete,
  QuasiTransitive,
  WeaklyQuasiTransitive,
  ExtendedSemicomplete,
};

inline constexpr ClassLabel kAllClasses[] = {
    ClassLabel::Symmetric,           ClassLabel::Oriented,
    ClassLabel::TransitiveOriented,  ClassLabel::Semicomplete,
    ClassLabel::LocallySemicomplete, ClassLabel::QuasiTransitive,
    ClassLabel::WeaklyQuasiTransitive, ClassLabel::ExtendedSemicomplete,
};

std::string_view to_string(ClassLabel c);

/// Vertices demonstrating why a digraph is outside a class. What the
/// vertices mean depends on the class:
///   Symmetric             (u, v): a non-symmetric arc between them
///   Oriented              (u, v): a digon
///   TransitiveOriented    (u, v) digon, or (u, v, w) with u->v->w, no u->w
///   Semicomplete          (u, v): non-adjacent
///   LocallySemicomplete   (v, u, w): u, w non-adjacent, both in N-(v) or both in N+(v)
///   QuasiTransitive       (u, v, w): u->v->w with u, w non-adjacent
///   WeaklyQuasiTransitive (v, u, w): asynchronous non-adjacent neighbours u, w of v
///   ExtendedSemicomplete  (u, w, x): u, w non-adjacent, x sees them differently
struct ClassWitness {
  ClassLabel label;
  std::vector<int> vertices;
  friend bool operator==(const ClassWitness&, const ClassWitness&) = default;
};

struct ClassCheck {
  bool holds = true;
  std::optional<ClassWitness> witness;
  explicit operator bool() const { return holds; }
};

ClassCheck is_symmetric(const Digraph& d);
ClassCheck is_oriented(const Digraph& d);
ClassCheck is_semicomplete(const Digraph& d);
/// Composition-closure scan.
ClassCheck is_transitive_oriented(const Digraph& d);
/// Second route: oriented and every vertex di-simplicial. Must agree with
/// is_transitive_oriented.
bool is_transitive_oriented_by_di_simplicial(const Digraph& d);
ClassCheck is_locally_semicomplete(const Digraph& d);
ClassCheck is_quasi_transitive(const Digraph& d);
ClassCheck is_weakly_quasi_transitive(const Digraph& d);
/// Non-adjacent vertices must have identical in- and out-neighbourhoods.
ClassCheck is_extended_semicomplete(const Digraph& d);
bool is_strong(const Digraph& d);

ClassCheck check_class(const Digraph& d, ClassLabel c);

/// Every label whose predicate holds, in kAllClasses order.
std::vector<ClassLabel> classify(const Digraph& d);

/// Raised when an operation requires class membership the input lacks.
class NotInClassError : public PreconditionError {
 public:
  explicit NotInClassError(ClassWitness w);
  const ClassWitness& witness() const { return witness_; }

 private:
  ClassWitness witness_;
};

/// Throws NotInClassError unless d belongs to c.
void require_class(const Digraph& d, ClassLabel c);

}  // namespace dichord

#endif  // DICHORD_CLASSES_HPP

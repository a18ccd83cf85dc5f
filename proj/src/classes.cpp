#include "dichord/classes.hpp"

#include <sstream>

#include "dichord/chordality.hpp"

namespace dichord {

std::string_view to_string(ClassLabel c) {
  switch (c) {
    case ClassLabel::Symmetric:
      return "Symmetric";
    case ClassLabel::Oriented:
      return "Oriented";
    case ClassLabel::TransitiveOriented:
      return "TransitiveOriented";
    case ClassLabel::Semicomplete:
      return "Semicomplete";
    case ClassLabel::LocallySemicomplete:
      return "LocallySemicomplete";
    case ClassLabel::QuasiTransitive:
      return "QuasiTransitive";
    case ClassLabel::WeaklyQuasiTransitive:
      return "WeaklyQuasiTransitive";
    case ClassLabel::ExtendedSemicomplete:
      return "ExtendedSemicomplete";
  }
  return "?";
}

namespace {

ClassCheck fail(ClassLabel c, std::vector<int> vertices) {
  return {false, ClassWitness{c, std::move(vertices)}};
}

std::string describe(const ClassWitness& w) {
  std::ostringstream out;
  out << "digraph is not " << to_string(w.label) << " (witness:";
  for (int v : w.vertices) out << ' ' << v;
  out << ')';
  return out.str();
}

/// First non-adjacent pair inside s, if any.
std::optional<std::pair<int, int>> non_adjacent_pair(const Digraph& d, VertexSet s) {
  for (int u : s) {
    VertexSet missing = s - d.nbrs(u) - VertexSet::range(u + 1);
    if (!missing.empty()) return std::pair{u, missing.min()};
  }
  return std::nullopt;
}

}  // namespace

NotInClassError::NotInClassError(ClassWitness w)
    : PreconditionError(describe(w)), witness_(std::move(w)) {}

ClassCheck is_symmetric(const Digraph& d) {
  for (int u = 0; u < d.order(); ++u) {
    for (int v : d.nbrs(u) - d.sym_nbrs(u) - VertexSet::range(u + 1)) {
      return fail(ClassLabel::Symmetric, {u, v});
    }
  }
  return {};
}

ClassCheck is_oriented(const Digraph& d) {
  for (int u = 0; u < d.order(); ++u) {
    for (int v : d.sym_nbrs(u) - VertexSet::range(u + 1)) {
      return fail(ClassLabel::Oriented, {u, v});
    }
  }
  return {};
}

ClassCheck is_semicomplete(const Digraph& d) {
  if (auto pair = non_adjacent_pair(d, d.vertices())) {
    return fail(ClassLabel::Semicomplete, {pair->first, pair->second});
  }
  return {};
}

ClassCheck is_transitive_oriented(const Digraph& d) {
  if (auto oriented = is_oriented(d); !oriented) {
    return fail(ClassLabel::TransitiveOriented, oriented.witness->vertices);
  }
  for (int u = 0; u < d.order(); ++u) {
    for (int v : d.out(u)) {
      for (int w : d.out(v)) {
        if (w != u && !d.has_arc(u, w)) return fail(ClassLabel::TransitiveOriented, {u, v, w});
      }
    }
  }
  return {};
}

bool is_transitive_oriented_by_di_simplicial(const Digraph& d) {
  if (!is_oriented(d)) return false;
  for (int v = 0; v < d.order(); ++v) {
    if (!is_di_simplicial(d, v)) return false;
  }
  return true;
}

ClassCheck is_locally_semicomplete(const Digraph& d) {
  for (int v = 0; v < d.order(); ++v) {
    for (VertexSet side : {d.in(v), d.out(v)}) {
      if (auto pair = non_adjacent_pair(d, side)) {
        return fail(ClassLabel::LocallySemicomplete, {v, pair->first, pair->second});
      }
    }
  }
  return {};
}

ClassCheck is_quasi_transitive(const Digraph& d) {
  for (int u = 0; u < d.order(); ++u) {
    for (int v : d.out(u)) {
      for (int w : d.out(v)) {
        if (w != u && !d.adjacent(u, w)) return fail(ClassLabel::QuasiTransitive, {u, v, w});
      }
    }
  }
  return {};
}

ClassCheck is_weakly_quasi_transitive(const Digraph& d) {
  for (int v = 0; v < d.order(); ++v) {
    const VertexSet nb = d.nbrs(v);
    for (int u : nb) {
      for (int w : nb - VertexSet::range(u + 1)) {
        if (d.relation(v, u) != d.relation(v, w) && !d.adjacent(u, w)) {
          return fail(ClassLabel::WeaklyQuasiTransitive, {v, u, w});
        }
      }
    }
  }
  return {};
}

ClassCheck is_extended_semicomplete(const Digraph& d) {
  for (int u = 0; u < d.order(); ++u) {
    for (int w : d.vertices() - d.nbrs(u) - VertexSet::range(u + 1)) {
      VertexSet differ = (d.in(u) ^ d.in(w)) | (d.out(u) ^ d.out(w));
      if (!differ.empty()) return fail(ClassLabel::ExtendedSemicomplete, {u, w, differ.min()});
    }
  }
  return {};
}

bool is_strong(const Digraph& d) {
  if (d.order() <= 1) return true;
  auto reach = [&](bool forward) {
    VertexSet seen = VertexSet::single(0);
    VertexSet frontier = seen;
    while (!frontier.empty()) {
      VertexSet next;
      for (int v : frontier) next |= forward ? d.out(v) : d.in(v);
      frontier = next - seen;
      seen |= next;
    }
    return seen;
  };
  return reach(true) == d.vertices() && reach(false) == d.vertices();
}

ClassCheck check_class(const Digraph& d, ClassLabel c) {
  switch (c) {
    case ClassLabel::Symmetric:
      return is_symmetric(d);
    case ClassLabel::Oriented:
      return is_oriented(d);
    case ClassLabel::TransitiveOriented:
      return is_transitive_oriented(d);
    case ClassLabel::Semicomplete:
      return is_semicomplete(d);
    case ClassLabel::LocallySemicomplete:
      return is_locally_semicomplete(d);
    case ClassLabel::QuasiTransitive:
      return is_quasi_transitive(d);
    case ClassLabel::WeaklyQuasiTransitive:
      return is_weakly_quasi_transitive(d);
    case ClassLabel::ExtendedSemicomplete:
      return is_extended_semicomplete(d);
  }
  return {};
}

std::vector<ClassLabel> classify(const Digraph& d) {
  std::vector<ClassLabel> labels;
  for (ClassLabel c : kAllClasses) {
    if (check_class(d, c)) labels.push_back(c);
  }
  return labels;
}

void require_class(const Digraph& d, ClassLabel c) {
  if (auto check = check_class(d, c); !check) throw NotInClassError(*check.witness);
}

}  // namespace dichord

#ifndef DICHORD_TEXT_FORMAT_HPP
#define DICHORD_TEXT_FORMAT_HPP

#include <iosfwd>
#include <string>
#include <string_view>

#include "dichord/digraph.hpp"

namespace dichord {

// Plain-text arc list:
//
//   # optional comments, anywhere after '#'
//   4          <- vertex count
//   0 1        <- one directed arc per line, 0-based
//   1 0        <- a digon is written as two lines
//
// Blank lines are ignored. Loops, out-of-range endpoints and repeated arcs
// are rejected with a ParseError carrying the line number.

Digraph read_digraph(std::istream& in);
Digraph parse_digraph(std::string_view text);

/// Vertex count, then arcs in lexicographic (tail, head) order.
void write_digraph(std::ostream& out, const Digraph& d);
std::string to_text(const Digraph& d);

/// Graphviz rendering. A digon becomes a single `dir=both` edge; vertices
/// in `highlight` are filled.
std::string to_dot(const Digraph& d, VertexSet highlight = {});

}  // namespace dichord

#endif  // DICHORD_TEXT_FORMAT_HPP

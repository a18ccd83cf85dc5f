#include "dichord/text_format.hpp"

#include <charconv>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

#include "dichord/errors.hpp"

namespace dichord {

namespace {

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

int to_int(std::string_view tok, int line_no) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw ParseError(line_no, "expected an integer, got '" + std::string(tok) + "'");
  }
  return value;
}

}  // namespace

Digraph read_digraph(std::istream& in) {
  std::optional<Digraph> d;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto toks = tokens(line);
    if (toks.empty()) continue;

    if (!d) {
      if (toks.size() != 1) throw ParseError(line_no, "first line must hold only the vertex count");
      int n = to_int(toks[0], line_no);
      if (n < 0 || n > kMaxVertices) {
        throw ParseError(line_no, "vertex count " + std::to_string(n) + " outside [0, " +
                                      std::to_string(kMaxVertices) + "]");
      }
      d.emplace(n);
      continue;
    }

    if (toks.size() != 2) throw ParseError(line_no, "arc lines need exactly two vertices");
    int u = to_int(toks[0], line_no);
    int v = to_int(toks[1], line_no);
    if (u < 0 || u >= d->order() || v < 0 || v >= d->order()) {
      throw ParseError(line_no, "arc endpoint out of range");
    }
    if (u == v) throw ParseError(line_no, "loops are not allowed");
    if (d->has_arc(u, v)) throw ParseError(line_no, "repeated arc");
    d->add_arc(u, v);
  }
  if (!d) throw ParseError(line_no + 1, "missing vertex count");
  return *std::move(d);
}

Digraph parse_digraph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_digraph(in);
}

void write_digraph(std::ostream& out, const Digraph& d) {
  out << d.order() << '\n';
  for (const Arc& a : d.arcs()) out << a.tail << ' ' << a.head << '\n';
}

std::string to_text(const Digraph& d) {
  std::ostringstream out;
  write_digraph(out, d);
  return out.str();
}

std::string to_dot(const Digraph& d, VertexSet highlight) {
  std::ostringstream out;
  out << "digraph D {\n";
  for (int v = 0; v < d.order(); ++v) {
    out << "  " << v;
    if (highlight.contains(v)) out << " [style=filled, fillcolor=tomato]";
    out << ";\n";
  }
  for (const Arc& a : d.arcs()) {
    if (d.has_arc(a.head, a.tail)) {
      if (a.tail < a.head) out << "  " << a.tail << " -> " << a.head << " [dir=both];\n";
    } else {
      out << "  " << a.tail << " -> " << a.head << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace dichord

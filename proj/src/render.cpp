#include "dichord/render.hpp"

#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "dichord/text_format.hpp"

namespace dichord {

namespace {

using Json = nlohmann::ordered_json;

std::string joined(const std::vector<int>& xs) {
  std::string out;
  for (int x : xs) {
    if (!out.empty()) out += ' ';
    out += std::to_string(x);
  }
  return out;
}

std::string joined(VertexSet s) { return joined(s.to_vector()); }

Json arcs_json(const Digraph& d, const std::vector<int>* labels = nullptr) {
  Json arcs = Json::array();
  for (const Arc& a : d.arcs()) {
    if (labels) {
      arcs.push_back({(*labels)[a.tail], (*labels)[a.head]});
    } else {
      arcs.push_back({a.tail, a.head});
    }
  }
  return arcs;
}

Json digraph_json(const Digraph& d) {
  return Json{{"order", d.order()}, {"arcs", arcs_json(d)}};
}

std::string arcs_text(const Digraph& d, const std::vector<int>* labels = nullptr) {
  std::string out;
  for (const Arc& a : d.arcs()) {
    if (!out.empty()) out += ' ';
    const int t = labels ? (*labels)[a.tail] : a.tail;
    const int h = labels ? (*labels)[a.head] : a.head;
    out += std::to_string(t) + "->" + std::to_string(h);
  }
  return out.empty() ? "(none)" : out;
}

std::string document(const Json& j) { return j.dump(2) + "\n"; }

Json triple_json(const ViolatingTriple& t) { return Json::array({t.u, t.v, t.w}); }

Json tree_json(const DecompTree& t) {
  if (t.is_leaf()) {
    const auto& leaf = t.leaf();
    return Json{{"kind", "leaf"},
                {"leaf_kind", to_string(leaf.kind)},
                {"labels", leaf.labels},
                {"arcs", arcs_json(leaf.digraph, &leaf.labels)}};
  }
  const auto& node = t.node();
  Json children = Json::array();
  for (const auto& c : node.children) children.push_back(tree_json(c));
  return Json{{"kind", "node"},
              {"quotient_kind", to_string(node.quotient_kind)},
              {"quotient", digraph_json(node.quotient)},
              {"children", children}};
}

void tree_text(std::ostringstream& out, const DecompTree& t, int indent) {
  out << std::string(static_cast<std::size_t>(indent) * 2, ' ');
  if (t.is_leaf()) {
    const auto& leaf = t.leaf();
    out << "leaf " << to_string(leaf.kind) << " labels: " << joined(leaf.labels)
        << " arcs: " << arcs_text(leaf.digraph, &leaf.labels) << "\n";
    return;
  }
  const auto& node = t.node();
  out << "node " << to_string(node.quotient_kind) << " quotient order "
      << node.quotient.order() << " arcs: " << arcs_text(node.quotient) << "\n";
  for (const auto& c : node.children) tree_text(out, c, indent + 1);
}

}  // namespace

std::string render_digraph(const Digraph& d, Format f) {
  switch (f) {
    case Format::Json:
      return document(digraph_json(d));
    case Format::Dot:
      return to_dot(d);
    case Format::Text:
      break;
  }
  return to_text(d);
}

std::string render_classification(const Digraph& d, Format f) {
  const auto labels = classify(d);
  if (f == Format::Dot) return to_dot(d);
  if (f == Format::Json) {
    Json classes = Json::array();
    for (ClassLabel c : labels) classes.push_back(to_string(c));
    Json witnesses = Json::array();
    for (ClassLabel c : kAllClasses) {
      const auto r = check_class(d, c);
      if (!r) witnesses.push_back({{"class", to_string(c)}, {"vertices", r.witness->vertices}});
    }
    Json j{{"verdict", "classified"},
           {"class", classes},
           {"certificate", {{"kind", "ClassWitnesses"}, {"witnesses", witnesses}}}};
    return document(j);
  }
  std::ostringstream out;
  out << "order: " << d.order() << "\n";
  for (ClassLabel c : kAllClasses) {
    const auto r = check_class(d, c);
    out << std::left << std::setw(22) << to_string(c) << (r ? "yes" : "no");
    if (!r) out << "  witness: " << joined(r.witness->vertices);
    out << "\n";
  }
  out << "strong: " << (is_strong(d) ? "yes" : "no") << "\n";
  return out.str();
}

std::string render_chordality(const Digraph& d, const ChordalityCertificate& c, Format f) {
  const auto* peo = std::get_if<PerfectEliminationOrdering>(&c);
  const auto* stuck = std::get_if<StuckCertificate>(&c);
  if (f == Format::Dot) return to_dot(d, stuck ? stuck->residual : VertexSet{});
  if (f == Format::Json) {
    Json cert;
    if (peo) {
      cert = {{"kind", "PerfectEliminationOrdering"}, {"order", peo->order}};
    } else {
      Json triples = Json::array();
      for (const auto& t : stuck->triples) triples.push_back(triple_json(t));
      cert = {{"kind", "Stuck"}, {"residual", stuck->residual.to_vector()}, {"triples", triples}};
    }
    return document(
        Json{{"verdict", peo ? "chordal" : "not chordal"}, {"class", nullptr}, {"certificate", cert}});
  }
  std::ostringstream out;
  if (peo) {
    out << "chordal: yes\n"
        << "elimination order: " << joined(peo->order) << "\n";
  } else {
    out << "chordal: no\n"
        << "stuck on: " << joined(stuck->residual) << "\n";
    for (const auto& t : stuck->triples) {
      out << "  " << t.v << " fails: " << t.u << "->" << t.v << "->" << t.w << " without "
          << t.u << "->" << t.w << "\n";
    }
  }
  return out.str();
}

std::string render_characterization(const Digraph& d, ClassLabel c, const ForbiddenCheck& r,
                                    Format f) {
  if (f == Format::Dot) {
    return to_dot(d, r.witness ? VertexSet::from(r.witness->vertices) : VertexSet{});
  }
  if (f == Format::Json) {
    Json cert = nullptr;
    if (r.witness) cert = {{"kind", to_string(r.witness->kind)}, {"vertices", r.witness->vertices}};
    return document(
        Json{{"verdict", r.holds ? "holds" : "fails"}, {"class", to_string(c)}, {"certificate", cert}});
  }
  std::ostringstream out;
  out << "class: " << to_string(c) << "\n"
      << "characterization: " << (r.holds ? "holds (chordal)" : "fails (not chordal)") << "\n";
  if (r.witness) {
    out << "witness: " << to_string(r.witness->kind) << "\n"
        << "vertices: " << joined(r.witness->vertices) << "\n";
  }
  return out.str();
}

std::string render_not_in_class(const Digraph& d, const ClassWitness& w, Format f) {
  if (f == Format::Dot) return to_dot(d, VertexSet::from(w.vertices));
  if (f == Format::Json) {
    return document(Json{{"verdict", "outside class"},
                         {"class", to_string(w.label)},
                         {"certificate", {{"kind", "ClassWitness"}, {"vertices", w.vertices}}}});
  }
  return "not " + std::string(to_string(w.label)) + "\nwitness: " + joined(w.vertices) + "\n";
}

std::string render_decomposition(const Digraph& d, const DecompTree& t, Format f) {
  if (f == Format::Dot) return to_dot(d);
  if (f == Format::Json) {
    return document(Json{{"verdict", "decomposed"},
                         {"class", to_string(ClassLabel::WeaklyQuasiTransitive)},
                         {"certificate", tree_json(t)}});
  }
  std::ostringstream out;
  tree_text(out, t, 0);
  return out.str();
}

std::string render_report(const CampaignReport& r, Format f) {
  if (f == Format::Json) {
    Json discrepancies = Json::array();
    for (const auto& d : r.discrepancies) {
      discrepancies.push_back(
          {{"digraph", d.digraph}, {"reference", d.reference}, {"candidate", d.candidate}});
    }
    Json subs = Json::array();
    for (const auto& s : r.subpopulations) {
      subs.push_back({{"name", s.name}, {"checked", s.checked}, {"discrepancies", s.discrepancies}});
    }
    Json cert{{"kind", "CampaignReport"},
              {"theorem", to_string(r.theorem)},
              {"population", r.population},
              {"visited", r.visited},
              {"checked", r.checked},
              {"discrepancies", discrepancies},
              {"subpopulations", subs},
              {"wall_seconds", r.wall_seconds}};
    return document(
        Json{{"verdict", r.ok() ? "holds" : "discrepancies"}, {"class", nullptr}, {"certificate", cert}});
  }
  std::ostringstream out;
  out << "theorem: " << to_string(r.theorem) << "\n"
      << "population: " << r.population << "\n"
      << "visited: " << r.visited << "\n"
      << "checked: " << r.checked << "\n"
      << "discrepancies: " << r.discrepancies.size() << "\n";
  for (const auto& s : r.subpopulations) {
    out << "  " << s.name << ": checked " << s.checked << ", discrepancies " << s.discrepancies
        << "\n";
  }
  for (const auto& d : r.discrepancies) {
    out << "---\n" << d.digraph << "reference: " << d.reference << "\ncandidate: " << d.candidate
        << "\n";
  }
  out << "wall time: " << std::fixed << std::setprecision(3) << r.wall_seconds << " s\n";
  return out.str();
}

}  // namespace dichord

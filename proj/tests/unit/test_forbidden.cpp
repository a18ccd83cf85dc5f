#include <doctest.h>

#include <algorithm>
#include <functional>

#include "dichord/chordality.hpp"
#include "dichord/classes.hpp"
#include "dichord/errors.hpp"
#include "dichord/fixtures.hpp"
#include "dichord/forbidden.hpp"
#include "dichord/generators.hpp"
#include "dichord/oracles.hpp"

using namespace dichord;

namespace {

/// Induced copy check straight from arc membership.
bool embeds(const Digraph& d, const Digraph& pattern, const std::vector<int>& at) {
  if (static_cast<int>(at.size()) != pattern.order()) return false;
  for (int i = 0; i < pattern.order(); ++i) {
    for (int j = 0; j < pattern.order(); ++j) {
      if (i != j && pattern.has_arc(i, j) != d.has_arc(at[i], at[j])) return false;
    }
  }
  return true;
}

/// Brute force: does some ordered tuple of distinct vertices embed the pattern?
bool contains_pattern(const Digraph& d, const Digraph& pattern) {
  const int k = pattern.order();
  std::vector<int> at(static_cast<std::size_t>(k));
  std::function<bool(int)> place = [&](int i) {
    if (i == k) return embeds(d, pattern, at);
    for (int v = 0; v < d.order(); ++v) {
      if (std::find(at.begin(), at.begin() + i, v) != at.begin() + i) continue;
      at[i] = v;
      if (place(i + 1)) return true;
    }
    return false;
  };
  return place(0);
}

/// Brute force over vertex sets: an induced non-symmetric directed cycle.
bool has_nonsymmetric_induced_cycle(const Digraph& d) {
  const int n = d.order();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<int> vs;
    for (int i = 0; i < n; ++i) {
      if ((mask >> i) & 1U) vs.push_back(i);
    }
    if (vs.size() < 3) continue;
    // Every vertex has exactly one out- and one in-neighbour inside, by
    // non-symmetric arcs, no other adjacencies, and the set is connected.
    bool ok = true;
    for (int v : vs) {
      int outs = 0;
      int ins = 0;
      int adjacent = 0;
      for (int u : vs) {
        if (u == v) continue;
        if (d.has_arc(u, v) && d.has_arc(v, u)) ok = false;
        outs += d.has_arc(v, u) ? 1 : 0;
        ins += d.has_arc(u, v) ? 1 : 0;
        adjacent += d.adjacent(u, v) ? 1 : 0;
      }
      ok = ok && outs == 1 && ins == 1 && adjacent == 2;
    }
    if (!ok) continue;
    int steps = 1;
    int at = vs.front();
    while (true) {
      int next = -1;
      for (int u : vs) {
        if (u != at && d.has_arc(at, u)) next = u;
      }
      if (next == vs.front()) break;
      at = next;
      ++steps;
    }
    if (steps == static_cast<int>(vs.size())) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("figure 1 fixtures") {
  const auto a = scan_figure1(fixtures::fig1_a());
  REQUIRE_FALSE(a.empty());
  CHECK(a.front().kind == WitnessKind::Fig1A);
  CHECK(std::count_if(a.begin(), a.end(),
                      [](const ForbiddenWitness& w) { return w.kind == WitnessKind::Fig1A; }) == 1);
  CHECK(scan_figure1(fixtures::tt3()).empty());
  const auto d = scan_figure1(fixtures::c3o());
  REQUIRE(d.size() == 1);
  CHECK(d.front() == ForbiddenWitness{WitnessKind::Fig1D, {0, 1, 2}});

  for (WitnessKind k : {WitnessKind::Fig1A, WitnessKind::Fig1B, WitnessKind::Fig1C, WitnessKind::Fig1D}) {
    const Digraph& p = figure1_pattern(k);
    CHECK(is_semicomplete(p));
    CHECK_FALSE(is_chordal(p));
    const auto found = first_figure1(p);
    REQUIRE(found.has_value());
    CHECK(found->kind == k);
    CHECK(verify_witness(p, *found));
  }
  CHECK_THROWS_AS(figure1_pattern(WitnessKind::NonSymmetricInducedCycle), UsageError);
}

TEST_CASE("figure 1 scan matches brute-force embedding") {
  for (int n = 1; n <= 4; ++n) {
    enumerate_digraphs(n, [](const Digraph& g) {
      const auto found = scan_figure1(g);
      for (WitnessKind k : {WitnessKind::Fig1A, WitnessKind::Fig1B, WitnessKind::Fig1C, WitnessKind::Fig1D}) {
        const bool any = std::any_of(found.begin(), found.end(),
                                     [&](const ForbiddenWitness& w) { return w.kind == k; });
        CHECK(any == contains_pattern(g, figure1_pattern(k)));
      }
      for (const auto& w : found) {
        CHECK(embeds(g, figure1_pattern(w.kind), w.vertices));
        CHECK(verify_witness(g, w));
      }
    });
  }
  Rng rng(6);
  for (int trial = 0; trial < 300; ++trial) {
    const Digraph g = gen_semicomplete({rng.between(4, 7), rng.next()});
    const auto found = scan_figure1(g);
    for (WitnessKind k : {WitnessKind::Fig1A, WitnessKind::Fig1B, WitnessKind::Fig1C, WitnessKind::Fig1D}) {
      const bool any = std::any_of(found.begin(), found.end(),
                                   [&](const ForbiddenWitness& w) { return w.kind == k; });
      CHECK(any == contains_pattern(g, figure1_pattern(k)));
    }
  }
}

TEST_CASE("induced non-symmetric cycles") {
  const auto c4 = find_induced_nonsymmetric_cycle(fixtures::c4o(), 3);
  REQUIRE(c4.has_value());
  CHECK(*c4 == ForbiddenWitness{WitnessKind::NonSymmetricInducedCycle, {0, 1, 2, 3}});
  CHECK_FALSE(find_induced_nonsymmetric_cycle(fixtures::c3o(), 4));
  CHECK_FALSE(find_induced_nonsymmetric_cycle(fixtures::fig1_a(), 3));
  CHECK_THROWS_AS(find_induced_nonsymmetric_cycle(fixtures::c4o(), 2), UsageError);

  for (int n = 1; n <= 4; ++n) {
    enumerate_digraphs(n, [](const Digraph& g) {
      const auto w = find_induced_nonsymmetric_cycle(g, 3);
      CHECK(w.has_value() == has_nonsymmetric_induced_cycle(g));
      if (w) {
        CHECK(verify_witness(g, *w));
        CHECK_FALSE(is_chordal(g));
      }
    });
  }
  Rng rng(9);
  for (int trial = 0; trial < 2000; ++trial) {
    const Digraph g = gen_uniform(rng, rng.between(3, 8));
    const auto w = find_induced_nonsymmetric_cycle(g, 3);
    CHECK(w.has_value() == has_nonsymmetric_induced_cycle(g));
    if (w) {
      CHECK(verify_witness(g, *w));
      CHECK(w->vertices.front() == *std::min_element(w->vertices.begin(), w->vertices.end()));
      CHECK_FALSE(is_chordal(g));
    }
  }
}

TEST_CASE("shortest cycle is returned") {
  // A directed 5-cycle 0..4 plus a directed 4-cycle 5..8, disjoint.
  Digraph g(9);
  for (int i = 0; i < 5; ++i) g.add_arc(i, (i + 1) % 5);
  for (int i = 0; i < 4; ++i) g.add_arc(5 + i, 5 + (i + 1) % 4);
  const auto w = find_induced_nonsymmetric_cycle(g, 3);
  REQUIRE(w.has_value());
  CHECK(w->vertices == std::vector<int>{5, 6, 7, 8});
  const auto five = find_induced_nonsymmetric_cycle(fixtures::directed_cycle(5), 5);
  REQUIRE(five.has_value());
  CHECK(five->vertices.size() == 5);
}

TEST_CASE("S(D) chordality") {
  const auto c4 = is_sd_chordal(fixtures::c4s());
  CHECK_FALSE(c4);
  CHECK(c4.witness->kind == WitnessKind::SymmetricInducedLongCycle);
  CHECK(c4.witness->vertices == std::vector<int>{0, 1, 2, 3});
  CHECK(is_sd_chordal(fixtures::c4o()));
  CHECK(is_sd_chordal(fixtures::fig1_b()));

  Rng rng(10);
  for (int trial = 0; trial < 3000; ++trial) {
    const Digraph g = gen_uniform(rng, rng.between(1, 8));
    const auto r = is_sd_chordal(g);
    const Digraph s = symmetric_part(g);
    CHECK(r.holds == !oracles::has_induced_long_cycle(s));
    CHECK(r.holds == is_chordal_graph(s));
    if (!r) {
      CHECK(verify_witness(g, *r.witness));
      CHECK(r.witness->vertices.size() >= 4);
      CHECK_FALSE(is_chordal(g));
    }
    if (is_oriented(g)) CHECK(r.holds);
  }
}

TEST_CASE("characterization examples") {
  const auto fc = semicomplete_chordal_characterization(fixtures::fig1_c());
  CHECK_FALSE(fc);
  CHECK(fc.witness->kind == WitnessKind::Fig1C);
  CHECK(semicomplete_chordal_characterization(fixtures::tt3()));
  CHECK_THROWS_AS(semicomplete_chordal_characterization(fixtures::c4o()), NotInClassError);

  const auto c4 = lsd_chordal_characterization(fixtures::c4o());
  CHECK_FALSE(c4);
  CHECK(*c4.witness == ForbiddenWitness{WitnessKind::NonSymmetricInducedCycle, {0, 1, 2, 3}});
  CHECK(lsd_chordal_characterization(fixtures::tt3()));
  CHECK_THROWS_AS(lsd_chordal_characterization(fixtures::c4s()), NotInClassError);

  const auto s4 = wqt_chordal_characterization(fixtures::c4s());
  CHECK_FALSE(s4);
  CHECK(s4.witness->kind == WitnessKind::SymmetricInducedLongCycle);
  const auto fd = wqt_chordal_characterization(fixtures::fig1_d());
  CHECK_FALSE(fd);
  CHECK(fd.witness->kind == WitnessKind::Fig1D);
  CHECK_THROWS_AS(wqt_chordal_characterization(fixtures::c4o()), NotInClassError);
}

TEST_CASE("characterizations agree with greedy elimination up to five vertices") {
  int semicomplete = 0;
  int lsd = 0;
  int wqt = 0;
  for (int n = 1; n <= 5; ++n) {
    enumerate_digraphs(n, [&](const Digraph& g) {
      const bool chordal = is_chordal(g);
      if (is_semicomplete(g)) {
        ++semicomplete;
        CHECK(semicomplete_chordal_characterization(g).holds == chordal);
      }
      if (is_locally_semicomplete(g)) {
        ++lsd;
        CHECK(lsd_chordal_characterization(g).holds == chordal);
      }
      if (is_weakly_quasi_transitive(g)) {
        ++wqt;
        CHECK(wqt_chordal_characterization(g).holds == chordal);
      }
    });
  }
  // 3^(n(n-1)/2) semicomplete labeled digraphs for n = 1..5.
  CHECK(semicomplete == 1 + 3 + 27 + 729 + 59049);
  CHECK(lsd > semicomplete);
  CHECK(wqt > semicomplete);
}

TEST_CASE("semicomplete characterization on sampled larger digraphs") {
  Rng rng(21);
  for (int trial = 0; trial < 2000; ++trial) {
    const Digraph g = gen_semicomplete({rng.between(6, 8), rng.next()});
    const auto r = semicomplete_chordal_characterization(g);
    CHECK(r.holds == is_chordal(g));
    if (!r) CHECK(verify_witness(g, *r.witness));
  }
}

TEST_CASE("verify_witness rejects wrong witnesses") {
  CHECK_FALSE(verify_witness(fixtures::tt3(), {WitnessKind::Fig1D, {0, 1, 2}}));
  CHECK_FALSE(verify_witness(fixtures::c4o(), {WitnessKind::NonSymmetricInducedCycle, {0, 2, 1, 3}}));
  CHECK_FALSE(verify_witness(fixtures::c4s(), {WitnessKind::SymmetricInducedLongCycle, {0, 1, 2}}));
  CHECK_FALSE(verify_witness(fixtures::c4s(), {WitnessKind::Fig1A, {0, 1, 5, 2}}));
}

#include "dichord/campaign.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <sstream>
#include <thread>

#include "dichord/chordality.hpp"
#include "dichord/classes.hpp"
#include "dichord/decomposition.hpp"
#include "dichord/errors.hpp"
#include "dichord/forbidden.hpp"
#include "dichord/generators.hpp"
#include "dichord/oracles.hpp"
#include "dichord/text_format.hpp"

namespace dichord {

namespace {

struct TheoremInfo {
  TheoremId id;
  std::string_view name;
  int default_n_max;
  int sample_n_cap;
  std::string_view generator;
};

constexpr TheoremInfo kInfo[] = {
    {TheoremId::T11, "t11", 8, kMaxVertices, "gen_semicomplete"},
    {TheoremId::T24, "t24", 10, 24, "round locally semicomplete / uniform, filtered"},
    {TheoremId::T33, "t33", 12, 24, "gen_wqt"},
    {TheoremId::Lemma22, "lemma22", 7, kMaxVertices, "uniform"},
    {TheoremId::Lemma23, "lemma23", 8, 16, "semicomplete / round / uniform, filtered"},
    {TheoremId::RoundTrip, "roundtrip", 30, kMaxVertices, "gen_wqt"},
    {TheoremId::Closure, "closure", 4, 8, "gen_wqt host and parts"},
    {TheoremId::Oracle, "oracle", 7, 12, "uniform"},
    {TheoremId::Symmetric, "symmetric", 8, 12, "gen_symmetric"},
};

const TheoremInfo& info(TheoremId t) {
  for (const auto& i : kInfo) {
    if (i.id == t) return i;
  }
  throw UsageError("unknown theorem id");
}

struct InstanceResult {
  bool counted = false;
  std::optional<Discrepancy> bad;
  /// Bit i set: the instance belongs to subpopulation i.
  unsigned subs = 0;
};

std::string chordal_word(bool chordal) { return chordal ? "chordal" : "not chordal"; }

std::string describe_check(const ForbiddenCheck& c) {
  if (c.holds) return "characterization holds";
  std::ostringstream s;
  s << "characterization fails: " << to_string(c.witness->kind);
  for (int v : c.witness->vertices) s << ' ' << v;
  return s.str();
}

Discrepancy mismatch(const Digraph& d, std::string reference, std::string candidate) {
  return {to_text(d), std::move(reference), std::move(candidate)};
}

InstanceResult characterization(const Digraph& d, ClassLabel c,
                                ForbiddenCheck (*characterize)(const Digraph&)) {
  InstanceResult r;
  if (!check_class(d, c)) return r;
  r.counted = true;
  const bool chordal = is_chordal(d);
  const ForbiddenCheck fc = characterize(d);
  if (chordal != fc.holds) {
    r.bad = mismatch(d, chordal_word(chordal), describe_check(fc));
  } else if (!fc.holds && !verify_witness(d, *fc.witness)) {
    r.bad = mismatch(d, "witness re-check passes", "witness re-check fails: " + describe_check(fc));
  }
  return r;
}

InstanceResult check_t33(const Digraph& d) {
  InstanceResult r = characterization(d, ClassLabel::WeaklyQuasiTransitive,
                                      wqt_chordal_characterization);
  if (r.counted) {
    if (is_quasi_transitive(d)) r.subs |= 1U;
    if (is_extended_semicomplete(d)) r.subs |= 2U;
  }
  return r;
}

InstanceResult check_lemma22(const Digraph& d) {
  InstanceResult r;
  r.counted = true;
  const Digraph s = symmetric_part(d);
  for (int v = 0; v < d.order(); ++v) {
    if (is_di_simplicial(d, v) && !is_di_simplicial(s, v)) {
      r.bad = mismatch(d, "vertex " + std::to_string(v) + " di-simplicial in D",
                       "not di-simplicial in S(D)");
      break;
    }
  }
  return r;
}

bool lemma23_hypotheses(const Digraph& d) {
  return is_locally_semicomplete(d) && is_sd_chordal(d) && !first_figure1(d) &&
         !find_induced_nonsymmetric_cycle(d, 3);
}

InstanceResult check_lemma23(const Digraph& d) {
  InstanceResult r;
  if (!lemma23_hypotheses(d)) return r;
  const Digraph s = symmetric_part(d);
  CanonicalizeOptions opts;
  opts.verify_preconditions = true;
  for (int v = 0; v < d.order() && !r.bad; ++v) {
    if (!is_di_simplicial(s, v)) continue;
    for (const ViolatingTriple& t : violating_triples(d, v)) {
      r.counted = true;
      std::ostringstream in;
      in << "(" << t.u << ", " << t.v << ", " << t.w << ")";
      try {
        const ViolatingTriple c = canonicalize_violating_triple(d, t, opts);
        const bool violating = c.v == v && c.u != c.w && d.has_arc(c.u, v) &&
                               d.has_arc(v, c.w) && !d.has_arc(c.u, c.w);
        if (!violating || !is_canonical(d, c)) {
          std::ostringstream out;
          out << "(" << c.u << ", " << c.v << ", " << c.w << ") not canonical";
          r.bad = mismatch(d, "canonical triple for " + in.str(), out.str());
        }
      } catch (const std::exception& e) {
        r.bad = mismatch(d, "canonical triple for " + in.str(), std::string("error: ") + e.what());
      }
      if (r.bad) break;
    }
  }
  return r;
}

InstanceResult check_roundtrip(const Digraph& d) {
  InstanceResult r;
  if (!is_weakly_quasi_transitive(d)) return r;
  r.counted = true;
  const DecompTree tree = decompose_wqt(d);
  if (!tree_is_valid(tree)) {
    r.bad = mismatch(d, "valid tree", "tree has an invalid leaf or node");
  } else if (recompose(tree) != d) {
    r.bad = mismatch(d, "recompose reproduces input", "recompose gives:\n" + to_text(recompose(tree)));
  }
  return r;
}

InstanceResult check_oracle(const Digraph& d) {
  InstanceResult r;
  r.counted = true;
  const bool reference = oracles::chordal_by_definition(d);
  const auto cert = greedy_eliminate(d);
  const bool greedy = std::holds_alternative<PerfectEliminationOrdering>(cert);
  if (reference != greedy) {
    r.bad = mismatch(d, chordal_word(reference), "greedy: " + chordal_word(greedy));
  } else if (greedy && !verify_peo(d, std::get<PerfectEliminationOrdering>(cert).order)) {
    r.bad = mismatch(d, "greedy order is a PEO", "verify_peo rejects it");
  } else if (!greedy) {
    const auto& stuck = std::get<StuckCertificate>(cert);
    for (int v : stuck.residual) {
      if (is_di_simplicial_within(d, v, stuck.residual)) {
        r.bad = mismatch(d, "stuck residual has no di-simplicial vertex",
                         "vertex " + std::to_string(v) + " is di-simplicial there");
        break;
      }
    }
  }
  return r;
}

InstanceResult check_symmetric(const Digraph& d) {
  InstanceResult r;
  if (!is_symmetric(d)) return r;
  r.counted = true;
  const bool reference = !oracles::has_induced_long_cycle(d);
  const bool chordal = is_chordal(d);
  const bool mcs = is_chordal_graph(d);
  if (reference != chordal || reference != mcs) {
    r.bad = mismatch(d, reference ? "no induced cycle >= 4" : "induced cycle >= 4",
                     "is_chordal: " + chordal_word(chordal) + ", graph check: " + chordal_word(mcs));
  }
  return r;
}

InstanceResult check_closure(const Digraph& host, const std::vector<Digraph>& parts) {
  InstanceResult r;
  if (!is_weakly_quasi_transitive(host)) return r;
  for (const auto& p : parts) {
    if (!is_weakly_quasi_transitive(p)) return r;
  }
  r.counted = true;
  const Digraph result = substitution(host, parts);
  if (const auto c = is_weakly_quasi_transitive(result); !c) {
    std::string text = "# host\n" + to_text(host);
    for (std::size_t i = 0; i < parts.size(); ++i) {
      text += "# part " + std::to_string(i) + "\n" + to_text(parts[i]);
    }
    std::string witness;
    for (int v : c.witness->vertices) witness += " " + std::to_string(v);
    r.bad = Discrepancy{text, "weakly quasi-transitive", "not (witness" + witness + ")"};
  }
  return r;
}

InstanceResult check(TheoremId t, const Digraph& d) {
  switch (t) {
    case TheoremId::T11:
      return characterization(d, ClassLabel::Semicomplete, semicomplete_chordal_characterization);
    case TheoremId::T24:
      return characterization(d, ClassLabel::LocallySemicomplete, lsd_chordal_characterization);
    case TheoremId::T33:
      return check_t33(d);
    case TheoremId::Lemma22:
      return check_lemma22(d);
    case TheoremId::Lemma23:
      return check_lemma23(d);
    case TheoremId::RoundTrip:
      return check_roundtrip(d);
    case TheoremId::Oracle:
      return check_oracle(d);
    case TheoremId::Symmetric:
      return check_symmetric(d);
    case TheoremId::Closure:
      break;
  }
  throw UsageError("closure instances are tuples, not single digraphs");
}

/// Small parts for exhaustive closure: the single vertex and all four
/// digraphs on two vertices.
const std::vector<Digraph>& small_parts() {
  static const std::vector<Digraph> parts = [] {
    std::vector<Digraph> p{Digraph(1)};
    for (std::uint64_t i = 0; i < digraph_count(2); ++i) p.push_back(digraph_at(2, i));
    return p;
  }();
  return parts;
}

std::uint64_t power(std::uint64_t base, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= base;
  return r;
}

std::uint64_t exhaustive_count(TheoremId t, int n) {
  if (t == TheoremId::Closure) return digraph_count(n) * power(small_parts().size(), n);
  return digraph_count(n);
}

InstanceResult exhaustive_instance(TheoremId t, int n, std::uint64_t index) {
  if (t != TheoremId::Closure) return check(t, digraph_at(n, index));
  const auto& pool = small_parts();
  const std::uint64_t tuples = power(pool.size(), n);
  std::vector<Digraph> parts;
  std::uint64_t rest = index % tuples;
  for (int i = 0; i < n; ++i) {
    parts.push_back(pool[rest % pool.size()]);
    rest /= pool.size();
  }
  return check_closure(digraph_at(n, index / tuples), parts);
}

InstanceResult sampled_instance(TheoremId t, std::uint64_t seed, std::uint64_t index, int n_max) {
  Rng rng(seed, index);
  GenConfig cfg;
  cfg.seed = rng.next();
  cfg.stream = index;
  cfg.n = rng.between(1, n_max);
  switch (t) {
    case TheoremId::T11:
      return check(t, gen_semicomplete(cfg));
    case TheoremId::T24:
      return check(t, index % 2 == 0 ? gen_locally_semicomplete(cfg) : gen_uniform(rng, cfg.n));
    case TheoremId::T33:
    case TheoremId::RoundTrip:
      cfg.depth = rng.between(0, 3);
      return check(t, gen_wqt(cfg));
    case TheoremId::Lemma22:
    case TheoremId::Oracle:
      return check(t, gen_uniform(rng, cfg.n));
    case TheoremId::Lemma23:
      cfg.n = rng.between(std::min(3, n_max), n_max);
      switch (index % 3) {
        case 0:
          return check(t, gen_semicomplete(cfg));
        case 1:
          return check(t, gen_locally_semicomplete(cfg));
        default:
          return check(t, gen_uniform(rng, cfg.n));
      }
    case TheoremId::Symmetric:
      cfg.p = rng.unit();
      return check(t, gen_symmetric(cfg));
    case TheoremId::Closure: {
      cfg.n = rng.between(1, n_max);
      cfg.depth = rng.between(0, 2);
      const Digraph host = gen_wqt(cfg);
      std::vector<Digraph> parts;
      for (int i = 0; i < host.order(); ++i) {
        GenConfig part;
        part.seed = rng.next();
        part.n = rng.between(1, 3);
        part.depth = rng.between(0, 2);
        parts.push_back(gen_wqt(part));
      }
      return check_closure(host, parts);
    }
  }
  throw UsageError("unknown theorem id");
}

struct Task {
  int n;
  std::uint64_t lo;
  std::uint64_t hi;
};

struct TaskResult {
  std::uint64_t visited = 0;
  std::uint64_t checked = 0;
  std::vector<Discrepancy> discrepancies;
  std::uint64_t sub_checked[2] = {0, 0};
  std::uint64_t sub_bad[2] = {0, 0};
};

constexpr std::uint64_t kChunk = 2048;

std::vector<Task> plan(TheoremId t, const Population& p) {
  std::vector<Task> tasks;
  if (p.mode == Population::Mode::Exhaustive) {
    for (int n = 1; n <= p.max_n; ++n) {
      const std::uint64_t count = exhaustive_count(t, n);
      for (std::uint64_t lo = 0; lo < count; lo += kChunk) {
        tasks.push_back({n, lo, std::min(count, lo + kChunk)});
      }
    }
  } else {
    for (std::uint64_t lo = 0; lo < p.samples; lo += kChunk) {
      tasks.push_back({0, lo, std::min(p.samples, lo + kChunk)});
    }
  }
  return tasks;
}

void validate(TheoremId t, const Population& p) {
  const auto& i = info(t);
  if (p.mode == Population::Mode::Exhaustive) {
    const int cap = t == TheoremId::Closure ? 4 : 5;
    if (p.max_n < 1 || p.max_n > cap) {
      throw UsageError("exhaustive " + std::string(i.name) + " supports max-n in [1, " +
                       std::to_string(cap) + "]");
    }
  } else {
    const int n_max = p.n_max == 0 ? i.default_n_max : p.n_max;
    if (n_max < 1 || n_max > i.sample_n_cap) {
      throw UsageError("sampled " + std::string(i.name) + " supports n-max in [1, " +
                       std::to_string(i.sample_n_cap) + "]");
    }
  }
}

}  // namespace

std::string_view to_string(TheoremId t) { return info(t).name; }

std::optional<TheoremId> parse_theorem(std::string_view s) {
  for (const auto& i : kInfo) {
    if (i.name == s) return i.id;
  }
  return std::nullopt;
}

std::string describe(TheoremId t, const Population& p) {
  if (p.mode == Population::Mode::Exhaustive) {
    return "exhaustive n<=" + std::to_string(p.max_n);
  }
  const int n_max = p.n_max == 0 ? info(t).default_n_max : p.n_max;
  return std::string(info(t).generator) + " samples=" + std::to_string(p.samples) +
         " seed=" + std::to_string(p.seed) + " n<=" + std::to_string(n_max);
}

unsigned campaign_workers() {
  if (const char* env = std::getenv("DICHORD_WORKERS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

CampaignReport run_campaign(TheoremId t, const Population& p, unsigned workers) {
  validate(t, p);
  const auto start = std::chrono::steady_clock::now();
  const int n_max = p.n_max == 0 ? info(t).default_n_max : p.n_max;
  const auto tasks = plan(t, p);
  std::vector<TaskResult> results(tasks.size());
  std::atomic<std::size_t> next{0};

  const auto work = [&] {
    for (std::size_t k = next++; k < tasks.size(); k = next++) {
      const Task& task = tasks[k];
      TaskResult& out = results[k];
      for (std::uint64_t i = task.lo; i < task.hi; ++i) {
        InstanceResult r;
        try {
          r = p.mode == Population::Mode::Exhaustive ? exhaustive_instance(t, task.n, i)
                                                     : sampled_instance(t, p.seed, i, n_max);
        } catch (const std::exception& e) {
          std::string where = p.mode == Population::Mode::Exhaustive
                                  ? "n=" + std::to_string(task.n) + " index=" + std::to_string(i)
                                  : "sample " + std::to_string(i);
          r.counted = true;
          r.bad = Discrepancy{"# " + where + "\n", "no error", std::string("error: ") + e.what()};
        }
        ++out.visited;
        if (!r.counted) continue;
        ++out.checked;
        for (int s = 0; s < 2; ++s) {
          if ((r.subs >> s) & 1U) {
            ++out.sub_checked[s];
            if (r.bad) ++out.sub_bad[s];
          }
        }
        if (r.bad) out.discrepancies.push_back(std::move(*r.bad));
      }
    }
  };

  if (workers == 0) workers = campaign_workers();
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(1, tasks.size())));
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();

  CampaignReport report;
  report.theorem = t;
  report.population = describe(t, p);
  std::uint64_t sub_checked[2] = {0, 0};
  std::uint64_t sub_bad[2] = {0, 0};
  for (auto& r : results) {
    report.visited += r.visited;
    report.checked += r.checked;
    for (int s = 0; s < 2; ++s) {
      sub_checked[s] += r.sub_checked[s];
      sub_bad[s] += r.sub_bad[s];
    }
    for (auto& d : r.discrepancies) report.discrepancies.push_back(std::move(d));
  }
  if (t == TheoremId::T33) {
    report.subpopulations = {{"QuasiTransitive", sub_checked[0], sub_bad[0]},
                             {"ExtendedSemicomplete", sub_checked[1], sub_bad[1]}};
  }
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace dichord

#include "dichord/oracles.hpp"

#include <functional>
#include <vector>

namespace dichord::oracles {

namespace {

std::vector<int> members(std::uint64_t mask, int n) {
  std::vector<int> out;
  for (int i = 0; i < n; ++i) {
    if ((mask >> i) & 1U) out.push_back(i);
  }
  return out;
}

bool di_simplicial_in(const Digraph& d, int v, const std::vector<int>& sub) {
  for (int u : sub) {
    if (u == v || !d.has_arc(u, v)) continue;
    for (int w : sub) {
      if (w == v || w == u || !d.has_arc(v, w)) continue;
      if (!d.has_arc(u, w)) return false;
    }
  }
  return true;
}

}  // namespace

bool chordal_by_definition(const Digraph& d) {
  const int n = d.order();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    const auto sub = members(mask, n);
    bool found = false;
    for (int v : sub) {
      if (di_simplicial_in(d, v, sub)) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

bool has_induced_long_cycle(const Digraph& g) {
  const int n = g.order();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    const auto sub = members(mask, n);
    if (sub.size() < 4) continue;
    bool two_regular = true;
    for (int v : sub) {
      int degree = 0;
      for (int u : sub) {
        if (u != v && g.adjacent(u, v)) ++degree;
      }
      if (degree != 2) {
        two_regular = false;
        break;
      }
    }
    if (!two_regular) continue;
    // 2-regular: it is a single cycle iff connected.
    std::vector<int> stack{sub.front()};
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    seen[sub.front()] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : sub) {
        if (!seen[y] && y != x && g.adjacent(x, y)) {
          seen[y] = true;
          ++reached;
          stack.push_back(y);
        }
      }
    }
    if (reached == sub.size()) return true;
  }
  return false;
}

bool extended_semicomplete_by_partition(const Digraph& d) {
  const int n = d.order();
  std::vector<int> block(static_cast<std::size_t>(n), 0);

  const auto acceptable = [&](int blocks) {
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (block[u] == block[v] && d.adjacent(u, v)) return false;
      }
    }
    for (int a = 0; a < blocks; ++a) {
      for (int b = 0; b < blocks; ++b) {
        if (a == b) continue;
        int arcs = 0;
        int pairs = 0;
        for (int u = 0; u < n; ++u) {
          for (int v = 0; v < n; ++v) {
            if (block[u] == a && block[v] == b) {
              ++pairs;
              arcs += d.has_arc(u, v) ? 1 : 0;
            }
          }
        }
        if (arcs != 0 && arcs != pairs) return false;
      }
    }
    for (int a = 0; a < blocks; ++a) {
      for (int b = a + 1; b < blocks; ++b) {
        bool joined = false;
        for (int u = 0; u < n && !joined; ++u) {
          for (int v = 0; v < n && !joined; ++v) {
            joined = block[u] == a && block[v] == b && d.adjacent(u, v);
          }
        }
        if (!joined) return false;
      }
    }
    return true;
  };

  // Restricted growth strings enumerate set partitions; blocks stay
  // independent as they grow.
  const std::function<bool(int, int)> assign = [&](int i, int blocks) {
    if (i == n) return acceptable(blocks);
    for (int b = 0; b <= blocks; ++b) {
      bool independent = true;
      for (int j = 0; j < i && independent; ++j) {
        independent = block[j] != b || !d.adjacent(i, j);
      }
      if (!independent) continue;
      block[i] = b;
      if (assign(i + 1, b == blocks ? blocks + 1 : blocks)) return true;
    }
    return false;
  };
  return assign(0, 0);
}

}  // namespace dichord::oracles

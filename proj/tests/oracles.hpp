#pragma once

// Test-only oracles and generators. Deliberately naive: these are the
// algorithm-independent cross-checks for the real engines, so they must not
// share code paths with them.

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "ncg/errors.hpp"
#include "ncg/graph.hpp"

namespace ncg::testing {

namespace detail {

inline void enumerate_paths(const SimpleGraph& g, int endpoint, std::vector<char>& on_path,
                            int length, std::vector<int>& best) {
  if (length > best[static_cast<std::size_t>(endpoint)]) {
    best[static_cast<std::size_t>(endpoint)] = length;
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.adjacent(endpoint, v) && !on_path[static_cast<std::size_t>(v)]) {
      on_path[static_cast<std::size_t>(v)] = 1;
      enumerate_paths(g, v, on_path, length + 1, best);
      on_path[static_cast<std::size_t>(v)] = 0;
    }
  }
}

}  // namespace detail

/// Longest-path lengths by exhaustive enumeration of every simple path, with
/// no pruning or memoization. Exponential; callers keep p <= 12.
/// Entry [u][v] is -1 when no u-v path exists; diagonal is 0.
inline std::vector<std::vector<int>> detour_matrix_by_enumeration(const SimpleGraph& g) {
  const int p = g.vertex_count();
  if (p > 12) {
    throw TooLarge("path enumeration oracle is for at most 12 vertices");
  }
  std::vector<std::vector<int>> matrix(static_cast<std::size_t>(p));
  for (int u = 0; u < p; ++u) {
    std::vector<int> best(static_cast<std::size_t>(p), -1);
    std::vector<char> on_path(static_cast<std::size_t>(p), 0);
    on_path[static_cast<std::size_t>(u)] = 1;
    detail::enumerate_paths(g, u, on_path, 0, best);
    matrix[static_cast<std::size_t>(u)] = std::move(best);
    matrix[static_cast<std::size_t>(u)][static_cast<std::size_t>(u)] = 0;
  }
  return matrix;
}

/// Split recognition by trying every 2-partition (clique candidates as
/// bitmasks). Exponential; callers keep p <= 16.
inline bool is_split_by_enumeration(const SimpleGraph& g) {
  const int p = g.vertex_count();
  if (p > 16) {
    throw TooLarge("split enumeration oracle is for at most 16 vertices");
  }
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << p); ++mask) {
    bool ok = true;
    for (int u = 0; u < p && ok; ++u) {
      for (int v = u + 1; v < p && ok; ++v) {
        const bool u_in = (mask >> u) & 1u;
        const bool v_in = (mask >> v) & 1u;
        if (u_in && v_in) {
          ok = g.adjacent(u, v);
        } else if (!u_in && !v_in) {
          ok = !g.adjacent(u, v);
        }
      }
    }
    if (ok) {
      return true;
    }
  }
  return false;
}

inline SimpleGraph complete_graph(int p) {
  SimpleGraph g(p);
  for (int u = 0; u < p; ++u) {
    for (int v = u + 1; v < p; ++v) {
      g.add_edge(u, v);
    }
  }
  return g;
}

inline SimpleGraph path_graph(int p) {
  SimpleGraph g(p);
  for (int v = 1; v < p; ++v) {
    g.add_edge(v - 1, v);
  }
  return g;
}

inline SimpleGraph cycle_graph(int p) {
  SimpleGraph g = path_graph(p);
  g.add_edge(p - 1, 0);
  return g;
}

inline SimpleGraph random_graph(int p, double edge_prob, std::mt19937& rng) {
  SimpleGraph g(p);
  std::bernoulli_distribution flip(edge_prob);
  for (int u = 0; u < p; ++u) {
    for (int v = u + 1; v < p; ++v) {
      if (flip(rng)) {
        g.add_edge(u, v);
      }
    }
  }
  return g;
}

/// Uniform random attachment tree on p vertices.
inline SimpleGraph random_tree(int p, std::mt19937& rng) {
  SimpleGraph g(p);
  for (int v = 1; v < p; ++v) {
    std::uniform_int_distribution<int> parent(0, v - 1);
    g.add_edge(parent(rng), v);
  }
  return g;
}

/// Random tree plus random extra edges: connected by construction.
inline SimpleGraph random_connected_graph(int p, double extra_edge_prob, std::mt19937& rng) {
  SimpleGraph g = random_tree(p, rng);
  std::bernoulli_distribution flip(extra_edge_prob);
  for (int u = 0; u < p; ++u) {
    for (int v = u + 1; v < p; ++v) {
      if (!g.adjacent(u, v) && flip(rng)) {
        g.add_edge(u, v);
      }
    }
  }
  return g;
}

}  // namespace ncg::testing

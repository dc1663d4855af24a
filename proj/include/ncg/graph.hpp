#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "ncg/bigint.hpp"
#include "ncg/errors.hpp"
#include "ncg/rational.hpp"

namespace ncg {

/// Labeled simple undirected graph: symmetric dense adjacency, false diagonal.
class SimpleGraph {
 public:
  explicit SimpleGraph(std::vector<std::string> labels)
      : n_(static_cast<int>(labels.size())),
        labels_(std::move(labels)),
        adj_(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), 0) {}

  /// Convenience form with labels "0", "1", ...
  explicit SimpleGraph(int vertex_count) : SimpleGraph(index_labels(vertex_count)) {}

  int vertex_count() const { return n_; }

  const std::string& label(int v) const {
    require_vertex(v);
    return labels_[static_cast<std::size_t>(v)];
  }

  const std::vector<std::string>& labels() const { return labels_; }

  bool adjacent(int u, int v) const {
    require_vertex(u);
    require_vertex(v);
    return adj_[static_cast<std::size_t>(u) * n_ + v] != 0;
  }

  void add_edge(int u, int v) {
    require_vertex(u);
    require_vertex(v);
    if (u == v) {
      throw InvalidParameter("simple graphs have no loops (vertex " + std::to_string(u) + ")");
    }
    adj_[static_cast<std::size_t>(u) * n_ + v] = 1;
    adj_[static_cast<std::size_t>(v) * n_ + u] = 1;
  }

  std::vector<int> neighbors(int v) const {
    require_vertex(v);
    std::vector<int> result;
    for (int u = 0; u < n_; ++u) {
      if (adj_[static_cast<std::size_t>(v) * n_ + u] != 0) {
        result.push_back(u);
      }
    }
    return result;
  }

  void require_vertex(int v) const {
    if (v < 0 || v >= n_) {
      throw OutOfRange("vertex " + std::to_string(v) + " out of range for graph on " +
                       std::to_string(n_) + " vertices");
    }
  }

  bool operator==(const SimpleGraph& other) const = default;

 private:
  static std::vector<std::string> index_labels(int vertex_count) {
    if (vertex_count < 0) {
      throw InvalidParameter("vertex count must be non-negative");
    }
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(vertex_count));
    for (int i = 0; i < vertex_count; ++i) {
      labels.push_back(std::to_string(i));
    }
    return labels;
  }

  int n_;
  std::vector<std::string> labels_;
  std::vector<std::uint8_t> adj_;
};

/// All-pairs shortest-path lengths; absent value marks an unreachable pair.
/// Unreachability is never folded into arithmetic as a sentinel.
class DistanceMatrix {
 public:
  DistanceMatrix(int vertex_count, std::vector<std::optional<int>> distances)
      : n_(vertex_count), d_(std::move(distances)) {}

  int vertex_count() const { return n_; }

  std::optional<int> at(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) {
      throw OutOfRange("distance query (" + std::to_string(u) + ", " + std::to_string(v) +
                       ") out of range");
    }
    return d_[static_cast<std::size_t>(u) * n_ + v];
  }

 private:
  int n_;
  std::vector<std::optional<int>> d_;
};

inline int degree(const SimpleGraph& g, int v) {
  g.require_vertex(v);
  int count = 0;
  for (int u = 0; u < g.vertex_count(); ++u) {
    if (u != v && g.adjacent(v, u)) {
      ++count;
    }
  }
  return count;
}

inline int edge_count(const SimpleGraph& g) {
  int count = 0;
  for (int u = 0; u < g.vertex_count(); ++u) {
    for (int v = u + 1; v < g.vertex_count(); ++v) {
      if (g.adjacent(u, v)) {
        ++count;
      }
    }
  }
  return count;
}

/// Single-source BFS; absent entries are unreachable.
inline std::vector<std::optional<int>> bfs_from(const SimpleGraph& g, int source) {
  g.require_vertex(source);
  std::vector<std::optional<int>> dist(static_cast<std::size_t>(g.vertex_count()));
  std::queue<int> frontier;
  dist[static_cast<std::size_t>(source)] = 0;
  frontier.push(source);
  while (!frontier.empty()) {
    const int v = frontier.front();
    frontier.pop();
    const int next = *dist[static_cast<std::size_t>(v)] + 1;
    for (int u = 0; u < g.vertex_count(); ++u) {
      if (g.adjacent(v, u) && !dist[static_cast<std::size_t>(u)]) {
        dist[static_cast<std::size_t>(u)] = next;
        frontier.push(u);
      }
    }
  }
  return dist;
}

inline DistanceMatrix bfs_distances(const SimpleGraph& g) {
  const int p = g.vertex_count();
  std::vector<std::optional<int>> all(static_cast<std::size_t>(p) * static_cast<std::size_t>(p));
  for (int v = 0; v < p; ++v) {
    auto row = bfs_from(g, v);
    std::copy(row.begin(), row.end(), all.begin() + static_cast<std::ptrdiff_t>(v) * p);
  }
  return DistanceMatrix(p, std::move(all));
}

inline int eccentricity(const SimpleGraph& g, int v) {
  const auto dist = bfs_from(g, v);
  int ecc = 0;
  for (int u = 0; u < g.vertex_count(); ++u) {
    if (!dist[static_cast<std::size_t>(u)]) {
      throw GraphDisconnected("eccentricity undefined: vertex '" + g.label(u) +
                              "' unreachable from '" + g.label(v) + "'");
    }
    ecc = std::max(ecc, *dist[static_cast<std::size_t>(u)]);
  }
  return ecc;
}

/// sigma(v) = sum of shortest-path distances from v to every vertex.
inline int vertex_transmission(const SimpleGraph& g, int v) {
  const auto dist = bfs_from(g, v);
  int total = 0;
  for (int u = 0; u < g.vertex_count(); ++u) {
    if (!dist[static_cast<std::size_t>(u)]) {
      throw GraphDisconnected("transmission undefined: vertex '" + g.label(u) +
                              "' unreachable from '" + g.label(v) + "'");
    }
    total += *dist[static_cast<std::size_t>(u)];
  }
  return total;
}

/// sigma(G) = sum of vertex transmissions; counts ordered pairs.
inline BigInt graph_transmission(const SimpleGraph& g) {
  BigInt total = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    total += vertex_transmission(g, v);
  }
  return total;
}

/// mu(G) = sigma(G) / (p(p-1)), exact and in lowest terms.
inline Rational mean_distance(const SimpleGraph& g) {
  const int p = g.vertex_count();
  if (p < 2) {
    throw InvalidParameter("mean distance needs at least 2 vertices, got " + std::to_string(p));
  }
  const BigInt sigma = graph_transmission(g);
  return Rational(sigma, BigInt(p) * (p - 1));
}

inline SimpleGraph induced_subgraph(const SimpleGraph& g, const std::vector<int>& vertices) {
  std::vector<std::string> labels;
  labels.reserve(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    g.require_vertex(vertices[i]);
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (vertices[i] == vertices[j]) {
        throw InvalidParameter("induced subgraph vertex list repeats vertex " +
                               std::to_string(vertices[i]));
      }
    }
    labels.push_back(g.label(vertices[i]));
  }
  SimpleGraph sub(std::move(labels));
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (g.adjacent(vertices[i], vertices[j])) {
        sub.add_edge(static_cast<int>(i), static_cast<int>(j));
      }
    }
  }
  return sub;
}

inline bool is_connected(const SimpleGraph& g) {
  if (g.vertex_count() == 0) {
    return true;
  }
  const auto dist = bfs_from(g, 0);
  return std::all_of(dist.begin(), dist.end(),
                     [](const std::optional<int>& d) { return d.has_value(); });
}

}  // namespace ncg

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ncg/errors.hpp"
#include "ncg/graph.hpp"
#include "ncg/group.hpp"

namespace ncg {

/// Elements of g minus its center, in group-element order. This list is the
/// vertex set of the non-commuting graph: vertex k is the k-th entry.
inline std::vector<GroupElement> non_central_elements(const FiniteGroup& g) {
  std::vector<GroupElement> result;
  for (int a = 0; a < g.order(); ++a) {
    if (!is_central(g, GroupElement{a})) {
      result.push_back(GroupElement{a});
    }
  }
  return result;
}

/// Graph on G - Z(G) with u ~ v iff uv != vu. Vertex labels and order are
/// inherited from the group with central elements deleted.
inline SimpleGraph noncommuting_graph(const FiniteGroup& g) {
  if (is_abelian(g)) {
    throw AbelianGroup("group is abelian: the non-commuting graph has an empty vertex set");
  }
  const auto vertices = non_central_elements(g);
  std::vector<std::string> labels;
  labels.reserve(vertices.size());
  for (const GroupElement a : vertices) {
    labels.push_back(g.name(a));
  }
  SimpleGraph graph(std::move(labels));
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (!g.commutes(vertices[i], vertices[j])) {
        graph.add_edge(static_cast<int>(i), static_cast<int>(j));
      }
    }
  }
  return graph;
}

/// Vertex-index partition of the non-commuting graph of D_2n:
/// omega1 = non-central rotations, omega2 = reflections.
struct OmegaPartition {
  std::vector<int> omega1;
  std::vector<int> omega2;
};

inline OmegaPartition omega_partition(int n) {
  if (n < 3) {
    throw InvalidParameter("dihedral parameter n must be at least 3, got " + std::to_string(n));
  }
  // Vertex order inherits element order 1, r, .., r^{n-1}, s, .., sr^{n-1}
  // with the center (1, plus r^{n/2} for even n) deleted, so omega1 occupies
  // the first n-1 (odd) or n-2 (even) slots and omega2 the n after them.
  const int rotations = n % 2 == 0 ? n - 2 : n - 1;
  OmegaPartition part;
  part.omega1.resize(static_cast<std::size_t>(rotations));
  std::iota(part.omega1.begin(), part.omega1.end(), 0);
  part.omega2.resize(static_cast<std::size_t>(n));
  std::iota(part.omega2.begin(), part.omega2.end(), rotations);
  return part;
}

/// Verified shape of an induced subgraph.
struct ShapeDescriptor {
  enum class Kind { empty_graph, complete, complete_minus_matching };
  Kind kind = Kind::empty_graph;
  int size = 0;
  /// For complete_minus_matching: the missing pairs, as vertex indices of the
  /// host graph, each pair and the list in ascending order.
  std::vector<std::pair<int, int>> matching;
};

/// Confirms the subgraph induced on omega1 is edgeless. Any edge falsifies
/// the claimed shape and raises ShapeMismatch with the offending pair.
inline ShapeDescriptor classify_omega1(const SimpleGraph& g, const OmegaPartition& part) {
  for (std::size_t i = 0; i < part.omega1.size(); ++i) {
    for (std::size_t j = i + 1; j < part.omega1.size(); ++j) {
      const int u = part.omega1[i];
      const int v = part.omega1[j];
      if (g.adjacent(u, v)) {
        throw ShapeMismatch("omega1 is not edgeless: '" + g.label(u) + "' ~ '" + g.label(v) + "'",
                            u, v);
      }
    }
  }
  return ShapeDescriptor{ShapeDescriptor::Kind::empty_graph,
                         static_cast<int>(part.omega1.size()),
                         {}};
}

/// Confirms the subgraph induced on omega2 is K_n (odd n) or K_n minus the
/// perfect matching {sr^i, sr^{i+n/2}} (even n), and reports the matching.
inline ShapeDescriptor classify_omega2(const SimpleGraph& g, const OmegaPartition& part, int n) {
  if (n < 3) {
    throw InvalidParameter("dihedral parameter n must be at least 3, got " + std::to_string(n));
  }
  if (static_cast<int>(part.omega2.size()) != n) {
    throw InvalidParameter("omega2 has " + std::to_string(part.omega2.size()) +
                           " vertices, expected n=" + std::to_string(n));
  }
  const bool even = n % 2 == 0;
  std::vector<std::pair<int, int>> matching;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const int u = part.omega2[static_cast<std::size_t>(i)];
      const int v = part.omega2[static_cast<std::size_t>(j)];
      // In omega2 order (s, sr, .., sr^{n-1}) the matched partner of local
      // index i is i + n/2.
      const bool matched_pair = even && j == i + n / 2;
      if (matched_pair) {
        if (g.adjacent(u, v)) {
          throw ShapeMismatch("expected non-edge between matched reflections '" + g.label(u) +
                                  "' and '" + g.label(v) + "'",
                              u, v);
        }
        matching.emplace_back(std::min(u, v), std::max(u, v));
      } else if (!g.adjacent(u, v)) {
        throw ShapeMismatch("omega2 is missing edge '" + g.label(u) + "' ~ '" + g.label(v) + "'",
                            u, v);
      }
    }
  }
  if (!even) {
    return ShapeDescriptor{ShapeDescriptor::Kind::complete, n, {}};
  }
  std::sort(matching.begin(), matching.end());
  return ShapeDescriptor{ShapeDescriptor::Kind::complete_minus_matching, n, std::move(matching)};
}

/// Decides whether the non-commuting subgraph induced on `subset` of D_2n
/// (n = order/2, odd) is the star K_{1,n-1}. Pure shape test: one vertex of
/// degree |h|-1, the rest degree 1, |h|-1 edges, |h| = n. Nothing is assumed
/// about the form of the subset, which is what keeps the iff claim testable.
inline bool star_check(const FiniteGroup& g, const std::vector<GroupElement>& subset) {
  if (g.order() % 2 != 0 || g.order() / 2 < 3 || (g.order() / 2) % 2 == 0) {
    throw InvalidParameter("star check applies to dihedral groups of order 2n with n odd");
  }
  const int n = g.order() / 2;

  std::vector<GroupElement> h = subset;
  for (const GroupElement a : h) {
    g.require_element(a);
  }
  std::sort(h.begin(), h.end());
  h.erase(std::unique(h.begin(), h.end()), h.end());
  if (static_cast<int>(h.size()) != n) {
    return false;  // K_{1,n-1} has exactly n vertices
  }

  int edges = 0;
  std::vector<int> degrees(h.size(), 0);
  for (std::size_t i = 0; i < h.size(); ++i) {
    for (std::size_t j = i + 1; j < h.size(); ++j) {
      if (!g.commutes(h[i], h[j])) {
        ++edges;
        ++degrees[i];
        ++degrees[j];
      }
    }
  }
  if (edges != n - 1) {
    return false;
  }
  int hubs = 0;
  int leaves = 0;
  for (const int d : degrees) {
    if (d == n - 1) {
      ++hubs;
    } else if (d == 1) {
      ++leaves;
    }
  }
  return hubs == 1 && leaves == n - 1;
}

/// A split partition: an independent set plus a clique covering all vertices.
struct SplitPartition {
  std::vector<int> independent;
  std::vector<int> clique;
};

inline bool is_split_witness(const SimpleGraph& g, const std::vector<int>& independent,
                             const std::vector<int>& clique) {
  std::vector<char> used(static_cast<std::size_t>(g.vertex_count()), 0);
  for (const int v : independent) {
    g.require_vertex(v);
    if (used[static_cast<std::size_t>(v)]++) {
      return false;
    }
  }
  for (const int v : clique) {
    g.require_vertex(v);
    if (used[static_cast<std::size_t>(v)]++) {
      return false;
    }
  }
  if (independent.size() + clique.size() != static_cast<std::size_t>(g.vertex_count())) {
    return false;
  }
  for (std::size_t i = 0; i < independent.size(); ++i) {
    for (std::size_t j = i + 1; j < independent.size(); ++j) {
      if (g.adjacent(independent[i], independent[j])) {
        return false;
      }
    }
  }
  for (std::size_t i = 0; i < clique.size(); ++i) {
    for (std::size_t j = i + 1; j < clique.size(); ++j) {
      if (!g.adjacent(clique[i], clique[j])) {
        return false;
      }
    }
  }
  return true;
}

/// Split recognition via the Hammer-Simeone degree-sequence threshold: with
/// degrees d_1 >= .. >= d_p and m = max{i : d_i >= i-1}, the graph is split
/// iff sum_{i<=m} d_i = m(m-1) + sum_{i>m} d_i, in which case the m vertices
/// of largest degree form a clique and the rest an independent set. Returns
/// that witness (the largest top-degree prefix that verifies), or nullopt.
inline std::optional<SplitPartition> split_partition(const SimpleGraph& g) {
  const int p = g.vertex_count();
  if (p == 0) {
    return SplitPartition{};
  }

  std::vector<int> order(static_cast<std::size_t>(p));
  std::iota(order.begin(), order.end(), 0);
  std::vector<int> deg(static_cast<std::size_t>(p));
  for (int v = 0; v < p; ++v) {
    deg[static_cast<std::size_t>(v)] = degree(g, v);
  }
  std::stable_sort(order.begin(), order.end(), [&deg](int a, int b) {
    return deg[static_cast<std::size_t>(a)] > deg[static_cast<std::size_t>(b)];
  });

  int m = 0;
  for (int i = 1; i <= p; ++i) {
    if (deg[static_cast<std::size_t>(order[static_cast<std::size_t>(i - 1)])] >= i - 1) {
      m = i;
    }
  }
  long long head = 0;
  long long tail = 0;
  for (int i = 0; i < p; ++i) {
    const long long d = deg[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])];
    (i < m ? head : tail) += d;
  }
  if (head != static_cast<long long>(m) * (m - 1) + tail) {
    return std::nullopt;
  }

  const auto witness_for = [&](int clique_size) -> std::optional<SplitPartition> {
    SplitPartition part;
    part.clique.assign(order.begin(), order.begin() + clique_size);
    part.independent.assign(order.begin() + clique_size, order.end());
    std::sort(part.clique.begin(), part.clique.end());
    std::sort(part.independent.begin(), part.independent.end());
    if (is_split_witness(g, part.independent, part.clique)) {
      return part;
    }
    return std::nullopt;
  };

  for (int k = p; k >= 0; --k) {
    if (auto witness = witness_for(k)) {
      return witness;
    }
  }

  // The k = m prefix is guaranteed by the characterization; reaching this
  // point means the degree data and adjacency disagree.
  if (p < 16) {
    for (std::uint32_t clique_mask = 0; clique_mask < (std::uint32_t{1} << p); ++clique_mask) {
      SplitPartition part;
      for (int v = 0; v < p; ++v) {
        ((clique_mask >> v) & 1u ? part.clique : part.independent).push_back(v);
      }
      if (is_split_witness(g, part.independent, part.clique)) {
        return part;
      }
    }
    return std::nullopt;
  }
  throw Error("split recognition: degree threshold and adjacency disagree");
}

/// deg(a) = |G| - |C_G(a)| for non-central a; the centralizer route to the
/// same number the graph reports, used as a cross-check between two
/// independent computations.
inline int degree_via_centralizer(const FiniteGroup& g, GroupElement a) {
  if (is_central(g, a)) {
    throw CentralElement("element '" + g.name(a) + "' is central and not a vertex");
  }
  return g.order() - static_cast<int>(centralizer(g, a).size());
}

}  // namespace ncg

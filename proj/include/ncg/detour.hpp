#pragma once

#include <bit>
#include <cstdint>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "ncg/bigint.hpp"
#include "ncg/errors.hpp"
#include "ncg/graph.hpp"
#include "ncg/polynomial.hpp"

namespace ncg {

/// Vertex-count ceiling for the exact longest-path solver. Runtime
/// configurable so benchmarks can push it; the state space is 2^p * p.
inline constexpr int kDefaultDetourLimit = 24;
inline constexpr int kMaxDetourLimit = 30;  // subset masks are 32-bit

/// Pairwise longest-simple-path lengths (in edges) of a connected graph.
class DetourMatrix {
 public:
  DetourMatrix(int vertex_count, std::vector<int> distances)
      : n_(vertex_count), d_(std::move(distances)) {}

  int vertex_count() const { return n_; }

  int at(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) {
      throw OutOfRange("detour query (" + std::to_string(u) + ", " + std::to_string(v) +
                       ") out of range");
    }
    return d_[static_cast<std::size_t>(u) * n_ + v];
  }

 private:
  int n_;
  std::vector<int> d_;
};

namespace detail {

// Exact search over states (S, w): "a simple path from `start` covering
// exactly vertex set S and ending at w exists". Each state is expanded at
// most once (one visited bit per (S, w)), extensions add one neighbor not in
// S, so the whole run is O(2^p * p^2) time and one bit per state of memory.
//
// The search is depth-first, which is what makes the early exit pay off on
// dense graphs: a path reaching |S| = p proves the maximum p-1 for its
// endpoint, and once every requested endpoint is proven the recursion
// unwinds. On Hamiltonian-connected inputs this finishes long before the
// state space is exhausted.
class DetourSearch {
 public:
  DetourSearch(const SimpleGraph& g, int start, int target)
      : p_(g.vertex_count()),
        start_(start),
        target_(target),
        adjacency_(static_cast<std::size_t>(p_), 0),
        best_(static_cast<std::size_t>(p_), -1) {
    for (int u = 0; u < p_; ++u) {
      for (int v = 0; v < p_; ++v) {
        if (g.adjacent(u, v)) {
          adjacency_[static_cast<std::size_t>(u)] |= std::uint32_t{1} << v;
        }
      }
    }
  }

  // best[v] = length of the longest simple path start..v, or -1 if none.
  std::vector<int> run() && {
    seed_maximal_paths();
    if (!done_) {
      visited_.assign(std::size_t{1} << p_, 0);
      const std::uint32_t origin = std::uint32_t{1} << start_;
      visited_[origin] = origin;
      extend(origin, start_);
    }
    return std::move(best_);
  }

 private:
  // Constructive fast path: one budgeted greedy dive for a Hamiltonian path
  // from `start`, then Posa rotations (prefix + reversed suffix across an
  // edge to the endpoint) to reach Hamiltonian paths with other endpoints.
  // Every length recorded here is witnessed by an explicit path, so this
  // only ever proves true maxima; whatever it cannot prove is left to the
  // exhaustive search.
  void seed_maximal_paths() {
    if (p_ < 2) {
      return;
    }
    std::vector<int> path{start_};
    path.reserve(static_cast<std::size_t>(p_));
    long long budget = 64LL * p_ * p_;
    if (!greedy_full_path(path, std::uint32_t{1} << start_, budget)) {
      return;
    }

    std::vector<std::vector<int>> path_to(static_cast<std::size_t>(p_));
    std::vector<int> queue;
    const auto note = [&](std::vector<int>&& full_path) {
      const int endpoint = full_path.back();
      if (path_to[static_cast<std::size_t>(endpoint)].empty()) {
        path_to[static_cast<std::size_t>(endpoint)] = std::move(full_path);
        queue.push_back(endpoint);
        if (best_[static_cast<std::size_t>(endpoint)] < p_ - 1) {
          best_[static_cast<std::size_t>(endpoint)] = p_ - 1;
          ++proven_maximal_;
        }
      }
    };
    note(std::move(path));
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const auto current = path_to[static_cast<std::size_t>(queue[qi])];
      const int endpoint = current.back();
      for (int i = 0; i + 2 < p_; ++i) {
        const int pivot = current[static_cast<std::size_t>(i)];
        const int rotated_end = current[static_cast<std::size_t>(i + 1)];
        if (((adjacency_[static_cast<std::size_t>(pivot)] >> endpoint) & 1u) != 0 &&
            path_to[static_cast<std::size_t>(rotated_end)].empty()) {
          std::vector<int> rotated(current.begin(), current.begin() + i + 1);
          rotated.insert(rotated.end(), current.rbegin(), current.rend() - (i + 1));
          note(std::move(rotated));
        }
      }
    }

    done_ = target_ >= 0 ? best_[static_cast<std::size_t>(target_)] == p_ - 1
                         : proven_maximal_ == p_ - 1;
  }

  bool greedy_full_path(std::vector<int>& path, std::uint32_t covered, long long& budget) {
    if (static_cast<int>(path.size()) == p_) {
      return true;
    }
    if (--budget < 0) {
      return false;
    }
    std::uint32_t candidates = adjacency_[static_cast<std::size_t>(path.back())] & ~covered;
    while (candidates != 0) {
      const int next = std::countr_zero(candidates);
      candidates &= candidates - 1;
      path.push_back(next);
      if (greedy_full_path(path, covered | (std::uint32_t{1} << next), budget)) {
        return true;
      }
      path.pop_back();
      if (budget < 0) {
        return false;
      }
    }
    return false;
  }

  void extend(std::uint32_t covered, int endpoint) {
    const int length = std::popcount(covered) - 1;
    if (length > best_[static_cast<std::size_t>(endpoint)]) {
      if (length == p_ - 1 && best_[static_cast<std::size_t>(endpoint)] < p_ - 1) {
        ++proven_maximal_;
      }
      best_[static_cast<std::size_t>(endpoint)] = length;
      if (target_ >= 0 ? (endpoint == target_ && length == p_ - 1)
                       : proven_maximal_ == p_ - 1) {
        done_ = true;
      }
    }
    std::uint32_t candidates = adjacency_[static_cast<std::size_t>(endpoint)] & ~covered;
    while (candidates != 0 && !done_) {
      const int next = std::countr_zero(candidates);
      const std::uint32_t bit = std::uint32_t{1} << next;
      candidates &= candidates - 1;
      if ((visited_[covered | bit] & bit) == 0) {
        visited_[covered | bit] |= bit;
        extend(covered | bit, next);
      }
    }
  }

  int p_;
  int start_;
  int target_;  // -1 = prove all endpoints
  std::vector<std::uint32_t> adjacency_;
  std::vector<std::uint32_t> visited_;
  std::vector<int> best_;
  int proven_maximal_ = 0;
  bool done_ = false;
};

inline void require_within_limit(const SimpleGraph& g, int limit) {
  if (limit < 1 || limit > kMaxDetourLimit) {
    throw InvalidParameter("detour limit must be in 1.." + std::to_string(kMaxDetourLimit) +
                           ", got " + std::to_string(limit));
  }
  if (g.vertex_count() > limit) {
    throw TooLarge("graph on " + std::to_string(g.vertex_count()) +
                   " vertices exceeds the exact detour limit " + std::to_string(limit));
  }
}

}  // namespace detail

/// Length of the longest simple u-v path.
inline int detour_distance(const SimpleGraph& g, int u, int v,
                           int limit = kDefaultDetourLimit) {
  g.require_vertex(u);
  g.require_vertex(v);
  if (u == v) {
    throw SameVertex("detour distance requires distinct vertices, got vertex " +
                     std::to_string(u) + " twice");
  }
  detail::require_within_limit(g, limit);
  const auto best = detail::DetourSearch(g, u, v).run();
  if (best[static_cast<std::size_t>(v)] < 0) {
    throw Unreachable("no path between '" + g.label(u) + "' and '" + g.label(v) + "'");
  }
  return best[static_cast<std::size_t>(v)];
}

inline DetourMatrix detour_matrix(const SimpleGraph& g, int limit = kDefaultDetourLimit) {
  detail::require_within_limit(g, limit);
  const int p = g.vertex_count();
  std::vector<int> d(static_cast<std::size_t>(p) * static_cast<std::size_t>(p), 0);
  for (int u = 0; u < p; ++u) {
    const auto best = detail::DetourSearch(g, u, -1).run();
    for (int v = 0; v < p; ++v) {
      if (v == u) {
        continue;
      }
      if (best[static_cast<std::size_t>(v)] < 0) {
        throw Unreachable("no path between '" + g.label(u) + "' and '" + g.label(v) + "'");
      }
      d[static_cast<std::size_t>(u) * p + v] = best[static_cast<std::size_t>(v)];
    }
  }
  return DetourMatrix(p, std::move(d));
}

/// D(G, x) = sum over unordered distinct pairs of x^{D(u,v)}, so the
/// coefficients total p(p-1)/2.
inline SparsePolynomial detour_polynomial(const DetourMatrix& m) {
  SparsePolynomial p;
  for (int u = 0; u < m.vertex_count(); ++u) {
    for (int v = u + 1; v < m.vertex_count(); ++v) {
      p.add_term(m.at(u, v), 1);
    }
  }
  return p;
}

inline SparsePolynomial detour_polynomial(const SimpleGraph& g,
                                          int limit = kDefaultDetourLimit) {
  return detour_polynomial(detour_matrix(g, limit));
}

/// dd(G): derivative of the detour polynomial at 1 = sum of pairwise detours.
inline BigInt detour_index(const DetourMatrix& m) {
  return poly_derivative_at_one(detour_polynomial(m));
}

inline BigInt detour_index(const SimpleGraph& g, int limit = kDefaultDetourLimit) {
  return detour_index(detour_matrix(g, limit));
}

}  // namespace ncg

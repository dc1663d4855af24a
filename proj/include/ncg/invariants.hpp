#pragma once

#include "ncg/bigint.hpp"
#include "ncg/graph.hpp"
#include "ncg/polynomial.hpp"

namespace ncg {

/// Xi(G, x) = sum over vertices of deg(u) * x^ecc(u).
inline SparsePolynomial eccentric_connectivity_polynomial(const SimpleGraph& g) {
  SparsePolynomial p;
  for (int v = 0; v < g.vertex_count(); ++v) {
    p.add_term(eccentricity(g, v), degree(g, v));
  }
  return p;
}

/// Theta(G, x) = sum over vertices of x^ecc(u).
inline SparsePolynomial total_eccentricity_polynomial(const SimpleGraph& g) {
  SparsePolynomial p;
  for (int v = 0; v < g.vertex_count(); ++v) {
    p.add_term(eccentricity(g, v), 1);
  }
  return p;
}

/// xi^c(G): derivative of Xi at 1, equal to sum of deg(u) * ecc(u).
inline BigInt eccentric_connectivity_index(const SimpleGraph& g) {
  return poly_derivative_at_one(eccentric_connectivity_polynomial(g));
}

/// Derivative of Theta at 1, equal to sum of ecc(u). Kept under its own name
/// next to xi^c: the two derivative-at-one quantities are different numbers.
inline BigInt total_eccentricity(const SimpleGraph& g) {
  return poly_derivative_at_one(total_eccentricity_polynomial(g));
}

}  // namespace ncg

#pragma once

#include <string>

#include "ncg/bigint.hpp"
#include "ncg/errors.hpp"
#include "ncg/polynomial.hpp"
#include "ncg/rational.hpp"

namespace ncg {

/// Every closed-form quantity for the non-commuting graph of D_2n, evaluated
/// by direct arithmetic in n with odd/even dispatch. Never consults a graph:
/// the verification harness needs a route to each number that is fully
/// independent of the brute-force engines.
struct ClosedFormReport {
  int n = 0;
  bool even = false;
  BigInt vertex_count;
  BigInt edge_count;
  BigInt degree_rotation;
  BigInt degree_reflection;
  BigInt detour_distance;
  SparsePolynomial detour_polynomial;
  BigInt detour_index;
  BigInt ecc_omega1;
  BigInt ecc_omega2;
  SparsePolynomial ecc_conn_polynomial;
  SparsePolynomial total_ecc_polynomial;
  BigInt ecc_conn_index;
  BigInt total_eccentricity;
  BigInt transmission_rotation;
  BigInt transmission_reflection;
  BigInt graph_transmission;
  Rational mean_distance;
};

inline ClosedFormReport closed_forms_for(int n) {
  if (n < 3) {
    throw InvalidParameter("closed forms are defined for n >= 3, got " + std::to_string(n));
  }
  const BigInt N = n;
  ClosedFormReport r;
  r.n = n;
  r.even = n % 2 == 0;

  if (!r.even) {
    r.vertex_count = 2 * N - 1;
    r.edge_count = 3 * N * (N - 1) / 2;
    r.degree_rotation = N;
    r.degree_reflection = 2 * N - 2;
    r.detour_distance = 2 * N - 2;
    r.detour_polynomial =
        SparsePolynomial::monomial((N - 1) * (2 * N - 1), 2 * n - 2);
    r.detour_index = 2 * (N - 1) * (N - 1) * (2 * N - 1);
    r.ecc_omega1 = 2;
    r.ecc_omega2 = 1;
    r.ecc_conn_polynomial = SparsePolynomial::monomial(N * (N - 1), 2);
    r.ecc_conn_polynomial.add_term(1, 2 * N * (N - 1));
    r.total_ecc_polynomial = SparsePolynomial::monomial(N - 1, 2);
    r.total_ecc_polynomial.add_term(1, N);
    r.ecc_conn_index = 4 * N * (N - 1);
    r.total_eccentricity = 3 * N - 2;
    r.transmission_rotation = 3 * N - 4;
    r.transmission_reflection = 2 * N - 2;
    r.graph_transmission = 5 * N * N - 9 * N + 4;
    r.mean_distance = Rational(5 * N - 4, 4 * N - 2);
  } else {
    r.vertex_count = 2 * N - 2;
    r.edge_count = 3 * N * (N - 2) / 2;
    r.degree_rotation = N;
    r.degree_reflection = 2 * N - 4;
    r.detour_distance = 2 * N - 3;
    r.detour_polynomial =
        SparsePolynomial::monomial((N - 1) * (2 * N - 3), 2 * n - 3);
    r.detour_index = (N - 1) * (2 * N - 3) * (2 * N - 3);
    r.ecc_omega1 = 2;
    r.ecc_omega2 = 2;
    r.ecc_conn_polynomial = SparsePolynomial::monomial(3 * N * (N - 2), 2);
    r.total_ecc_polynomial = SparsePolynomial::monomial(2 * (N - 1), 2);
    r.ecc_conn_index = 6 * N * (N - 2);
    r.total_eccentricity = 4 * N - 4;
    r.transmission_rotation = 3 * N - 6;
    r.transmission_reflection = 2 * N - 2;
    r.graph_transmission = 5 * N * N - 14 * N + 12;
    r.mean_distance = Rational(5 * N * N - 14 * N + 12, (2 * N - 2) * (2 * N - 3));
  }

  // Transcription tripwires: the unreduced transmission quotient must reduce
  // to the stated mean distance, and the aggregate identities must hold.
  const BigInt p = r.vertex_count;
  if (Rational(r.graph_transmission, p * (p - 1)) != r.mean_distance) {
    throw Error("closed forms inconsistent: mean distance vs transmission quotient at n=" +
                std::to_string(n));
  }
  const BigInt omega1_size = r.even ? N - 2 : N - 1;
  if (omega1_size * r.transmission_rotation + N * r.transmission_reflection !=
      r.graph_transmission) {
    throw Error("closed forms inconsistent: transmissions vs graph transmission at n=" +
                std::to_string(n));
  }
  if (poly_derivative_at_one(r.detour_polynomial) != r.detour_index) {
    throw Error("closed forms inconsistent: detour polynomial vs index at n=" +
                std::to_string(n));
  }
  return r;
}

}  // namespace ncg

#pragma once

#include <stdexcept>
#include <string>

namespace ncg {

/// Base class of everything this library throws.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidParameter : Error {
  using Error::Error;
};

struct OutOfRange : Error {
  using Error::Error;
};

/// An aggregate (eccentricity, transmission, mean distance) was requested on
/// a disconnected graph. Formulas over distances presuppose connectivity;
/// there is no sentinel value.
struct GraphDisconnected : Error {
  using Error::Error;
};

/// Non-commuting graph requested for an abelian group: the vertex set
/// G - Z(G) would be empty.
struct AbelianGroup : Error {
  using Error::Error;
};

/// Centralizer-degree shortcut applied to an element of the center.
struct CentralElement : Error {
  using Error::Error;
};

struct SameVertex : Error {
  using Error::Error;
};

/// No path between the requested vertices.
struct Unreachable : Error {
  using Error::Error;
};

/// Input exceeds the exact-solve limit of an exponential algorithm.
struct TooLarge : Error {
  using Error::Error;
};

/// A structural classifier found an edge (or non-edge) that falsifies the
/// expected shape. Carries the offending vertex pair for diagnostics.
struct ShapeMismatch : Error {
  ShapeMismatch(const std::string& what, int u, int v)
      : Error(what), vertex_u(u), vertex_v(v) {}
  int vertex_u;
  int vertex_v;
};

// Cayley-table ingestion failures. Each message names the first offending
// cell or triple.
struct NotClosed : Error {
  using Error::Error;
};
struct NoIdentity : Error {
  using Error::Error;
};
struct NoInverse : Error {
  using Error::Error;
};
struct NotAssociative : Error {
  using Error::Error;
};

}  // namespace ncg

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ncg/bigint.hpp"
#include "ncg/closed_forms.hpp"
#include "ncg/detour.hpp"
#include "ncg/errors.hpp"
#include "ncg/graph.hpp"
#include "ncg/group.hpp"
#include "ncg/invariants.hpp"
#include "ncg/noncommuting.hpp"
#include "ncg/polynomial.hpp"

namespace ncg {

struct CheckResult {
  std::string name;
  std::string closed_form_value;
  std::string computed_value;
  bool pass = false;
};

struct VerificationReport {
  int n = 0;
  bool with_detour = false;
  std::vector<CheckResult> checks;
  bool overall = false;
};

/// Closed-form constants that the mutation test (and `verify --mutate`) may
/// corrupt; each maps to exactly one harness check.
inline const std::vector<std::string>& mutable_closed_form_fields() {
  static const std::vector<std::string> fields = {
      "vertex_count",          "edge_count",
      "degree_rotation",       "degree_reflection",
      "detour_distance",       "detour_polynomial",
      "detour_index",          "ecc_omega1",
      "ecc_omega2",            "ecc_conn_polynomial",
      "total_ecc_polynomial",  "ecc_conn_index",
      "total_eccentricity",    "transmission_rotation",
      "transmission_reflection", "graph_transmission",
      "mean_distance",
  };
  return fields;
}

/// Corrupts one constant in the report (off-by-one bump). Harness soundness
/// aid: a corrupted constant must fail exactly its own check.
inline void mutate_closed_form(ClosedFormReport& r, std::string_view field) {
  if (field == "vertex_count") {
    r.vertex_count += 1;
  } else if (field == "edge_count") {
    r.edge_count += 1;
  } else if (field == "degree_rotation") {
    r.degree_rotation += 1;
  } else if (field == "degree_reflection") {
    r.degree_reflection += 1;
  } else if (field == "detour_distance") {
    r.detour_distance += 1;
  } else if (field == "detour_polynomial") {
    r.detour_polynomial.add_term(0, 1);
  } else if (field == "detour_index") {
    r.detour_index += 1;
  } else if (field == "ecc_omega1") {
    r.ecc_omega1 += 1;
  } else if (field == "ecc_omega2") {
    r.ecc_omega2 += 1;
  } else if (field == "ecc_conn_polynomial") {
    r.ecc_conn_polynomial.add_term(0, 1);
  } else if (field == "total_ecc_polynomial") {
    r.total_ecc_polynomial.add_term(0, 1);
  } else if (field == "ecc_conn_index") {
    r.ecc_conn_index += 1;
  } else if (field == "total_eccentricity") {
    r.total_eccentricity += 1;
  } else if (field == "transmission_rotation") {
    r.transmission_rotation += 1;
  } else if (field == "transmission_reflection") {
    r.transmission_reflection += 1;
  } else if (field == "graph_transmission") {
    r.graph_transmission += 1;
  } else if (field == "mean_distance") {
    r.mean_distance = Rational(r.mean_distance.numerator() + r.mean_distance.denominator(),
                               r.mean_distance.denominator());
  } else {
    throw InvalidParameter("unknown closed-form field '" + std::string(field) + "'");
  }
}

namespace detail {

inline std::optional<int> uniform_value(const std::vector<int>& values) {
  if (values.empty()) {
    return std::nullopt;
  }
  for (const int v : values) {
    if (v != values.front()) {
      return std::nullopt;
    }
  }
  return values.front();
}

inline std::string render_class_routes(const std::optional<int>& adjacency,
                                       const std::optional<int>& centralizer_route) {
  const auto render = [](const std::optional<int>& v) {
    return v ? std::to_string(*v) : std::string("mixed");
  };
  if (adjacency && centralizer_route && *adjacency == *centralizer_route) {
    return render(adjacency);
  }
  return "adjacency=" + render(adjacency) + ", centralizer=" + render(centralizer_route);
}

inline std::string render_shape(const ShapeDescriptor& shape, const SimpleGraph& g) {
  switch (shape.kind) {
    case ShapeDescriptor::Kind::empty_graph:
      return "empty(" + std::to_string(shape.size) + ")";
    case ShapeDescriptor::Kind::complete:
      return "K" + std::to_string(shape.size);
    case ShapeDescriptor::Kind::complete_minus_matching: {
      std::string out = "K" + std::to_string(shape.size) + "-{";
      for (std::size_t i = 0; i < shape.matching.size(); ++i) {
        if (i > 0) {
          out += ",";
        }
        out += "(" + g.label(shape.matching[i].first) + "," + g.label(shape.matching[i].second) +
               ")";
      }
      return out + "}";
    }
  }
  return "?";
}

}  // namespace detail

/// Runs every check for Gamma(D_2n) against the supplied closed forms.
/// Splitting the report argument out is what makes mutation testing
/// possible: corrupt one field, expect exactly one failed check.
inline VerificationReport verify_against(const ClosedFormReport& closed, bool with_detour,
                                         int detour_limit = kDefaultDetourLimit) {
  const int n = closed.n;
  const bool odd = !closed.even;
  const auto group = dihedral_group(n);
  const auto graph = noncommuting_graph(group);
  const auto part = omega_partition(n);
  const auto elements = non_central_elements(group);
  const int p = graph.vertex_count();

  VerificationReport report;
  report.n = n;
  report.with_detour = with_detour;
  auto add = [&report](std::string name, std::string expected, std::string actual, bool pass) {
    report.checks.push_back(
        CheckResult{std::move(name), std::move(expected), std::move(actual), pass});
  };
  auto add_bigint = [&add](std::string name, const BigInt& expected, const BigInt& actual) {
    const bool pass = expected == actual;
    add(std::move(name), expected.str(), actual.str(), pass);
  };

  add_bigint("vertex_count", closed.vertex_count, p);

  // Degrees, three ways per vertex class: closed form, adjacency count, and
  // the |G| - |C_G(a)| centralizer route.
  const auto degree_check = [&](const std::string& name, const std::vector<int>& klass,
                                const BigInt& expected) {
    std::vector<int> by_adjacency;
    std::vector<int> by_centralizer;
    for (const int v : klass) {
      by_adjacency.push_back(degree(graph, v));
      by_centralizer.push_back(
          degree_via_centralizer(group, elements[static_cast<std::size_t>(v)]));
    }
    const auto adj = detail::uniform_value(by_adjacency);
    const auto cen = detail::uniform_value(by_centralizer);
    const bool pass = adj && cen && BigInt(*adj) == expected && BigInt(*cen) == expected;
    add(name, expected.str(), detail::render_class_routes(adj, cen), pass);
  };
  degree_check("degree_rotation", part.omega1, closed.degree_rotation);
  degree_check("degree_reflection", part.omega2, closed.degree_reflection);

  add_bigint("edge_count", closed.edge_count, edge_count(graph));

  {
    const int l = static_cast<int>(part.omega1.size());
    const std::string expected = "empty(" + std::to_string(l) + ")";
    std::string actual;
    bool pass = false;
    try {
      const auto shape = classify_omega1(graph, part);
      actual = detail::render_shape(shape, graph);
      pass = shape.kind == ShapeDescriptor::Kind::empty_graph && shape.size == l;
    } catch (const ShapeMismatch& e) {
      actual = std::string("mismatch: ") + e.what();
    }
    add("omega1_shape", expected, actual, pass);
  }

  {
    ShapeDescriptor expected_shape;
    expected_shape.size = n;
    if (odd) {
      expected_shape.kind = ShapeDescriptor::Kind::complete;
    } else {
      expected_shape.kind = ShapeDescriptor::Kind::complete_minus_matching;
      for (int i = 0; i < n / 2; ++i) {
        expected_shape.matching.emplace_back(part.omega2[static_cast<std::size_t>(i)],
                                             part.omega2[static_cast<std::size_t>(i + n / 2)]);
      }
    }
    const std::string expected = detail::render_shape(expected_shape, graph);
    std::string actual;
    bool pass = false;
    try {
      const auto shape = classify_omega2(graph, part, n);
      actual = detail::render_shape(shape, graph);
      pass = shape.kind == expected_shape.kind && shape.size == expected_shape.size &&
             shape.matching == expected_shape.matching;
    } catch (const ShapeMismatch& e) {
      actual = std::string("mismatch: ") + e.what();
    }
    add("omega2_shape", expected, actual, pass);
  }

  if (odd) {
    {
      const bool recognized = split_partition(graph).has_value();
      const bool omega_witness = is_split_witness(graph, part.omega1, part.omega2);
      std::string actual = recognized ? "split" : "not-split";
      if (recognized && !omega_witness) {
        actual += " (omega witness invalid)";
      }
      add("split_witness", "split", actual, recognized && omega_witness);
    }

    // Star subsets: H = {sr^i} + all nontrivial rotations must induce
    // K_{1,n-1} for every i, and perturbed subsets must not.
    std::vector<GroupElement> rotations;
    for (int e = 1; e < n; ++e) {
      rotations.push_back(dihedral_element(n, {DihedralLabel::Kind::rotation, e}));
    }
    {
      std::string actual = "true";
      bool pass = true;
      for (int i = 0; i < n; ++i) {
        auto subset = rotations;
        subset.push_back(dihedral_element(n, {DihedralLabel::Kind::reflection, i}));
        if (!star_check(group, subset)) {
          pass = false;
          actual = "false at i=" + std::to_string(i);
          break;
        }
      }
      add("star_positive", "true", actual, pass);
    }
    {
      std::vector<std::vector<GroupElement>> negatives;
      // Swap one rotation for a second reflection.
      {
        std::vector<GroupElement> subset(rotations.begin(), rotations.end() - 1);
        subset.push_back(dihedral_element(n, {DihedralLabel::Kind::reflection, 0}));
        subset.push_back(dihedral_element(n, {DihedralLabel::Kind::reflection, 1}));
        negatives.push_back(std::move(subset));
      }
      // Rotations alone (edgeless, wrong size).
      negatives.push_back(rotations);
      // All reflections (complete, not a star).
      {
        std::vector<GroupElement> subset;
        for (int i = 0; i < n; ++i) {
          subset.push_back(dihedral_element(n, {DihedralLabel::Kind::reflection, i}));
        }
        negatives.push_back(std::move(subset));
      }
      // The whole vertex set.
      negatives.push_back(elements);

      std::string actual = "false";
      bool pass = true;
      for (std::size_t i = 0; i < negatives.size(); ++i) {
        if (star_check(group, negatives[i])) {
          pass = false;
          actual = "true at perturbation " + std::to_string(i);
          break;
        }
      }
      add("star_negatives", "false", actual, pass);
    }
  }

  if (with_detour) {
    const auto dm = detour_matrix(graph, detour_limit);
    std::vector<int> entries;
    for (int u = 0; u < p; ++u) {
      for (int v = u + 1; v < p; ++v) {
        entries.push_back(dm.at(u, v));
      }
    }
    const auto constant = detail::uniform_value(entries);
    const bool constant_pass = constant && BigInt(*constant) == closed.detour_distance;
    add("detour_matrix_constant", closed.detour_distance.str(),
        constant ? std::to_string(*constant) : "mixed", constant_pass);

    const auto poly = detour_polynomial(dm);
    add("detour_polynomial", closed.detour_polynomial.to_string(), poly.to_string(),
        poly == closed.detour_polynomial);
    add_bigint("detour_index", closed.detour_index, detour_index(dm));
  }

  const auto ecc_check = [&](const std::string& name, const std::vector<int>& klass,
                             const BigInt& expected) {
    std::vector<int> values;
    for (const int v : klass) {
      values.push_back(eccentricity(graph, v));
    }
    const auto uniform = detail::uniform_value(values);
    const bool pass = uniform && BigInt(*uniform) == expected;
    add(name, expected.str(), uniform ? std::to_string(*uniform) : "mixed", pass);
  };
  ecc_check("ecc_omega1", part.omega1, closed.ecc_omega1);
  ecc_check("ecc_omega2", part.omega2, closed.ecc_omega2);

  {
    const auto xi = eccentric_connectivity_polynomial(graph);
    add("ecc_conn_polynomial", closed.ecc_conn_polynomial.to_string(), xi.to_string(),
        xi == closed.ecc_conn_polynomial);
    const auto theta = total_eccentricity_polynomial(graph);
    add("total_ecc_polynomial", closed.total_ecc_polynomial.to_string(), theta.to_string(),
        theta == closed.total_ecc_polynomial);

    // Indices twice over: polynomial derivative and the direct sums.
    BigInt direct_xi = 0;
    BigInt direct_theta = 0;
    for (int v = 0; v < p; ++v) {
      const int e = eccentricity(graph, v);
      direct_xi += BigInt(degree(graph, v)) * e;
      direct_theta += e;
    }
    const BigInt via_poly_xi = eccentric_connectivity_index(graph);
    const bool xi_pass = via_poly_xi == closed.ecc_conn_index && direct_xi == closed.ecc_conn_index;
    add("ecc_conn_index", closed.ecc_conn_index.str(),
        via_poly_xi == direct_xi
            ? via_poly_xi.str()
            : "derivative=" + via_poly_xi.str() + ", direct=" + direct_xi.str(),
        xi_pass);
    const BigInt via_poly_theta = total_eccentricity(graph);
    const bool theta_pass =
        via_poly_theta == closed.total_eccentricity && direct_theta == closed.total_eccentricity;
    add("total_eccentricity", closed.total_eccentricity.str(),
        via_poly_theta == direct_theta
            ? via_poly_theta.str()
            : "derivative=" + via_poly_theta.str() + ", direct=" + direct_theta.str(),
        theta_pass);
  }

  const auto transmission_check = [&](const std::string& name, const std::vector<int>& klass,
                                      const BigInt& expected) {
    std::vector<int> values;
    for (const int v : klass) {
      values.push_back(vertex_transmission(graph, v));
    }
    const auto uniform = detail::uniform_value(values);
    const bool pass = uniform && BigInt(*uniform) == expected;
    add(name, expected.str(), uniform ? std::to_string(*uniform) : "mixed", pass);
  };
  transmission_check("transmission_rotation", part.omega1, closed.transmission_rotation);
  transmission_check("transmission_reflection", part.omega2, closed.transmission_reflection);

  add_bigint("graph_transmission", closed.graph_transmission, graph_transmission(graph));

  {
    const auto mu = mean_distance(graph);
    add("mean_distance", closed.mean_distance.to_string(), mu.to_string(),
        mu == closed.mean_distance);
  }

  report.overall = true;
  for (const auto& check : report.checks) {
    report.overall = report.overall && check.pass;
  }
  return report;
}

/// Full closed-form sweep for one n. Detour checks are opt-in: they are the
/// only exponential part, and the default sweep must stay fast for large n.
inline VerificationReport verify(int n, bool with_detour,
                                 int detour_limit = kDefaultDetourLimit) {
  return verify_against(closed_forms_for(n), with_detour, detour_limit);
}

}  // namespace ncg

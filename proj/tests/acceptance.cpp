// Acceptance suite: end-to-end checks of every built-in closed form against the
// brute-force engines, with one pass/fail line per criterion. All
// comparisons are exact; each criterion also carries a wall-clock budget.
//
// Exits non-zero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "ncg/closed_forms.hpp"
#include "ncg/detour.hpp"
#include "ncg/errors.hpp"
#include "ncg/graph.hpp"
#include "ncg/group.hpp"
#include "ncg/invariants.hpp"
#include "ncg/io.hpp"
#include "ncg/noncommuting.hpp"
#include "ncg/verify.hpp"
#include "oracles.hpp"

#ifndef NCG_CLI_PATH
#error "NCG_CLI_PATH must point at the ncg binary"
#endif
#ifndef NCG_TEST_DATA_DIR
#error "NCG_TEST_DATA_DIR must point at the test data directory"
#endif

namespace {

struct Criterion {
  int number;
  std::string description;
  double budget_seconds;
  std::function<void()> body;  // throws on failure
};

struct Failure {
  std::string message;
};

void require(bool condition, const std::string& message) {
  if (!condition) {
    throw Failure{message};
  }
}

template <typename A, typename B>
void require_eq(const A& a, const B& b, const std::string& what) {
  if (!(a == b)) {
    std::ostringstream os;
    os << what << ": expected equality";
    throw Failure{os.str()};
  }
}

int run_cli_status(const std::string& args) {
  const std::string command = std::string(NCG_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(command.c_str());
  require(WIFEXITED(status), "CLI did not exit normally: " + args);
  return WEXITSTATUS(status);
}

// ---- criterion bodies ---------------------------------------------------

void degrees_three_ways() {
  for (int n = 3; n <= 40; ++n) {
    const auto closed = ncg::closed_forms_for(n);
    const auto group = ncg::dihedral_group(n);
    const auto gamma = ncg::noncommuting_graph(group);
    const auto part = ncg::omega_partition(n);
    const auto elements = ncg::non_central_elements(group);
    for (const int v : part.omega1) {
      require_eq(ncg::BigInt(ncg::degree(gamma, v)), closed.degree_rotation,
                 "rotation degree via adjacency, n=" + std::to_string(n));
      require_eq(
          ncg::BigInt(ncg::degree_via_centralizer(group, elements[static_cast<std::size_t>(v)])),
          closed.degree_rotation, "rotation degree via centralizer, n=" + std::to_string(n));
    }
    for (const int v : part.omega2) {
      require_eq(ncg::BigInt(ncg::degree(gamma, v)), closed.degree_reflection,
                 "reflection degree via adjacency, n=" + std::to_string(n));
      require_eq(
          ncg::BigInt(ncg::degree_via_centralizer(group, elements[static_cast<std::size_t>(v)])),
          closed.degree_reflection, "reflection degree via centralizer, n=" + std::to_string(n));
    }
  }
}

void edge_counts() {
  for (int n = 3; n <= 40; ++n) {
    const auto gamma = ncg::noncommuting_graph(ncg::dihedral_group(n));
    const ncg::BigInt expected = n % 2 == 1 ? ncg::BigInt(3) * n * (n - 1) / 2
                                            : ncg::BigInt(3) * n * (n - 2) / 2;
    require_eq(ncg::BigInt(ncg::edge_count(gamma)), expected,
               "edge count, n=" + std::to_string(n));
  }
}

void structure_checks() {
  for (int n = 3; n <= 20; ++n) {
    const auto group = ncg::dihedral_group(n);
    const auto gamma = ncg::noncommuting_graph(group);
    const auto part = ncg::omega_partition(n);

    const auto omega1 = ncg::classify_omega1(gamma, part);  // throws on any edge
    require_eq(omega1.size, static_cast<int>(part.omega1.size()),
               "omega1 size, n=" + std::to_string(n));

    const auto omega2 = ncg::classify_omega2(gamma, part, n);
    if (n % 2 == 1) {
      require(omega2.kind == ncg::ShapeDescriptor::Kind::complete,
              "omega2 should be complete, n=" + std::to_string(n));
    } else {
      require(omega2.kind == ncg::ShapeDescriptor::Kind::complete_minus_matching,
              "omega2 should be K_n minus a matching, n=" + std::to_string(n));
      require_eq(static_cast<int>(omega2.matching.size()), n / 2,
                 "matching size, n=" + std::to_string(n));
      for (int i = 0; i < n / 2; ++i) {
        const auto& pair = omega2.matching[static_cast<std::size_t>(i)];
        require_eq(gamma.label(pair.first),
                   ncg::to_string(ncg::DihedralLabel{ncg::DihedralLabel::Kind::reflection, i}),
                   "matching pair left label, n=" + std::to_string(n));
        require_eq(
            gamma.label(pair.second),
            ncg::to_string(ncg::DihedralLabel{ncg::DihedralLabel::Kind::reflection, i + n / 2}),
            "matching pair right label, n=" + std::to_string(n));
      }
    }

    if (n % 2 == 1) {
      require(ncg::split_partition(gamma).has_value(),
              "split recognition, n=" + std::to_string(n));
      require(ncg::is_split_witness(gamma, part.omega1, part.omega2),
              "(omega1, omega2) split witness, n=" + std::to_string(n));

      // star positives: every H = {sr^i} + nontrivial rotations
      std::vector<ncg::GroupElement> rotations;
      for (int e = 1; e < n; ++e) {
        rotations.push_back(
            ncg::dihedral_element(n, {ncg::DihedralLabel::Kind::rotation, e}));
      }
      for (int i = 0; i < n; ++i) {
        auto h = rotations;
        h.push_back(ncg::dihedral_element(n, {ncg::DihedralLabel::Kind::reflection, i}));
        require(ncg::star_check(group, h), "star positive i=" + std::to_string(i) +
                                               ", n=" + std::to_string(n));
      }
      // three perturbed negatives per n
      {
        auto h = rotations;  // missing the reflection
        require(!ncg::star_check(group, h), "star negative (rotations only), n=" +
                                                std::to_string(n));
        h.pop_back();
        h.push_back(ncg::dihedral_element(n, {ncg::DihedralLabel::Kind::reflection, 0}));
        h.push_back(ncg::dihedral_element(n, {ncg::DihedralLabel::Kind::reflection, 1}));
        require(!ncg::star_check(group, h),
                "star negative (two reflections), n=" + std::to_string(n));
        std::vector<ncg::GroupElement> reflections;
        for (int i = 0; i < n; ++i) {
          reflections.push_back(
              ncg::dihedral_element(n, {ncg::DihedralLabel::Kind::reflection, i}));
        }
        require(!ncg::star_check(group, reflections),
                "star negative (all reflections), n=" + std::to_string(n));
      }
    }
  }
}

void detour_results() {
  for (int n = 3; n <= 8; ++n) {
    const auto closed = ncg::closed_forms_for(n);
    const auto gamma = ncg::noncommuting_graph(ncg::dihedral_group(n));
    const int p = gamma.vertex_count();
    const auto matrix = ncg::detour_matrix(gamma);
    for (int u = 0; u < p; ++u) {
      for (int v = u + 1; v < p; ++v) {
        require_eq(ncg::BigInt(matrix.at(u, v)), ncg::BigInt(p - 1),
                   "detour entries all |V|-1, n=" + std::to_string(n));
        require_eq(ncg::BigInt(matrix.at(u, v)), closed.detour_distance,
                   "detour entries match closed form, n=" + std::to_string(n));
      }
    }
    require_eq(ncg::detour_polynomial(matrix), closed.detour_polynomial,
               "detour polynomial, n=" + std::to_string(n));
    require_eq(ncg::detour_index(matrix), closed.detour_index,
               "detour index, n=" + std::to_string(n));
  }
  // independent oracle: exhaustive path enumeration, n = 3..6
  for (int n = 3; n <= 6; ++n) {
    const auto gamma = ncg::noncommuting_graph(ncg::dihedral_group(n));
    const auto matrix = ncg::detour_matrix(gamma);
    const auto oracle = ncg::testing::detour_matrix_by_enumeration(gamma);
    for (int u = 0; u < gamma.vertex_count(); ++u) {
      for (int v = 0; v < gamma.vertex_count(); ++v) {
        require_eq(matrix.at(u, v),
                   oracle[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)],
                   "search vs enumeration oracle, n=" + std::to_string(n));
      }
    }
  }
}

void eccentricity_suite() {
  for (int n = 3; n <= 40; ++n) {
    const auto closed = ncg::closed_forms_for(n);
    const auto gamma = ncg::noncommuting_graph(ncg::dihedral_group(n));
    const auto part = ncg::omega_partition(n);
    for (const int v : part.omega1) {
      require_eq(ncg::BigInt(ncg::eccentricity(gamma, v)), closed.ecc_omega1,
                 "omega1 eccentricity, n=" + std::to_string(n));
    }
    for (const int v : part.omega2) {
      require_eq(ncg::BigInt(ncg::eccentricity(gamma, v)), closed.ecc_omega2,
                 "omega2 eccentricity, n=" + std::to_string(n));
    }
    require_eq(ncg::eccentric_connectivity_polynomial(gamma), closed.ecc_conn_polynomial,
               "Xi polynomial, n=" + std::to_string(n));
    require_eq(ncg::total_eccentricity_polynomial(gamma), closed.total_ecc_polynomial,
               "Theta polynomial, n=" + std::to_string(n));
    require_eq(ncg::eccentric_connectivity_index(gamma), closed.ecc_conn_index,
               "ecc connectivity index, n=" + std::to_string(n));
    const ncg::BigInt expected_index =
        n % 2 == 1 ? ncg::BigInt(4) * n * (n - 1) : ncg::BigInt(6) * n * (n - 2);
    require_eq(closed.ecc_conn_index, expected_index, "index closed form, n=" + std::to_string(n));
  }
}

void transmissions_and_mean() {
  for (int n = 3; n <= 40; ++n) {
    const auto closed = ncg::closed_forms_for(n);
    const auto gamma = ncg::noncommuting_graph(ncg::dihedral_group(n));
    const auto part = ncg::omega_partition(n);
    for (const int v : part.omega1) {
      require_eq(ncg::BigInt(ncg::vertex_transmission(gamma, v)), closed.transmission_rotation,
                 "rotation transmission, n=" + std::to_string(n));
    }
    for (const int v : part.omega2) {
      require_eq(ncg::BigInt(ncg::vertex_transmission(gamma, v)), closed.transmission_reflection,
                 "reflection transmission, n=" + std::to_string(n));
    }
    require_eq(ncg::graph_transmission(gamma), closed.graph_transmission,
               "graph transmission, n=" + std::to_string(n));
    require_eq(ncg::mean_distance(gamma), closed.mean_distance,
               "mean distance, n=" + std::to_string(n));
  }
  // direct spot substitutions
  require_eq(ncg::mean_distance(ncg::noncommuting_graph(ncg::dihedral_group(3))),
             ncg::Rational(11, 10), "mean distance spot value n=3");
  require_eq(ncg::mean_distance(ncg::noncommuting_graph(ncg::dihedral_group(4))),
             ncg::Rational(6, 5), "mean distance spot value n=4");
}

void generic_group_soundness() {
  const auto degree_identity_check = [](const ncg::FiniteGroup& group, const std::string& what) {
    const auto gamma = ncg::noncommuting_graph(group);
    const auto elements = ncg::non_central_elements(group);
    for (int v = 0; v < gamma.vertex_count(); ++v) {
      require_eq(ncg::degree(gamma, v),
                 ncg::degree_via_centralizer(group, elements[static_cast<std::size_t>(v)]),
                 "centralizer degree identity, " + what);
    }
  };

  // dihedral tables round-tripped through the text format
  for (int n = 3; n <= 6; ++n) {
    std::stringstream buffer;
    ncg::write_cayley_table(buffer, ncg::dihedral_group(n));
    const auto reread = ncg::read_cayley_table(buffer);
    require_eq(reread, ncg::dihedral_group(n), "cayley round trip, n=" + std::to_string(n));
    degree_identity_check(reread, "D_" + std::to_string(2 * n));
  }

  // the quaternion table, ingested and validated from disk
  const auto q8 = ncg::read_cayley_table_file(std::string(NCG_TEST_DATA_DIR) + "/q8.tbl");
  require_eq(q8.order(), 8, "q8 order");
  require(!ncg::is_abelian(q8), "q8 is non-abelian");
  require_eq(static_cast<int>(ncg::center(q8).size()), 2, "q8 center size");
  degree_identity_check(q8, "Q8");
}

void harness_soundness() {
  for (const int n : {3, 4}) {
    for (const auto& field : ncg::mutable_closed_form_fields()) {
      auto closed = ncg::closed_forms_for(n);
      ncg::mutate_closed_form(closed, field);
      const auto report = ncg::verify_against(closed, true);
      require(!report.overall, "mutated " + field + " must fail, n=" + std::to_string(n));
      const std::string expected_check =
          field == "detour_distance" ? "detour_matrix_constant" : field;
      int failed = 0;
      for (const auto& check : report.checks) {
        if (!check.pass) {
          ++failed;
          require_eq(check.name, expected_check,
                     "only the mutated check may fail (" + field + "), n=" + std::to_string(n));
        }
      }
      require_eq(failed, 1, "exactly one failed check for " + field);
    }
  }

  // and through the real binary: exit 1, versus exit 0 unmutated
  require_eq(run_cli_status("verify --from 3 --to 3 --detour"), 0, "verify exit code 0");
  require_eq(run_cli_status("verify --from 3 --to 3 --detour --mutate edge_count"), 1,
             "mutated verify exit code 1");
  require_eq(run_cli_status("verify --from 4 --to 4 --detour --mutate detour_polynomial"), 1,
             "mutated verify exit code 1 (even)");
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "degree formulas, three routes, n=3..40", 1.0, degrees_three_ways},
      {2, "edge counts, n=3..40", 1.0, edge_counts},
      {3, "induced shapes, split witness, star subsets, n=3..20", 5.0, structure_checks},
      {4, "detour matrix/polynomial/index, n=3..8, oracle n=3..6", 60.0, detour_results},
      {5, "eccentricities, Xi/Theta polynomials, indices, n=3..40", 2.0, eccentricity_suite},
      {6, "transmissions and mean distance, n=3..40", 2.0, transmissions_and_mean},
      {7, "centralizer degree identity on ingested groups", 1.0, generic_group_soundness},
      {8, "mutation testing of the verification harness", 60.0, harness_soundness},
  };

  int failures = 0;
  for (const auto& criterion : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string failure;
    try {
      criterion.body();
    } catch (const Failure& f) {
      failure = f.message;
    } catch (const std::exception& e) {
      failure = e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (failure.empty() && elapsed > criterion.budget_seconds) {
      std::ostringstream os;
      os << "exceeded " << criterion.budget_seconds << "s budget";
      failure = os.str();
    }
    const bool pass = failure.empty();
    failures += pass ? 0 : 1;
    std::printf("[%s] criterion %d: %s (%.2fs)%s%s\n", pass ? "PASS" : "FAIL", criterion.number,
                criterion.description.c_str(), elapsed, pass ? "" : " -- ",
                failure.c_str());
  }
  if (failures == 0) {
    std::printf("all %zu acceptance criteria passed\n", criteria.size());
  } else {
    std::printf("%d acceptance criteria FAILED\n", failures);
  }
  return failures == 0 ? 0 : 1;
}

// Command-line front end: construct non-commuting graphs of finite groups
// (dihedral built in, arbitrary groups via Cayley-table files), compute
// their invariants, export them, and verify the dihedral closed forms
// against the brute-force engines.
//
// Exit codes: 0 success / all checks pass, 1 verification failure,
// 2 invalid input, 3 exact-solve limit exceeded.

#include <iomanip>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ncg/closed_forms.hpp"
#include "ncg/detour.hpp"
#include "ncg/errors.hpp"
#include "ncg/graph.hpp"
#include "ncg/group.hpp"
#include "ncg/invariants.hpp"
#include "ncg/io.hpp"
#include "ncg/noncommuting.hpp"
#include "ncg/verify.hpp"

namespace {

struct SourceOptions {
  std::optional<int> dihedral_n;
  std::string cayley_path;
};

ncg::FiniteGroup load_group(const SourceOptions& source) {
  if (source.dihedral_n) {
    return ncg::dihedral_group(*source.dihedral_n);
  }
  return ncg::read_cayley_table_file(source.cayley_path);
}

std::string describe_source(const SourceOptions& source) {
  if (source.dihedral_n) {
    return "dihedral n=" + std::to_string(*source.dihedral_n);
  }
  return "cayley " + source.cayley_path;
}

std::string csv_field(const std::string& value) {
  if (value.find_first_of(",\"\n") == std::string::npos) {
    return value;
  }
  std::string escaped = "\"";
  for (const char c : value) {
    if (c == '"') {
      escaped += '"';
    }
    escaped += c;
  }
  return escaped + "\"";
}

std::string join_ints(const std::vector<int>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) {
      out += " ";
    }
    out += std::to_string(values[i]);
  }
  return out;
}

int run_invariants(const SourceOptions& source, bool with_detour, const std::string& format,
                   int detour_limit) {
  const auto group = load_group(source);
  const auto graph = ncg::noncommuting_graph(group);
  const int p = graph.vertex_count();

  std::vector<int> degrees;
  std::vector<int> eccentricities;
  std::vector<int> transmissions;
  for (int v = 0; v < p; ++v) {
    degrees.push_back(ncg::degree(graph, v));
    eccentricities.push_back(ncg::eccentricity(graph, v));
    transmissions.push_back(ncg::vertex_transmission(graph, v));
  }

  ncg::ordered_json j;
  j["source"] = describe_source(source);
  j["vertex_count"] = p;
  j["edge_count"] = ncg::edge_count(graph);
  auto vertices = ncg::ordered_json::array();
  for (int v = 0; v < p; ++v) {
    ncg::ordered_json row;
    row["label"] = graph.label(v);
    row["degree"] = degrees[static_cast<std::size_t>(v)];
    row["eccentricity"] = eccentricities[static_cast<std::size_t>(v)];
    row["transmission"] = transmissions[static_cast<std::size_t>(v)];
    vertices.push_back(std::move(row));
  }
  j["vertices"] = std::move(vertices);
  j["ecc_conn_polynomial"] = ncg::eccentric_connectivity_polynomial(graph).to_string();
  j["total_ecc_polynomial"] = ncg::total_eccentricity_polynomial(graph).to_string();
  j["ecc_conn_index"] = ncg::to_int64(ncg::eccentric_connectivity_index(graph));
  j["total_eccentricity"] = ncg::to_int64(ncg::total_eccentricity(graph));
  j["graph_transmission"] = ncg::to_int64(ncg::graph_transmission(graph));
  j["mean_distance"] = ncg::mean_distance(graph).to_string();
  if (with_detour) {
    const auto dm = ncg::detour_matrix(graph, detour_limit);
    j["detour_polynomial"] = ncg::detour_polynomial(dm).to_string();
    j["detour_index"] = ncg::to_int64(ncg::detour_index(dm));
  }

  if (format == "json") {
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  if (format == "csv") {
    std::cout << "metric,value\n";
    std::cout << "source," << csv_field(j["source"].get<std::string>()) << "\n";
    std::cout << "vertex_count," << p << "\n";
    std::cout << "edge_count," << j["edge_count"] << "\n";
    std::cout << "degree_sequence," << csv_field(join_ints(degrees)) << "\n";
    std::cout << "eccentricities," << csv_field(join_ints(eccentricities)) << "\n";
    std::cout << "transmissions," << csv_field(join_ints(transmissions)) << "\n";
    for (const auto& key :
         {"ecc_conn_polynomial", "total_ecc_polynomial", "ecc_conn_index", "total_eccentricity",
          "graph_transmission", "mean_distance", "detour_polynomial", "detour_index"}) {
      if (j.contains(key)) {
        const auto& value = j[key];
        std::cout << key << ","
                  << csv_field(value.is_string() ? value.get<std::string>() : value.dump())
                  << "\n";
      }
    }
    return 0;
  }

  std::cout << "source: " << j["source"].get<std::string>() << "\n";
  std::cout << "vertices: " << p << "\n";
  std::cout << "edges: " << j["edge_count"] << "\n\n";
  std::cout << std::left << std::setw(12) << "vertex" << std::setw(8) << "degree" << std::setw(6)
            << "ecc" << "transmission\n";
  for (int v = 0; v < p; ++v) {
    std::cout << std::left << std::setw(12) << graph.label(v) << std::setw(8)
              << degrees[static_cast<std::size_t>(v)] << std::setw(6)
              << eccentricities[static_cast<std::size_t>(v)]
              << transmissions[static_cast<std::size_t>(v)] << "\n";
  }
  std::cout << "\n";
  std::cout << "ecc connectivity polynomial: " << j["ecc_conn_polynomial"].get<std::string>()
            << "\n";
  std::cout << "total eccentricity polynomial: " << j["total_ecc_polynomial"].get<std::string>()
            << "\n";
  std::cout << "ecc connectivity index: " << j["ecc_conn_index"] << "\n";
  std::cout << "total eccentricity: " << j["total_eccentricity"] << "\n";
  std::cout << "graph transmission: " << j["graph_transmission"] << "\n";
  std::cout << "mean distance: " << j["mean_distance"].get<std::string>() << "\n";
  if (with_detour) {
    std::cout << "detour polynomial: " << j["detour_polynomial"].get<std::string>() << "\n";
    std::cout << "detour index: " << j["detour_index"] << "\n";
  }
  return 0;
}

int run_verify(int from, int to, bool with_detour, const std::string& format,
               const std::string& mutate_field, int detour_limit) {
  if (from < 3 || from > to) {
    std::cerr << "error: verification range requires 3 <= from <= to, got " << from << ".." << to
              << "\n";
    return 2;
  }
  std::vector<ncg::VerificationReport> reports;
  for (int n = from; n <= to; ++n) {
    auto closed = ncg::closed_forms_for(n);
    if (!mutate_field.empty()) {
      ncg::mutate_closed_form(closed, mutate_field);
    }
    reports.push_back(ncg::verify_against(closed, with_detour, detour_limit));
  }

  bool all_pass = true;
  for (const auto& report : reports) {
    all_pass = all_pass && report.overall;
  }

  if (format == "json") {
    auto arr = ncg::ordered_json::array();
    for (const auto& report : reports) {
      arr.push_back(ncg::verification_report_to_json(report));
    }
    std::cout << arr.dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << "n,check,closed_form,computed,pass\n";
    for (const auto& report : reports) {
      for (const auto& check : report.checks) {
        std::cout << report.n << "," << csv_field(check.name) << ","
                  << csv_field(check.closed_form_value) << ","
                  << csv_field(check.computed_value) << "," << (check.pass ? "true" : "false")
                  << "\n";
      }
    }
  } else {
    for (const auto& report : reports) {
      if (report.overall) {
        std::cout << "n=" << report.n << " (" << (report.n % 2 == 0 ? "even" : "odd") << ")"
                  << (report.with_detour ? ", with detour" : "") << ": " << report.checks.size()
                  << " checks, PASS\n";
      } else {
        ncg::render_verification_table(std::cout, report);
      }
    }
    std::cout << (all_pass ? "all checks passed" : "verification FAILED") << "\n";
  }
  return all_pass ? 0 : 1;
}

int run_export(const SourceOptions& source, const std::string& what, std::string format) {
  if (format.empty()) {
    // Graphs default to the edge-list text form, closed forms to JSON.
    format = what == "closed-forms" ? "json" : "table";
  }
  if (what == "closed-forms") {
    if (!source.dihedral_n) {
      std::cerr << "error: closed forms exist only for dihedral groups; use --dihedral\n";
      return 2;
    }
    const auto j = ncg::closed_forms_to_json(ncg::closed_forms_for(*source.dihedral_n));
    if (format == "csv") {
      std::cout << "field,value\n";
      for (const auto& [key, value] : j.items()) {
        std::cout << key << ","
                  << csv_field(value.is_string() ? value.get<std::string>() : value.dump())
                  << "\n";
      }
    } else if (format == "table") {
      for (const auto& [key, value] : j.items()) {
        std::cout << std::left << std::setw(26) << key
                  << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
      }
    } else {
      std::cout << j.dump(2) << "\n";
    }
    return 0;
  }

  const auto group = load_group(source);
  const auto graph = ncg::noncommuting_graph(group);
  if (format == "json") {
    std::cout << ncg::graph_to_json(graph).dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << "u,v\n";
    for (int u = 0; u < graph.vertex_count(); ++u) {
      for (int v = u + 1; v < graph.vertex_count(); ++v) {
        if (graph.adjacent(u, v)) {
          std::cout << csv_field(graph.label(u)) << "," << csv_field(graph.label(v)) << "\n";
        }
      }
    }
  } else {
    ncg::write_edge_list(std::cout, graph);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"non-commuting graphs of finite groups: invariants and closed-form verification"};
  app.require_subcommand(1);

  const auto add_format = [](CLI::App* cmd, std::string& format) {
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"table", "json", "csv"}))
        ->envname("NCG_FORMAT");
  };
  const auto add_source = [](CLI::App* cmd, SourceOptions& source) {
    auto* group = cmd->add_option_group("source", "group to build the graph from");
    group->add_option("--dihedral", source.dihedral_n, "dihedral parameter n (group D_2n)");
    group->add_option("--cayley", source.cayley_path, "path to a Cayley-table file")
        ->check(CLI::ExistingFile);
    group->require_option(1);
  };

  SourceOptions inv_source;
  std::string inv_format = "table";
  bool inv_detour = false;
  int inv_limit = ncg::kDefaultDetourLimit;
  auto* inv = app.add_subcommand("invariants", "compute graph invariants");
  add_source(inv, inv_source);
  add_format(inv, inv_format);
  inv->add_flag("--detour", inv_detour, "also compute the detour polynomial and index");
  inv->add_option("--limit", inv_limit, "exact detour solver vertex limit");

  int verify_from = 0;
  int verify_to = 0;
  bool verify_detour = false;
  std::string verify_format = "table";
  std::string verify_mutate;
  int verify_limit = ncg::kDefaultDetourLimit;
  auto* ver = app.add_subcommand("verify", "check the closed forms against brute force");
  ver->add_option("--from", verify_from, "first n")->required();
  ver->add_option("--to", verify_to, "last n")->required();
  ver->add_flag("--detour", verify_detour, "include the exponential detour checks");
  add_format(ver, verify_format);
  ver->add_option("--mutate", verify_mutate,
                  "corrupt one closed-form constant first (harness soundness testing)");
  ver->add_option("--limit", verify_limit, "exact detour solver vertex limit");

  SourceOptions exp_source;
  std::string exp_format;
  std::string exp_what;
  auto* exp = app.add_subcommand("export", "emit the graph or the closed-form report");
  add_source(exp, exp_source);
  add_format(exp, exp_format);
  exp->add_option("--what", exp_what, "what to export")
      ->check(CLI::IsMember({"graph", "closed-forms"}))
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (inv->parsed()) {
      return run_invariants(inv_source, inv_detour, inv_format, inv_limit);
    }
    if (ver->parsed()) {
      return run_verify(verify_from, verify_to, verify_detour, verify_format, verify_mutate,
                        verify_limit);
    }
    return run_export(exp_source, exp_what, exp_format);
  } catch (const ncg::TooLarge& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const ncg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

#pragma once

#include <charconv>
#include <cstddef>
#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ncg/closed_forms.hpp"
#include "ncg/errors.hpp"
#include "ncg/graph.hpp"
#include "ncg/group.hpp"
#include "ncg/polynomial.hpp"
#include "ncg/verify.hpp"

namespace ncg {

using ordered_json = nlohmann::ordered_json;

// --- Cayley table text format ------------------------------------------
//
// Token stream, whitespace tolerant, '#' starts a comment running to end of
// line. First token: the order m. Next m tokens: element names. Next m*m
// tokens: table rows (row a lists the indices of a*b for b = 0..m-1). The
// identity is discovered during validation, never declared.

namespace detail {

inline std::vector<std::string> cayley_tokens(std::istream& in) {
  std::vector<std::string> tokens;
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream words(line);
    std::string word;
    while (words >> word) {
      tokens.push_back(word);
    }
  }
  return tokens;
}

inline int parse_int(const std::string& token, const std::string& what) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw InvalidParameter("expected " + what + ", got '" + token + "'");
  }
  return value;
}

}  // namespace detail

/// Parses and fully validates a Cayley table; returns the group on success.
inline FiniteGroup read_cayley_table(std::istream& in) {
  const auto tokens = detail::cayley_tokens(in);
  if (tokens.empty()) {
    throw InvalidParameter("cayley table input is empty");
  }
  std::size_t pos = 0;
  const int order = detail::parse_int(tokens[pos++], "group order");
  if (order < 1) {
    throw InvalidParameter("group order must be positive, got " + std::to_string(order));
  }
  const std::size_t expected =
      1 + static_cast<std::size_t>(order) + static_cast<std::size_t>(order) * order;
  if (tokens.size() != expected) {
    throw InvalidParameter("cayley table for order " + std::to_string(order) + " needs " +
                           std::to_string(expected) + " tokens, got " +
                           std::to_string(tokens.size()));
  }
  std::vector<std::string> names(tokens.begin() + 1, tokens.begin() + 1 + order);
  pos += static_cast<std::size_t>(order);
  std::vector<std::vector<int>> table(static_cast<std::size_t>(order),
                                      std::vector<int>(static_cast<std::size_t>(order)));
  for (int a = 0; a < order; ++a) {
    for (int b = 0; b < order; ++b) {
      table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = detail::parse_int(
          tokens[pos++], "table entry at row " + std::to_string(a) + ", column " +
                             std::to_string(b));
    }
  }
  return validate_cayley_table(order, table, std::move(names));
}

inline FiniteGroup read_cayley_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw InvalidParameter("cannot open cayley table file '" + path + "'");
  }
  return read_cayley_table(in);
}

inline void write_cayley_table(std::ostream& out, const FiniteGroup& g) {
  out << g.order() << "\n";
  for (int i = 0; i < g.order(); ++i) {
    out << (i ? " " : "") << g.name(GroupElement{i});
  }
  out << "\n";
  for (int a = 0; a < g.order(); ++a) {
    for (int b = 0; b < g.order(); ++b) {
      out << (b ? " " : "") << g.product(GroupElement{a}, GroupElement{b}).index;
    }
    out << "\n";
  }
}

// --- Graph exports -------------------------------------------------------

namespace detail {

inline std::string quoted_label(const std::string& label) {
  if (label.find_first_of(" \t") != std::string::npos) {
    return "\"" + label + "\"";
  }
  return label;
}

}  // namespace detail

/// One "u v" line per edge, labels quoted when they contain whitespace.
inline void write_edge_list(std::ostream& out, const SimpleGraph& g) {
  for (int u = 0; u < g.vertex_count(); ++u) {
    for (int v = u + 1; v < g.vertex_count(); ++v) {
      if (g.adjacent(u, v)) {
        out << detail::quoted_label(g.label(u)) << " " << detail::quoted_label(g.label(v))
            << "\n";
      }
    }
  }
}

inline ordered_json graph_to_json(const SimpleGraph& g) {
  ordered_json j;
  j["vertices"] = g.labels();
  auto edges = ordered_json::array();
  for (int u = 0; u < g.vertex_count(); ++u) {
    for (int v = u + 1; v < g.vertex_count(); ++v) {
      if (g.adjacent(u, v)) {
        edges.push_back({u, v});
      }
    }
  }
  j["edges"] = std::move(edges);
  return j;
}

inline SimpleGraph graph_from_json(const ordered_json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges") ||
      !j["vertices"].is_array() || !j["edges"].is_array()) {
    throw InvalidParameter("graph json must be {\"vertices\": [...], \"edges\": [[u,v],...]}");
  }
  std::vector<std::string> labels;
  for (const auto& v : j["vertices"]) {
    if (!v.is_string()) {
      throw InvalidParameter("graph json vertices must be strings");
    }
    labels.push_back(v.get<std::string>());
  }
  SimpleGraph g(std::move(labels));
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer()) {
      throw InvalidParameter("graph json edges must be [u, v] index pairs");
    }
    g.add_edge(e[0].get<int>(), e[1].get<int>());
  }
  return g;
}

/// {"terms": [[exponent, coefficient], ...]} in decreasing exponent order.
inline ordered_json polynomial_to_json(const SparsePolynomial& p) {
  auto terms = ordered_json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    terms.push_back({it->first, to_int64(it->second)});
  }
  ordered_json j;
  j["terms"] = std::move(terms);
  return j;
}

/// Flat object with stable field names; polynomials and rationals rendered
/// in their canonical text forms.
inline ordered_json closed_forms_to_json(const ClosedFormReport& r) {
  ordered_json j;
  j["n"] = r.n;
  j["parity"] = r.even ? "even" : "odd";
  j["vertex_count"] = to_int64(r.vertex_count);
  j["edge_count"] = to_int64(r.edge_count);
  j["degree_rotation"] = to_int64(r.degree_rotation);
  j["degree_reflection"] = to_int64(r.degree_reflection);
  j["detour_distance"] = to_int64(r.detour_distance);
  j["detour_polynomial"] = r.detour_polynomial.to_string();
  j["detour_index"] = to_int64(r.detour_index);
  j["ecc_omega1"] = to_int64(r.ecc_omega1);
  j["ecc_omega2"] = to_int64(r.ecc_omega2);
  j["ecc_conn_polynomial"] = r.ecc_conn_polynomial.to_string();
  j["total_ecc_polynomial"] = r.total_ecc_polynomial.to_string();
  j["ecc_conn_index"] = to_int64(r.ecc_conn_index);
  j["total_eccentricity"] = to_int64(r.total_eccentricity);
  j["transmission_rotation"] = to_int64(r.transmission_rotation);
  j["transmission_reflection"] = to_int64(r.transmission_reflection);
  j["graph_transmission"] = to_int64(r.graph_transmission);
  j["mean_distance"] = r.mean_distance.to_string();
  return j;
}

inline ordered_json verification_report_to_json(const VerificationReport& r) {
  ordered_json j;
  j["n"] = r.n;
  j["with_detour"] = r.with_detour;
  j["overall"] = r.overall;
  auto checks = ordered_json::array();
  for (const auto& check : r.checks) {
    ordered_json c;
    c["name"] = check.name;
    c["closed_form"] = check.closed_form_value;
    c["computed"] = check.computed_value;
    c["pass"] = check.pass;
    checks.push_back(std::move(c));
  }
  j["checks"] = std::move(checks);
  return j;
}

inline void render_verification_table(std::ostream& out, const VerificationReport& r) {
  out << "n=" << r.n << " (" << (r.n % 2 == 0 ? "even" : "odd") << ")"
      << (r.with_detour ? ", with detour" : "") << ": " << r.checks.size() << " checks, "
      << (r.overall ? "PASS" : "FAIL") << "\n";
  for (const auto& check : r.checks) {
    out << "  [" << (check.pass ? "ok" : "FAIL") << "] " << std::left << std::setw(24)
        << check.name << " closed=" << check.closed_form_value
        << " computed=" << check.computed_value << "\n";
  }
}

}  // namespace ncg

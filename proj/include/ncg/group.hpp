#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ncg/errors.hpp"

namespace ncg {

/// Index into the owning group's element list.
struct GroupElement {
  int index = 0;
  friend constexpr auto operator<=>(GroupElement, GroupElement) = default;
};

/// (kind, exponent) name of a dihedral element: rotation i is r^i (r^0 the
/// identity), reflection i is s*r^i.
struct DihedralLabel {
  enum class Kind { rotation, reflection };
  Kind kind = Kind::rotation;
  int exponent = 0;
};

inline std::string to_string(const DihedralLabel& label) {
  if (label.kind == DihedralLabel::Kind::rotation) {
    if (label.exponent == 0) return "1";
    if (label.exponent == 1) return "r";
    return "r^" + std::to_string(label.exponent);
  }
  if (label.exponent == 0) return "s";
  if (label.exponent == 1) return "sr";
  return "sr^" + std::to_string(label.exponent);
}

class FiniteGroup;
FiniteGroup dihedral_group(int n);
FiniteGroup validate_cayley_table(int order, const std::vector<std::vector<int>>& table,
                                  std::vector<std::string> names);

/// Finite group represented concretely by its Cayley table. Immutable after
/// construction; the table is the single source of truth for multiplication.
class FiniteGroup {
 public:
  int order() const { return order_; }

  GroupElement identity() const { return identity_; }

  const std::string& name(GroupElement a) const {
    require_element(a);
    return names_[static_cast<std::size_t>(a.index)];
  }

  const std::vector<std::string>& names() const { return names_; }

  GroupElement product(GroupElement a, GroupElement b) const {
    require_element(a);
    require_element(b);
    return {table_[static_cast<std::size_t>(a.index) * order_ + b.index]};
  }

  bool commutes(GroupElement a, GroupElement b) const {
    return product(a, b) == product(b, a);
  }

  std::optional<GroupElement> find(std::string_view element_name) const {
    for (int i = 0; i < order_; ++i) {
      if (names_[static_cast<std::size_t>(i)] == element_name) {
        return GroupElement{i};
      }
    }
    return std::nullopt;
  }

  void require_element(GroupElement a) const {
    if (a.index < 0 || a.index >= order_) {
      throw OutOfRange("element index " + std::to_string(a.index) +
                       " out of range for group of order " + std::to_string(order_));
    }
  }

  bool operator==(const FiniteGroup& other) const = default;

 private:
  FiniteGroup(int order, std::vector<std::string> names, std::vector<int> table,
              GroupElement identity)
      : order_(order),
        names_(std::move(names)),
        table_(std::move(table)),
        identity_(identity) {}

  friend FiniteGroup dihedral_group(int n);
  friend FiniteGroup validate_cayley_table(int order,
                                           const std::vector<std::vector<int>>& table,
                                           std::vector<std::string> names);

  int order_ = 1;
  std::vector<std::string> names_;
  std::vector<int> table_;  // row-major, table_[a*order_+b] = index of a*b
  GroupElement identity_;
};

/// Graph-side element index of a dihedral label, under the canonical ordering
/// 1, r, ..., r^{n-1}, s, sr, ..., sr^{n-1}.
inline GroupElement dihedral_element(int n, const DihedralLabel& label) {
  if (n < 3) {
    throw InvalidParameter("dihedral parameter n must be at least 3");
  }
  if (label.exponent < 0 || label.exponent >= n) {
    throw OutOfRange("dihedral exponent " + std::to_string(label.exponent) +
                     " out of range for n=" + std::to_string(n));
  }
  const int offset = label.kind == DihedralLabel::Kind::rotation ? 0 : n;
  return GroupElement{offset + label.exponent};
}

/// D_2n with presentation r^n = s^2 = 1, s r s = r^{-1}. The table is
/// materialized from symbolic (kind, exponent) multiplication:
///   r^a * r^b   = r^{a+b},   r^a * sr^b  = sr^{b-a},
///   sr^a * r^b  = sr^{a+b},  sr^a * sr^b = r^{b-a}   (exponents mod n).
inline FiniteGroup dihedral_group(int n) {
  if (n < 3) {
    throw InvalidParameter("dihedral parameter n must be at least 3, got " +
                           std::to_string(n));
  }
  const int order = 2 * n;
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(order));
  for (int i = 0; i < n; ++i) {
    names.push_back(to_string(DihedralLabel{DihedralLabel::Kind::rotation, i}));
  }
  for (int i = 0; i < n; ++i) {
    names.push_back(to_string(DihedralLabel{DihedralLabel::Kind::reflection, i}));
  }

  const auto mod = [n](int e) { return ((e % n) + n) % n; };
  std::vector<int> table(static_cast<std::size_t>(order) * order);
  for (int a = 0; a < order; ++a) {
    const bool a_reflection = a >= n;
    const int ea = a_reflection ? a - n : a;
    for (int b = 0; b < order; ++b) {
      const bool b_reflection = b >= n;
      const int eb = b_reflection ? b - n : b;
      int result;
      if (!a_reflection && !b_reflection) {
        result = mod(ea + eb);
      } else if (!a_reflection && b_reflection) {
        result = n + mod(eb - ea);
      } else if (a_reflection && !b_reflection) {
        result = n + mod(ea + eb);
      } else {
        result = mod(eb - ea);
      }
      table[static_cast<std::size_t>(a) * order + b] = result;
    }
  }
  return FiniteGroup(order, std::move(names), std::move(table), GroupElement{0});
}

/// Checks every group axiom on a raw table and wraps it on success. Runs the
/// full O(order^3) associativity loop; ingestion is a cold path.
inline FiniteGroup validate_cayley_table(int order, const std::vector<std::vector<int>>& table,
                                         std::vector<std::string> names) {
  if (order < 1) {
    throw InvalidParameter("group order must be positive, got " + std::to_string(order));
  }
  if (static_cast<int>(table.size()) != order) {
    throw InvalidParameter("cayley table has " + std::to_string(table.size()) +
                           " rows, expected " + std::to_string(order));
  }
  if (static_cast<int>(names.size()) != order) {
    throw InvalidParameter("expected " + std::to_string(order) + " element names, got " +
                           std::to_string(names.size()));
  }

  std::vector<int> flat(static_cast<std::size_t>(order) * order);
  for (int a = 0; a < order; ++a) {
    if (static_cast<int>(table[static_cast<std::size_t>(a)].size()) != order) {
      throw InvalidParameter("cayley table row " + std::to_string(a) + " has " +
                             std::to_string(table[static_cast<std::size_t>(a)].size()) +
                             " entries, expected " + std::to_string(order));
    }
    for (int b = 0; b < order; ++b) {
      const int value = table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
      if (value < 0 || value >= order) {
        throw NotClosed("entry at row " + std::to_string(a) + ", column " + std::to_string(b) +
                        " is " + std::to_string(value) + ", outside 0.." +
                        std::to_string(order - 1));
      }
      flat[static_cast<std::size_t>(a) * order + b] = value;
    }
  }

  // Latin square: every row and column is a permutation.
  std::vector<int> seen_at(static_cast<std::size_t>(order));
  for (int a = 0; a < order; ++a) {
    std::fill(seen_at.begin(), seen_at.end(), -1);
    for (int b = 0; b < order; ++b) {
      const int value = flat[static_cast<std::size_t>(a) * order + b];
      if (seen_at[static_cast<std::size_t>(value)] >= 0) {
        throw NotClosed("row " + std::to_string(a) + " repeats value " + std::to_string(value) +
                        " at columns " + std::to_string(seen_at[static_cast<std::size_t>(value)]) +
                        " and " + std::to_string(b));
      }
      seen_at[static_cast<std::size_t>(value)] = b;
    }
  }
  for (int b = 0; b < order; ++b) {
    std::fill(seen_at.begin(), seen_at.end(), -1);
    for (int a = 0; a < order; ++a) {
      const int value = flat[static_cast<std::size_t>(a) * order + b];
      if (seen_at[static_cast<std::size_t>(value)] >= 0) {
        throw NotClosed("column " + std::to_string(b) + " repeats value " + std::to_string(value) +
                        " at rows " + std::to_string(seen_at[static_cast<std::size_t>(value)]) +
                        " and " + std::to_string(a));
      }
      seen_at[static_cast<std::size_t>(value)] = a;
    }
  }

  // Two-sided identity is discovered, not declared.
  int identity = -1;
  for (int e = 0; e < order; ++e) {
    bool ok = true;
    for (int a = 0; a < order && ok; ++a) {
      ok = flat[static_cast<std::size_t>(e) * order + a] == a &&
           flat[static_cast<std::size_t>(a) * order + e] == a;
    }
    if (ok) {
      identity = e;
      break;
    }
  }
  if (identity < 0) {
    throw NoIdentity("no two-sided identity element found");
  }

  for (int a = 0; a < order; ++a) {
    bool found = false;
    for (int x = 0; x < order && !found; ++x) {
      found = flat[static_cast<std::size_t>(a) * order + x] == identity &&
              flat[static_cast<std::size_t>(x) * order + a] == identity;
    }
    if (!found) {
      throw NoInverse("element " + std::to_string(a) + " ('" +
                      names[static_cast<std::size_t>(a)] + "') has no two-sided inverse");
    }
  }

  for (int a = 0; a < order; ++a) {
    for (int b = 0; b < order; ++b) {
      const int ab = flat[static_cast<std::size_t>(a) * order + b];
      for (int c = 0; c < order; ++c) {
        const int bc = flat[static_cast<std::size_t>(b) * order + c];
        if (flat[static_cast<std::size_t>(ab) * order + c] !=
            flat[static_cast<std::size_t>(a) * order + bc]) {
          throw NotAssociative("(a*b)*c != a*(b*c) at a=" + std::to_string(a) +
                               ", b=" + std::to_string(b) + ", c=" + std::to_string(c));
        }
      }
    }
  }

  return FiniteGroup(order, std::move(names), std::move(flat), GroupElement{identity});
}

/// Elements commuting with everything, in index order.
inline std::vector<GroupElement> center(const FiniteGroup& g) {
  std::vector<GroupElement> result;
  for (int z = 0; z < g.order(); ++z) {
    bool central = true;
    for (int x = 0; x < g.order() && central; ++x) {
      central = g.commutes(GroupElement{z}, GroupElement{x});
    }
    if (central) {
      result.push_back(GroupElement{z});
    }
  }
  return result;
}

/// Elements commuting with a, in index order.
inline std::vector<GroupElement> centralizer(const FiniteGroup& g, GroupElement a) {
  g.require_element(a);
  std::vector<GroupElement> result;
  for (int x = 0; x < g.order(); ++x) {
    if (g.commutes(a, GroupElement{x})) {
      result.push_back(GroupElement{x});
    }
  }
  return result;
}

inline bool is_central(const FiniteGroup& g, GroupElement a) {
  g.require_element(a);
  for (int x = 0; x < g.order(); ++x) {
    if (!g.commutes(a, GroupElement{x})) {
      return false;
    }
  }
  return true;
}

inline bool is_abelian(const FiniteGroup& g) {
  for (int a = 0; a < g.order(); ++a) {
    for (int b = a + 1; b < g.order(); ++b) {
      if (!g.commutes(GroupElement{a}, GroupElement{b})) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace ncg

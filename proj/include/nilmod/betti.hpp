#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nilmod/invariants.hpp"

namespace nilmod {

/// Graded Betti numbers beta_{n,j}, zero entries omitted.
struct BettiTable {
  std::map<std::pair<int, int>, long long> entries;
  std::vector<std::string> koszul_variables;
  int max_n = 0;
  int max_j = 0;
  /// Set when the window is known to contain the whole table.
  bool certified = false;

  long long at(int n, int j) const;
  void add(int n, int j, long long value);

  /// Largest n with a nonzero entry; -1 for the empty table.
  int projective_dimension() const;
  /// Sum over j of beta_{n,j}.
  long long row_total(int n) const;
  /// sum (-1)^n beta_{n,j} t^j
  TPoly euler_polynomial() const;

  /// "n: {j: rank, ...}" lines, one per nonzero homological degree.
  std::string to_text() const;

  /// Entry-by-entry equality (window and variables are ignored).
  bool same_entries(const BettiTable& other) const { return entries == other.entries; }
};

}  // namespace nilmod

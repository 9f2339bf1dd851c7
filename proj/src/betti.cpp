#include "nilmod/betti.hpp"

#include <algorithm>
#include <sstream>

namespace nilmod {

long long BettiTable::at(int n, int j) const {
  auto it = entries.find({n, j});
  return it == entries.end() ? 0 : it->second;
}

void BettiTable::add(int n, int j, long long value) {
  if (value == 0) return;
  auto& slot = entries[{n, j}];
  slot += value;
  if (slot == 0) entries.erase({n, j});
}

int BettiTable::projective_dimension() const {
  int pd = -1;
  for (const auto& [key, value] : entries)
    if (value != 0) pd = std::max(pd, key.first);
  return pd;
}

long long BettiTable::row_total(int n) const {
  long long total = 0;
  for (const auto& [key, value] : entries)
    if (key.first == n) total += value;
  return total;
}

TPoly BettiTable::euler_polynomial() const {
  TPoly out;
  for (const auto& [key, value] : entries) {
    TPoly term(static_cast<std::size_t>(key.second) + 1, 0);
    term[key.second] = key.first % 2 == 0 ? value : -value;
    out = tpoly_add(out, term);
  }
  return out;
}

std::string BettiTable::to_text() const {
  std::ostringstream os;
  int current = -1;
  bool first = true;
  for (const auto& [key, value] : entries) {
    if (key.first != current) {
      if (current >= 0) os << "}\n";
      current = key.first;
      os << current << ": {";
      first = true;
    }
    if (!first) os << ", ";
    os << key.second << ": " << value;
    first = false;
  }
  if (current >= 0) os << "}\n";
  return os.str();
}

}  // namespace nilmod

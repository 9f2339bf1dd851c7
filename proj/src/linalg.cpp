#include "nilmod/linalg.hpp"

#include <algorithm>
#include <unordered_map>

namespace nilmod {

namespace {

template <typename T>
using Row = std::vector<std::pair<std::uint32_t, T>>;

std::size_t by_length(std::vector<std::size_t>& order, std::size_t n,
                      const auto& length_of) {
  order.resize(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return length_of(a) < length_of(b); });
  return n;
}

// row <- row - c * pivot, columns kept sorted
Row<std::uint32_t> axpy_mod(const Row<std::uint32_t>& row, std::uint32_t c,
                            const Row<std::uint32_t>& pivot, const PrimeField& k) {
  Row<std::uint32_t> out;
  out.reserve(row.size() + pivot.size());
  std::size_t i = 0, j = 0;
  while (i < row.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
      out.push_back(row[i++]);
    } else if (i == row.size() || pivot[j].first < row[i].first) {
      out.emplace_back(pivot[j].first, k.neg(k.mul(c, pivot[j].second)));
      ++j;
    } else {
      auto v = k.sub(row[i].second, k.mul(c, pivot[j].second));
      if (v != 0) out.emplace_back(row[i].first, v);
      ++i;
      ++j;
    }
  }
  return out;
}

std::size_t rank_mod_p(const PrimeField& k, std::vector<Row<std::uint32_t>> rows) {
  std::vector<std::size_t> order;
  by_length(order, rows.size(), [&](std::size_t i) { return rows[i].size(); });
  std::unordered_map<std::uint32_t, Row<std::uint32_t>> pivots;
  for (auto idx : order) {
    auto row = std::move(rows[idx]);
    while (!row.empty()) {
      auto it = pivots.find(row.front().first);
      if (it == pivots.end()) {
        auto inv = k.inv(row.front().second);
        for (auto& e : row) e.second = k.mul(e.second, inv);
        pivots.emplace(row.front().first, std::move(row));
        break;
      }
      row = axpy_mod(row, row.front().second, it->second, k);
    }
  }
  return pivots.size();
}

void make_primitive(Row<mpz_class>& row) {
  mpz_class g = 0;
  for (const auto& e : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.second.get_mpz_t());
    if (g == 1) return;
  }
  if (g > 1)
    for (auto& e : row) mpz_divexact(e.second.get_mpz_t(), e.second.get_mpz_t(), g.get_mpz_t());
}

// row <- p * row - r * pivot, with p, r the two leading entries over their gcd
Row<mpz_class> cross_eliminate(const Row<mpz_class>& row, const Row<mpz_class>& pivot) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), row.front().second.get_mpz_t(), pivot.front().second.get_mpz_t());
  mpz_class p = pivot.front().second / g;
  mpz_class r = row.front().second / g;
  Row<mpz_class> out;
  out.reserve(row.size() + pivot.size());
  std::size_t i = 1, j = 1;
  while (i < row.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
      out.emplace_back(row[i].first, p * row[i].second);
      ++i;
    } else if (i == row.size() || pivot[j].first < row[i].first) {
      out.emplace_back(pivot[j].first, -(r * pivot[j].second));
      ++j;
    } else {
      mpz_class v = p * row[i].second - r * pivot[j].second;
      if (v != 0) out.emplace_back(row[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  make_primitive(out);
  return out;
}

std::size_t rank_integer(std::vector<Row<mpz_class>> rows) {
  std::vector<std::size_t> order;
  by_length(order, rows.size(), [&](std::size_t i) { return rows[i].size(); });
  std::unordered_map<std::uint32_t, Row<mpz_class>> pivots;
  for (auto idx : order) {
    auto row = std::move(rows[idx]);
    make_primitive(row);
    while (!row.empty()) {
      auto it = pivots.find(row.front().first);
      if (it == pivots.end()) {
        pivots.emplace(row.front().first, std::move(row));
        break;
      }
      row = cross_eliminate(row, it->second);
    }
  }
  return pivots.size();
}

}  // namespace

std::size_t matrix_rank(const PrimeField& field, std::vector<SparseRow<PrimeField>> rows) {
  return rank_mod_p(field, std::move(rows));
}

std::size_t matrix_rank(const RationalField&, std::vector<SparseRow<RationalField>> rows) {
  std::vector<Row<mpz_class>> ints;
  ints.reserve(rows.size());
  for (const auto& row : rows) {
    mpz_class den = 1;
    for (const auto& e : row) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), e.second.get_den_mpz_t());
    Row<mpz_class> out;
    out.reserve(row.size());
    for (const auto& e : row) out.emplace_back(e.first, e.second.get_num() * (den / e.second.get_den()));
    ints.push_back(std::move(out));
  }
  return rank_integer(std::move(ints));
}

}  // namespace nilmod

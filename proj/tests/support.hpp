#pragma once

// Random generators and brute-force oracles shared by the test binaries.
// The oracles use dense linear algebra only; they never call the Gröbner
// engine.

#include <cstdint>
#include <algorithm>
#include <span>
#include <unordered_map>
#include <random>
#include <string>
#include <vector>

#include "nilmod/groebner.hpp"
#include "nilmod/monomial.hpp"
#include "nilmod/polynomial.hpp"

namespace nilmod::testing {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }
  bool coin() { return uniform(0, 1) == 1; }
  template <typename T>
  void shuffle(std::vector<T>& v) { std::shuffle(v.begin(), v.end(), gen_); }

 private:
  std::mt19937_64 gen_;
};

inline std::vector<std::string> var_names(std::size_t n, const std::string& stem = "x") {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(stem + std::to_string(i + 1));
  return out;
}

inline Monomial random_monomial(Rng& rng, std::size_t nvars, int max_degree) {
  Monomial m(nvars);
  int budget = rng.uniform(0, max_degree);
  while (budget > 0) {
    auto v = static_cast<std::size_t>(rng.uniform(0, static_cast<int>(nvars) - 1));
    m.set(v, m[v] + 1);
    --budget;
  }
  return m;
}

inline Monomial random_monomial_of_degree(Rng& rng, std::size_t nvars, int degree) {
  Monomial m(nvars);
  for (int k = 0; k < degree; ++k) {
    auto v = static_cast<std::size_t>(rng.uniform(0, static_cast<int>(nvars) - 1));
    m.set(v, m[v] + 1);
  }
  return m;
}

template <typename F>
Polynomial<F> random_polynomial(const RingPtr<F>& ring, Rng& rng, int max_terms, int max_degree,
                                int coeff_range = 9) {
  std::vector<typename Polynomial<F>::Term> terms;
  int count = rng.uniform(0, max_terms);
  for (int k = 0; k < count; ++k)
    terms.push_back({random_monomial(rng, ring->nvars(), max_degree),
                     ring->field().from_int(rng.uniform(-coeff_range, coeff_range))});
  return Polynomial<F>::from_terms(ring, std::move(terms));
}

template <typename F>
Polynomial<F> random_homogeneous(const RingPtr<F>& ring, Rng& rng, int max_terms, int degree,
                                 int coeff_range = 9) {
  std::vector<typename Polynomial<F>::Term> terms;
  int count = rng.uniform(1, max_terms);
  for (int k = 0; k < count; ++k)
    terms.push_back({random_monomial_of_degree(rng, ring->nvars(), degree),
                     ring->field().from_int(rng.uniform(-coeff_range, coeff_range))});
  return Polynomial<F>::from_terms(ring, std::move(terms));
}

inline void enumerate_monomials(std::size_t nvars, int degree, std::vector<int>& current,
                                std::size_t index, std::vector<Monomial>& out) {
  if (index + 1 == nvars) {
    current[index] = degree;
    out.emplace_back(std::span<const int>(current));
    current[index] = 0;
    return;
  }
  for (int e = degree; e >= 0; --e) {
    current[index] = e;
    enumerate_monomials(nvars, degree - e, current, index + 1, out);
  }
  current[index] = 0;
}

/// Every monomial of the given degree, in no particular order.
inline std::vector<Monomial> all_monomials(std::size_t nvars, int degree) {
  std::vector<Monomial> out;
  if (degree < 0) return out;
  if (nvars == 0) {
    if (degree == 0) out.emplace_back(0);
    return out;
  }
  std::vector<int> current(nvars, 0);
  enumerate_monomials(nvars, degree, current, 0, out);
  return out;
}

/// Rank of a dense matrix over Z/p by plain Gaussian elimination.
inline std::size_t dense_rank_mod_p(std::vector<std::vector<std::uint64_t>> rows, std::uint64_t p) {
  auto inv = [p](std::uint64_t a) {
    std::uint64_t result = 1, e = p - 2;
    while (e > 0) {
      if (e & 1) result = result * a % p;
      a = a * a % p;
      e >>= 1;
    }
    return result;
  };
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    const std::uint64_t scale = inv(rows[rank][c]);
    for (auto& x : rows[rank]) x = x * scale % p;
    for (std::size_t i = rank + 1; i < rows.size(); ++i) {
      const std::uint64_t f = rows[i][c];
      if (f == 0) continue;
      for (std::size_t k = c; k < cols; ++k)
        rows[i][k] = (rows[i][k] + (p - f) * rows[rank][k]) % p;
    }
    ++rank;
  }
  return rank;
}

/// dim_k (S/I)_d computed as (number of degree-d monomials) minus the rank of
/// all degree-d multiples m*g of the homogeneous generators.
inline long long hilbert_function_by_rank(const Ideal<PrimeField>& ideal, int degree) {
  const auto& ring = ideal.ring();
  const std::size_t n = ring->nvars();
  const std::uint64_t p = ring->field().characteristic();
  auto columns = all_monomials(n, degree);
  std::unordered_map<Monomial, std::size_t, MonomialHash> column_of;
  for (std::size_t i = 0; i < columns.size(); ++i) column_of[columns[i]] = i;

  std::vector<std::vector<std::uint64_t>> rows;
  for (const auto& g : ideal.generators()) {
    const int e = static_cast<int>(g.degree());
    if (g.is_zero() || e > degree) continue;
    for (const auto& m : all_monomials(n, degree - e)) {
      std::vector<std::uint64_t> row(columns.size(), 0);
      for (const auto& t : g.terms()) row[column_of.at(t.monomial * m)] = t.coeff;
      rows.push_back(std::move(row));
    }
  }
  return static_cast<long long>(columns.size()) -
         static_cast<long long>(dense_rank_mod_p(std::move(rows), p));
}

inline long long binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace nilmod::testing

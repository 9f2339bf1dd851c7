#include <doctest.h>

#include "nilmod/linalg.hpp"
#include "nilmod/moduli.hpp"
#include "nilmod/syzygy.hpp"
#include "support.hpp"

using namespace nilmod;
using nilmod::testing::Rng;

namespace {

BettiTable table_of(std::initializer_list<std::tuple<int, int, long long>> entries) {
  BettiTable t;
  for (auto [n, j, v] : entries) t.add(n, j, v);
  return t;
}

template <typename F>
void check_euler_identity(const Ideal<F>& ideal, const BettiTable& table) {
  // K-polynomial computed directly from the Hilbert series.
  auto hs = hilbert_series(ideal);
  const std::size_t w = table.koszul_variables.size();
  REQUIRE(hs.dimension.has_value());
  REQUIRE(w >= *hs.dimension);
  auto k = tpoly_times_one_minus_t(hs.simplified_numerator, w - *hs.dimension);
  CHECK(table.euler_polynomial() == k);
  CHECK(k_polynomial(ideal, w) == k);
}

std::size_t dense_rank_q(const std::vector<SparseRow<RationalField>>& sparse, int cols) {
  std::vector<std::vector<mpq_class>> m;
  for (const auto& row : sparse) {
    std::vector<mpq_class> dense(static_cast<std::size_t>(cols));
    for (const auto& [c, v] : row) dense[c] = v;
    m.push_back(dense);
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < static_cast<std::size_t>(cols) && rank < m.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.size() && m[pivot][c] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t i = rank + 1; i < m.size(); ++i) {
      mpq_class f = m[i][c] / m[rank][c];
      for (std::size_t k = c; k < m[i].size(); ++k) m[i][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

TEST_CASE("sparse rank agrees with dense elimination") {
  Rng rng(301);
  const std::uint64_t p = 101;
  for (int trial = 0; trial < 60; ++trial) {
    const int rows = rng.uniform(1, 14), cols = rng.uniform(1, 14);
    std::vector<std::vector<std::uint64_t>> dense(rows, std::vector<std::uint64_t>(cols, 0));
    std::vector<SparseRow<PrimeField>> sparse_p;
    std::vector<SparseRow<RationalField>> sparse_q;
    // Low-rank structure: later rows are often combinations of earlier ones.
    for (int i = 0; i < rows; ++i) {
      std::vector<long long> row(cols, 0);
      if (i >= 2 && rng.coin()) {
        const int a = rng.uniform(-3, 3), b = rng.uniform(-3, 3);
        for (int c = 0; c < cols; ++c) row[c] = a * static_cast<long long>(dense[0][c]) +
                                                b * static_cast<long long>(dense[1][c]);
      } else {
        for (int c = 0; c < cols; ++c) row[c] = rng.uniform(0, 4) == 0 ? rng.uniform(-5, 5) : 0;
      }
      SparseRow<PrimeField> sp;
      SparseRow<RationalField> sq;
      for (int c = 0; c < cols; ++c) {
        long long v = ((row[c] % static_cast<long long>(p)) + p) % p;
        dense[i][c] = static_cast<std::uint64_t>(v);
        if (v != 0) sp.emplace_back(c, static_cast<PrimeField::Element>(v));
        if (row[c] != 0) sq.emplace_back(c, mpq_class(static_cast<long>(row[c])));
      }
      sparse_p.push_back(sp);
      sparse_q.push_back(sq);
    }
    const auto expected = testing::dense_rank_mod_p(dense, p);
    CHECK(matrix_rank(PrimeField(p), sparse_p) == expected);
    CHECK(matrix_rank(RationalField{}, sparse_q) == dense_rank_q(sparse_q, cols));
  }
}

TEST_CASE("rank over Q of a matrix that degenerates mod p") {
  std::vector<SparseRow<RationalField>> rows = {{{0, mpq_class(1)}, {1, mpq_class(2)}},
                                                {{0, mpq_class(3)}, {1, mpq_class(1)}}};
  CHECK(matrix_rank(RationalField{}, rows) == 2);
  std::vector<SparseRow<PrimeField>> mod5 = {{{0, 1}, {1, 2}}, {{0, 3}, {1, 1}}};
  CHECK(matrix_rank(PrimeField(5), mod5) == 1);
}

TEST_CASE("Betti numbers of a complete intersection") {
  auto ring = PolyRing<RationalField>::make(RationalField{}, {"x", "y"});
  Ideal<RationalField> ci(ring, {parse_polynomial(ring, "x^2"), parse_polynomial(ring, "y^3")});
  auto t = koszul_betti(ci, std::vector<std::string>{"x", "y"}, {2, 6});
  CHECK(t.same_entries(table_of({{0, 0, 1}, {1, 2, 1}, {1, 3, 1}, {2, 5, 1}})));
  CHECK(t.certified);
  check_euler_identity(ci, t);
}

TEST_CASE("Betti numbers of the twisted cubic cone") {
  // Eagon-Northcott: 1, 3 quadrics, 2 linear syzygies.
  auto ring = PolyRing<PrimeField>::make(PrimeField(7), {"x", "y", "z", "w"});
  Ideal<PrimeField> cubic(ring, {parse_polynomial(ring, "x*z - y^2"), parse_polynomial(ring, "x*w - y*z"),
                                 parse_polynomial(ring, "y*w - z^2")});
  auto t = koszul_betti(cubic, std::vector<std::string>{"x", "y", "z", "w"}, {4, 6});
  CHECK(t.same_entries(table_of({{0, 0, 1}, {1, 2, 3}, {2, 3, 2}})));
  auto v = homological_verdicts(t, 2, 4);
  CHECK(v.conclusive);
  CHECK(v.proj_dim == 2);
  CHECK(v.cohen_macaulay);
  CHECK(v.type == 2);
  CHECK_FALSE(v.gorenstein);
}

TEST_CASE("A_r Betti tables follow the Eagon-Northcott pattern") {
  // beta_{n,n+1} = n * C(2r, n+1) for a 2 x 2r scroll.
  for (int r = 1; r <= 2; ++r) {
    auto ideal = construct_A(r, PrimeField(5));
    auto w = ideal.ring()->variables();
    auto t = koszul_betti(ideal, w, {static_cast<int>(w.size()), static_cast<int>(w.size()) + 2});
    BettiTable expected;
    expected.add(0, 0, 1);
    for (int n = 1; n < 2 * r; ++n) expected.add(n, n + 1, n * testing::binomial(2 * r, n + 1));
    CHECK(t.same_entries(expected));
    CHECK(t.certified);
    check_euler_identity(ideal, t);
  }
}

TEST_CASE("B0_1 as a module over the Koszul variables") {
  auto ideal = construct_B0(1, PrimeField(5));
  std::vector<std::string> w{"a1", "b1", "c1", "phi1", "phi2", "phi3", "phi4"};
  auto t = koszul_betti(ideal, w, {7, 9});
  CHECK(t.same_entries(table_of({{0, 0, 1}, {0, 1, 1}, {1, 2, 5}, {2, 3, 3}})));
  CHECK(t.certified);
  check_euler_identity(ideal, t);
  std::vector<std::size_t> idx;
  for (const auto& x : w) idx.push_back(*ideal.ring()->index_of(x));
  CHECK(module_generator_degrees(ideal, idx) == std::vector<int>{0, 1});
}

TEST_CASE("Betti tables do not depend on the order of the Koszul variables") {
  Rng rng(311);
  auto ideal = construct_A(2, PrimeField(3));
  auto w = ideal.ring()->variables();
  auto reference = koszul_betti(ideal, w, {6, 8});
  for (int trial = 0; trial < 3; ++trial) {
    rng.shuffle(w);
    CHECK(koszul_betti(ideal, w, {6, 8}).same_entries(reference));
  }
}

TEST_CASE("Betti numbers over Q and F_p agree for the moduli ideals") {
  auto q = koszul_betti(construct_A(2, RationalField{}),
                        construct_A(2, RationalField{}).ring()->variables(), {6, 8});
  auto p = koszul_betti(construct_A(2, PrimeField(7)),
                        construct_A(2, PrimeField(7)).ring()->variables(), {6, 8});
  CHECK(q.same_entries(p));
}

TEST_CASE("a truncated window is not certified") {
  auto ideal = construct_A(2, PrimeField(5));
  auto w = ideal.ring()->variables();
  auto t = koszul_betti(ideal, w, {2, 8});
  CHECK_FALSE(t.certified);
  CHECK(t.at(1, 2) == 6);
  CHECK(t.at(2, 3) == 8);
  CHECK(t.at(3, 4) == 0);
  CHECK_FALSE(homological_verdicts(t, 3, 6).conclusive);
}

TEST_CASE("Koszul homology rejects unsuitable input") {
  auto ring = PolyRing<RationalField>::make(RationalField{}, {"x", "y"});
  Ideal<RationalField> affine(ring, {parse_polynomial(ring, "x - 1")});
  CHECK_THROWS_AS(koszul_betti(affine, std::vector<std::string>{"x", "y"}, {2, 4}), InvalidInput);
  Ideal<RationalField> cone(ring, {parse_polynomial(ring, "x*y")});
  // k[x,y]/(xy) is not finite over k[x].
  CHECK_THROWS_AS(koszul_betti(cone, std::vector<std::string>{"x"}, {1, 4}), InvalidInput);
}

TEST_CASE("BettiTable bookkeeping") {
  auto t = table_of({{0, 0, 1}, {1, 2, 6}, {2, 3, 8}, {3, 4, 3}});
  CHECK(t.projective_dimension() == 3);
  CHECK(t.row_total(3) == 3);
  CHECK(t.euler_polynomial() == TPoly{1, 0, -6, 8, -3});
  CHECK(t.to_text() == "0: {0: 1}\n1: {2: 6}\n2: {3: 8}\n3: {4: 3}\n");
  CHECK(BettiTable{}.projective_dimension() == -1);
}

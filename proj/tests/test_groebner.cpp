#include <doctest.h>

#include "nilmod/groebner.hpp"
#include "nilmod/ring_map.hpp"
#include "support.hpp"

using namespace nilmod;
using nilmod::testing::Rng;

namespace {

template <typename F>
Polynomial<F> P(const RingPtr<F>& ring, const char* text) {
  return parse_polynomial(ring, text);
}

template <typename F>
std::vector<Ideal<F>> random_ideals(const RingPtr<F>& ring, std::uint64_t seed, int count) {
  Rng rng(seed);
  std::vector<Ideal<F>> out;
  for (int k = 0; k < count; ++k) {
    std::vector<Polynomial<F>> gens;
    int ngens = rng.uniform(1, 4);
    for (int g = 0; g < ngens; ++g) gens.push_back(testing::random_polynomial(ring, rng, 4, 3, 5));
    out.emplace_back(ring, gens);
  }
  return out;
}

template <typename F>
void check_basis_properties(const Ideal<F>& ideal) {
  const auto& basis = ideal.basis();
  CHECK(satisfies_buchberger_criterion(basis));
  const auto& order = ideal.ring()->order();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    CHECK(ideal.ring()->field().is_one(basis[i].leading_coefficient()));
    if (i > 0) CHECK(order.greater(basis[i].leading_monomial(), basis[i - 1].leading_monomial()));
    // Fully inter-reduced: no term of g_i is divisible by another leading monomial.
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (i == j) continue;
      for (const auto& t : basis[i].terms())
        CHECK_FALSE(basis[j].leading_monomial().divides(t.monomial));
    }
  }
  for (const auto& g : ideal.generators()) CHECK(normal_form(g, ideal).is_zero());
}

}  // namespace

TEST_CASE("reduced bases of random ideals satisfy Buchberger's criterion") {
  auto q = PolyRing<RationalField>::make(RationalField{}, testing::var_names(3));
  for (const auto& ideal : random_ideals(q, 101, 25)) check_basis_properties(ideal);
  auto fp = PolyRing<PrimeField>::make(PrimeField(5), testing::var_names(4));
  for (const auto& ideal : random_ideals(fp, 102, 25)) check_basis_properties(ideal);
  auto lex = PolyRing<PrimeField>::make(PrimeField(7), testing::var_names(3), MonomialOrder::lex());
  for (const auto& ideal : random_ideals(lex, 103, 15)) check_basis_properties(ideal);
}

TEST_CASE("normal form is idempotent and respects the ideal") {
  auto ring = PolyRing<PrimeField>::make(PrimeField(11), testing::var_names(3));
  Rng rng(111);
  for (const auto& ideal : random_ideals(ring, 112, 15)) {
    for (int trial = 0; trial < 10; ++trial) {
      auto f = testing::random_polynomial(ring, rng, 5, 4);
      auto nf = normal_form(f, ideal);
      CHECK(normal_form(nf, ideal) == nf);
      // f - nf(f) lies in the ideal, and multiples of generators reduce to zero.
      CHECK(normal_form(f - nf, ideal).is_zero());
      auto g = ideal.generators().front();
      CHECK(normal_form(f * g, ideal).is_zero());
      CHECK(normal_form(f + f * g, ideal) == nf);
    }
  }
}

TEST_CASE("the basis does not depend on generator order or redundancy") {
  auto ring = PolyRing<RationalField>::make(RationalField{}, testing::var_names(3));
  Rng rng(121);
  for (const auto& ideal : random_ideals(ring, 122, 15)) {
    auto gens = ideal.generators();
    rng.shuffle(gens);
    gens.push_back(gens.front() * testing::random_polynomial(ring, rng, 3, 2) + gens.back());
    Ideal<RationalField> other(ring, gens);
    CHECK(equal_ideals(ideal, other));
  }
}

TEST_CASE("unit and zero ideals") {
  auto ring = PolyRing<RationalField>::make(RationalField{}, {"x", "y"});
  Ideal<RationalField> unit(ring, {P(ring, "x"), P(ring, "x - 1")});
  CHECK(unit.is_unit());
  CHECK(unit.basis().size() == 1);
  CHECK(Ideal<RationalField>::zero(ring).is_zero());
  Ideal<RationalField> coprime(ring, {P(ring, "x^2"), P(ring, "y^3")});
  CHECK(coprime.basis().size() == 2);
  CHECK(coprime.stats().zero_reductions == 0);
}

TEST_CASE("elimination recovers the twisted cubic") {
  auto ring = PolyRing<RationalField>::make(RationalField{}, {"t", "x", "y", "z"});
  Ideal<RationalField> graph(ring, {P(ring, "x - t"), P(ring, "y - t^2"), P(ring, "z - t^3")});
  auto image = eliminate(graph, 1);
  auto small = image.ring();
  CHECK(small->variables() == std::vector<std::string>{"x", "y", "z"});
  Ideal<RationalField> expected(small, {P(small, "x*z - y^2"), P(small, "y - x^2"),
                                        P(small, "z - x*y")});
  CHECK(equal_ideals(image, expected));
}

TEST_CASE("intersection, sum, product and quotient") {
  auto ring = PolyRing<RationalField>::make(RationalField{}, {"x", "y", "z"});
  Ideal<RationalField> i(ring, {P(ring, "x"), P(ring, "y")});
  Ideal<RationalField> j(ring, {P(ring, "y"), P(ring, "z")});
  auto meet = intersect(i, j);
  Ideal<RationalField> expected(ring, {P(ring, "y"), P(ring, "x*z")});
  CHECK(equal_ideals(meet, expected));
  CHECK(equal_ideals(intersect(j, i), meet));
  CHECK(contains(i, meet));
  CHECK(contains(j, meet));
  CHECK(contains(meet, ideal_product(i, j)));
  CHECK(equal_ideals(ideal_sum(i, j), Ideal<RationalField>(ring, {P(ring, "x"), P(ring, "y"),
                                                                  P(ring, "z")})));

  Ideal<RationalField> k(ring, {P(ring, "x*y"), P(ring, "x*z")});
  CHECK(equal_ideals(quotient_by_element(k, P(ring, "x")),
                     Ideal<RationalField>(ring, {P(ring, "y"), P(ring, "z")})));
  CHECK(equal_ideals(quotient_by_element(k, P(ring, "y - 1")), k));
}

TEST_CASE("intersection properties on random ideals") {
  auto ring = PolyRing<PrimeField>::make(PrimeField(7), testing::var_names(3));
  auto ideals = random_ideals(ring, 131, 10);
  for (std::size_t a = 0; a + 1 < ideals.size(); a += 2) {
    const auto& i = ideals[a];
    const auto& j = ideals[a + 1];
    auto meet = intersect(i, j);
    CHECK(equal_ideals(meet, intersect(j, i)));
    CHECK(contains(i, meet));
    CHECK(contains(j, meet));
    CHECK(contains(meet, ideal_product(i, j)));
    CHECK(equal_ideals(intersect(i, i), i));
  }
}

TEST_CASE("ring maps are homomorphisms and kernels map to zero") {
  auto src = PolyRing<PrimeField>::make(PrimeField(5), {"u", "v", "w"});
  auto tgt = PolyRing<PrimeField>::make(PrimeField(5), {"s", "t"});
  RingMap<PrimeField> veronese(src, tgt, {P(tgt, "s^2"), P(tgt, "s*t"), P(tgt, "t^2")});
  Rng rng(141);
  for (int trial = 0; trial < 50; ++trial) {
    auto f = testing::random_polynomial(src, rng, 4, 3);
    auto g = testing::random_polynomial(src, rng, 4, 3);
    CHECK(apply_map(veronese, f + g) == apply_map(veronese, f) + apply_map(veronese, g));
    CHECK(apply_map(veronese, f * g) == apply_map(veronese, f) * apply_map(veronese, g));
  }
  auto kernel = kernel_of_map(veronese);
  CHECK(equal_ideals(kernel, Ideal<PrimeField>(src, {P(src, "u*w - v^2")})));
  for (const auto& g : kernel.basis()) CHECK(apply_map(veronese, g).is_zero());
}

TEST_CASE("ring maps into a quotient target") {
  auto src = PolyRing<RationalField>::make(RationalField{}, {"u", "v"});
  auto tgt = PolyRing<RationalField>::make(RationalField{}, {"s"});
  // s^2 = 1 in the target, so u = s satisfies u^2 - 1 = 0.
  RingMap<RationalField> map(src, tgt, {P(tgt, "s"), P(tgt, "s^2")}, {P(tgt, "s^2 - 1")});
  auto kernel = kernel_of_map(map);
  CHECK(equal_ideals(kernel, Ideal<RationalField>(src, {P(src, "u^2 - 1"), P(src, "v - 1")})));
}

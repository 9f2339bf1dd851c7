#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "nilmod/groebner.hpp"

namespace nilmod {

/// Monomial ideal kept as its minimal generating set, sorted by degree and
/// then by exponent vector.
class MonomialIdeal {
 public:
  MonomialIdeal(std::size_t nvars, std::vector<Monomial> generators);

  std::size_t nvars() const { return nvars_; }
  const std::vector<Monomial>& generators() const { return generators_; }
  bool is_zero() const { return generators_.empty(); }
  bool is_unit() const { return !generators_.empty() && generators_.front().is_one(); }
  bool contains(const Monomial& m) const;

 private:
  std::size_t nvars_;
  std::vector<Monomial> generators_;
};

/// Integer polynomial in t, lowest degree first, no trailing zeros.
using TPoly = std::vector<long long>;

struct HilbertSeries {
  TPoly numerator;
  std::size_t denominator_exponent = 0;
  /// numerator / (1-t)^k with every (1-t) factor cancelled.
  TPoly simplified_numerator;
  /// Remaining denominator exponent; empty for the unit ideal.
  std::optional<std::size_t> dimension;

  /// Coefficient of t^j in the power series expansion.
  long long coefficient(std::size_t j) const;
};

MonomialIdeal minimal_monomial_ideal(std::size_t nvars, std::vector<Monomial> generators);

/// The same ideal in the grevlex copy of its ring (itself if already grevlex).
template <typename F>
Ideal<F> in_grevlex(const Ideal<F>& ideal);

/// Leading monomials of the reduced basis; the ring order must be
/// degree-compatible.
template <typename F>
MonomialIdeal leading_term_ideal(const Ideal<F>& ideal);

HilbertSeries hilbert_series(const MonomialIdeal& m);

template <typename F>
HilbertSeries hilbert_series(const Ideal<F>& ideal);

/// Largest set of variables containing the support of no generator.
std::optional<std::size_t> krull_dimension(const MonomialIdeal& m);

/// Dimension of ring/I from grevlex leading terms; empty for the unit ideal.
template <typename F>
std::optional<std::size_t> krull_dimension(const Ideal<F>& ideal);

/// Degree of a homogeneous ideal; throws InvalidInput otherwise. Empty for
/// the unit ideal.
template <typename F>
std::optional<long long> multiplicity(const Ideal<F>& ideal);

/// Number of monomials of degree d outside `m`, by enumeration.
std::size_t count_standard_monomials(const MonomialIdeal& m, std::uint32_t degree);

/// All monomials of degree d outside `m`, in descending grevlex order.
std::vector<Monomial> standard_monomials(const MonomialIdeal& m, std::uint32_t degree);

TPoly tpoly_add(const TPoly& a, const TPoly& b);
TPoly tpoly_sub(const TPoly& a, const TPoly& b);
TPoly tpoly_mul(const TPoly& a, const TPoly& b);
/// a * (1-t)^k
TPoly tpoly_times_one_minus_t(const TPoly& a, std::size_t k);
long long tpoly_eval_one(const TPoly& a);

}  // namespace nilmod

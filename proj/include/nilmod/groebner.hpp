#pragma once

#include <cstddef>
#include <memory>
#include <mutex>
#include <vector>

#include "nilmod/polynomial.hpp"

namespace nilmod {

struct GroebnerStats {
  std::size_t pairs_considered = 0;
  std::size_t pairs_reduced = 0;
  std::size_t zero_reductions = 0;
  std::size_t basis_size = 0;
};

/// Generator list plus a lazily computed, write-once reduced Gröbner basis
/// under the ring's order. Copies share the cache.
template <typename F>
class Ideal {
 public:
  Ideal(RingPtr<F> ring, std::vector<Polynomial<F>> generators);

  static Ideal zero(RingPtr<F> ring) { return Ideal(std::move(ring), {}); }
  static Ideal unit(RingPtr<F> ring) {
    auto one = Polynomial<F>::from_int(ring, 1);
    return Ideal(std::move(ring), {one});
  }

  const RingPtr<F>& ring() const { return ring_; }
  const std::vector<Polynomial<F>>& generators() const { return generators_; }

  /// Reduced, monic Gröbner basis sorted by ascending leading monomial.
  const std::vector<Polynomial<F>>& basis() const;
  const GroebnerStats& stats() const;
  bool has_cached_basis() const { return cache_->ready; }

  bool is_unit() const;
  bool is_zero() const;
  /// All generators homogeneous in the standard grading.
  bool is_homogeneous() const;

 private:
  struct Cache {
    std::once_flag once;
    bool ready = false;
    std::vector<Polynomial<F>> basis;
    GroebnerStats stats;
  };

  RingPtr<F> ring_;
  std::vector<Polynomial<F>> generators_;
  std::shared_ptr<Cache> cache_;
};

/// Buchberger's algorithm with the coprime and chain criteria (applied in
/// the Gebauer–Möller form) and the normal selection strategy.
template <typename F>
std::vector<Polynomial<F>> buchberger(const RingPtr<F>& ring,
                                      const std::vector<Polynomial<F>>& generators,
                                      GroebnerStats* stats = nullptr);

template <typename F>
const std::vector<Polynomial<F>>& groebner_basis(const Ideal<F>& ideal) {
  return ideal.basis();
}

/// Full multivariate division remainder of f by `divisors` (any list).
template <typename F>
Polynomial<F> reduce(const Polynomial<F>& f, const std::vector<Polynomial<F>>& divisors);

template <typename F>
Polynomial<F> s_polynomial(const Polynomial<F>& f, const Polynomial<F>& g);

/// Buchberger's criterion on `basis`: every S-polynomial of a pair with
/// non-coprime leading monomials reduces to zero.
template <typename F>
bool satisfies_buchberger_criterion(const std::vector<Polynomial<F>>& basis);

template <typename F>
Polynomial<F> normal_form(const Polynomial<F>& f, const Ideal<F>& ideal);

/// True iff every generator of `j` lies in `i`.
template <typename F>
bool contains(const Ideal<F>& i, const Ideal<F>& j);

template <typename F>
bool equal_ideals(const Ideal<F>& i, const Ideal<F>& j);

/// I ∩ k[x_{k+1}..x_n], presented in the ring of the last n-k variables.
template <typename F>
Ideal<F> eliminate(const Ideal<F>& ideal, std::size_t k);

template <typename F>
Ideal<F> intersect(const Ideal<F>& i, const Ideal<F>& j);

/// (I : f) via I ∩ (f) divided by f.
template <typename F>
Ideal<F> quotient_by_element(const Ideal<F>& ideal, const Polynomial<F>& f);

template <typename F>
Ideal<F> ideal_sum(const Ideal<F>& i, const Ideal<F>& j);

template <typename F>
Ideal<F> ideal_product(const Ideal<F>& i, const Ideal<F>& j);

/// Name not among `taken`, derived from `stem`.
std::string fresh_variable_name(const std::vector<std::string>& taken, std::string stem);

extern template class Ideal<RationalField>;
extern template class Ideal<PrimeField>;

}  // namespace nilmod

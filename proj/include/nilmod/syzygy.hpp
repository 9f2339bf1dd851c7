#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "nilmod/betti.hpp"
#include "nilmod/groebner.hpp"

namespace nilmod {

struct KoszulWindow {
  int max_n = 0;
  int max_j = 0;
};

/// beta_{n,j} = dim H_n(K(W; ring/I))_j for n <= max_n, j <= max_j.
///
/// The ideal must be homogeneous and ring/I finite over k[W]; both are
/// checked (InvalidInput otherwise). The table is marked certified when
/// max_n >= |W|, the K-polynomial HS * (1-t)^|W| has degree <= max_j, and the
/// alternating sum of the table equals it.
template <typename F>
BettiTable koszul_betti(const Ideal<F>& ideal, const std::vector<std::size_t>& w,
                        KoszulWindow window);

template <typename F>
BettiTable koszul_betti(const Ideal<F>& ideal, const std::vector<std::string>& w,
                        KoszulWindow window);

/// HS(ring/I) * (1-t)^|W|; throws InvalidInput if that is not a polynomial.
template <typename F>
TPoly k_polynomial(const Ideal<F>& ideal, std::size_t w_size);

/// Degrees of the standard monomials in the variables outside W, i.e. of a
/// minimal generating set of ring/I as a k[W]-module. Throws InvalidInput if
/// ring/I is not finite over k[W].
template <typename F>
std::vector<int> module_generator_degrees(const Ideal<F>& ideal,
                                          const std::vector<std::size_t>& w);

struct HomologicalVerdicts {
  bool conclusive = false;
  int proj_dim = 0;
  int depth = 0;
  bool cohen_macaulay = false;
  bool gorenstein = false;
  long long type = 0;
};

/// Auslander–Buchsbaum read-off; `conclusive` is false for uncertified tables.
HomologicalVerdicts homological_verdicts(const BettiTable& table, std::size_t dim,
                                         std::size_t n_vars);

}  // namespace nilmod

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "nilmod/betti.hpp"

namespace nilmod {

/// A direct sum of line bundles O(n_i) on the projective line.
class SplitBundle {
 public:
  SplitBundle() = default;
  explicit SplitBundle(std::vector<int> twists);
  /// O(n)^{count}
  static SplitBundle repeated(int n, std::size_t count);

  const std::vector<int>& twists() const { return twists_; }
  std::size_t rank() const { return twists_.size(); }
  long long degree() const;

  SplitBundle operator+(const SplitBundle& other) const;  // direct sum
  friend bool operator==(const SplitBundle&, const SplitBundle&) = default;

  /// Sorted twist list, e.g. "[-2,-1,-1]".
  std::string to_string() const;

 private:
  std::vector<int> twists_;
};

struct Cohomology {
  long long h0 = 0;
  long long h1 = 0;
  friend bool operator==(const Cohomology&, const Cohomology&) = default;
};

Cohomology cohomology(int twist);
Cohomology cohomology(const SplitBundle& bundle);

SplitBundle sym(const SplitBundle& bundle, std::size_t k);
/// Empty bundle when i exceeds the rank.
SplitBundle wedge(const SplitBundle& bundle, std::size_t i);
SplitBundle det(const SplitBundle& bundle);
SplitBundle tensor(const SplitBundle& a, const SplitBundle& b);
SplitBundle twist(const SplitBundle& bundle, int m);
SplitBundle dual(const SplitBundle& bundle);

struct Geo1Check {
  bool ample = false;
  bool globally_generated = false;
  bool sym_vanishing = false;
  bool sym_det_omega_vanishing = false;
  bool cm_predicted = false;
  bool gorenstein_at_origin_predicted = false;
};

/// Hypotheses and predictions for the cone Spec of sections of Sym(eta).
/// Throws InvalidInput if some twist is negative.
Geo1Check check_geo1(const SplitBundle& eta);

/// beta_{n,n} = h0(wedge^n xi), beta_{n,n+1} = h1(wedge^{n+1} xi).
/// Row 0 of this formula already lists the module generators; when
/// `module_generator_degrees` is given it must match row 0 (InvalidInput
/// otherwise). Throws InvalidInput if xi has a nonnegative twist.
BettiTable predict_betti(const SplitBundle& xi,
                         const std::optional<std::vector<int>>& module_generator_degrees = {});

/// xi for A_r: O(-1)^{2r}.
SplitBundle xi_for_A(int r);
/// xi for the homogeneous B cone: O(-2) + O(-1)^{2r}.
SplitBundle xi_for_B0(int r);

}  // namespace nilmod

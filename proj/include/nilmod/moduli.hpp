#pragma once

#include <string>
#include <vector>

#include "nilmod/ring_map.hpp"

namespace nilmod {

enum class Space { A, B0, B, C };

std::string to_string(Space space);
/// Accepts "A", "B0", "B", "C"; throws InvalidInput otherwise.
Space parse_space(std::string_view text);

struct ModuliSpec {
  Space space;
  int r;
  CoefficientField field;

  /// Throws InvalidInput for r < 1.
  ModuliSpec(Space space, int r, CoefficientField field);
};

/// Number of 2x2 matrices m_i in the presentation of `space` with parameter r.
int matrix_count(Space space, int r);
bool has_phi(Space space);

/// Variable list a1,b1,c1,...,am,bm,cm[,phi1..phi4,alpha].
std::vector<std::string> moduli_variables(int matrices, bool with_phi);

template <typename F>
RingPtr<F> moduli_ring(const F& field, Space space, int r);

/// Tuples of traceless 2x2 matrices with m_i m_j = 0 and det m_i = 0.
template <typename F>
Ideal<F> construct_A(int r, const F& field);

/// m_i phi = alpha m_i and the characteristic-polynomial relation for alpha,
/// on top of the A relations; homogeneous of degree 2.
template <typename F>
Ideal<F> construct_B0(int r, const F& field);

/// construct_B0 plus det(phi) - 1.
template <typename F>
Ideal<F> construct_B(int r, const F& field);

/// r+1 matrices; the last one commutes with phi instead of being in the
/// alpha-eigenspace only.
template <typename F>
Ideal<F> construct_C(int r, const F& field);

/// The special fiber of the deformation problem with parameter d is C_d.
template <typename F>
Ideal<F> deformation_special_fiber(int d, const F& field) {
  return construct_C(d, field);
}

template <typename F>
Ideal<F> construct(Space space, int r, const F& field);

/// Integer-coefficient generators shared by every fiber, as plain text.
std::vector<std::string> master_generators(Space space, int r);

struct PrimeCheck {
  bool kernel_in_component = false;
  bool component_in_kernel = false;
  bool domain_target = false;
  bool certified() const { return kernel_in_component && component_in_kernel && domain_target; }
};

template <typename F>
struct ComponentCertificate {
  std::string label;
  Ideal<F> component_ideal;
  RingMap<F> parametrization;
  bool verified_prime = false;
  bool verified_contains_total = false;
};

/// Parametrization certificate for A_r (a_i, b_i, c_i -> l_i xy, l_i y^2, -l_i x^2).
template <typename F>
ComponentCertificate<F> certificate_A(int r, const F& field);

/// Parametrization certificate for B_r (phi = c I + v z^T, alpha = c, over
/// the quadratic extension c^2 + c (z1 y - z2 x) = 1).
template <typename F>
ComponentCertificate<F> certificate_B(int r, const F& field);

/// p1 (alpha = 1), p2 (alpha = -1), p3 (m_{r+1} = 0) in the ring of C_r,
/// each with its parametrization. Certificates are not yet checked.
template <typename F>
std::vector<ComponentCertificate<F>> component_ideals_C(int r, const F& field);

/// Syntactic domain test for a parametrization target: a polynomial ring,
/// or a polynomial ring modulo one monic quadratic X^2 + sX + u in a
/// variable X with s nonconstant, u a nonzero constant, both free of X.
template <typename F>
bool target_is_domain(const RingMap<F>& map);

/// Kernel equality plus the domain test; sets cert.verified_prime.
template <typename F>
PrimeCheck certify_prime(ComponentCertificate<F>& cert);

}  // namespace nilmod

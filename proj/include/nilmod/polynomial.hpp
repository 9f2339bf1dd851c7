#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nilmod/field.hpp"
#include "nilmod/monomial.hpp"

namespace nilmod {

template <typename F>
class PolyRing;

template <typename F>
using RingPtr = std::shared_ptr<const PolyRing<F>>;

/// k[x_1..x_n] with a fixed monomial order. Shared by pointer; immutable.
template <typename F>
class PolyRing {
 public:
  PolyRing(F field, std::vector<std::string> variables,
           MonomialOrder order = MonomialOrder::grevlex());

  static RingPtr<F> make(F field, std::vector<std::string> variables,
                         MonomialOrder order = MonomialOrder::grevlex()) {
    return std::make_shared<const PolyRing>(std::move(field), std::move(variables), order);
  }

  const F& field() const { return field_; }
  const std::vector<std::string>& variables() const { return variables_; }
  std::size_t nvars() const { return variables_.size(); }
  const MonomialOrder& order() const { return order_; }

  std::optional<std::size_t> index_of(std::string_view name) const;
  std::size_t require_index(std::string_view name) const;

  RingPtr<F> with_order(MonomialOrder order) const {
    return make(field_, variables_, order);
  }

  bool same_as(const PolyRing& other) const {
    return this == &other || (field_ == other.field_ && order_ == other.order_ &&
                              variables_ == other.variables_);
  }

 private:
  F field_;
  std::vector<std::string> variables_;
  MonomialOrder order_;
};

/// Sparse polynomial: terms sorted strictly descending in the ring order,
/// no zero coefficients.
template <typename F>
class Polynomial {
 public:
  using Element = typename F::Element;
  struct Term {
    Monomial monomial;
    Element coeff;
  };

  explicit Polynomial(RingPtr<F> ring) : ring_(std::move(ring)) {}

  static Polynomial constant(RingPtr<F> ring, const Element& c);
  static Polynomial from_int(RingPtr<F> ring, long long c);
  static Polynomial variable(RingPtr<F> ring, std::size_t index);
  static Polynomial variable(RingPtr<F> ring, std::string_view name);
  static Polynomial monomial(RingPtr<F> ring, const Monomial& m, const Element& c);
  /// Sorts, merges equal monomials, and drops zeros.
  static Polynomial from_terms(RingPtr<F> ring, std::vector<Term> terms);
  /// Terms already strictly descending with nonzero coefficients.
  static Polynomial from_sorted_terms(RingPtr<F> ring, std::vector<Term> terms);

  const RingPtr<F>& ring() const { return ring_; }
  const F& field() const { return ring_->field(); }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || terms_.front().monomial.is_one(); }
  bool is_unit() const { return terms_.size() == 1 && terms_.front().monomial.is_one(); }

  const Term& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().monomial; }
  const Element& leading_coefficient() const { return terms_.front().coeff; }

  /// Maximum total degree; 0 for the zero polynomial.
  std::uint32_t degree() const;
  bool is_homogeneous() const;
  bool involves(std::size_t var) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& g);
  Polynomial& operator-=(const Polynomial& g);
  Polynomial times(const Polynomial& g) const;
  Polynomial scaled(const Element& c) const;
  Polynomial mul_term(const Monomial& m, const Element& c) const;
  Polynomial pow(unsigned e) const;
  /// Divides by the leading coefficient; zero stays zero.
  Polynomial monic() const;

  /// Rewrites into `target`, sending variable i to variable index_map[i].
  Polynomial embed(RingPtr<F> target, const std::vector<std::size_t>& index_map) const;
  /// Same variables, different monomial order; terms are re-sorted.
  Polynomial reorder(RingPtr<F> target) const;

  bool equals(const Polynomial& g) const;

  /// Coefficients printed as-is (fractions over Q, symmetric lifts over F_p).
  std::string to_string() const;

 private:
  RingPtr<F> ring_;
  std::vector<Term> terms_;
};

template <typename F>
Polynomial<F> operator+(Polynomial<F> f, const Polynomial<F>& g) {
  return f += g;
}
template <typename F>
Polynomial<F> operator-(Polynomial<F> f, const Polynomial<F>& g) {
  return f -= g;
}
template <typename F>
Polynomial<F> operator*(const Polynomial<F>& f, const Polynomial<F>& g) {
  return f.times(g);
}
template <typename F>
bool operator==(const Polynomial<F>& f, const Polynomial<F>& g) {
  return f.equals(g);
}

enum class ArithOp { Add, Sub, Mul };

/// Throws std::invalid_argument on ring mismatch.
template <typename F>
Polynomial<F> poly_arith(const Polynomial<F>& f, const Polynomial<F>& g, ArithOp op);

template <typename F>
void require_same_ring(const RingPtr<F>& a, const RingPtr<F>& b);

/// Exact quotient f / g, or nullopt when g does not divide f.
template <typename F>
std::optional<Polynomial<F>> exact_divide(const Polynomial<F>& f, const Polynomial<F>& g);

/// Plain-text form with integer coefficients: over Q the content is cleared
/// and the leading coefficient made positive; over F_p coefficients are
/// symmetric lifts of the monic form.
std::string to_integer_text(const Polynomial<RationalField>& f);
std::string to_integer_text(const Polynomial<PrimeField>& f);

/// Parses `3*a1^2 - b1*c1 + 1`; coefficients may be integers or p/q.
/// Throws InvalidInput on unknown variables or malformed text.
template <typename F>
Polynomial<F> parse_polynomial(const RingPtr<F>& ring, std::string_view text);

extern template class PolyRing<RationalField>;
extern template class PolyRing<PrimeField>;
extern template class Polynomial<RationalField>;
extern template class Polynomial<PrimeField>;

}  // namespace nilmod

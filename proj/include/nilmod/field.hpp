#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

#include <gmpxx.h>

namespace nilmod {

/// Thrown for inputs outside the supported regime (characteristic 2,
/// composite characteristic, r < 1, malformed text, ...).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

bool is_prime(std::uint64_t n);

/// Runtime description of a coefficient field: 0 for Q, otherwise an odd prime.
class CoefficientField {
 public:
  /// Throws InvalidInput for 1, 2, and composite characteristics.
  explicit CoefficientField(std::uint64_t characteristic);

  static CoefficientField rationals() { return CoefficientField(0); }

  std::uint64_t characteristic() const { return characteristic_; }
  bool is_rational() const { return characteristic_ == 0; }
  std::string name() const;

  friend bool operator==(const CoefficientField&, const CoefficientField&) = default;

 private:
  std::uint64_t characteristic_;
};

/// The rational numbers with GMP arbitrary-precision elements.
class RationalField {
 public:
  using Element = mpq_class;

  std::uint64_t characteristic() const { return 0; }
  CoefficientField descriptor() const { return CoefficientField(0); }

  Element zero() const { return Element(0); }
  Element one() const { return Element(1); }
  Element from_int(long long v) const { return Element(static_cast<long>(v)); }
  Element from_mpz(const mpz_class& v) const { return Element(v); }

  bool is_zero(const Element& a) const { return sgn(a) == 0; }
  bool is_one(const Element& a) const { return a == 1; }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element neg(const Element& a) const { return -a; }
  Element inv(const Element& a) const {
    if (is_zero(a)) throw std::domain_error("division by zero in Q");
    return Element(1) / a;
  }
  Element div(const Element& a, const Element& b) const { return a * inv(b); }
  bool is_negative(const Element& a) const { return sgn(a) < 0; }

  std::string to_string(const Element& a) const { return a.get_str(); }

  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

/// Z/p for an odd prime p < 2^31, elements stored as canonical residues.
class PrimeField {
 public:
  using Element = std::uint32_t;

  explicit PrimeField(std::uint64_t p);

  std::uint64_t characteristic() const { return p_; }
  CoefficientField descriptor() const { return CoefficientField(p_); }

  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element from_int(long long v) const {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return static_cast<Element>(r);
  }
  Element from_mpz(const mpz_class& v) const {
    mpz_class r = v % static_cast<unsigned long>(p_);
    if (r < 0) r += static_cast<unsigned long>(p_);
    return static_cast<Element>(r.get_ui());
  }

  bool is_zero(Element a) const { return a == 0; }
  bool is_one(Element a) const { return a == 1; }
  Element add(Element a, Element b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Element sub(Element a, Element b) const { return a >= b ? a - b : a + p_ - b; }
  Element mul(Element a, Element b) const {
    return static_cast<Element>((static_cast<std::uint64_t>(a) * b) % p_);
  }
  Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
  Element inv(Element a) const;
  Element div(Element a, Element b) const { return mul(a, inv(b)); }
  bool is_negative(Element) const { return false; }

  /// Symmetric representative in (-p/2, p/2], used for printing.
  long long lift(Element a) const {
    return a > p_ / 2 ? static_cast<long long>(a) - static_cast<long long>(p_)
                      : static_cast<long long>(a);
  }
  std::string to_string(Element a) const { return std::to_string(lift(a)); }

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  std::uint32_t p_;
};

/// Calls `fn` with a RationalField or a PrimeField matching `field`.
template <typename Fn>
decltype(auto) visit_field(const CoefficientField& field, Fn&& fn) {
  if (field.is_rational()) return std::forward<Fn>(fn)(RationalField{});
  return std::forward<Fn>(fn)(PrimeField(field.characteristic()));
}

}  // namespace nilmod

#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace nilmod {

inline constexpr std::size_t kMaxVariables = 32;

/// Exponent vector with inline storage. Variables beyond `size()` are zero.
class Monomial {
 public:
  using Exponent = std::uint16_t;

  Monomial() = default;
  explicit Monomial(std::size_t nvars);
  Monomial(std::span<const int> exponents);

  static Monomial variable(std::size_t nvars, std::size_t index, int power = 1);

  std::size_t size() const { return nvars_; }
  std::uint32_t degree() const { return degree_; }
  Exponent operator[](std::size_t i) const { return exp_[i]; }
  void set(std::size_t i, int e);

  /// Bit i set iff variable i occurs; quick rejection for divisibility.
  std::uint32_t support() const { return support_; }
  bool is_one() const { return degree_ == 0; }

  bool divides(const Monomial& other) const {
    if ((support_ & ~other.support_) != 0) return false;
    for (std::size_t i = 0; i < nvars_; ++i)
      if (exp_[i] > other.exp_[i]) return false;
    return true;
  }
  bool coprime(const Monomial& other) const { return (support_ & other.support_) == 0; }

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Exact quotient; requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.nvars_ == b.nvars_ && a.exp_ == b.exp_;
  }

  std::vector<int> exponents() const;
  std::size_t hash() const;

 private:
  void recompute();

  std::array<Exponent, kMaxVariables> exp_{};
  std::uint32_t degree_ = 0;
  std::uint32_t support_ = 0;
  std::uint8_t nvars_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// grevlex, lex, or a two-block elimination order (grevlex inside each
/// block, the first `block` variables dominating).
class MonomialOrder {
 public:
  enum class Kind { Grevlex, Lex, Block };

  static MonomialOrder grevlex() { return MonomialOrder(Kind::Grevlex, 0); }
  static MonomialOrder lex() { return MonomialOrder(Kind::Lex, 0); }
  static MonomialOrder block(std::size_t k) { return MonomialOrder(Kind::Block, k); }

  Kind kind() const { return kind_; }
  std::size_t block_size() const { return block_; }
  bool is_degree_compatible() const {
    return kind_ == Kind::Grevlex || (kind_ == Kind::Block && block_ == 0);
  }
  std::string name() const;

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  MonomialOrder(Kind kind, std::size_t block) : kind_(kind), block_(block) {}

  Kind kind_;
  std::size_t block_;
};

/// Throws std::invalid_argument when lengths differ.
std::strong_ordering compare_monomials(const Monomial& a, const Monomial& b,
                                       const MonomialOrder& order);

}  // namespace nilmod

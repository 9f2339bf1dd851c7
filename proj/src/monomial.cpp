#include "nilmod/monomial.hpp"

#include <stdexcept>

namespace nilmod {

namespace {

std::strong_ordering grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo,
                                   std::size_t hi) {
  std::uint32_t da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da <=> db;
  for (std::size_t i = hi; i-- > lo;) {
    if (a[i] != b[i]) return b[i] <=> a[i];
  }
  return std::strong_ordering::equal;
}

}  // namespace

Monomial::Monomial(std::size_t nvars) {
  if (nvars > kMaxVariables)
    throw std::length_error("too many variables (max " + std::to_string(kMaxVariables) + ")");
  nvars_ = static_cast<std::uint8_t>(nvars);
}

Monomial::Monomial(std::span<const int> exponents) : Monomial(exponents.size()) {
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] < 0 || exponents[i] > 0xFFFF)
      throw std::out_of_range("exponent out of range");
    exp_[i] = static_cast<Exponent>(exponents[i]);
  }
  recompute();
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, int power) {
  Monomial m(nvars);
  m.set(index, power);
  return m;
}

void Monomial::set(std::size_t i, int e) {
  if (i >= nvars_) throw std::out_of_range("variable index out of range");
  if (e < 0 || e > 0xFFFF) throw std::out_of_range("exponent out of range");
  exp_[i] = static_cast<Exponent>(e);
  recompute();
}

void Monomial::recompute() {
  degree_ = 0;
  support_ = 0;
  for (std::size_t i = 0; i < nvars_; ++i) {
    degree_ += exp_[i];
    if (exp_[i] != 0) support_ |= (1u << i);
  }
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r(a.nvars_);
  for (std::size_t i = 0; i < a.nvars_; ++i) {
    std::uint32_t e = std::uint32_t(a.exp_[i]) + b.exp_[i];
    if (e > 0xFFFF) throw std::overflow_error("exponent overflow");
    r.exp_[i] = static_cast<Monomial::Exponent>(e);
  }
  r.degree_ = a.degree_ + b.degree_;
  r.support_ = a.support_ | b.support_;
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial r(a.nvars_);
  for (std::size_t i = 0; i < a.nvars_; ++i) r.exp_[i] = a.exp_[i] - b.exp_[i];
  r.recompute();
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a.nvars_);
  for (std::size_t i = 0; i < a.nvars_; ++i) r.exp_[i] = std::max(a.exp_[i], b.exp_[i]);
  r.recompute();
  return r;
}

std::vector<int> Monomial::exponents() const {
  return std::vector<int>(exp_.begin(), exp_.begin() + nvars_);
}

std::size_t Monomial::hash() const {
  std::uint64_t h = 1469598103934665603ull ^ nvars_;
  for (std::size_t i = 0; i < nvars_; ++i) {
    h ^= exp_[i];
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

std::string MonomialOrder::name() const {
  switch (kind_) {
    case Kind::Grevlex: return "grevlex";
    case Kind::Lex: return "lex";
    case Kind::Block: return "block(" + std::to_string(block_) + ")";
  }
  return "?";
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  const std::size_t n = a.size();
  switch (kind_) {
    case Kind::Grevlex:
      if (a.degree() != b.degree()) return a.degree() <=> b.degree();
      return grevlex_range(a, b, 0, n);
    case Kind::Lex:
      for (std::size_t i = 0; i < n; ++i)
        if (a[i] != b[i]) return a[i] <=> b[i];
      return std::strong_ordering::equal;
    case Kind::Block: {
      const std::size_t k = std::min(block_, n);
      if (auto c = grevlex_range(a, b, 0, k); c != 0) return c;
      return grevlex_range(a, b, k, n);
    }
  }
  return std::strong_ordering::equal;
}

std::strong_ordering compare_monomials(const Monomial& a, const Monomial& b,
                                       const MonomialOrder& order) {
  if (a.size() != b.size()) throw std::invalid_argument("monomial length mismatch");
  return order.compare(a, b);
}

}  // namespace nilmod

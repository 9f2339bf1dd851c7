#include "nilmod/field.hpp"

namespace nilmod {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

CoefficientField::CoefficientField(std::uint64_t characteristic)
    : characteristic_(characteristic) {
  if (characteristic == 0) return;
  if (characteristic == 2)
    throw InvalidInput("characteristic 2 is not supported");
  if (!is_prime(characteristic))
    throw InvalidInput("characteristic " + std::to_string(characteristic) +
                       " is not prime");
  if (characteristic >= (1ull << 31))
    throw InvalidInput("characteristic must be below 2^31");
}

std::string CoefficientField::name() const {
  return characteristic_ == 0 ? "QQ" : "GF(" + std::to_string(characteristic_) + ")";
}

PrimeField::PrimeField(std::uint64_t p) : p_(static_cast<std::uint32_t>(p)) {
  CoefficientField check(p);
  if (p == 0) throw InvalidInput("PrimeField needs a positive characteristic");
}

PrimeField::Element PrimeField::inv(Element a) const {
  if (a == 0) throw std::domain_error("division by zero in GF(p)");
  // a^(p-2) by square-and-multiply
  std::uint64_t result = 1, base = a, e = p_ - 2;
  while (e != 0) {
    if (e & 1) result = result * base % p_;
    base = base * base % p_;
    e >>= 1;
  }
  return static_cast<Element>(result);
}

}  // namespace nilmod

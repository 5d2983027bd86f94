#include "tint/field.hpp"

#include <string>

#include "tint/errors.hpp"

namespace tint {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p > kMaxCharacteristic) {
    throw PreconditionError("characteristic " + std::to_string(p) +
                            " exceeds the supported bound 2^13");
  }
  if (!is_prime(p)) throw PreconditionError("p must be prime");
}

Coeff PrimeField::pow(Coeff a, std::uint64_t k) const {
  Coeff result = 1 % p_;
  Coeff base = a % p_;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

Coeff PrimeField::inv(Coeff a) const {
  if (a % p_ == 0) throw PreconditionError("inverse of zero in F_p");
  // Fermat: a^(p-2)
  return pow(a, p_ - 2);
}

}  // namespace tint

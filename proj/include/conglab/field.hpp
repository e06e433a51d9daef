#ifndef CONGLAB_FIELD_HPP
#define CONGLAB_FIELD_HPP

#include <cstdint>
#include <stdexcept>

namespace conglab {

// Element of F_q, stored reduced in [0, q).
using Fe = std::uint32_t;

// Prime field F_q. The modulus must be an odd prime >= 5: degree-3
// interpolation uses the nodes 0..3 and the quadratic polar needs 1/2.
class PrimeField {
public:
  explicit PrimeField(std::uint32_t q) : q_(q) {
    if (q < 5 || !is_prime(q))
      throw std::invalid_argument("PrimeField: modulus must be a prime >= 5");
  }

  std::uint32_t modulus() const { return q_; }

  Fe reduce(std::int64_t x) const {
    std::int64_t r = x % static_cast<std::int64_t>(q_);
    return static_cast<Fe>(r < 0 ? r + q_ : r);
  }

  Fe add(Fe a, Fe b) const {
    Fe s = a + b;
    return s >= q_ ? s - q_ : s;
  }
  Fe sub(Fe a, Fe b) const { return a >= b ? a - b : a + q_ - b; }
  Fe neg(Fe a) const { return a == 0 ? 0 : q_ - a; }
  Fe mul(Fe a, Fe b) const {
    return static_cast<Fe>(std::uint64_t(a) * b % q_);
  }

  Fe pow(Fe a, std::uint64_t e) const {
    Fe r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }

  Fe inv(Fe a) const {
    if (a == 0) throw std::domain_error("PrimeField: inverse of zero");
    return pow(a, q_ - 2);
  }

  static bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  }

  bool operator==(const PrimeField& o) const { return q_ == o.q_; }

private:
  std::uint32_t q_;
};

}  // namespace conglab

#endif

#ifndef SRGB_FIELD_HPP
#define SRGB_FIELD_HPP

#include <array>
#include <cstdint>
#include <string>

#include "error.hpp"

namespace srgb {

inline bool is_prime(std::uint64_t n) {
  if (n < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

/// GF(p) for a prime p small enough that products fit in 64 bits.
class PrimeField {
public:
  using value_type = std::uint32_t;

  explicit PrimeField(std::uint32_t p) : p_(p) {
    if (!is_prime(p))
      throw InvalidArgument(std::to_string(p) + " is not prime");
  }

  std::uint32_t characteristic() const { return p_; }
  std::uint32_t size() const { return p_; }

  value_type add(value_type a, value_type b) const { return (a + b) % p_; }
  value_type sub(value_type a, value_type b) const { return (a + p_ - b) % p_; }
  value_type neg(value_type a) const { return a == 0 ? 0 : p_ - a; }
  value_type mul(value_type a, value_type b) const {
    return static_cast<value_type>(std::uint64_t{a} * b % p_);
  }
  value_type pow(value_type a, std::uint64_t e) const {
    value_type r = 1 % p_;
    while (e) {
      if (e & 1U)
        r = mul(r, a);
      a = mul(a, a);
      e >>= 1U;
    }
    return r;
  }
  value_type inv(value_type a) const {
    if (a % p_ == 0)
      throw InvalidArgument("inverse of zero in GF(" + std::to_string(p_) + ")");
    return pow(a, p_ - 2);
  }
  bool is_square(value_type a) const { return a == 0 || pow(a, (p_ - 1) / 2) == 1; }

  friend bool operator==(const PrimeField &, const PrimeField &) = default;

private:
  std::uint32_t p_;
};

/// GF(p²) = GF(p)[t] / (t² - n) with n the smallest non-square; p odd.
class QuadraticExtension {
public:
  struct Element {
    std::uint32_t a = 0; ///< constant coefficient
    std::uint32_t b = 0; ///< coefficient of t
    friend bool operator==(const Element &, const Element &) = default;
    friend auto operator<=>(const Element &, const Element &) = default;
  };

  explicit QuadraticExtension(std::uint32_t p) : base_(p) {
    if (p == 2)
      throw InvalidArgument("quadratic extension needs an odd prime");
    nonsquare_ = 2;
    while (base_.is_square(nonsquare_))
      ++nonsquare_;
  }

  const PrimeField &base() const { return base_; }
  std::uint32_t nonsquare() const { return nonsquare_; }
  std::uint32_t size() const { return base_.size() * base_.size(); }

  /// Elements in order (a, b) lexicographic.
  Element element(std::uint32_t index) const { return {index / base_.size(), index % base_.size()}; }

  Element zero() const { return {0, 0}; }
  Element one() const { return {1, 0}; }
  Element add(Element x, Element y) const { return {base_.add(x.a, y.a), base_.add(x.b, y.b)}; }
  Element sub(Element x, Element y) const { return {base_.sub(x.a, y.a), base_.sub(x.b, y.b)}; }
  Element neg(Element x) const { return {base_.neg(x.a), base_.neg(x.b)}; }
  Element mul(Element x, Element y) const {
    const auto &f = base_;
    return {f.add(f.mul(x.a, y.a), f.mul(f.mul(x.b, y.b), nonsquare_)),
            f.add(f.mul(x.a, y.b), f.mul(x.b, y.a))};
  }

private:
  PrimeField base_;
  std::uint32_t nonsquare_;
};

} // namespace srgb

#endif // SRGB_FIELD_HPP

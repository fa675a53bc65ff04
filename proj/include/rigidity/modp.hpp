#pragma once

#include <cstdint>
#include <ostream>
#include <random>
#include <stdexcept>

namespace rigidity {

// Element of the prime field of order 2^61 - 1.
class ModP {
 public:
  static constexpr std::uint64_t kModulus = (std::uint64_t{1} << 61) - 1;

  constexpr ModP() = default;
  constexpr explicit ModP(std::uint64_t value) : v_(reduce(value)) {}
  static constexpr ModP from_signed(std::int64_t value) {
    return value >= 0 ? ModP(static_cast<std::uint64_t>(value))
                      : -ModP(static_cast<std::uint64_t>(-(value + 1)) + 1);
  }

  template <class Rng>
  static ModP random(Rng& rng) {
    std::uniform_int_distribution<std::uint64_t> dist(0, kModulus - 1);
    return ModP(dist(rng));
  }

  constexpr std::uint64_t value() const { return v_; }
  constexpr bool is_zero() const { return v_ == 0; }

  friend constexpr ModP operator+(ModP a, ModP b) { return ModP(a.v_ + b.v_); }
  friend constexpr ModP operator-(ModP a, ModP b) { return ModP(a.v_ + kModulus - b.v_); }
  constexpr ModP operator-() const { return ModP(kModulus - v_); }
  friend constexpr ModP operator*(ModP a, ModP b) {
    const unsigned __int128 p = static_cast<unsigned __int128>(a.v_) * b.v_;
    const std::uint64_t lo = static_cast<std::uint64_t>(p & kModulus);
    const std::uint64_t hi = static_cast<std::uint64_t>(p >> 61);
    return ModP(lo + hi);
  }
  ModP& operator+=(ModP o) { return *this = *this + o; }
  ModP& operator-=(ModP o) { return *this = *this - o; }
  ModP& operator*=(ModP o) { return *this = *this * o; }

  constexpr ModP pow(std::uint64_t e) const {
    ModP base = *this, acc(1);
    while (e) {
      if (e & 1) acc = acc * base;
      base = base * base;
      e >>= 1;
    }
    return acc;
  }
  ModP inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero in prime field");
    return pow(kModulus - 2);
  }
  friend ModP operator/(ModP a, ModP b) { return a * b.inverse(); }

  friend constexpr bool operator==(ModP a, ModP b) { return a.v_ == b.v_; }
  friend std::ostream& operator<<(std::ostream& os, ModP x) { return os << x.v_; }

 private:
  static constexpr std::uint64_t reduce(std::uint64_t x) {
    x = (x & kModulus) + (x >> 61);
    return x >= kModulus ? x - kModulus : x;
  }

  std::uint64_t v_ = 0;
};

}  // namespace rigidity

#pragma once

#include <concepts>
#include <cstdint>
#include <ostream>

#include <boost/multiprecision/cpp_int.hpp>

namespace mobius0 {

  // Commutative ring with unit used for series coefficients. Only the ring
  // operations and equality are required; zero and one are built from ints.
  template <class C>
  concept CoefficientRing = std::regular<C> && requires(C a, C b) {
    { C(0) };
    { C(1) };
    { a + b } -> std::convertible_to<C>;
    { a - b } -> std::convertible_to<C>;
    { a * b } -> std::convertible_to<C>;
    { -a } -> std::convertible_to<C>;
  };

  using Integer  = boost::multiprecision::cpp_int;
  using Rational = boost::multiprecision::cpp_rational;

  // Integers modulo a fixed modulus.
  template <std::uint64_t Modulus>
  class ModInt {
    static_assert(Modulus >= 2 && Modulus < (std::uint64_t(1) << 32));

   public:
    constexpr ModInt() = default;
    constexpr ModInt(std::int64_t v)  // NOLINT(runtime/explicit)
        : _v(static_cast<std::uint64_t>(
            (v % static_cast<std::int64_t>(Modulus) + Modulus) % Modulus)) {}

    [[nodiscard]] constexpr std::uint64_t value() const noexcept {
      return _v;
    }

    friend constexpr ModInt operator+(ModInt a, ModInt b) {
      return from_reduced((a._v + b._v) % Modulus);
    }
    friend constexpr ModInt operator-(ModInt a, ModInt b) {
      return from_reduced((a._v + Modulus - b._v) % Modulus);
    }
    friend constexpr ModInt operator*(ModInt a, ModInt b) {
      return from_reduced((a._v * b._v) % Modulus);
    }
    constexpr ModInt operator-() const {
      return from_reduced((Modulus - _v) % Modulus);
    }
    constexpr ModInt& operator+=(ModInt b) {
      return *this = *this + b;
    }
    constexpr ModInt& operator-=(ModInt b) {
      return *this = *this - b;
    }
    constexpr ModInt& operator*=(ModInt b) {
      return *this = *this * b;
    }

    friend constexpr bool operator==(ModInt, ModInt) = default;

    friend std::ostream& operator<<(std::ostream& os, ModInt a) {
      return os << a._v;
    }

   private:
    static constexpr ModInt from_reduced(std::uint64_t v) {
      ModInt r;
      r._v = v;
      return r;
    }

    std::uint64_t _v = 0;
  };

}  // namespace mobius0

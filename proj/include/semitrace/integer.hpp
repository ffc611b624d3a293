#ifndef SEMITRACE_INTEGER_HPP_
#define SEMITRACE_INTEGER_HPP_

#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <span>
#include <string>

#include "error.hpp"

namespace semitrace {

  //! Storage type for every generator, exponent and semigroup element.
  //! Arithmetic that can grow (products, sums of generators) goes through the
  //! checked helpers below, which evaluate in 128 bits and refuse results that
  //! do not fit the configured width.
  using Int = std::int64_t;

  namespace detail {
    inline int read_int_bits() {
      char const* env = std::getenv("SEMITRACE_MAX_INT_BITS");
      if (env == nullptr || *env == '\0') {
        return 63;
      }
      char* end   = nullptr;
      long  value = std::strtol(env, &end, 10);
      if (end == env || *end != '\0' || value < 8 || value > 63) {
        return 63;
      }
      return static_cast<int>(value);
    }
  }  // namespace detail

  //! Number of magnitude bits allowed for any value; read once from
  //! SEMITRACE_MAX_INT_BITS (8..63, default 63).
  inline int max_int_bits() {
    static int const bits = detail::read_int_bits();
    return bits;
  }

  inline Int narrow(__int128 value) {
    __int128 const limit = static_cast<__int128>(1) << max_int_bits();
    if (value >= limit || value <= -limit) {
      detail::fail(ErrorCode::Overflow,
                   "integer result exceeds " + std::to_string(max_int_bits())
                       + " bits");
    }
    return static_cast<Int>(value);
  }

  inline Int add(Int x, Int y) {
    return narrow(static_cast<__int128>(x) + y);
  }

  inline Int sub(Int x, Int y) {
    return narrow(static_cast<__int128>(x) - y);
  }

  inline Int mul(Int x, Int y) {
    return narrow(static_cast<__int128>(x) * y);
  }

  //! Least nonnegative residue, valid for negative x.
  constexpr Int mod(Int x, Int m) noexcept {
    Int r = x % m;
    return r < 0 ? r + m : r;
  }

  inline Int gcd_of(std::span<Int const> values) noexcept {
    Int g = 0;
    for (Int v : values) {
      g = std::gcd(g, v);
    }
    return g;
  }

  //! Exponent of the prime p in n (n != 0).
  inline int valuation(Int n, Int p) {
    if (n == 0 || p < 2) {
      detail::fail(ErrorCode::BadParams, "valuation needs n != 0 and p > 1");
    }
    int v = 0;
    while (n % p == 0) {
      n /= p;
      ++v;
    }
    return v;
  }

}  // namespace semitrace

#endif  // SEMITRACE_INTEGER_HPP_

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace heapgames {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;
using i128 = __int128;

// Value contract: all operations are exact for inputs up to 2^63-1.
// Intermediates go through 128-bit arithmetic and throw std::overflow_error
// if a result cannot be carried in 64 bits.
inline constexpr u64 kValueMax = (u64{1} << 63) - 1;

struct IllegalMoveError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ResourceLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct TableTooSmallError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MalformedRepError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline u64 checked_mul(u64 a, u64 b) {
  u128 p = u128{a} * b;
  if (p > ~u64{0}) throw std::overflow_error("64-bit overflow in multiply");
  return static_cast<u64>(p);
}

inline u64 checked_add(u64 a, u64 b) {
  if (a > ~u64{0} - b) throw std::overflow_error("64-bit overflow in add");
  return a + b;
}

// Exact floor square root of a 128-bit value.
u64 isqrt(u128 v);

}  // namespace heapgames

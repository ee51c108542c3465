#pragma once

#include <cstdint>

#include "planechar/error.hpp"

namespace planechar {

using Int = std::int64_t;

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "integer addition");
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "integer subtraction");
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "integer multiplication");
  return r;
}

// binom(m, 2) with the convention binom(m, 2) = 0 for m < 2.
inline Int binom2(Int m) {
  if (m < 2) return 0;
  return checked_mul(m, m - 1) / 2;
}

// Dimension of the space of degree-n forms in three variables; zero for n < 0.
inline Int forms_dim(Int n) { return binom2(n + 2); }

}  // namespace planechar

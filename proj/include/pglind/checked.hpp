#pragma once

#include <cstdint>
#include <string>

#include "pglind/error.hpp"

namespace pglind::checked {

inline std::int64_t mul(std::int64_t a, std::int64_t b, const char* what = "integer product") {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw CapacityError(std::string(what) + " overflows 64 bits");
  return r;
}

inline std::int64_t add(std::int64_t a, std::int64_t b, const char* what = "integer sum") {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw CapacityError(std::string(what) + " overflows 64 bits");
  return r;
}

inline std::uint64_t umul(std::uint64_t a, std::uint64_t b, const char* what = "integer product") {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw CapacityError(std::string(what) + " overflows 64 bits");
  return r;
}

inline std::uint64_t upow(std::uint64_t base, unsigned exp, const char* what = "integer power") {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) r = umul(r, base, what);
  return r;
}

}  // namespace pglind::checked

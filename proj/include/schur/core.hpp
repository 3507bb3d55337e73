#pragma once

// Shared numeric vocabulary: big integers, error types, modular helpers and
// the seeded random source used by every sampling routine.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace schur {

using BigInt = boost::multiprecision::cpp_int;
using i64 = std::int64_t;
using u64 = std::uint64_t;

inline constexpr u64 kDefaultSeed = 20240417;

// Error taxonomy. The CLI maps these onto exit codes 2, 3 and 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidInput : public Error {
 public:
  using Error::Error;
};

class CapExceeded : public Error {
 public:
  using Error::Error;
};

class CheckFailed : public Error {
 public:
  using Error::Error;
};

// ---------------------------------------------------------------------------
// Big integer helpers

BigInt floor_mod(const BigInt& a, const BigInt& m);
BigInt gcd(const BigInt& a, const BigInt& b);
BigInt lcm(const BigInt& a, const BigInt& b);

struct BigXgcd {
  BigInt g, x, y;  // g = x*a + y*b, g >= 0
};
BigXgcd xgcd(const BigInt& a, const BigInt& b);

// Inverse of a modulo m (m > 0). Throws InvalidInput when not invertible.
BigInt inverse_mod(const BigInt& a, const BigInt& m);

// a^e mod m for any integer e; negative e uses the modular inverse of a.
BigInt pow_mod(const BigInt& a, const BigInt& e, const BigInt& m);

// Exact power a^e for e >= 0.
BigInt pow_exact(const BigInt& a, u64 e);

std::string to_string(const BigInt& a);
BigInt parse_bigint(const std::string& s);

// Converts to a machine integer, throwing InvalidInput if out of range.
i64 to_i64(const BigInt& a);
u64 to_u64(const BigInt& a);

// ---------------------------------------------------------------------------
// Machine-integer modular helpers

inline i64 mod_floor(i64 a, i64 m) {
  i64 r = a % m;
  return r < 0 ? r + m : r;
}

inline i64 mul_mod(i64 a, i64 b, i64 m) {
  return static_cast<i64>((static_cast<__int128>(a) * b) % m);
}

i64 gcd64(i64 a, i64 b);
u64 lcm64(u64 a, u64 b);

struct Xgcd64 {
  i64 g, x, y;
};
Xgcd64 xgcd64(i64 a, i64 b);

i64 inverse_mod64(i64 a, i64 m);

// Unit u modulo n with u*a = gcd(a, n) (mod n).
i64 unit_normalizer(i64 a, i64 n);

// ---------------------------------------------------------------------------
// Random source

class Rng {
 public:
  explicit Rng(u64 seed = kDefaultSeed) : eng_(seed) {}
  i64 uniform(i64 lo, i64 hi) {  // inclusive bounds
    return std::uniform_int_distribution<i64>(lo, hi)(eng_);
  }
  std::size_t index(std::size_t n) {
    return static_cast<std::size_t>(uniform(0, static_cast<i64>(n) - 1));
  }
  double normal() { return std::normal_distribution<double>(0.0, 1.0)(eng_); }
  std::mt19937_64& engine() { return eng_; }

 private:
  std::mt19937_64 eng_;
};

}  // namespace schur

#include "schur/core.hpp"

#include <limits>

namespace schur {

BigInt floor_mod(const BigInt& a, const BigInt& m) {
  BigInt r = a % m;
  if (r < 0) r += (m < 0 ? -m : m);
  return r;
}

BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt x = a < 0 ? BigInt(-a) : a;
  BigInt y = b < 0 ? BigInt(-b) : b;
  while (y != 0) {
    BigInt t = x % y;
    x = std::move(y);
    y = std::move(t);
  }
  return x;
}

BigInt lcm(const BigInt& a, const BigInt& b) {
  if (a == 0 || b == 0) return 0;
  BigInt l = a / gcd(a, b) * b;
  return l < 0 ? BigInt(-l) : l;
}

BigXgcd xgcd(const BigInt& a, const BigInt& b) {
  BigInt old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    BigInt q = old_r / r;
    BigInt tmp = old_r - q * r;
    old_r = std::move(r);
    r = std::move(tmp);
    tmp = old_s - q * s;
    old_s = std::move(s);
    s = std::move(tmp);
    tmp = old_t - q * t;
    old_t = std::move(t);
    t = std::move(tmp);
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  return {old_r, old_s, old_t};
}

BigInt inverse_mod(const BigInt& a, const BigInt& m) {
  if (m == 1) return 0;
  BigXgcd e = xgcd(floor_mod(a, m), m);
  if (e.g != 1) throw InvalidInput("element " + to_string(a) + " is not invertible modulo " + to_string(m));
  return floor_mod(e.x, m);
}

BigInt pow_mod(const BigInt& a, const BigInt& e, const BigInt& m) {
  if (m == 1) return 0;
  static const BigInt kWord = BigInt(1) << 62;
  if (m > 0 && m < kWord && e > -kWord && e < kWord) {
    const i64 mm = static_cast<i64>(m);
    i64 base = static_cast<i64>(floor_mod(a, m));
    i64 exp = static_cast<i64>(e);
    if (exp < 0) {
      base = inverse_mod64(base, mm);
      exp = -exp;
    }
    i64 result = 1;
    for (; exp; exp >>= 1, base = mul_mod(base, base, mm))
      if (exp & 1) result = mul_mod(result, base, mm);
    return result;
  }
  BigInt base = floor_mod(a, m);
  BigInt exp = e;
  if (exp < 0) {
    base = inverse_mod(base, m);
    exp = -exp;
  }
  BigInt result = 1;
  while (exp > 0) {
    if ((exp & 1) != 0) result = result * base % m;
    base = base * base % m;
    exp >>= 1;
  }
  return result;
}

BigInt pow_exact(const BigInt& a, u64 e) {
  BigInt result = 1, base = a;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

std::string to_string(const BigInt& a) { return a.str(); }

BigInt parse_bigint(const std::string& s) {
  if (s.empty()) throw InvalidInput("empty integer literal");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) throw InvalidInput("malformed integer literal '" + s + "'");
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw InvalidInput("malformed integer literal '" + s + "'");
  }
  BigInt v(s.substr(start));
  return s[0] == '-' ? BigInt(-v) : v;
}

i64 to_i64(const BigInt& a) {
  if (a > std::numeric_limits<i64>::max() || a < std::numeric_limits<i64>::min()) {
    throw InvalidInput("integer " + to_string(a) + " exceeds 64-bit range");
  }
  return static_cast<i64>(a);
}

u64 to_u64(const BigInt& a) {
  if (a < 0 || a > std::numeric_limits<u64>::max()) {
    throw InvalidInput("integer " + to_string(a) + " is not a 64-bit unsigned value");
  }
  return static_cast<u64>(a);
}

i64 gcd64(i64 a, i64 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    i64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

u64 lcm64(u64 a, u64 b) {
  if (a == 0 || b == 0) return 0;
  return a / static_cast<u64>(gcd64(static_cast<i64>(a), static_cast<i64>(b))) * b;
}

Xgcd64 xgcd64(i64 a, i64 b) {
  i64 old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    i64 q = old_r / r;
    i64 tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

i64 inverse_mod64(i64 a, i64 m) {
  if (m == 1) return 0;
  Xgcd64 e = xgcd64(mod_floor(a, m), m);
  if (e.g != 1) throw InvalidInput("element not invertible modulo " + std::to_string(m));
  return mod_floor(e.x, m);
}

i64 unit_normalizer(i64 a, i64 n) {
  // a = g*a' with gcd(a', n/g) = 1. Pick u = inverse of a' mod n/g and then
  // shift it by multiples of n/g until it is a unit mod n.
  a = mod_floor(a, n);
  if (n == 1) return 0;
  i64 g = gcd64(a, n);
  if (a == 0) return 1;
  i64 ng = n / g;
  i64 u = ng == 1 ? 1 : inverse_mod64((a / g) % ng, ng);
  while (gcd64(u, n) != 1) u += ng;
  return u % n;
}

}  // namespace schur

#pragma once

// 2-cocycles valued in roots of unity, stored as exponents: a value e with
// modulus N stands for zeta_N^e. Coboundary convention throughout:
//   (delta mu)(x, y) = mu(x)^{-1} mu(y)^{-1} mu(xy).

#include "schur/groups.hpp"
#include "schur/homology.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace schur {

struct RootExp {
  u64 N = 1;
  u64 e = 0;
  RootExp() = default;
  RootExp(u64 modulus, i64 exponent);
  // Same root of unity written over modulus L (a multiple of N).
  u64 over(u64 L) const { return e * (L / N); }
  bool operator==(const RootExp& o) const;  // equality as complex numbers
};

// ===========================================================================
// Cocycles on finite tables

class TableCocycle {
 public:
  TableCocycle(TablePtr group, u64 N, std::vector<u64> exps);
  static TableCocycle trivial(TablePtr group, u64 N = 1);

  const TablePtr& group() const { return group_; }
  u64 modulus() const { return n_; }
  u64 at(Elem x, Elem y) const { return exps_[static_cast<std::size_t>(x) * group_->order() + y]; }
  const std::vector<u64>& exps() const { return exps_; }
  bool is_normalized() const;

  TableCocycle over(u64 L) const;  // rewrite with modulus L (multiple of N)
  TableCocycle power(i64 k) const;
  TableCocycle inverse() const { return power(-1); }
  TableCocycle operator*(const TableCocycle& o) const;  // pointwise product, lcm modulus
  bool same_values(const TableCocycle& o) const;        // equal as C^x-valued functions

 private:
  TablePtr group_;
  u64 n_;
  std::vector<u64> exps_;
};

struct Cochain1 {
  TablePtr group;
  u64 N = 1;
  std::vector<u64> mu;  // mu[g], with mu[identity] = 0
};

struct CocycleCheck {
  bool ok = true;
  std::size_t checked = 0;
  std::string witness;  // first violating triple, human readable
};

CocycleCheck is_cocycle(const TableCocycle& a);
TableCocycle coboundary(const Cochain1& mu);

struct CoboundaryResult {
  bool trivial = false;
  std::optional<Cochain1> witness;  // values in mu_{N |G|}
};

inline constexpr std::size_t kCoboundaryCap = 128;

// Decides whether the class of `a` in H^2(G, C^x) is trivial.
CoboundaryResult is_coboundary(const TableCocycle& a, std::size_t cap = kCoboundaryCap);

// The same decision with the linear system kept for repeated queries on one
// group; accepts any cocycle whose modulus divides N.
class CoboundarySolver {
 public:
  CoboundarySolver(TablePtr group, u64 N, std::size_t cap = kCoboundaryCap);
  CoboundaryResult solve(const TableCocycle& a) const;
  u64 modulus() const { return n_; }

 private:
  TablePtr group_;
  u64 n_;
  HowellBasis basis_;
};

bool cohomologous(const TableCocycle& a, const TableCocycle& b);
std::size_t class_order(const TableCocycle& a);

inline constexpr std::size_t kBruteforceCap = 16;

// Normalized mu_N-valued cocycles modulo C^x-coboundaries, N = |G|. The
// result is compared with the torsion of h2_integral; a mismatch throws
// CheckFailed.
FinAbDesc h2_bruteforce(const FiniteGroupTable& t, std::size_t cap = kBruteforceCap);

// Cocycle lambda_1^{t_1} ... lambda_k^{t_k} built from xi data, where the
// exponent vector c picks lambda_i = zeta_{r_i}^{c_i}.
TableCocycle xi_cocycle(const XiData& xi, const std::vector<i64>& c);

// ===========================================================================
// Central extensions

struct CentralExtensionData {
  TablePtr total;
  TablePtr quotient;
  Subset central;                // A, sorted indices into total
  std::vector<Elem> section;     // quotient -> total
  std::vector<Elem> projection;  // total -> quotient

  // Checks centrality, the projection homomorphism with kernel A, and the
  // section conventions; throws InvalidInput naming the failure.
  void validate() const;
  std::size_t position_in_a(Elem a) const;  // index of a in `central`
};

// A character of A: values[k] is the exponent of chi(central[k]) mod N.
struct AChar {
  u64 N = 1;
  std::vector<u64> values;
};

// All characters of an abelian subgroup, with modulus exp(A).
std::vector<AChar> characters_of(const FiniteGroupTable& t, const Subset& a);

TableCocycle transgression(const CentralExtensionData& ext, const AChar& chi);
TableCocycle inflation(const TableCocycle& a, const CentralExtensionData& ext);

struct RestrictedCocycle {
  SubgroupTable sub;
  TableCocycle cocycle;
};
RestrictedCocycle restriction(const TableCocycle& a, const Subset& h);

// ===========================================================================
// Cocycles on infinite families, checked on sampled triples

template <class E>
struct FamilyCocycle {
  std::string name;
  u64 N = 1;
  E identity;
  std::function<E(const E&, const E&)> mul;
  std::function<u64(const E&, const E&)> eval;
  std::function<E(Rng&)> sample;
};

template <class E>
CocycleCheck is_cocycle(const FamilyCocycle<E>& a, std::size_t samples, u64 seed = kDefaultSeed) {
  CocycleCheck res;
  Rng rng(seed);
  const u64 N = a.N;
  for (std::size_t s = 0; s < samples; ++s) {
    E x = a.sample(rng), y = a.sample(rng), z = a.sample(rng);
    u64 lhs = (a.eval(x, y) + a.eval(a.mul(x, y), z)) % N;
    u64 rhs = (a.eval(x, a.mul(y, z)) + a.eval(y, z)) % N;
    ++res.checked;
    if (lhs != rhs) {
      res.ok = false;
      res.witness = "violation at sample " + std::to_string(s);
      return res;
    }
  }
  return res;
}

// Bounds for sampled infinite coordinates.
inline constexpr i64 kSampleBound = 1000000;

struct MetacyclicCocycle {
  MetacyclicDesc group;  // G(m, 0, r)
  BigInt t, x, y;        // t = gcd(m, r-1) = x m + y (r-1), |y| minimal
  u64 lambda_exp = 0;    // lambda = zeta_t^{lambda_exp}

  // Exponent mod t of alpha(a^i b^j, a^{i1} b^{j1}) = lambda^{i1 y (r^j - 1)/t}.
  u64 eval(const MetacyclicElement& p, const MetacyclicElement& q) const;
  FamilyCocycle<MetacyclicElement> family() const;
};

MetacyclicCocycle metacyclic_cocycle(const BigInt& m, const BigInt& r, u64 lambda_exp);

// Cocycle on (Z/n x Z) x| Z (HeisenbergDesc d = [1], central modulus n):
//   lambda^{m2 p1 + n2 p1 (p1-1)/2} mu^{n1 m2 + p1 n2 (n2-1)/2 + p1 n1 n2}
// with lambda = zeta_n^{lambda_exp}, mu = zeta_n^{mu_exp}.
struct Example1Cocycle {
  HeisenbergDesc group;
  u64 n = 1, lambda_exp = 0, mu_exp = 0;
  u64 eval(const HeisElement& x, const HeisElement& y) const;
  FamilyCocycle<HeisElement> family() const;
};

Example1Cocycle example1_cocycle(u64 n, u64 lambda_exp, u64 mu_exp);

// Samplers for infinite families (exponents in [-kSampleBound, kSampleBound]).
MetacyclicElement sample_metacyclic(const MetacyclicDesc& d, Rng& rng);
HeisElement sample_heisenberg(const HeisenbergDesc& d, Rng& rng);

}  // namespace schur

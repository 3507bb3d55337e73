#pragma once

// Representation groups. For a finite group G the twisted product
// G x H_2 with law
//   (g1, a)(g2, a') = (g1 g2, a + a' + t(g1, g2))
// is built from the t_i tables of xi_extract. For G(m,0,r) the Schur cover
// G(mt,0,r) with central A = <a^m> is given in normal form.

#include "schur/cocycles.hpp"

#include <string>
#include <vector>

namespace schur {

inline constexpr std::size_t kRepGroupCap = 1024;

class RepGroup {
 public:
  // t[i][g1*|G| + g2] in [0, moduli[i]). Tables must be normalized; the
  // cocycle identity is not assumed (verify_repgroup checks it).
  RepGroup(TablePtr base, std::vector<u64> moduli, std::vector<std::vector<u64>> t);

  const TablePtr& base() const { return base_; }
  const std::vector<u64>& moduli() const { return moduli_; }
  const std::vector<u64>& t(std::size_t i) const { return t_[i]; }
  FinAbDesc h2() const;

  std::size_t a_order() const { return a_order_; }
  std::size_t order() const { return base_->order() * a_order_; }

  // Elements are encoded as g * |A| + a, with a the mixed-radix index of the
  // coordinate vector (last coordinate fastest).
  Elem encode(Elem g, std::size_t a) const { return static_cast<Elem>(g * a_order_ + a); }
  Elem base_of(Elem x) const { return static_cast<Elem>(x / a_order_); }
  std::size_t a_of(Elem x) const { return x % a_order_; }
  std::vector<u64> a_coords(std::size_t a) const;
  std::size_t a_index(const std::vector<u64>& coords) const;
  Elem identity() const { return encode(base_->identity(), 0); }

  // The twisted law evaluated directly from the t tables.
  Elem mul(Elem x, Elem y) const;

  // Instantiated multiplication table; InvalidInput if the law is not a
  // group law, CapExceeded above `cap`.
  TablePtr table(std::size_t cap = kRepGroupCap) const;
  CentralExtensionData extension(std::size_t cap = kRepGroupCap) const;

  // The character chi_c(a) = sum_i c_i a_i / r_i of A, as an AChar over
  // the central subset of table() (modulus exp(A)).
  AChar character(const std::vector<u64>& c) const;

 private:
  TablePtr base_;
  std::vector<u64> moduli_;
  std::vector<std::vector<u64>> t_;
  std::size_t a_order_ = 1;
};

RepGroup build_repgroup(TablePtr base, std::size_t cap = kDefaultBarCap);
RepGroup repgroup_from_xi(const XiData& xi);

struct VerifyCheck {
  std::string name;
  bool pass = true;
  std::size_t checked = 0;
  std::string witness;
};

struct RepGroupReport {
  std::size_t order = 0;
  std::size_t a_order = 0;
  std::vector<VerifyCheck> checks;
  bool ok() const;
  const VerifyCheck& check(const std::string& name) const;
};

inline constexpr std::size_t kExhaustiveAssociativity = 64;
inline constexpr std::size_t kSampledTriples = 100000;

// Checks associativity of the law, the additive cocycle identity of the t
// tables (and that the two verdicts agree), centrality of A, A inside the
// derived subgroup, and that transgression sends the characters of A to
// pairwise distinct classes whose number equals |H^2(G, C^x)|.
RepGroupReport verify_repgroup(const RepGroup& r, u64 seed = kDefaultSeed);

// Negative control: the same data with one t entry at a pair of
// non-identity elements shifted by 1. For |G| >= 3 the result never
// satisfies the cocycle identity. Needs nontrivial H_2 and |G| >= 3.
RepGroup corrupted_copy(const RepGroup& r, u64 seed = kDefaultSeed);

// ---------------------------------------------------------------------------
// Schur cover of G(m, 0, r)

struct MetacoverDesc {
  BigInt m, r, t;          // t = gcd(m, r - 1)
  MetacyclicDesc cover;    // G(mt, 0, r)
  MetacyclicDesc base;     // G(m, 0, r)
  Presentation presentation;  // <a, b | a^{mt}, [a,b] a^{r-1}>

  MetacyclicElement central_generator() const { return {m, 0}; }  // a^m
};

MetacoverDesc metacover(const BigInt& m, const BigInt& r);

// Canonical projection a -> a, b -> b onto G(m, 0, r).
MetacyclicElement metacover_project(const MetacoverDesc& d, const MetacyclicElement& x);
bool metacover_in_a(const MetacoverDesc& d, const MetacyclicElement& x);

struct MetacoverReport {
  bool central_relation = false;  // [a^m, b] = 1 exactly
  bool a_order_ok = false;        // a^m has order exactly t
  bool projection_ok = false;     // homomorphism and surjective on samples
  bool kernel_ok = false;         // kernel elements on samples lie in A
  std::size_t samples = 0;
  std::string witness;
  bool ok() const { return central_relation && a_order_ok && projection_ok && kernel_ok; }
};

MetacoverReport verify_metacover(const MetacoverDesc& d, std::size_t samples = 10000, u64 seed = kDefaultSeed);

// mu(a^i b^j) = delta^{i y} on the cover, delta = zeta_{mt}^{delta_exp} the
// solution of delta^t = lambda with the smallest non-negative exponent.
struct InflationWitness {
  MetacoverDesc cover;
  MetacyclicCocycle alpha;
  u64 N = 1;  // mt
  u64 delta_exp = 0;

  u64 mu(const MetacyclicElement& x) const;
  // (delta mu)(x, y) = mu(x)^{-1} mu(y)^{-1} mu(xy), exponent mod mt.
  u64 coboundary(const MetacyclicElement& x, const MetacyclicElement& y) const;
  // alpha(pi x, pi y) written over modulus mt.
  u64 inflated(const MetacyclicElement& x, const MetacyclicElement& y) const;
};

inline constexpr u64 kWitnessModulusCap = u64{1} << 31;

InflationWitness inflation_witness(const BigInt& m, const BigInt& r, u64 lambda_exp);

struct SampledAgreement {
  bool ok = true;
  std::size_t checked = 0;
  std::string witness;
};

SampledAgreement verify_inflation_witness(const InflationWitness& w, std::size_t samples, u64 seed = kDefaultSeed);

}  // namespace schur

#pragma once

// Criteria for alpha-finiteness (every irreducible alpha-representation is
// finite dimensional): a normal subgroup N of finite index on which the
// restricted class has finite order suffices. Metacyclic and Heisenberg
// reports, and a finite-window check of the shift representation that is
// infinite dimensional when the automorphism has infinite order.

#include "schur/cocycles.hpp"

#include <optional>
#include <string>
#include <vector>

namespace schur {

// True iff m divides (1-r)^k for some k, decided by gcd stabilization.
bool mc_is_nilpotent(const BigInt& m, const BigInt& r);

// The lower central series of G(m,0,r) has gamma_k = <a^{(1-r)^{k-1}}>. This
// follows it until it stabilizes and reports whether it reaches 1.
bool mc_lower_central_series_terminates(const BigInt& m, const BigInt& r);

struct AbelianByFiniteWitness {
  BigInt d;      // order of r mod m
  BigInt index;  // [G : N] = d
  std::string description;
  bool commutator_trivial = false;  // [a, b^d] = 1
  bool normal = false;              // conjugates of a, b^d by a^{+-1}, b^{+-1} stay in N
};

inline constexpr u64 kOrderSearchCap = 10000000;

// N = <a, b^d> in G(m, 0, r).
AbelianByFiniteWitness mc_abelian_by_finite_witness(const BigInt& m, const BigInt& r);

struct AlphaFiniteReport {
  std::string group;
  std::string verdict;
  std::string witness_subgroup;
  std::optional<BigInt> index;        // nullopt: no finite-index witness
  std::optional<BigInt> class_order;  // order of [alpha restricted to N x N]
  bool sufficient_condition_met = false;
  std::optional<bool> nilpotent;
  std::optional<bool> paper_equivalence_flag;  // nilpotent == sufficient_condition_met
  std::vector<std::string> notes;
};

inline constexpr const char* kVerdictFinite = "alpha-finite";
inline constexpr const char* kVerdictNotFinite = "not alpha-finite";

AlphaFiniteReport mc_alpha_finite_report(const BigInt& m, const BigInt& n, const BigInt& r, u64 lambda_exp);

// (Z/n x Z) x| Z with the Example1Cocycle, N = (Z/n x nZ) x Z.
AlphaFiniteReport heisenberg_report(u64 n, u64 lambda_exp, u64 mu_exp, std::size_t samples = 10000,
                                    u64 seed = kDefaultSeed);

// ---------------------------------------------------------------------------
// Shift representation on span{v_h : h in Z} of C x| <z>, C = Z^k, with
// z c z^{-1} = phi(c), z v_h = v_{h+1}, c v_h = lambda^{beta_h(c)} v_h and
// beta_h(c) = coordinate `beta_coordinate` of phi^{-h}(c).

using SmallIntMatrix = std::vector<std::vector<i64>>;

struct ShiftWindowData {
  SmallIntMatrix phi;                   // k x k, determinant +-1
  std::size_t beta_coordinate = 0;
  std::optional<RootExp> lambda;   // nullopt: lambda is not a root of unity
  i64 W = 8;                       // indices |h| < W
  std::size_t samples = 10000;
  u64 seed = kDefaultSeed;
};

struct ShiftCheck {
  std::string name;
  bool pass = true;
  bool vacuous = false;
  std::size_t checked = 0;
  std::string note;
};

struct ShiftWindowReport {
  std::vector<i64> indices;           // the window
  std::vector<i64> excluded_indices;  // boundary indices left out of covariance
  std::vector<ShiftCheck> checks;     // multiplicative, covariance, distinct_characters
  std::vector<std::string> notes;
  bool ok() const;
};

ShiftWindowData shift_demo_data();
ShiftWindowReport shift_window_verify(const ShiftWindowData& data);

}  // namespace schur

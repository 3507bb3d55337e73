#pragma once

// Group models: finite multiplication tables, metacyclic groups G(m,n,r) in
// normal form a^i b^j, finitely generated abelian groups, Heisenberg-type
// groups, and presentations.

#include "schur/core.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace schur {

using Elem = std::uint32_t;
using Subset = std::vector<Elem>;  // sorted element indices

// ===========================================================================
// Finite multiplication tables

class FiniteGroupTable {
 public:
  // `mult` is row-major: mult[a*order + b] = index of a*b.
  // Validates the Latin square property, the identity, inverses and
  // associativity (exhaustive up to order 64, 1e5 sampled triples above).
  FiniteGroupTable(std::size_t order, std::vector<Elem> mult, std::vector<std::string> labels = {});

  static FiniteGroupTable from_rows(const std::vector<std::vector<Elem>>& rows,
                                    std::vector<std::string> labels = {});

  std::size_t order() const { return order_; }
  Elem mul(Elem a, Elem b) const { return mult_[static_cast<std::size_t>(a) * order_ + b]; }
  Elem identity() const { return identity_; }
  Elem inv(Elem a) const { return inv_[a]; }
  const std::string& label(Elem a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<Elem>& mult_flat() const { return mult_; }

  Elem pow(Elem a, i64 k) const;
  std::size_t element_order(Elem a) const;
  Elem commutator(Elem a, Elem b) const;  // a b a^-1 b^-1
  bool is_abelian() const;

 private:
  std::size_t order_;
  std::vector<Elem> mult_;
  Elem identity_ = 0;
  std::vector<Elem> inv_;
  std::vector<std::string> labels_;
};

using TablePtr = std::shared_ptr<const FiniteGroupTable>;

bool is_subgroup(const FiniteGroupTable& t, const Subset& s);
Subset generated_subgroup(const FiniteGroupTable& t, const std::vector<Elem>& gens);
Subset derived_subgroup(const FiniteGroupTable& t);
Subset center(const FiniteGroupTable& t);
bool is_central(const FiniteGroupTable& t, const Subset& s);

// A subgroup re-indexed as a group table of its own.
struct SubgroupTable {
  TablePtr table;
  std::vector<Elem> embed;        // sub index -> parent index
  std::vector<std::int64_t> pos;  // parent index -> sub index, -1 outside
};
SubgroupTable subgroup_table(const FiniteGroupTable& t, const Subset& s);

// Right cosets H x, representatives ordered by first occurrence in the table.
struct RightCosets {
  std::vector<Elem> reps;        // x_u
  std::vector<std::size_t> of;   // element -> coset index
};
RightCosets right_cosets(const FiniteGroupTable& t, const Subset& h);

// Dicyclic group Q_{4n}: a^{2n} = 1, b^2 = a^n, b a b^-1 = a^-1 (n >= 1).
// n = 2 gives the quaternion group of order 8.
FiniteGroupTable dicyclic_table(std::size_t n);

// ===========================================================================
// Metacyclic groups G(m,n,r) = <a,b | a^m = b^n = 1, b a b^-1 = a^r>

struct MetacyclicDesc {
  BigInt m, n, r;

  MetacyclicDesc() = default;
  // Validates the type invariants; throws InvalidInput naming the rule.
  MetacyclicDesc(BigInt m_, BigInt n_, BigInt r_);

  bool is_finite() const { return m > 0 && n > 0; }
  bool operator==(const MetacyclicDesc&) const = default;
};

struct MetacyclicElement {
  BigInt i, j;
  bool operator==(const MetacyclicElement&) const = default;
};

MetacyclicElement mc_reduce(const MetacyclicDesc& d, MetacyclicElement x);
MetacyclicElement mc_identity();
MetacyclicElement mc_mul(const MetacyclicDesc& d, const MetacyclicElement& x, const MetacyclicElement& y);
MetacyclicElement mc_inv(const MetacyclicDesc& d, const MetacyclicElement& x);
// a-exponent of [a^i, b^j] = a^{i(1 - r^j)}, reduced mod m (exact when m = 0).
BigInt mc_commutator_power(const MetacyclicDesc& d, const BigInt& i, const BigInt& j);
// r^j as it acts on the a-exponent: mod m when m > 0, exact when m = 0.
BigInt mc_twist(const MetacyclicDesc& d, const BigInt& j);
std::string mc_label(const MetacyclicElement& x);

// ===========================================================================
// Finitely generated abelian groups

struct FinAbDesc {
  std::vector<BigInt> factors;  // n1 | n2 | ... with zeros (free factors) last

  FinAbDesc() = default;
  explicit FinAbDesc(std::vector<BigInt> f);  // validates chain

  // Invariant-factor form of a direct sum of cyclic groups of the given
  // orders (0 = infinite cyclic, 1 = trivial and dropped).
  static FinAbDesc from_cyclic_orders(std::vector<BigInt> orders);

  bool is_finite() const;
  bool is_trivial() const { return factors.empty(); }
  std::size_t free_rank() const;
  BigInt order() const;  // 0 when infinite
  BigInt exponent() const;
  std::vector<BigInt> torsion() const;
  bool operator==(const FinAbDesc&) const = default;
};

std::string to_string(const FinAbDesc& a);

// ===========================================================================
// Heisenberg-type groups
//
// Elements (a, b, c) with a central, b, c integer vectors of length n, law
//   (a,b,c)(a',b',c') = (a + a' + sum_i d_i b'_i c_i, b + b', c + c').
// `central_mod` reduces a (0 = integer). `bc_mod` optionally reduces b and c
// (0 = integer); it needs central_mod | d_i * bc_mod for a well-defined law.
// The group (Z/n x Z) x| Z with law (m1+m2+p1 n2, n1+n2, p1+p2) is d = [1],
// central_mod = n, coordinates (m, n, p) = (a, b, c).

struct HeisenbergDesc {
  std::vector<BigInt> d;
  BigInt central_mod = 0;
  BigInt bc_mod = 0;

  HeisenbergDesc() = default;
  HeisenbergDesc(std::vector<BigInt> d_, BigInt central_mod_, BigInt bc_mod_ = 0);
  std::size_t rank() const { return d.size(); }
  bool is_finite() const { return central_mod > 0 && bc_mod > 0; }
  bool operator==(const HeisenbergDesc&) const = default;
};

struct HeisElement {
  BigInt a;
  std::vector<BigInt> b, c;
  bool operator==(const HeisElement&) const = default;
};

HeisElement heis_identity(const HeisenbergDesc& d);
HeisElement heis_reduce(const HeisenbergDesc& d, HeisElement x);
HeisElement heis_mul(const HeisenbergDesc& d, const HeisElement& x, const HeisElement& y);
HeisElement heis_inv(const HeisenbergDesc& d, const HeisElement& x);

// ===========================================================================
// Presentations (syllable form: generator index with a signed exponent)

struct Syllable {
  std::size_t gen;
  BigInt exp;
};

struct Presentation {
  std::vector<std::string> generators;
  std::vector<std::vector<Syllable>> relators;

  void validate() const;
  std::string to_string() const;
};

// ===========================================================================
// Finite instantiation

inline constexpr std::size_t kDefaultTableCap = 64;

FiniteGroupTable finite_table_of(const MetacyclicDesc& d, std::size_t cap = kDefaultTableCap);
FiniteGroupTable finite_table_of(const FinAbDesc& d, std::size_t cap = kDefaultTableCap);
FiniteGroupTable finite_table_of(const HeisenbergDesc& d, std::size_t cap = kDefaultTableCap);

// Index of a reduced metacyclic element inside finite_table_of(d).
Elem mc_table_index(const MetacyclicDesc& d, const MetacyclicElement& x);

// Group of an abstract presentation evaluated in a table: true iff every
// relator evaluates to the identity under gens -> given table elements.
bool relators_hold(const FiniteGroupTable& t, const Presentation& p, const std::vector<Elem>& images);

}  // namespace schur

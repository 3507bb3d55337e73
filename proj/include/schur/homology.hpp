#pragma once

// Integral H_2 of finite groups from the bar complex, the xi map with its
// t_i cocycle tables, and closed-form multipliers for the infinite families.

#include "schur/groups.hpp"
#include "schur/linalg.hpp"

#include <vector>

namespace schur {

inline constexpr std::size_t kDefaultBarCap = 24;

// Matrix of the boundary d_2 : Z[G^2] -> Z[G] (degree 2) or
// d_3 : Z[G^3] -> Z[G^2] (degree 3) with trivial coefficients. Tuples are
// indexed lexicographically: (x,y) -> x|G| + y, (x,y,z) -> (x|G| + y)|G| + z.
SparseColumnMatrix bar_boundary(const FiniteGroupTable& t, int degree, std::size_t cap = kDefaultBarCap);

// True iff d_2 * d_3 = 0 exactly.
bool bar_composition_vanishes(const FiniteGroupTable& t, std::size_t cap = kDefaultBarCap);

// One t_i table per H_2 factor: values[g1*|G| + g2] in [0, modulus).
struct TTable {
  std::size_t index = 0;
  BigInt modulus;  // torsion order of the factor (0 would mark a free factor)
  std::vector<i64> values;
};

struct XiData {
  TablePtr group;
  FinAbDesc h2;
  std::vector<TTable> t;
  // Integral 2-cycles (vectors over G x G) whose classes are the chosen
  // generators of the H_2 factors, in the same order as `t`.
  std::vector<std::vector<i64>> generator_cycles;

  i64 t_at(std::size_t factor, Elem g1, Elem g2) const {
    return t[factor].values[static_cast<std::size_t>(g1) * group->order() + g2];
  }
};

FinAbDesc h2_integral(const FiniteGroupTable& t, std::size_t cap = kDefaultBarCap);
XiData xi_extract(TablePtr t, std::size_t cap = kDefaultBarCap);

FinAbDesc multiplier_finab(const FinAbDesc& desc);
FinAbDesc multiplier_metacyclic(const MetacyclicDesc& desc);

}  // namespace schur

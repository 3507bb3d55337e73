#include "schur/alphafinite.hpp"

#include <gtest/gtest.h>

#include <numeric>

using namespace schur;

TEST(Nilpotency, Examples) {
  EXPECT_TRUE(mc_is_nilpotent(8, 3));
  EXPECT_FALSE(mc_is_nilpotent(5, 2));
  for (int m = 1; m <= 30; ++m) EXPECT_TRUE(mc_is_nilpotent(m, 1)) << m;
  EXPECT_TRUE(mc_is_nilpotent(9, 4));
  EXPECT_FALSE(mc_is_nilpotent(6, 5));
  EXPECT_THROW(mc_is_nilpotent(0, 3), InvalidInput);
}

TEST(Nilpotency, AgreesWithLowerCentralSeries) {
  int checked = 0;
  for (int m = 1; m <= 100; ++m)
    for (int r = 1; r <= m; ++r) {
      if (std::gcd(r, m) != 1) continue;
      ASSERT_EQ(mc_is_nilpotent(m, r), mc_lower_central_series_terminates(m, r)) << m << "," << r;
      ++checked;
    }
  EXPECT_GT(checked, 3000);
}

// gamma_{k+1} is generated by [a^e, b] where gamma_k = <a^e>; iterate that
// through the commutator formula of the group law.
TEST(Nilpotency, AgreesWithFiniteQuotientCommutators) {
  for (int m = 2; m <= 12; ++m)
    for (int r = 1; r < m; ++r) {
      if (std::gcd(r, m) != 1) continue;
      const AbelianByFiniteWitness w = mc_abelian_by_finite_witness(m, r);
      const MetacyclicDesc g(m, 0, r);
      BigInt e = 1;  // gamma_1 contains a
      bool reached = false;
      for (int k = 0; k < 64 && !reached; ++k) {
        e = mc_commutator_power(g, e, 1);
        reached = floor_mod(e, m) == 0;
      }
      EXPECT_EQ(reached, mc_is_nilpotent(m, r)) << m << "," << r;
      EXPECT_TRUE(w.commutator_trivial);
    }
}

TEST(AbelianByFinite, Witnesses) {
  auto w = mc_abelian_by_finite_witness(5, 2);
  EXPECT_EQ(w.d, 4);
  EXPECT_EQ(w.index, 4);
  EXPECT_TRUE(w.commutator_trivial);
  EXPECT_TRUE(w.normal);
  auto w2 = mc_abelian_by_finite_witness(8, 3);
  EXPECT_EQ(w2.d, 2);
  EXPECT_TRUE(w2.commutator_trivial && w2.normal);
  EXPECT_EQ(mc_abelian_by_finite_witness(7, 1).d, 1);
  for (int m = 2; m <= 40; ++m)
    for (int r = 1; r < m; ++r) {
      if (std::gcd(r, m) != 1) continue;
      auto x = mc_abelian_by_finite_witness(m, r);
      EXPECT_TRUE(x.commutator_trivial && x.normal) << m << "," << r;
      // d is minimal: no smaller power of b commutes with a.
      for (BigInt j = 1; j < x.d; ++j) EXPECT_NE(mc_commutator_power(MetacyclicDesc(m, 0, r), 1, j), 0);
    }
}

TEST(AlphaFiniteReport, Metacyclic) {
  auto rep = mc_alpha_finite_report(8, 0, 3, 1);
  EXPECT_EQ(rep.verdict, kVerdictFinite);
  EXPECT_TRUE(rep.sufficient_condition_met);
  ASSERT_TRUE(rep.index && rep.class_order);
  EXPECT_EQ(*rep.index, 2);
  EXPECT_EQ(*rep.nilpotent, true);
  EXPECT_EQ(*rep.paper_equivalence_flag, true);
  const BigInt t = metacyclic_cocycle(8, 3, 1).t;
  EXPECT_EQ(t % *rep.class_order, 0);

  auto bad = mc_alpha_finite_report(5, 0, 2, 0);
  EXPECT_EQ(bad.verdict, kVerdictFinite);
  EXPECT_FALSE(*bad.nilpotent);
  EXPECT_FALSE(*bad.paper_equivalence_flag);
  EXPECT_EQ(*bad.index, 4);
  EXPECT_GE(bad.notes.size(), 2u);

  auto inf = mc_alpha_finite_report(0, 5, 2, 0);
  EXPECT_EQ(inf.verdict, kVerdictNotFinite);
  EXPECT_FALSE(inf.sufficient_condition_met);
  EXPECT_FALSE(inf.index.has_value());

  EXPECT_THROW(mc_alpha_finite_report(4, 4, 3, 0), InvalidInput);
  EXPECT_THROW(mc_alpha_finite_report(0, 0, 1, 0), InvalidInput);
  EXPECT_THROW(mc_alpha_finite_report(-1, 0, 1, 0), InvalidInput);
}

TEST(AlphaFiniteReport, ClassOrderDividesT) {
  for (int m = 2; m <= 30; ++m)
    for (int r = 1; r < 3 * m; ++r) {
      if (std::gcd(r, m) != 1) continue;
      const BigInt t = metacyclic_cocycle(m, r, 0).t;
      for (u64 lam = 0; lam < std::min<u64>(3, static_cast<u64>(t)); ++lam) {
        auto rep = mc_alpha_finite_report(m, 0, r, lam);
        EXPECT_EQ(t % *rep.class_order, 0) << m << "," << r;
        if (lam == 0) EXPECT_EQ(*rep.class_order, 1);
      }
    }
}

TEST(AlphaFiniteReport, Heisenberg) {
  for (u64 n : {1, 2, 4, 6}) {
    auto rep = heisenberg_report(n, 1 % n, n > 1 ? n - 1 : 0, 2000);
    EXPECT_EQ(rep.verdict, kVerdictFinite);
    EXPECT_EQ(*rep.index, n);
    EXPECT_EQ(n % static_cast<u64>(*rep.class_order), 0u);
  }
  auto four = heisenberg_report(4, 1, 0, 2000);
  EXPECT_EQ(*four.class_order, 4);
  EXPECT_THROW(heisenberg_report(0, 0, 0), InvalidInput);
}

TEST(ShiftWindow, DemoPasses) {
  auto data = shift_demo_data();
  auto rep = shift_window_verify(data);
  EXPECT_TRUE(rep.ok());
  EXPECT_EQ(rep.indices.size(), 15u);
  EXPECT_EQ(rep.indices.front(), -7);
  ASSERT_EQ(rep.checks.size(), 3u);
  EXPECT_EQ(rep.checks[0].name, "multiplicative");
  EXPECT_EQ(rep.checks[1].name, "covariance");
  EXPECT_EQ(rep.checks[2].name, "distinct_characters");
  EXPECT_EQ(rep.checks[2].checked, 15u * 14u / 2u);
  EXPECT_EQ(rep.excluded_indices, std::vector<i64>{7});
  auto again = shift_window_verify(data);
  EXPECT_EQ(again.checks[0].checked, rep.checks[0].checked);
}

TEST(ShiftWindow, FiniteOrderDegenerates) {
  auto data = shift_demo_data();
  data.phi = {{1, 0}, {0, 1}};
  data.samples = 100;
  auto rep = shift_window_verify(data);
  EXPECT_FALSE(rep.ok());
  EXPECT_TRUE(rep.checks[0].pass);
  EXPECT_TRUE(rep.checks[1].pass);
  EXPECT_FALSE(rep.checks[2].pass);
  EXPECT_NE(rep.checks[2].note.find("finite order automorphism"), std::string::npos);

  data.phi = {{0, -1}, {1, 0}};
  auto rot = shift_window_verify(data);
  EXPECT_FALSE(rot.checks[2].pass);
  EXPECT_NE(rot.checks[2].note.find("order 4"), std::string::npos);
}

TEST(ShiftWindow, EdgeCases) {
  auto data = shift_demo_data();
  data.W = 1;
  data.samples = 10;
  auto rep = shift_window_verify(data);
  EXPECT_TRUE(rep.ok());
  EXPECT_TRUE(rep.checks[1].vacuous);
  EXPECT_TRUE(rep.checks[2].vacuous);

  data = shift_demo_data();
  data.samples = 100;
  data.lambda = RootExp{5, 1};
  auto root = shift_window_verify(data);
  EXPECT_TRUE(root.checks[0].pass && root.checks[1].pass);
  EXPECT_TRUE(root.checks[2].vacuous);

  data = shift_demo_data();
  data.phi = {{2, 0}, {0, 1}};
  EXPECT_THROW(shift_window_verify(data), InvalidInput);
  data.phi = {{1, 1}};
  EXPECT_THROW(shift_window_verify(data), InvalidInput);
  data = shift_demo_data();
  data.beta_coordinate = 2;
  EXPECT_THROW(shift_window_verify(data), InvalidInput);
}

TEST(ShiftWindow, BetaCoordinateMatters) {
  // phi = [[1,1],[0,1]] has infinite order. The first row of phi^{-h} is
  // (1, -h), all distinct; the second row is (0, 1) for every h.
  auto data = shift_demo_data();
  data.samples = 50;
  data.phi = {{1, 1}, {0, 1}};
  auto rep = shift_window_verify(data);
  EXPECT_TRUE(rep.ok());
  data.beta_coordinate = 1;
  auto fixed = shift_window_verify(data);
  EXPECT_TRUE(fixed.checks[1].pass);
  EXPECT_FALSE(fixed.checks[2].pass);
  EXPECT_EQ(fixed.checks[2].note.find("finite order"), std::string::npos);
}

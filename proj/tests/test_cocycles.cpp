#include "schur/cocycles.hpp"
#include "schur/corpus.hpp"

#include <gtest/gtest.h>

using namespace schur;

namespace {

TablePtr table(const std::string& spec) { return parse_group_spec(spec).instantiate(); }

Cochain1 random_cochain(const TablePtr& t, u64 N, Rng& rng) {
  Cochain1 mu{t, N, std::vector<u64>(t->order())};
  for (Elem g = 0; g < t->order(); ++g)
    if (g != t->identity()) mu.mu[g] = static_cast<u64>(rng.uniform(0, static_cast<i64>(N) - 1));
  return mu;
}

// Pairing of a cocycle with an integral 2-cycle: sum z(x,y) a(x,y) mod N.
i64 pairing(const TableCocycle& a, const std::vector<i64>& z) {
  const i64 N = static_cast<i64>(a.modulus());
  i64 s = 0;
  for (std::size_t k = 0; k < z.size(); ++k) s = mod_floor(s + mul_mod(mod_floor(z[k], N), a.exps()[k], N), N);
  return s;
}

// D8 = <a, b | a^4, b^2, b a b^-1 = a^3> as a central extension of Klein four by <a^2>.
CentralExtensionData d8_over_klein() {
  MetacyclicDesc d(4, 2, 3);
  CentralExtensionData e;
  e.total = std::make_shared<const FiniteGroupTable>(finite_table_of(d));
  e.quotient = table("fab:[2,2]");
  e.central = {mc_table_index(d, {0, 0}), mc_table_index(d, {2, 0})};
  std::sort(e.central.begin(), e.central.end());
  e.projection.resize(8);
  for (int j = 0; j < 2; ++j)
    for (int i = 0; i < 4; ++i) e.projection[mc_table_index(d, {i, j})] = static_cast<Elem>((i % 2) * 2 + j);
  e.section.resize(4);
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) e.section[x * 2 + y] = mc_table_index(d, {x, y});
  return e;
}

}  // namespace

TEST(Cocycle, TrivialAndPerturbedKlein) {
  TablePtr k = table("fab:[2,2]");
  EXPECT_TRUE(is_cocycle(TableCocycle::trivial(k)).ok);
  XiData xi = xi_extract(k);
  TableCocycle a = xi_cocycle(xi, {1});
  ASSERT_TRUE(is_cocycle(a).ok);
  auto e = a.exps();
  e[1 * 4 + 2] = (e[1 * 4 + 2] + 1) % 2;
  CocycleCheck c = is_cocycle(TableCocycle(k, 2, e));
  EXPECT_FALSE(c.ok);
  EXPECT_FALSE(c.witness.empty());
}

TEST(Coboundary, Examples) {
  TablePtr z2 = table("fab:[2]");
  // mu(g) = -1 gives the trivial cocycle.
  TableCocycle d = coboundary(Cochain1{z2, 2, {0, 1}});
  EXPECT_TRUE(d.same_values(TableCocycle::trivial(z2)));
  EXPECT_TRUE(coboundary(Cochain1{z2, 1, {0, 0}}).same_values(TableCocycle::trivial(z2)));
  auto r = is_coboundary(TableCocycle::trivial(z2));
  ASSERT_TRUE(r.trivial);
  ASSERT_TRUE(r.witness.has_value());
}

TEST(Coboundary, RandomCochainsRoundTripOnSmallCorpus) {
  Rng rng(kDefaultSeed);
  for (const auto& g : corpus_groups(12)) {
    for (int trial = 0; trial < 100; ++trial) {
      const u64 N = static_cast<u64>(rng.uniform(1, 12));
      TableCocycle d = coboundary(random_cochain(g.table, N, rng));
      ASSERT_TRUE(d.is_normalized());
      ASSERT_TRUE(is_cocycle(d).ok);
      auto res = is_coboundary(d);
      ASSERT_TRUE(res.trivial) << g.name;
      ASSERT_TRUE(coboundary(*res.witness).same_values(d));
    }
  }
}

TEST(Coboundary, KleinNontrivialClass) {
  TablePtr k = table("fab:[2,2]");
  TableCocycle a = xi_cocycle(xi_extract(k), {1});
  EXPECT_FALSE(is_coboundary(a).trivial);
  EXPECT_EQ(class_order(a), 2u);
  EXPECT_EQ(class_order(TableCocycle::trivial(k)), 1u);
  EXPECT_FALSE(cohomologous(a, TableCocycle::trivial(k)));
  EXPECT_TRUE(cohomologous(a, a));
}

// H_2 generator cycles give an independent triviality test: a class is
// trivial iff it pairs to zero with every generator cycle.
TEST(Coboundary, AgreesWithCyclePairingOracle) {
  Rng rng(kDefaultSeed + 7);
  for (const auto& g : corpus_groups(16)) {
    XiData xi = xi_extract(g.table);
    if (xi.t.empty()) continue;
    for (int trial = 0; trial < 12; ++trial) {
      std::vector<i64> c;
      for (const auto& tt : xi.t) c.push_back(rng.uniform(0, static_cast<i64>(tt.modulus) - 1));
      TableCocycle a = xi_cocycle(xi, c) * coboundary(random_cochain(g.table, 6, rng));
      bool oracle = true;
      for (const auto& z : xi.generator_cycles) oracle = oracle && pairing(a, z) == 0;
      bool all_zero = std::all_of(c.begin(), c.end(), [](i64 v) { return v == 0; });
      ASSERT_EQ(oracle, all_zero) << g.name;
      ASSERT_EQ(is_coboundary(a).trivial, oracle) << g.name;
    }
  }
}

TEST(Cohomologous, EquivalenceRelationOnSmallCorpus) {
  Rng rng(kDefaultSeed + 11);
  for (const auto& g : corpus_groups(12)) {
    XiData xi = xi_extract(g.table);
    std::vector<TableCocycle> pool;
    std::vector<i64> zero(xi.t.size(), 0);
    pool.push_back(xi_cocycle(xi, zero));
    for (std::size_t f = 0; f < xi.t.size(); ++f) {
      std::vector<i64> c = zero;
      c[f] = 1;
      pool.push_back(xi_cocycle(xi, c));
    }
    const std::size_t base = pool.size();
    for (std::size_t k = 0; k < base; ++k) pool.push_back(pool[k] * coboundary(random_cochain(g.table, 4, rng)));
    for (const auto& a : pool) {
      ASSERT_TRUE(is_cocycle(a).ok);
      ASSERT_TRUE(cohomologous(a, a));
    }
    for (const auto& a : pool)
      for (const auto& b : pool) ASSERT_EQ(cohomologous(a, b), cohomologous(b, a)) << g.name;
    for (int s = 0; s < 10; ++s) {
      const auto& a = pool[rng.index(pool.size())];
      const auto& b = pool[rng.index(pool.size())];
      const auto& c = pool[rng.index(pool.size())];
      if (cohomologous(a, b) && cohomologous(b, c)) ASSERT_TRUE(cohomologous(a, c));
    }
  }
}

TEST(H2Bruteforce, Examples) {
  EXPECT_TRUE(h2_bruteforce(*table("fab:[6]")).is_trivial());
  EXPECT_EQ(h2_bruteforce(*table("fab:[2,2]")), FinAbDesc({2}));
  EXPECT_EQ(h2_bruteforce(*table("fab:[2,4]")), FinAbDesc({2}));
  EXPECT_THROW(h2_bruteforce(*table("fab:[17]")), CapExceeded);
}

TEST(H2Bruteforce, MatchesHomologyOnCorpus) {
  for (const auto& g : corpus_groups(16)) {
    FinAbDesc h = h2_bruteforce(*g.table);
    EXPECT_EQ(h, h2_integral(*g.table)) << g.name;
    if (g.closed_form) EXPECT_EQ(h, *g.closed_form) << g.name;
  }
}

TEST(Extension, TransgressionOfKleinCover) {
  CentralExtensionData e = d8_over_klein();
  e.validate();
  auto chars = characters_of(*e.total, e.central);
  ASSERT_EQ(chars.size(), 2u);
  TableCocycle triv = transgression(e, chars[0]);
  TableCocycle faithful = transgression(e, chars[1]);
  EXPECT_TRUE(triv.same_values(TableCocycle::trivial(e.quotient)));
  EXPECT_TRUE(is_cocycle(faithful).ok);
  EXPECT_TRUE(faithful.is_normalized());
  TableCocycle xi_alpha = xi_cocycle(xi_extract(e.quotient), {1});
  EXPECT_TRUE(cohomologous(faithful, xi_alpha));

  // The nontrivial class dies on the cover.
  TableCocycle inf = inflation(xi_alpha, e);
  EXPECT_TRUE(is_cocycle(inf).ok);
  EXPECT_TRUE(is_coboundary(inf).trivial);
  EXPECT_TRUE(inflation(TableCocycle::trivial(e.quotient), e).same_values(TableCocycle::trivial(e.total)));
  // beta(a x, y) = beta(x, y) for a in A
  for (Elem a : e.central)
    for (Elem x = 0; x < 8; ++x)
      for (Elem y = 0; y < 8; ++y) ASSERT_EQ(inf.at(e.total->mul(a, x), y), inf.at(x, y));

  // Restriction of an inflated cocycle to A is trivial; restriction to {1} too.
  RestrictedCocycle ra = restriction(inf, e.central);
  EXPECT_TRUE(ra.cocycle.same_values(TableCocycle::trivial(ra.sub.table)));
  RestrictedCocycle r1 = restriction(xi_alpha, {e.quotient->identity()});
  EXPECT_EQ(r1.cocycle.group()->order(), 1u);
  EXPECT_THROW(restriction(xi_alpha, {1, 2}), InvalidInput);
}

TEST(Extension, ValidationRejectsBadData) {
  CentralExtensionData e = d8_over_klein();
  auto bad = e;
  bad.section[1] = bad.section[2];
  EXPECT_THROW(bad.validate(), InvalidInput);
  bad = e;
  // a is not central in D8
  bad.central = {0, 1};
  EXPECT_THROW(bad.validate(), InvalidInput);
}

TEST(Extension, TransgressionIsHomomorphismUpToCoboundaries) {
  // Extensions of quotients by central subgroups for every corpus group of order <= 16.
  for (const auto& g : corpus_groups(16)) {
    const auto& T = *g.table;
    Subset z = center(T);
    if (z.size() == 1) continue;
    // Quotient by the center: cosets as quotient elements.
    RightCosets rc = right_cosets(T, z);
    const std::size_t q = rc.reps.size();
    std::vector<Elem> mult(q * q);
    for (std::size_t u = 0; u < q; ++u)
      for (std::size_t v = 0; v < q; ++v) mult[u * q + v] = static_cast<Elem>(rc.of[T.mul(rc.reps[u], rc.reps[v])]);
    CentralExtensionData e;
    e.total = g.table;
    e.quotient = std::make_shared<const FiniteGroupTable>(q, mult);
    e.central = z;
    e.projection.resize(T.order());
    for (Elem x = 0; x < T.order(); ++x) e.projection[x] = static_cast<Elem>(rc.of[x]);
    e.section = rc.reps;
    // Cosets are ordered by first occurrence, so the identity coset comes first.
    ASSERT_EQ(e.quotient->identity(), 0u);
    ASSERT_EQ(e.section[0], T.identity());
    e.validate();
    auto chars = characters_of(T, z);
    ASSERT_EQ(chars.size(), z.size());
    for (const auto& c1 : chars)
      for (const auto& c2 : chars) {
        AChar prod{c1.N, {}};
        for (std::size_t k = 0; k < z.size(); ++k) prod.values.push_back((c1.values[k] + c2.values[k]) % c1.N);
        TableCocycle t1 = transgression(e, c1), t2 = transgression(e, c2), t12 = transgression(e, prod);
        ASSERT_TRUE(is_cocycle(t12).ok);
        ASSERT_TRUE(t12.is_normalized());
        ASSERT_TRUE(is_coboundary(t12 * (t1 * t2).inverse()).trivial) << g.name;
        ASSERT_TRUE(is_coboundary(inflation(t1, e)).trivial) << g.name;
      }
  }
}

TEST(Characters, EnumerationIsCompleteAndMultiplicative) {
  TablePtr t = table("fab:[2,4]");
  Subset all;
  for (Elem g = 0; g < t->order(); ++g) all.push_back(g);
  auto chars = characters_of(*t, all);
  ASSERT_EQ(chars.size(), 8u);
  std::set<std::vector<u64>> distinct;
  for (const auto& c : chars) {
    distinct.insert(c.values);
    for (Elem x : all)
      for (Elem y : all) ASSERT_EQ((c.values[x] + c.values[y]) % c.N, c.values[t->mul(x, y)]);
  }
  EXPECT_EQ(distinct.size(), 8u);
}

TEST(MetacyclicCocycle, ClosedFormExamples) {
  MetacyclicCocycle c = metacyclic_cocycle(8, 3, 1);
  EXPECT_EQ(c.t, 2);
  EXPECT_EQ(c.x, 0);
  EXPECT_EQ(c.y, 1);
  EXPECT_EQ(c.eval({0, 1}, {1, 0}), 1u);  // alpha(b, a) = -1
  EXPECT_EQ(c.eval({3, 0}, {5, 7}), 0u);  // j = 0
  EXPECT_EQ(c.eval({3, 5}, {0, 7}), 0u);  // i1 = 0
  EXPECT_THROW(metacyclic_cocycle(8, 3, 2), InvalidInput);
  EXPECT_THROW(metacyclic_cocycle(8, 2, 0), InvalidInput);
  EXPECT_EQ(metacyclic_cocycle(7, 8, 3).y, 0);
  EXPECT_EQ(metacyclic_cocycle(5, 2, 0).t, 1);
}

TEST(MetacyclicCocycle, SampledIdentityAndKilledByT) {
  for (auto [m, r] : std::vector<std::pair<int, int>>{{8, 3}, {7, 8}, {12, 5}, {9, 4}, {16, 5}, {27, 10}, {100, 21}}) {
    BigInt t = gcd(BigInt(m), BigInt(r - 1));
    for (u64 lam = 0; lam < std::min<u64>(3, to_u64(t)); ++lam) {
      MetacyclicCocycle c = metacyclic_cocycle(m, r, lam);
      auto f = c.family();
      auto res = is_cocycle(f, 100000);
      ASSERT_TRUE(res.ok) << m << "," << r << ": " << res.witness;
      Rng rng(kDefaultSeed);
      for (int s = 0; s < 1000; ++s) {
        auto x = f.sample(rng), y = f.sample(rng);
        // alpha^t = 1 pointwise, so mu = 1 witnesses triviality of alpha^t.
        ASSERT_EQ((c.eval(x, y) * to_u64(t)) % to_u64(t), 0u);
        ASSERT_EQ(c.eval(x, f.identity), 0u);
        ASSERT_EQ(c.eval(f.identity, y), 0u);
      }
    }
  }
}

TEST(MetacyclicCocycle, EightThreeIsAPointwiseCoboundary) {
  // alpha = delta(mu) with mu(a^i b^j) = zeta_4^i, as exponents mod 4.
  MetacyclicCocycle c = metacyclic_cocycle(8, 3, 1);
  auto f = c.family();
  Rng rng(kDefaultSeed);
  auto mu = [](const MetacyclicElement& x) { return floor_mod(x.i, BigInt(4)); };
  for (int s = 0; s < 100000; ++s) {
    auto x = f.sample(rng), y = f.sample(rng);
    BigInt d = floor_mod(-mu(x) - mu(y) + mu(f.mul(x, y)), BigInt(4));
    ASSERT_EQ(d, BigInt(2 * c.eval(x, y)));
  }
}

TEST(Example1Cocycle, ValuesAndIdentity) {
  Example1Cocycle c = example1_cocycle(4, 1, 0);
  HeisElement p{0, {0}, {1}}, m{1, {0}, {0}};
  EXPECT_EQ(c.eval(p, m), 1u);
  auto f = c.family();
  for (u64 lam = 0; lam < 4; ++lam)
    for (u64 mu = 0; mu < 4; ++mu) {
      auto g = example1_cocycle(4, lam, mu).family();
      ASSERT_TRUE(is_cocycle(g, lam + mu < 2 ? 100000 : 5000).ok);
    }
  auto res = is_cocycle(example1_cocycle(6, 5, 1).family(), 100000);
  EXPECT_TRUE(res.ok) << res.witness;
  Rng rng(kDefaultSeed);
  for (int s = 0; s < 1000; ++s) ASSERT_EQ(c.eval(f.sample(rng), f.identity), 0u);
  auto zero = example1_cocycle(5, 0, 0);
  for (int s = 0; s < 100; ++s) ASSERT_EQ(zero.eval(f.sample(rng), f.sample(rng)), 0u);
}

#include "schur/corpus.hpp"
#include "schur/projrep.hpp"
#include "schur/repgroup.hpp"

#include <gtest/gtest.h>

using namespace schur;

namespace {

TablePtr table(const std::string& spec) { return parse_group_spec(spec).instantiate(); }

std::size_t class_count(const FiniteGroupTable& t) {
  std::vector<char> seen(t.order(), 0);
  std::size_t classes = 0;
  for (Elem x = 0; x < t.order(); ++x) {
    if (seen[x]) continue;
    ++classes;
    for (Elem g = 0; g < t.order(); ++g) seen[t.mul(t.mul(g, x), t.inv(g))] = 1;
  }
  return classes;
}

Subset cyclic(const FiniteGroupTable& t, Elem g) { return generated_subgroup(t, {g}); }

SubgroupChar trivial_char(const Subset& H) { return {H, 1, std::vector<u64>(H.size(), 0)}; }

// Klein four with its representation group and the faithful character of A.
struct KleinSetup {
  RepGroup r;
  CentralExtensionData ext;
  AChar chi;
  TableCocycle alpha;
};

KleinSetup klein() {
  RepGroup r = build_repgroup(table("fab:[2,2]"));
  CentralExtensionData ext = r.extension();
  AChar chi = r.character({1});
  TableCocycle alpha = transgression(ext, chi);
  return {std::move(r), std::move(ext), std::move(chi), std::move(alpha)};
}

Elem non_identity(const FiniteGroupTable& t) { return t.identity() == 0 ? 1 : 0; }

}  // namespace

TEST(Monomial, Arithmetic) {
  MonomialMatrix a{3, {1, 2, 0}, {1, 0, 3}, 4};
  MonomialMatrix b{3, {2, 0, 1}, {0, 1, 0}, 2};
  EXPECT_NO_THROW(a.validate());
  Eigen::MatrixXcd prod = a.dense() * b.dense();
  EXPECT_LT(((a * b).dense() - prod).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_TRUE(a * a.inverse() == MonomialMatrix::identity(3));
  EXPECT_TRUE(a.over(12) == a);
  EXPECT_TRUE(a.scaled(2, 1) == a.scaled(4, 2));
  Eigen::MatrixXcd B = Eigen::MatrixXcd::Random(3, 2);
  EXPECT_LT((a.apply(B) - a.dense() * B).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_THROW((MonomialMatrix{2, {0, 0}, {0, 0}, 2}.validate()), InvalidInput);
}

TEST(ProjRep, TrivialAndKleinInduced) {
  TablePtr z3 = table("fab:[3]");
  std::vector<MonomialMatrix> ones(3, MonomialMatrix::identity(1));
  ProjRep triv = ProjRep::from_monomial(z3, TableCocycle::trivial(z3), ones);
  EXPECT_TRUE(check_projrep(triv).ok);

  KleinSetup k = klein();
  const FiniteGroupTable& g = *k.alpha.group();
  auto psis = alpha_characters(k.alpha, cyclic(g, non_identity(g)));
  ASSERT_EQ(psis.size(), 2u);
  ProjRep rho = induce(k.alpha, psis[0]);
  EXPECT_EQ(rho.dim(), 2u);
  RepCheck c = check_projrep(rho);
  EXPECT_TRUE(c.ok) << c.witness;
  EXPECT_TRUE(c.exact);
  EXPECT_EQ(c.checked, 16u);
  EXPECT_EQ(commutant_dimension(rho), 1u);
}

TEST(ProjRep, ScaledDenseMatrixFails) {
  KleinSetup k = klein();
  ProjRep rho = twisted_regular(k.alpha);
  std::vector<Eigen::MatrixXcd> mats;
  for (Elem x = 0; x < 4; ++x) mats.push_back(rho.matrix(x));
  ProjRep good = ProjRep::from_dense(rho.group(), rho.cocycle(), mats);
  RepCheck ok = check_projrep(good);
  EXPECT_TRUE(ok.ok);
  EXPECT_LT(ok.max_residual, 1e-12);
  mats[non_identity(*rho.group())] *= 1.1;
  RepCheck bad = check_projrep(ProjRep::from_dense(rho.group(), rho.cocycle(), mats));
  EXPECT_FALSE(bad.ok);
  EXPECT_FALSE(bad.witness.empty());
}

TEST(Induce, WholeGroupGivesPsi) {
  TablePtr z4 = table("fab:[4]");
  TableCocycle triv = TableCocycle::trivial(z4);
  Subset all{0, 1, 2, 3};
  auto chars = alpha_characters(triv, all);
  ASSERT_EQ(chars.size(), 4u);
  for (const auto& psi : chars) {
    ProjRep rho = induce(triv, psi);
    ASSERT_EQ(rho.dim(), 1u);
    for (Elem g = 0; g < 4; ++g) EXPECT_LT(std::abs(rho.trace(g) - root_of_unity(psi.N, psi.at(g))), 1e-12);
  }
}

TEST(Induce, Z4FromSquaresSplitsIntoFaithfulCharacters) {
  TablePtr z4 = table("fab:[4]");
  TableCocycle triv = TableCocycle::trivial(z4);
  Elem g = 0;
  while (z4->element_order(g) != 4) ++g;
  const Elem g2 = z4->mul(g, g);
  SubgroupChar psi{cyclic(*z4, g2), 2, {}};
  for (Elem h : psi.H) psi.exps.push_back(h == g2 ? 1 : 0);
  ProjRep rho = induce(triv, psi);
  ASSERT_EQ(rho.dim(), 2u);
  ASSERT_TRUE(check_projrep(rho).ok);
  Decomposition dec = decompose(rho);
  ASSERT_EQ(dec.irreps.size(), 2u);
  std::vector<cplx> at_g;
  for (const auto& c : dec.irreps) {
    EXPECT_EQ(c.dim, 1u);
    EXPECT_EQ(c.multiplicity, 1u);
    at_g.push_back(c.character[g]);
  }
  // Faithful characters of Z/4 send a generator to +i and -i.
  EXPECT_LT(std::abs(at_g[0] * at_g[1] - cplx(1, 0)), 1e-9);
  EXPECT_LT(std::abs(at_g[0] + at_g[1]), 1e-9);
  EXPECT_LT(std::abs(std::abs(at_g[0].imag()) - 1.0), 1e-9);
}

TEST(Induce, KleinIsTheTwistedRegularConstituent) {
  KleinSetup k = klein();
  const FiniteGroupTable& g = *k.alpha.group();
  Decomposition reg = decompose(twisted_regular(k.alpha));
  ASSERT_EQ(reg.irreps.size(), 1u);
  EXPECT_EQ(reg.irreps[0].dim, 2u);
  EXPECT_EQ(reg.irreps[0].multiplicity, 2u);
  EXPECT_EQ(reg.commutant_dim, 4u);
  for (Elem x = 0; x < 4; ++x) {
    if (x == g.identity()) continue;
    for (const auto& psi : alpha_characters(k.alpha, cyclic(g, x))) {
      ProjRep rho = induce(k.alpha, psi);
      for (Elem y = 0; y < 4; ++y) EXPECT_LT(std::abs(rho.trace(y) - reg.irreps[0].character[y]), 1e-9);
    }
  }
}

TEST(Induce, RejectsIncompatiblePsi) {
  KleinSetup k = klein();
  const FiniteGroupTable& g = *k.alpha.group();
  Subset H = cyclic(g, non_identity(g));
  auto psis = alpha_characters(k.alpha, H);
  ASSERT_FALSE(psis.empty());
  SubgroupChar bad = psis[0];
  bad = SubgroupChar{bad.H, bad.N * 3, {}};
  for (std::size_t i = 0; i < H.size(); ++i) bad.exps.push_back((psis[0].exps[i] * 3 + (H[i] == g.identity() ? 0 : 1)) % bad.N);
  EXPECT_THROW(induce(k.alpha, bad), InvalidInput);
}

TEST(Induce, DimensionIsIndexOnCorpus) {
  for (const auto& cg : corpus_groups(12)) {
    const FiniteGroupTable& t = *cg.table;
    TableCocycle triv = TableCocycle::trivial(cg.table);
    for (Elem x = 0; x < t.order(); ++x) {
      Subset H = cyclic(t, x);
      for (const auto& psi : alpha_characters(triv, H)) {
        ProjRep rho = induce(triv, psi);
        EXPECT_EQ(rho.dim() * H.size(), t.order());
        EXPECT_TRUE(check_projrep(rho).ok) << cg.name;
      }
    }
  }
}

TEST(TwistedRegular, Basics) {
  TablePtr z2 = table("fab:[2]");
  ProjRep r = twisted_regular(TableCocycle::trivial(z2));
  Eigen::MatrixXcd flip = r.matrix(non_identity(*z2));
  EXPECT_LT(std::abs(flip(0, 1) - cplx(1)) + std::abs(flip(1, 0) - cplx(1)) + std::abs(flip(0, 0)), 1e-12);
  TablePtr big = parse_group_spec("fab:[2,2,2,2,2,2,2]").instantiate(128);
  EXPECT_THROW(twisted_regular(TableCocycle::trivial(big)), CapExceeded);
}

TEST(Decompose, RegularRepresentations) {
  Decomposition z3 = decompose(twisted_regular(TableCocycle::trivial(table("fab:[3]"))));
  ASSERT_EQ(z3.irreps.size(), 3u);
  for (const auto& c : z3.irreps) EXPECT_EQ(c.dim, 1u);

  TablePtr d8 = table("mc:4,2,3");
  Decomposition dd = decompose(twisted_regular(TableCocycle::trivial(d8)));
  std::vector<std::size_t> dims;
  for (const auto& c : dd.irreps) {
    dims.push_back(c.dim);
    EXPECT_EQ(c.multiplicity, c.dim);
  }
  EXPECT_EQ(dims, (std::vector<std::size_t>{1, 1, 1, 1, 2}));
  EXPECT_EQ(dims.size(), class_count(*d8));
  EXPECT_EQ(dd.seed, kDefaultSeed);
  EXPECT_LT(dd.residual, 1e-9);
}

TEST(Decompose, SameSeedSameResult) {
  TablePtr q8 = table("dic:2");
  ProjRep reg = twisted_regular(TableCocycle::trivial(q8));
  Decomposition a = decompose(reg, 7), b = decompose(reg, 7);
  ASSERT_EQ(a.irreps.size(), b.irreps.size());
  for (std::size_t i = 0; i < a.irreps.size(); ++i) EXPECT_EQ(a.irreps[i].basis, b.irreps[i].basis);
}

TEST(CountIrr, Examples) {
  IrrCount z5 = count_irr_alpha(TableCocycle::trivial(table("fab:[5]")));
  EXPECT_EQ(z5.count, 5u);
  EXPECT_EQ(z5.dims, std::vector<std::size_t>(5, 1));

  KleinSetup k = klein();
  IrrCount kl = count_irr_alpha(k.alpha);
  EXPECT_EQ(kl.count, 1u);
  EXPECT_EQ(kl.dims, std::vector<std::size_t>{2});

  RepGroup r = build_repgroup(table("fab:[2,4]"));
  ASSERT_EQ(r.a_order(), 2u);
  IrrCount z24 = count_irr_alpha(transgression(r.extension(), r.character({1})));
  EXPECT_EQ(z24.dims, (std::vector<std::size_t>{2, 2}));
}

TEST(CountIrr, CorpusAgreesWithCentralCharactersOfTheCover) {
  for (const auto& cg : corpus_groups(16)) {
    RepGroup r = build_repgroup(cg.table);
    if (r.order() > 256) continue;
    CentralExtensionData ext = r.extension();
    std::size_t total = 0;
    for (std::size_t a = 0; a < r.a_order(); ++a) {
      AChar chi = r.character(r.a_coords(a));
      IrrCount c = count_irr_alpha(transgression(ext, chi));
      IrrCount d = count_irr_central_character(ext, chi);
      EXPECT_EQ(c.dims, d.dims) << cg.name << " char " << a;
      total += c.count;
      if (a == 0) EXPECT_EQ(c.count, class_count(*cg.table)) << cg.name;
    }
    // Irr(G~) is the disjoint union over the classes of Irr^alpha(G).
    EXPECT_EQ(total, class_count(*ext.total)) << cg.name;
  }
}

TEST(Lift, TrivialIsPullback) {
  RepGroup r = build_repgroup(table("fab:[2,2]"));
  CentralExtensionData ext = r.extension();
  AChar triv = r.character({0});
  ProjRep reg = twisted_regular(transgression(ext, triv));
  ProjRep up = lift(reg, ext, triv);
  EXPECT_TRUE(check_projrep(up).ok);
  for (Elem x = 0; x < ext.total->order(); ++x) EXPECT_TRUE(up.monomial(x) == reg.monomial(ext.projection[x]));
}

TEST(Lift, KleinIrrepBecomesIrrepOfTheCover) {
  KleinSetup k = klein();
  const FiniteGroupTable& g = *k.alpha.group();
  ProjRep rho = induce(k.alpha, alpha_characters(k.alpha, cyclic(g, non_identity(g)))[0]);
  ProjRep up = lift(rho, k.ext, k.chi);
  EXPECT_EQ(up.dim(), 2u);
  RepCheck c = check_projrep(up);
  EXPECT_TRUE(c.ok && c.exact) << c.witness;
  EXPECT_EQ(commutant_dimension(up), commutant_dimension(rho));

  Decomposition reg = decompose(twisted_regular(TableCocycle::trivial(k.ext.total)));
  bool found = false;
  for (const auto& irr : reg.irreps) {
    if (irr.dim != 2) continue;
    bool same = true;
    for (Elem x = 0; x < 8; ++x) same = same && std::abs(irr.character[x] - up.trace(x)) < 1e-9;
    found = found || same;
  }
  EXPECT_TRUE(found);

  Descended back = descend(up, k.ext);
  EXPECT_EQ(back.chi.values, k.chi.values);
  for (Elem x = 0; x < 4; ++x) EXPECT_TRUE(back.rho.monomial(x) == rho.monomial(x));
  EXPECT_TRUE(back.rho.cocycle().same_values(k.alpha));
}

TEST(Lift, RejectsCohomologousButDifferentCocycle) {
  KleinSetup k = klein();
  Cochain1 mu{k.alpha.group(), 4, {0, 1, 2, 3}};
  mu.mu[k.alpha.group()->identity()] = 0;
  TableCocycle other = k.alpha * coboundary(mu);
  ASSERT_TRUE(cohomologous(other, k.alpha));
  ProjRep rho = twisted_regular(other);
  EXPECT_THROW(lift(rho, k.ext, k.chi), InvalidInput);
}

TEST(Descend, PullbackAndRegular) {
  KleinSetup k = klein();
  ProjRep reg = twisted_regular(TableCocycle::trivial(k.ext.total));
  EXPECT_THROW(descend(reg, k.ext), InvalidInput);

  AChar triv = k.r.character({0});
  ProjRep base = twisted_regular(TableCocycle::trivial(k.ext.quotient));
  Descended d = descend(lift(base, k.ext, triv), k.ext);
  EXPECT_EQ(d.chi.values, triv.values);
  for (Elem x = 0; x < 4; ++x) EXPECT_TRUE(d.rho.monomial(x) == base.monomial(x));
}

TEST(Descend, LiftRoundTripOnCorpus) {
  for (const auto& cg : corpus_groups(12)) {
    RepGroup r = build_repgroup(cg.table);
    if (r.a_order() == 1 || r.order() > 128) continue;
    CentralExtensionData ext = r.extension();
    AChar chi = r.character(r.a_coords(r.a_order() - 1));
    ProjRep rho = twisted_regular(transgression(ext, chi));
    ProjRep up = lift(rho, ext, chi);
    ASSERT_TRUE(check_projrep(up).ok) << cg.name;
    Descended d = descend(up, ext);
    for (Elem x = 0; x < cg.table->order(); ++x) EXPECT_TRUE(d.rho.monomial(x) == rho.monomial(x)) << cg.name;
    // Irreducibility is preserved by lifting.
    for (const auto& irr : decompose(rho).irreps) {
      ProjRep piece = restrict_to_subspace(rho, irr.basis);
      EXPECT_EQ(commutant_dimension(lift(piece, ext, chi)), 1u) << cg.name;
    }
  }
}

TEST(Correspondence, Examples) {
  KleinSetup k = klein();
  const FiniteGroupTable& g = *k.alpha.group();
  // H = G has no alpha-character when alpha is nontrivial; use the trivial class.
  AChar triv = k.r.character({0});
  Subset all{0, 1, 2, 3};
  auto whole = alpha_characters(transgression(k.ext, triv), all);
  ASSERT_EQ(whole.size(), 4u);
  Correspondence c1 = monomial_correspondence(whole[1], k.ext, triv);
  EXPECT_EQ(c1.T.dim, 1u);
  EXPECT_TRUE(c1.intertwines);

  Subset H = cyclic(g, non_identity(g));
  for (const auto& psi : alpha_characters(k.alpha, H)) {
    Correspondence c = monomial_correspondence(psi, k.ext, k.chi);
    EXPECT_EQ(c.T.dim, 2u);
    EXPECT_TRUE(c.intertwines);
    EXPECT_EQ(c.checked, 8u);
    EXPECT_TRUE(check_projrep(c.induced_tilde).ok);
  }

  Correspondence reg = monomial_correspondence(trivial_char({g.identity()}), k.ext, k.r.character({0}));
  EXPECT_EQ(reg.induced.dim(), 4u);
  EXPECT_EQ(reg.induced_tilde.dim(), 4u);
  EXPECT_TRUE(reg.intertwines);
}

TEST(Correspondence, IntertwinesExactlyOnCorpus) {
  std::size_t cases = 0;
  for (const auto& cg : corpus_groups(12)) {
    RepGroup r = build_repgroup(cg.table);
    if (r.a_order() == 1 || r.order() > 128) continue;
    CentralExtensionData ext = r.extension();
    const FiniteGroupTable& t = *cg.table;
    for (std::size_t a = 1; a < r.a_order(); ++a) {
      AChar chi = r.character(r.a_coords(a));
      TableCocycle alpha = transgression(ext, chi);
      for (Elem x = 0; x < t.order(); ++x)
        for (const auto& psi : alpha_characters(alpha, cyclic(t, x))) {
          Correspondence c = monomial_correspondence(psi, ext, chi);
          EXPECT_TRUE(c.intertwines) << cg.name;
          EXPECT_EQ(c.checked, ext.total->order());
          ++cases;
          // Weight spaces match on both sides.
          for (Elem y = 0; y < t.order(); ++y)
            for (const auto& phi : alpha_characters(alpha, cyclic(t, y))) {
              const auto lhs = finite_weight_space(c.induced, phi).cols();
              SubgroupChar phit;
              std::vector<char> in(t.order(), 0);
              for (Elem h : phi.H) in[h] = 1;
              for (Elem z = 0; z < ext.total->order(); ++z)
                if (in[ext.projection[z]]) phit.H.push_back(z);
              phit.N = lcm64(chi.N, phi.N);
              for (Elem z : phit.H) {
                Elem az = ext.total->mul(z, ext.total->inv(ext.section[ext.projection[z]]));
                phit.exps.push_back((chi.values[ext.position_in_a(az)] * (phit.N / chi.N) +
                                     phi.at(ext.projection[z]) * (phit.N / phi.N)) % phit.N);
              }
              EXPECT_EQ(lhs, finite_weight_space(c.lifted, phit).cols()) << cg.name;
            }
        }
    }
  }
  EXPECT_GT(cases, 20u);
}

TEST(WeightSpace, Examples) {
  KleinSetup k = klein();
  const FiniteGroupTable& g = *k.alpha.group();
  Subset H = cyclic(g, non_identity(g));
  auto psis = alpha_characters(k.alpha, H);
  ProjRep rho = induce(k.alpha, psis[0]);
  EXPECT_EQ(finite_weight_space(rho, trivial_char({g.identity()})).cols(), 2);
  EXPECT_EQ(finite_weight_space(rho, psis[0]).cols(), 1);
  EXPECT_EQ(finite_weight_space(rho, psis[1]).cols(), 1);

  ProjRep rho1 = induce(k.alpha, psis[1]);
  EXPECT_EQ(finite_weight_space(rho1, psis[0]).cols(), 1);

  // A one-dimensional rep has no vector of the wrong weight.
  TablePtr z2 = table("fab:[2]");
  TableCocycle t2 = TableCocycle::trivial(z2);
  auto lin = alpha_characters(t2, {0, 1});
  ProjRep sign = induce(t2, lin[1]);
  EXPECT_EQ(finite_weight_space(sign, lin[0]).cols(), 0);
  EXPECT_EQ(finite_weight_space(sign, lin[1]).cols(), 1);
}

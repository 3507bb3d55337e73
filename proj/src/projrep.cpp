#include "schur/projrep.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace schur {

cplx root_of_unity(u64 N, u64 e) {
  if (N == 0) throw InvalidInput("root_of_unity: modulus 0");
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(e % N) / static_cast<double>(N));
}

// ===========================================================================
// Monomial matrices

MonomialMatrix MonomialMatrix::identity(std::size_t dim, u64 N) {
  MonomialMatrix m;
  m.dim = dim;
  m.N = N;
  m.perm.resize(dim);
  for (std::size_t c = 0; c < dim; ++c) m.perm[c] = c;
  m.exps.assign(dim, 0);
  return m;
}

void MonomialMatrix::validate() const {
  if (N == 0) throw InvalidInput("monomial matrix: modulus 0");
  if (perm.size() != dim || exps.size() != dim) throw InvalidInput("monomial matrix: perm/exps length differs from dim");
  std::vector<char> seen(dim, 0);
  for (std::size_t c = 0; c < dim; ++c) {
    if (perm[c] >= dim || seen[perm[c]]) throw InvalidInput("monomial matrix: perm is not a permutation");
    seen[perm[c]] = 1;
    if (exps[c] >= N) throw InvalidInput("monomial matrix: exponent not reduced mod N");
  }
}

MonomialMatrix MonomialMatrix::over(u64 L) const {
  if (L % N != 0) throw InvalidInput("monomial matrix: new modulus is not a multiple of N");
  MonomialMatrix m = *this;
  m.N = L;
  for (auto& e : m.exps) e *= L / N;
  return m;
}

MonomialMatrix MonomialMatrix::operator*(const MonomialMatrix& b) const {
  if (dim != b.dim) throw InvalidInput("monomial matrix: dimension mismatch");
  const u64 L = lcm64(N, b.N);
  const MonomialMatrix x = over(L), y = b.over(L);
  MonomialMatrix m;
  m.dim = dim;
  m.N = L;
  m.perm.resize(dim);
  m.exps.resize(dim);
  for (std::size_t c = 0; c < dim; ++c) {
    m.perm[c] = x.perm[y.perm[c]];
    m.exps[c] = (x.exps[y.perm[c]] + y.exps[c]) % L;
  }
  return m;
}

MonomialMatrix MonomialMatrix::scaled(u64 M, u64 e) const {
  const u64 L = lcm64(N, M);
  MonomialMatrix m = over(L);
  for (auto& x : m.exps) x = (x + (e % M) * (L / M)) % L;
  return m;
}

MonomialMatrix MonomialMatrix::inverse() const {
  MonomialMatrix m;
  m.dim = dim;
  m.N = N;
  m.perm.resize(dim);
  m.exps.resize(dim);
  for (std::size_t c = 0; c < dim; ++c) {
    m.perm[perm[c]] = c;
    m.exps[perm[c]] = (N - exps[c]) % N;
  }
  return m;
}

bool MonomialMatrix::operator==(const MonomialMatrix& b) const {
  if (dim != b.dim || perm != b.perm) return false;
  const u64 L = lcm64(N, b.N);
  return over(L).exps == b.over(L).exps;
}

Eigen::MatrixXcd MonomialMatrix::dense() const {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::size_t c = 0; c < dim; ++c)
    m(static_cast<Eigen::Index>(perm[c]), static_cast<Eigen::Index>(c)) = root_of_unity(N, exps[c]);
  return m;
}

Eigen::MatrixXcd MonomialMatrix::apply(const Eigen::MatrixXcd& b) const {
  if (static_cast<std::size_t>(b.rows()) != dim) throw InvalidInput("monomial matrix: apply dimension mismatch");
  Eigen::MatrixXcd out(b.rows(), b.cols());
  for (std::size_t c = 0; c < dim; ++c)
    out.row(static_cast<Eigen::Index>(perm[c])) = root_of_unity(N, exps[c]) * b.row(static_cast<Eigen::Index>(c));
  return out;
}

// ===========================================================================
// Representations

ProjRep::ProjRep(TablePtr group, TableCocycle alpha, std::size_t dim)
    : group_(std::move(group)), alpha_(std::move(alpha)), dim_(dim) {
  if (alpha_.group()->order() != group_->order()) throw InvalidInput("representation: cocycle lives on another group");
}

ProjRep ProjRep::from_monomial(TablePtr group, TableCocycle alpha, std::vector<MonomialMatrix> mats) {
  if (mats.size() != group->order()) throw InvalidInput("representation: need one matrix per group element");
  ProjRep r(std::move(group), std::move(alpha), mats.empty() ? 0 : mats[0].dim);
  for (const auto& m : mats) {
    m.validate();
    if (m.dim != r.dim_) throw InvalidInput("representation: matrices of different dimensions");
  }
  r.mono_ = std::move(mats);
  return r;
}

ProjRep ProjRep::from_dense(TablePtr group, TableCocycle alpha, std::vector<Eigen::MatrixXcd> mats) {
  if (mats.size() != group->order()) throw InvalidInput("representation: need one matrix per group element");
  ProjRep r(std::move(group), std::move(alpha), mats.empty() ? 0 : static_cast<std::size_t>(mats[0].rows()));
  for (const auto& m : mats)
    if (static_cast<std::size_t>(m.rows()) != r.dim_ || static_cast<std::size_t>(m.cols()) != r.dim_)
      throw InvalidInput("representation: matrices must be square of one dimension");
  r.dense_ = std::move(mats);
  return r;
}

Eigen::MatrixXcd ProjRep::matrix(Elem g) const { return is_monomial() ? mono_.at(g).dense() : dense_.at(g); }

cplx ProjRep::trace(Elem g) const {
  if (!is_monomial()) return dense_.at(g).trace();
  const MonomialMatrix& m = mono_.at(g);
  cplx s = 0;
  for (std::size_t c = 0; c < m.dim; ++c)
    if (m.perm[c] == c) s += root_of_unity(m.N, m.exps[c]);
  return s;
}

namespace {

// rho(g) * B without forming a dense monomial matrix.
Eigen::MatrixXcd act(const ProjRep& rho, Elem g, const Eigen::MatrixXcd& B) {
  return rho.is_monomial() ? rho.monomial(g).apply(B) : Eigen::MatrixXcd(rho.matrix(g) * B);
}

std::string pair_label(const FiniteGroupTable& t, Elem x, Elem y) { return "(" + t.label(x) + ", " + t.label(y) + ")"; }

}  // namespace

RepCheck check_projrep(const ProjRep& rho, std::size_t samples, u64 seed) {
  RepCheck res;
  res.exact = rho.is_monomial();
  const FiniteGroupTable& t = *rho.group();
  const TableCocycle& a = rho.cocycle();
  const Elem e = t.identity();

  auto test = [&](Elem x, Elem y) {
    ++res.checked;
    if (rho.is_monomial()) {
      if (rho.monomial(x) * rho.monomial(y) == rho.monomial(t.mul(x, y)).scaled(a.modulus(), a.at(x, y))) return true;
      res.ok = false;
      res.witness = "rho(x)rho(y) != alpha(x,y)rho(xy) at " + pair_label(t, x, y);
      return false;
    }
    Eigen::MatrixXcd d = rho.matrix(x) * rho.matrix(y) - root_of_unity(a.modulus(), a.at(x, y)) * rho.matrix(t.mul(x, y));
    const double r = d.cwiseAbs().maxCoeff();
    res.max_residual = std::max(res.max_residual, r);
    if (r <= kRepTolerance) return true;
    res.ok = false;
    res.witness = "rho(x)rho(y) - alpha(x,y)rho(xy) has entry of size " + std::to_string(r) + " at " + pair_label(t, x, y);
    return false;
  };

  if (rho.dim() == 0) return res;
  // rho(1) is the scalar alpha(1,1); for normalized alpha the identity.
  if (rho.is_monomial()) {
    if (!(rho.monomial(e) == MonomialMatrix::identity(rho.dim()).scaled(a.modulus(), a.at(e, e)))) {
      res.ok = false;
      res.witness = "rho(1) is not alpha(1,1) times the identity";
      return res;
    }
  } else {
    Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(static_cast<Eigen::Index>(rho.dim()), static_cast<Eigen::Index>(rho.dim()));
    double r = (rho.matrix(e) - root_of_unity(a.modulus(), a.at(e, e)) * id).cwiseAbs().maxCoeff();
    res.max_residual = r;
    if (r > kRepTolerance) {
      res.ok = false;
      res.witness = "rho(1) is not alpha(1,1) times the identity";
      return res;
    }
  }

  const std::size_t n = t.order();
  if (n <= kExhaustiveRepCheck) {
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y)
        if (!test(x, y)) return res;
  } else {
    Rng rng(seed);
    for (std::size_t s = 0; s < samples; ++s)
      if (!test(static_cast<Elem>(rng.index(n)), static_cast<Elem>(rng.index(n)))) return res;
  }
  return res;
}

// ===========================================================================
// One-dimensional representations of subgroups

std::size_t SubgroupChar::position(Elem h) const {
  auto it = std::lower_bound(H.begin(), H.end(), h);
  if (it == H.end() || *it != h) throw InvalidInput("subgroup character evaluated outside H");
  return static_cast<std::size_t>(it - H.begin());
}

CocycleCheck check_subgroup_char(const TableCocycle& alpha, const SubgroupChar& psi) {
  const FiniteGroupTable& t = *alpha.group();
  if (!std::is_sorted(psi.H.begin(), psi.H.end()) || !is_subgroup(t, psi.H))
    throw InvalidInput("subgroup character: H is not a sorted subgroup");
  if (psi.exps.size() != psi.H.size()) throw InvalidInput("subgroup character: one value per element of H is required");
  const u64 L = lcm64(alpha.modulus(), psi.N);
  const u64 fa = L / alpha.modulus(), fp = L / psi.N;
  CocycleCheck res;
  for (std::size_t i = 0; i < psi.H.size(); ++i)
    for (std::size_t j = 0; j < psi.H.size(); ++j) {
      const Elem x = psi.H[i], y = psi.H[j];
      ++res.checked;
      const u64 lhs = (psi.exps[i] + psi.exps[j]) * fp % L;
      const u64 rhs = (alpha.at(x, y) * fa + psi.at(t.mul(x, y)) * fp) % L;
      if (lhs != rhs) {
        res.ok = false;
        res.witness = "psi(h1)psi(h2) != alpha(h1,h2)psi(h1h2) at " + pair_label(t, x, y);
        return res;
      }
    }
  return res;
}

namespace {

// Table of H / D for a normal subgroup D, cosets in order of first occurrence.
struct Quotient {
  FiniteGroupTable table;
  std::vector<std::size_t> of;  // element of H -> coset
};

Quotient quotient_by(const FiniteGroupTable& h, const Subset& d) {
  RightCosets rc = right_cosets(h, d);
  const std::size_t k = rc.reps.size();
  std::vector<Elem> mult(k * k);
  for (std::size_t u = 0; u < k; ++u)
    for (std::size_t v = 0; v < k; ++v) mult[u * k + v] = static_cast<Elem>(rc.of[h.mul(rc.reps[u], rc.reps[v])]);
  return {FiniteGroupTable(k, std::move(mult)), rc.of};
}

}  // namespace

std::vector<SubgroupChar> alpha_characters(const TableCocycle& alpha, const Subset& H) {
  RestrictedCocycle rc = restriction(alpha, H);
  CoboundaryResult cb = is_coboundary(rc.cocycle);
  if (!cb.trivial) return {};
  // alpha|_H = delta(mu) means psi0 = mu^{-1} satisfies psi0(x)psi0(y) = alpha(x,y)psi0(xy).
  const Cochain1& mu = *cb.witness;
  const std::size_t k = rc.sub.embed.size();

  Quotient q = quotient_by(*rc.sub.table, derived_subgroup(*rc.sub.table));
  Subset all(q.table.order());
  for (Elem x = 0; x < all.size(); ++x) all[x] = x;
  std::vector<AChar> lin = characters_of(q.table, all);

  std::vector<SubgroupChar> out;
  for (const AChar& l : lin) {
    SubgroupChar psi;
    psi.H = rc.sub.embed;
    psi.N = lcm64(mu.N, l.N);
    psi.exps.resize(k);
    for (std::size_t i = 0; i < k; ++i) {
      const u64 m0 = (mu.N - mu.mu[i] % mu.N) % mu.N;
      psi.exps[i] = (m0 * (psi.N / mu.N) + l.values[q.of[i]] * (psi.N / l.N)) % psi.N;
    }
    CocycleCheck ok = check_subgroup_char(alpha, psi);
    if (!ok.ok) throw CheckFailed("alpha_characters: constructed character fails: " + ok.witness);
    out.push_back(std::move(psi));
  }
  return out;
}

// ===========================================================================
// Induction and the twisted regular representation

ProjRep induce(const TableCocycle& alpha, const SubgroupChar& psi) {
  const TablePtr& G = alpha.group();
  const FiniteGroupTable& t = *G;
  CocycleCheck ok = check_subgroup_char(alpha, psi);
  if (!ok.ok) throw InvalidInput("induce: psi is not an alpha|_H-representation: " + ok.witness);
  RightCosets rc = right_cosets(t, psi.H);
  const std::size_t n = rc.reps.size();
  const u64 L = lcm64(alpha.modulus(), psi.N);
  const u64 fa = L / alpha.modulus(), fp = L / psi.N;

  std::vector<MonomialMatrix> mats(t.order());
  for (Elem g = 0; g < t.order(); ++g) {
    MonomialMatrix& m = mats[g];
    m.dim = n;
    m.N = L;
    m.perm.resize(n);
    m.exps.resize(n);
    const Elem ginv = t.inv(g);
    for (std::size_t u = 0; u < n; ++u) {
      const Elem xu = rc.reps[u];
      const std::size_t v = rc.of[t.mul(xu, ginv)];  // x_v g lies in H x_u
      const Elem xv = rc.reps[v];
      const Elem h = t.mul(t.mul(xv, g), t.inv(xu));
      m.perm[u] = v;
      m.exps[u] = (alpha.at(xv, g) * fa + (alpha.modulus() - alpha.at(h, xu)) % alpha.modulus() * fa + psi.at(h) * fp) % L;
    }
  }
  ProjRep r = ProjRep::from_monomial(G, alpha, std::move(mats));
  r.provenance = "induced from a subgroup of order " + std::to_string(psi.H.size()) + ", index " + std::to_string(n);
  return r;
}

ProjRep twisted_regular(const TableCocycle& alpha, std::size_t cap) {
  const TablePtr& G = alpha.group();
  const std::size_t n = G->order();
  if (n > cap) throw CapExceeded("twisted_regular: |G| = " + std::to_string(n) + " exceeds the cap " + std::to_string(cap));
  std::vector<MonomialMatrix> mats(n);
  for (Elem g = 0; g < n; ++g) {
    MonomialMatrix& m = mats[g];
    m.dim = n;
    m.N = alpha.modulus();
    m.perm.resize(n);
    m.exps.resize(n);
    for (Elem h = 0; h < n; ++h) {
      m.perm[h] = G->mul(g, h);
      m.exps[h] = alpha.at(g, h);
    }
  }
  ProjRep r = ProjRep::from_monomial(G, alpha, std::move(mats));
  r.provenance = "twisted regular";
  return r;
}

// ===========================================================================
// Lifting and descending along a central extension

namespace {

// a_x with x = a_x s(pi(x)).
Elem a_part(const CentralExtensionData& ext, Elem x) {
  return ext.total->mul(x, ext.total->inv(ext.section[ext.projection[x]]));
}

u64 exp_a(const CentralExtensionData& ext) {
  u64 e = 1;
  for (Elem a : ext.central) e = lcm64(e, ext.total->element_order(a));
  return e;
}

}  // namespace

ProjRep lift(const ProjRep& rho, const CentralExtensionData& ext, const AChar& chi) {
  if (rho.group()->order() != ext.quotient->order()) throw InvalidInput("lift: representation is not on the quotient group");
  if (chi.values.size() != ext.central.size()) throw InvalidInput("lift: character has the wrong number of values");
  const TableCocycle tra = transgression(ext, chi);
  const TableCocycle& a = rho.cocycle();
  const FiniteGroupTable& q = *ext.quotient;
  for (Elem x = 0; x < q.order(); ++x)
    for (Elem y = 0; y < q.order(); ++y)
      if (!(RootExp(a.modulus(), static_cast<i64>(a.at(x, y))) == RootExp(tra.modulus(), static_cast<i64>(tra.at(x, y)))))
        throw InvalidInput("lift: cocycle differs from the transgression of chi at " + pair_label(q, x, y));

  const FiniteGroupTable& t = *ext.total;
  TableCocycle triv = TableCocycle::trivial(ext.total);
  ProjRep out = [&] {
    if (rho.is_monomial()) {
      std::vector<MonomialMatrix> mats(t.order());
      for (Elem x = 0; x < t.order(); ++x)
        mats[x] = rho.monomial(ext.projection[x]).scaled(chi.N, chi.values[ext.position_in_a(a_part(ext, x))]);
      return ProjRep::from_monomial(ext.total, triv, std::move(mats));
    }
    std::vector<Eigen::MatrixXcd> mats(t.order());
    for (Elem x = 0; x < t.order(); ++x)
      mats[x] = root_of_unity(chi.N, chi.values[ext.position_in_a(a_part(ext, x))]) * rho.matrix(ext.projection[x]);
    return ProjRep::from_dense(ext.total, triv, std::move(mats));
  }();
  out.provenance = "lift of " + (rho.provenance.empty() ? std::string("a projective representation") : rho.provenance);
  return out;
}

Descended descend(const ProjRep& rho_tilde, const CentralExtensionData& ext) {
  const FiniteGroupTable& t = *ext.total;
  if (rho_tilde.group()->order() != t.order()) throw InvalidInput("descend: representation is not on the total group");
  for (u64 v : rho_tilde.cocycle().exps())
    if (v != 0) throw InvalidInput("descend: representation of the total group must be ordinary");
  const u64 E = exp_a(ext);
  AChar chi;
  chi.N = E;
  for (Elem a : ext.central) {
    std::optional<u64> value;
    if (rho_tilde.is_monomial()) {
      const MonomialMatrix& m = rho_tilde.monomial(a);
      bool scalar = true;
      for (std::size_t c = 0; c < m.dim && scalar; ++c) scalar = m.perm[c] == c && m.exps[c] == m.exps[0];
      if (scalar && m.dim > 0 && (m.exps[0] * E) % m.N == 0) value = m.exps[0] * E / m.N;
    } else {
      const Eigen::MatrixXcd m = rho_tilde.matrix(a);
      const cplx s = m.rows() > 0 ? m(0, 0) : cplx(1);
      const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(m.rows(), m.cols());
      if ((m - s * id).cwiseAbs().maxCoeff() <= kRepTolerance)
        for (u64 k = 0; k < E; ++k)
          if (std::abs(s - root_of_unity(E, k)) <= 1e-6) value = k;
    }
    if (!value) throw InvalidInput("descend: the central element " + t.label(a) + " does not act by a scalar");
    chi.values.push_back(*value);
  }

  TableCocycle alpha = transgression(ext, chi);
  const FiniteGroupTable& q = *ext.quotient;
  ProjRep rho = [&] {
    if (rho_tilde.is_monomial()) {
      std::vector<MonomialMatrix> mats(q.order());
      for (Elem g = 0; g < q.order(); ++g) mats[g] = rho_tilde.monomial(ext.section[g]);
      return ProjRep::from_monomial(ext.quotient, alpha, std::move(mats));
    }
    std::vector<Eigen::MatrixXcd> mats(q.order());
    for (Elem g = 0; g < q.order(); ++g) mats[g] = rho_tilde.matrix(ext.section[g]);
    return ProjRep::from_dense(ext.quotient, alpha, std::move(mats));
  }();
  rho.provenance = "descended along the section";
  return {std::move(rho), std::move(chi)};
}

Correspondence monomial_correspondence(const SubgroupChar& psi, const CentralExtensionData& ext, const AChar& chi) {
  const FiniteGroupTable& q = *ext.quotient;
  const FiniteGroupTable& t = *ext.total;
  const TableCocycle alpha = transgression(ext, chi);
  ProjRep rho = induce(alpha, psi);
  ProjRep lifted = lift(rho, ext, chi);

  // psi~(a s(h)) = chi(a) psi(h) on the preimage of H.
  SubgroupChar pt;
  std::vector<char> in_h(q.order(), 0);
  for (Elem h : psi.H) in_h[h] = 1;
  for (Elem x = 0; x < t.order(); ++x)
    if (in_h[ext.projection[x]]) pt.H.push_back(x);
  pt.N = lcm64(chi.N, psi.N);
  for (Elem x : pt.H)
    pt.exps.push_back((chi.values[ext.position_in_a(a_part(ext, x))] * (pt.N / chi.N) +
                       psi.at(ext.projection[x]) * (pt.N / psi.N)) % pt.N);
  const TableCocycle triv = TableCocycle::trivial(ext.total);
  CocycleCheck hom = check_subgroup_char(triv, pt);
  if (!hom.ok) throw CheckFailed("monomial_correspondence: psi~ is not a character: " + hom.witness);
  ProjRep rho1 = induce(triv, pt);

  // T f_u = f~ with f~(a s(x)) = chi(a) f_u(x), written in the basis of Ind psi~.
  RightCosets cg = right_cosets(q, psi.H);
  RightCosets ct = right_cosets(t, pt.H);
  const std::size_t n = cg.reps.size();
  if (ct.reps.size() != n) throw CheckFailed("monomial_correspondence: coset counts differ");
  const u64 L = lcm64(lcm64(alpha.modulus(), psi.N), chi.N);
  MonomialMatrix T;
  T.dim = n;
  T.N = L;
  T.perm.assign(n, 0);
  T.exps.assign(n, 0);
  for (std::size_t w = 0; w < n; ++w) {
    const Elem y = ct.reps[w];
    const Elem x = ext.projection[y];
    const std::size_t u = cg.of[x];
    const Elem xu = cg.reps[u];
    const Elem h = q.mul(x, q.inv(xu));
    T.perm[u] = w;
    T.exps[u] = (chi.values[ext.position_in_a(a_part(ext, y))] * (L / chi.N) +
                 (alpha.modulus() - alpha.at(h, xu)) % alpha.modulus() * (L / alpha.modulus()) + psi.at(h) * (L / psi.N)) %
                L;
  }
  T.validate();

  Correspondence c{pt, rho, lifted, rho1, T, true, 0};
  for (Elem x = 0; x < t.order(); ++x) {
    ++c.checked;
    if (!(T * lifted.monomial(x) == rho1.monomial(x) * T)) {
      c.intertwines = false;
      break;
    }
  }
  return c;
}

// ===========================================================================
// Weight spaces, restriction, decomposition

Eigen::MatrixXcd finite_weight_space(const ProjRep& rho, const SubgroupChar& psi) {
  CocycleCheck ok = check_subgroup_char(rho.cocycle(), psi);
  if (!ok.ok) throw InvalidInput("finite_weight_space: psi is not an alpha|_H-representation: " + ok.witness);
  const auto d = static_cast<Eigen::Index>(rho.dim());
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(d, d);
  Eigen::MatrixXcd gram = Eigen::MatrixXcd::Zero(d, d);
  for (std::size_t k = 0; k < psi.H.size(); ++k) {
    Eigen::MatrixXcd m = act(rho, psi.H[k], id) - root_of_unity(psi.N, psi.exps[k]) * id;
    gram += m.adjoint() * m;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(gram);
  Eigen::Index k = 0;
  while (k < d && es.eigenvalues()(k) <= kRepTolerance) ++k;
  return es.eigenvectors().leftCols(k);
}

ProjRep restrict_to_subspace(const ProjRep& rho, const Eigen::MatrixXcd& B) {
  if (static_cast<std::size_t>(B.rows()) != rho.dim()) throw InvalidInput("restrict: basis has the wrong number of rows");
  const Eigen::MatrixXcd gram = B.adjoint() * B;
  if ((gram - Eigen::MatrixXcd::Identity(B.cols(), B.cols())).cwiseAbs().maxCoeff() > 1e-9)
    throw InvalidInput("restrict: basis is not orthonormal");
  std::vector<Eigen::MatrixXcd> mats(rho.group()->order());
  for (Elem g = 0; g < mats.size(); ++g) {
    Eigen::MatrixXcd img = act(rho, g, B);
    mats[g] = B.adjoint() * img;
    if ((img - B * mats[g]).cwiseAbs().maxCoeff() > 1e-6)
      throw InvalidInput("restrict: subspace is not invariant under " + rho.group()->label(g));
  }
  ProjRep r = ProjRep::from_dense(rho.group(), rho.cocycle(), std::move(mats));
  r.provenance = "subrepresentation";
  return r;
}

std::size_t commutant_dimension(const ProjRep& rho) {
  double s = 0;
  for (Elem g = 0; g < rho.group()->order(); ++g) s += std::norm(rho.trace(g));
  s /= static_cast<double>(rho.group()->order());
  const double r = std::round(s);
  if (std::abs(s - r) > 1e-6) throw CheckFailed("commutant dimension is not an integer: " + std::to_string(s));
  return static_cast<std::size_t>(r);
}

namespace {

bool is_unitary(const ProjRep& rho) {
  const auto d = static_cast<Eigen::Index>(rho.dim());
  if (rho.is_monomial()) return true;
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(d, d);
  for (Elem g = 0; g < rho.group()->order(); ++g) {
    const Eigen::MatrixXcd m = rho.matrix(g);
    if ((m.adjoint() * m - id).cwiseAbs().maxCoeff() > 1e-9) return false;
  }
  return true;
}

bool same_character(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (std::abs(a[k] - b[k]) > 1e-6) return false;
  return true;
}

// One attempt; nullopt signals an ambiguous split.
std::optional<Decomposition> decompose_once(const ProjRep& rho, u64 seed, std::size_t commutant) {
  const auto d = static_cast<Eigen::Index>(rho.dim());
  const std::size_t n = rho.group()->order();
  Rng rng(seed);
  Eigen::MatrixXcd X(d, d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j) X(i, j) = cplx(rng.normal(), rng.normal());
  X = (X + X.adjoint()).eval();

  // Reynolds projection onto the commutant: (1/|G|) sum rho(g) X rho(g)^*.
  Eigen::MatrixXcd P = Eigen::MatrixXcd::Zero(d, d);
  for (Elem g = 0; g < n; ++g) {
    Eigen::MatrixXcd Y = act(rho, g, X);
    P += act(rho, g, Y.adjoint()).adjoint();
  }
  P /= static_cast<double>(n);
  P = ((P + P.adjoint()) / 2.0).eval();

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(P);
  const Eigen::VectorXd& ev = es.eigenvalues();
  const double scale = std::max(1.0, ev.cwiseAbs().maxCoeff());
  const double tol = kRepTolerance * scale;

  std::vector<std::pair<Eigen::Index, Eigen::Index>> clusters;  // [start, end)
  Eigen::Index start = 0;
  for (Eigen::Index k = 1; k <= d; ++k) {
    if (k < d) {
      const double gap = ev(k) - ev(k - 1);
      if (gap <= tol) continue;
      if (gap < 10 * tol) return std::nullopt;
    }
    clusters.emplace_back(start, k);
    start = k;
  }

  Decomposition out;
  out.seed = seed;
  out.commutant_dim = commutant;
  for (auto [s, e] : clusters) {
    Eigen::MatrixXcd B = es.eigenvectors().middleCols(s, e - s);
    std::vector<cplx> ch(n);
    double norm2 = 0;
    for (Elem g = 0; g < n; ++g) {
      Eigen::MatrixXcd img = act(rho, g, B);
      Eigen::MatrixXcd small = B.adjoint() * img;
      out.residual = std::max(out.residual, (img - B * small).cwiseAbs().maxCoeff());
      ch[g] = small.trace();
      norm2 += std::norm(ch[g]);
    }
    if (std::abs(norm2 / static_cast<double>(n) - 1.0) > 1e-6) return std::nullopt;  // merged constituents
    auto it = std::find_if(out.irreps.begin(), out.irreps.end(),
                           [&](const Constituent& c) { return same_character(c.character, ch); });
    if (it != out.irreps.end()) {
      ++it->multiplicity;
    } else {
      out.irreps.push_back({static_cast<std::size_t>(e - s), 1, std::move(ch), std::move(B)});
    }
  }
  if (out.residual > 1e-6) return std::nullopt;

  std::size_t total = 0, squares = 0;
  for (const auto& c : out.irreps) {
    total += c.dim * c.multiplicity;
    squares += c.multiplicity * c.multiplicity;
  }
  if (total != rho.dim() || squares != commutant) return std::nullopt;
  std::stable_sort(out.irreps.begin(), out.irreps.end(),
                   [](const Constituent& a, const Constituent& b) { return a.dim < b.dim; });
  return out;
}

}  // namespace

Decomposition decompose(const ProjRep& rho, u64 seed) {
  if (rho.dim() > kDecomposeMaxDim)
    throw CapExceeded("decompose: dimension " + std::to_string(rho.dim()) + " exceeds " + std::to_string(kDecomposeMaxDim));
  if (!is_unitary(rho)) throw InvalidInput("decompose: the representation must be unitary");
  if (rho.dim() == 0) return {};
  const std::size_t commutant = commutant_dimension(rho);
  for (int attempt = 0; attempt <= kDecomposeRetries; ++attempt) {
    auto res = decompose_once(rho, seed + static_cast<u64>(attempt), commutant);
    if (res) {
      res->attempts = attempt + 1;
      return *res;
    }
  }
  throw CheckFailed("decompose: eigenvalue clustering stayed ambiguous after " + std::to_string(kDecomposeRetries) +
                    " retries");
}

namespace {

IrrCount count_from_regular(const Decomposition& dec, const std::string& what) {
  IrrCount c;
  for (const auto& irr : dec.irreps) {
    if (irr.multiplicity != irr.dim)
      throw CheckFailed(what + ": an irreducible constituent of dimension " + std::to_string(irr.dim) +
                        " has multiplicity " + std::to_string(irr.multiplicity));
    c.dims.push_back(irr.dim);
  }
  c.count = c.dims.size();
  std::sort(c.dims.begin(), c.dims.end());
  c.decomposition = dec;
  return c;
}

}  // namespace

IrrCount count_irr_alpha(const TableCocycle& alpha, u64 seed) {
  ProjRep reg = twisted_regular(alpha, kDecomposeMaxDim);
  IrrCount c = count_from_regular(decompose(reg, seed), "count_irr_alpha");
  std::size_t s = 0;
  for (auto d : c.dims) s += d * d;
  if (s != alpha.group()->order()) throw CheckFailed("count_irr_alpha: sum of squared dimensions differs from |G|");
  return c;
}

IrrCount count_irr_central_character(const CentralExtensionData& ext, const AChar& chi, u64 seed) {
  const FiniteGroupTable& t = *ext.total;
  const std::size_t na = ext.central.size(), nq = ext.quotient->order();
  Eigen::MatrixXcd B = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(t.order()), static_cast<Eigen::Index>(nq));
  const double w = 1.0 / std::sqrt(static_cast<double>(na));
  for (Elem g = 0; g < nq; ++g)
    for (std::size_t k = 0; k < na; ++k) {
      const Elem x = t.mul(ext.central[k], ext.section[g]);
      B(x, g) = w * std::conj(root_of_unity(chi.N, chi.values[k]));
    }
  ProjRep reg = twisted_regular(TableCocycle::trivial(ext.total), t.order());
  ProjRep part = restrict_to_subspace(reg, B);
  return count_from_regular(decompose(part, seed), "count_irr_central_character");
}

}  // namespace schur

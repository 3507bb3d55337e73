#include "schur/alphafinite.hpp"

#include <algorithm>

namespace schur {

bool mc_is_nilpotent(const BigInt& m, const BigInt& r) {
  (void)MetacyclicDesc(m, 0, r);
  if (m <= 0) throw InvalidInput("mc_is_nilpotent needs m > 0");
  const BigInt s = 1 - r;
  BigInt e = m;
  while (e != 1) {
    const BigInt g = gcd(e, s);
    if (g == 1) return false;
    e /= g;
  }
  return true;
}

bool mc_lower_central_series_terminates(const BigInt& m, const BigInt& r) {
  (void)MetacyclicDesc(m, 0, r);
  if (m <= 0) throw InvalidInput("mc_lower_central_series_terminates needs m > 0");
  // gamma_k is generated by a^{e_k}, e_k = gcd(m, (1-r)^{k-1}).
  const BigInt s = floor_mod(1 - r, m);
  BigInt p = 1 % m, e = gcd(m, p);
  while (true) {
    if (e == m) return true;
    p = (p * s) % m;
    const BigInt next = gcd(m, p);
    if (next == e) return false;
    e = next;
  }
}

namespace {

BigInt multiplicative_order(const BigInt& r, const BigInt& m) {
  if (m == 1) return 1;
  const BigInt base = floor_mod(r, m);
  BigInt x = base;
  for (u64 k = 1; k <= kOrderSearchCap; ++k) {
    if (x == 1) return k;
    x = (x * base) % m;
  }
  throw CapExceeded("order of r mod m exceeds " + std::to_string(kOrderSearchCap));
}

}  // namespace

AbelianByFiniteWitness mc_abelian_by_finite_witness(const BigInt& m, const BigInt& r) {
  if (m <= 0) throw InvalidInput("mc_abelian_by_finite_witness needs m > 0");
  const MetacyclicDesc g(m, 0, r);
  AbelianByFiniteWitness w;
  w.d = multiplicative_order(r, m);
  w.index = w.d;
  w.description = w.d == 1 ? "N = G = <a, b>" : "N = <a, b^" + to_string(w.d) + ">";
  w.commutator_trivial = mc_commutator_power(g, 1, w.d) == 0;

  auto in_n = [&](const MetacyclicElement& x) { return floor_mod(mc_reduce(g, x).j, w.d) == 0; };
  const std::vector<MetacyclicElement> gens{{1, 0}, {0, w.d}};
  const std::vector<MetacyclicElement> conj{{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
  w.normal = true;
  for (const auto& x : gens)
    for (const auto& c : conj) w.normal = w.normal && in_n(mc_mul(g, mc_mul(g, c, x), mc_inv(g, c)));
  return w;
}

AlphaFiniteReport mc_alpha_finite_report(const BigInt& m, const BigInt& n, const BigInt& r, u64 lambda_exp) {
  if (m < 0 || n < 0) throw InvalidInput("metacyclic parameters must be non-negative");
  if (m * n != 0) throw InvalidInput("the alpha-finiteness report is for infinite G(m,n,r): need mn = 0");
  if (m + n == 0) throw InvalidInput("the alpha-finiteness report needs m + n > 0");
  const MetacyclicDesc desc(m, n, r);
  AlphaFiniteReport rep;
  rep.group = "mc:" + to_string(m) + "," + to_string(n) + "," + to_string(r);

  if (m == 0) {
    rep.verdict = kVerdictNotFinite;
    rep.witness_subgroup = "none";
    rep.sufficient_condition_met = false;
    rep.notes.push_back("G(0,n,r) with n > 0 has an infinite dimensional irreducible ordinary representation, so it is "
                        "not alpha-finite for the trivial cocycle and cannot be abelian by finite");
    return rep;
  }

  const MetacyclicCocycle alpha = metacyclic_cocycle(m, r, lambda_exp);
  const AbelianByFiniteWitness w = mc_abelian_by_finite_witness(m, r);
  if (!w.commutator_trivial || !w.normal) throw CheckFailed("abelian-by-finite witness failed its own checks");
  rep.witness_subgroup = w.description;
  rep.index = w.index;

  // N is abelian (Z/m x Z on a, b^d), so the class of alpha on N is
  // determined by the commutator pairing beta(x,y) = alpha(x,y)/alpha(y,x).
  // beta(a, a) = beta(b^d, b^d) = 1, so its order is that of beta(a, b^d).
  const MetacyclicElement a{1, 0}, bd{0, w.d};
  const BigInt t = alpha.t;
  const BigInt beta = floor_mod(BigInt(alpha.eval(a, bd)) - BigInt(alpha.eval(bd, a)), t);
  rep.class_order = t / gcd(t, beta);
  if (t % *rep.class_order != 0) throw CheckFailed("restricted class order does not divide t");

  rep.sufficient_condition_met = true;
  rep.verdict = kVerdictFinite;
  rep.nilpotent = mc_is_nilpotent(m, r);
  rep.paper_equivalence_flag = *rep.nilpotent == rep.sufficient_condition_met;
  rep.notes.push_back("sufficient condition: [G:N] = " + to_string(w.index) + " is finite and the restricted class has order " +
                      to_string(*rep.class_order));
  if (!*rep.paper_equivalence_flag)
    rep.notes.push_back("G is abelian by finite but not nilpotent: no power of (1-r) = " + to_string(1 - r) +
                        " is divisible by m = " + to_string(m));
  return rep;
}

AlphaFiniteReport heisenberg_report(u64 n, u64 lambda_exp, u64 mu_exp, std::size_t samples, u64 seed) {
  if (n == 0) throw InvalidInput("heisenberg_report needs n > 0");
  const Example1Cocycle alpha = example1_cocycle(n, lambda_exp, mu_exp);
  const HeisenbergDesc& g = alpha.group;
  AlphaFiniteReport rep;
  rep.group = "heis:[1];" + std::to_string(n);
  rep.witness_subgroup = "N = (Z/" + std::to_string(n) + " x " + std::to_string(n) + "Z) x Z";

  const BigInt nb(n);
  auto in_n = [&](const HeisElement& x) { return floor_mod(x.b[0], nb) == 0; };
  auto elem = [&](i64 a, i64 b, i64 c) { return heis_reduce(g, HeisElement{BigInt(a), {BigInt(b)}, {BigInt(c)}}); };

  // x -> b mod n is a homomorphism onto Z/n with kernel N; check it and
  // normality on samples, and that (0,k,0), k < n, are distinct cosets.
  Rng rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    HeisElement x = sample_heisenberg(g, rng), y = sample_heisenberg(g, rng);
    if (floor_mod(heis_mul(g, x, y).b[0], nb) != floor_mod(x.b[0] + y.b[0], nb))
      throw CheckFailed("heisenberg_report: b mod n is not multiplicative");
    HeisElement z = y;
    z.b[0] = z.b[0] * nb;
    if (!in_n(heis_mul(g, heis_mul(g, x, z), heis_inv(g, x)))) throw CheckFailed("heisenberg_report: N is not normal");
  }
  for (u64 k = 1; k < n; ++k)
    if (in_n(elem(0, static_cast<i64>(k), 0))) throw CheckFailed("heisenberg_report: coset representatives collide");
  rep.index = nb;

  // N is abelian with generators u = (1,0,0), v = (0,n,0), w = (0,0,1).
  const std::vector<HeisElement> gens{elem(1, 0, 0), elem(0, static_cast<i64>(n), 0), elem(0, 0, 1)};
  for (const auto& x : gens)
    for (const auto& y : gens)
      if (heis_mul(g, x, y) != heis_mul(g, y, x)) throw CheckFailed("heisenberg_report: N is not abelian");
  u64 order = 1;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      const u64 beta = (alpha.eval(gens[i], gens[j]) + n - alpha.eval(gens[j], gens[i])) % n;
      order = lcm64(order, n / static_cast<u64>(gcd64(static_cast<i64>(n), static_cast<i64>(beta))));
    }
  rep.class_order = BigInt(order);
  if (n % order != 0) throw CheckFailed("heisenberg_report: restricted class order does not divide n");

  // The restriction to N is itself a cocycle.
  FamilyCocycle<HeisElement> restricted = alpha.family();
  restricted.name = "restriction to N";
  restricted.sample = [g, nb](Rng& r) {
    HeisElement x = sample_heisenberg(g, r);
    x.b[0] = x.b[0] * nb;
    return heis_reduce(g, std::move(x));
  };
  CocycleCheck cc = is_cocycle(restricted, samples, seed + 1);
  if (!cc.ok) throw CheckFailed("heisenberg_report: restricted cocycle fails: " + cc.witness);

  rep.sufficient_condition_met = true;
  rep.verdict = kVerdictFinite;
  rep.notes.push_back("G/N has order " + std::to_string(n) + "; the restricted class has order " + std::to_string(order) +
                      ", dividing n");
  return rep;
}

// ===========================================================================
// Shift window

namespace {

i64 checked_mul_add(i64 acc, i64 a, i64 b) {
  __int128 v = static_cast<__int128>(acc) + static_cast<__int128>(a) * b;
  if (v > INT64_MAX || v < INT64_MIN) throw CapExceeded("shift window: integer overflow");
  return static_cast<i64>(v);
}

SmallIntMatrix mat_mul(const SmallIntMatrix& x, const SmallIntMatrix& y) {
  const std::size_t k = x.size();
  SmallIntMatrix z(k, std::vector<i64>(k, 0));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t l = 0; l < k; ++l) z[i][j] = checked_mul_add(z[i][j], x[i][l], y[l][j]);
  return z;
}

SmallIntMatrix mat_identity(std::size_t k) {
  SmallIntMatrix z(k, std::vector<i64>(k, 0));
  for (std::size_t i = 0; i < k; ++i) z[i][i] = 1;
  return z;
}

// Inverse of a unimodular integer matrix by Gauss-Jordan over the rationals
// with an exactness check.
SmallIntMatrix unimodular_inverse(const SmallIntMatrix& a) {
  const std::size_t k = a.size();
  std::vector<std::vector<BigInt>> m(k, std::vector<BigInt>(2 * k, 0));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) m[i][j] = a[i][j];
    m[i][k + i] = 1;
  }
  // Integer row reduction (Euclid on columns) keeps everything integral.
  for (std::size_t c = 0; c < k; ++c) {
    for (std::size_t i = c + 1; i < k; ++i)
      while (m[i][c] != 0) {
        const BigInt q = m[c][c] == 0 ? BigInt(0) : BigInt(m[i][c] / m[c][c]);
        for (std::size_t j = 0; j < 2 * k; ++j) m[i][j] -= q * m[c][j];
        std::swap(m[i], m[c]);
      }
    if (m[c][c] != 1 && m[c][c] != -1) throw InvalidInput("shift window: phi is not invertible over Z");
    if (m[c][c] == -1)
      for (auto& v : m[c]) v = -v;
  }
  for (std::size_t c = k; c-- > 0;)
    for (std::size_t i = 0; i < c; ++i) {
      const BigInt q = m[i][c];
      for (std::size_t j = 0; j < 2 * k; ++j) m[i][j] -= q * m[c][j];
    }
  SmallIntMatrix inv(k, std::vector<i64>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) inv[i][j] = to_i64(m[i][k + j]);
  if (mat_mul(a, inv) != mat_identity(k)) throw CheckFailed("shift window: inverse check failed");
  return inv;
}

std::vector<i64> apply(const SmallIntMatrix& x, const std::vector<i64>& v) {
  std::vector<i64> out(x.size(), 0);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] = checked_mul_add(out[i], x[i][j], v[j]);
  return out;
}

std::string vec_label(const std::vector<i64>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

}  // namespace

bool ShiftWindowReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const ShiftCheck& c) { return c.pass; });
}

ShiftWindowData shift_demo_data() {
  ShiftWindowData d;
  d.phi = {{2, 1}, {1, 1}};
  d.beta_coordinate = 0;
  d.W = 8;
  return d;
}

ShiftWindowReport shift_window_verify(const ShiftWindowData& data) {
  const std::size_t k = data.phi.size();
  if (k == 0) throw InvalidInput("shift window: phi must be a non-empty square matrix");
  for (const auto& row : data.phi)
    if (row.size() != k) throw InvalidInput("shift window: phi must be square");
  if (data.beta_coordinate >= k) throw InvalidInput("shift window: beta coordinate out of range");
  if (data.W < 1) throw InvalidInput("shift window: W must be at least 1");
  if (data.lambda && data.lambda->N == 0) throw InvalidInput("shift window: lambda modulus 0");

  ShiftWindowReport rep;
  const SmallIntMatrix inv = unimodular_inverse(data.phi);
  for (i64 h = -data.W + 1; h < data.W; ++h) rep.indices.push_back(h);

  // beta_h is the `beta_coordinate` row of phi^{-h}.
  std::vector<std::vector<i64>> beta_row;
  for (i64 h : rep.indices) {
    SmallIntMatrix p = mat_identity(k);
    const SmallIntMatrix& step = h >= 0 ? inv : data.phi;
    for (i64 s = 0; s < (h >= 0 ? h : -h); ++s) p = mat_mul(p, step);
    beta_row.push_back(p[data.beta_coordinate]);
  }
  auto beta = [&](std::size_t idx, const std::vector<i64>& c) {
    i64 s = 0;
    for (std::size_t j = 0; j < k; ++j) s = checked_mul_add(s, beta_row[idx][j], c[j]);
    return s;
  };
  // Exponent of lambda: exact integer when lambda is formal, reduced mod N otherwise.
  auto reduce = [&](i64 e) -> i64 { return data.lambda ? mod_floor(e, static_cast<i64>(data.lambda->N)) : e; };

  Rng rng(data.seed);
  std::vector<std::pair<std::vector<i64>, std::vector<i64>>> pairs;
  for (std::size_t s = 0; s < data.samples; ++s) {
    std::vector<i64> c1(k), c2(k);
    for (auto& v : c1) v = rng.uniform(-kSampleBound, kSampleBound);
    for (auto& v : c2) v = rng.uniform(-kSampleBound, kSampleBound);
    pairs.emplace_back(std::move(c1), std::move(c2));
  }

  ShiftCheck mult{"multiplicative", true, false, 0, ""};
  for (std::size_t idx = 0; idx < rep.indices.size() && mult.pass; ++idx)
    for (const auto& [c1, c2] : pairs) {
      std::vector<i64> sum(k);
      for (std::size_t j = 0; j < k; ++j) sum[j] = c1[j] + c2[j];
      ++mult.checked;
      if (reduce(beta(idx, sum)) != reduce(beta(idx, c1) + beta(idx, c2))) {
        mult.pass = false;
        mult.note = "rho_" + std::to_string(rep.indices[idx]) + " fails at " + vec_label(c1) + ", " + vec_label(c2);
        break;
      }
    }
  rep.checks.push_back(mult);

  // z (c v_h) = rho_h(c) v_{h+1} must equal phi(c) (z v_h) = rho_{h+1}(phi(c)) v_{h+1}.
  ShiftCheck cov{"covariance", true, false, 0, ""};
  for (std::size_t idx = 0; idx + 1 < rep.indices.size() && cov.pass; ++idx)
    for (const auto& pr : pairs) {
      const std::vector<i64>& c = pr.first;
      ++cov.checked;
      if (reduce(beta(idx, c)) != reduce(beta(idx + 1, apply(data.phi, c)))) {
        cov.pass = false;
        cov.note = "covariance fails at h = " + std::to_string(rep.indices[idx]) + ", c = " + vec_label(c);
        break;
      }
    }
  rep.excluded_indices.push_back(rep.indices.back());
  if (rep.indices.size() < 2) {
    cov.vacuous = true;
    cov.note = "window interior is empty; nothing to check";
  }
  rep.checks.push_back(cov);

  ShiftCheck dist{"distinct_characters", true, false, 0, ""};
  if (data.lambda) {
    dist.vacuous = true;
    dist.note = "lambda is a root of unity; distinctness is only asserted for lambda of infinite order";
  } else {
    for (std::size_t i = 0; i < rep.indices.size() && dist.pass; ++i)
      for (std::size_t j = i + 1; j < rep.indices.size(); ++j) {
        ++dist.checked;
        if (beta_row[i] == beta_row[j]) {
          dist.pass = false;
          dist.note = "rho_" + std::to_string(rep.indices[i]) + " = rho_" + std::to_string(rep.indices[j]);
          break;
        }
      }
    if (rep.indices.size() < 2) {
      dist.vacuous = true;
      dist.note = "a single index; nothing to compare";
    }
    if (!dist.pass) {
      SmallIntMatrix p = data.phi;
      for (int e = 1; e <= 12; ++e, p = mat_mul(p, data.phi))
        if (p == mat_identity(k)) {
          dist.note += "; finite order automorphism (order " + std::to_string(e) + "), construction degenerates";
          break;
        }
    }
  }
  rep.checks.push_back(dist);

  rep.notes.push_back("window |h| < " + std::to_string(data.W) + "; covariance is not checked at h = " +
                      std::to_string(rep.indices.back()) + " because v_" + std::to_string(rep.indices.back() + 1) +
                      " lies outside the window");
  return rep;
}

}  // namespace schur

#include "schur/cocycles.hpp"

#include "schur/linalg.hpp"

#include <algorithm>
#include <numeric>

namespace schur {

RootExp::RootExp(u64 modulus, i64 exponent) : N(modulus), e(0) {
  if (modulus == 0) throw InvalidInput("root of unity: modulus must be positive");
  e = static_cast<u64>(mod_floor(exponent, static_cast<i64>(modulus)));
}

bool RootExp::operator==(const RootExp& o) const {
  u64 L = lcm64(N, o.N);
  return over(L) % L == o.over(L) % L;
}

// ===========================================================================
// TableCocycle

TableCocycle::TableCocycle(TablePtr group, u64 N, std::vector<u64> exps)
    : group_(std::move(group)), n_(N), exps_(std::move(exps)) {
  if (!group_) throw InvalidInput("cocycle: missing group");
  if (n_ == 0) throw InvalidInput("cocycle: modulus must be positive");
  const std::size_t g = group_->order();
  if (exps_.size() != g * g) throw InvalidInput("cocycle: table must have |G|^2 entries");
  for (auto& v : exps_) v %= n_;
}

TableCocycle TableCocycle::trivial(TablePtr group, u64 N) {
  const std::size_t g = group->order();
  return TableCocycle(std::move(group), N, std::vector<u64>(g * g, 0));
}

bool TableCocycle::is_normalized() const {
  const Elem e = group_->identity();
  for (Elem x = 0; x < group_->order(); ++x)
    if (at(e, x) != 0 || at(x, e) != 0) return false;
  return true;
}

TableCocycle TableCocycle::over(u64 L) const {
  if (L == 0 || L % n_ != 0) throw InvalidInput("cocycle: new modulus must be a multiple of the old one");
  std::vector<u64> v(exps_);
  const u64 k = L / n_;
  for (auto& x : v) x *= k;
  return TableCocycle(group_, L, std::move(v));
}

TableCocycle TableCocycle::power(i64 k) const {
  const i64 N = static_cast<i64>(n_);
  const i64 kk = mod_floor(k, N);
  std::vector<u64> v(exps_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = static_cast<u64>(mul_mod(static_cast<i64>(exps_[i]), kk, N));
  return TableCocycle(group_, n_, std::move(v));
}

TableCocycle TableCocycle::operator*(const TableCocycle& o) const {
  if (group_->order() != o.group_->order() || group_->mult_flat() != o.group_->mult_flat())
    throw InvalidInput("cocycle product: different groups");
  const u64 L = lcm64(n_, o.n_);
  TableCocycle a = over(L), b = o.over(L);
  std::vector<u64> v(exps_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = (a.exps_[i] + b.exps_[i]) % L;
  return TableCocycle(group_, L, std::move(v));
}

bool TableCocycle::same_values(const TableCocycle& o) const {
  if (exps_.size() != o.exps_.size()) return false;
  const u64 L = lcm64(n_, o.n_);
  const u64 ka = L / n_, kb = L / o.n_;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if ((exps_[i] * ka) % L != (o.exps_[i] * kb) % L) return false;
  return true;
}

// ===========================================================================
// Cocycle and coboundary maps

CocycleCheck is_cocycle(const TableCocycle& a) {
  const FiniteGroupTable& t = *a.group();
  const u64 N = a.modulus();
  CocycleCheck res;
  for (Elem x = 0; x < t.order(); ++x)
    for (Elem y = 0; y < t.order(); ++y) {
      const Elem xy = t.mul(x, y);
      const u64 axy = a.at(x, y);
      for (Elem z = 0; z < t.order(); ++z) {
        ++res.checked;
        u64 lhs = (axy + a.at(xy, z)) % N;
        u64 rhs = (a.at(x, t.mul(y, z)) + a.at(y, z)) % N;
        if (lhs != rhs) {
          res.ok = false;
          res.witness = "(" + t.label(x) + ", " + t.label(y) + ", " + t.label(z) + ")";
          return res;
        }
      }
    }
  return res;
}

TableCocycle coboundary(const Cochain1& mu) {
  const FiniteGroupTable& t = *mu.group;
  const std::size_t g = t.order();
  if (mu.mu.size() != g) throw InvalidInput("coboundary: cochain must have |G| entries");
  const i64 N = static_cast<i64>(mu.N);
  std::vector<u64> v(g * g);
  for (Elem x = 0; x < g; ++x)
    for (Elem y = 0; y < g; ++y) {
      i64 s = -static_cast<i64>(mu.mu[x] % mu.N) - static_cast<i64>(mu.mu[y] % mu.N) +
              static_cast<i64>(mu.mu[t.mul(x, y)] % mu.N);
      v[static_cast<std::size_t>(x) * g + y] = static_cast<u64>(mod_floor(s, N));
    }
  return TableCocycle(mu.group, mu.N, std::move(v));
}

// If a = delta(mu) for some C^x-valued mu and a^N = 1, then delta(mu^N) = 1,
// so mu^N is a homomorphism G -> C^x with values in mu_{|G|}. Hence mu takes
// values in mu_{N|G|} and triviality is decided by solving
//   -u_x - u_y + u_{xy} = |G| a(x, y)   over Z/(N|G|).
// The solve runs a Howell basis of [E | I], row g holding the coefficients of
// u_g followed by the unit vector e_g; reducing [b | 0] over the first block
// leaves [0 | -u] exactly when a solution u exists.
CoboundarySolver::CoboundarySolver(TablePtr group, u64 N, std::size_t cap)
    : group_(std::move(group)), n_(N), basis_(1, 1) {
  const FiniteGroupTable& t = *group_;
  const std::size_t g = t.order();
  if (g > cap)
    throw CapExceeded("is_coboundary needs |G| <= " + std::to_string(cap) + " but |G| = " + std::to_string(g));
  if (N == 0 || N > (u64{1} << 40) / g) throw CapExceeded("is_coboundary: modulus N|G| too large");
  const i64 M = static_cast<i64>(N * g);
  const std::size_t n = g * g;

  basis_ = HowellBasis(n + g, M);
  for (Elem v = 0; v < g; ++v) {
    std::vector<i64> row(n + g, 0);
    for (Elem x = 0; x < g; ++x)
      for (Elem y = 0; y < g; ++y) {
        i64 c = 0;
        if (x == v) --c;
        if (y == v) --c;
        if (t.mul(x, y) == v) ++c;
        row[static_cast<std::size_t>(x) * g + y] = c;
      }
    row[n + v] = 1;
    basis_.insert(std::move(row));
  }
}

CoboundaryResult CoboundarySolver::solve(const TableCocycle& a) const {
  if (a.group()->order() != group_->order()) throw InvalidInput("CoboundarySolver: cocycle lives on another group");
  if (n_ % a.modulus() != 0) throw InvalidInput("CoboundarySolver: cocycle modulus does not divide the solver modulus");
  const TableCocycle b = a.over(n_);
  const std::size_t g = group_->order();
  const std::size_t n = g * g;
  const i64 M = basis_.modulus();

  std::vector<i64> target(n + g, 0);
  for (std::size_t k = 0; k < n; ++k) target[k] = static_cast<i64>(b.exps()[k] * g);
  std::vector<i64> rem = basis_.reduce(std::move(target), n);

  CoboundaryResult res;
  for (std::size_t k = 0; k < n; ++k)
    if (rem[k] != 0) return res;

  Cochain1 mu;
  mu.group = a.group();
  mu.N = static_cast<u64>(M);
  mu.mu.resize(g);
  for (std::size_t v = 0; v < g; ++v) mu.mu[v] = static_cast<u64>(mod_floor(-rem[n + v], M));
  if (!coboundary(mu).same_values(a)) throw CheckFailed("is_coboundary: witness does not reproduce the cocycle");
  res.trivial = true;
  res.witness = std::move(mu);
  return res;
}

CoboundaryResult is_coboundary(const TableCocycle& a, std::size_t cap) {
  return CoboundarySolver(a.group(), a.modulus(), cap).solve(a);
}

bool cohomologous(const TableCocycle& a, const TableCocycle& b) { return is_coboundary(a * b.inverse()).trivial; }

std::size_t class_order(const TableCocycle& a) {
  const u64 N = a.modulus();
  const CoboundarySolver solver(a.group(), N);
  for (u64 k = 1; k <= N; ++k) {
    if (N % k != 0) continue;
    if (solver.solve(a.power(static_cast<i64>(k))).trivial) return k;
  }
  throw CheckFailed("class_order: a^N is not a coboundary");
}

// ===========================================================================
// Brute-force H^2

namespace {

// Kernel of x -> A x over Z/N for A given by its rows (width w): returns the
// invariants o_k and Q, Q^{-1} such that Z = { Q y : y_k in (N/o_k) Z/N }.
struct ModKernel {
  std::vector<i64> orders;
  ModMatrix Q, Qinv;
};

ModKernel mod_kernel(const std::vector<std::vector<i64>>& rows, std::size_t w, i64 N) {
  ModEchelon ech(w, N);
  for (const auto& r : rows) ech.insert(r);
  ModSNFResult sm = snf_mod(ech.as_square(), true);
  ModKernel k;
  k.orders = sm.invariants;  // square, so one invariant per column
  k.Q = std::move(*sm.Q);
  k.Qinv = std::move(*sm.Qinv);
  return k;
}

}  // namespace

FinAbDesc h2_bruteforce(const FiniteGroupTable& t, std::size_t cap) {
  const std::size_t g = t.order();
  if (g > cap)
    throw CapExceeded("h2_bruteforce needs |G| <= " + std::to_string(cap) + " but |G| = " + std::to_string(g));
  if (g == 1) return FinAbDesc{};
  const i64 N = static_cast<i64>(g);
  const Elem e = t.identity();

  // Non-identity elements and normalized variables a(x, y), x, y != 1.
  std::vector<Elem> nz;
  std::vector<i64> nz_pos(g, -1);
  for (Elem x = 0; x < g; ++x)
    if (x != e) {
      nz_pos[x] = static_cast<i64>(nz.size());
      nz.push_back(x);
    }
  const std::size_t m = nz.size(), nv = m * m;
  auto var = [&](Elem x, Elem y) -> i64 {
    if (x == e || y == e) return -1;
    return nz_pos[x] * static_cast<i64>(m) + nz_pos[y];
  };

  // Cocycle equations a(y,z) - a(xy,z) + a(x,yz) - a(x,y) = 0.
  std::vector<std::vector<i64>> eqs;
  eqs.reserve(m * m * m);
  for (Elem x : nz)
    for (Elem y : nz)
      for (Elem z : nz) {
        std::vector<i64> row(nv, 0);
        auto add = [&](i64 v, i64 c) {
          if (v >= 0) row[v] += c;
        };
        add(var(y, z), 1);
        add(var(t.mul(x, y), z), -1);
        add(var(x, t.mul(y, z)), 1);
        add(var(x, y), -1);
        for (auto& c : row) c = mod_floor(c, N);
        eqs.push_back(std::move(row));
      }
  ModKernel Z = mod_kernel(eqs, nv, N);
  eqs.clear();

  // Coboundary generators inside Z: delta(e_g) for g != 1, and delta(w)/N for
  // integer lifts w of the kernel of delta mod N.
  auto delta = [&](const std::vector<i64>& u) {  // u indexed by nz position
    std::vector<i64> out(nv);
    for (Elem x : nz)
      for (Elem y : nz) {
        i64 s = -u[nz_pos[x]] - u[nz_pos[y]];
        Elem xy = t.mul(x, y);
        if (xy != e) s += u[nz_pos[xy]];
        out[var(x, y)] = s;
      }
    return out;
  };
  std::vector<std::vector<i64>> bgens;
  for (std::size_t k = 0; k < m; ++k) {
    std::vector<i64> u(m, 0);
    u[k] = 1;
    auto b = delta(u);
    for (auto& v : b) v = mod_floor(v, N);
    bgens.push_back(std::move(b));
  }
  {
    std::vector<std::vector<i64>> d1rows;
    for (Elem x : nz)
      for (Elem y : nz) {
        std::vector<i64> row(m, 0);
        row[nz_pos[x]] -= 1;
        row[nz_pos[y]] -= 1;
        Elem xy = t.mul(x, y);
        if (xy != e) row[nz_pos[xy]] += 1;
        for (auto& c : row) c = mod_floor(c, N);
        d1rows.push_back(std::move(row));
      }
    ModKernel K1 = mod_kernel(d1rows, m, N);
    for (std::size_t k = 0; k < m; ++k) {
      i64 o = K1.orders[k];
      if (o == 1) continue;
      std::vector<i64> w(m);
      for (std::size_t r = 0; r < m; ++r) w[r] = mul_mod(N / o, K1.Q(r, k), N);
      auto b = delta(w);
      for (auto& v : b) {
        if (v % N != 0) throw CheckFailed("h2_bruteforce: kernel lift is not a mod-N cocycle");
        v = mod_floor(v / N, N);
      }
      bgens.push_back(std::move(b));
    }
  }

  // Quotient (+) Z/o_k by the coordinates of the coboundary generators.
  std::vector<std::vector<i64>> rel;
  for (std::size_t k = 0; k < nv; ++k) {
    std::vector<i64> row(nv, 0);
    row[k] = Z.orders[k] % N;
    rel.push_back(std::move(row));
  }
  for (const auto& b : bgens) {
    std::vector<i64> coord(nv, 0);
    for (std::size_t k = 0; k < nv; ++k) {
      i64 y = 0;
      for (std::size_t c = 0; c < nv; ++c)
        if (b[c]) y = (y + mul_mod(Z.Qinv(k, c), b[c], N)) % N;
      const i64 step = N / Z.orders[k];
      if (y % step != 0) throw CheckFailed("h2_bruteforce: coboundary outside the cocycle module");
      coord[k] = y / step;
    }
    rel.push_back(std::move(coord));
  }
  ModMatrix R(rel.size(), nv, N);
  for (std::size_t r = 0; r < rel.size(); ++r)
    for (std::size_t c = 0; c < nv; ++c) R(r, c) = rel[r][c];
  ModSNFResult sm = snf_mod(std::move(R), false);
  std::vector<BigInt> orders;
  for (i64 d : sm.invariants)
    if (d > 1) orders.push_back(d);
  FinAbDesc h2 = FinAbDesc::from_cyclic_orders(orders);

  FinAbDesc hom = h2_integral(t, std::max<std::size_t>(cap, g));
  if (!(h2 == hom))
    throw CheckFailed("h2_bruteforce: cocycle count " + to_string(h2) + " disagrees with H_2 = " + to_string(hom));
  return h2;
}

TableCocycle xi_cocycle(const XiData& xi, const std::vector<i64>& c) {
  if (c.size() != xi.t.size()) throw InvalidInput("xi_cocycle: one exponent per H_2 factor expected");
  u64 L = 1;
  for (const auto& tt : xi.t) L = lcm64(L, to_u64(tt.modulus));
  const std::size_t n = xi.group->order() * xi.group->order();
  std::vector<u64> v(n, 0);
  for (std::size_t f = 0; f < xi.t.size(); ++f) {
    const i64 r = to_i64(xi.t[f].modulus);
    const i64 ci = mod_floor(c[f], r);
    const i64 scale = static_cast<i64>(L) / r;
    for (std::size_t k = 0; k < n; ++k)
      v[k] = (v[k] + static_cast<u64>(mul_mod(ci * scale, xi.t[f].values[k], static_cast<i64>(L)))) % L;
  }
  return TableCocycle(xi.group, L, std::move(v));
}

// ===========================================================================
// Central extensions

void CentralExtensionData::validate() const {
  if (!total || !quotient) throw InvalidInput("extension: missing total or quotient group");
  const std::size_t n = total->order(), q = quotient->order();
  if (projection.size() != n) throw InvalidInput("extension: projection must have one entry per element");
  if (section.size() != q) throw InvalidInput("extension: section must have one entry per quotient element");
  if (!std::is_sorted(central.begin(), central.end()) ||
      std::adjacent_find(central.begin(), central.end()) != central.end())
    throw InvalidInput("extension: central subgroup must be sorted without repeats");
  if (!is_subgroup(*total, central)) throw InvalidInput("extension: A is not a subgroup");
  if (!is_central(*total, central)) throw InvalidInput("extension: A is not central");
  if (central.size() * q != n) throw InvalidInput("extension: |total| != |A| |quotient|");
  for (Elem p : projection)
    if (p >= q) throw InvalidInput("extension: projection out of range");
  for (Elem s : section)
    if (s >= n) throw InvalidInput("extension: section out of range");
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (projection[total->mul(x, y)] != quotient->mul(projection[x], projection[y]))
        throw InvalidInput("extension: projection is not a homomorphism");
  std::size_t kernel = 0;
  for (Elem x = 0; x < n; ++x)
    if (projection[x] == quotient->identity()) {
      ++kernel;
      if (!std::binary_search(central.begin(), central.end(), x))
        throw InvalidInput("extension: kernel of the projection is not A");
    }
  if (kernel != central.size()) throw InvalidInput("extension: kernel of the projection is not A");
  if (section[quotient->identity()] != total->identity()) throw InvalidInput("extension: section(1) != 1");
  for (Elem g = 0; g < q; ++g)
    if (projection[section[g]] != g) throw InvalidInput("extension: section is not a right inverse of the projection");
}

std::size_t CentralExtensionData::position_in_a(Elem a) const {
  auto it = std::lower_bound(central.begin(), central.end(), a);
  if (it == central.end() || *it != a) throw InvalidInput("extension: element is not in A");
  return static_cast<std::size_t>(it - central.begin());
}

std::vector<AChar> characters_of(const FiniteGroupTable& t, const Subset& a) {
  if (!is_subgroup(t, a)) throw InvalidInput("characters: not a subgroup");
  for (Elem x : a)
    for (Elem y : a)
      if (t.mul(x, y) != t.mul(y, x)) throw InvalidInput("characters: subgroup is not abelian");
  u64 e = 1;
  for (Elem x : a) e = lcm64(e, t.element_order(x));
  const i64 E = static_cast<i64>(e);

  // Grow H = <s_1, ..., s_k> one generator at a time, extending each
  // character of H in every possible way.
  std::vector<Elem> h{t.identity()};
  std::vector<std::vector<i64>> chars{std::vector<i64>(t.order(), -1)};
  chars[0][t.identity()] = 0;
  std::vector<char> in_h(t.order(), 0);
  in_h[t.identity()] = 1;
  for (Elem s : a) {
    if (in_h[s]) continue;
    i64 o = 1;
    Elem p = s;
    while (!in_h[p]) {
      p = t.mul(p, s);
      ++o;
    }
    std::vector<Elem> h2;
    for (i64 j = 0; j < o; ++j)
      for (Elem x : h) h2.push_back(t.mul(x, t.pow(s, j)));
    std::vector<std::vector<i64>> next;
    for (const auto& chi : chars) {
      // o v = chi(s^o) mod E has exactly o solutions since o | E.
      const i64 w = chi[p];
      const i64 g = gcd64(o, E);
      if (w % g != 0) throw CheckFailed("characters: inconsistent extension");
      const i64 Eg = E / g;
      const i64 v0 = Eg == 1 ? 0 : mul_mod(w / g, inverse_mod64(mod_floor(o / g, Eg), Eg), Eg);
      for (i64 k = 0; k < g; ++k) {
        const i64 v = v0 + k * Eg;
        std::vector<i64> ext = chi;
        for (i64 j = 0; j < o; ++j)
          for (Elem x : h) ext[t.mul(x, t.pow(s, j))] = mod_floor(chi[x] + j * v, E);
        next.push_back(std::move(ext));
      }
    }
    chars = std::move(next);
    h = std::move(h2);
    for (Elem x : h) in_h[x] = 1;
  }
  std::vector<AChar> out;
  for (const auto& chi : chars) {
    AChar c;
    c.N = e;
    for (Elem x : a) c.values.push_back(static_cast<u64>(chi[x]));
    out.push_back(std::move(c));
  }
  return out;
}

TableCocycle transgression(const CentralExtensionData& ext, const AChar& chi) {
  if (chi.values.size() != ext.central.size()) throw InvalidInput("transgression: character has the wrong length");
  const FiniteGroupTable& G = *ext.quotient;
  const FiniteGroupTable& T = *ext.total;
  const std::size_t q = G.order();
  std::vector<u64> v(q * q);
  for (Elem x = 0; x < q; ++x)
    for (Elem y = 0; y < q; ++y) {
      Elem c = T.mul(T.mul(ext.section[x], ext.section[y]), T.inv(ext.section[G.mul(x, y)]));
      v[static_cast<std::size_t>(x) * q + y] = chi.values[ext.position_in_a(c)];
    }
  return TableCocycle(ext.quotient, chi.N, std::move(v));
}

TableCocycle inflation(const TableCocycle& a, const CentralExtensionData& ext) {
  if (a.group()->order() != ext.quotient->order()) throw InvalidInput("inflation: cocycle lives on another group");
  const std::size_t n = ext.total->order();
  std::vector<u64> v(n * n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) v[static_cast<std::size_t>(x) * n + y] = a.at(ext.projection[x], ext.projection[y]);
  return TableCocycle(ext.total, a.modulus(), std::move(v));
}

RestrictedCocycle restriction(const TableCocycle& a, const Subset& h) {
  SubgroupTable sub = subgroup_table(*a.group(), h);
  const std::size_t k = sub.embed.size();
  std::vector<u64> v(k * k);
  for (std::size_t x = 0; x < k; ++x)
    for (std::size_t y = 0; y < k; ++y) v[x * k + y] = a.at(sub.embed[x], sub.embed[y]);
  TableCocycle c(sub.table, a.modulus(), std::move(v));
  return RestrictedCocycle{std::move(sub), std::move(c)};
}

// ===========================================================================
// Infinite families

MetacyclicElement sample_metacyclic(const MetacyclicDesc& d, Rng& rng) {
  MetacyclicElement x{rng.uniform(-kSampleBound, kSampleBound), rng.uniform(-kSampleBound, kSampleBound)};
  return mc_reduce(d, std::move(x));
}

HeisElement sample_heisenberg(const HeisenbergDesc& d, Rng& rng) {
  HeisElement x;
  x.a = rng.uniform(-kSampleBound, kSampleBound);
  for (std::size_t k = 0; k < d.rank(); ++k) {
    x.b.push_back(rng.uniform(-kSampleBound, kSampleBound));
    x.c.push_back(rng.uniform(-kSampleBound, kSampleBound));
  }
  return heis_reduce(d, std::move(x));
}

MetacyclicCocycle metacyclic_cocycle(const BigInt& m, const BigInt& r, u64 lambda_exp) {
  if (m <= 0) throw InvalidInput("metacyclic cocycle: needs m > 0 (the group G(m, 0, r))");
  MetacyclicCocycle c;
  c.group = MetacyclicDesc(m, 0, r);
  BigXgcd e = xgcd(m, r - 1);
  c.t = e.g;
  if (c.t > BigInt(u64{1} << 62)) throw CapExceeded("metacyclic cocycle: t does not fit a machine word");
  // All solutions: y + k m/t; take the one of least absolute value.
  const BigInt step = m / c.t;
  BigInt y = floor_mod(e.y, step);
  if (2 * y > step) y -= step;
  c.y = y;
  c.x = (c.t - y * (r - 1)) / m;
  if (c.x * m + c.y * (r - 1) != c.t) throw CheckFailed("metacyclic cocycle: Bezout identity failed");
  if (lambda_exp >= to_u64(c.t))
    throw InvalidInput("metacyclic cocycle: lambda_exp must be reduced mod t = " + to_string(c.t));
  c.lambda_exp = lambda_exp;
  return c;
}

u64 MetacyclicCocycle::eval(const MetacyclicElement& p, const MetacyclicElement& q) const {
  if (t == 1) return 0;
  if (t < BigInt(1u << 31) && p.j > -(BigInt(1) << 62) && p.j < (BigInt(1) << 62)) {
    const i64 tt = to_i64(t), t2 = tt * tt;
    i64 base = to_i64(floor_mod(group.r, BigInt(t2)));
    i64 e = to_i64(p.j);
    if (e < 0) {
      base = inverse_mod64(base, t2);
      e = -e;
    }
    i64 rj = 1 % t2;
    for (; e; e >>= 1, base = mul_mod(base, base, t2))
      if (e & 1) rj = mul_mod(rj, base, t2);
    const i64 w = mod_floor(rj - 1, t2);
    if (w % tt != 0) throw CheckFailed("metacyclic cocycle: t does not divide r^j - 1");
    i64 v = mul_mod(static_cast<i64>(lambda_exp % static_cast<u64>(tt)), to_i64(floor_mod(q.i, t)), tt);
    v = mul_mod(v, to_i64(floor_mod(y, t)), tt);
    return static_cast<u64>(mul_mod(v, w / tt, tt));
  }
  const BigInt t2 = t * t;
  BigInt rj = pow_mod(group.r, p.j, t2);
  BigInt w = floor_mod(rj - 1, t2);
  if (w % t != 0) throw CheckFailed("metacyclic cocycle: t does not divide r^j - 1");
  w /= t;
  BigInt v = floor_mod(BigInt(lambda_exp) * floor_mod(q.i, t) * floor_mod(y, t) * w, t);
  return to_u64(v);
}

FamilyCocycle<MetacyclicElement> MetacyclicCocycle::family() const {
  FamilyCocycle<MetacyclicElement> f;
  f.name = "metacyclic(m=" + to_string(group.m) + ", r=" + to_string(group.r) + ")";
  f.N = to_u64(t);
  f.identity = mc_identity();
  MetacyclicDesc d = group;
  MetacyclicCocycle self = *this;
  f.mul = [d](const MetacyclicElement& a, const MetacyclicElement& b) { return mc_mul(d, a, b); };
  f.eval = [self](const MetacyclicElement& a, const MetacyclicElement& b) { return self.eval(a, b); };
  f.sample = [d](Rng& rng) { return sample_metacyclic(d, rng); };
  return f;
}

Example1Cocycle example1_cocycle(u64 n, u64 lambda_exp, u64 mu_exp) {
  if (n == 0) throw InvalidInput("example cocycle: n must be positive");
  Example1Cocycle c;
  c.group = HeisenbergDesc({BigInt(1)}, BigInt(n));
  c.n = n;
  c.lambda_exp = lambda_exp % n;
  c.mu_exp = mu_exp % n;
  return c;
}

u64 Example1Cocycle::eval(const HeisElement& x, const HeisElement& y) const {
  const BigInt &n1 = x.b[0], &p1 = x.c[0];
  const BigInt &m2 = y.a, &n2 = y.b[0];
  BigInt lam = m2 * p1 + n2 * (p1 * (p1 - 1) / 2);
  BigInt mu = n1 * m2 + p1 * (n2 * (n2 - 1) / 2) + p1 * n1 * n2;
  BigInt v = floor_mod(BigInt(lambda_exp) * lam + BigInt(mu_exp) * mu, BigInt(n));
  return to_u64(v);
}

FamilyCocycle<HeisElement> Example1Cocycle::family() const {
  FamilyCocycle<HeisElement> f;
  f.name = "heisenberg(n=" + std::to_string(n) + ")";
  f.N = n;
  f.identity = heis_identity(group);
  HeisenbergDesc d = group;
  Example1Cocycle self = *this;
  f.mul = [d](const HeisElement& a, const HeisElement& b) { return heis_mul(d, a, b); };
  f.eval = [self](const HeisElement& a, const HeisElement& b) { return self.eval(a, b); };
  f.sample = [d](Rng& rng) { return sample_heisenberg(d, rng); };
  return f;
}

}  // namespace schur

#include "schur/homology.hpp"

#include <algorithm>

namespace schur {

namespace {

void check_bar_cap(const FiniteGroupTable& t, std::size_t cap) {
  if (t.order() > cap) {
    throw CapExceeded("bar complex needs |G| <= " + std::to_string(cap) + " but |G| = " + std::to_string(t.order()) +
                      " (raise --max-order to opt in)");
  }
}

i64 checked_add(i64 a, i64 b) {
  i64 r;
  if (__builtin_add_overflow(a, b, &r)) throw Error("integer overflow while reducing the bar complex");
  return r;
}

i64 checked_mul(i64 a, i64 b) {
  i64 r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error("integer overflow while reducing the bar complex");
  return r;
}

// Column reduction of d_2 tracking the unimodular transform V and V^{-1}.
// After the loop, the first `rank` columns of d_2 V carry the image and the
// remaining columns of V span Ker d_2 over Z. Kernel coordinates of any chain
// e are rows rank.. of V^{-1} e.
struct KernelSplit {
  std::size_t n = 0, rank = 0;
  std::vector<std::vector<i64>> v_cols;     // V stored by columns
  std::vector<std::vector<i64>> vinv_rows;  // V^{-1} stored by rows
};

KernelSplit split_d2(const FiniteGroupTable& t) {
  const std::size_t g = t.order(), n = g * g;
  std::vector<std::vector<i64>> a(n, std::vector<i64>(g, 0));  // columns of d_2
  for (std::size_t x = 0; x < g; ++x)
    for (std::size_t y = 0; y < g; ++y) {
      auto& col = a[x * g + y];
      col[y] += 1;
      col[t.mul(static_cast<Elem>(x), static_cast<Elem>(y))] -= 1;
      col[x] += 1;
    }
  KernelSplit ks;
  ks.n = n;
  ks.v_cols.assign(n, std::vector<i64>(n, 0));
  ks.vinv_rows.assign(n, std::vector<i64>(n, 0));
  for (std::size_t k = 0; k < n; ++k) ks.v_cols[k][k] = ks.vinv_rows[k][k] = 1;

  auto swap_cols = [&](std::size_t p, std::size_t q) {
    if (p == q) return;
    std::swap(a[p], a[q]);
    std::swap(ks.v_cols[p], ks.v_cols[q]);
    std::swap(ks.vinv_rows[p], ks.vinv_rows[q]);
  };
  // col k -= q col p ; V^{-1}: row p += q row k
  auto col_sub = [&](std::size_t k, std::size_t p, i64 q) {
    for (std::size_t r = 0; r < g; ++r)
      if (a[p][r]) a[k][r] = checked_add(a[k][r], -checked_mul(q, a[p][r]));
    auto& vk = ks.v_cols[k];
    const auto& vp = ks.v_cols[p];
    for (std::size_t r = 0; r < n; ++r)
      if (vp[r]) vk[r] = checked_add(vk[r], -checked_mul(q, vp[r]));
    auto& wp = ks.vinv_rows[p];
    const auto& wk = ks.vinv_rows[k];
    for (std::size_t c = 0; c < n; ++c)
      if (wk[c]) wp[c] = checked_add(wp[c], checked_mul(q, wk[c]));
  };

  std::size_t piv = 0;
  for (std::size_t row = 0; row < g && piv < n; ++row) {
    for (;;) {
      std::size_t best = n;
      for (std::size_t j = piv; j < n; ++j)
        if (a[j][row] != 0 && (best == n || std::llabs(a[j][row]) < std::llabs(a[best][row]))) best = j;
      if (best == n) break;
      swap_cols(piv, best);
      bool remaining = false;
      for (std::size_t k = piv + 1; k < n; ++k) {
        if (!a[k][row]) continue;
        col_sub(k, piv, a[k][row] / a[piv][row]);
        if (a[k][row]) remaining = true;
      }
      if (!remaining) {
        ++piv;
        break;
      }
    }
  }
  ks.rank = piv;
  return ks;
}

struct H2Result {
  FinAbDesc h2;
  std::vector<TTable> t;
  std::vector<std::vector<i64>> cycles;
};

H2Result compute_h2(const FiniteGroupTable& t, std::size_t cap, bool want_xi) {
  check_bar_cap(t, cap);
  const std::size_t g = t.order(), n = g * g;
  const i64 N = static_cast<i64>(g);
  H2Result res;
  if (g == 1) return res;

  KernelSplit ks = split_d2(t);
  const std::size_t K = n - ks.rank;

  // kappa[c] = kernel coordinates of e_c, reduced mod N.
  std::vector<std::vector<i64>> kappa(n, std::vector<i64>(K));
  for (std::size_t k = 0; k < K; ++k) {
    const auto& row = ks.vinv_rows[ks.rank + k];
    for (std::size_t c = 0; c < n; ++c) kappa[c][k] = mod_floor(row[c], N);
  }

  // |G| annihilates H_2, so Z^K / (Im d_3 + N Z^K) = H_2 and the quotient is
  // computed over Z/N.
  ModEchelon ech(K, N);
  std::vector<i64> v(K);
  for (std::size_t x = 0; x < g; ++x)
    for (std::size_t y = 0; y < g; ++y) {
      std::size_t xy = t.mul(static_cast<Elem>(x), static_cast<Elem>(y));
      const auto& k_xy = kappa[x * g + y];
      for (std::size_t z = 0; z < g; ++z) {
        std::size_t yz = t.mul(static_cast<Elem>(y), static_cast<Elem>(z));
        const auto& a1 = kappa[y * g + z];
        const auto& a2 = kappa[xy * g + z];
        const auto& a3 = kappa[x * g + yz];
        bool any = false;
        for (std::size_t k = 0; k < K; ++k) {
          i64 s = a1[k] - a2[k] + a3[k] - k_xy[k];
          s %= N;
          if (s < 0) s += N;
          v[k] = s;
          any = any || s;
        }
        if (any) ech.insert(v);
      }
    }

  ModSNFResult sm = snf_mod(ech.as_square(), want_xi);
  std::vector<std::size_t> torsion_idx;
  std::vector<BigInt> factors;
  for (std::size_t k = 0; k < K; ++k) {
    i64 d = k < sm.invariants.size() ? sm.invariants[k] : N;
    if (d > 1) {
      torsion_idx.push_back(k);
      factors.push_back(d);
    }
  }
  res.h2 = FinAbDesc(factors);
  if (!want_xi) return res;

  const Elem e = t.identity();
  const std::size_t c11 = static_cast<std::size_t>(e) * g + e;
  const ModMatrix& Q = *sm.Q;
  const ModMatrix& Qinv = *sm.Qinv;
  for (std::size_t f = 0; f < torsion_idx.size(); ++f) {
    std::size_t col = torsion_idx[f];
    i64 d = sm.invariants[col];
    TTable tt;
    tt.index = f;
    tt.modulus = d;
    tt.values.assign(n, 0);
    std::vector<i64> raw(n);
    for (std::size_t c = 0; c < n; ++c) {
      i64 s = 0;
      for (std::size_t k = 0; k < K; ++k)
        if (kappa[c][k]) s = (s + mul_mod(kappa[c][k], Q(k, col), N)) % N;
      raw[c] = s % d;
    }
    for (std::size_t c = 0; c < n; ++c) tt.values[c] = mod_floor(raw[c] - raw[c11], d);
    res.t.push_back(std::move(tt));

    // Cycle representing the generator: row `col` of Q^{-1} in kernel
    // coordinates, pushed through the kernel columns of V.
    std::vector<i64> cyc(n, 0);
    for (std::size_t k = 0; k < K; ++k) {
      i64 y = Qinv(col, k);
      if (!y) continue;
      const auto& vc = ks.v_cols[ks.rank + k];
      for (std::size_t r = 0; r < n; ++r)
        if (vc[r]) cyc[r] = checked_add(cyc[r], checked_mul(y, vc[r]));
    }
    res.cycles.push_back(std::move(cyc));
  }
  return res;
}

}  // namespace

SparseColumnMatrix bar_boundary(const FiniteGroupTable& t, int degree, std::size_t cap) {
  check_bar_cap(t, cap);
  const std::size_t g = t.order();
  SparseColumnMatrix m;
  auto add = [](std::vector<std::pair<std::size_t, i64>>& col, std::size_t row, i64 v) {
    for (auto& [r, x] : col)
      if (r == row) {
        x += v;
        return;
      }
    col.emplace_back(row, v);
  };
  auto prune = [](std::vector<std::pair<std::size_t, i64>>& col) {
    col.erase(std::remove_if(col.begin(), col.end(), [](const auto& p) { return p.second == 0; }), col.end());
    std::sort(col.begin(), col.end());
  };
  if (degree == 2) {
    m.rows = g;
    m.cols = g * g;
    m.columns.resize(m.cols);
    for (Elem x = 0; x < g; ++x)
      for (Elem y = 0; y < g; ++y) {
        auto& col = m.columns[x * g + y];
        add(col, y, 1);
        add(col, t.mul(x, y), -1);
        add(col, x, 1);
        prune(col);
      }
  } else if (degree == 3) {
    m.rows = g * g;
    m.cols = g * g * g;
    m.columns.resize(m.cols);
    for (Elem x = 0; x < g; ++x)
      for (Elem y = 0; y < g; ++y)
        for (Elem z = 0; z < g; ++z) {
          auto& col = m.columns[(static_cast<std::size_t>(x) * g + y) * g + z];
          add(col, static_cast<std::size_t>(y) * g + z, 1);
          add(col, static_cast<std::size_t>(t.mul(x, y)) * g + z, -1);
          add(col, static_cast<std::size_t>(x) * g + t.mul(y, z), 1);
          add(col, static_cast<std::size_t>(x) * g + y, -1);
          prune(col);
        }
  } else {
    throw InvalidInput("bar_boundary: degree must be 2 or 3");
  }
  return m;
}

bool bar_composition_vanishes(const FiniteGroupTable& t, std::size_t cap) {
  SparseColumnMatrix d2 = bar_boundary(t, 2, cap), d3 = bar_boundary(t, 3, cap);
  std::vector<i64> acc(d2.rows);
  for (const auto& col : d3.columns) {
    std::fill(acc.begin(), acc.end(), 0);
    for (const auto& [r, v] : col)
      for (const auto& [r2, w] : d2.columns[r]) acc[r2] += v * w;
    for (i64 x : acc)
      if (x) return false;
  }
  return true;
}

FinAbDesc h2_integral(const FiniteGroupTable& t, std::size_t cap) { return compute_h2(t, cap, false).h2; }

XiData xi_extract(TablePtr t, std::size_t cap) {
  H2Result r = compute_h2(*t, cap, true);
  XiData xi;
  xi.group = std::move(t);
  xi.h2 = std::move(r.h2);
  xi.t = std::move(r.t);
  xi.generator_cycles = std::move(r.cycles);
  return xi;
}

FinAbDesc multiplier_finab(const FinAbDesc& desc) {
  std::vector<BigInt> tor = desc.torsion();
  const std::size_t s = desc.free_rank();
  std::vector<BigInt> orders;
  for (std::size_t i = 0; i < tor.size(); ++i)
    for (std::size_t j = i + 1; j < tor.size(); ++j) orders.push_back(gcd(tor[i], tor[j]));
  for (const auto& n : tor)
    for (std::size_t k = 0; k < s; ++k) orders.push_back(n);
  const std::size_t free_pairs = s < 2 ? 0 : s * (s - 1) / 2;
  for (std::size_t k = 0; k < free_pairs; ++k) orders.push_back(0);
  return FinAbDesc::from_cyclic_orders(orders);
}

FinAbDesc multiplier_metacyclic(const MetacyclicDesc& desc) {
  if (desc.m == 0 && desc.n == 0) throw InvalidInput("multiplier_metacyclic: m and n are both zero");
  if (desc.m != 0 && desc.n != 0) throw InvalidInput("multiplier_metacyclic: needs mn = 0 (use h2 on the finite table)");
  if (desc.m > 0) {
    BigInt t = gcd(desc.m, desc.r - 1);
    return t > 1 ? FinAbDesc({t}) : FinAbDesc{};
  }
  return FinAbDesc{};
}

}  // namespace schur

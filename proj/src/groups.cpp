#include "schur/groups.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace schur {

// ===========================================================================
// FiniteGroupTable

FiniteGroupTable::FiniteGroupTable(std::size_t order, std::vector<Elem> mult, std::vector<std::string> labels)
    : order_(order), mult_(std::move(mult)), labels_(std::move(labels)) {
  const std::size_t n = order_;
  if (n == 0) throw InvalidInput("group table: order must be positive");
  if (mult_.size() != n * n) throw InvalidInput("group table: mult must have order*order entries");
  for (Elem v : mult_) {
    if (v >= n) throw InvalidInput("group table: entry " + std::to_string(v) + " out of range");
  }
  // Latin square.
  std::vector<std::uint32_t> seen(n, 0);
  std::uint32_t stamp = 0;
  for (std::size_t a = 0; a < n; ++a) {
    ++stamp;
    for (std::size_t b = 0; b < n; ++b) {
      Elem v = mult_[a * n + b];
      if (seen[v] == stamp) throw InvalidInput("group table: row " + std::to_string(a) + " is not a permutation");
      seen[v] = stamp;
    }
  }
  for (std::size_t b = 0; b < n; ++b) {
    ++stamp;
    for (std::size_t a = 0; a < n; ++a) {
      Elem v = mult_[a * n + b];
      if (seen[v] == stamp) throw InvalidInput("group table: column " + std::to_string(b) + " is not a permutation");
      seen[v] = stamp;
    }
  }
  // Identity: in a Latin square a left identity row is the identity permutation.
  bool found = false;
  for (std::size_t e = 0; e < n && !found; ++e) {
    bool ok = true;
    for (std::size_t g = 0; g < n && ok; ++g) ok = mult_[e * n + g] == g && mult_[g * n + e] == g;
    if (ok) {
      identity_ = static_cast<Elem>(e);
      found = true;
    }
  }
  if (!found) throw InvalidInput("group table: no two-sided identity");
  inv_.assign(n, 0);
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t h = 0; h < n; ++h) {
      if (mult_[g * n + h] == identity_) {
        inv_[g] = static_cast<Elem>(h);
        break;
      }
    }
    if (mult_[inv_[g] * n + g] != identity_) throw InvalidInput("group table: element " + std::to_string(g) + " has no two-sided inverse");
  }
  auto assoc_fail = [&](std::size_t x, std::size_t y, std::size_t z) {
    return mul(mul(static_cast<Elem>(x), static_cast<Elem>(y)), static_cast<Elem>(z)) !=
           mul(static_cast<Elem>(x), mul(static_cast<Elem>(y), static_cast<Elem>(z)));
  };
  auto assoc_error = [&](std::size_t x, std::size_t y, std::size_t z) {
    return InvalidInput("group table: not associative at (" + std::to_string(x) + "," + std::to_string(y) + "," +
                        std::to_string(z) + ")");
  };
  if (n <= 64) {
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z)
          if (assoc_fail(x, y, z)) throw assoc_error(x, y, z);
  } else {
    Rng rng(kDefaultSeed);
    for (int s = 0; s < 100000; ++s) {
      std::size_t x = rng.index(n), y = rng.index(n), z = rng.index(n);
      if (assoc_fail(x, y, z)) throw assoc_error(x, y, z);
    }
  }
  if (labels_.empty()) {
    labels_.reserve(n);
    for (std::size_t g = 0; g < n; ++g) labels_.push_back("g" + std::to_string(g));
  } else if (labels_.size() != n) {
    throw InvalidInput("group table: label count does not match order");
  }
}

FiniteGroupTable FiniteGroupTable::from_rows(const std::vector<std::vector<Elem>>& rows, std::vector<std::string> labels) {
  std::size_t n = rows.size();
  std::vector<Elem> flat;
  flat.reserve(n * n);
  for (const auto& row : rows) {
    if (row.size() != n) throw InvalidInput("group table: mult must be square");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return FiniteGroupTable(n, std::move(flat), std::move(labels));
}

Elem FiniteGroupTable::pow(Elem a, i64 k) const {
  if (k < 0) {
    a = inv(a);
    k = -k;
  }
  k %= static_cast<i64>(element_order(a));
  Elem r = identity_;
  for (i64 s = 0; s < k; ++s) r = mul(r, a);
  return r;
}

std::size_t FiniteGroupTable::element_order(Elem a) const {
  std::size_t k = 1;
  Elem x = a;
  while (x != identity_) {
    x = mul(x, a);
    ++k;
  }
  return k;
}

Elem FiniteGroupTable::commutator(Elem a, Elem b) const { return mul(mul(a, b), mul(inv(a), inv(b))); }

bool FiniteGroupTable::is_abelian() const {
  for (std::size_t a = 0; a < order_; ++a)
    for (std::size_t b = a + 1; b < order_; ++b)
      if (mul(static_cast<Elem>(a), static_cast<Elem>(b)) != mul(static_cast<Elem>(b), static_cast<Elem>(a))) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Subgroups

bool is_subgroup(const FiniteGroupTable& t, const Subset& s) {
  if (s.empty()) return false;
  std::vector<char> in(t.order(), 0);
  for (Elem x : s) {
    if (x >= t.order()) return false;
    in[x] = 1;
  }
  if (!in[t.identity()]) return false;
  for (Elem x : s) {
    if (!in[t.inv(x)]) return false;
    for (Elem y : s)
      if (!in[t.mul(x, y)]) return false;
  }
  return true;
}

Subset generated_subgroup(const FiniteGroupTable& t, const std::vector<Elem>& gens) {
  std::vector<char> in(t.order(), 0);
  std::vector<Elem> members{t.identity()};
  in[t.identity()] = 1;
  for (std::size_t k = 0; k < members.size(); ++k) {
    for (Elem g : gens) {
      Elem y = t.mul(members[k], g);
      if (!in[y]) {
        in[y] = 1;
        members.push_back(y);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

Subset derived_subgroup(const FiniteGroupTable& t) {
  std::vector<char> is_comm(t.order(), 0);
  std::vector<Elem> comms;
  for (Elem a = 0; a < t.order(); ++a)
    for (Elem b = 0; b < t.order(); ++b) {
      Elem c = t.commutator(a, b);
      if (!is_comm[c]) {
        is_comm[c] = 1;
        comms.push_back(c);
      }
    }
  return generated_subgroup(t, comms);
}

Subset center(const FiniteGroupTable& t) {
  Subset z;
  for (Elem a = 0; a < t.order(); ++a) {
    bool central = true;
    for (Elem b = 0; b < t.order() && central; ++b) central = t.mul(a, b) == t.mul(b, a);
    if (central) z.push_back(a);
  }
  return z;
}

bool is_central(const FiniteGroupTable& t, const Subset& s) {
  for (Elem a : s)
    for (Elem b = 0; b < t.order(); ++b)
      if (t.mul(a, b) != t.mul(b, a)) return false;
  return true;
}

SubgroupTable subgroup_table(const FiniteGroupTable& t, const Subset& s) {
  if (!is_subgroup(t, s)) throw InvalidInput("subset is not a subgroup");
  SubgroupTable out;
  out.embed = s;
  std::sort(out.embed.begin(), out.embed.end());
  out.pos.assign(t.order(), -1);
  for (std::size_t k = 0; k < out.embed.size(); ++k) out.pos[out.embed[k]] = static_cast<std::int64_t>(k);
  std::size_t k = out.embed.size();
  std::vector<Elem> mult(k * k);
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < k; ++a) {
    labels.push_back(t.label(out.embed[a]));
    for (std::size_t b = 0; b < k; ++b)
      mult[a * k + b] = static_cast<Elem>(out.pos[t.mul(out.embed[a], out.embed[b])]);
  }
  out.table = std::make_shared<const FiniteGroupTable>(k, std::move(mult), std::move(labels));
  return out;
}

RightCosets right_cosets(const FiniteGroupTable& t, const Subset& h) {
  if (!is_subgroup(t, h)) throw InvalidInput("subset is not a subgroup");
  RightCosets rc;
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  rc.of.assign(t.order(), unset);
  for (Elem g = 0; g < t.order(); ++g) {
    if (rc.of[g] != unset) continue;
    std::size_t u = rc.reps.size();
    rc.reps.push_back(g);
    for (Elem x : h) rc.of[t.mul(x, g)] = u;
  }
  return rc;
}

FiniteGroupTable dicyclic_table(std::size_t n) {
  if (n == 0) throw InvalidInput("dicyclic group needs n >= 1");
  const std::size_t m = 2 * n, order = 2 * m;
  std::vector<Elem> mult(order * order);
  std::vector<std::string> labels(order);
  auto idx = [&](std::size_t i, std::size_t e) { return static_cast<Elem>(e * m + i); };
  for (std::size_t e1 = 0; e1 < 2; ++e1)
    for (std::size_t i1 = 0; i1 < m; ++i1) {
      labels[idx(i1, e1)] = "a^" + std::to_string(i1) + (e1 ? " b" : "");
      for (std::size_t e2 = 0; e2 < 2; ++e2)
        for (std::size_t i2 = 0; i2 < m; ++i2) {
          // a^i1 b^e1 a^i2 b^e2 = a^{i1 + (-1)^e1 i2} b^{e1+e2}, with b^2 = a^n.
          std::size_t i = (e1 ? i1 + m - i2 : i1 + i2) % m;
          std::size_t e = e1 + e2;
          if (e == 2) {
            i = (i + n) % m;
            e = 0;
          }
          mult[idx(i1, e1) * order + idx(i2, e2)] = idx(i, e);
        }
    }
  return FiniteGroupTable(order, std::move(mult), std::move(labels));
}

// ===========================================================================
// Metacyclic groups

MetacyclicDesc::MetacyclicDesc(BigInt m_, BigInt n_, BigInt r_) : m(std::move(m_)), n(std::move(n_)), r(std::move(r_)) {
  if (m < 0 || n < 0) throw InvalidInput("metacyclic: m and n must be non-negative");
  if (r < 1) throw InvalidInput("metacyclic: r must be positive");
  if (m > 0 && gcd(r, m) != 1) {
    throw InvalidInput("metacyclic rule gcd(r,m)=1 violated: gcd(" + to_string(r) + "," + to_string(m) + ") = " +
                       to_string(gcd(r, m)) + " != 1");
  }
  if (m > 0 && n > 0 && pow_mod(r, n, m) != floor_mod(BigInt(1), m)) {
    throw InvalidInput("metacyclic rule r^n = 1 (mod m) violated for (" + to_string(m) + "," + to_string(n) + "," +
                       to_string(r) + ")");
  }
  if (m == 0 && n == 0 && r != 1) throw InvalidInput("metacyclic rule r = 1 when m = n = 0 violated");
}

namespace {
void require_arithmetic(const MetacyclicDesc& d) {
  if (d.m == 0 && d.r != 1) {
    throw InvalidInput("metacyclic: G(0," + to_string(d.n) + "," + to_string(d.r) +
                       ") has no consistent normal form (needs r^n = 1 over Z)");
  }
}
}  // namespace

MetacyclicElement mc_reduce(const MetacyclicDesc& d, MetacyclicElement x) {
  if (d.m > 0) x.i = floor_mod(x.i, d.m);
  if (d.n > 0) x.j = floor_mod(x.j, d.n);
  return x;
}

MetacyclicElement mc_identity() { return {0, 0}; }

BigInt mc_twist(const MetacyclicDesc& d, const BigInt& j) {
  if (d.m > 0) return pow_mod(d.r, j, d.m);
  require_arithmetic(d);
  return 1;
}

MetacyclicElement mc_mul(const MetacyclicDesc& d, const MetacyclicElement& x, const MetacyclicElement& y) {
  // b^j a^{i1} = a^{i1 r^j} b^j
  return mc_reduce(d, {x.i + y.i * mc_twist(d, x.j), x.j + y.j});
}

MetacyclicElement mc_inv(const MetacyclicDesc& d, const MetacyclicElement& x) {
  return mc_reduce(d, {-x.i * mc_twist(d, -x.j), -x.j});
}

BigInt mc_commutator_power(const MetacyclicDesc& d, const BigInt& i, const BigInt& j) {
  BigInt e = i * (1 - mc_twist(d, j));
  return d.m > 0 ? floor_mod(e, d.m) : e;
}

std::string mc_label(const MetacyclicElement& x) { return "a^" + to_string(x.i) + " b^" + to_string(x.j); }

// ===========================================================================
// Finitely generated abelian groups

FinAbDesc::FinAbDesc(std::vector<BigInt> f) : factors(std::move(f)) {
  bool seen_zero = false;
  for (std::size_t k = 0; k < factors.size(); ++k) {
    const BigInt& v = factors[k];
    if (v < 0) throw InvalidInput("abelian group: invariant factors must be non-negative");
    if (v == 1) throw InvalidInput("abelian group: invariant factor 1 is not allowed (omit trivial factors)");
    if (v == 0) {
      seen_zero = true;
      continue;
    }
    if (seen_zero) throw InvalidInput("abelian group: free factors (0) must be listed last");
    if (k > 0 && factors[k - 1] != 0 && v % factors[k - 1] != 0) {
      throw InvalidInput("abelian group rule divisibility chain violated: " + to_string(factors[k - 1]) +
                         " does not divide " + to_string(v));
    }
  }
}

FinAbDesc FinAbDesc::from_cyclic_orders(std::vector<BigInt> orders) {
  std::vector<BigInt> finite;
  std::size_t zeros = 0;
  for (auto& o : orders) {
    if (o < 0) throw InvalidInput("abelian group: cyclic orders must be non-negative");
    if (o == 0)
      ++zeros;
    else if (o != 1)
      finite.push_back(o);
  }
  for (std::size_t i = 0; i < finite.size(); ++i)
    for (std::size_t j = i + 1; j < finite.size(); ++j) {
      BigInt g = gcd(finite[i], finite[j]);
      BigInt l = finite[i] / g * finite[j];
      finite[i] = g;
      finite[j] = l;
    }
  std::vector<BigInt> out;
  for (auto& v : finite)
    if (v != 1) out.push_back(v);
  for (std::size_t z = 0; z < zeros; ++z) out.push_back(0);
  return FinAbDesc(std::move(out));
}

bool FinAbDesc::is_finite() const { return free_rank() == 0; }

std::size_t FinAbDesc::free_rank() const {
  return static_cast<std::size_t>(std::count(factors.begin(), factors.end(), BigInt(0)));
}

BigInt FinAbDesc::order() const {
  BigInt o = 1;
  for (auto& v : factors) o *= v;
  return o;
}

BigInt FinAbDesc::exponent() const {
  BigInt e = 1;
  for (auto& v : factors) {
    if (v == 0) return 0;
    e = lcm(e, v);
  }
  return e;
}

std::vector<BigInt> FinAbDesc::torsion() const {
  std::vector<BigInt> t;
  for (auto& v : factors)
    if (v != 0) t.push_back(v);
  return t;
}

std::string to_string(const FinAbDesc& a) {
  if (a.factors.empty()) return "trivial";
  std::string s;
  for (std::size_t k = 0; k < a.factors.size(); ++k) {
    if (k) s += " + ";
    s += a.factors[k] == 0 ? "Z" : "Z/" + to_string(a.factors[k]);
  }
  return s;
}

// ===========================================================================
// Heisenberg groups

HeisenbergDesc::HeisenbergDesc(std::vector<BigInt> d_, BigInt central_mod_, BigInt bc_mod_)
    : d(std::move(d_)), central_mod(std::move(central_mod_)), bc_mod(std::move(bc_mod_)) {
  if (d.empty()) throw InvalidInput("heisenberg: d must be non-empty");
  for (std::size_t k = 0; k < d.size(); ++k) {
    if (d[k] <= 0) throw InvalidInput("heisenberg: d_i must be positive");
    if (k > 0 && d[k] % d[k - 1] != 0) throw InvalidInput("heisenberg rule divisibility chain on d violated");
  }
  if (central_mod < 0 || bc_mod < 0) throw InvalidInput("heisenberg: moduli must be non-negative");
  if (bc_mod > 0) {
    if (central_mod == 0) throw InvalidInput("heisenberg: a b,c modulus needs a central modulus");
    for (auto& di : d)
      if ((di * bc_mod) % central_mod != 0)
        throw InvalidInput("heisenberg rule central_mod | d_i * bc_mod violated");
  }
}

HeisElement heis_identity(const HeisenbergDesc& d) {
  return {0, std::vector<BigInt>(d.rank(), 0), std::vector<BigInt>(d.rank(), 0)};
}

HeisElement heis_reduce(const HeisenbergDesc& d, HeisElement x) {
  if (x.b.size() != d.rank() || x.c.size() != d.rank()) throw InvalidInput("heisenberg: coordinate length mismatch");
  if (d.central_mod > 0) x.a = floor_mod(x.a, d.central_mod);
  if (d.bc_mod > 0) {
    for (auto& v : x.b) v = floor_mod(v, d.bc_mod);
    for (auto& v : x.c) v = floor_mod(v, d.bc_mod);
  }
  return x;
}

HeisElement heis_mul(const HeisenbergDesc& d, const HeisElement& x, const HeisElement& y) {
  const std::size_t n = d.rank();
  if (x.b.size() != n || x.c.size() != n || y.b.size() != n || y.c.size() != n)
    throw InvalidInput("heisenberg: coordinate length mismatch");
  HeisElement z;
  z.a = x.a + y.a;
  z.b.resize(n);
  z.c.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    z.a += d.d[k] * y.b[k] * x.c[k];
    z.b[k] = x.b[k] + y.b[k];
    z.c[k] = x.c[k] + y.c[k];
  }
  return heis_reduce(d, std::move(z));
}

HeisElement heis_inv(const HeisenbergDesc& d, const HeisElement& x) {
  HeisElement z;
  z.a = -x.a;
  for (std::size_t k = 0; k < d.rank(); ++k) {
    z.a += d.d[k] * x.b[k] * x.c[k];
    z.b.push_back(-x.b[k]);
    z.c.push_back(-x.c[k]);
  }
  return heis_reduce(d, std::move(z));
}

// ===========================================================================
// Presentations

void Presentation::validate() const {
  for (const auto& rel : relators)
    for (const auto& s : rel)
      if (s.gen >= generators.size())
        throw InvalidInput("presentation: relator references undeclared generator " + std::to_string(s.gen));
}

std::string Presentation::to_string() const {
  std::ostringstream os;
  os << "<";
  for (std::size_t k = 0; k < generators.size(); ++k) os << (k ? "," : "") << generators[k];
  os << " |";
  for (std::size_t k = 0; k < relators.size(); ++k) {
    os << (k ? ", " : " ");
    for (std::size_t s = 0; s < relators[k].size(); ++s) {
      const auto& syl = relators[k][s];
      os << (s ? " " : "") << generators[syl.gen];
      if (syl.exp != 1) os << "^" << schur::to_string(syl.exp);
    }
  }
  os << ">";
  return os.str();
}

bool relators_hold(const FiniteGroupTable& t, const Presentation& p, const std::vector<Elem>& images) {
  p.validate();
  if (images.size() != p.generators.size()) throw InvalidInput("presentation: wrong number of generator images");
  for (const auto& rel : p.relators) {
    Elem acc = t.identity();
    for (const auto& s : rel) {
      i64 ord = static_cast<i64>(t.element_order(images[s.gen]));
      i64 e = static_cast<i64>(floor_mod(s.exp, ord));
      acc = t.mul(acc, t.pow(images[s.gen], e));
    }
    if (acc != t.identity()) return false;
  }
  return true;
}

// ===========================================================================
// Finite instantiation

namespace {
void check_cap(const BigInt& order, std::size_t cap) {
  if (order > cap) {
    throw CapExceeded("group order " + to_string(order) + " exceeds the table cap " + std::to_string(cap));
  }
}
}  // namespace

Elem mc_table_index(const MetacyclicDesc& d, const MetacyclicElement& x) {
  MetacyclicElement y = mc_reduce(d, x);
  return static_cast<Elem>(to_u64(y.j * d.m + y.i));
}

FiniteGroupTable finite_table_of(const MetacyclicDesc& d, std::size_t cap) {
  if (!d.is_finite()) throw InvalidInput("metacyclic group G(" + to_string(d.m) + "," + to_string(d.n) + "," + to_string(d.r) + ") is infinite");
  check_cap(d.m * d.n, cap);
  const std::size_t m = static_cast<std::size_t>(d.m), n = static_cast<std::size_t>(d.n), order = m * n;
  std::vector<MetacyclicElement> elems(order);
  std::vector<std::string> labels(order);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < m; ++i) {
      elems[j * m + i] = {BigInt(i), BigInt(j)};
      labels[j * m + i] = mc_label(elems[j * m + i]);
    }
  std::vector<std::size_t> rpow(n);  // r^j mod m
  for (std::size_t j = 0; j < n; ++j) rpow[j] = static_cast<std::size_t>(mc_twist(d, BigInt(j)));
  std::vector<Elem> mult(order * order);
  for (std::size_t x = 0; x < order; ++x)
    for (std::size_t y = 0; y < order; ++y) {
      std::size_t i1 = x % m, j1 = x / m, i2 = y % m, j2 = y / m;
      std::size_t i = (i1 + i2 * rpow[j1]) % m, j = (j1 + j2) % n;
      mult[x * order + y] = static_cast<Elem>(j * m + i);
    }
  return FiniteGroupTable(order, std::move(mult), std::move(labels));
}

FiniteGroupTable finite_table_of(const FinAbDesc& d, std::size_t cap) {
  if (!d.is_finite()) throw InvalidInput("abelian group " + to_string(d) + " is infinite");
  check_cap(d.order(), cap);
  std::vector<std::size_t> f;
  for (auto& v : d.factors) f.push_back(static_cast<std::size_t>(v));
  const std::size_t order = static_cast<std::size_t>(d.order());
  std::vector<std::vector<std::size_t>> coords(order, std::vector<std::size_t>(f.size()));
  std::vector<std::string> labels(order);
  for (std::size_t x = 0; x < order; ++x) {
    std::size_t rem = x;
    for (std::size_t k = f.size(); k-- > 0;) {
      coords[x][k] = rem % f[k];
      rem /= f[k];
    }
    std::string s = "(";
    for (std::size_t k = 0; k < f.size(); ++k) s += (k ? "," : "") + std::to_string(coords[x][k]);
    labels[x] = s + ")";
  }
  std::vector<Elem> mult(order * order);
  for (std::size_t x = 0; x < order; ++x)
    for (std::size_t y = 0; y < order; ++y) {
      std::size_t idx = 0;
      for (std::size_t k = 0; k < f.size(); ++k) idx = idx * f[k] + (coords[x][k] + coords[y][k]) % f[k];
      mult[x * order + y] = static_cast<Elem>(idx);
    }
  return FiniteGroupTable(order, std::move(mult), std::move(labels));
}

FiniteGroupTable finite_table_of(const HeisenbergDesc& d, std::size_t cap) {
  if (!d.is_finite()) throw InvalidInput("heisenberg group is infinite (needs central and b,c moduli)");
  const std::size_t n = d.rank();
  BigInt order_big = d.central_mod * pow_exact(d.bc_mod, 2 * n);
  check_cap(order_big, cap);
  const std::size_t order = static_cast<std::size_t>(order_big);
  const std::size_t cm = static_cast<std::size_t>(d.central_mod), k = static_cast<std::size_t>(d.bc_mod);
  std::vector<HeisElement> elems(order);
  std::vector<std::string> labels(order);
  auto encode = [&](const HeisElement& e) {
    std::size_t idx = static_cast<std::size_t>(e.a);
    for (std::size_t q = 0; q < n; ++q) idx = idx * k + static_cast<std::size_t>(e.b[q]);
    for (std::size_t q = 0; q < n; ++q) idx = idx * k + static_cast<std::size_t>(e.c[q]);
    return idx;
  };
  for (std::size_t x = 0; x < order; ++x) {
    std::size_t rem = x;
    HeisElement e{0, std::vector<BigInt>(n), std::vector<BigInt>(n)};
    for (std::size_t q = n; q-- > 0;) {
      e.c[q] = rem % k;
      rem /= k;
    }
    for (std::size_t q = n; q-- > 0;) {
      e.b[q] = rem % k;
      rem /= k;
    }
    e.a = rem % cm;
    std::string s = "(" + to_string(e.a) + ";";
    for (std::size_t q = 0; q < n; ++q) s += (q ? "," : "") + to_string(e.b[q]);
    s += ";";
    for (std::size_t q = 0; q < n; ++q) s += (q ? "," : "") + to_string(e.c[q]);
    labels[x] = s + ")";
    elems[x] = std::move(e);
  }
  std::vector<Elem> mult(order * order);
  for (std::size_t x = 0; x < order; ++x)
    for (std::size_t y = 0; y < order; ++y) mult[x * order + y] = static_cast<Elem>(encode(heis_mul(d, elems[x], elems[y])));
  return FiniteGroupTable(order, std::move(mult), std::move(labels));
}

}  // namespace schur

#include "schur/repgroup.hpp"

#include <algorithm>
#include <numeric>

namespace schur {

RepGroup::RepGroup(TablePtr base, std::vector<u64> moduli, std::vector<std::vector<u64>> t)
    : base_(std::move(base)), moduli_(std::move(moduli)), t_(std::move(t)) {
  if (!base_) throw InvalidInput("RepGroup: missing base group");
  if (t_.size() != moduli_.size()) throw InvalidInput("RepGroup: one t table per modulus is required");
  const std::size_t g = base_->order();
  const Elem e = base_->identity();
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    if (moduli_[i] < 2) throw InvalidInput("RepGroup: factor moduli must be at least 2");
    if (a_order_ > kRepGroupCap * kRepGroupCap / moduli_[i]) throw CapExceeded("RepGroup: |A| too large");
    a_order_ *= moduli_[i];
    if (t_[i].size() != g * g) throw InvalidInput("RepGroup: t table " + std::to_string(i) + " has the wrong size");
    for (u64 v : t_[i])
      if (v >= moduli_[i]) throw InvalidInput("RepGroup: t table " + std::to_string(i) + " has an unreduced entry");
    for (Elem x = 0; x < g; ++x)
      if (t_[i][static_cast<std::size_t>(e) * g + x] != 0 || t_[i][static_cast<std::size_t>(x) * g + e] != 0)
        throw InvalidInput("RepGroup: t table " + std::to_string(i) + " is not normalized");
  }
}

FinAbDesc RepGroup::h2() const {
  std::vector<BigInt> orders(moduli_.begin(), moduli_.end());
  return FinAbDesc::from_cyclic_orders(std::move(orders));
}

std::vector<u64> RepGroup::a_coords(std::size_t a) const {
  std::vector<u64> c(moduli_.size());
  for (std::size_t i = moduli_.size(); i-- > 0;) {
    c[i] = a % moduli_[i];
    a /= moduli_[i];
  }
  return c;
}

std::size_t RepGroup::a_index(const std::vector<u64>& coords) const {
  if (coords.size() != moduli_.size()) throw InvalidInput("RepGroup: coordinate vector has the wrong length");
  std::size_t a = 0;
  for (std::size_t i = 0; i < moduli_.size(); ++i) a = a * moduli_[i] + coords[i] % moduli_[i];
  return a;
}

Elem RepGroup::mul(Elem x, Elem y) const {
  const std::size_t g = base_->order();
  const Elem gx = base_of(x), gy = base_of(y);
  std::size_t ax = a_of(x), ay = a_of(y), out = 0, place = 1;
  for (std::size_t i = moduli_.size(); i-- > 0;) {
    const u64 r = moduli_[i];
    const u64 v = (ax % r + ay % r + t_[i][static_cast<std::size_t>(gx) * g + gy]) % r;
    out += v * place;
    place *= r;
    ax /= r;
    ay /= r;
  }
  return encode(base_->mul(gx, gy), out);
}

namespace {

std::string element_label(const RepGroup& r, Elem x) {
  std::string s = "(" + r.base()->label(r.base_of(x)) + ",[";
  auto c = r.a_coords(r.a_of(x));
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
  return s + "])";
}

u64 a_exponent(const std::vector<u64>& moduli) {
  u64 L = 1;
  for (u64 r : moduli) L = lcm64(L, r);
  return L;
}

}  // namespace

TablePtr RepGroup::table(std::size_t cap) const {
  const std::size_t n = order();
  if (n > cap)
    throw CapExceeded("representation group order " + std::to_string(n) + " exceeds the cap " + std::to_string(cap));
  std::vector<Elem> mult(n * n);
  std::vector<std::string> labels(n);
  for (Elem x = 0; x < n; ++x) {
    labels[x] = element_label(*this, x);
    for (Elem y = 0; y < n; ++y) mult[static_cast<std::size_t>(x) * n + y] = mul(x, y);
  }
  return std::make_shared<const FiniteGroupTable>(n, std::move(mult), std::move(labels));
}

CentralExtensionData RepGroup::extension(std::size_t cap) const {
  CentralExtensionData ext;
  ext.total = table(cap);
  ext.quotient = base_;
  const Elem e = base_->identity();
  for (std::size_t a = 0; a < a_order_; ++a) ext.central.push_back(encode(e, a));
  ext.section.resize(base_->order());
  for (Elem g = 0; g < base_->order(); ++g) ext.section[g] = encode(g, 0);
  ext.projection.resize(order());
  for (Elem x = 0; x < order(); ++x) ext.projection[x] = base_of(x);
  return ext;
}

AChar RepGroup::character(const std::vector<u64>& c) const {
  if (c.size() != moduli_.size()) throw InvalidInput("RepGroup: character vector has the wrong length");
  AChar chi;
  chi.N = a_exponent(moduli_);
  chi.values.resize(a_order_);
  for (std::size_t a = 0; a < a_order_; ++a) {
    auto coords = a_coords(a);
    u64 v = 0;
    for (std::size_t i = 0; i < c.size(); ++i)
      v = (v + (c[i] % moduli_[i]) * coords[i] % moduli_[i] * (chi.N / moduli_[i])) % chi.N;
    chi.values[a] = v;
  }
  return chi;
}

RepGroup repgroup_from_xi(const XiData& xi) {
  std::vector<u64> moduli;
  std::vector<std::vector<u64>> t;
  for (const TTable& tt : xi.t) {
    if (tt.modulus <= 0) throw InvalidInput("repgroup: H_2 has a free factor");
    moduli.push_back(to_u64(tt.modulus));
    std::vector<u64> vals(tt.values.size());
    for (std::size_t k = 0; k < vals.size(); ++k) vals[k] = static_cast<u64>(mod_floor(tt.values[k], to_i64(tt.modulus)));
    t.push_back(std::move(vals));
  }
  return RepGroup(xi.group, std::move(moduli), std::move(t));
}

RepGroup build_repgroup(TablePtr base, std::size_t cap) { return repgroup_from_xi(xi_extract(std::move(base), cap)); }

bool RepGroupReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const VerifyCheck& c) { return c.pass; });
}

const VerifyCheck& RepGroupReport::check(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return c;
  throw InvalidInput("no check named '" + name + "'");
}

namespace {

VerifyCheck check_associativity(const RepGroup& r, u64 seed) {
  VerifyCheck c{"associativity", true, 0, ""};
  const std::size_t n = r.order();
  auto test = [&](Elem x, Elem y, Elem z) {
    ++c.checked;
    if (r.mul(r.mul(x, y), z) == r.mul(x, r.mul(y, z))) return true;
    c.pass = false;
    c.witness = "(xy)z != x(yz) for x=" + element_label(r, x) + ", y=" + element_label(r, y) +
                ", z=" + element_label(r, z);
    return false;
  };
  if (n <= kExhaustiveAssociativity) {
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y)
        for (Elem z = 0; z < n; ++z)
          if (!test(x, y, z)) return c;
  } else {
    Rng rng(seed);
    for (std::size_t s = 0; s < kSampledTriples; ++s) {
      Elem x = static_cast<Elem>(rng.index(n)), y = static_cast<Elem>(rng.index(n)), z = static_cast<Elem>(rng.index(n));
      if (!test(x, y, z)) return c;
    }
  }
  return c;
}

VerifyCheck check_cocycle_identity(const RepGroup& r) {
  VerifyCheck c{"cocycle_identity", true, 0, ""};
  const FiniteGroupTable& b = *r.base();
  const std::size_t g = b.order();
  for (std::size_t i = 0; i < r.moduli().size(); ++i) {
    const auto& t = r.t(i);
    const u64 m = r.moduli()[i];
    for (Elem x = 0; x < g; ++x)
      for (Elem y = 0; y < g; ++y)
        for (Elem z = 0; z < g; ++z) {
          ++c.checked;
          u64 lhs = (t[x * g + y] + t[b.mul(x, y) * g + z]) % m;
          u64 rhs = (t[x * g + b.mul(y, z)] + t[y * g + z]) % m;
          if (lhs != rhs) {
            c.pass = false;
            c.witness = "t_" + std::to_string(i) + " fails at (" + b.label(x) + ", " + b.label(y) + ", " + b.label(z) + ")";
            return c;
          }
        }
  }
  return c;
}

VerifyCheck check_central(const RepGroup& r) {
  VerifyCheck c{"central", true, 0, ""};
  const Elem e = r.base()->identity();
  for (std::size_t a = 0; a < r.a_order(); ++a) {
    const Elem z = r.encode(e, a);
    for (Elem x = 0; x < r.order(); ++x) {
      ++c.checked;
      if (r.mul(z, x) != r.mul(x, z)) {
        c.pass = false;
        c.witness = element_label(r, z) + " does not commute with " + element_label(r, x);
        return c;
      }
    }
  }
  return c;
}

VerifyCheck not_evaluated(const std::string& name, const std::string& why) { return {name, false, 0, "not evaluated: " + why}; }

}  // namespace

RepGroupReport verify_repgroup(const RepGroup& r, u64 seed) {
  RepGroupReport rep;
  rep.order = r.order();
  rep.a_order = r.a_order();

  VerifyCheck assoc = check_associativity(r, seed);
  VerifyCheck ident = check_cocycle_identity(r);
  VerifyCheck agree{"law_matches_cocycle_identity", assoc.pass == ident.pass, 1, ""};
  if (!agree.pass)
    agree.witness = std::string("associativity ") + (assoc.pass ? "holds" : "fails") + " but the cocycle identity " +
                    (ident.pass ? "holds" : "fails");
  const bool is_group = assoc.pass && ident.pass;
  rep.checks.push_back(std::move(assoc));
  rep.checks.push_back(std::move(ident));
  rep.checks.push_back(std::move(agree));
  rep.checks.push_back(check_central(r));

  if (!is_group) {
    rep.checks.push_back(not_evaluated("a_in_derived", "the product is not associative"));
    rep.checks.push_back(not_evaluated("transgression_injective", "the product is not associative"));
    rep.checks.push_back(not_evaluated("class_count", "the product is not associative"));
    return rep;
  }

  CentralExtensionData ext = r.extension();
  ext.validate();

  VerifyCheck derived{"a_in_derived", true, 0, ""};
  if (r.a_order() > 1) {
    Subset d = derived_subgroup(*ext.total);
    std::vector<char> in(ext.total->order(), 0);
    for (Elem x : d) in[x] = 1;
    for (Elem a : ext.central) {
      ++derived.checked;
      if (!in[a]) {
        derived.pass = false;
        derived.witness = element_label(r, a) + " is not in the derived subgroup";
        break;
      }
    }
  }
  rep.checks.push_back(std::move(derived));

  // Transgression of every character, then pairwise distinctness of classes.
  std::vector<std::vector<u64>> chars;
  std::vector<TableCocycle> tra;
  for (std::size_t a = 0; a < r.a_order(); ++a) {
    chars.push_back(r.a_coords(a));  // Hom(A, C^x) ~ A through chi_c
    tra.push_back(transgression(ext, r.character(chars.back())));
  }
  const CoboundarySolver solver(r.base(), a_exponent(r.moduli()));
  VerifyCheck inj{"transgression_injective", true, 0, ""};
  for (std::size_t i = 0; i < tra.size() && inj.pass; ++i)
    for (std::size_t j = i + 1; j < tra.size(); ++j) {
      ++inj.checked;
      if (solver.solve(tra[i] * tra[j].inverse()).trivial) {
        inj.pass = false;
        inj.witness = "characters " + std::to_string(i) + " and " + std::to_string(j) + " transgress to the same class";
        break;
      }
    }
  rep.checks.push_back(std::move(inj));

  const FinAbDesc h2 = r.base()->order() <= kBruteforceCap ? h2_bruteforce(*r.base()) : h2_integral(*r.base());
  const BigInt expected = h2.order();
  VerifyCheck count{"class_count", BigInt(r.a_order()) == expected, 1, ""};
  if (!count.pass)
    count.witness = std::to_string(r.a_order()) + " classes from transgression, |H^2| = " + to_string(expected);
  rep.checks.push_back(std::move(count));
  return rep;
}

RepGroup corrupted_copy(const RepGroup& r, u64 seed) {
  const FiniteGroupTable& b = *r.base();
  if (r.moduli().empty()) throw InvalidInput("corrupted_copy: H_2 is trivial, there is no t table to corrupt");
  if (b.order() < 3) throw InvalidInput("corrupted_copy: needs |G| >= 3");
  Rng rng(seed);
  std::vector<std::vector<u64>> t;
  for (std::size_t i = 0; i < r.moduli().size(); ++i) t.push_back(r.t(i));
  const std::size_t i = rng.index(t.size());
  auto pick = [&] {
    Elem x;
    do x = static_cast<Elem>(rng.index(b.order()));
    while (x == b.identity());
    return x;
  };
  const Elem x = pick(), y = pick();
  auto& v = t[i][static_cast<std::size_t>(x) * b.order() + y];
  v = (v + 1) % r.moduli()[i];
  return RepGroup(r.base(), r.moduli(), std::move(t));
}

// ===========================================================================
// Metacyclic Schur cover

MetacoverDesc metacover(const BigInt& m, const BigInt& r) {
  if (m <= 0) throw InvalidInput("metacover needs m > 0");
  MetacoverDesc d;
  d.m = m;
  d.r = r;
  d.base = MetacyclicDesc(m, 0, r);
  d.t = gcd(m, r - 1);
  // t | r - 1 gives gcd(r, t) = 1, so gcd(r, mt) = 1 follows from gcd(r, m) = 1.
  if (gcd(r, m * d.t) != 1) throw CheckFailed("metacover: gcd(r, mt) != 1");
  d.cover = MetacyclicDesc(m * d.t, 0, r);
  d.presentation.generators = {"a", "b"};
  d.presentation.relators = {
      {{0, BigInt(m * d.t)}},
      {{0, 1}, {1, 1}, {0, -1}, {1, -1}, {0, BigInt(r - 1)}},
  };
  d.presentation.validate();
  return d;
}

MetacyclicElement metacover_project(const MetacoverDesc& d, const MetacyclicElement& x) { return mc_reduce(d.base, x); }

bool metacover_in_a(const MetacoverDesc& d, const MetacyclicElement& x) {
  MetacyclicElement y = mc_reduce(d.cover, x);
  return y.j == 0 && floor_mod(y.i, d.m) == 0;
}

MetacoverReport verify_metacover(const MetacoverDesc& d, std::size_t samples, u64 seed) {
  MetacoverReport rep;
  rep.samples = samples;
  auto note = [&](const std::string& w) {
    if (rep.witness.empty()) rep.witness = w;
  };

  rep.central_relation = mc_commutator_power(d.cover, d.m, 1) == 0 && mc_commutator_power(d.cover, d.m, -1) == 0;
  if (!rep.central_relation) note("[a^m, b] != 1 in the cover");
  rep.a_order_ok = d.cover.m / gcd(d.m, d.cover.m) == d.t;
  if (!rep.a_order_ok) note("a^m does not have order t");

  Rng rng(seed);
  const MetacyclicElement one = mc_identity();
  rep.projection_ok = true;
  rep.kernel_ok = true;
  for (std::size_t s = 0; s < samples; ++s) {
    MetacyclicElement x = sample_metacyclic(d.cover, rng), y = sample_metacyclic(d.cover, rng);
    if (metacover_project(d, mc_mul(d.cover, x, y)) !=
        mc_mul(d.base, metacover_project(d, x), metacover_project(d, y))) {
      rep.projection_ok = false;
      note("projection is not multiplicative at " + mc_label(x) + ", " + mc_label(y));
    }
    MetacyclicElement z = sample_metacyclic(d.base, rng);
    if (metacover_project(d, z) != z) {
      rep.projection_ok = false;
      note("base element " + mc_label(z) + " is not hit by its canonical lift");
    }
    // Elements near A: a^{km + e} b^j with small e and j.
    MetacyclicElement w{d.m * rng.uniform(-kSampleBound, kSampleBound) + rng.uniform(0, 1), rng.uniform(0, 1)};
    w = mc_reduce(d.cover, w);
    if ((metacover_project(d, w) == one) != metacover_in_a(d, w)) {
      rep.kernel_ok = false;
      note("kernel membership disagrees with A at " + mc_label(w));
    }
  }
  return rep;
}

u64 InflationWitness::mu(const MetacyclicElement& x) const {
  const i64 M = static_cast<i64>(N);
  const i64 i = to_i64(floor_mod(x.i, BigInt(M)));
  const i64 y = to_i64(floor_mod(alpha.y, BigInt(M)));
  return static_cast<u64>(mul_mod(mul_mod(static_cast<i64>(delta_exp), i, M), y, M));
}

u64 InflationWitness::coboundary(const MetacyclicElement& x, const MetacyclicElement& y) const {
  const u64 xy = mu(mc_mul(cover.cover, x, y));
  return (xy + 2 * N - mu(x) - mu(y)) % N;
}

u64 InflationWitness::inflated(const MetacyclicElement& x, const MetacyclicElement& y) const {
  const u64 t = to_u64(cover.t);
  const u64 v = alpha.eval(metacover_project(cover, x), metacover_project(cover, y));
  return v * (N / t) % N;
}

InflationWitness inflation_witness(const BigInt& m, const BigInt& r, u64 lambda_exp) {
  InflationWitness w;
  w.cover = metacover(m, r);
  w.alpha = metacyclic_cocycle(m, r, lambda_exp);
  const BigInt mt = w.cover.cover.m;
  if (mt >= BigInt(kWitnessModulusCap))
    throw CapExceeded("inflation_witness: mt = " + to_string(mt) + " exceeds 2^31");
  w.N = to_u64(mt);
  // delta^t = zeta_t^lambda_exp; smallest non-negative exponent is lambda_exp * m / t.
  w.delta_exp = to_u64(BigInt(lambda_exp) * (m / w.cover.t));
  return w;
}

SampledAgreement verify_inflation_witness(const InflationWitness& w, std::size_t samples, u64 seed) {
  SampledAgreement res;
  Rng rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    MetacyclicElement x = sample_metacyclic(w.cover.cover, rng), y = sample_metacyclic(w.cover.cover, rng);
    ++res.checked;
    const u64 lhs = w.coboundary(x, y), rhs = w.inflated(x, y);
    if (lhs != rhs) {
      res.ok = false;
      res.witness = "delta(mu)(" + mc_label(x) + ", " + mc_label(y) + ") = zeta^" + std::to_string(lhs) +
                    " but the inflated cocycle gives zeta^" + std::to_string(rhs) + " (modulus " + std::to_string(w.N) + ")";
      return res;
    }
  }
  return res;
}

}  // namespace schur

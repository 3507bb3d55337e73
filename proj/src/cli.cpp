#include "schur/cli.hpp"

#include "schur/alphafinite.hpp"
#include "schur/corpus.hpp"
#include "schur/groupspec.hpp"
#include "schur/homology.hpp"
#include "schur/projrep.hpp"
#include "schur/repgroup.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <functional>
#include <limits>
#include <iostream>
#include <optional>
#include <sstream>

namespace schur {

namespace {

using json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// JSON helpers

json big(const BigInt& v) {
  if (v >= std::numeric_limits<i64>::min() && v <= std::numeric_limits<i64>::max()) return static_cast<i64>(v);
  return to_string(v);
}

json factors_json(const FinAbDesc& a) {
  json arr = json::array();
  for (const auto& f : a.factors) arr.push_back(big(f));
  return arr;
}

json monomial_json(const MonomialMatrix& m) {
  return json{{"perm", m.perm}, {"exps", m.exps}, {"N", m.N}};
}

json rep_matrices(const ProjRep& rho) {
  json arr = json::array();
  const auto& g = *rho.group();
  for (Elem x = 0; x < g.order(); ++x) {
    json e{{"element", g.label(x)}};
    if (rho.is_monomial()) {
      e["matrix"] = monomial_json(rho.monomial(x));
    } else {
      json rows = json::array();
      const Eigen::MatrixXcd m = rho.matrix(x);
      for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
        rows.push_back(row);
      }
      e["matrix"] = rows;
    }
    arr.push_back(e);
  }
  return arr;
}

json char_json(const SubgroupChar& psi, const FiniteGroupTable& g) {
  json labels = json::array();
  for (Elem h : psi.H) labels.push_back(g.label(h));
  return json{{"subgroup", psi.H}, {"labels", labels}, {"N", psi.N}, {"exps", psi.exps}};
}

json report_json(const AlphaFiniteReport& r) {
  json j{{"group", r.group},
         {"verdict", r.verdict},
         {"witness_subgroup", r.witness_subgroup},
         {"index", r.index ? big(*r.index) : json(nullptr)},
         {"class_order", r.class_order ? big(*r.class_order) : json(nullptr)},
         {"sufficient_condition_met", r.sufficient_condition_met},
         {"nilpotent", r.nilpotent ? json(*r.nilpotent) : json(nullptr)},
         {"paper_equivalence_flag", r.paper_equivalence_flag ? json(*r.paper_equivalence_flag) : json(nullptr)},
         {"notes", r.notes}};
  return j;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  if (s.empty()) return out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

std::vector<BigInt> parse_int_list(const std::string& s, const std::string& what) {
  std::vector<BigInt> out;
  for (const auto& part : split(s, ',')) {
    try {
      out.push_back(parse_bigint(part));
    } catch (const InvalidInput&) {
      throw InvalidInput(what + ": '" + part + "' is not an integer");
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Command state

struct Context {
  u64 seed = kDefaultSeed;
  std::optional<std::size_t> max_order;
  std::size_t bar_cap() const { return max_order.value_or(kDefaultBarCap); }
  std::size_t table_cap() const { return max_order.value_or(kDefaultTableCap); }
};

struct Command {
  std::string name;
  json inputs = json::object();
  json result = json::object();
  json checks = json::array();

  void check(const std::string& n, bool pass, std::size_t checked = 0, const std::string& witness = "") {
    checks.push_back(json{{"name", n}, {"pass", pass}, {"checked", checked}, {"witness", witness}});
  }
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c["pass"].get<bool>()) return false;
    return true;
  }
};

// A cohomology class of G picked by a character c of A = H_2(G), realised by
// the transgression through the representation group.
struct ClassChoice {
  std::optional<RepGroup> rep;
  std::optional<CentralExtensionData> ext;
  std::optional<AChar> chi;
  std::vector<u64> c;
  TableCocycle alpha;
};

std::vector<u64> parse_class(const std::string& text, const RepGroup& r) {
  std::vector<u64> c(r.moduli().size(), 0);
  if (text.empty()) return c;
  const auto vals = parse_int_list(text, "--class");
  if (vals.size() != c.size())
    throw InvalidInput("--class needs " + std::to_string(c.size()) + " entries, one per invariant factor of H2");
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (vals[i] < 0 || vals[i] >= r.moduli()[i])
      throw InvalidInput("--class entry " + std::to_string(i) + " must lie in [0, " + std::to_string(r.moduli()[i]) + ")");
    c[i] = static_cast<u64>(vals[i]);
  }
  return c;
}

ClassChoice choose_class(const TablePtr& g, const std::string& class_text, bool need_ext, const Context& ctx) {
  if (class_text.empty() && !need_ext) return ClassChoice{{}, {}, {}, {}, TableCocycle::trivial(g)};
  RepGroup r = build_repgroup(g, ctx.bar_cap());
  CentralExtensionData ext = r.extension();
  std::vector<u64> c = parse_class(class_text, r);
  AChar chi = r.character(c);
  TableCocycle alpha = transgression(ext, chi);
  return ClassChoice{std::move(r), std::move(ext), std::move(chi), std::move(c), std::move(alpha)};
}

Subset parse_subgroup(const std::string& text, const FiniteGroupTable& g) {
  std::vector<Elem> gens;
  for (const auto& v : parse_int_list(text, "--subgroup")) {
    if (v < 0 || v >= g.order()) throw InvalidInput("--subgroup element " + to_string(v) + " is not an element index");
    gens.push_back(static_cast<Elem>(v));
  }
  return generated_subgroup(g, gens);
}

SubgroupChar pick_psi(const TableCocycle& alpha, const Subset& H, std::size_t k) {
  const auto psis = alpha_characters(alpha, H);
  if (psis.empty())
    throw InvalidInput("the cocycle restricted to the subgroup is not a coboundary; it has no one-dimensional "
                       "projective representations");
  if (k >= psis.size())
    throw InvalidInput("--psi " + std::to_string(k) + " out of range: the subgroup has " + std::to_string(psis.size()) +
                       " one-dimensional representations");
  return psis[k];
}

bool is_example1_heisenberg(const GroupSpec& s) {
  return s.kind == GroupSpec::Kind::Heisenberg && s.heis.d.size() == 1 && s.heis.d[0] == 1 && s.heis.central_mod > 0 &&
         s.heis.bc_mod == 0;
}

void add_shift_report(Command& cmd, const ShiftWindowData& data, const ShiftWindowReport& rep) {
  cmd.result["phi"] = data.phi;
  cmd.result["beta_coordinate"] = data.beta_coordinate;
  cmd.result["W"] = data.W;
  cmd.result["lambda"] = data.lambda ? json{{"N", data.lambda->N}, {"e", data.lambda->e}} : json("not a root of unity");
  cmd.result["indices"] = rep.indices;
  cmd.result["excluded_indices"] = rep.excluded_indices;
  cmd.result["notes"] = rep.notes;
  for (const auto& c : rep.checks) {
    cmd.check(c.name, c.pass, c.checked, c.note);
    cmd.checks.back()["vacuous"] = c.vacuous;
  }
}

// ---------------------------------------------------------------------------
// Subcommands

void cmd_multiplier(Command& cmd, const GroupSpec& spec, const Context& ctx) {
  using K = GroupSpec::Kind;
  std::optional<FinAbDesc> closed;
  if (spec.kind == K::FinAb) closed = multiplier_finab(spec.fab);
  if (spec.kind == K::Metacyclic && !spec.mc.is_finite()) closed = multiplier_metacyclic(spec.mc);
  if (closed) {
    cmd.result["invariant_factors"] = factors_json(*closed);
    cmd.result["method"] = "closed_form";
    if (spec.is_finite() && spec.order() <= ctx.bar_cap()) {
      const FinAbDesc bar = h2_integral(*spec.instantiate(ctx.bar_cap()), ctx.bar_cap());
      cmd.check("bar_complex_agrees", bar == *closed, 1, bar == *closed ? "" : "bar complex gives " + to_string(bar));
    }
    return;
  }
  if (!spec.is_finite())
    throw InvalidInput("no multiplier formula for " + spec.to_string() + "; finite groups, abelian groups and "
                       "infinite metacyclic groups are supported");
  const FinAbDesc h2 = h2_integral(*spec.instantiate(ctx.bar_cap()), ctx.bar_cap());
  cmd.result["invariant_factors"] = factors_json(h2);
  cmd.result["method"] = "bar_complex";
}

void cmd_h2(Command& cmd, const GroupSpec& spec, const Context& ctx) {
  const TablePtr g = spec.instantiate(ctx.table_cap());
  cmd.result["order"] = g->order();
  const FinAbDesc integral = h2_integral(*g, ctx.bar_cap());
  cmd.result["h2_integral"] = factors_json(integral);
  cmd.check("bar_d2_d3_vanishes", bar_composition_vanishes(*g, ctx.bar_cap()), 1);
  if (g->order() <= kBruteforceCap) {
    try {
      const FinAbDesc brute = h2_bruteforce(*g);
      cmd.result["h2_bruteforce"] = factors_json(brute);
      cmd.check("bruteforce_agrees", brute == integral, 1);
    } catch (const CheckFailed& e) {
      cmd.result["h2_bruteforce"] = nullptr;
      cmd.check("bruteforce_agrees", false, 1, e.what());
    }
  } else {
    cmd.result["h2_bruteforce"] = nullptr;
  }
}

json presentation_json(const Presentation& p) {
  json rels = json::array();
  for (const auto& r : p.relators) {
    json word = json::array();
    for (const auto& s : r) word.push_back(json::array({p.generators[s.gen], big(s.exp)}));
    rels.push_back(word);
  }
  return json{{"generators", p.generators}, {"relators", rels}, {"text", p.to_string()}};
}

void cmd_repgroup(Command& cmd, const GroupSpec& spec, bool verify, std::size_t samples, const Context& ctx) {
  if (spec.kind == GroupSpec::Kind::Metacyclic && !spec.mc.is_finite()) {
    if (spec.mc.m == 0) {
      cmd.result["kind"] = "trivial_multiplier";
      cmd.result["note"] = "the multiplier is trivial, so the group is its own representation group";
      return;
    }
    const MetacoverDesc d = metacover(spec.mc.m, spec.mc.r);
    cmd.result["kind"] = "presentation";
    cmd.result["t"] = big(d.t);
    cmd.result["cover"] = "mc:" + to_string(d.cover.m) + ",0," + to_string(d.cover.r);
    cmd.result["presentation"] = presentation_json(d.presentation);
    cmd.result["central_subgroup"] = "<a^" + to_string(d.m) + ">";
    cmd.result["a_order"] = big(d.t);
    if (verify) {
      const MetacoverReport rep = verify_metacover(d, samples, ctx.seed);
      cmd.check("central_relation", rep.central_relation, 1, rep.central_relation ? "" : rep.witness);
      cmd.check("a_order", rep.a_order_ok, 1, rep.a_order_ok ? "" : rep.witness);
      cmd.check("projection", rep.projection_ok, rep.samples, rep.projection_ok ? "" : rep.witness);
      cmd.check("kernel_in_a", rep.kernel_ok, rep.samples, rep.kernel_ok ? "" : rep.witness);
    }
    return;
  }
  if (!spec.is_finite())
    throw InvalidInput("representation groups are built for finite groups and infinite metacyclic groups");
  const TablePtr g = spec.instantiate(ctx.table_cap());
  const RepGroup r = build_repgroup(g, ctx.bar_cap());
  cmd.result["kind"] = "table";
  cmd.result["order"] = r.order();
  cmd.result["a_order"] = r.a_order();
  cmd.result["h2"] = factors_json(r.h2());
  cmd.result["moduli"] = r.moduli();
  json ts = json::array();
  for (std::size_t i = 0; i < r.moduli().size(); ++i) ts.push_back(r.t(i));
  cmd.result["t"] = ts;
  if (r.order() <= ctx.table_cap())
    cmd.result["table"] = json::parse(table_to_json(*r.table()).dump());
  else
    cmd.result["table"] = nullptr;
  if (verify) {
    const RepGroupReport rep = verify_repgroup(r, ctx.seed);
    for (const auto& c : rep.checks) cmd.check(c.name, c.pass, c.checked, c.witness);
  }
}

void cmd_cocycle(Command& cmd, const GroupSpec& spec, const std::string& class_text, u64 lambda, u64 mu,
                 std::size_t samples, const Context& ctx) {
  if (spec.kind == GroupSpec::Kind::Metacyclic && !spec.mc.is_finite() && spec.mc.m > 0) {
    const MetacyclicCocycle a = metacyclic_cocycle(spec.mc.m, spec.mc.r, lambda);
    cmd.result["family"] = "metacyclic";
    cmd.result["t"] = big(a.t);
    cmd.result["x"] = big(a.x);
    cmd.result["y"] = big(a.y);
    cmd.result["lambda_exp"] = lambda;
    cmd.result["formula"] = "alpha(a^i b^j, a^i1 b^j1) = zeta_t^(lambda_exp * i1 * y * (r^j - 1) / t)";
    const CocycleCheck cc = is_cocycle(a.family(), samples, ctx.seed);
    cmd.check("cocycle_identity", cc.ok, cc.checked, cc.witness);
    const InflationWitness w = inflation_witness(spec.mc.m, spec.mc.r, lambda);
    const SampledAgreement ag = verify_inflation_witness(w, samples, ctx.seed + 1);
    cmd.result["inflation_witness"] = json{{"N", w.N}, {"delta_exp", w.delta_exp}};
    cmd.check("inflation_is_coboundary", ag.ok, ag.checked, ag.witness);
    return;
  }
  if (is_example1_heisenberg(spec)) {
    const u64 n = to_u64(spec.heis.central_mod);
    const Example1Cocycle a = example1_cocycle(n, lambda, mu);
    cmd.result["family"] = "heisenberg";
    cmd.result["n"] = n;
    cmd.result["lambda_exp"] = lambda;
    cmd.result["mu_exp"] = mu;
    const CocycleCheck cc = is_cocycle(a.family(), samples, ctx.seed);
    cmd.check("cocycle_identity", cc.ok, cc.checked, cc.witness);
    return;
  }
  if (!spec.is_finite())
    throw InvalidInput("cocycles are available for finite groups, G(m,0,r) and heis:[1];n");
  const TablePtr g = spec.instantiate(ctx.table_cap());
  const ClassChoice cls = choose_class(g, class_text, true, ctx);
  cmd.result["family"] = "finite";
  cmd.result["class"] = cls.c;
  cmd.result["N"] = cls.alpha.modulus();
  cmd.result["exps"] = cls.alpha.exps();
  cmd.result["class_order"] = class_order(cls.alpha);
  const CocycleCheck cc = is_cocycle(cls.alpha);
  cmd.check("cocycle_identity", cc.ok, cc.checked, cc.witness);
  cmd.check("normalized", cls.alpha.is_normalized(), 1);
}

void cmd_irr(Command& cmd, const GroupSpec& spec, const std::string& class_text, const Context& ctx) {
  const TablePtr g = spec.instantiate(ctx.table_cap());
  const ClassChoice cls = choose_class(g, class_text, !class_text.empty(), ctx);
  const IrrCount ic = count_irr_alpha(cls.alpha, ctx.seed);
  cmd.result["class"] = cls.c;
  cmd.result["count"] = ic.count;
  cmd.result["dims"] = ic.dims;
  std::size_t sq = 0;
  for (std::size_t d : ic.dims) sq += d * d;
  cmd.check("sum_of_squares", sq == g->order(), ic.dims.size(),
            sq == g->order() ? "" : "sum of squares " + std::to_string(sq) + " != |G| = " + std::to_string(g->order()));
  if (cls.ext && cls.rep->order() <= 256) {
    const IrrCount cc = count_irr_central_character(*cls.ext, *cls.chi, ctx.seed);
    cmd.check("central_character_count_agrees", cc.count == ic.count, 1,
              cc.count == ic.count ? "" : "cover gives " + std::to_string(cc.count));
  }
}

void cmd_induce(Command& cmd, const GroupSpec& spec, const std::string& class_text, const std::string& sub_text,
                std::size_t psi_index, const Context& ctx) {
  const TablePtr g = spec.instantiate(ctx.table_cap());
  const ClassChoice cls = choose_class(g, class_text, false, ctx);
  const Subset H = parse_subgroup(sub_text, *g);
  const SubgroupChar psi = pick_psi(cls.alpha, H, psi_index);
  const ProjRep rho = induce(cls.alpha, psi);
  cmd.result["class"] = cls.c;
  cmd.result["psi"] = char_json(psi, *g);
  cmd.result["dim"] = rho.dim();
  cmd.result["cocycle_modulus"] = cls.alpha.modulus();
  cmd.result["commutant_dimension"] = commutant_dimension(rho);
  cmd.result["matrices"] = rep_matrices(rho);
  const RepCheck rc = check_projrep(rho, 10000, ctx.seed);
  cmd.check("projective_relation", rc.ok, rc.checked, rc.witness);
  cmd.check("dimension_is_index", rho.dim() * H.size() == g->order(), 1);
}

void cmd_lift(Command& cmd, const GroupSpec& spec, const std::string& class_text, const std::string& sub_text,
              std::size_t psi_index, const Context& ctx) {
  const TablePtr g = spec.instantiate(ctx.table_cap());
  const ClassChoice cls = choose_class(g, class_text, true, ctx);
  std::optional<ProjRep> rho;
  if (sub_text.empty()) {
    rho = twisted_regular(cls.alpha, ctx.table_cap());
  } else {
    rho = induce(cls.alpha, pick_psi(cls.alpha, parse_subgroup(sub_text, *g), psi_index));
  }
  const ProjRep lifted = lift(*rho, *cls.ext, *cls.chi);
  const Descended back = descend(lifted, *cls.ext);
  cmd.result["class"] = cls.c;
  cmd.result["source"] = rho->provenance;
  cmd.result["dim"] = lifted.dim();
  cmd.result["total_order"] = cls.ext->total->order();
  cmd.result["commutant_dimension"] = commutant_dimension(*rho);
  cmd.result["matrices"] = rep_matrices(lifted);

  const RepCheck rc = check_projrep(lifted, 10000, ctx.seed);
  cmd.check("ordinary_representation", rc.ok, rc.checked, rc.witness);
  bool same = back.rho.cocycle().same_values(rho->cocycle());
  std::string witness;
  for (Elem x = 0; x < g->order() && same; ++x)
    if (!(back.rho.monomial(x) == rho->monomial(x))) {
      same = false;
      witness = "descended matrix differs at " + g->label(x);
    }
  cmd.check("descend_roundtrip", same, g->order(), witness);
  const std::size_t c1 = commutant_dimension(*rho), c2 = commutant_dimension(lifted);
  cmd.check("commutant_preserved", c1 == c2, 1,
            c1 == c2 ? "" : std::to_string(c1) + " before lifting, " + std::to_string(c2) + " after");
}

void cmd_alpha_finite(Command& cmd, const std::string& mc_text, std::optional<u64> heis_n, bool shift, u64 lambda,
                      u64 mu, std::size_t samples, const Context& ctx) {
  const int chosen = (!mc_text.empty()) + (heis_n.has_value()) + (shift ? 1 : 0);
  if (chosen != 1) throw InvalidInput("alpha-finite needs exactly one of --metacyclic, --heisenberg, --shift-demo");
  if (!mc_text.empty()) {
    const auto v = parse_int_list(mc_text, "--metacyclic");
    if (v.size() != 3) throw InvalidInput("--metacyclic expects m,n,r");
    cmd.inputs["metacyclic"] = mc_text;
    const AlphaFiniteReport rep = mc_alpha_finite_report(v[0], v[1], v[2], lambda);
    cmd.result = report_json(rep);
    cmd.check("verdict_matches_witness", (rep.verdict == kVerdictFinite) == rep.index.has_value(), 1);
    if (rep.index) {
      const AbelianByFiniteWitness w = mc_abelian_by_finite_witness(v[0], v[2]);
      cmd.check("witness_abelian", w.commutator_trivial, 1);
      cmd.check("witness_normal", w.normal, 4);
    }
    return;
  }
  if (heis_n) {
    cmd.inputs["heisenberg"] = *heis_n;
    const AlphaFiniteReport rep = heisenberg_report(*heis_n, lambda, mu, samples, ctx.seed);
    cmd.result = report_json(rep);
    cmd.check("quotient_finite", rep.index.has_value(), samples);
    cmd.check("class_order_divides_n", *heis_n % static_cast<u64>(*rep.class_order) == 0, 1);
    return;
  }
  ShiftWindowData data = shift_demo_data();
  data.seed = ctx.seed;
  data.samples = samples;
  add_shift_report(cmd, data, shift_window_verify(data));
}

void cmd_shift(Command& cmd, i64 W, std::size_t samples, const std::string& root, const Context& ctx) {
  ShiftWindowData data = shift_demo_data();
  data.W = W;
  data.samples = samples;
  data.seed = ctx.seed;
  if (!root.empty()) {
    const auto v = parse_int_list(root, "--lambda-root");
    if (v.size() != 2 || v[0] <= 0) throw InvalidInput("--lambda-root expects N,e with N > 0");
    data.lambda = RootExp(to_u64(v[0]), to_i64(v[1]));
  }
  add_shift_report(cmd, data, shift_window_verify(data));
}

void cmd_selftest(Command& cmd, std::size_t max_order, const Context& ctx) {
  const auto corpus = corpus_groups(max_order);
  std::size_t groups = 0, nontrivial = 0;
  for (const auto& cg : corpus) {
    ++groups;
    const FinAbDesc integral = h2_integral(*cg.table, kDefaultBarCap);
    bool agree = true;
    std::string witness;
    try {
      const FinAbDesc brute = h2_bruteforce(*cg.table);
      if (!(brute == integral)) agree = false, witness = "bruteforce gives " + to_string(brute);
    } catch (const CheckFailed& e) {
      agree = false, witness = e.what();
    }
    if (cg.closed_form && !(*cg.closed_form == integral))
      agree = false, witness = "closed form gives " + to_string(*cg.closed_form);
    cmd.check("multiplier:" + cg.name, agree, 1, witness);

    const RepGroup r = build_repgroup(cg.table);
    if (!integral.is_trivial()) {
      ++nontrivial;
      const RepGroupReport rep = verify_repgroup(r, ctx.seed);
      std::string w;
      for (const auto& c : rep.checks)
        if (!c.pass) w = c.name + ": " + c.witness;
      cmd.check("repgroup:" + cg.name, rep.ok(), rep.checks.size(), w);
    }

    const CentralExtensionData ext = r.extension();
    bool accounting = true;
    std::string bad;
    for (std::size_t a = 0; a < r.a_order() && accounting; ++a) {
      const TableCocycle alpha = transgression(ext, r.character(r.a_coords(a)));
      const CocycleCheck cc = is_cocycle(alpha);
      const IrrCount ic = count_irr_alpha(alpha, ctx.seed);
      std::size_t sq = 0;
      for (std::size_t d : ic.dims) sq += d * d;
      if (!cc.ok || sq != cg.table->order()) {
        accounting = false;
        bad = "class " + std::to_string(a) + (cc.ok ? ": sum of squares " + std::to_string(sq) : ": " + cc.witness);
      }
    }
    cmd.check("twisted_algebra:" + cg.name, accounting, r.a_order(), bad);
  }

  const AlphaFiniteReport heis = heisenberg_report(4, 1, 1, 2000, ctx.seed);
  cmd.check("alpha_finite:heisenberg", heis.verdict == kVerdictFinite, 2000);
  const AlphaFiniteReport inf = mc_alpha_finite_report(0, 5, 2, 0);
  cmd.check("alpha_finite:mc:0,5,2", inf.verdict == kVerdictNotFinite, 1);
  const AlphaFiniteReport flag = mc_alpha_finite_report(5, 0, 2, 0);
  cmd.check("alpha_finite:mc:5,0,2", flag.paper_equivalence_flag == false, 1);
  ShiftWindowData data = shift_demo_data();
  data.samples = 2000;
  data.seed = ctx.seed;
  const ShiftWindowReport sw = shift_window_verify(data);
  cmd.check("shift_window", sw.ok(), 3);
  cmd.result["groups"] = groups;
  cmd.result["nontrivial_multiplier"] = nontrivial;
  cmd.result["max_order"] = max_order;
}

// ---------------------------------------------------------------------------
// Output

void render_table(std::ostream& os, const json& j, const std::string& prefix) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it)
      render_table(os, it.value(), prefix.empty() ? it.key() : prefix + "." + it.key());
    return;
  }
  if (j.is_array()) {
    bool scalars = true;
    for (const auto& v : j) scalars = scalars && !v.is_structured();
    if (scalars || j.empty()) {
      os << prefix << ": " << j.dump() << "\n";
      return;
    }
    for (std::size_t k = 0; k < j.size(); ++k) render_table(os, j[k], prefix + "[" + std::to_string(k) + "]");
    return;
  }
  os << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
}

std::string format_output(const json& doc, const std::string& format) {
  if (format == "json") return doc.dump() + "\n";
  std::ostringstream os;
  os << "subcommand: " << doc["subcommand"].get<std::string>() << "\n";
  if (doc.contains("seed")) os << "seed: " << doc["seed"].dump() << "\n";
  if (doc.contains("inputs")) render_table(os, doc["inputs"], "input");
  if (doc.contains("result")) render_table(os, doc["result"], "result");
  if (doc.contains("checks"))
    for (const auto& c : doc["checks"]) {
      os << (c["pass"].get<bool>() ? "PASS " : "FAIL ") << c["name"].get<std::string>();
      const std::string w = c["witness"].get<std::string>();
      if (!w.empty()) os << "  (" << w << ")";
      os << "\n";
    }
  if (doc.contains("error")) render_table(os, doc["error"], "error");
  if (doc.contains("wall_time_s")) os << "wall_time_s: " << doc["wall_time_s"].dump() << "\n";
  return os.str();
}

}  // namespace

CliOutput run_cli(const std::vector<std::string>& args) {
  CliOutput out;
  Context ctx;
  std::string format = "json";
  bool timing = false;
  std::size_t max_order_opt = 0;

  CLI::App app{"Schur multipliers, representation groups and projective representations", "schur"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--seed", ctx.seed, "seed for every randomized procedure")->capture_default_str();
  app.add_option("--max-order", max_order_opt,
                 "size cap: default 24 for bar complexes, 64 for multiplication tables");
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "table"}))->capture_default_str();
  app.add_flag("--timing", timing, "include wall time in the JSON output");

  std::string group, class_text, sub_text, mc_text, lambda_root;
  u64 lambda = 0, mu = 0;
  std::size_t psi_index = 0, samples = 10000, selftest_order = 16;
  bool verify = false, shift = false;
  u64 heis_n = 0;
  i64 window = 8;

  auto* multiplier = app.add_subcommand("multiplier", "Schur multiplier H2(G, Z)");
  multiplier->add_option("group", group, "group spec")->required();
  auto* h2 = app.add_subcommand("h2", "H2 of a finite group by the bar complex and by brute force");
  h2->add_option("group", group, "group spec")->required();
  auto* repgroup = app.add_subcommand("repgroup", "representation group (Schur cover)");
  repgroup->add_option("group", group, "group spec")->required();
  repgroup->add_flag("--verify", verify, "run the structural checks");
  repgroup->add_option("--samples", samples, "sample count for infinite groups")->capture_default_str();
  auto* cocycle = app.add_subcommand("cocycle", "construct and verify a 2-cocycle");
  cocycle->add_option("group", group, "group spec")->required();
  cocycle->add_option("--class", class_text, "class as a character c1,c2,... of H2 (finite groups)");
  cocycle->add_option("--lambda", lambda, "exponent of lambda")->capture_default_str();
  cocycle->add_option("--mu", mu, "exponent of mu (heis:[1];n)")->capture_default_str();
  cocycle->add_option("--samples", samples, "sampled triples for infinite groups")->capture_default_str();
  auto* irr = app.add_subcommand("irr", "count irreducible projective representations");
  irr->add_option("group", group, "group spec")->required();
  irr->add_option("--class", class_text, "class as a character c1,c2,... of H2 (default trivial)");
  auto* ind = app.add_subcommand("induce", "induce a one-dimensional projective representation");
  ind->add_option("group", group, "group spec")->required();
  ind->add_option("--subgroup", sub_text, "generators of H as element indices")->required();
  ind->add_option("--class", class_text, "class as a character c1,c2,... of H2 (default trivial)");
  ind->add_option("--psi", psi_index, "which one-dimensional representation of H")->capture_default_str();
  auto* lft = app.add_subcommand("lift", "lift a projective representation to the representation group");
  lft->add_option("group", group, "group spec")->required();
  lft->add_option("--class", class_text, "class as a character c1,c2,... of H2 (default trivial)");
  lft->add_option("--subgroup", sub_text, "lift Ind_H psi instead of the twisted regular representation");
  lft->add_option("--psi", psi_index, "which one-dimensional representation of H")->capture_default_str();
  auto* af = app.add_subcommand("alpha-finite", "alpha-finiteness reports");
  auto* mc_opt = af->add_option("--metacyclic", mc_text, "m,n,r with mn = 0");
  auto* heis_opt = af->add_option("--heisenberg", heis_n, "n for (Z/n x Z) x| Z");
  af->add_flag("--shift-demo", shift, "run the shift-window construction");
  af->add_option("--lambda", lambda, "exponent of lambda")->capture_default_str();
  af->add_option("--mu", mu, "exponent of mu")->capture_default_str();
  af->add_option("--samples", samples, "sample count")->capture_default_str();
  auto* sd = app.add_subcommand("shift-demo", "shift representation on a finite window");
  sd->add_option("--window", window, "indices |h| < W")->capture_default_str();
  sd->add_option("--samples", samples, "sampled pairs per index")->capture_default_str();
  sd->add_option("--lambda-root", lambda_root, "N,e: take lambda = zeta_N^e instead of a non-root of unity");
  auto* st = app.add_subcommand("selftest", "verify the whole corpus");
  st->add_option("--corpus-order", selftest_order, "largest group order in the corpus")->capture_default_str();

  std::ostringstream cout_buf, cerr_buf;
  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, cout_buf, cerr_buf);
    out.out = cout_buf.str();
    out.err = cerr_buf.str();
    out.exit_code = code == 0 ? kExitOk : kExitInvalidInput;
    return out;
  }
  if (max_order_opt > 0) ctx.max_order = max_order_opt;

  Command cmd;
  cmd.name = app.get_subcommands().front()->get_name();
  if (!group.empty()) cmd.inputs["group"] = group;
  if (!class_text.empty()) cmd.inputs["class"] = class_text;
  if (!sub_text.empty()) cmd.inputs["subgroup"] = sub_text;
  if (ctx.max_order) cmd.inputs["max_order"] = *ctx.max_order;

  const auto start = std::chrono::steady_clock::now();
  json doc;
  int code = kExitOk;
  try {
    std::optional<GroupSpec> spec;
    if (!group.empty()) {
      spec = parse_group_spec(group);
      cmd.inputs["group"] = spec->to_string();
    }
    if (cmd.name == "multiplier") {
      cmd_multiplier(cmd, *spec, ctx);
    } else if (cmd.name == "h2") {
      cmd_h2(cmd, *spec, ctx);
    } else if (cmd.name == "repgroup") {
      cmd.inputs["verify"] = verify;
      cmd_repgroup(cmd, *spec, verify, samples, ctx);
    } else if (cmd.name == "cocycle") {
      cmd.inputs["lambda"] = lambda;
      cmd.inputs["mu"] = mu;
      cmd.inputs["samples"] = samples;
      cmd_cocycle(cmd, *spec, class_text, lambda, mu, samples, ctx);
    } else if (cmd.name == "irr") {
      cmd_irr(cmd, *spec, class_text, ctx);
    } else if (cmd.name == "induce") {
      cmd.inputs["psi"] = psi_index;
      cmd_induce(cmd, *spec, class_text, sub_text, psi_index, ctx);
    } else if (cmd.name == "lift") {
      cmd.inputs["psi"] = psi_index;
      cmd_lift(cmd, *spec, class_text, sub_text, psi_index, ctx);
    } else if (cmd.name == "alpha-finite") {
      cmd.inputs["lambda"] = lambda;
      cmd.inputs["mu"] = mu;
      cmd.inputs["shift_demo"] = shift;
      cmd_alpha_finite(cmd, mc_opt->count() ? mc_text : "", heis_opt->count() ? std::optional<u64>(heis_n) : std::nullopt,
                       shift, lambda, mu, samples, ctx);
    } else if (cmd.name == "shift-demo") {
      cmd.inputs["window"] = window;
      cmd.inputs["samples"] = samples;
      if (!lambda_root.empty()) cmd.inputs["lambda_root"] = lambda_root;
      cmd_shift(cmd, window, samples, lambda_root, ctx);
    } else if (cmd.name == "selftest") {
      cmd_selftest(cmd, selftest_order, ctx);
    }
    code = cmd.all_pass() ? kExitOk : kExitCheckFailed;
    doc = json{{"subcommand", cmd.name}, {"inputs", cmd.inputs}, {"result", cmd.result}, {"checks", cmd.checks},
               {"seed", ctx.seed}};
    if (code != kExitOk) {
      for (const auto& c : cmd.checks)
        if (!c["pass"].get<bool>()) cerr_buf << "check failed: " << c["name"].get<std::string>() << " "
                                             << c["witness"].get<std::string>() << "\n";
    }
  } catch (const Error& e) {
    json err{{"message", e.what()}};
    if (dynamic_cast<const CapExceeded*>(&e)) {
      code = kExitCapExceeded;
      err["kind"] = "cap_exceeded";
    } else if (dynamic_cast<const InvalidInput*>(&e)) {
      code = kExitInvalidInput;
      err["kind"] = "invalid_input";
      if (const auto* se = dynamic_cast<const SpecError*>(&e)) {
        err["offset"] = se->offset();
        err["rule"] = se->rule();
      }
    } else {
      code = kExitCheckFailed;
      err["kind"] = "check_failed";
    }
    doc = json{{"subcommand", cmd.name}, {"inputs", cmd.inputs}, {"error", err}, {"seed", ctx.seed}};
    cerr_buf << "error: " << e.what() << "\n";
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (timing) doc["wall_time_s"] = secs;
  cerr_buf << "wall time " << secs << " s\n";
  out.exit_code = code;
  out.out = format_output(doc, format);
  out.err = cerr_buf.str();
  return out;
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const CliOutput r = run_cli(args);
  std::cout << r.out << std::flush;
  std::cerr << r.err << std::flush;
  return r.exit_code;
}

}  // namespace schur

#include "schur/corpus.hpp"

#include "schur/homology.hpp"

#include <algorithm>

namespace schur {

namespace {

// Invariant-factor chains n1 | n2 | ... with product at most `bound`.
void abelian_chains(std::vector<std::vector<BigInt>>& out, std::vector<BigInt>& cur, long long bound) {
  if (!cur.empty()) out.push_back(cur);
  long long prod = 1;
  for (const auto& v : cur) prod *= static_cast<long long>(v);
  long long last = cur.empty() ? 1 : static_cast<long long>(cur.back());
  for (long long k = last; prod * k <= bound; k += last) {
    if (k < 2) continue;
    cur.push_back(k);
    abelian_chains(out, cur, bound);
    cur.pop_back();
  }
}

void add(std::vector<CorpusGroup>& out, const std::string& spec_text, const std::string& family) {
  CorpusGroup g;
  g.name = spec_text;
  g.family = family;
  g.spec = parse_group_spec(spec_text);
  g.table = g.spec.instantiate(kDefaultTableCap);
  if (g.spec.kind == GroupSpec::Kind::FinAb) g.closed_form = multiplier_finab(g.spec.fab);
  out.push_back(std::move(g));
}

}  // namespace

std::vector<CorpusGroup> corpus_groups(std::size_t max_order) {
  std::vector<CorpusGroup> out;
  const long long bound = static_cast<long long>(max_order);

  add(out, "fab:[]", "abelian");
  std::vector<std::vector<BigInt>> chains;
  std::vector<BigInt> cur;
  abelian_chains(chains, cur, bound);
  // Chains are generated with the first factor as the outer loop; list them
  // by order instead.
  std::stable_sort(chains.begin(), chains.end(), [](const auto& a, const auto& b) {
    BigInt pa = 1, pb = 1;
    for (const auto& v : a) pa *= v;
    for (const auto& v : b) pb *= v;
    return pa < pb;
  });
  for (const auto& c : chains) {
    std::string s = "fab:[";
    for (std::size_t k = 0; k < c.size(); ++k) s += (k ? "," : "") + to_string(c[k]);
    add(out, s + "]", "abelian");
  }

  for (long long n = 3; 2 * n <= bound; ++n)
    add(out, "mc:" + std::to_string(n) + ",2," + std::to_string(n - 1), "dihedral");
  for (long long n = 2; 4 * n <= bound; ++n) add(out, "dic:" + std::to_string(n), "dicyclic");

  // Remaining non-abelian split metacyclic groups: r != 1, r != -1 when n = 2.
  for (long long m = 3; 2 * m <= bound; ++m)
    for (long long n = 2; m * n <= bound; ++n)
      for (long long r = 2; r < m; ++r) {
        if (n == 2 && r == m - 1) continue;
        if (gcd64(r, m) != 1) continue;
        if (pow_mod(BigInt(r), BigInt(n), BigInt(m)) != 1) continue;
        add(out, "mc:" + std::to_string(m) + "," + std::to_string(n) + "," + std::to_string(r), "metacyclic");
      }
  return out;
}

}  // namespace schur
